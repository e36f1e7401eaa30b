#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <ospm/cli.hpp>

#include "support.hpp"

using namespace ospm;
using ospm::test::poly;

namespace
{

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, EpolyExamples)
{
    const Outcome a = run({"epoly", "--family", "A2", "--n", "-1", "--spec", "t0", "--format", "text"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, "x^-1 + q + x\n");
    const Outcome z = run({"epoly", "--family", "A2", "--n", "0", "--spec", "t0"});
    EXPECT_EQ(z.code, 0);
    EXPECT_EQ(z.out, "1\n");
}

TEST(Cli, EpolyJsonRoundTrip)
{
    const Outcome r = run({"epoly", "--family", "A2dagger", "--n", "3", "--spec", "tinf", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("family"), "A2dagger");
    EXPECT_EQ(j.at("n"), 3);
    EXPECT_EQ(j.at("spec"), "tinf");
    EXPECT_EQ(qx_from_json(j.at("terms")), specialize(Family::A2dagger, 3, Specialization::tinf));
}

TEST(Cli, FullSumPrints)
{
    const Outcome r = run({"epoly", "--family", "A2", "--n", "-1", "--spec", "full"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("x^-1"), std::string::npos);
    EXPECT_EQ(run({"epoly", "--n", "1", "--spec", "full", "--no-normalize", "--format", "json"}).code, 0);
}

TEST(Cli, OutputIsDeterministic)
{
    const std::vector<std::vector<std::string>> cmds{
        {"epoly", "--family", "A2", "--n", "-3", "--spec", "tinf"},
        {"weylchar", "--module", "Wsigma", "--n", "3", "--format", "json"},
        {"weylchar", "--module", "grW", "--n", "2"},
        {"basis", "--kind", "twisted_pos", "--n", "3", "--format", "json"},
        {"limitchar", "--kind", "untwisted", "--qmax", "5", "--xmax", "3"},
        {"fusion", "--n", "2", "--points", "1/2,3", "--twisted"},
        {"walks", "--n", "-2", "--qb", "t0"},
        {"ctable", "--family", "A2dagger", "--r", "2", "--max-n", "3"},
    };
    for (const auto &c : cmds) {
        const Outcome a = run(c), b = run(c);
        EXPECT_EQ(a.code, 0) << c[0] << ": " << a.err;
        EXPECT_EQ(a.out, b.out) << c[0];
        EXPECT_FALSE(a.out.empty());
    }
}

TEST(Cli, WeylcharAndBasis)
{
    const Outcome w = run({"weylchar", "--module", "W", "--n", "-1"});
    EXPECT_EQ(w.out, "x^-1 + 1 + x\n");
    const Outcome b = run({"basis", "--kind", "untwisted_neg", "--n", "2", "--format", "json"});
    EXPECT_EQ(nlohmann::json::parse(b.out).at("count"), 9);
    const Outcome f = run({"fusion", "--n", "2", "--format", "json"});
    const auto j = nlohmann::json::parse(f.out);
    EXPECT_EQ(j.at("dimension"), 9);
    EXPECT_EQ(qx_from_json(j.at("terms")), ch_W(-2));
}

TEST(Cli, WalkDump)
{
    const Outcome r = run({"walks", "--n", "-1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out).size(), 4u);
    const Outcome q = run({"walks", "--n", "-1", "--family", "A2", "--qb", "tinf"});
    EXPECT_EQ(nlohmann::json::parse(q.out).size(), 3u);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"nonsense"}).code, 1);
    EXPECT_EQ(run({"epoly"}).code, 1);
    EXPECT_EQ(run({"epoly", "--n", "-1", "--family", "B2"}).code, 1);
    EXPECT_EQ(run({"verify", "--max-n", "9"}).code, 1);
    EXPECT_EQ(run({"basis", "--kind", "nope", "--n", "2"}).code, 1);
    EXPECT_EQ(run({"fusion", "--n", "2", "--points", "1,1"}).code, 1);
    EXPECT_EQ(run({"epoly", "--n", "-9"}).code, 1);
    const Outcome u = run({"epoly"});
    EXPECT_NE(u.err.find("epoly"), std::string::npos);
}

TEST(Cli, VerifyWithFrozenTables)
{
    const Outcome r = run({"verify", "--suite", "all", "--max-n", "2", "--format", "json"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("summary").at("MISMATCH"), 0);
    EXPECT_GT(j.at("summary").at("KNOWN_ERRATUM").get<int>(), 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    for (const auto &c : j.at("results")) {
        EXPECT_TRUE(c.contains("identity") && c.contains("n") && c.contains("status") && c.contains("transform") &&
                    c.contains("diff"));
    }
}

TEST(Cli, VerifyWithoutErrataFailsWithTwo)
{
    const auto path = std::filesystem::temp_directory_path() / "ospm_empty_errata.json";
    {
        std::ofstream f(path);
        f << "{}";
    }
    const Outcome r = run({"verify", "--suite", "section4", "--max-n", "1", "--errata", path.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("pbw_tinf.twisted n=1 MISMATCH"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, VerifyCleanSuiteNeedsNoErrata)
{
    EXPECT_EQ(run({"verify", "--suite", "fusion", "--max-n", "2"}).code, 0);
}
