#ifndef OSPM_CLI_HPP
#define OSPM_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <ospm/cform.hpp>
#include <ospm/frozen_tables.hpp>
#include <ospm/fusion.hpp>
#include <ospm/ramyip.hpp>
#include <ospm/render.hpp>
#include <ospm/verify.hpp>
#include <ospm/walks.hpp>
#include <ospm/weylchar.hpp>

namespace ospm::cli
{

enum ExitCode { ok = 0, usage = 1, unknown_mismatch = 2 };

inline ErrataTable embedded_errata() { return errata_from_json(nlohmann::json::parse(frozen_errata_json)); }
inline ConventionsTable embedded_conventions()
{
    return conventions_from_json(nlohmann::json::parse(frozen_conventions_json));
}

namespace detail
{

inline Family parse_family(const std::string &s) { return s == "A2" ? Family::A2 : Family::A2dagger; }

inline std::vector<Rational> parse_points(const std::string &csv)
{
    std::vector<Rational> pts;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Rational r;
        if (r.set_str(item, 10) != 0) throw CLI::ValidationError("--points", "not a rational number: " + item);
        r.canonicalize();
        pts.push_back(r);
    }
    return pts;
}

inline nlohmann::json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return nlohmann::json::parse(in);
}

inline void write_json_file(const std::string &path, const nlohmann::json &j)
{
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << j.dump(2) << "\n";
}

inline nlohmann::json walk_json(const AlcoveWalk &w, int n)
{
    const WalkStats st = traverse(w);
    return {{"mask", w.mask_string()}, {"wt", st.final.wt()}, {"d", st.final.d()},   {"J0+", st.J0_pos},
            {"J0-", st.J0_neg},        {"J+", st.J_pos},        {"J-", st.J_neg},      {"h", to_hword(w, n > 0 ? 1 : -1).str()},
            {"leg", st.leg},           {"legprime", st.legprime}, {"legprime_shifted", st.legprime_shifted}};
}

} // namespace detail

/// Entry point shared by the executable and the tests. args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact specializations of rank-one nonsymmetric Macdonald polynomials and Weyl module characters",
                 "ospm"};
    app.require_subcommand(1);
    const std::vector<std::string> families{"A2", "A2dagger"};
    const std::vector<std::string> formats{"text", "json"};

    std::string family = "A2", spec = "t0", format = "text", module = "W", kind, suite = "all", points;
    std::string errata_path, conventions_path, out_dir = "data";
    int n = 0, r = 1, max_n = 3, qmax = 4, xmax = 4, errata_max_n = 6;
    int approx_n = -1;
    bool no_normalize = false, twisted = false;

    auto *epoly = app.add_subcommand("epoly", "E-polynomial of a family: full Ram-Yip sum or a specialization");
    epoly->add_option("--family", family)->check(CLI::IsMember(families));
    epoly->add_option("--n", n)->required();
    epoly->add_option("--spec", spec)->check(CLI::IsMember({"full", "t0", "tinf"}));
    epoly->add_option("--format", format)->check(CLI::IsMember(formats));
    epoly->add_flag("--no-normalize", no_normalize, "keep the literal v-prefactor (full sums only)");

    auto *ctable = app.add_subcommand("ctable", "coefficient table c_r or c_r-dagger as JSON");
    ctable->add_option("--family", family)->check(CLI::IsMember(families));
    ctable->add_option("--r", r)->check(CLI::IsMember({1, 2}));
    ctable->add_option("--max-n", max_n)->check(CLI::Range(0, 40));

    auto *weyl = app.add_subcommand("weylchar", "graded character of a Weyl module");
    weyl->add_option("--module", module)->check(CLI::IsMember({"D", "W", "Wsigma", "grW", "grWsigma"}));
    weyl->add_option("--n", n)->required();
    weyl->add_option("--format", format)->check(CLI::IsMember(formats));

    auto *basis = app.add_subcommand("basis", "monomial basis of a Weyl module");
    basis->add_option("--kind", kind)->required();
    basis->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    basis->add_option("--format", format)->check(CLI::IsMember(formats));

    auto *limit = app.add_subcommand("limitchar", "truncated limit character");
    limit->add_option("--kind", kind)->required()->check(
        CLI::IsMember({"untwisted", "twisted", "classical_even", "classical_odd"}));
    limit->add_option("--qmax", qmax)->check(CLI::Range(0, 200));
    limit->add_option("--xmax", xmax)->check(CLI::Range(0, 200));
    limit->add_option("--approximant", approx_n, "print the n-th finite approximant instead")->check(CLI::Range(0, 30));
    limit->add_option("--format", format)->check(CLI::IsMember(formats));

    auto *fus = app.add_subcommand("fusion", "graded character of a fusion product of 3-dimensional modules");
    fus->add_option("--n", n)->required()->check(CLI::Range(0, 4));
    fus->add_option("--points", points, "comma-separated rationals, default 1,2,...,n");
    fus->add_flag("--twisted", twisted);
    fus->add_option("--format", format)->check(CLI::IsMember(formats));

    auto *walks = app.add_subcommand("walks", "alcove walks of the target with statistics, as JSON");
    walks->add_option("--n", n)->required();
    walks->add_option("--family", family)->check(CLI::IsMember(families));
    auto *walk_spec = walks->add_option("--qb", spec, "keep only walks surviving this specialization")
                          ->check(CLI::IsMember({"t0", "tinf"}));

    auto *verify = app.add_subcommand("verify", "cross-check every route and classify discrepancies");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"section4", "characters", "routes", "identities", "fusion", "all"}));
    verify->add_option("--max-n", max_n)->check(CLI::Range(1, 6));
    verify->add_option("--format", format)->check(CLI::IsMember(formats));
    verify->add_option("--errata", errata_path, "errata table (default: the built-in frozen table)");
    verify->add_option("--conventions", conventions_path, "conventions table (default: built-in)");

    auto *freeze = app.add_subcommand("freeze", "regenerate the conventions and errata tables");
    freeze->add_option("--out-dir", out_dir);
    freeze->add_option("--max-n", max_n, "range for the conventions table")->check(CLI::Range(1, 6));
    freeze->add_option("--errata-max-n", errata_max_n, "range for the errata table")->check(CLI::Range(1, 6));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        err << app.help();
        return usage;
    }

    const bool json = format == "json";
    try {
        if (epoly->parsed()) {
            const Family f = detail::parse_family(family);
            if (spec == "full") {
                const RationalXPolynomial p = ramyip_sum(f, n, !no_normalize);
                if (json) out << nlohmann::json{{"family", family}, {"n", n}, {"spec", spec}, {"terms", to_json(p)}}.dump() << "\n";
                else out << to_string(p) << "\n";
                return ok;
            }
            const Specialization s = spec == "t0" ? Specialization::t0 : Specialization::tinf;
            const QXPolynomial p = specialize(f, n, s);
            if (json) out << nlohmann::json{{"family", family}, {"n", n}, {"spec", spec}, {"terms", to_json(p)}}.dump() << "\n";
            else out << to_string(p) << "\n";
            return ok;
        }
        if (ctable->parsed()) {
            const bool dagger = detail::parse_family(family) == Family::A2dagger;
            nlohmann::json entries = nlohmann::json::array();
            for (int total = 0; total <= max_n; ++total) {
                for (const auto &[a, b, c] : triples_with_sum(total)) {
                    const CKey key{r, a, b, c};
                    entries.push_back({{"k", {a, b, c}}, {"value", to_json<1>(dagger ? cdag_rec(key) : c_rec(key), {"q"})}});
                }
            }
            out << nlohmann::json{{"family", family}, {"r", r}, {"max_n", max_n}, {"entries", entries}}.dump() << "\n";
            return ok;
        }
        if (weyl->parsed()) {
            if (module == "grW" || module == "grWsigma") {
                if (n < 0) throw CLI::ValidationError("--n", "PBW characters need n >= 0");
                const BiXPolynomial p = ch_grW_pbw(n, module == "grWsigma");
                if (json) out << nlohmann::json{{"module", module}, {"n", n}, {"terms", to_json<2>(p, {"q", "t"})}}.dump() << "\n";
                else out << to_string<2>(p, {"q", "t"}) << "\n";
                return ok;
            }
            if (module == "D" && n < 0) throw CLI::ValidationError("--n", "D needs n >= 0");
            const QXPolynomial p = module == "D" ? ch_D(n) : module == "W" ? ch_W(n) : ch_W_sigma(n);
            if (json) out << nlohmann::json{{"module", module}, {"n", n}, {"terms", to_json(p)}}.dump() << "\n";
            else out << to_string(p) << "\n";
            return ok;
        }
        if (basis->parsed()) {
            const auto k = parse_basis_kind(kind);
            if (!k) throw CLI::ValidationError("--kind", "unknown basis kind " + kind);
            const auto monomials = enumerate_basis(*k, n);
            if (json) {
                nlohmann::json list = nlohmann::json::array();
                for (const auto &m : monomials) {
                    list.push_back({{"kind", to_string(m.kind)}, {"even", m.e_degrees}, {"odd", m.g_degrees},
                                    {"weight", m.weight}, {"t_degree", m.t_degree}, {"pbw_degree", m.pbw_degree}});
                }
                out << nlohmann::json{{"kind", kind}, {"n", n}, {"count", monomials.size()}, {"basis", list}}.dump() << "\n";
            } else {
                for (const auto &m : monomials) {
                    out << m.str() << "\tweight " << m.weight << "\tdegree " << m.t_degree << "\tpbw " << m.pbw_degree
                        << "\n";
                }
                out << "count " << monomials.size() << "\n";
            }
            return ok;
        }
        if (limit->parsed()) {
            const LimitKind k = *parse_limit_kind(kind);
            const QXPolynomial p = approx_n >= 0 ? approximant(k, approx_n, qmax, xmax) : limit_char(k, qmax, xmax);
            if (json) {
                out << nlohmann::json{{"kind", kind}, {"qmax", qmax}, {"xmax", xmax}, {"terms", to_json(p)}}.dump() << "\n";
            } else {
                out << to_string(p) << "\n";
            }
            return ok;
        }
        if (fus->parsed()) {
            std::vector<Rational> pts;
            if (points.empty()) {
                for (int i = 1; i <= n; ++i) pts.push_back(i);
            } else {
                pts = detail::parse_points(points);
            }
            if (static_cast<int>(pts.size()) != n) throw CLI::ValidationError("--points", "expected exactly n points");
            const FusionResult res = fusion_character(pts, twisted);
            if (json) {
                out << nlohmann::json{{"n", n}, {"twisted", twisted}, {"dimension", res.dimension},
                                      {"layers", res.layer_dimensions}, {"terms", to_json(res.character)}}
                           .dump()
                    << "\n";
            } else {
                out << to_string(res.character) << "\n" << "dimension " << res.dimension << "\n";
            }
            return ok;
        }
        if (walks->parsed()) {
            if (std::abs(n) > default_walk_bound) throw BoundExceeded("walk dumps are limited to |n| <= 6");
            nlohmann::json list = nlohmann::json::array();
            for (const auto &w : enumerate_walks(n)) {
                if (*walk_spec) {
                    const Specialization s = spec == "t0" ? Specialization::t0 : Specialization::tinf;
                    if (!qb_survives(traverse(w), detail::parse_family(family), s)) continue;
                }
                list.push_back(detail::walk_json(w, n));
            }
            out << list.dump() << "\n";
            return ok;
        }
        if (verify->parsed()) {
            const ErrataTable errata =
                errata_path.empty() ? embedded_errata() : errata_from_json(detail::read_json_file(errata_path));
            const ConventionsTable conventions = conventions_path.empty()
                                                     ? embedded_conventions()
                                                     : conventions_from_json(detail::read_json_file(conventions_path));
            VerifyOptions opt{*parse_suite(suite), max_n, &conventions, &errata};
            const auto results = run_verification(opt);
            std::map<Status, int> counts;
            for (const auto &c : results) counts[c.status] += 1;
            const bool unknown = counts[Status::MISMATCH] > 0;
            if (json) {
                nlohmann::json list = nlohmann::json::array();
                for (const auto &c : results) list.push_back(to_json(c));
                nlohmann::json summary = nlohmann::json::object();
                for (auto st : {Status::EQUAL, Status::EQUAL_UP_TO, Status::KNOWN_ERRATUM, Status::MISMATCH}) {
                    summary[to_string(st)] = counts[st];
                }
                out << nlohmann::json{{"suite", suite}, {"max_n", max_n}, {"results", list}, {"summary", summary}}.dump(2)
                    << "\n";
            } else {
                for (const auto &c : results) {
                    out << c.identity << " n=" << c.n << " " << to_string(c.status);
                    if (c.status == Status::EQUAL_UP_TO) {
                        out << " (" << (c.transform.mirror ? "x->1/x" : "") << (c.transform.mirror && c.transform.q_shift ? ", " : "");
                        if (c.transform.q_shift) out << "q^" << c.transform.q_shift;
                        out << ")";
                    }
                    if (c.status == Status::MISMATCH || c.status == Status::KNOWN_ERRATUM) out << " diff: " << to_string(c.diff);
                    out << "\n";
                }
            }
            if (counts[Status::KNOWN_ERRATUM] > 0) {
                std::ostream &w = json ? err : out;
                w << "warning: " << counts[Status::KNOWN_ERRATUM] << " discrepancies match the errata table:\n";
                for (const auto &c : results) {
                    if (c.status != Status::KNOWN_ERRATUM) continue;
                    w << "  " << c.identity << " n=" << c.n << ": " << to_string(c.diff) << "\n";
                }
            }
            if (unknown) {
                err << "error: " << counts[Status::MISMATCH] << " mismatches not covered by the errata table\n";
                return unknown_mismatch;
            }
            return ok;
        }
        if (freeze->parsed()) {
            const ConventionsTable conventions = derive_conventions(max_n);
            VerifyOptions opt{Suite::all, errata_max_n, &conventions, nullptr};
            ErrataTable errata;
            errata.notes = frozen_errata_notes();
            for (const auto &c : run_verification(opt)) {
                if (c.status == Status::MISMATCH) errata.entries.push_back({c.identity, c.n, c.diff, erratum_note(c.identity)});
            }
            detail::write_json_file(out_dir + "/conventions.json", to_json(conventions));
            detail::write_json_file(out_dir + "/errata.json", to_json(errata));
            out << "wrote " << conventions.size() << " conventions and " << errata.entries.size() << " errata to "
                << out_dir << "\n";
            return ok;
        }
    } catch (const CLI::ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

inline int run(int argc, const char *const *argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
    return run(args, out, err);
}

} // namespace ospm::cli

#endif
