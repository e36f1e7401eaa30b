#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace ospm;
using ospm::test::poly;

namespace
{

constexpr auto t0 = Specialization::t0;
constexpr auto tinf = Specialization::tinf;

Integer pow3(int n)
{
    Integer r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

// Values computed independently by a symbolic prototype.
const QXPolynomial walks_A2_m3_t0 = poly({{-3, 0, 1}, {-2, 1, 1}, {-2, 3, 1}, {-2, 5, 1}, {-1, 0, 1}, {-1, 2, 1},
                                          {-1, 4, 2},  {-1, 6, 1}, {-1, 8, 1}, {0, 1, 1},  {0, 3, 2},  {0, 5, 2},
                                          {0, 7, 1},   {0, 9, 1},  {1, 0, 1},  {1, 2, 1},  {1, 4, 2},  {1, 6, 1},
                                          {1, 8, 1},   {2, 1, 1},  {2, 3, 1},  {2, 5, 1},  {3, 0, 1}});
const QXPolynomial walks_A2_p3_t0 =
    poly({{-2, 5, 1}, {-1, 4, 1}, {-1, 6, 1}, {-1, 8, 1}, {0, 3, 1}, {0, 5, 2}, {0, 7, 1}, {0, 9, 1},
          {1, 2, 1},  {1, 4, 2},  {1, 6, 1},  {1, 8, 1},  {2, 1, 1}, {2, 3, 1}, {2, 5, 1}, {3, 0, 1}});
const QXPolynomial walks_A2d_p3_t0 =
    poly({{-1, 4, 1}, {0, 4, 1}, {0, 6, 1}, {1, 2, 1}, {1, 4, 1}, {1, 6, 1}, {2, 2, 1}, {2, 4, 1}, {3, 0, 1}});
const QXPolynomial walks_A2_m2_tinf =
    poly({{-2, 0, 1}, {-1, 1, 1}, {-1, 3, 1}, {0, 2, 1}, {0, 4, 2}, {1, 3, 1}, {1, 5, 1}, {2, 4, 1}});
const QXPolynomial walks_A2d_m2_tinf =
    poly({{-2, 0, 1}, {-1, 2, 1}, {-1, 4, 1}, {0, 2, 1}, {0, 4, 1}, {0, 6, 1}, {1, 4, 1}, {1, 6, 1}, {2, 4, 1}});
const QXPolynomial walks_A2d_p2_tinf = poly({{-1, 0, 1}, {0, 0, 1}, {0, 2, 1}, {1, 0, 1}, {1, 2, 1}, {2, 0, 1}});
const QXPolynomial rf_A2_m2_t0 =
    poly({{-2, 0, 1}, {-1, 1, 1}, {-1, 3, 1}, {0, 0, 1}, {0, 2, 1}, {0, 4, 1}, {1, 1, 1}, {1, 3, 1}, {2, 0, 1}});
const QXPolynomial rf_A2d_m1_tinf = poly({{-1, 0, 1}, {0, 2, 1}, {1, 2, 1}});

} // namespace

TEST(RamYip, TermSumMatchesDynamicProgramme)
{
    for (Family f : {Family::A2, Family::A2dagger}) {
        for (int n : {-3, -2, -1, 1, 2, 3}) {
            RationalXPolynomial direct;
            for (const auto &t : ramyip_terms(f, n)) direct.add_term(t.x_exponent, t.value());
            EXPECT_EQ(direct, ramyip_sum(f, n, false)) << to_string(f) << " " << n;
        }
    }
}

TEST(RamYip, NormalizationShiftIsOneStep)
{
    for (Family f : {Family::A2, Family::A2dagger}) {
        for (int n = 1; n <= 4; ++n) {
            for (Specialization s : {t0, tinf}) {
                EXPECT_EQ(normalization_shift(f, -n, s), 1);
                EXPECT_EQ(normalization_shift(f, n, s), -1);
            }
        }
    }
}

TEST(RamYip, NormalizedSumIsShiftedLiteralSum)
{
    for (Family f : {Family::A2, Family::A2dagger}) {
        for (int n : {-2, -1, 1, 2}) {
            const int k = normalization_shift(f, n);
            const auto lit = ramyip_sum(f, n, false).map_coefficients([k](const RationalFunction &r) { return r.v_shifted(k); });
            EXPECT_EQ(lit, ramyip_sum(f, n, true));
        }
    }
}

TEST(RamYip, SmallSumExamples)
{
    const auto terms = ramyip_terms(Family::A2, -1);
    ASSERT_EQ(terms.size(), 4u);
    std::vector<int> xs;
    for (const auto &t : terms) xs.push_back(t.x_exponent);
    std::sort(xs.begin(), xs.end());
    EXPECT_EQ(xs, (std::vector<int>{-1, 0, 0, 1}));
    EXPECT_EQ(ramyip_sum(Family::A2, -1, true).coefficient(-1), RationalFunction(1));

    const auto pos = ramyip_terms(Family::A2, 1);
    ASSERT_EQ(pos.size(), 2u);
    std::vector<int> px{pos[0].x_exponent, pos[1].x_exponent};
    std::sort(px.begin(), px.end());
    EXPECT_EQ(px, (std::vector<int>{0, 1}));

    // dagger splits the s0 folds by sign
    const auto dag = ramyip_terms(Family::A2dagger, -1);
    for (const auto &t : dag) {
        if (t.stats.J0_pos.size() == 1 && t.stats.J.size() == 1) {
            const BiPolynomial one(1);
            const BiPolynomial xi = qv_monomial(1, 2);
            EXPECT_EQ(t.factors.at(0), RationalFunction(one, one - xi * xi));
        }
    }
    EXPECT_TRUE(ramyip_terms(Family::A2, 0).empty());
    EXPECT_EQ(ramyip_sum(Family::A2, 0, true), RationalXPolynomial(1));
}

TEST(RamYip, CommonDenominator)
{
    const BiPolynomial one(1);
    EXPECT_EQ(common_denominator(0), one);
    EXPECT_EQ(common_denominator(2), (one - qv_monomial(2, 4)) * (one - qv_monomial(4, 4)));
}

TEST(Specialize, Examples)
{
    EXPECT_EQ(specialize(Family::A2, -1, t0), poly({{-1, 0, 1}, {0, 1, 1}, {1, 0, 1}}));
    EXPECT_EQ(specialize(Family::A2dagger, -1, t0), poly({{-1, 0, 1}, {0, 0, 1}, {1, 0, 1}}));
    EXPECT_EQ(specialize(Family::A2, 1, t0), poly({{1, 0, 1}, {0, 1, 1}}));
    EXPECT_EQ(specialize(Family::A2, 0, t0), QXPolynomial(1));
}

TEST(Specialize, FrozenValues)
{
    EXPECT_EQ(specialize(Family::A2, -3, t0), walks_A2_m3_t0);
    EXPECT_EQ(specialize(Family::A2, 3, t0), walks_A2_p3_t0);
    EXPECT_EQ(specialize(Family::A2dagger, 3, t0), walks_A2d_p3_t0);
    EXPECT_EQ(specialize(Family::A2, -2, tinf), walks_A2_m2_tinf);
    EXPECT_EQ(specialize(Family::A2dagger, -2, tinf), walks_A2d_m2_tinf);
    EXPECT_EQ(specialize(Family::A2dagger, 2, tinf), walks_A2d_p2_tinf);
}

TEST(Specialize, AnalyticRouteFrozenValues)
{
    EXPECT_EQ(analytic_specialization(Family::A2, -2, t0), rf_A2_m2_t0);
    EXPECT_EQ(analytic_specialization(Family::A2dagger, 2, tinf), walks_A2d_p2_tinf);
    EXPECT_EQ(analytic_specialization(Family::A2dagger, -1, tinf), rf_A2d_m1_tinf);
}

TEST(Specialize, RoutesAgree)
{
    for (Family f : {Family::A2, Family::A2dagger}) {
        for (Specialization s : {t0, tinf}) {
            for (int n = -4; n <= 4; ++n) {
                if (n == 0) continue;
                EXPECT_EQ(combinatorial_specialization(f, n, s), analytic_specialization(f, n, s))
                    << to_string(f) << " " << to_string(s) << " " << n;
            }
        }
    }
}

TEST(Specialize, LiteralLegVariantDisagreesAtInfinity)
{
    int differing = 0;
    for (Family f : {Family::A2, Family::A2dagger}) {
        for (int n = -3; n <= 3; ++n) {
            if (n == 0) continue;
            differing += combinatorial_specialization(f, n, tinf, LegVariant::literal) !=
                         analytic_specialization(f, n, tinf);
        }
    }
    EXPECT_GT(differing, 0);
}

TEST(Specialize, MassAndMirrorForNegativeTargets)
{
    for (Family f : {Family::A2, Family::A2dagger}) {
        for (int n = 1; n <= 4; ++n) {
            const QXPolynomial p = specialize(f, -n, t0);
            EXPECT_EQ(total_mass(p), pow3(n));
            EXPECT_EQ(p.mirrored(), p);
            EXPECT_EQ(total_mass(specialize(f, -n, tinf)), pow3(n));
        }
    }
}

TEST(Specialize, BoundIsEnforced)
{
    EXPECT_THROW(specialize(Family::A2, -7, t0), BoundExceeded);
    EXPECT_THROW(ramyip_sum(Family::A2, 7, true), BoundExceeded);
    EXPECT_THROW(ramyip_sum(Family::A2, -3, true, 2), BoundExceeded);
    EXPECT_EQ(total_mass(combinatorial_specialization(Family::A2, -7, t0, LegVariant::shifted, 7)), pow3(7));
}

TEST(Specialize, RouteMismatchCarriesBothSides)
{
    const RouteMismatch e(poly({{0, 1, 1}}), poly({{0, 2, 1}}));
    EXPECT_EQ(e.combinatorial(), poly({{0, 1, 1}}));
    EXPECT_EQ(e.analytic(), poly({{0, 2, 1}}));
}
