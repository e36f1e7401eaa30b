#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "support.hpp"

using namespace ospm;
using ospm::test::poly;

namespace
{

// Gaussian coefficients count words by inversions; base b scales every inversion by b.
QPolynomial inversion_oracle(std::vector<int> word, int base)
{
    std::sort(word.begin(), word.end());
    QPolynomial out;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < word.size(); ++i) {
            for (std::size_t j = i + 1; j < word.size(); ++j) inv += word[i] > word[j];
        }
        out += q_power(base * inv);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<int> word_of(std::initializer_list<int> counts)
{
    std::vector<int> w;
    int letter = 0;
    for (int c : counts) {
        w.insert(w.end(), c, letter);
        ++letter;
    }
    return w;
}

// prod over parts in `parts` of (1 + q^p x^s): brute force over subsets, truncated.
QXPolynomial subset_oracle(const std::vector<int> &parts, int sign, int q_bound)
{
    QXPolynomial out;
    const std::size_t m = parts.size();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        int qe = 0, xe = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1u) {
                qe += parts[i];
                xe += sign;
            }
        }
        if (qe <= q_bound) out.add_term(xe, q_power(qe));
    }
    return out;
}

QXPolynomial truncate(const QXPolynomial &p, int q_bound, int x_bound)
{
    return TruncatedSeries::truncate(p, q_bound).x_truncated(x_bound);
}

std::vector<long> partition_counts(int m)
{
    std::vector<long> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= m; ++part) {
        for (int s = part; s <= m; ++s) p[s] += p[s - part];
    }
    return p;
}

} // namespace

TEST(QBinomial, Examples)
{
    EXPECT_EQ(q_binomial(2, 1), q_from_coefficients({1, 1}));
    EXPECT_EQ(q_binomial(4, 2), q_from_coefficients({1, 1, 2, 1, 1}));
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(q_binomial(n, 0), QPolynomial(1));
    EXPECT_EQ(q_binomial(3, 4), QPolynomial{});
    EXPECT_EQ(q_binomial(3, -1), QPolynomial{});
}

TEST(QBinomial, MatchesInversionCount)
{
    for (int n = 0; n <= 9; ++n) {
        for (int m = 0; m <= n; ++m) {
            EXPECT_EQ(q_binomial(n, m), inversion_oracle(word_of({n - m, m}), 1)) << n << " " << m;
            EXPECT_EQ(q_binomial(n, m, 2), inversion_oracle(word_of({n - m, m}), 2)) << n << " " << m;
        }
    }
}

TEST(QBinomial, Symmetry)
{
    for (int n = 0; n <= 12; ++n) {
        for (int m = 0; m <= n; ++m) EXPECT_EQ(q_binomial(n, m), q_binomial(n, n - m));
    }
}

TEST(QBinomial, PascalRule)
{
    for (int n = 1; n <= 12; ++n) {
        for (int m = 1; m <= n; ++m) {
            EXPECT_EQ(q_binomial(n, m), q_binomial(n - 1, m) + q_binomial(n - 1, m - 1).shifted(var_q, n - m));
        }
    }
}

TEST(QMultinomial, Examples)
{
    EXPECT_EQ(q_multinomial(1, 0, 1, 2), QPolynomial(1) + q_power(2));
    EXPECT_EQ(q_multinomial(0, 0, 0, 2), QPolynomial(1));
    EXPECT_EQ(q_multinomial(-1, 1, 1, 1), QPolynomial{});
    EXPECT_EQ(q_multinomial(-1, 1, 1, 2), QPolynomial{});
}

TEST(QMultinomial, MatchesInversionCount)
{
    for (int total = 0; total <= 7; ++total) {
        for (const auto &[a, b, c] : triples_with_sum(total)) {
            EXPECT_EQ(q_multinomial(a, b, c, 2), inversion_oracle(word_of({a, b, c}), 2));
        }
    }
}

TEST(QMultinomial, PermutationInvariant)
{
    for (int total = 0; total <= 10; ++total) {
        for (const auto &[a, b, c] : triples_with_sum(total)) {
            const QPolynomial ref = q_multinomial(a, b, c, 2);
            EXPECT_EQ(ref, q_multinomial(a, c, b, 2));
            EXPECT_EQ(ref, q_multinomial(b, a, c, 2));
            EXPECT_EQ(ref, q_multinomial(b, c, a, 2));
            EXPECT_EQ(ref, q_multinomial(c, a, b, 2));
            EXPECT_EQ(ref, q_multinomial(c, b, a, 2));
            EXPECT_EQ(q_multinomial(a, b, c, 1), q_multinomial(c, b, a, 1));
        }
    }
}

TEST(EulerProduct, Examples)
{
    EXPECT_EQ(euler_product_truncated(FactorKind::single_plus, 2, 2),
              poly({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {1, 2, 1}, {2, 1, 1}, {2, 2, 1}}));
    EXPECT_EQ(euler_product_truncated(FactorKind::untwisted_pair, 0, 1), poly({{-1, 0, 1}, {0, 0, 2}, {1, 0, 1}}));
    EXPECT_EQ(euler_product_truncated(FactorKind::twisted_pair, 0, 5), QXPolynomial(1));
    EXPECT_THROW(euler_product_truncated(FactorKind::single_plus, -1, 2), std::invalid_argument);
}

TEST(EulerProduct, MatchesSubsetEnumeration)
{
    for (int qb = 0; qb <= 7; ++qb) {
        std::vector<int> all, odd;
        for (int i = 0; i <= qb; ++i) all.push_back(i);
        for (int i = 1; i <= qb; i += 2) odd.push_back(i);
        const int xb = qb + 2;
        EXPECT_EQ(euler_product_truncated(FactorKind::single_plus, qb, xb),
                  truncate(subset_oracle(all, 1, qb), qb, xb));
        EXPECT_EQ(euler_product_truncated(FactorKind::untwisted_pair, qb, xb),
                  truncate(subset_oracle(all, 1, qb) * subset_oracle(all, -1, qb), qb, xb));
        EXPECT_EQ(euler_product_truncated(FactorKind::twisted_pair, qb, xb),
                  truncate(subset_oracle(odd, 1, qb) * subset_oracle(odd, -1, qb), qb, xb));
    }
}

TEST(EulerProduct, ThetaSumsOverPartitions)
{
    const int qb = 9, xb = 9;
    const auto p = partition_counts(qb);
    QPolynomial inv_euler;
    for (int m = 0; m <= qb; ++m) inv_euler.add_term({m}, Integer(p[m]));
    QXPolynomial even, odd;
    for (int k = -5; k <= 5; ++k) {
        even.add_term(2 * k, q_power(k * k));
        odd.add_term(2 * k + 1, q_power(k * (k + 1)));
    }
    const QXPolynomial scale = QXPolynomial::monomial(0, inv_euler);
    EXPECT_EQ(euler_product_truncated(FactorKind::classical_theta_even, qb, xb), truncate(even * scale, qb, xb));
    EXPECT_EQ(euler_product_truncated(FactorKind::classical_theta_odd, qb, xb), truncate(odd * scale, qb, xb));
}

TEST(Wedge, Examples)
{
    EXPECT_EQ(wedge_lhs_truncated(0, 2), poly({{0, 0, 1}, {1, 0, 1}}));
    for (int qb = 0; qb <= 5; ++qb) EXPECT_EQ(wedge_lhs_truncated(qb, 0), QXPolynomial(1));
}

TEST(Wedge, IdentityToTwelve)
{
    EXPECT_EQ(wedge_lhs_truncated(12, 12), euler_product_truncated(FactorKind::single_plus, 12, 12));
    for (int qb = 0; qb <= 8; ++qb) {
        for (int xb = 0; xb <= 8; ++xb) {
            EXPECT_EQ(wedge_lhs_truncated(qb, xb), euler_product_truncated(FactorKind::single_plus, qb, xb));
        }
    }
}

TEST(InversePochhammer, Coefficients)
{
    // 1/(q)_2 = sum over partitions into parts <= 2
    EXPECT_EQ(inverse_q_pochhammer(2, 6), q_from_coefficients({1, 1, 2, 2, 3, 3, 4}));
    const auto p = partition_counts(10);
    const QPolynomial full = inverse_q_pochhammer(10, 10);
    for (int m = 0; m <= 10; ++m) EXPECT_EQ(full.coefficient({m}), Integer(p[m]));
}
