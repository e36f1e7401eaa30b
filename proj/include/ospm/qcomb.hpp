#ifndef OSPM_QCOMB_HPP
#define OSPM_QCOMB_HPP

#include <algorithm>
#include <cstdlib>
#include <vector>
#include <stdexcept>

#include <ospm/laurent.hpp>
#include <ospm/xpolynomial.hpp>

namespace ospm
{

/// Gaussian binomial [n choose m] in the variable q^base, computed by the
/// Pascal rule. Zero outside 0 <= m <= n.
inline QPolynomial q_binomial(int n, int m, int base = 1)
{
    if (n < 0 || m < 0 || m > n) return {};
    // row[j] = [i choose j]
    std::vector<QPolynomial> row(static_cast<std::size_t>(m) + 1);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, m); j >= 1; --j) {
            // [i;j] = [i-1;j] + q^{i-j}[i-1;j-1]
            row[j] += row[j - 1].shifted(var_q, (i - j) * base);
        }
    }
    return row[m];
}

/// q-multinomial (k1+k2+k3; k1, k2, k3) in q^base; zero if any part is negative.
inline QPolynomial q_multinomial(int k1, int k2, int k3, int base = 1)
{
    if (k1 < 0 || k2 < 0 || k3 < 0) return {};
    const int n = k1 + k2 + k3;
    return q_binomial(n, k1, base) * q_binomial(n - k1, k2, base);
}

/// x-polynomial series known exactly for q-degrees 0..q_bound. All series
/// handled here have nonnegative q-exponents, so q-truncation commutes with
/// multiplication; mixing bounds keeps the smaller one.
struct TruncatedSeries {
    QXPolynomial poly;
    int q_bound = 0;

    static TruncatedSeries truncate(const QXPolynomial &p, int q_bound)
    {
        TruncatedSeries s{{}, q_bound};
        for (const auto &[k, c] : p.terms()) {
            QPolynomial kept;
            for (const auto &[e, a] : c.terms()) {
                if (e[0] > q_bound) break;
                kept.add_term(e, a);
            }
            s.poly.add_term(k, kept);
        }
        return s;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return truncate(a.poly * b.poly, std::min(a.q_bound, b.q_bound));
    }
    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        return truncate(a.poly + b.poly, std::min(a.q_bound, b.q_bound));
    }

    // Keeps |x-exponent| <= x_bound.
    QXPolynomial x_truncated(int x_bound) const
    {
        return poly.filter_terms([x_bound](int k) { return std::abs(k) <= x_bound; });
    }
};

enum class FactorKind {
    untwisted_pair,       // prod_{i>=0} (1 + q^i x)(1 + q^i x^-1)
    twisted_pair,         // prod_{i>=0} (1 + q^{2i+1} x)(1 + q^{2i+1} x^-1)
    single_plus,          // prod_{i>=0} (1 + q^i x)
    classical_theta_even, // sum_k x^{2k} q^{k^2} / (q)_inf
    classical_theta_odd,  // sum_k x^{2k+1} q^{k(k+1)} / (q)_inf
};

/// 1/(q)_k = prod_{i=1..k} 1/(1-q^i), expanded up to q^q_bound.
inline QPolynomial inverse_q_pochhammer(int k, int q_bound)
{
    std::vector<Integer> c(static_cast<std::size_t>(q_bound) + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= k && i <= q_bound; ++i) {
        for (int e = i; e <= q_bound; ++e) c[e] += c[e - i];
    }
    QPolynomial p;
    for (int e = 0; e <= q_bound; ++e) p.add_term({e}, c[e]);
    return p;
}

/// Expanded truncated product/theta series, keeping 0 <= q-exp <= q_bound and |x-exp| <= x_bound.
inline QXPolynomial euler_product_truncated(FactorKind kind, int q_bound, int x_bound)
{
    if (q_bound < 0 || x_bound < 0) throw std::invalid_argument("euler_product_truncated: negative bound");
    TruncatedSeries acc{QXPolynomial(1), q_bound};
    auto times_factor = [&](int q_exp, int x_exp) {
        if (q_exp > q_bound) return;
        QXPolynomial f = QXPolynomial(1) + x_monomial(x_exp, q_exp);
        acc = acc * TruncatedSeries{f, q_bound};
    };
    switch (kind) {
    case FactorKind::untwisted_pair:
        for (int i = 0; i <= q_bound; ++i) {
            times_factor(i, 1);
            times_factor(i, -1);
        }
        break;
    case FactorKind::twisted_pair:
        for (int i = 0; 2 * i + 1 <= q_bound; ++i) {
            times_factor(2 * i + 1, 1);
            times_factor(2 * i + 1, -1);
        }
        break;
    case FactorKind::single_plus:
        for (int i = 0; i <= q_bound; ++i) times_factor(i, 1);
        break;
    case FactorKind::classical_theta_even:
    case FactorKind::classical_theta_odd: {
        const bool odd = kind == FactorKind::classical_theta_odd;
        const QPolynomial eta_inv = inverse_q_pochhammer(q_bound, q_bound);
        QXPolynomial sum;
        for (int k = -q_bound - 1; k <= q_bound + 1; ++k) {
            const int e = odd ? k * (k + 1) : k * k;
            if (e > q_bound) continue;
            sum.add_term(odd ? 2 * k + 1 : 2 * k, eta_inv.shifted(var_q, e));
        }
        acc = TruncatedSeries::truncate(sum, q_bound);
        break;
    }
    }
    return acc.x_truncated(x_bound);
}

/// sum_{k>=0} q^{k(k-1)/2} x^k / (q)_k, truncated to the same bounds.
inline QXPolynomial wedge_lhs_truncated(int q_bound, int x_bound)
{
    if (q_bound < 0 || x_bound < 0) throw std::invalid_argument("wedge_lhs_truncated: negative bound");
    QXPolynomial sum;
    for (int k = 0; k <= x_bound; ++k) {
        const int e = k * (k - 1) / 2;
        if (e > q_bound) break;
        sum.add_term(k, inverse_q_pochhammer(k, q_bound - e).shifted(var_q, e));
    }
    return sum;
}

} // namespace ospm

#endif
