#ifndef OSPM_CFORM_HPP
#define OSPM_CFORM_HPP

#include <array>
#include <map>
#include <vector>

#include <ospm/laurent.hpp>
#include <ospm/qcomb.hpp>
#include <ospm/walks.hpp>
#include <ospm/xpolynomial.hpp>

namespace ospm
{

/// Index of a coefficient table entry: r in {1, 2} and (k22, k12 or k21, k11).
struct CKey {
    int r = 1;
    int k_outer = 0;
    int k_mid = 0;
    int k_inner = 0;

    int total() const { return k_outer + k_mid + k_inner; }
    bool negative() const { return k_outer < 0 || k_mid < 0 || k_inner < 0; }
    auto tie() const { return std::array<int, 4>{r, k_outer, k_mid, k_inner}; }
    friend bool operator<(const CKey &a, const CKey &b) { return a.tie() < b.tie(); }
};

namespace detail
{

// Memo tables are per thread; values never change once stored.
inline std::map<CKey, QPolynomial> &c_memo(bool dagger)
{
    thread_local std::map<CKey, QPolynomial> plain, dual;
    return dagger ? dual : plain;
}

} // namespace detail

inline QPolynomial c_rec(const CKey &k)
{
    if (k.negative()) return {};
    if (k.total() == 0) return 1;
    auto &memo = detail::c_memo(false);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    const int n = k.total();
    const QPolynomial a = c_rec({2, k.k_outer - 1, k.k_mid, k.k_inner});
    const QPolynomial b = c_rec({2, k.k_outer, k.k_mid - 1, k.k_inner});
    const QPolynomial c = c_rec({1, k.k_outer, k.k_mid, k.k_inner - 1});
    QPolynomial v = (k.r == 1 ? a.shifted(var_q, 2 * n) : a) + b.shifted(var_q, 2 * n - 1) + c;
    memo.emplace(k, v);
    return v;
}

inline QPolynomial c_closed(const CKey &k)
{
    if (k.negative()) return {};
    const int e = k.k_mid * k.k_mid + (k.r == 1 ? 2 * k.k_outer : 0);
    return q_multinomial(k.k_outer, k.k_mid, k.k_inner, 2).shifted(var_q, e);
}

inline QPolynomial cdag_rec(const CKey &k)
{
    if (k.negative()) return {};
    if (k.total() == 0) return 1;
    auto &memo = detail::c_memo(true);
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    const int n = k.total();
    const QPolynomial a = cdag_rec({2, k.k_outer - 1, k.k_mid, k.k_inner});
    const QPolynomial b = cdag_rec({1, k.k_outer, k.k_mid - 1, k.k_inner});
    const QPolynomial c = cdag_rec({1, k.k_outer, k.k_mid, k.k_inner - 1});
    QPolynomial v = k.r == 1 ? a.shifted(var_q, 2 * n) + b.shifted(var_q, 2 * n) + c : a + b + c;
    memo.emplace(k, v);
    return v;
}

inline QPolynomial cdag_closed(const CKey &k)
{
    if (k.negative()) return {};
    const int m = k.k_mid;
    const int e = m * (m - 1) + (k.r == 1 ? 2 * k.k_outer + 2 * m : 0);
    return q_multinomial(k.k_outer, k.k_mid, k.k_inner, 2).shifted(var_q, e);
}

/// All (k22, kmid, k11) with nonnegative entries summing to n.
inline std::vector<std::array<int, 3>> triples_with_sum(int n)
{
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a <= n; ++a) {
        for (int b = 0; a + b <= n; ++b) out.push_back({a, b, n - a - b});
    }
    return out;
}

/// The specialized E-polynomials assembled from the coefficient tables, with
/// x-exponents exactly as in the printed formulas. For tinf the result is in
/// the variable q^-1 (i.e. E(x, q^-1, infinity)).
inline QXPolynomial E_spec(Family family, int N, Specialization spec)
{
    if (N == 0) return 1;
    QXPolynomial out;
    auto c = [family](int r, int a, int b, int k) {
        const CKey key{r, a, b, k};
        return family == Family::A2 ? c_rec(key) : cdag_rec(key);
    };
    const bool zero = spec == Specialization::t0;
    if (N < 0) {
        const int n = -N;
        for (const auto &[k22, km, k11] : triples_with_sum(n)) {
            if (family == Family::A2) {
                if (zero) out.add_term(k22 - k11, c(2, k22, km, k11));
                else out.add_term(k11 - k22, c(1, k22, km, k11));
            } else {
                out.add_term(k11 - k22, c(zero ? 2 : 1, k22, km, k11));
            }
        }
        return out;
    }
    const int n = N - 1;
    if (family == Family::A2 && zero) {
        for (const auto &[k22, km, k11] : triples_with_sum(n + 1)) {
            out.add_term(k11 - k22 + 1, c(2, k22 - 1, km, k11).shifted(var_q, 2 * n + 1) + c(1, k22, km - 1, k11));
        }
        return out;
    }
    for (const auto &[k22, km, k11] : triples_with_sum(n)) {
        QPolynomial coeff;
        if (family == Family::A2) coeff = c(2, k22, km, k11);
        else if (zero) coeff = c(1, k22, km, k11);
        else coeff = c(2, k22, km, k11) + c(1, k22, km, k11);
        out.add_term(k11 - k22 + 1, coeff);
    }
    return out;
}

} // namespace ospm

#endif
