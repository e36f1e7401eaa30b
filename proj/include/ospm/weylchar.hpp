#ifndef OSPM_WEYLCHAR_HPP
#define OSPM_WEYLCHAR_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <ospm/laurent.hpp>
#include <ospm/qcomb.hpp>
#include <ospm/xpolynomial.hpp>

namespace ospm
{

enum class BasisKind {
    untwisted_neg,
    twisted_neg,
    untwisted_pos,
    twisted_pos, // union of the two families below
    twisted_pos_1,
    twisted_pos_2,
    limit,
    classical,
};

inline const char *to_string(BasisKind k)
{
    switch (k) {
    case BasisKind::untwisted_neg: return "untwisted_neg";
    case BasisKind::twisted_neg: return "twisted_neg";
    case BasisKind::untwisted_pos: return "untwisted_pos";
    case BasisKind::twisted_pos: return "twisted_pos";
    case BasisKind::twisted_pos_1: return "twisted_pos_1";
    case BasisKind::twisted_pos_2: return "twisted_pos_2";
    case BasisKind::limit: return "limit";
    case BasisKind::classical: return "classical";
    }
    return "";
}

inline std::optional<BasisKind> parse_basis_kind(std::string_view s)
{
    for (auto k : {BasisKind::untwisted_neg, BasisKind::twisted_neg, BasisKind::untwisted_pos, BasisKind::twisted_pos,
                   BasisKind::twisted_pos_1, BasisKind::twisted_pos_2, BasisKind::limit, BasisKind::classical}) {
        if (s == to_string(k)) return k;
    }
    return std::nullopt;
}

/// A product of generators applied to the cyclic vector. e_degrees are the
/// t-degrees of the even generators (e, or f for positive kinds), g_degrees those
/// of the odd ones (g+, or g- for positive kinds; for the limit kind the entry c
/// stands for g-_{-c}).
struct BasisMonomial {
    BasisKind kind = BasisKind::untwisted_neg;
    std::vector<int> e_degrees;
    std::vector<int> g_degrees;
    int weight = 0;
    int t_degree = 0;
    int pbw_degree = 0;

    std::string str() const
    {
        const bool pos = kind == BasisKind::untwisted_pos || kind == BasisKind::twisted_pos_1 ||
                         kind == BasisKind::twisted_pos_2;
        const std::string even = pos ? "f" : "e";
        const std::string odd = (pos || kind == BasisKind::limit) ? "g-" : "g+";
        std::string s;
        for (int a : e_degrees) s += (s.empty() ? "" : " ") + even + "_" + std::to_string(a);
        for (int b : g_degrees) {
            s += (s.empty() ? "" : " ") + odd + "_" + std::to_string(kind == BasisKind::limit ? -b : b);
        }
        return s.empty() ? "1" : s;
    }
};

namespace detail
{

using Visit = std::function<void(const std::vector<int> &)>;

// Strictly increasing k-subsets of values, in lexicographic order.
inline void for_each_subset(const std::vector<int> &values, int k, const Visit &f)
{
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == k) {
            f(cur);
            return;
        }
        for (std::size_t i = from; i < values.size(); ++i) {
            cur.push_back(values[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    if (k >= 0) rec(0);
}

// Weakly increasing size-s sequences from values.
inline void for_each_multiset(const std::vector<int> &values, int s, const Visit &f)
{
    std::vector<int> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == s) {
            f(cur);
            return;
        }
        for (std::size_t i = from; i < values.size(); ++i) {
            cur.push_back(values[i]);
            rec(i);
            cur.pop_back();
        }
    };
    if (s >= 0) rec(0);
}

inline std::vector<int> range_step(int lo, int hi, int step = 1)
{
    std::vector<int> v;
    for (int i = lo; i <= hi; i += step) v.push_back(i);
    return v;
}

inline int sum(const std::vector<int> &v)
{
    int s = 0;
    for (int x : v) s += x;
    return s;
}

inline void enumerate_limit(int max_degree, std::vector<BasisMonomial> &out)
{
    for (int k = 0;; ++k) {
        int least = -1;
        for (int s = 0; s <= k; ++s) {
            const int m = ((k - s) * (k - s - 1) + s * (s - 1)) / 2;
            if (least < 0 || m < least) least = m;
        }
        if (least > max_degree) break;
        for (int s = 0; s <= k; ++s) {
            const int c_budget = max_degree + s * (k - s);
            // c_k <= c_budget - k(k-1)/2 keeps the other c's feasible
            const int c_top = c_budget - (k - 1) * (k - 2) / 2;
            for_each_subset(range_step(0, c_top), k, [&](const std::vector<int> &c) {
                if (sum(c) > c_budget) return;
                for_each_multiset(range_step(0, k - s), s, [&](const std::vector<int> &a) {
                    const int deg = sum(c) - sum(a);
                    if (deg > max_degree) return;
                    out.push_back({BasisKind::limit, a, c, -k + 2 * s, deg, k + s});
                });
            });
        }
    }
}

} // namespace detail

/// Monomial basis of the given kind; for the limit kind, all monomials of
/// t-degree at most n. PBW degree counts every generator, except for twisted
/// kinds where only the even generators count.
inline std::vector<BasisMonomial> enumerate_basis(BasisKind kind, int n)
{
    if (n < 0) throw std::invalid_argument("enumerate_basis: n must be nonnegative");
    using detail::for_each_multiset;
    using detail::for_each_subset;
    using detail::range_step;
    using detail::sum;
    std::vector<BasisMonomial> out;
    auto emit = [&](BasisKind k, const std::vector<int> &a, const std::vector<int> &b, int weight, bool twisted) {
        out.push_back({k, a, b, weight, sum(a) + sum(b),
                       twisted ? static_cast<int>(a.size()) : static_cast<int>(a.size() + b.size())});
    };
    switch (kind) {
    case BasisKind::untwisted_neg:
    case BasisKind::twisted_neg: {
        const bool tw = kind == BasisKind::twisted_neg;
        const auto bs = tw ? range_step(1, 2 * n - 1, 2) : range_step(0, n - 1);
        for (int k = 0; k <= n; ++k) {
            for_each_subset(bs, k, [&](const std::vector<int> &b) {
                for (int s = 0; s <= n - k; ++s) {
                    const auto as = tw ? range_step(0, 2 * (n - k - s), 2) : range_step(0, n - k - s);
                    for_each_multiset(as, s, [&](const std::vector<int> &a) { emit(kind, a, b, -n + k + 2 * s, tw); });
                }
            });
        }
        break;
    }
    case BasisKind::untwisted_pos:
        if (n < 1) throw std::invalid_argument("enumerate_basis: positive kinds need n >= 1");
        for (int k = 0; k <= n - 1; ++k) {
            for_each_subset(range_step(1, n - 1), k, [&](const std::vector<int> &b) {
                for (int s = 0; s <= n - k; ++s) {
                    for_each_multiset(range_step(1, n - s - k), s,
                                      [&](const std::vector<int> &a) { emit(kind, a, b, n - k - 2 * s, false); });
                }
            });
        }
        break;
    case BasisKind::twisted_pos:
    case BasisKind::twisted_pos_1:
    case BasisKind::twisted_pos_2:
        if (n < 1) throw std::invalid_argument("enumerate_basis: positive kinds need n >= 1");
        if (kind != BasisKind::twisted_pos_2) {
            for (int k = 0; k <= n - 1; ++k) {
                for_each_subset(range_step(1, 2 * n - 3, 2), k, [&](const std::vector<int> &b) {
                    for (int s = 0; s <= n - k; ++s) {
                        for_each_multiset(range_step(2, 2 * (n - s - k), 2), s, [&](const std::vector<int> &a) {
                            emit(BasisKind::twisted_pos_1, a, b, n - k - 2 * s, true);
                        });
                    }
                });
            }
        }
        if (kind != BasisKind::twisted_pos_1) {
            for (int k = 1; k <= n; ++k) {
                for_each_subset(range_step(1, 2 * n - 3, 2), k - 1, [&](const std::vector<int> &b0) {
                    std::vector<int> b = b0;
                    b.push_back(2 * n - 1);
                    for (int s = 0; s <= n - k; ++s) {
                        for_each_multiset(range_step(0, 2 * (n - s - k), 2), s, [&](const std::vector<int> &a) {
                            emit(BasisKind::twisted_pos_2, a, b, n - k - 2 * s, true);
                        });
                    }
                });
            }
        }
        break;
    case BasisKind::limit:
        detail::enumerate_limit(n, out);
        break;
    case BasisKind::classical:
        for (int k = 0; k <= n; ++k) {
            for_each_multiset(range_step(0, n - k), k, [&](const std::vector<int> &a) { emit(kind, a, {}, -n + 2 * k, false); });
        }
        break;
    }
    return out;
}

/// sum over the basis of q^{t-degree} x^{weight}
inline QXPolynomial character_from_basis(const std::vector<BasisMonomial> &basis)
{
    QXPolynomial ch;
    for (const auto &m : basis) ch.add_term(m.weight, q_power(m.t_degree));
    return ch;
}

inline QXPolynomial ch_D(int n)
{
    if (n < 0) throw std::invalid_argument("ch_D: n must be nonnegative");
    QXPolynomial ch;
    for (int k = 0; k <= n; ++k) ch.add_term(-n + 2 * k, q_binomial(n, k));
    return ch;
}

/// Untwisted Weyl module character; W_{-m} for n = -m <= 0, W_n for n > 0.
inline QXPolynomial ch_W(int n)
{
    QXPolynomial ch;
    if (n <= 0) {
        const int m = -n;
        for (int k = 0; k <= m; ++k) {
            const QPolynomial head = q_binomial(m, k).shifted(var_q, k * (k - 1) / 2);
            for (int s = 0; s <= m - k; ++s) ch.add_term(-m + k + 2 * s, head * q_binomial(m - k, s));
        }
        return ch;
    }
    for (int k = 0; k <= n - 1; ++k) {
        const QPolynomial head = q_binomial(n - 1, k).shifted(var_q, k * (k + 1) / 2);
        for (int s = 0; s <= n - k - 1; ++s) ch.add_term(n - k - 2 * s, head * q_binomial(n - k - 1, s).shifted(var_q, s));
    }
    return ch;
}

/// Twisted Weyl module character, same indexing as ch_W.
inline QXPolynomial ch_W_sigma(int n)
{
    QXPolynomial ch;
    if (n <= 0) {
        const int m = -n;
        for (int k = 0; k <= m; ++k) {
            const QPolynomial head = q_binomial(m, k, 2).shifted(var_q, k * k);
            for (int s = 0; s <= m - k; ++s) ch.add_term(-m + k + 2 * s, head * q_binomial(m - k, s, 2));
        }
        return ch;
    }
    for (int k = 0; k <= n - 1; ++k) {
        const QPolynomial head = q_binomial(n - 1, k, 2).shifted(var_q, k * k);
        for (int s = 0; s <= n - k - 1; ++s) {
            const QPolynomial tail = q_binomial(n - k - 1, s, 2);
            ch.add_term(n - k - 2 * s, head * tail.shifted(var_q, 2 * s));
            ch.add_term(n - k - 2 * s - 1, (head * tail).shifted(var_q, 2 * n - 1));
        }
    }
    return ch;
}

/// PBW-graded character of W_{-n} (twisted: W^sigma_{-n}); the first
/// coefficient variable tracks t-degree, the second the PBW degree.
inline BiXPolynomial ch_grW_pbw(int n, bool twisted)
{
    if (n < 0) throw std::invalid_argument("ch_grW_pbw: n must be nonnegative");
    BiXPolynomial ch;
    for (const auto &m : enumerate_basis(twisted ? BasisKind::twisted_neg : BasisKind::untwisted_neg, n)) {
        ch.add_term(m.weight, qv_monomial(m.t_degree, m.pbw_degree));
    }
    return ch;
}

/// Sets the PBW variable to q and rescales: (q, t) -> (q^2, q^2) untwisted, (q, q) twisted.
inline QXPolynomial specialize_pbw(const BiXPolynomial &ch, bool twisted)
{
    const int f = twisted ? 1 : 2;
    return ch.map_coefficients([f](const BiPolynomial &c) {
        QPolynomial r;
        for (const auto &[e, a] : c.terms()) r.add_term({f * (e[0] + e[1])}, a);
        return r;
    });
}

enum class LimitKind { untwisted, twisted, classical_even, classical_odd };

inline const char *to_string(LimitKind k)
{
    switch (k) {
    case LimitKind::untwisted: return "untwisted";
    case LimitKind::twisted: return "twisted";
    case LimitKind::classical_even: return "classical_even";
    case LimitKind::classical_odd: return "classical_odd";
    }
    return "";
}

inline std::optional<LimitKind> parse_limit_kind(std::string_view s)
{
    for (auto k : {LimitKind::untwisted, LimitKind::twisted, LimitKind::classical_even, LimitKind::classical_odd}) {
        if (s == to_string(k)) return k;
    }
    return std::nullopt;
}

inline QXPolynomial limit_char(LimitKind kind, int q_bound, int x_bound)
{
    switch (kind) {
    case LimitKind::untwisted: return euler_product_truncated(FactorKind::untwisted_pair, q_bound, x_bound);
    case LimitKind::twisted: return euler_product_truncated(FactorKind::twisted_pair, q_bound, x_bound);
    case LimitKind::classical_even: return euler_product_truncated(FactorKind::classical_theta_even, q_bound, x_bound);
    case LimitKind::classical_odd: return euler_product_truncated(FactorKind::classical_theta_odd, q_bound, x_bound);
    }
    return {};
}

/// The n-th finite character rescaled toward the limit: q^{top} ch(x, q^-1),
/// truncated to the bounds.
inline QXPolynomial approximant(LimitKind kind, int n, int q_bound, int x_bound)
{
    if (n < 0) throw std::invalid_argument("approximant: n must be nonnegative");
    QXPolynomial p;
    switch (kind) {
    case LimitKind::untwisted: p = q_shifted(substitute_q_inverse(ch_W(-n)), n * (n - 1) / 2); break;
    case LimitKind::twisted: p = q_shifted(substitute_q_inverse(ch_W_sigma(-n)), n * n); break;
    case LimitKind::classical_even: p = q_shifted(substitute_q_inverse(ch_D(2 * n)), n * n); break;
    case LimitKind::classical_odd: p = q_shifted(substitute_q_inverse(ch_D(2 * n + 1)), n * (n + 1)); break;
    }
    return TruncatedSeries::truncate(p, q_bound).x_truncated(x_bound);
}

/// Coefficients of approximant(n) below this q-degree are expected to be final.
inline int approximant_trusted_degree(int n) { return n >= 2 ? (n - 2) / 2 : -1; }

/// q^n ch_W(-n) <= ch_W(-n-1) coefficientwise, the character shadow of the
/// embedding W_{-n} -> W_{-n-1}, w |-> g+_n w.
inline bool embedding_dominated(int n)
{
    const QXPolynomial small = q_shifted(ch_W(-n), n);
    const QXPolynomial big = ch_W(-n - 1);
    for (const auto &[k, c] : small.terms()) {
        const QPolynomial b = big.coefficient(k);
        for (const auto &[e, a] : c.terms()) {
            if (b.coefficient(e) < a) return false;
        }
    }
    return true;
}

} // namespace ospm

#endif
