#ifndef OSPM_RAMYIP_HPP
#define OSPM_RAMYIP_HPP

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <ospm/errors.hpp>
#include <ospm/laurent.hpp>
#include <ospm/rational_function.hpp>
#include <ospm/render.hpp>
#include <ospm/walks.hpp>
#include <ospm/xpolynomial.hpp>

namespace ospm
{

inline constexpr int default_walk_bound = 6;

enum class LegVariant { literal, shifted };

/// Raised when the analytic and combinatorial specializations disagree.
class RouteMismatch : public Error
{
public:
    RouteMismatch(QXPolynomial combinatorial, QXPolynomial analytic)
        : Error("specialization routes disagree: " + to_string(combinatorial) + " vs " + to_string(analytic)),
          combinatorial_(std::move(combinatorial)), analytic_(std::move(analytic))
    {
    }
    const QXPolynomial &combinatorial() const noexcept { return combinatorial_; }
    const QXPolynomial &analytic() const noexcept { return analytic_; }

private:
    QXPolynomial combinatorial_;
    QXPolynomial analytic_;
};

namespace detail
{

inline BiPolynomial xi(int degree) { return qv_monomial(degree, 2); }

// (sign(n) - 1)/2
inline int sign_offset(int n) { return n < 0 ? -1 : 0; }

enum class FoldClass { s0_pos, s0_neg, pos, neg };

inline FoldClass classify(Letter s, bool positive)
{
    if (s == Letter::s0) return positive ? FoldClass::s0_pos : FoldClass::s0_neg;
    return positive ? FoldClass::pos : FoldClass::neg;
}

// Numerator of a folded step's factor once everything is put over 1 - xi^2.
inline BiPolynomial fold_numerator(Family family, FoldClass c, int degree)
{
    const BiPolynomial x = xi(degree);
    switch (c) {
    case FoldClass::s0_pos:
        return family == Family::A2 ? x : BiPolynomial(1);
    case FoldClass::s0_neg:
        return family == Family::A2 ? x : x * x;
    case FoldClass::pos:
        return BiPolynomial(1) + x;
    case FoldClass::neg:
        return x * (BiPolynomial(1) + x);
    }
    return {};
}

inline RationalFunction fold_factor(Family family, FoldClass c, int degree)
{
    const BiPolynomial x = xi(degree);
    const BiPolynomial one(1);
    switch (c) {
    case FoldClass::s0_pos:
        return family == Family::A2 ? RationalFunction(x, one - x * x) : RationalFunction(one, one - x * x);
    case FoldClass::s0_neg:
        return family == Family::A2 ? RationalFunction(x, one - x * x) : RationalFunction(x * x, one - x * x);
    case FoldClass::pos:
        return {one, one - x};
    case FoldClass::neg:
        return {x, one - x};
    }
    return {};
}

// v-valuation and v-degree of the numerator of fold_numerator.
inline std::pair<int, int> fold_v_range(Family family, FoldClass c)
{
    switch (c) {
    case FoldClass::s0_pos:
        return family == Family::A2 ? std::pair{2, 2} : std::pair{0, 0};
    case FoldClass::s0_neg:
        return family == Family::A2 ? std::pair{2, 2} : std::pair{4, 4};
    case FoldClass::pos:
        return {0, 2};
    case FoldClass::neg:
        return {2, 4};
    }
    return {0, 0};
}

inline BiPolynomial one_minus_v2() { return BiPolynomial(1) - qv_monomial(0, 2); }

inline void check_bound(int n, int bound)
{
    if (std::abs(n) > bound) {
        throw BoundExceeded("|n| = " + std::to_string(std::abs(n)) + " exceeds the walk bound " + std::to_string(bound));
    }
}

} // namespace detail

/// prod_j (1 - xi_j^2), the common denominator of every term.
inline BiPolynomial common_denominator(int l)
{
    BiPolynomial d(1);
    for (int deg = 1; deg <= l; ++deg) {
        const BiPolynomial x = detail::xi(deg);
        d *= BiPolynomial(1) - x * x;
    }
    return d;
}

struct RamYipTerm {
    AlcoveWalk walk;
    WalkStats stats;
    int v_exponent = 0; // literal prefactor exponent (sign(n)-1)/2 + d - |J|
    std::vector<RationalFunction> factors;
    int x_exponent = 0;

    // v^{v_exponent} (1 - v^2)^{|J|} times the product of the factors.
    RationalFunction value() const
    {
        RationalFunction r(qv_monomial(0, v_exponent) * detail::one_minus_v2().pow(static_cast<unsigned>(factors.size())));
        for (const auto &f : factors) r *= f;
        return r;
    }
};

inline std::vector<RamYipTerm> ramyip_terms(Family family, int n, int bound = default_walk_bound)
{
    detail::check_bound(n, bound);
    std::vector<RamYipTerm> out;
    if (n == 0) return out;
    for (auto &walk : enumerate_walks(n)) {
        RamYipTerm t;
        t.stats = traverse(walk);
        const int l = static_cast<int>(walk.mask.size());
        for (int step = 1; step <= l; ++step) {
            if (walk.mask[step - 1]) continue;
            const Letter s = walk.word.letters[step - 1];
            const bool positive = std::count(t.stats.J0_pos.begin(), t.stats.J0_pos.end(), step) ||
                                  std::count(t.stats.J_pos.begin(), t.stats.J_pos.end(), step);
            t.factors.push_back(detail::fold_factor(family, detail::classify(s, positive), beta_degree(step, l)));
        }
        t.v_exponent = detail::sign_offset(n) + t.stats.final.d() - static_cast<int>(t.stats.J.size());
        t.x_exponent = t.stats.final.wt();
        t.walk = std::move(walk);
        out.push_back(std::move(t));
    }
    return out;
}

/// v-valuation and v-degree of a single term's numerator over the common denominator.
inline std::pair<int, int> term_v_range(Family family, const AlcoveWalk &walk, const WalkStats &st)
{
    const int l = static_cast<int>(walk.mask.size());
    const int folds = static_cast<int>(st.J.size());
    int lo = detail::sign_offset(target_sign_of(walk.word)) + st.final.d() - folds;
    int hi = lo + 2 * folds + 4 * (l - folds);
    auto add = [&](const std::vector<int> &steps, detail::FoldClass c) {
        const auto [a, b] = detail::fold_v_range(family, c);
        lo += a * static_cast<int>(steps.size());
        hi += b * static_cast<int>(steps.size());
    };
    add(st.J0_pos, detail::FoldClass::s0_pos);
    add(st.J0_neg, detail::FoldClass::s0_neg);
    add(st.J_pos, detail::FoldClass::pos);
    add(st.J_neg, detail::FoldClass::neg);
    return {lo, hi};
}

/// Power of v that brings the qb-surviving terms to v-valuation 0 at t = 0, or
/// to v-degree equal to the denominator's at t = infinity.
inline int normalization_shift(Family family, int n, Specialization spec = Specialization::t0)
{
    if (n == 0) return 0;
    const int l = static_cast<int>(WalkWord::for_target(n).size());
    int best = spec == Specialization::t0 ? INT_MAX : INT_MIN;
    for (const auto &walk : enumerate_walks(n)) {
        const WalkStats st = traverse(walk);
        if (!qb_survives(st, family, spec)) continue;
        const auto [lo, hi] = term_v_range(family, walk, st);
        best = spec == Specialization::t0 ? std::min(best, lo) : std::max(best, hi);
    }
    return spec == Specialization::t0 ? -best : 4 * l - best;
}

/// Full sum over all walks, x-exponent = wt of the final alcove. Computed by
/// dynamic programming over (alcove, direction) with every term over prod (1 - xi_j^2).
inline RationalXPolynomial ramyip_sum(Family family, int n, bool normalize, int bound = default_walk_bound)
{
    detail::check_bound(n, bound);
    if (n == 0) return RationalXPolynomial(1);
    const WalkWord word = WalkWord::for_target(n);
    const int l = static_cast<int>(word.size());

    // key: (left endpoint, direction)
    std::map<std::pair<int, int>, BiPolynomial> states;
    states[{0, n < 0 ? -1 : 1}] = BiPolynomial(1);
    const BiPolynomial fold_prefactor = qv_monomial(0, -1) * detail::one_minus_v2();
    for (int step = 1; step <= l; ++step) {
        const Letter s = word.letters[step - 1];
        const int deg = beta_degree(step, l);
        const BiPolynomial x = detail::xi(deg);
        const BiPolynomial cross = BiPolynomial(1) - x * x;
        std::map<std::pair<int, int>, BiPolynomial> next;
        for (const auto &[key, num] : states) {
            const auto [a, dir] = key;
            const int wall = dir < 0 ? a : a + 1;
            if (wall_label(wall) != s) throw MalformedWalk("step wall lies behind the current direction");
            next[{a + dir, dir}] += num * cross;
            const bool positive = -dir == 1;
            next[{a, -dir}] += num * fold_prefactor * detail::fold_numerator(family, detail::classify(s, positive), deg);
        }
        states = std::move(next);
    }

    const int shift = normalize ? normalization_shift(family, n) : 0;
    std::map<int, BiPolynomial> by_x;
    for (const auto &[key, num] : states) {
        const AlcoveElement fin = AlcoveElement::from_left(key.first);
        by_x[fin.wt()] += num.shifted(var_v, detail::sign_offset(n) + fin.d() + shift);
    }
    const BiPolynomial den = common_denominator(l);
    RationalXPolynomial out;
    for (auto &[k, num] : by_x) out.add_term(k, RationalFunction(num, den));
    return out;
}

/// Route (a): v -> 0, or q -> q^-1 followed by v -> infinity, on the normalized sum.
inline QXPolynomial analytic_specialization(Family family, int n, Specialization spec, int bound = default_walk_bound)
{
    const RationalXPolynomial sum = ramyip_sum(family, n, true, bound);
    return sum.map_coefficients([spec](const RationalFunction &r) {
        return spec == Specialization::t0 ? rf_eval_v0(r) : rf_limit_v_infinity(r.substitute_q_inverse());
    });
}

/// Route (b): qb-surviving walks weighted by q^{leg} (t = 0) or q^{leg'} (t = infinity).
inline QXPolynomial combinatorial_specialization(Family family, int n, Specialization spec,
                                                 LegVariant variant = LegVariant::shifted,
                                                 int bound = default_walk_bound)
{
    detail::check_bound(n, bound);
    if (n == 0) return QXPolynomial(1);
    QXPolynomial out;
    for (const auto &walk : enumerate_walks(n)) {
        const WalkStats st = traverse(walk);
        if (!qb_survives(st, family, spec)) continue;
        const HWord h = to_hword(walk, n > 0 ? 1 : -1);
        int e = st.leg;
        if (spec == Specialization::tinf) e = variant == LegVariant::shifted ? st.legprime_shifted : st.legprime;
        out.add_term(x_weight(h), q_power(e));
    }
    return out;
}

/// The specialization from walks; both routes must agree.
inline QXPolynomial specialize(Family family, int n, Specialization spec, int bound = default_walk_bound)
{
    QXPolynomial b = combinatorial_specialization(family, n, spec, LegVariant::shifted, bound);
    QXPolynomial a = n == 0 ? QXPolynomial(1) : analytic_specialization(family, n, spec, bound);
    if (a != b) throw RouteMismatch(std::move(b), std::move(a));
    return b;
}

} // namespace ospm

#endif
