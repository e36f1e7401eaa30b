#ifndef OSPM_LAURENT_HPP
#define OSPM_LAURENT_HPP

#include <algorithm>
#include <array>
#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <utility>

#include <gmpxx.h>

namespace ospm
{

using Integer = mpz_class;

/// Sparse Laurent polynomial in N formal variables with arbitrary-precision
/// integer coefficients. Terms are kept in canonical form: the map never
/// stores a zero coefficient, so structural equality is ring equality.
template <std::size_t N>
class Laurent
{
    static_assert(N >= 1);

public:
    using Exponent = std::array<int, N>;
    using Terms = std::map<Exponent, Integer>;

    Laurent() = default;

    // Constant polynomial.
    Laurent(long c)
    {
        if (c != 0) terms_.emplace(Exponent{}, Integer(c));
    }
    explicit Laurent(const Integer &c)
    {
        if (c != 0) terms_.emplace(Exponent{}, c);
    }

    static Laurent monomial(const Exponent &e, const Integer &c = 1)
    {
        Laurent p;
        p.add_term(e, c);
        return p;
    }

    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Integer coefficient(const Exponent &e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Exponent &e, const Integer &c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Laurent &operator+=(const Laurent &o)
    {
        for (const auto &[e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent &operator-=(const Laurent &o)
    {
        for (const auto &[e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    Laurent &operator*=(const Laurent &o)
    {
        *this = *this * o;
        return *this;
    }
    Laurent &operator*=(const Integer &s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto &[e, c] : terms_) c *= s;
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent &b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent &b) { return a -= b; }
    friend Laurent operator-(Laurent a)
    {
        for (auto &[e, c] : a.terms_) c = -c;
        return a;
    }
    friend Laurent operator*(const Laurent &a, const Laurent &b)
    {
        Laurent r;
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                Exponent e;
                for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }
    friend Laurent operator*(Laurent a, const Integer &s) { return a *= s; }
    friend Laurent operator*(const Integer &s, Laurent a) { return a *= s; }

    friend bool operator==(const Laurent &a, const Laurent &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent &a, const Laurent &b) { return !(a == b); }

    Laurent pow(unsigned k) const
    {
        Laurent r(1);
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // Multiplies by var^by. A uniform shift preserves the lexicographic key order.
    Laurent shifted(std::size_t var, int by) const
    {
        Laurent r;
        for (const auto &[e, c] : terms_) {
            Exponent f = e;
            f[var] += by;
            r.terms_.emplace_hint(r.terms_.end(), f, c);
        }
        return r;
    }

    // var -> var^factor (factor may be negative; factor = -1 is the inverse substitution).
    Laurent substitute_power(std::size_t var, int factor) const
    {
        Laurent r;
        for (const auto &[e, c] : terms_) {
            Exponent f = e;
            f[var] *= factor;
            r.add_term(f, c);
        }
        return r;
    }

    Laurent substitute_inverse(std::size_t var) const { return substitute_power(var, -1); }

    // Highest / lowest exponent of `var`; the polynomial must be nonzero.
    int degree(std::size_t var) const
    {
        assert(!is_zero());
        int d = std::numeric_limits<int>::min();
        for (const auto &[e, c] : terms_) d = std::max(d, e[var]);
        return d;
    }
    int valuation(std::size_t var) const
    {
        assert(!is_zero());
        int d = std::numeric_limits<int>::max();
        for (const auto &[e, c] : terms_) d = std::min(d, e[var]);
        return d;
    }

    // Sum of all coefficients, i.e. the value at (1, ..., 1).
    Integer evaluate_at_one() const
    {
        Integer s = 0;
        for (const auto &[e, c] : terms_) s += c;
        return s;
    }

    // Coefficient of var^exp, as a polynomial in the remaining variables.
    template <std::size_t M = N, std::enable_if_t<(M >= 2), int> = 0>
    Laurent<N - 1> coefficient_of(std::size_t var, int exp) const
    {
        Laurent<N - 1> r;
        for (const auto &[e, c] : terms_) {
            if (e[var] != exp) continue;
            typename Laurent<N - 1>::Exponent f{};
            for (std::size_t i = 0, j = 0; i < N; ++i) {
                if (i != var) f[j++] = e[i];
            }
            r.add_term(f, c);
        }
        return r;
    }

private:
    Terms terms_;
};

/// Integer-coefficient Laurent polynomial in q.
using QPolynomial = Laurent<1>;
/// Integer-coefficient Laurent polynomial in (q, v) with v = t^{1/2}.
using BiPolynomial = Laurent<2>;

inline constexpr std::size_t var_q = 0;
inline constexpr std::size_t var_v = 1;

inline QPolynomial q_power(int e, const Integer &c = 1)
{
    return QPolynomial::monomial({e}, c);
}

inline BiPolynomial qv_monomial(int qe, int ve, const Integer &c = 1)
{
    return BiPolynomial::monomial({qe, ve}, c);
}

inline QPolynomial substitute_q_inverse(const QPolynomial &p)
{
    return p.substitute_inverse(var_q);
}

// Builds 1 + c1 q + c2 q^2 + ... from a dense coefficient list starting at q^0.
inline QPolynomial q_from_coefficients(std::initializer_list<long> cs, int start = 0)
{
    QPolynomial p;
    int e = start;
    for (long c : cs) p.add_term({e++}, Integer(c));
    return p;
}

/// Exact division of univariate Laurent polynomials. Returns nullopt when
/// the divisor is zero or the division leaves a remainder.
inline std::optional<QPolynomial> divide_exact(const QPolynomial &a, const QPolynomial &b)
{
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return QPolynomial{};
    const auto &[lead_e, lead_c] = *b.terms().begin();
    const int top = a.degree(0) - b.degree(0);
    QPolynomial quotient;
    QPolynomial rem = a;
    while (!rem.is_zero()) {
        const auto &[re, rc] = *rem.terms().begin();
        const int qe = re[0] - lead_e[0];
        if (qe > top || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
        Integer qc = rc / lead_c;
        QPolynomial t = q_power(qe, qc);
        quotient += t;
        rem -= t * b;
    }
    return quotient;
}

} // namespace ospm

#endif
