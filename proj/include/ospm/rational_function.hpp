#ifndef OSPM_RATIONAL_FUNCTION_HPP
#define OSPM_RATIONAL_FUNCTION_HPP

#include <utility>

#include <ospm/errors.hpp>
#include <ospm/laurent.hpp>

namespace ospm
{

/// Quotient of two (q, v) Laurent polynomials. No gcd reduction is performed;
/// equality is decided by cross-multiplication.
class RationalFunction
{
public:
    RationalFunction() : num_(0), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(BiPolynomial num) : num_(std::move(num)), den_(1) {}
    RationalFunction(BiPolynomial num, BiPolynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw Error("RationalFunction: zero denominator");
    }

    const BiPolynomial &numerator() const noexcept { return num_; }
    const BiPolynomial &denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RationalFunction &operator+=(const RationalFunction &o)
    {
        if (den_ == o.den_) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ = den_ * o.den_;
        }
        return *this;
    }
    RationalFunction &operator-=(const RationalFunction &o) { return *this += -o; }
    RationalFunction &operator*=(const RationalFunction &o)
    {
        num_ *= o.num_;
        den_ *= o.den_;
        return *this;
    }

    friend RationalFunction operator+(RationalFunction a, const RationalFunction &b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction &b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction &b) { return a *= b; }
    friend RationalFunction operator-(const RationalFunction &a) { return {-a.num_, a.den_}; }

    friend bool operator==(const RationalFunction &a, const RationalFunction &b)
    {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction &a, const RationalFunction &b) { return !(a == b); }

    // Multiplies by v^k.
    RationalFunction v_shifted(int k) const { return {num_.shifted(var_v, k), den_}; }

    RationalFunction substitute_q_inverse() const
    {
        return {num_.substitute_inverse(var_q), den_.substitute_inverse(var_q)};
    }

private:
    BiPolynomial num_;
    BiPolynomial den_;
};

/// Value at v = 0: num(q, 0) / den(q, 0), which must divide exactly.
inline QPolynomial rf_eval_v0(const RationalFunction &r)
{
    const auto &num = r.numerator();
    const auto &den = r.denominator();
    QPolynomial den0 = den.coefficient_of(var_v, 0);
    if (den0.is_zero()) throw DenominatorVanishesAtZero();
    if (den.valuation(var_v) < 0) throw DivergesAtZero();
    if (num.is_zero()) return {};
    if (num.valuation(var_v) < 0) throw DivergesAtZero();
    auto quotient = divide_exact(num.coefficient_of(var_v, 0), den0);
    if (!quotient) throw NotPolynomial("value at v = 0 is not a Laurent polynomial in q");
    return *quotient;
}

/// Limit as v -> infinity: zero when the numerator has lower v-degree, the
/// ratio of leading v-coefficients when the degrees agree.
inline QPolynomial rf_limit_v_infinity(const RationalFunction &r)
{
    const auto &num = r.numerator();
    const auto &den = r.denominator();
    if (num.is_zero()) return {};
    const int dn = num.degree(var_v);
    const int dd = den.degree(var_v);
    if (dn > dd) throw DivergesAtInfinity();
    if (dn < dd) return {};
    auto quotient = divide_exact(num.coefficient_of(var_v, dn), den.coefficient_of(var_v, dd));
    if (!quotient) throw NotPolynomial("limit at v = infinity is not a Laurent polynomial in q");
    return *quotient;
}

} // namespace ospm

#endif
