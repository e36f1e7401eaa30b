#ifndef OSPM_XPOLYNOMIAL_HPP
#define OSPM_XPOLYNOMIAL_HPP

#include <map>
#include <utility>

#include <ospm/laurent.hpp>
#include <ospm/rational_function.hpp>

namespace ospm
{

/// Laurent polynomial in x with coefficients in a ring C (QPolynomial,
/// BiPolynomial or RationalFunction). Zero coefficients are never stored.
template <typename C>
class XPolynomial
{
public:
    using Coefficient = C;
    using Terms = std::map<int, C>;

    XPolynomial() = default;
    XPolynomial(long c)
    {
        add_term(0, C(c));
    }

    static XPolynomial monomial(int x_exp, C c)
    {
        XPolynomial p;
        p.add_term(x_exp, std::move(c));
        return p;
    }

    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    C coefficient(int x_exp) const
    {
        auto it = terms_.find(x_exp);
        return it == terms_.end() ? C{} : it->second;
    }

    void add_term(int x_exp, const C &c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(x_exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    XPolynomial &operator+=(const XPolynomial &o)
    {
        for (const auto &[k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    XPolynomial &operator-=(const XPolynomial &o)
    {
        for (const auto &[k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend XPolynomial operator+(XPolynomial a, const XPolynomial &b) { return a += b; }
    friend XPolynomial operator-(XPolynomial a, const XPolynomial &b) { return a -= b; }
    friend XPolynomial operator*(const XPolynomial &a, const XPolynomial &b)
    {
        XPolynomial r;
        for (const auto &[ka, ca] : a.terms_) {
            for (const auto &[kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        }
        return r;
    }
    XPolynomial &operator*=(const XPolynomial &o) { return *this = *this * o; }

    friend bool operator==(const XPolynomial &a, const XPolynomial &b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ib = b.terms_.begin();
        for (const auto &[k, c] : a.terms_) {
            if (k != ib->first || !(c == ib->second)) return false;
            ++ib;
        }
        return true;
    }
    friend bool operator!=(const XPolynomial &a, const XPolynomial &b) { return !(a == b); }

    // x -> x^{-1}
    XPolynomial mirrored() const
    {
        XPolynomial r;
        for (const auto &[k, c] : terms_) r.terms_.emplace(-k, c);
        return r;
    }

    // Multiplies by x^k.
    XPolynomial x_shifted(int k) const
    {
        XPolynomial r;
        for (const auto &[e, c] : terms_) r.terms_.emplace(e + k, c);
        return r;
    }

    template <typename F>
    auto map_coefficients(F &&f) const
    {
        using D = std::decay_t<decltype(f(std::declval<const C &>()))>;
        XPolynomial<D> r;
        for (const auto &[k, c] : terms_) r.add_term(k, f(c));
        return r;
    }

    template <typename F>
    XPolynomial filter_terms(F &&keep) const
    {
        XPolynomial r;
        for (const auto &[k, c] : terms_) {
            if (keep(k)) r.terms_.emplace(k, c);
        }
        return r;
    }

private:
    Terms terms_;
};

using QXPolynomial = XPolynomial<QPolynomial>;
using BiXPolynomial = XPolynomial<BiPolynomial>;
using RationalXPolynomial = XPolynomial<RationalFunction>;

inline QXPolynomial x_monomial(int x_exp, int q_exp = 0, const Integer &c = 1)
{
    return QXPolynomial::monomial(x_exp, q_power(q_exp, c));
}

// q -> q^factor on every coefficient.
inline QXPolynomial substitute_q_power(const QXPolynomial &p, int factor)
{
    return p.map_coefficients([factor](const QPolynomial &c) { return c.substitute_power(var_q, factor); });
}

inline QXPolynomial substitute_q_inverse(const QXPolynomial &p)
{
    return substitute_q_power(p, -1);
}

inline QXPolynomial q_shifted(const QXPolynomial &p, int k)
{
    return p.map_coefficients([k](const QPolynomial &c) { return c.shifted(var_q, k); });
}

// Value at x = 1, q = 1.
template <typename C>
Integer total_mass(const XPolynomial<C> &p)
{
    Integer s = 0;
    for (const auto &[k, c] : p.terms()) s += c.evaluate_at_one();
    return s;
}

} // namespace ospm

#endif
