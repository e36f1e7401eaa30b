#ifndef OSPM_RENDER_HPP
#define OSPM_RENDER_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include <ospm/laurent.hpp>
#include <ospm/rational_function.hpp>
#include <ospm/xpolynomial.hpp>

namespace ospm
{

namespace detail
{

inline std::string power(std::string_view var, int e)
{
    if (e == 0) return {};
    std::string s(var);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

// Monomial with |coefficient|; empty string for the bare constant 1.
template <std::size_t N>
std::string abs_monomial(const typename Laurent<N>::Exponent &e, const Integer &c,
                         const std::array<std::string_view, N> &vars)
{
    std::string vs;
    for (std::size_t i = 0; i < N; ++i) {
        auto p = power(vars[i], e[i]);
        if (p.empty()) continue;
        if (!vs.empty()) vs += "*";
        vs += p;
    }
    Integer a = abs(c);
    if (a == 1) return vs;
    return vs.empty() ? a.get_str() : a.get_str() + "*" + vs;
}

template <typename C>
struct VarNames;
template <>
struct VarNames<QPolynomial> {
    static constexpr std::array<std::string_view, 1> value{"q"};
};
template <>
struct VarNames<BiPolynomial> {
    static constexpr std::array<std::string_view, 2> value{"q", "v"};
};

} // namespace detail

/// Compact rendering, e.g. "1-q^2+2*q^3". Terms in ascending exponent order.
template <std::size_t N>
std::string to_string(const Laurent<N> &p, const std::array<std::string_view, N> &vars)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[e, c] : p.terms()) {
        std::string m = detail::abs_monomial<N>(e, c, vars);
        if (m.empty()) m = "1";
        if (c < 0) out += "-";
        else if (!first) out += "+";
        out += m;
        first = false;
    }
    return out;
}

inline std::string to_string(const QPolynomial &p) { return to_string<1>(p, {"q"}); }
inline std::string to_string(const BiPolynomial &p) { return to_string<2>(p, {"q", "v"}); }

inline std::string to_string(const RationalFunction &r)
{
    return "(" + to_string(r.numerator()) + ")/(" + to_string(r.denominator()) + ")";
}

/// Canonical text of an x-polynomial: ascending x-exponent, e.g.
/// "q^3*x^-1 + (q^2+q^4) + (q+q^3)*x + x^2".
template <std::size_t N>
std::string to_string(const XPolynomial<Laurent<N>> &p, const std::array<std::string_view, N> &vars)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[k, c] : p.terms()) {
        const std::string xs = detail::power("x", k);
        std::string body;
        bool negative = false;
        if (c.size() == 1) {
            const auto &[e, a] = *c.terms().begin();
            negative = a < 0;
            body = detail::abs_monomial<N>(e, a, vars);
            if (body.empty()) body = xs.empty() ? "1" : xs;
            else if (!xs.empty()) body += "*" + xs;
        } else {
            body = "(" + to_string<N>(c, vars) + ")";
            if (!xs.empty()) body += "*" + xs;
        }
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        out += body;
        first = false;
    }
    return out;
}

inline std::string to_string(const QXPolynomial &p) { return to_string<1>(p, {"q"}); }

inline std::string to_string(const RationalXPolynomial &p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto &[k, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += "(" + to_string(c) + ")";
        if (k != 0) out += "*" + detail::power("x", k);
    }
    return out;
}

/// JSON term list: [{"x": int, "q": int, ..., "coeff": "digits"}], canonical order.
template <std::size_t N>
nlohmann::json to_json(const XPolynomial<Laurent<N>> &p, const std::array<std::string_view, N> &vars)
{
    auto terms = nlohmann::json::array();
    for (const auto &[k, c] : p.terms()) {
        for (const auto &[e, a] : c.terms()) {
            nlohmann::json t;
            t["x"] = k;
            for (std::size_t i = 0; i < N; ++i) t[std::string(vars[i])] = e[i];
            t["coeff"] = a.get_str();
            terms.push_back(std::move(t));
        }
    }
    return terms;
}

inline nlohmann::json to_json(const QXPolynomial &p) { return to_json<1>(p, {"q"}); }

template <std::size_t N>
nlohmann::json to_json(const Laurent<N> &p, const std::array<std::string_view, N> &vars)
{
    auto terms = nlohmann::json::array();
    for (const auto &[e, a] : p.terms()) {
        nlohmann::json t;
        for (std::size_t i = 0; i < N; ++i) t[std::string(vars[i])] = e[i];
        t["coeff"] = a.get_str();
        terms.push_back(std::move(t));
    }
    return terms;
}

inline nlohmann::json to_json(const RationalXPolynomial &p)
{
    auto terms = nlohmann::json::array();
    for (const auto &[k, c] : p.terms()) {
        terms.push_back({{"x", k},
                         {"numerator", to_json<2>(c.numerator(), {"q", "v"})},
                         {"denominator", to_json<2>(c.denominator(), {"q", "v"})}});
    }
    return terms;
}

/// Inverse of to_json for q-graded x-polynomials.
inline QXPolynomial qx_from_json(const nlohmann::json &terms)
{
    QXPolynomial p;
    for (const auto &t : terms) {
        p.add_term(t.at("x").get<int>(), q_power(t.at("q").get<int>(), Integer(t.at("coeff").get<std::string>())));
    }
    return p;
}

} // namespace ospm

#endif
