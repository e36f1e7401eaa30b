#ifndef OSPM_TESTS_SUPPORT_HPP
#define OSPM_TESTS_SUPPORT_HPP

#include <array>
#include <initializer_list>
#include <random>

#include <ospm/ospm.hpp>

namespace ospm::test
{

// {x-exponent, q-exponent, coefficient}
inline QXPolynomial poly(std::initializer_list<std::array<long, 3>> terms)
{
    QXPolynomial p;
    for (const auto &[x, q, c] : terms) p.add_term(static_cast<int>(x), q_power(static_cast<int>(q), Integer(c)));
    return p;
}

inline std::mt19937 &rng()
{
    static std::mt19937 gen(20240611u);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline QPolynomial random_q(int max_terms = 4, int span = 4, int coeff = 5)
{
    QPolynomial p;
    const int k = uniform(0, max_terms);
    for (int i = 0; i < k; ++i) p.add_term({uniform(-span, span)}, Integer(uniform(-coeff, coeff)));
    return p;
}

inline BiPolynomial random_qv(int max_terms = 4, int span = 3, int coeff = 4)
{
    BiPolynomial p;
    const int k = uniform(0, max_terms);
    for (int i = 0; i < k; ++i) p.add_term({uniform(-span, span), uniform(-span, span)}, Integer(uniform(-coeff, coeff)));
    return p;
}

inline QXPolynomial random_qx(int max_terms = 4, int span = 3)
{
    QXPolynomial p;
    const int k = uniform(0, max_terms);
    for (int i = 0; i < k; ++i) p.add_term(uniform(-span, span), random_q(3, span));
    return p;
}

} // namespace ospm::test

#endif
