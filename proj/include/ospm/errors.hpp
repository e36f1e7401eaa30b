#ifndef OSPM_ERRORS_HPP
#define OSPM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ospm
{

// Base of every exception raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DenominatorVanishesAtZero : public Error
{
public:
    DenominatorVanishesAtZero() : Error("denominator vanishes at v = 0") {}
};

class DivergesAtZero : public Error
{
public:
    DivergesAtZero() : Error("rational function has a pole at v = 0") {}
};

class DivergesAtInfinity : public Error
{
public:
    DivergesAtInfinity() : Error("rational function diverges as v -> infinity") {}
};

class NotPolynomial : public Error
{
public:
    explicit NotPolynomial(const std::string &what = "exact division left a remainder") : Error(what) {}
};

class MalformedWalk : public Error
{
public:
    using Error::Error;
};

class BoundExceeded : public Error
{
public:
    explicit BoundExceeded(const std::string &what = "size bound exceeded") : Error(what) {}
};

class RelationViolation : public Error
{
public:
    explicit RelationViolation(std::string bracket)
        : Error("super-bracket relation violated: " + bracket), bracket_(std::move(bracket))
    {
    }
    const std::string &bracket() const noexcept { return bracket_; }

private:
    std::string bracket_;
};

class NotCyclic : public Error
{
public:
    NotCyclic(long reached, long expected)
        : Error("filtration stabilised at dimension " + std::to_string(reached) + " < " + std::to_string(expected)),
          reached_(reached), expected_(expected)
    {
    }
    long reached() const noexcept { return reached_; }
    long expected() const noexcept { return expected_; }

private:
    long reached_;
    long expected_;
};

} // namespace ospm

#endif
