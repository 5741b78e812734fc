#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace liediff {

using Rational = mpq_class;

// One exponent slot per declared variable.
using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e);

// Graded lexicographic order, variables in declaration order; the comparator
// sorts larger monomials first so a term map iterates leading term first.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Zero coefficients are never stored.
class MPoly {
public:
    using Terms = std::map<Exponents, Rational, GrlexGreater>;

    explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static MPoly constant(std::size_t nvars, const Rational& c);
    static MPoly variable(std::size_t nvars, std::size_t index);
    static MPoly monomial(Exponents exps, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant value; zero for the zero polynomial. Only meaningful if is_constant().
    Rational constant_value() const;

    const Exponents& leading_exponents() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }

    std::uint64_t total_degree() const;
    std::uint32_t degree_in(std::size_t var) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& other);
    MPoly& operator-=(const MPoly& other);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    MPoly scaled(const Rational& c) const;
    MPoly pow(std::uint32_t e) const;

    // Formal partial derivative with respect to the given variable.
    MPoly partial(std::size_t var) const;

    // View as a univariate polynomial in `var`; the coefficients have zero
    // exponent in `var`.
    std::map<std::uint32_t, MPoly> coefficients_in(std::size_t var) const;

    void add_term(const Exponents& exps, const Rational& c);

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    std::size_t nvars_;
    Terms terms_;
};

// Exact quotient a / b; throws if b does not divide a.
MPoly exact_quotient(const MPoly& a, const MPoly& b);

// Greatest common divisor over Q, normalized to integer coefficients with
// content 1 and positive leading coefficient. gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

// Scale by a positive rational so all coefficients are coprime integers,
// then fix the sign so the leading coefficient is positive.
MPoly integer_primitive(const MPoly& p);

// Canonical text: descending graded-lex, e.g. "x^2*y - 1/2".
std::string to_string(const MPoly& p, std::span<const std::string> names);

std::string to_string(const Rational& q);

} // namespace liediff
