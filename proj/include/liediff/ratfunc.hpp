#pragma once

#include "liediff/mpoly.hpp"

#include <span>
#include <string>

namespace liediff {

/// Element of Q(x1,...,xt) in canonical form.
///
/// The pair (num, den) is reduced by the polynomial gcd and then scaled so
/// that both sides have integer coefficients with no common integer factor
/// and den has a positive leading coefficient in graded-lex order. Two equal
/// fractions therefore compare equal member-wise, e.g. 2x/4 is stored as
/// (x, 2) and x/2 parses to the same pair.
class RatFunc {
public:
    explicit RatFunc(std::size_t nvars = 0);
    RatFunc(const MPoly& num, const MPoly& den);
    explicit RatFunc(const MPoly& poly);

    static RatFunc constant(std::size_t nvars, const Rational& c);
    static RatFunc variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const { return num_.nvars(); }
    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Rational constant_value() const;
    // Sign of the leading numerator coefficient; used for printing "a - b".
    bool has_negative_lead() const { return !is_zero() && sgn(num_.leading_coefficient()) < 0; }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

    RatFunc inverse() const;
    RatFunc pow(std::uint32_t e) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    friend RatFunc ratfunc_normalize(const MPoly& num, const MPoly& den);
    struct Canonical {};
    RatFunc(Canonical, MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    MPoly num_;
    MPoly den_;
};

// Canonical form of num/den; throws ZeroDenominator when den = 0.
RatFunc ratfunc_normalize(const MPoly& num, const MPoly& den);

// Canonical text, e.g. "(x + 1)/y" or "x/2".
std::string to_string(const RatFunc& f, std::span<const std::string> names);

// Text suitable as the left factor of a product such as "coeff*D1":
// sums are parenthesized, quotients are left as-is (division is left-associative).
std::string factor_text(const RatFunc& f, std::span<const std::string> names);

// Appends "c*monomial" to a sum being printed, with " + " / " - " joining.
// An empty monomial stands for 1.
void append_signed_term(std::string& out, bool first, const RatFunc& c, const std::string& monomial,
                        std::span<const std::string> names);

} // namespace liediff
