#include "liediff/ratfunc.hpp"

#include "liediff/errors.hpp"

#include <algorithm>

namespace liediff {

namespace {

void require_same_arity(const MPoly& a, const MPoly& b) {
    if (a.nvars() != b.nvars())
        throw Error(ErrorCode::ArityMismatch, "rational functions over different variable sets");
}

// Scale (num, den) by the unique positive rational making every coefficient
// an integer with overall gcd 1, then fix the sign of den's leading term.
void normalize_scalars(MPoly& num, MPoly& den) {
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto* p : {&num, &den}) {
        for (const auto& [e, c] : p->terms()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        }
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(den.leading_coefficient()) < 0) scale = -scale;
    if (scale != 1) {
        num = num.scaled(scale);
        den = den.scaled(scale);
    }
}

} // namespace

RatFunc::RatFunc(std::size_t nvars) : num_(nvars), den_(MPoly::constant(nvars, Rational(1))) {}

RatFunc::RatFunc(const MPoly& num, const MPoly& den) : RatFunc(ratfunc_normalize(num, den)) {}

RatFunc::RatFunc(const MPoly& poly)
    : RatFunc(ratfunc_normalize(poly, MPoly::constant(poly.nvars(), Rational(1)))) {}

RatFunc RatFunc::constant(std::size_t nvars, const Rational& c) {
    return RatFunc(MPoly::constant(nvars, c));
}

RatFunc RatFunc::variable(std::size_t nvars, std::size_t index) {
    return RatFunc(MPoly::variable(nvars, index));
}

Rational RatFunc::constant_value() const {
    if (is_zero()) return Rational(0);
    return num_.constant_value() / den_.constant_value();
}

RatFunc ratfunc_normalize(const MPoly& num, const MPoly& den) {
    require_same_arity(num, den);
    if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
    const std::size_t n = num.nvars();
    if (num.is_zero()) return RatFunc(n);

    MPoly p = num;
    MPoly q = den;
    if (!p.is_constant() && !q.is_constant()) {
        const MPoly g = gcd(p, q);
        if (!g.is_constant()) {
            p = exact_quotient(p, g);
            q = exact_quotient(q, g);
        }
    }
    normalize_scalars(p, q);
    return RatFunc(RatFunc::Canonical{}, std::move(p), std::move(q));
}

RatFunc RatFunc::operator-() const {
    return RatFunc(Canonical{}, -num_, den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    require_same_arity(a.num_, b.num_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return ratfunc_normalize(a.num_ + b.num_, a.den_);
    return ratfunc_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    require_same_arity(a.num_, b.num_);
    if (a.is_zero() || b.is_zero()) return RatFunc(a.nvars());
    if (a.is_polynomial() && b.is_polynomial())
        return ratfunc_normalize(a.num_ * b.num_, a.den_ * b.den_);
    // Cross-cancel first to keep intermediate degrees small.
    const MPoly g1 = gcd(a.num_, b.den_);
    const MPoly g2 = gcd(b.num_, a.den_);
    return ratfunc_normalize(exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2),
                             exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1));
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return ratfunc_normalize(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return a * b.inverse();
}

RatFunc RatFunc::pow(std::uint32_t e) const {
    // Powers of a reduced fraction stay reduced up to scalars.
    return ratfunc_normalize(num_.pow(e), den_.pow(e));
}

std::string to_string(const RatFunc& f, std::span<const std::string> names) {
    if (f.is_polynomial()) {
        const Rational d = f.den().constant_value();
        if (d == 1) return to_string(f.num(), names);
        std::string num = to_string(f.num(), names);
        if (f.num().num_terms() > 1) num = "(" + num + ")";
        return num + "/" + to_string(d);
    }
    std::string num = to_string(f.num(), names);
    if (f.num().num_terms() > 1) num = "(" + num + ")";
    std::string den = to_string(f.den(), names);
    const auto& dt = f.den().terms();
    const bool single_power =
        dt.size() == 1 && dt.begin()->second == 1 &&
        std::count_if(dt.begin()->first.begin(), dt.begin()->first.end(), [](auto x) { return x != 0; }) == 1;
    if (!single_power) den = "(" + den + ")";
    return num + "/" + den;
}

std::string factor_text(const RatFunc& f, std::span<const std::string> names) {
    std::string s = to_string(f, names);
    if (f.is_polynomial() && f.den().constant_value() == 1 && f.num().num_terms() > 1) return "(" + s + ")";
    return s;
}

void append_signed_term(std::string& out, bool first, const RatFunc& c, const std::string& monomial,
                        std::span<const std::string> names) {
    const bool negative = c.has_negative_lead();
    const RatFunc mag = negative ? -c : c;
    if (first) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    if (monomial.empty()) {
        out += (first && !negative) ? to_string(c, names) : factor_text(mag, names);
    } else if (mag.is_constant() && mag.constant_value() == 1) {
        out += monomial;
    } else {
        out += factor_text(mag, names) + "*" + monomial;
    }
}

} // namespace liediff
