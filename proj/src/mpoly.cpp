#include "liediff/mpoly.hpp"

#include "liediff/errors.hpp"

#include <algorithm>
#include <optional>

namespace liediff {

std::uint64_t total_degree(const Exponents& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = liediff::total_degree(a);
    const auto db = liediff::total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
    MPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(index));
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(std::move(e), Rational(1));
}

MPoly MPoly::monomial(Exponents exps, const Rational& c) {
    MPoly p(exps.size());
    p.add_term(exps, c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    return liediff::total_degree(terms_.begin()->first) == 0;
}

Rational MPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

std::uint64_t MPoly::total_degree() const {
    return terms_.empty() ? 0 : liediff::total_degree(terms_.begin()->first);
}

std::uint32_t MPoly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MPoly::add_term(const Exponents& exps, const Rational& c) {
    if (exps.size() != nvars_) throw Error(ErrorCode::ArityMismatch, "exponent vector of the wrong length");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

static void check_arity(const MPoly& a, const MPoly& b) {
    if (a.nvars() != b.nvars())
        throw Error(ErrorCode::ArityMismatch, "polynomials over different variable sets");
}

MPoly& MPoly::operator+=(const MPoly& other) {
    check_arity(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
    check_arity(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    check_arity(a, b);
    MPoly r(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r(nvars_);
    if (sgn(c) == 0) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, x * c);
    return r;
}

MPoly MPoly::pow(std::uint32_t e) const {
    MPoly result = constant(nvars_, Rational(1));
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

MPoly MPoly::partial(std::size_t var) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * e[var]);
    }
    return r;
}

std::map<std::uint32_t, MPoly> MPoly::coefficients_in(std::size_t var) const {
    std::map<std::uint32_t, MPoly> out;
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        rest[var] = 0;
        auto [it, _] = out.try_emplace(e[var], nvars_);
        it->second.add_term(rest, c);
    }
    return out;
}

MPoly exact_quotient(const MPoly& a, const MPoly& b) {
    check_arity(a, b);
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact_quotient by zero polynomial");
    MPoly q(a.nvars());
    MPoly r = a;
    const Exponents& lb = b.leading_exponents();
    const Rational& cb = b.leading_coefficient();
    Exponents t(a.nvars());
    while (!r.is_zero()) {
        const Exponents& lr = r.leading_exponents();
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (lr[i] < lb[i]) throw std::logic_error("exact_quotient: divisor does not divide dividend");
            t[i] = lr[i] - lb[i];
        }
        MPoly step = MPoly::monomial(t, r.leading_coefficient() / cb);
        q += step;
        r -= step * b;
    }
    return q;
}

MPoly integer_primitive(const MPoly& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    mpz_class num_gcd = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(p.leading_coefficient()) < 0) scale = -scale;
    return p.scaled(scale);
}

namespace {

std::optional<std::size_t> first_variable(const MPoly& a, const MPoly& b) {
    std::optional<std::size_t> best;
    for (const auto* p : {&a, &b}) {
        for (const auto& [e, c] : p->terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] != 0 && (!best || i < *best)) best = i;
            }
        }
    }
    return best;
}

// Pseudo-remainder of a by b viewed as univariate polynomials in var.
MPoly pseudo_remainder(const MPoly& a, const MPoly& b, std::size_t var) {
    const auto db = b.degree_in(var);
    const auto b_coeffs = b.coefficients_in(var);
    const MPoly& lcb = b_coeffs.rbegin()->second;
    MPoly r = a;
    while (!r.is_zero()) {
        const auto dr = r.degree_in(var);
        if (dr < db) break;
        MPoly lcr = r.coefficients_in(var).rbegin()->second;
        Exponents shift(a.nvars(), 0);
        shift[var] = dr - db;
        r = lcb * r - lcr * MPoly::monomial(shift, Rational(1)) * b;
        r = integer_primitive(r);
    }
    return r;
}

MPoly content_in(const MPoly& p, std::size_t var) {
    MPoly g(p.nvars());
    for (const auto& [d, c] : p.coefficients_in(var)) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

MPoly primitive_part_in(const MPoly& p, std::size_t var) {
    return integer_primitive(exact_quotient(p, content_in(p, var)));
}

} // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    check_arity(a, b);
    if (a.is_zero()) return integer_primitive(b);
    if (b.is_zero()) return integer_primitive(a);
    if (a.is_constant() || b.is_constant()) return MPoly::constant(a.nvars(), Rational(1));

    const std::size_t v = *first_variable(a, b);
    if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
    if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

    const MPoly ca = content_in(a, v);
    const MPoly cb = content_in(b, v);
    const MPoly c = gcd(ca, cb);

    MPoly f = integer_primitive(exact_quotient(a, ca));
    MPoly g = integer_primitive(exact_quotient(b, cb));
    if (f.degree_in(v) < g.degree_in(v)) std::swap(f, g);
    // Primitive polynomial remainder sequence.
    while (true) {
        MPoly r = pseudo_remainder(f, g, v);
        if (r.is_zero()) break;
        if (r.degree_in(v) == 0) {
            g = MPoly::constant(a.nvars(), Rational(1));
            break;
        }
        f = std::move(g);
        g = primitive_part_in(r, v);
    }
    return integer_primitive(c * g);
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

namespace {

std::string monomial_text(const Exponents& e, std::span<const std::string> names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += i < names.size() ? names[i] : "v" + std::to_string(i + 1);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

} // namespace

std::string to_string(const MPoly& p, std::span<const std::string> names) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational mag = abs(c);
        const std::string mono = monomial_text(e, names);
        if (mono.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += to_string(mag) + "*" + mono;
        }
    }
    return out;
}

} // namespace liediff
