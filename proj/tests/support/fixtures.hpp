#pragma once

// Shared presentations, seeded random generators and independent oracles
// for the test binaries.

#include "liediff/frobenius.hpp"
#include "liediff/normalpoly.hpp"
#include "liediff/ops.hpp"

#include <random>
#include <string>
#include <vector>

namespace liediff::testing {

inline RatFunc fx(std::size_t nvars, long v) { return RatFunc::constant(nvars, Rational(v)); }
inline RatFunc var(std::size_t nvars, std::size_t i) { return RatFunc::variable(nvars, i); }

inline Presentation make_presentation(std::vector<std::string> vars, std::vector<std::vector<RatFunc>> images) {
    Presentation p;
    p.variables = std::move(vars);
    for (std::size_t i = 0; i < images.size(); ++i)
        p.derivations.push_back({"D" + std::to_string(i + 1), std::move(images[i])});
    p.alpha = StructureConstants(p.dim(), p.nvars());
    return p;
}

// vars x,y; D1 = d/dx, D2 = x d/dx + d/dy; [D1,D2] = D1.
inline Presentation p1() {
    auto p = make_presentation({"x", "y"}, {{fx(2, 1), fx(2, 0)}, {var(2, 0), fx(2, 1)}});
    p.alpha.set(0, 1, 0, fx(2, 1));
    p.alpha.set(1, 0, 0, fx(2, -1));
    return p;
}

// vars x,y; D1 = d/dx, D2 = d/dy.
inline Presentation p_abelian() {
    return make_presentation({"x", "y"}, {{fx(2, 1), fx(2, 0)}, {fx(2, 0), fx(2, 1)}});
}

// vars x,y; D1 = d/dx, D2 = x d/dx (dependent over the field); [D1,D2] = D1.
inline Presentation p_dependent() {
    auto p = make_presentation({"x", "y"}, {{fx(2, 1), fx(2, 0)}, {var(2, 0), fx(2, 0)}});
    p.alpha.set(0, 1, 0, fx(2, 1));
    p.alpha.set(1, 0, 0, fx(2, -1));
    return p;
}

// vars x,y,z; D1 = d/dx, D2 = d/dy + x d/dz. [D1,D2] = d/dz leaves the span,
// so the presentation is invalid; useful only for negative tests.
inline Presentation p_three_invalid() {
    const RatFunc x = var(3, 0);
    return make_presentation({"x", "y", "z"}, {{fx(3, 1), fx(3, 0), fx(3, 0)}, {fx(3, 0), fx(3, 1), x}});
}

// Constant structure constants of sl2 in the basis (H, E, F):
// [H,E] = 2E, [H,F] = -2F, [E,F] = H; optionally [E,F] = E instead.
inline StructureConstants sl2_constants(bool perturbed) {
    StructureConstants c(3, 0);
    const auto put = [&](std::size_t k, std::size_t l, std::size_t m, long v) {
        c.set(k, l, m, fx(0, v));
        c.set(l, k, m, fx(0, -v));
    };
    put(0, 1, 1, 2);
    put(0, 2, 2, -2);
    put(1, 2, perturbed ? 1 : 0, 1);
    return c;
}

/// Seeded generator of random field elements, operator words and normal
/// polynomials. Every test that uses it passes a fixed seed.
class Random {
public:
    explicit Random(std::uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }

    Rational rational() {
        Rational q(integer(-6, 6), integer(1, 4));
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational() {
        for (;;) {
            Rational q = rational();
            if (q != 0) return q;
        }
    }

    MPoly poly(std::size_t nvars, std::uint32_t max_degree, std::size_t max_terms = 4) {
        MPoly p(nvars);
        const std::size_t terms = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
        for (std::size_t t = 0; t < terms; ++t) {
            Exponents e(nvars, 0);
            auto budget = static_cast<std::uint32_t>(integer(0, max_degree));
            for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
                const auto take = static_cast<std::uint32_t>(integer(0, budget));
                e[v] = take;
                budget -= take;
            }
            p.add_term(e, rational());
        }
        return p;
    }

    MPoly nonzero_poly(std::size_t nvars, std::uint32_t max_degree, std::size_t max_terms = 4) {
        for (;;) {
            MPoly p = poly(nvars, max_degree, max_terms);
            if (!p.is_zero()) return p;
        }
    }

    RatFunc polynomial(std::size_t nvars, std::uint32_t max_degree, std::size_t max_terms = 4) {
        return RatFunc(poly(nvars, max_degree, max_terms));
    }

    // Polynomial most of the time, otherwise a quotient with a small denominator.
    RatFunc field(std::size_t nvars, std::uint32_t max_degree, double fraction_rate = 0.3) {
        if (!coin(fraction_rate)) return polynomial(nvars, max_degree);
        return RatFunc(poly(nvars, max_degree), nonzero_poly(nvars, 1, 2));
    }

    // Random word of at most `max_length` factors mixing symbols and coefficients.
    std::vector<OpFactor> word(const Presentation& p, std::size_t max_length, std::uint32_t coeff_degree) {
        std::vector<OpFactor> w;
        const auto length = static_cast<std::size_t>(integer(1, static_cast<long>(max_length)));
        for (std::size_t k = 0; k < length; ++k) {
            if (coin(0.65))
                w.push_back(Symbol{static_cast<std::size_t>(integer(0, static_cast<long>(p.dim()) - 1))});
            else
                w.push_back(polynomial(p.nvars(), coeff_degree, 3));
        }
        return w;
    }

    OpWord op_word(const Presentation& p, std::size_t max_length, std::uint32_t coeff_degree, std::size_t max_terms = 2) {
        OpWord w;
        const auto terms = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
        for (std::size_t t = 0; t < terms; ++t) w.terms.push_back(word(p, max_length, coeff_degree));
        return w;
    }

    std::vector<RatFunc> first_order(const Presentation& p, std::uint32_t degree) {
        std::vector<RatFunc> c;
        for (std::size_t i = 0; i < p.dim(); ++i) c.push_back(polynomial(p.nvars(), degree, 3));
        return c;
    }

    MultiIndex multi_index(std::size_t n, std::uint32_t max_order) {
        MultiIndex idx(n);
        auto budget = static_cast<std::uint32_t>(integer(0, max_order));
        for (std::size_t i = 0; i < n && budget > 0; ++i) {
            const auto take = i + 1 == n ? budget : static_cast<std::uint32_t>(integer(0, budget));
            idx.exponents[i] = take;
            budget -= take;
        }
        return idx;
    }

    // Sum of up to `max_terms` products of at most two X_I with |I| <= max_order.
    NormalPoly normal_poly(const Presentation& p, std::uint32_t max_order, std::uint32_t coeff_degree,
                           std::size_t max_terms = 3) {
        NormalPoly q(p.dim(), p.nvars());
        const auto terms = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
        for (std::size_t t = 0; t < terms; ++t) {
            XMonomial m;
            const auto factors = integer(0, 2);
            for (long f = 0; f < factors; ++f) m[Indeterminate::x(multi_index(p.dim(), max_order))] += 1;
            q.add_term(m, polynomial(p.nvars(), coeff_degree, 2));
        }
        return q;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Value of an MPoly at a rational point, by plain term-by-term summation.
inline Rational eval_at(const MPoly& p, const std::vector<Rational>& point) {
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            for (std::uint32_t k = 0; k < e[v]; ++k) t *= point[v];
        sum += t;
    }
    return sum;
}

inline Rational eval_at(const RatFunc& f, const std::vector<Rational>& point) {
    return eval_at(f.num(), point) / eval_at(f.den(), point);
}

/// Dual number a + b*eps with eps^2 = 0: forward-mode differentiation used
/// as an oracle for derive().
struct Dual {
    Rational a, b;
};
inline Dual operator+(const Dual& u, const Dual& v) { return {u.a + v.a, u.b + v.b}; }
inline Dual operator*(const Dual& u, const Dual& v) { return {u.a * v.a, u.a * v.b + u.b * v.a}; }

inline Dual eval_dual(const MPoly& p, const std::vector<Dual>& point) {
    Dual sum{0, 0};
    for (const auto& [e, c] : p.terms()) {
        Dual t{c, 0};
        for (std::size_t v = 0; v < e.size(); ++v)
            for (std::uint32_t k = 0; k < e[v]; ++k) t = t * point[v];
        sum = sum + t;
    }
    return sum;
}

// D(f) at `point`, where D(x_j) takes the value images_at[j] there.
inline Rational derivative_at(const RatFunc& f, const std::vector<Rational>& point,
                              const std::vector<Rational>& images_at) {
    std::vector<Dual> d;
    for (std::size_t j = 0; j < point.size(); ++j) d.push_back({point[j], images_at[j]});
    const Dual n = eval_dual(f.num(), d);
    const Dual q = eval_dual(f.den(), d);
    return (n.b * q.a - n.a * q.b) / (q.a * q.a);
}

// A point where none of the given denominators vanish.
inline std::vector<Rational> safe_point(Random& rng, std::size_t nvars, const std::vector<RatFunc>& fs) {
    for (;;) {
        std::vector<Rational> pt;
        for (std::size_t v = 0; v < nvars; ++v) {
            Rational c(rng.integer(-9, 9), rng.integer(1, 5));
            c.canonicalize();
            pt.push_back(c);
        }
        bool ok = true;
        for (const auto& f : fs) ok = ok && eval_at(f.den(), pt) != 0;
        if (ok) return pt;
    }
}

// Lie bracket of two derivations, computed on generators.
inline DerivationAction bracket(const DerivationAction& a, const DerivationAction& b) {
    DerivationAction c{"[" + a.name + "," + b.name + "]", {}};
    for (std::size_t v = 0; v < a.images.size(); ++v) c.images.push_back(derive(a, b.images[v]) - derive(b, a.images[v]));
    return c;
}

inline MultiIndex mi(std::vector<std::uint32_t> e) { return MultiIndex(std::move(e)); }

} // namespace liediff::testing
