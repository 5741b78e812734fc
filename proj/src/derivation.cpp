#include "liediff/derivation.hpp"

#include "liediff/errors.hpp"

namespace liediff {

namespace {

// D applied to a polynomial: sum_v dp/dv * D(x_v).
RatFunc derive_poly(const DerivationAction& d, const MPoly& p) {
    RatFunc out(p.nvars());
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        if (d.images[v].is_zero() || p.degree_in(v) == 0) continue;
        out += RatFunc(p.partial(v)) * d.images[v];
    }
    return out;
}

} // namespace

RatFunc derive(const DerivationAction& d, const RatFunc& f) {
    if (f.nvars() != d.nvars())
        throw Error(ErrorCode::UnknownVariable,
                    "element over " + std::to_string(f.nvars()) + " variables, derivation " + d.name +
                        " acts on " + std::to_string(d.nvars()));
    if (f.is_constant()) return RatFunc(f.nvars());
    const RatFunc dn = derive_poly(d, f.num());
    if (f.den().is_constant()) return dn * RatFunc::constant(f.nvars(), 1 / f.den().constant_value());
    // Quotient rule.
    const RatFunc den(f.den());
    const RatFunc num(f.num());
    return (dn * den - num * derive_poly(d, f.den())) / (den * den);
}

DerivationAction coordinate_delta(std::size_t nvars, std::size_t index) {
    if (index >= nvars)
        throw Error(ErrorCode::IndexOutOfRange,
                    "coordinate " + std::to_string(index + 1) + " but only " + std::to_string(nvars) + " variables");
    DerivationAction d{"delta" + std::to_string(index + 1), std::vector<RatFunc>(nvars, RatFunc(nvars))};
    d.images[index] = RatFunc::constant(nvars, 1);
    return d;
}

DerivationAction combine(const std::string& name, const std::vector<RatFunc>& coeffs,
                         const std::vector<DerivationAction>& actions) {
    if (coeffs.size() != actions.size() || actions.empty())
        throw Error(ErrorCode::ArityMismatch, "coefficient count does not match derivation count");
    const std::size_t t = actions.front().nvars();
    DerivationAction out{name, std::vector<RatFunc>(t, RatFunc(t))};
    for (std::size_t j = 0; j < actions.size(); ++j) {
        if (actions[j].nvars() != t) throw Error(ErrorCode::ArityMismatch, "derivations over different fields");
        if (coeffs[j].is_zero()) continue;
        for (std::size_t v = 0; v < t; ++v) out.images[v] += coeffs[j] * actions[j].images[v];
    }
    return out;
}

} // namespace liediff
