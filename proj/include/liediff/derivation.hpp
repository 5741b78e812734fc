#pragma once

#include "liediff/ratfunc.hpp"

#include <string>
#include <vector>

namespace liediff {

/// A derivation of Q(x1,...,xt) given by its values on the generators.
struct DerivationAction {
    std::string name;
    std::vector<RatFunc> images; // images[j] = D(x_j)

    std::size_t nvars() const { return images.size(); }
};

// The unique derivation extending D from the generators: additive, Leibniz,
// zero on Q. Throws UnknownVariable if f lives over a different variable set.
RatFunc derive(const DerivationAction& d, const RatFunc& f);

// delta_i: x_i -> 1, x_j -> 0 (0-based index); throws IndexOutOfRange.
DerivationAction coordinate_delta(std::size_t nvars, std::size_t index);

// Pointwise combination sum_j coeffs[j] * actions[j]; all actions share arity.
DerivationAction combine(const std::string& name, const std::vector<RatFunc>& coeffs,
                         const std::vector<DerivationAction>& actions);

} // namespace liediff
