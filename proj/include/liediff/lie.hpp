#pragma once

#include "liediff/derivation.hpp"

#include <string>
#include <vector>

namespace liediff {

/// The table alpha^m_{kl} with [D_k, D_l] = sum_m alpha^m_{kl} D_m.
/// Indices are 0-based; text output uses 1-based indices.
class StructureConstants {
public:
    StructureConstants() = default;
    StructureConstants(std::size_t dim, std::size_t nvars);

    std::size_t dim() const { return dim_; }
    std::size_t nvars() const { return nvars_; }

    const RatFunc& at(std::size_t k, std::size_t l, std::size_t m) const { return entries_[index(k, l, m)]; }
    void set(std::size_t k, std::size_t l, std::size_t m, RatFunc value);

    bool is_zero() const;
    bool all_constant() const;

private:
    std::size_t index(std::size_t k, std::size_t l, std::size_t m) const { return (k * dim_ + l) * dim_ + m; }

    std::size_t dim_ = 0;
    std::size_t nvars_ = 0;
    std::vector<RatFunc> entries_;
};

/// Finite presentation of an LDF0 model: the field Q(vars) with n derivations
/// given on generators and the structure constants tying them together.
struct Presentation {
    std::vector<std::string> variables;
    std::vector<DerivationAction> derivations;
    StructureConstants alpha;

    std::size_t dim() const { return derivations.size(); }
    std::size_t nvars() const { return variables.size(); }
};

// alpha^m_{kl} + alpha^m_{lk} != 0, reported once per k <= l.
struct AntisymmetryViolation {
    std::size_t k, l, m;
    RatFunc sum;
};

// Nonzero cyclic sum for the triple k < l < m at output slot q.
struct JacobiViolation {
    std::size_t k, l, m, q;
    RatFunc sum;
};

// D_k D_l v - D_l D_k v - sum_m alpha^m_{kl} D_m v != 0 on generator `var`.
struct BracketViolation {
    std::size_t k, l, var;
    RatFunc residual;
};

struct PresentationReport {
    std::vector<AntisymmetryViolation> antisymmetry;
    std::vector<BracketViolation> bracket;

    bool ok() const { return antisymmetry.empty() && bracket.empty(); }
};

std::vector<AntisymmetryViolation> validate_antisymmetry(const StructureConstants& alpha);

// Requires every entry to be a rational constant (NonConstantStructureConstants otherwise).
std::vector<JacobiViolation> validate_jacobi(const StructureConstants& alpha);

// Checks antisymmetry and the bracket axiom on every declared generator.
// Equality on generators implies equality on the whole field since both
// sides of the axiom are derivations.
PresentationReport check_presentation(const Presentation& p);

// Structural sanity (arity agreement between variables, actions, alpha);
// throws ArityMismatch. Called by loaders before check_presentation.
void require_consistent_shape(const Presentation& p);

std::string describe(const PresentationReport& report, const Presentation& p);

} // namespace liediff
