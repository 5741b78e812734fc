#pragma once

#include "liediff/lie.hpp"
#include "liediff/linalg.hpp"

#include <vector>

namespace liediff {

// (a_{i,j}) defining new derivations D'_i = sum_j a_{i,j} D_j.
using BasisMatrix = FieldMatrix;

// M_{i,j} = D_i(x_j) over the declared generators.
FieldMatrix evaluation_matrix(const Presentation& p);

struct IndependenceCertificate {
    enum class Verdict { Independent, Dependent };

    Verdict verdict = Verdict::Dependent;
    // Dependent: nonzero b with sum_i b_i D_i(x_j) = 0 for every generator.
    std::vector<RatFunc> dependency;
    // Independent: generator indices whose evaluation minor is invertible,
    // and that minor's determinant.
    std::vector<std::size_t> coordinates;
    RatFunc minor;

    bool independent() const { return verdict == Verdict::Independent; }
};

// A derivation vanishes iff it vanishes on all generators, so independence
// over the field is rank(M) = n.
IndependenceCertificate linear_independence(const Presentation& p);

struct CommutingBasis {
    std::vector<std::size_t> coordinates; // x_{j_1}, ..., x_{j_n}
    BasisMatrix a;                        // inverse of W = (D_i(x_{j_k}))
    std::vector<DerivationAction> derivations;
};

/// Commuting basis by coordinate normalization: picks the first generator
/// subset (lex order) with invertible W, sets A = W^{-1} so that the new
/// derivations satisfy D'_i(x_{j_k}) = [i == k], then verifies that they
/// commute on every generator.
///
/// Throws NotIndependent, NoCoordinateSubset, or CommutationFailure.
CommutingBasis commuting_basis(const Presentation& p);

struct BasisChangeViolation {
    std::size_t l, k, j;
    RatFunc residual;
};

// residual(l,k,j) = sum_i (a_{l,i} D_i(a_{k,j}) - a_{k,i} D_i(a_{l,j}))
//                 + sum_{r,s} a_{l,r} a_{k,s} alpha^j_{rs} - sum_m beta^m_{lk} a_{m,j}
// for every (l,k,j); the entry for (l,k,j) lives at index (l*n + k)*n + j.
std::vector<RatFunc> basis_change_residuals(const BasisMatrix& a, const StructureConstants& beta,
                                            const Presentation& p);

// Nonzero residuals only. Empty iff the rows of A span derivations with
// structure constants beta (given independent D_i).
std::vector<BasisChangeViolation> change_basis_check(const BasisMatrix& a, const StructureConstants& beta,
                                                     const Presentation& p);

// change_basis_check with beta = 0.
std::vector<BasisChangeViolation> commuting_check(const BasisMatrix& a, const Presentation& p);

// True iff the rows of x give a linearly independent set of commuting
// derivations: x invertible, the D_i independent, and commuting_check passes.
bool axiom2_witness_check(const BasisMatrix& x, const Presentation& p);
bool axiom2_witness_check(std::span<const RatFunc> entries, const Presentation& p);

} // namespace liediff
