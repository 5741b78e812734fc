#include "liediff/frobenius.hpp"

#include "liediff/errors.hpp"


namespace liediff {

FieldMatrix evaluation_matrix(const Presentation& p) {
    require_consistent_shape(p);
    FieldMatrix m(p.dim(), p.nvars(), p.nvars());
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.nvars(); ++j) m(i, j) = p.derivations[i].images[j];
    return m;
}

namespace {

// Advances `subset` to the next k-combination of {0..t-1} in lex order.
bool next_combination(std::vector<std::size_t>& subset, std::size_t t) {
    const std::size_t k = subset.size();
    for (std::size_t i = k; i-- > 0;) {
        if (subset[i] < t - k + i) {
            ++subset[i];
            for (std::size_t j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

IndependenceCertificate linear_independence(const Presentation& p) {
    const FieldMatrix m = evaluation_matrix(p);
    const std::size_t n = p.dim();
    const std::size_t t = p.nvars();
    IndependenceCertificate cert;
    if (n > t || bareiss_rank(m) < n) {
        cert.verdict = IndependenceCertificate::Verdict::Dependent;
        cert.dependency = *null_vector(m.transposed());
        return cert;
    }
    std::vector<std::size_t> subset(n);
    for (std::size_t i = 0; i < n; ++i) subset[i] = i;
    do {
        RatFunc det = bareiss_determinant(m.columns(subset));
        if (!det.is_zero()) {
            cert.verdict = IndependenceCertificate::Verdict::Independent;
            cert.coordinates = subset;
            cert.minor = std::move(det);
            return cert;
        }
    } while (next_combination(subset, t));
    throw Error(ErrorCode::NoCoordinateSubset, "rank is full but no invertible minor was found");
}

CommutingBasis commuting_basis(const Presentation& p) {
    const auto cert = linear_independence(p);
    if (!cert.independent()) throw Error(ErrorCode::NotIndependent, "the derivations are linearly dependent");

    CommutingBasis out;
    out.coordinates = cert.coordinates;
    const auto inv = inverse(evaluation_matrix(p).columns(cert.coordinates));
    if (!inv) throw Error(ErrorCode::NoCoordinateSubset, "selected coordinate minor is singular");
    out.a = *inv;
    for (std::size_t i = 0; i < p.dim(); ++i)
        out.derivations.push_back(combine("Dbar" + std::to_string(i + 1), out.a.row(i), p.derivations));

    // A bracket of derivations is a derivation, so generators suffice.
    for (std::size_t r = 0; r < p.dim(); ++r)
        for (std::size_t s = r + 1; s < p.dim(); ++s)
            for (std::size_t v = 0; v < p.nvars(); ++v) {
                const auto& dr = out.derivations[r];
                const auto& ds = out.derivations[s];
                const RatFunc bracket = derive(dr, ds.images[v]) - derive(ds, dr.images[v]);
                if (!bracket.is_zero())
                    throw Error(ErrorCode::CommutationFailure,
                                "[" + dr.name + "," + ds.name + "](" + p.variables[v] +
                                    ") = " + to_string(bracket, p.variables));
            }
    return out;
}

std::vector<RatFunc> basis_change_residuals(const BasisMatrix& a, const StructureConstants& beta,
                                            const Presentation& p) {
    const std::size_t n = p.dim();
    if (a.rows() != n || a.cols() != n) throw Error(ErrorCode::ArityMismatch, "basis matrix must be n x n");
    if (beta.dim() != n) throw Error(ErrorCode::ArityMismatch, "target structure constants must have dimension n");
    if (a.nvars() != p.nvars() || beta.nvars() != p.nvars())
        throw Error(ErrorCode::ArityMismatch, "basis data over a different field");

    // da[i][m][j] = D_i(a_{m,j})
    std::vector<RatFunc> da(n * n * n, RatFunc(p.nvars()));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t m = 0; m < n; ++m)
            for (std::size_t j = 0; j < n; ++j) da[(i * n + m) * n + j] = derive(p.derivations[i], a(m, j));

    std::vector<RatFunc> out(n * n * n, RatFunc(p.nvars()));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                RatFunc r(p.nvars());
                for (std::size_t i = 0; i < n; ++i)
                    r += a(l, i) * da[(i * n + k) * n + j] - a(k, i) * da[(i * n + l) * n + j];
                for (std::size_t rr = 0; rr < n; ++rr)
                    for (std::size_t s = 0; s < n; ++s)
                        if (!p.alpha.at(rr, s, j).is_zero()) r += a(l, rr) * a(k, s) * p.alpha.at(rr, s, j);
                for (std::size_t m = 0; m < n; ++m)
                    if (!beta.at(l, k, m).is_zero()) r -= beta.at(l, k, m) * a(m, j);
                out[(l * n + k) * n + j] = std::move(r);
            }
    return out;
}

std::vector<BasisChangeViolation> change_basis_check(const BasisMatrix& a, const StructureConstants& beta,
                                                     const Presentation& p) {
    const std::size_t n = p.dim();
    const auto residuals = basis_change_residuals(a, beta, p);
    std::vector<BasisChangeViolation> out;
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) {
                const RatFunc& r = residuals[(l * n + k) * n + j];
                if (!r.is_zero()) out.push_back({l, k, j, r});
            }
    return out;
}

std::vector<BasisChangeViolation> commuting_check(const BasisMatrix& a, const Presentation& p) {
    return change_basis_check(a, StructureConstants(p.dim(), p.nvars()), p);
}

bool axiom2_witness_check(const BasisMatrix& x, const Presentation& p) {
    if (x.rows() != p.dim() || x.cols() != p.dim()) throw Error(ErrorCode::ArityMismatch, "witness must be n x n");
    if (bareiss_determinant(x).is_zero()) return false;
    if (!linear_independence(p).independent()) return false;
    return commuting_check(x, p).empty();
}

bool axiom2_witness_check(std::span<const RatFunc> entries, const Presentation& p) {
    const std::size_t n = p.dim();
    if (entries.size() != n * n)
        throw Error(ErrorCode::ArityMismatch, "witness needs n^2 = " + std::to_string(n * n) + " entries");
    BasisMatrix x(n, n, p.nvars());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x(i, j) = entries[i * n + j];
    return axiom2_witness_check(x, p);
}

} // namespace liediff
