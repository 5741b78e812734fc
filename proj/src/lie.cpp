#include "liediff/lie.hpp"

#include "liediff/errors.hpp"

#include <sstream>

namespace liediff {

StructureConstants::StructureConstants(std::size_t dim, std::size_t nvars)
    : dim_(dim), nvars_(nvars), entries_(dim * dim * dim, RatFunc(nvars)) {}

void StructureConstants::set(std::size_t k, std::size_t l, std::size_t m, RatFunc value) {
    if (k >= dim_ || l >= dim_ || m >= dim_) throw Error(ErrorCode::IndexOutOfRange, "structure constant index");
    if (value.nvars() != nvars_) throw Error(ErrorCode::ArityMismatch, "structure constant over wrong field");
    entries_[index(k, l, m)] = std::move(value);
}

bool StructureConstants::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool StructureConstants::all_constant() const {
    for (const auto& e : entries_)
        if (!e.is_constant()) return false;
    return true;
}

std::vector<AntisymmetryViolation> validate_antisymmetry(const StructureConstants& alpha) {
    std::vector<AntisymmetryViolation> out;
    const std::size_t n = alpha.dim();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k; l < n; ++l)
            for (std::size_t m = 0; m < n; ++m) {
                RatFunc s = alpha.at(k, l, m) + alpha.at(l, k, m);
                if (!s.is_zero()) out.push_back({k, l, m, std::move(s)});
            }
    return out;
}

std::vector<JacobiViolation> validate_jacobi(const StructureConstants& alpha) {
    if (!alpha.all_constant())
        throw Error(ErrorCode::NonConstantStructureConstants, "Jacobi check needs constant structure constants");
    const std::size_t n = alpha.dim();
    std::vector<Rational> a(n * n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t m = 0; m < n; ++m) a[(k * n + l) * n + m] = alpha.at(k, l, m).constant_value();
    auto at = [&](std::size_t k, std::size_t l, std::size_t m) -> const Rational& { return a[(k * n + l) * n + m]; };

    std::vector<JacobiViolation> out;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
            for (std::size_t m = l + 1; m < n; ++m)
                for (std::size_t q = 0; q < n; ++q) {
                    Rational s = 0;
                    for (std::size_t p = 0; p < n; ++p)
                        s += at(k, l, p) * at(p, m, q) + at(l, m, p) * at(p, k, q) + at(m, k, p) * at(p, l, q);
                    if (sgn(s) != 0) out.push_back({k, l, m, q, RatFunc::constant(alpha.nvars(), s)});
                }
    return out;
}

void require_consistent_shape(const Presentation& p) {
    const std::size_t t = p.nvars();
    const std::size_t n = p.dim();
    if (n == 0) throw Error(ErrorCode::ArityMismatch, "a presentation needs at least one derivation");
    for (const auto& d : p.derivations)
        if (d.nvars() != t) throw Error(ErrorCode::ArityMismatch, "derivation " + d.name + " has wrong arity");
    if (p.alpha.dim() != n || p.alpha.nvars() != t)
        throw Error(ErrorCode::ArityMismatch, "structure constants do not match the presentation");
}

PresentationReport check_presentation(const Presentation& p) {
    require_consistent_shape(p);
    PresentationReport report;
    report.antisymmetry = validate_antisymmetry(p.alpha);
    const std::size_t n = p.dim();
    const std::size_t t = p.nvars();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
            for (std::size_t v = 0; v < t; ++v) {
                const auto& dk = p.derivations[k];
                const auto& dl = p.derivations[l];
                RatFunc r = derive(dk, dl.images[v]) - derive(dl, dk.images[v]);
                for (std::size_t m = 0; m < n; ++m) {
                    if (p.alpha.at(k, l, m).is_zero()) continue;
                    r -= p.alpha.at(k, l, m) * p.derivations[m].images[v];
                }
                if (!r.is_zero()) report.bracket.push_back({k, l, v, std::move(r)});
            }
    return report;
}

std::string describe(const PresentationReport& report, const Presentation& p) {
    std::ostringstream os;
    for (const auto& v : report.antisymmetry)
        os << "antisymmetry violated at (" << v.k + 1 << "," << v.l + 1 << "," << v.m + 1
           << "): alpha + alpha' = " << to_string(v.sum, p.variables) << "\n";
    for (const auto& v : report.bracket)
        os << "bracket axiom violated at (" << v.k + 1 << "," << v.l + 1 << ") on " << p.variables[v.var]
           << ": residual " << to_string(v.residual, p.variables) << "\n";
    return os.str();
}

} // namespace liediff
