#pragma once

#include "liediff/ops.hpp"

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace liediff {

/// A polynomial indeterminate of the normal-polynomial ring: either X_I,
/// standing for D^I of a generic element, or a placeholder slot S[j] that is
/// substituted by a field element before evaluation.
struct Indeterminate {
    enum class Kind : std::uint8_t { X, Slot };

    Kind kind = Kind::X;
    MultiIndex index;     // Kind::X
    std::size_t slot = 0; // Kind::Slot, 0-based

    static Indeterminate x(MultiIndex index) { return {Kind::X, std::move(index), 0}; }
    static Indeterminate placeholder(std::size_t slot) { return {Kind::Slot, MultiIndex{}, slot}; }

    friend bool operator==(const Indeterminate&, const Indeterminate&) = default;
};

// X before slots; X_I ordered by (|I|, lex on I) ascending.
struct IndeterminateLess {
    bool operator()(const Indeterminate& a, const Indeterminate& b) const;
};

// Indeterminate -> positive exponent.
using XMonomial = std::map<Indeterminate, std::uint32_t, IndeterminateLess>;

// Graded order on XMonomial, larger monomials first.
struct XMonomialGreater {
    bool operator()(const XMonomial& a, const XMonomial& b) const;
};

/// Element of A[{X_I}] (plus optional placeholder slots) with coefficients in
/// the base field. No zero coefficients are stored.
class NormalPoly {
public:
    using Terms = std::map<XMonomial, RatFunc, XMonomialGreater>;

    NormalPoly(std::size_t dim = 0, std::size_t nvars = 0) : dim_(dim), nvars_(nvars) {}

    static NormalPoly constant(std::size_t dim, const RatFunc& c);
    static NormalPoly x(const MultiIndex& index, std::size_t nvars);
    static NormalPoly placeholder(std::size_t dim, std::size_t nvars, std::size_t slot);
    static NormalPoly term(std::size_t dim, const XMonomial& m, const RatFunc& c);

    std::size_t dim() const { return dim_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Largest |I| among the X_I that occur (0 if none).
    std::uint64_t max_order() const;
    bool has_placeholders() const;

    void add_term(const XMonomial& m, const RatFunc& c);

    NormalPoly operator-() const;
    friend NormalPoly operator+(const NormalPoly& a, const NormalPoly& b);
    friend NormalPoly operator-(const NormalPoly& a, const NormalPoly& b);
    friend NormalPoly operator*(const NormalPoly& a, const NormalPoly& b);
    NormalPoly scaled(const RatFunc& c) const;
    NormalPoly pow(std::uint32_t e) const;

    friend bool operator==(const NormalPoly& a, const NormalPoly& b) {
        return a.dim_ == b.dim_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_;
    std::size_t nvars_;
    Terms terms_;
};

// D_i(X_I) in R_A: the normal form of D_i o D^I read back as sum_J c_J X_J.
NormalPoly derive_indeterminate(std::size_t i, const MultiIndex& index, const Presentation& p);

// The induced derivation D_i on R_A: Leibniz on products, derive() on coefficients.
NormalPoly derive_normal(std::size_t i, const NormalPoly& q, const Presentation& p);

// Substitutes placeholder slot j by extra[j].
NormalPoly substitute_placeholders(const NormalPoly& q, std::span<const RatFunc> extra);

// The structure map X_I -> D^I(b).
RatFunc eval_hom(const NormalPoly& q, const RatFunc& b, const Presentation& p);

// One instance of the "there is b with q(a, {D^I b}) != 0" scheme: true iff
// the value at this candidate witness is nonzero. Does not search for b.
bool axiom1_instance_check(const NormalPoly& q, std::span<const RatFunc> extra, const RatFunc& b,
                           const Presentation& p);

/// R_A truncated at order d: the variables X_I with |I| <= d, and the
/// derivation actions D_i(X_I) for |I| < d. Requests beyond that raise
/// TruncationExceeded.
class TruncatedExtension {
public:
    TruncatedExtension(Presentation base, std::uint32_t order_bound);

    const Presentation& base() const { return base_; }
    std::uint32_t order_bound() const { return order_bound_; }

    // X_I for |I| <= d, in (|I|, lex) order.
    const std::vector<MultiIndex>& variables() const { return variables_; }

    const NormalPoly& action(std::size_t i, const MultiIndex& index) const;
    NormalPoly derive(std::size_t i, const NormalPoly& q) const;

private:
    Presentation base_;
    std::uint32_t order_bound_;
    std::vector<MultiIndex> variables_;
    std::map<std::pair<std::size_t, MultiIndex>, NormalPoly> actions_;
};

TruncatedExtension fresh_extension(const Presentation& p, std::uint32_t order_bound);

// All multi-indices of length n with |I| <= d, ordered by (|I|, lex).
std::vector<MultiIndex> multi_indices_up_to(std::size_t n, std::uint32_t d);

std::string to_string(const Indeterminate& x);
std::string to_string(const NormalPoly& q, std::span<const std::string> names);

} // namespace liediff
