#pragma once

#include "liediff/lie.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace liediff {

/// Exponent vector I = <i_1,...,i_n>; D^I = D_1^{i_1} D_2^{i_2} ... D_n^{i_n}.
struct MultiIndex {
    std::vector<std::uint32_t> exponents;

    MultiIndex() = default;
    explicit MultiIndex(std::size_t n) : exponents(n, 0) {}
    explicit MultiIndex(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    static MultiIndex unit(std::size_t n, std::size_t i);

    std::size_t size() const { return exponents.size(); }
    std::uint32_t operator[](std::size_t i) const { return exponents[i]; }
    std::uint64_t order() const;

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

// (order, lex) descending: the canonical printing order of operator terms.
struct NormalOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Derivation symbol D_{index+1} inside an operator word.
struct Symbol {
    std::size_t index;
    friend bool operator==(const Symbol&, const Symbol&) = default;
};

using OpFactor = std::variant<RatFunc, Symbol>;

/// Sum of words; each word is an arbitrary product of coefficients and
/// derivation symbols read as left-to-right composition.
struct OpWord {
    std::vector<std::vector<OpFactor>> terms;
};

/// Sum_I c_I D^I with every monomial in normal order and no zero coefficients.
class NormalOperator {
public:
    using Terms = std::map<MultiIndex, RatFunc, NormalOrder>;

    NormalOperator(std::size_t dim = 0, std::size_t nvars = 0) : dim_(dim), nvars_(nvars) {}

    static NormalOperator identity(std::size_t dim, std::size_t nvars);
    static NormalOperator monomial(const MultiIndex& index, const RatFunc& coeff);
    static NormalOperator first_order(std::span<const RatFunc> coeffs);

    std::size_t dim() const { return dim_; }
    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t order() const;

    void add_term(const MultiIndex& index, const RatFunc& coeff);
    RatFunc coefficient(const MultiIndex& index) const;

    friend bool operator==(const NormalOperator& a, const NormalOperator& b) {
        return a.dim_ == b.dim_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_;
    std::size_t nvars_;
    Terms terms_;
};

// Which redex a normalization step rewrites first. LeftmostFirst picks the
// outermost (leftmost) redex of a word, RightmostFirst the innermost one,
// i.e. the pair acting first when the word is applied.
enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

// Optional instrumentation for normalize().
struct RewriteStats {
    std::size_t steps = 0;
    // Rewrites whose child did not strictly decrease the termination measure
    // (symbol count, inversions, coefficient displacement). Always 0 if sound.
    std::size_t measure_violations = 0;
};

// Rewrites every word into normal order using
//   (R1) D_k c   -> c D_k + D_k(c)
//   (R2) D_k D_l -> D_l D_k + sum_m alpha^m_{kl} D_m   (k > l)
// and collects the result. Throws UnknownDerivation / UnknownVariable.
NormalOperator normalize(const OpWord& word, const Presentation& p,
                         RewriteStrategy strategy = RewriteStrategy::LeftmostFirst, RewriteStats* stats = nullptr);

OpWord to_word(const NormalOperator& a);

NormalOperator op_add(const NormalOperator& a, const NormalOperator& b);
NormalOperator op_sub(const NormalOperator& a, const NormalOperator& b);
NormalOperator op_scale(const RatFunc& c, const NormalOperator& a);
// Normal form of the composition a o b.
NormalOperator op_mul(const NormalOperator& a, const NormalOperator& b, const Presentation& p);
NormalOperator op_commutator(const NormalOperator& a, const NormalOperator& b, const Presentation& p);

// Iterated derivation, D^I f = D_1^{i_1}(...(D_n^{i_n} f)).
RatFunc apply_monomial(const MultiIndex& index, const RatFunc& f, const Presentation& p);
RatFunc apply_operator(const NormalOperator& a, const RatFunc& f, const Presentation& p);
// Direct semantics of an unnormalized word: factors act right to left.
RatFunc apply_operator(const OpWord& w, const RatFunc& f, const Presentation& p);

/// Coefficients of [sum_i u_i D_i, sum_i v_i D_i] in the basis D_j:
///   w_j = sum_i (u_i D_i(v_j) - v_i D_i(u_j)) + sum_{r,s} u_r v_s alpha^j_{rs}.
std::vector<RatFunc> first_order_commutator(std::span<const RatFunc> u, std::span<const RatFunc> v,
                                            const Presentation& p);

std::string to_string(const NormalOperator& a, std::span<const std::string> names);

} // namespace liediff
