#include "liediff/ops.hpp"

#include "liediff/errors.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace liediff {

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
    MultiIndex m(n);
    m.exponents.at(i) = 1;
    return m;
}

std::uint64_t MultiIndex::order() const {
    std::uint64_t s = 0;
    for (auto e : exponents) s += e;
    return s;
}

bool NormalOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
    return GrlexGreater{}(a.exponents, b.exponents);
}

NormalOperator NormalOperator::identity(std::size_t dim, std::size_t nvars) {
    return monomial(MultiIndex(dim), RatFunc::constant(nvars, 1));
}

NormalOperator NormalOperator::monomial(const MultiIndex& index, const RatFunc& coeff) {
    NormalOperator op(index.size(), coeff.nvars());
    op.add_term(index, coeff);
    return op;
}

NormalOperator NormalOperator::first_order(std::span<const RatFunc> coeffs) {
    if (coeffs.empty()) throw Error(ErrorCode::ArityMismatch, "empty coefficient vector");
    NormalOperator op(coeffs.size(), coeffs.front().nvars());
    for (std::size_t i = 0; i < coeffs.size(); ++i) op.add_term(MultiIndex::unit(coeffs.size(), i), coeffs[i]);
    return op;
}

std::uint64_t NormalOperator::order() const {
    return terms_.empty() ? 0 : terms_.begin()->first.order();
}

void NormalOperator::add_term(const MultiIndex& index, const RatFunc& coeff) {
    if (index.size() != dim_ || coeff.nvars() != nvars_)
        throw Error(ErrorCode::ArityMismatch, "operator term has the wrong shape");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatFunc NormalOperator::coefficient(const MultiIndex& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? RatFunc(nvars_) : it->second;
}

namespace {

using Word = std::vector<OpFactor>;

bool is_symbol(const OpFactor& f) { return std::holds_alternative<Symbol>(f); }
std::size_t symbol_of(const OpFactor& f) { return std::get<Symbol>(f).index; }
const RatFunc& coeff_of(const OpFactor& f) { return std::get<RatFunc>(f); }

void validate_word(const Word& w, const Presentation& p) {
    for (const auto& f : w) {
        if (is_symbol(f)) {
            if (symbol_of(f) >= p.dim())
                throw Error(ErrorCode::UnknownDerivation, "D" + std::to_string(symbol_of(f) + 1));
        } else if (coeff_of(f).nvars() != p.nvars()) {
            throw Error(ErrorCode::UnknownVariable, "coefficient over a different variable set");
        }
    }
}

// Merges adjacent coefficients; returns false if the word became zero.
bool merge_coefficients(Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto& f : w) {
        if (!is_symbol(f)) {
            if (coeff_of(f).is_zero()) return false;
            if (!out.empty() && !is_symbol(out.back())) {
                RatFunc prod = coeff_of(out.back()) * coeff_of(f);
                out.back() = std::move(prod);
                continue;
            }
        }
        out.push_back(std::move(f));
    }
    w = std::move(out);
    return true;
}

using Measure = std::tuple<std::size_t, std::size_t, std::size_t>;

Measure measure(const Word& w) {
    std::size_t symbols = 0, inversions = 0, displacement = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (is_symbol(w[i])) {
            ++symbols;
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (is_symbol(w[j]) && symbol_of(w[j]) < symbol_of(w[i])) ++inversions;
        } else {
            displacement += symbols;
        }
    }
    return {symbols, inversions, displacement};
}

bool is_redex(const Word& w, std::size_t i) {
    if (!is_symbol(w[i])) return false;
    if (!is_symbol(w[i + 1])) return true;
    return symbol_of(w[i]) > symbol_of(w[i + 1]);
}

std::optional<std::size_t> find_redex(const Word& w, RewriteStrategy strategy) {
    if (w.size() < 2) return std::nullopt;
    if (strategy == RewriteStrategy::LeftmostFirst) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (is_redex(w, i)) return i;
    } else {
        for (std::size_t i = w.size() - 1; i-- > 0;)
            if (is_redex(w, i)) return i;
    }
    return std::nullopt;
}

// Rewrites the redex at position i into its children (before coefficient merging).
std::vector<Word> rewrite_at(const Word& w, std::size_t i, const Presentation& p) {
    std::vector<Word> children;
    const std::size_t k = symbol_of(w[i]);
    if (!is_symbol(w[i + 1])) {
        // R1: D_k c -> c D_k + D_k(c)
        const RatFunc& c = coeff_of(w[i + 1]);
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        children.push_back(std::move(swapped));
        RatFunc dc = derive(p.derivations[k], c);
        if (!dc.is_zero()) {
            Word reduced(w.begin(), w.begin() + i);
            reduced.emplace_back(std::move(dc));
            reduced.insert(reduced.end(), w.begin() + i + 2, w.end());
            children.push_back(std::move(reduced));
        }
        return children;
    }
    // R2: D_k D_l -> D_l D_k + sum_m alpha^m_{kl} D_m, k > l
    const std::size_t l = symbol_of(w[i + 1]);
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    children.push_back(std::move(swapped));
    for (std::size_t m = 0; m < p.dim(); ++m) {
        const RatFunc& a = p.alpha.at(k, l, m);
        if (a.is_zero()) continue;
        Word reduced(w.begin(), w.begin() + i);
        reduced.emplace_back(a);
        reduced.emplace_back(Symbol{m});
        reduced.insert(reduced.end(), w.begin() + i + 2, w.end());
        children.push_back(std::move(reduced));
    }
    return children;
}

void collect(const Word& w, NormalOperator& out, std::size_t nvars) {
    MultiIndex index(out.dim());
    RatFunc coeff = RatFunc::constant(nvars, 1);
    for (const auto& f : w) {
        if (is_symbol(f))
            ++index.exponents[symbol_of(f)];
        else
            coeff = coeff * coeff_of(f);
    }
    out.add_term(index, coeff);
}

void normalize_word(Word w, const Presentation& p, RewriteStrategy strategy, RewriteStats* stats,
                    NormalOperator& out) {
    if (!merge_coefficients(w)) return;
    std::vector<Word> pending;
    pending.push_back(std::move(w));
    while (!pending.empty()) {
        Word cur = std::move(pending.back());
        pending.pop_back();
        const auto pos = find_redex(cur, strategy);
        if (!pos) {
            collect(cur, out, p.nvars());
            continue;
        }
        auto children = rewrite_at(cur, *pos, p);
        if (stats) {
            ++stats->steps;
            const Measure before = measure(cur);
            for (auto& c : children) {
                Word merged = c;
                if (merge_coefficients(merged) && !(measure(merged) < before)) ++stats->measure_violations;
            }
        }
        for (auto& c : children)
            if (merge_coefficients(c)) pending.push_back(std::move(c));
    }
}

} // namespace

NormalOperator normalize(const OpWord& word, const Presentation& p, RewriteStrategy strategy, RewriteStats* stats) {
    NormalOperator out(p.dim(), p.nvars());
    for (const auto& term : word.terms) {
        validate_word(term, p);
        normalize_word(term, p, strategy, stats, out);
    }
    return out;
}

OpWord to_word(const NormalOperator& a) {
    OpWord w;
    for (const auto& [index, c] : a.terms()) {
        std::vector<OpFactor> t;
        t.emplace_back(c);
        for (std::size_t k = 0; k < index.size(); ++k)
            for (std::uint32_t r = 0; r < index[k]; ++r) t.emplace_back(Symbol{k});
        w.terms.push_back(std::move(t));
    }
    return w;
}

static void require_compatible(const NormalOperator& a, const NormalOperator& b) {
    if (a.dim() != b.dim() || a.nvars() != b.nvars())
        throw Error(ErrorCode::ArityMismatch, "operators over different presentations");
}

NormalOperator op_add(const NormalOperator& a, const NormalOperator& b) {
    require_compatible(a, b);
    NormalOperator r = a;
    for (const auto& [index, c] : b.terms()) r.add_term(index, c);
    return r;
}

NormalOperator op_scale(const RatFunc& c, const NormalOperator& a) {
    NormalOperator r(a.dim(), a.nvars());
    if (c.is_zero()) return r;
    for (const auto& [index, x] : a.terms()) r.add_term(index, c * x);
    return r;
}

NormalOperator op_sub(const NormalOperator& a, const NormalOperator& b) {
    return op_add(a, op_scale(RatFunc::constant(b.nvars(), -1), b));
}

NormalOperator op_mul(const NormalOperator& a, const NormalOperator& b, const Presentation& p) {
    require_compatible(a, b);
    if (a.dim() != p.dim() || a.nvars() != p.nvars())
        throw Error(ErrorCode::ArityMismatch, "operator does not belong to the presentation");
    NormalOperator out(p.dim(), p.nvars());
    for (const auto& [ia, ca] : a.terms()) {
        for (const auto& [ib, cb] : b.terms()) {
            Word w;
            w.emplace_back(ca);
            for (std::size_t k = 0; k < ia.size(); ++k)
                for (std::uint32_t r = 0; r < ia[k]; ++r) w.emplace_back(Symbol{k});
            w.emplace_back(cb);
            for (std::size_t k = 0; k < ib.size(); ++k)
                for (std::uint32_t r = 0; r < ib[k]; ++r) w.emplace_back(Symbol{k});
            normalize_word(std::move(w), p, RewriteStrategy::LeftmostFirst, nullptr, out);
        }
    }
    return out;
}

NormalOperator op_commutator(const NormalOperator& a, const NormalOperator& b, const Presentation& p) {
    return op_sub(op_mul(a, b, p), op_mul(b, a, p));
}

RatFunc apply_monomial(const MultiIndex& index, const RatFunc& f, const Presentation& p) {
    if (index.size() != p.dim()) throw Error(ErrorCode::ArityMismatch, "multi-index arity");
    RatFunc val = f;
    for (std::size_t k = index.size(); k-- > 0;)
        for (std::uint32_t r = 0; r < index[k] && !val.is_zero(); ++r) val = derive(p.derivations[k], val);
    return val;
}

RatFunc apply_operator(const NormalOperator& a, const RatFunc& f, const Presentation& p) {
    if (f.nvars() != p.nvars()) throw Error(ErrorCode::UnknownVariable, "argument over a different variable set");
    RatFunc out(p.nvars());
    for (const auto& [index, c] : a.terms()) out += c * apply_monomial(index, f, p);
    return out;
}

RatFunc apply_operator(const OpWord& w, const RatFunc& f, const Presentation& p) {
    if (f.nvars() != p.nvars()) throw Error(ErrorCode::UnknownVariable, "argument over a different variable set");
    RatFunc out(p.nvars());
    for (const auto& term : w.terms) {
        validate_word(term, p);
        RatFunc val = f;
        for (auto it = term.rbegin(); it != term.rend() && !val.is_zero(); ++it) {
            if (is_symbol(*it))
                val = derive(p.derivations[symbol_of(*it)], val);
            else
                val = coeff_of(*it) * val;
        }
        out += val;
    }
    return out;
}

std::vector<RatFunc> first_order_commutator(std::span<const RatFunc> u, std::span<const RatFunc> v,
                                            const Presentation& p) {
    const std::size_t n = p.dim();
    if (u.size() != n || v.size() != n) throw Error(ErrorCode::ArityMismatch, "coefficient vectors need length n");
    std::vector<RatFunc> w(n, RatFunc(p.nvars()));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!u[i].is_zero()) w[j] += u[i] * derive(p.derivations[i], v[j]);
            if (!v[i].is_zero()) w[j] -= v[i] * derive(p.derivations[i], u[j]);
        }
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < n; ++s)
                if (!u[r].is_zero() && !v[s].is_zero() && !p.alpha.at(r, s, j).is_zero())
                    w[j] += u[r] * v[s] * p.alpha.at(r, s, j);
    }
    return w;
}

std::string to_string(const NormalOperator& a, std::span<const std::string> names) {
    if (a.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [index, c] : a.terms()) {
        std::string mono;
        for (std::size_t k = 0; k < index.size(); ++k) {
            if (index[k] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += "D" + std::to_string(k + 1);
            if (index[k] > 1) mono += "^" + std::to_string(index[k]);
        }
        append_signed_term(out, first, c, mono, names);
        first = false;
    }
    return out;
}

} // namespace liediff
