#include "liediff/normalpoly.hpp"

#include "liediff/errors.hpp"

#include <algorithm>

namespace liediff {

bool IndeterminateLess::operator()(const Indeterminate& a, const Indeterminate& b) const {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == Indeterminate::Kind::Slot) return a.slot < b.slot;
    const auto oa = a.index.order();
    const auto ob = b.index.order();
    if (oa != ob) return oa < ob;
    return a.index < b.index;
}

bool XMonomialGreater::operator()(const XMonomial& a, const XMonomial& b) const {
    std::uint64_t da = 0, db = 0;
    for (const auto& [x, e] : a) da += e;
    for (const auto& [x, e] : b) db += e;
    if (da != db) return da > db;
    // Same degree: compare from the largest indeterminate down.
    IndeterminateLess less;
    auto ia = a.rbegin();
    auto ib = b.rbegin();
    for (; ia != a.rend() && ib != b.rend(); ++ia, ++ib) {
        if (less(ib->first, ia->first)) return true;
        if (less(ia->first, ib->first)) return false;
        if (ia->second != ib->second) return ia->second > ib->second;
    }
    return ia != a.rend() && ib == b.rend();
}

NormalPoly NormalPoly::constant(std::size_t dim, const RatFunc& c) {
    return term(dim, XMonomial{}, c);
}

NormalPoly NormalPoly::x(const MultiIndex& index, std::size_t nvars) {
    return term(index.size(), XMonomial{{Indeterminate::x(index), 1}}, RatFunc::constant(nvars, 1));
}

NormalPoly NormalPoly::placeholder(std::size_t dim, std::size_t nvars, std::size_t slot) {
    return term(dim, XMonomial{{Indeterminate::placeholder(slot), 1}}, RatFunc::constant(nvars, 1));
}

NormalPoly NormalPoly::term(std::size_t dim, const XMonomial& m, const RatFunc& c) {
    NormalPoly q(dim, c.nvars());
    q.add_term(m, c);
    return q;
}

std::uint64_t NormalPoly::max_order() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [x, e] : m)
            if (x.kind == Indeterminate::Kind::X) d = std::max(d, x.index.order());
    return d;
}

bool NormalPoly::has_placeholders() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [x, e] : m)
            if (x.kind == Indeterminate::Kind::Slot) return true;
    return false;
}

void NormalPoly::add_term(const XMonomial& m, const RatFunc& c) {
    if (c.nvars() != nvars_) throw Error(ErrorCode::ArityMismatch, "coefficient over a different field");
    for (const auto& [x, e] : m)
        if (x.kind == Indeterminate::Kind::X && x.index.size() != dim_)
            throw Error(ErrorCode::ArityMismatch, "X index arity differs from the number of derivations");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

static void require_compatible(const NormalPoly& a, const NormalPoly& b) {
    if (a.dim() != b.dim() || a.nvars() != b.nvars())
        throw Error(ErrorCode::ArityMismatch, "normal polynomials over different presentations");
}

NormalPoly NormalPoly::operator-() const {
    NormalPoly r(dim_, nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

NormalPoly operator+(const NormalPoly& a, const NormalPoly& b) {
    require_compatible(a, b);
    NormalPoly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

NormalPoly operator-(const NormalPoly& a, const NormalPoly& b) {
    return a + (-b);
}

NormalPoly operator*(const NormalPoly& a, const NormalPoly& b) {
    require_compatible(a, b);
    NormalPoly r(a.dim_, a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            XMonomial m = ma;
            for (const auto& [x, e] : mb) m[x] += e;
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

NormalPoly NormalPoly::scaled(const RatFunc& c) const {
    NormalPoly r(dim_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, x] : terms_) r.add_term(m, c * x);
    return r;
}

NormalPoly NormalPoly::pow(std::uint32_t e) const {
    NormalPoly result = constant(dim_, RatFunc::constant(nvars_, 1));
    for (std::uint32_t i = 0; i < e; ++i) result = result * *this;
    return result;
}

NormalPoly derive_indeterminate(std::size_t i, const MultiIndex& index, const Presentation& p) {
    if (i >= p.dim()) throw Error(ErrorCode::UnknownDerivation, "D" + std::to_string(i + 1));
    if (index.size() != p.dim()) throw Error(ErrorCode::ArityMismatch, "X index arity");
    OpWord w;
    std::vector<OpFactor> t{Symbol{i}};
    for (std::size_t k = 0; k < index.size(); ++k)
        for (std::uint32_t r = 0; r < index[k]; ++r) t.emplace_back(Symbol{k});
    w.terms.push_back(std::move(t));
    const NormalOperator op = normalize(w, p);
    NormalPoly out(p.dim(), p.nvars());
    for (const auto& [j, c] : op.terms()) out.add_term(XMonomial{{Indeterminate::x(j), 1}}, c);
    return out;
}

namespace {

// Leibniz expansion of D_i given its values on the X indeterminates.
template <typename ActionOnX>
NormalPoly derive_with(std::size_t i, const NormalPoly& q, const Presentation& p, ActionOnX&& on_x) {
    NormalPoly out(q.dim(), q.nvars());
    const auto& di = p.derivations[i];
    for (const auto& [m, c] : q.terms()) {
        out.add_term(m, derive(di, c));
        for (const auto& [x, e] : m) {
            if (x.kind == Indeterminate::Kind::Slot)
                throw Error(ErrorCode::UnknownVariable,
                            "placeholder " + to_string(x) + " has no derivative; substitute it first");
            XMonomial rest = m;
            if (--rest[x] == 0) rest.erase(x);
            const RatFunc factor = c * RatFunc::constant(q.nvars(), e);
            out = out + NormalPoly::term(q.dim(), rest, factor) * on_x(x.index);
        }
    }
    return out;
}

} // namespace

NormalPoly derive_normal(std::size_t i, const NormalPoly& q, const Presentation& p) {
    if (i >= p.dim()) throw Error(ErrorCode::UnknownDerivation, "D" + std::to_string(i + 1));
    if (q.dim() != p.dim() || q.nvars() != p.nvars())
        throw Error(ErrorCode::ArityMismatch, "normal polynomial does not belong to the presentation");
    std::map<MultiIndex, NormalPoly> memo;
    return derive_with(i, q, p, [&](const MultiIndex& index) -> const NormalPoly& {
        auto it = memo.find(index);
        if (it == memo.end()) it = memo.emplace(index, derive_indeterminate(i, index, p)).first;
        return it->second;
    });
}

NormalPoly substitute_placeholders(const NormalPoly& q, std::span<const RatFunc> extra) {
    NormalPoly out(q.dim(), q.nvars());
    for (const auto& [m, c] : q.terms()) {
        XMonomial kept;
        RatFunc coeff = c;
        for (const auto& [x, e] : m) {
            if (x.kind == Indeterminate::Kind::X) {
                kept.emplace(x, e);
                continue;
            }
            if (x.slot >= extra.size())
                throw Error(ErrorCode::IndexOutOfRange, "no value supplied for " + to_string(x));
            if (extra[x.slot].nvars() != q.nvars()) throw Error(ErrorCode::UnknownVariable, "slot value field");
            coeff = coeff * extra[x.slot].pow(e);
        }
        out.add_term(kept, coeff);
    }
    return out;
}

RatFunc eval_hom(const NormalPoly& q, const RatFunc& b, const Presentation& p) {
    if (b.nvars() != p.nvars()) throw Error(ErrorCode::UnknownVariable, "witness over a different variable set");
    if (q.dim() != p.dim() || q.nvars() != p.nvars())
        throw Error(ErrorCode::ArityMismatch, "normal polynomial does not belong to the presentation");
    std::map<MultiIndex, RatFunc> derivatives;
    RatFunc out(p.nvars());
    for (const auto& [m, c] : q.terms()) {
        RatFunc val = c;
        for (const auto& [x, e] : m) {
            if (x.kind == Indeterminate::Kind::Slot)
                throw Error(ErrorCode::UnknownVariable, "unfilled placeholder " + to_string(x));
            auto it = derivatives.find(x.index);
            if (it == derivatives.end()) it = derivatives.emplace(x.index, apply_monomial(x.index, b, p)).first;
            val = val * it->second.pow(e);
        }
        out += val;
    }
    return out;
}

bool axiom1_instance_check(const NormalPoly& q, std::span<const RatFunc> extra, const RatFunc& b,
                           const Presentation& p) {
    return !eval_hom(substitute_placeholders(q, extra), b, p).is_zero();
}

static void enumerate_indices(std::size_t pos, std::uint32_t budget, MultiIndex& cur, std::vector<MultiIndex>& out) {
    if (pos == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0; e <= budget; ++e) {
        cur.exponents[pos] = e;
        enumerate_indices(pos + 1, budget - e, cur, out);
    }
    cur.exponents[pos] = 0;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t n, std::uint32_t d) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n);
    enumerate_indices(0, d, cur, out);
    std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
        return IndeterminateLess{}(Indeterminate::x(a), Indeterminate::x(b));
    });
    return out;
}

TruncatedExtension::TruncatedExtension(Presentation base, std::uint32_t order_bound)
    : base_(std::move(base)), order_bound_(order_bound) {
    if (order_bound_ < 1) throw Error(ErrorCode::IndexOutOfRange, "order bound must be at least 1");
    variables_ = multi_indices_up_to(base_.dim(), order_bound_);
    for (const auto& index : variables_) {
        if (index.order() >= order_bound_) continue;
        for (std::size_t i = 0; i < base_.dim(); ++i)
            actions_.emplace(std::make_pair(i, index), derive_indeterminate(i, index, base_));
    }
}

const NormalPoly& TruncatedExtension::action(std::size_t i, const MultiIndex& index) const {
    if (i >= base_.dim()) throw Error(ErrorCode::UnknownDerivation, "D" + std::to_string(i + 1));
    auto it = actions_.find({i, index});
    if (it == actions_.end())
        throw Error(ErrorCode::TruncationExceeded,
                    "D" + std::to_string(i + 1) + "(" + to_string(Indeterminate::x(index)) +
                        ") needs order " + std::to_string(index.order() + 1) + " but the bound is " +
                        std::to_string(order_bound_));
    return it->second;
}

NormalPoly TruncatedExtension::derive(std::size_t i, const NormalPoly& q) const {
    if (i >= base_.dim()) throw Error(ErrorCode::UnknownDerivation, "D" + std::to_string(i + 1));
    return derive_with(i, q, base_, [&](const MultiIndex& index) -> const NormalPoly& { return action(i, index); });
}

TruncatedExtension fresh_extension(const Presentation& p, std::uint32_t order_bound) {
    return TruncatedExtension(p, order_bound);
}

std::string to_string(const Indeterminate& x) {
    if (x.kind == Indeterminate::Kind::Slot) return "S[" + std::to_string(x.slot + 1) + "]";
    std::string s = "X[";
    for (std::size_t k = 0; k < x.index.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(x.index[k]);
    }
    return s + "]";
}

std::string to_string(const NormalPoly& q, std::span<const std::string> names) {
    if (q.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : q.terms()) {
        std::string mono;
        for (const auto& [x, e] : m) {
            if (!mono.empty()) mono += '*';
            mono += to_string(x);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        append_signed_term(out, first, c, mono, names);
        first = false;
    }
    return out;
}

} // namespace liediff
