#include "liediff/parse.hpp"

#include "liediff/errors.hpp"

#include <algorithm>
#include <cctype>

namespace liediff {

namespace {

constexpr std::uint32_t kMaxExponent = 1u << 16;

struct Node {
    enum class Kind { Integer, Variable, Derivation, XVar, Slot, Add, Sub, Mul, Div, Pow, Neg };

    Node(Kind k, std::size_t at) : kind(k), offset(at) {}

    Kind kind;
    std::size_t offset = 0;
    mpz_class integer;               // Integer
    std::size_t index = 0;           // Variable, Derivation, Slot (0-based)
    std::vector<std::uint32_t> ints; // XVar
    std::uint32_t exponent = 0;      // Pow
    std::vector<Node> children;

    bool contains(Kind k) const {
        if (kind == k) return true;
        return std::any_of(children.begin(), children.end(), [k](const Node& c) { return c.contains(k); });
    }
};

enum class Mode { Field, Operator, NormalPoly };

class Parser {
public:
    Parser(std::string_view text, Mode mode, std::span<const std::string> variables, std::size_t dim)
        : text_(text), mode_(mode), variables_(variables), dim_(dim) {}

    Node parse() {
        Node n = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string_view read_digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return text_.substr(start, pos_ - start);
    }

    std::uint32_t small_integer(std::uint32_t limit) {
        const std::size_t start = pos_;
        const auto digits = read_digits();
        const mpz_class v(std::string(digits), 10);
        if (v > limit) throw SyntaxError(start, "integer too large");
        return static_cast<std::uint32_t>(v.get_ui());
    }

    Node expr() {
        Node lhs = term();
        while (true) {
            skip_ws();
            const std::size_t at = pos_;
            Node::Kind k;
            if (accept('+'))
                k = Node::Kind::Add;
            else if (accept('-'))
                k = Node::Kind::Sub;
            else
                return lhs;
            Node rhs = term();
            Node n{k, at};
            n.children.push_back(std::move(lhs));
            n.children.push_back(std::move(rhs));
            lhs = std::move(n);
        }
    }

    Node term() {
        skip_ws();
        const std::size_t at = pos_;
        const bool negate = accept('-');
        Node lhs = factor();
        while (true) {
            skip_ws();
            const std::size_t op_at = pos_;
            Node::Kind k;
            if (accept('*'))
                k = Node::Kind::Mul;
            else if (accept('/'))
                k = Node::Kind::Div;
            else
                break;
            Node rhs = factor();
            Node n{k, op_at};
            n.children.push_back(std::move(lhs));
            n.children.push_back(std::move(rhs));
            lhs = std::move(n);
        }
        if (!negate) return lhs;
        Node n{Node::Kind::Neg, at};
        n.children.push_back(std::move(lhs));
        return n;
    }

    Node factor() {
        Node base = atom();
        skip_ws();
        const std::size_t at = pos_;
        if (!accept('^')) return base;
        Node n{Node::Kind::Pow, at};
        n.exponent = small_integer(kMaxExponent);
        n.children.push_back(std::move(base));
        return n;
    }

    Node atom() {
        skip_ws();
        const std::size_t at = pos_;
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Node n = expr();
            expect(')');
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Node n{Node::Kind::Integer, at};
            n.integer = mpz_class(std::string(read_digits()), 10);
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier(at);
        fail(std::string("expected an operand, found '") + c + "'");
    }

    Node identifier(std::size_t at) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));

        if (auto it = std::find(variables_.begin(), variables_.end(), name); it != variables_.end()) {
            Node n{Node::Kind::Variable, at};
            n.index = static_cast<std::size_t>(it - variables_.begin());
            return n;
        }
        if (mode_ == Mode::Operator && is_derivation_name(name)) {
            const mpz_class k(name.substr(1), 10);
            if (k < 1 || k > dim_) throw Error(ErrorCode::UnknownDerivation, name + " at offset " + std::to_string(at));
            Node n{Node::Kind::Derivation, at};
            n.index = k.get_ui() - 1;
            return n;
        }
        if (mode_ == Mode::NormalPoly && (name == "X" || name == "S") && accept('[')) {
            if (name == "X") {
                Node n{Node::Kind::XVar, at};
                do {
                    n.ints.push_back(small_integer(kMaxExponent));
                } while (accept(','));
                expect(']');
                if (n.ints.size() != dim_)
                    throw SyntaxError(at, "X index needs " + std::to_string(dim_) + " entries");
                return n;
            }
            Node n{Node::Kind::Slot, at};
            const std::size_t slot_at = pos_;
            const auto j = small_integer(kMaxExponent);
            if (j < 1) throw SyntaxError(slot_at, "slots are numbered from 1");
            n.index = j - 1;
            expect(']');
            return n;
        }
        throw Error(ErrorCode::UnknownVariable, "'" + name + "' at offset " + std::to_string(at));
    }

    static bool is_derivation_name(const std::string& name) {
        return name.size() > 1 && name[0] == 'D' &&
               std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Mode mode_;
    std::span<const std::string> variables_;
    std::size_t dim_;
};

RatFunc eval_field(const Node& n, std::size_t nvars) {
    switch (n.kind) {
    case Node::Kind::Integer: return RatFunc::constant(nvars, Rational(n.integer));
    case Node::Kind::Variable: return RatFunc::variable(nvars, n.index);
    case Node::Kind::Add: return eval_field(n.children[0], nvars) + eval_field(n.children[1], nvars);
    case Node::Kind::Sub: return eval_field(n.children[0], nvars) - eval_field(n.children[1], nvars);
    case Node::Kind::Mul: return eval_field(n.children[0], nvars) * eval_field(n.children[1], nvars);
    case Node::Kind::Div: {
        const RatFunc d = eval_field(n.children[1], nvars);
        if (d.is_zero())
            throw Error(ErrorCode::DivisionByZero, "divisor at offset " + std::to_string(n.offset) + " is zero");
        return eval_field(n.children[0], nvars) / d;
    }
    case Node::Kind::Pow: return eval_field(n.children[0], nvars).pow(n.exponent);
    case Node::Kind::Neg: return -eval_field(n.children[0], nvars);
    default: throw SyntaxError(n.offset, "not a field element");
    }
}

bool is_field_node(const Node& n) {
    return !n.contains(Node::Kind::Derivation) && !n.contains(Node::Kind::XVar) && !n.contains(Node::Kind::Slot);
}

OpWord word_product(const OpWord& a, const OpWord& b) {
    OpWord out;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            auto t = ta;
            t.insert(t.end(), tb.begin(), tb.end());
            out.terms.push_back(std::move(t));
        }
    return out;
}

OpWord word_scalar(const RatFunc& c) {
    OpWord w;
    w.terms.push_back({OpFactor{c}});
    return w;
}

OpWord eval_operator(const Node& n, std::size_t nvars) {
    if (is_field_node(n)) {
        RatFunc c = eval_field(n, nvars);
        if (c.is_zero()) return OpWord{};
        return word_scalar(c);
    }
    switch (n.kind) {
    case Node::Kind::Derivation: {
        OpWord w;
        w.terms.push_back({OpFactor{Symbol{n.index}}});
        return w;
    }
    case Node::Kind::Add:
    case Node::Kind::Sub: {
        OpWord out = eval_operator(n.children[0], nvars);
        OpWord rhs = eval_operator(n.children[1], nvars);
        if (n.kind == Node::Kind::Sub) rhs = word_product(word_scalar(RatFunc::constant(nvars, -1)), rhs);
        out.terms.insert(out.terms.end(), rhs.terms.begin(), rhs.terms.end());
        return out;
    }
    case Node::Kind::Mul: return word_product(eval_operator(n.children[0], nvars), eval_operator(n.children[1], nvars));
    case Node::Kind::Div: {
        if (!is_field_node(n.children[1])) throw SyntaxError(n.offset, "cannot divide by an operator");
        const RatFunc d = eval_field(n.children[1], nvars);
        if (d.is_zero())
            throw Error(ErrorCode::DivisionByZero, "divisor at offset " + std::to_string(n.offset) + " is zero");
        return word_product(eval_operator(n.children[0], nvars), word_scalar(d.inverse()));
    }
    case Node::Kind::Pow: {
        const OpWord base = eval_operator(n.children[0], nvars);
        OpWord out = word_scalar(RatFunc::constant(nvars, 1));
        for (std::uint32_t i = 0; i < n.exponent; ++i) out = word_product(out, base);
        return out;
    }
    case Node::Kind::Neg:
        return word_product(word_scalar(RatFunc::constant(nvars, -1)), eval_operator(n.children[0], nvars));
    default: throw SyntaxError(n.offset, "not an operator");
    }
}

NormalPoly eval_normal(const Node& n, std::size_t dim, std::size_t nvars) {
    if (is_field_node(n)) return NormalPoly::constant(dim, eval_field(n, nvars));
    switch (n.kind) {
    case Node::Kind::XVar: return NormalPoly::x(MultiIndex(n.ints), nvars);
    case Node::Kind::Slot: return NormalPoly::placeholder(dim, nvars, n.index);
    case Node::Kind::Add: return eval_normal(n.children[0], dim, nvars) + eval_normal(n.children[1], dim, nvars);
    case Node::Kind::Sub: return eval_normal(n.children[0], dim, nvars) - eval_normal(n.children[1], dim, nvars);
    case Node::Kind::Mul: return eval_normal(n.children[0], dim, nvars) * eval_normal(n.children[1], dim, nvars);
    case Node::Kind::Div: {
        if (!is_field_node(n.children[1])) throw SyntaxError(n.offset, "can only divide by field elements");
        const RatFunc d = eval_field(n.children[1], nvars);
        if (d.is_zero())
            throw Error(ErrorCode::DivisionByZero, "divisor at offset " + std::to_string(n.offset) + " is zero");
        return eval_normal(n.children[0], dim, nvars).scaled(d.inverse());
    }
    case Node::Kind::Pow: return eval_normal(n.children[0], dim, nvars).pow(n.exponent);
    case Node::Kind::Neg: return -eval_normal(n.children[0], dim, nvars);
    default: throw SyntaxError(n.offset, "not a normal polynomial");
    }
}

} // namespace

RatFunc parse_field_expr(std::string_view text, std::span<const std::string> variables) {
    const Node n = Parser(text, Mode::Field, variables, 0).parse();
    return eval_field(n, variables.size());
}

OpWord parse_operator_expr(std::string_view text, const Presentation& p) {
    const Node n = Parser(text, Mode::Operator, p.variables, p.dim()).parse();
    return eval_operator(n, p.nvars());
}

NormalPoly parse_normal_poly(std::string_view text, const Presentation& p) {
    const Node n = Parser(text, Mode::NormalPoly, p.variables, p.dim()).parse();
    return eval_normal(n, p.dim(), p.nvars());
}

} // namespace liediff
