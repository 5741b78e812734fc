#include "liediff/cli.hpp"

#include "liediff/errors.hpp"
#include "liediff/frobenius.hpp"
#include "liediff/normalpoly.hpp"
#include "liediff/parse.hpp"
#include "liediff/presentation_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

namespace liediff {

namespace {

struct Options {
    std::string presentation;
    std::string basis;
    std::string beta;
    std::optional<std::uint32_t> order;
    std::optional<std::string> witness;
    bool no_validate = false;
    std::vector<std::string> positional;
};

struct Context {
    const Options& opt;
    std::ostream& out;
    std::ostream& err;
};

Presentation presentation(const Context& c) {
    return load_presentation(c.opt.presentation, !c.opt.no_validate);
}

void require_positional(const Context& c, std::size_t min, std::size_t max, const std::string& usage) {
    const auto n = c.opt.positional.size();
    if (n < min || n > max) throw Error(ErrorCode::SchemaError, "expected " + usage);
}

std::string matrix_text(const FieldMatrix& a, std::span<const std::string> names) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) s += ",";
            s += to_string(a(i, j), names);
        }
        s += "]";
    }
    return s + "]";
}

std::string action_text(const DerivationAction& d, std::span<const std::string> names) {
    std::string s;
    for (std::size_t v = 0; v < d.images.size(); ++v) {
        if (v) s += ", ";
        s += names[v] + " -> " + to_string(d.images[v], names);
    }
    return s;
}

std::size_t derivation_index(const std::string& text, const Presentation& p) {
    std::string digits = text;
    if (!digits.empty() && digits[0] == 'D') digits.erase(0, 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
        throw Error(ErrorCode::UnknownDerivation, "'" + text + "'");
    const auto k = std::stoul(digits);
    if (k < 1 || k > p.dim()) throw Error(ErrorCode::UnknownDerivation, "'" + text + "'");
    return k - 1;
}

int print_basis_report(const Context& c, const std::vector<BasisChangeViolation>& violations, const Presentation& p) {
    for (const auto& v : violations)
        c.out << "violation at (" << v.l + 1 << "," << v.k + 1 << "," << v.j + 1
              << "): residual " << to_string(v.residual, p.variables) << "\n";
    c.out << (violations.empty() ? "pass" : "fail") << "\n";
    return violations.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_validate(const Context& c) {
    const Presentation p = load_presentation(c.opt.presentation, false);
    const auto report = check_presentation(p);
    c.out << describe(report, p);
    bool ok = report.ok();
    if (p.alpha.all_constant()) {
        const auto jacobi = validate_jacobi(p.alpha);
        for (const auto& v : jacobi)
            c.out << "jacobi identity violated at (" << v.k + 1 << "," << v.l + 1 << "," << v.m + 1 << ") slot "
                  << v.q + 1 << ": cyclic sum " << to_string(v.sum, p.variables) << "\n";
        ok = ok && jacobi.empty();
    } else {
        c.out << "jacobi check skipped: non-constant structure constants\n";
    }
    c.out << (ok ? "valid" : "invalid") << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_normalize(const Context& c) {
    require_positional(c, 1, 1, "one operator expression");
    const Presentation p = presentation(c);
    c.out << to_string(normalize(parse_operator_expr(c.opt.positional[0], p), p), p.variables) << "\n";
    return kExitOk;
}

int cmd_commutator(const Context& c) {
    require_positional(c, 2, 2, "two operator expressions");
    const Presentation p = presentation(c);
    const auto a = normalize(parse_operator_expr(c.opt.positional[0], p), p);
    const auto b = normalize(parse_operator_expr(c.opt.positional[1], p), p);
    c.out << to_string(op_commutator(a, b, p), p.variables) << "\n";
    return kExitOk;
}

int cmd_apply(const Context& c) {
    require_positional(c, 2, 2, "an operator expression and a field expression");
    const Presentation p = presentation(c);
    const auto op = normalize(parse_operator_expr(c.opt.positional[0], p), p);
    const auto f = parse_field_expr(c.opt.positional[1], p.variables);
    c.out << to_string(apply_operator(op, f, p), p.variables) << "\n";
    return kExitOk;
}

int cmd_frobenius(const Context& c) {
    require_positional(c, 0, 0, "no positional arguments");
    const Presentation p = presentation(c);
    const auto basis = commuting_basis(p);
    c.out << "coordinates: ";
    for (std::size_t k = 0; k < basis.coordinates.size(); ++k)
        c.out << (k ? ", " : "") << p.variables[basis.coordinates[k]];
    c.out << "\nA = " << matrix_text(basis.a, p.variables) << "\n";
    for (std::size_t i = 0; i < basis.derivations.size(); ++i) {
        const auto row = basis.a.row(i);
        c.out << basis.derivations[i].name << " = " << to_string(NormalOperator::first_order(row), p.variables)
              << ": " << action_text(basis.derivations[i], p.variables) << "\n";
    }
    c.out << "commutation verified\n";
    return kExitOk;
}

int cmd_check_basis(const Context& c, bool commuting) {
    require_positional(c, 0, 0, "no positional arguments");
    if (c.opt.basis.empty()) throw Error(ErrorCode::SchemaError, "-A <file> is required");
    const Presentation p = presentation(c);
    const auto a = load_basis_matrix(c.opt.basis, p);
    if (commuting) return print_basis_report(c, commuting_check(a, p), p);
    if (c.opt.beta.empty()) throw Error(ErrorCode::SchemaError, "--beta <file> is required");
    return print_basis_report(c, change_basis_check(a, load_structure_constants(c.opt.beta, p), p), p);
}

int cmd_derive_normal(const Context& c) {
    const Presentation p = presentation(c);
    if (c.opt.positional.empty()) {
        if (!c.opt.order) throw Error(ErrorCode::SchemaError, "expected a derivation and a normal polynomial, or --order");
        const auto ext = fresh_extension(p, *c.opt.order);
        c.out << "variables:";
        for (const auto& index : ext.variables()) c.out << " " << to_string(Indeterminate::x(index));
        c.out << "\n";
        for (const auto& index : ext.variables()) {
            if (index.order() >= ext.order_bound()) continue;
            for (std::size_t i = 0; i < p.dim(); ++i)
                c.out << "D" << i + 1 << "(" << to_string(Indeterminate::x(index))
                      << ") = " << to_string(ext.action(i, index), p.variables) << "\n";
        }
        return kExitOk;
    }
    require_positional(c, 2, 2, "a derivation index and a normal polynomial");
    const std::size_t i = derivation_index(c.opt.positional[0], p);
    const NormalPoly q = parse_normal_poly(c.opt.positional[1], p);
    const NormalPoly r = c.opt.order ? fresh_extension(p, *c.opt.order).derive(i, q) : derive_normal(i, q, p);
    c.out << to_string(r, p.variables) << "\n";
    return kExitOk;
}

int cmd_eval(const Context& c) {
    require_positional(c, 1, 1, "one normal polynomial");
    if (!c.opt.witness) throw Error(ErrorCode::SchemaError, "--witness <expr> is required");
    const Presentation p = presentation(c);
    const NormalPoly q = parse_normal_poly(c.opt.positional[0], p);
    const RatFunc b = parse_field_expr(*c.opt.witness, p.variables);
    c.out << to_string(eval_hom(q, b, p), p.variables) << "\n";
    return kExitOk;
}

int cmd_check_axiom1(const Context& c) {
    require_positional(c, 1, SIZE_MAX, "a normal polynomial followed by slot values");
    if (!c.opt.witness) throw Error(ErrorCode::SchemaError, "--witness <expr> is required");
    const Presentation p = presentation(c);
    const NormalPoly q = parse_normal_poly(c.opt.positional[0], p);
    std::vector<RatFunc> extra;
    for (std::size_t k = 1; k < c.opt.positional.size(); ++k)
        extra.push_back(parse_field_expr(c.opt.positional[k], p.variables));
    const RatFunc b = parse_field_expr(*c.opt.witness, p.variables);
    const bool ok = axiom1_instance_check(q, extra, b, p);
    c.out << (ok ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_check_axiom2(const Context& c) {
    const Presentation p = presentation(c);
    bool ok = false;
    if (!c.opt.basis.empty()) {
        require_positional(c, 0, 0, "either -A <file> or n^2 entries");
        ok = axiom2_witness_check(load_basis_matrix(c.opt.basis, p), p);
    } else {
        std::vector<RatFunc> entries;
        for (const auto& s : c.opt.positional) entries.push_back(parse_field_expr(s, p.variables));
        ok = axiom2_witness_check(entries, p);
    }
    c.out << (ok ? "true" : "false") << "\n";
    return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact normal ordering and commuting bases for Lie differential fields", "liediff"};
    app.require_subcommand(1);
    Options opt;

    const auto add = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("-p,--presentation", opt.presentation, "presentation JSON file")->required();
        sub->add_flag("--no-validate", opt.no_validate, "skip the bracket-axiom check on load");
        return sub;
    };
    add("validate", "check antisymmetry, the bracket axiom, and the Jacobi identity");
    add("normalize", "normal-order an operator expression")->add_option("expr", opt.positional);
    add("commutator", "normal form of [a, b]")->add_option("exprs", opt.positional);
    add("apply", "apply an operator to a field element")->add_option("args", opt.positional);
    add("frobenius", "construct a commuting basis");
    for (const char* name : {"check-basis", "check-commuting"}) {
        auto* sub = add(name, "check a basis change against target structure constants");
        sub->add_option("-A,--basis", opt.basis, "basis matrix JSON file");
        if (std::string(name) == "check-basis")
            sub->add_option("--beta", opt.beta, "target structure constants JSON file");
    }
    {
        auto* sub = add("derive-normal", "apply D_i to a normal polynomial, or list a truncated extension");
        sub->add_option("--order", opt.order, "truncation order d");
        sub->add_option("args", opt.positional);
    }
    for (const char* name : {"eval", "check-axiom1"}) {
        auto* sub = add(name, "evaluate X_I -> D^I(b)");
        sub->add_option("--witness", opt.witness, "the element b");
        sub->add_option("args", opt.positional);
    }
    {
        auto* sub = add("check-axiom2", "check that a matrix gives independent commuting derivations");
        sub->add_option("-A,--basis", opt.basis, "matrix JSON file");
        sub->add_option("entries", opt.positional);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    const Context ctx{opt, out, err};
    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "validate") return cmd_validate(ctx);
        if (cmd == "normalize") return cmd_normalize(ctx);
        if (cmd == "commutator") return cmd_commutator(ctx);
        if (cmd == "apply") return cmd_apply(ctx);
        if (cmd == "frobenius") return cmd_frobenius(ctx);
        if (cmd == "check-basis") return cmd_check_basis(ctx, false);
        if (cmd == "check-commuting") return cmd_check_basis(ctx, true);
        if (cmd == "derive-normal") return cmd_derive_normal(ctx);
        if (cmd == "eval") return cmd_eval(ctx);
        if (cmd == "check-axiom1") return cmd_check_axiom1(ctx);
        if (cmd == "check-axiom2") return cmd_check_axiom2(ctx);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    err << "error: unknown command " << cmd << "\n";
    return kExitInputError;
}

} // namespace liediff
