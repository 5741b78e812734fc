#include "fixtures.hpp"

#include "liediff/errors.hpp"
#include "liediff/parse.hpp"
#include "liediff/presentation_io.hpp"

#include <gtest/gtest.h>

using namespace liediff;
using namespace liediff::testing;

namespace {

const std::vector<std::string> kXY{"x", "y"};

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return ErrorCode::IoError;
}

const char* kP1 = R"({
  "vars": ["x", "y"],
  "derivations": [
    {"name": "D1", "action": {"x": "1", "y": "0"}},
    {"name": "D2", "action": {"x": "x", "y": "1"}}
  ],
  "alpha": [ {"k": 1, "l": 2, "m": 1, "value": "1"} ]
})";

} // namespace

TEST(ParseField, Examples) {
    const RatFunc a = parse_field_expr("x^2*y - 1/2", kXY);
    MPoly expect(2);
    expect.add_term({2, 1}, 1);
    expect.add_term({0, 0}, Rational(-1, 2));
    EXPECT_EQ(a, RatFunc(expect));

    const RatFunc b = parse_field_expr("(x+1)/(x-1)", kXY);
    EXPECT_EQ(b.num(), MPoly::variable(2, 0) + MPoly::constant(2, 1));
    EXPECT_EQ(b.den(), MPoly::variable(2, 0) - MPoly::constant(2, 1));

    try {
        (void)parse_field_expr("x +* y", kXY);
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
        EXPECT_EQ(e.offset(), 3u);
    }
    EXPECT_EQ(code_of([] { (void)parse_field_expr("1/(x-x)", kXY); }), ErrorCode::DivisionByZero);
    EXPECT_EQ(code_of([] { (void)parse_field_expr("z + 1", kXY); }), ErrorCode::UnknownVariable);
    EXPECT_EQ(code_of([] { (void)parse_field_expr("(x + 1", kXY); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { (void)parse_field_expr("D1", kXY); }), ErrorCode::UnknownVariable);
}

TEST(ParseField, PrecedenceAndUnaryMinus) {
    EXPECT_EQ(parse_field_expr("-x^2", kXY), -parse_field_expr("x*x", kXY));
    EXPECT_EQ(parse_field_expr("1 - x*y", kXY), parse_field_expr("-(x*y) + 1", kXY));
    EXPECT_EQ(parse_field_expr("x/y/2", kXY), parse_field_expr("x/(2*y)", kXY));
    EXPECT_EQ(parse_field_expr("2^3", kXY), fx(2, 8));
}

TEST(ParseOperator, Examples) {
    const auto p = p1();
    const OpWord w = parse_operator_expr("D2*D1", p);
    ASSERT_EQ(w.terms.size(), 1u);
    ASSERT_EQ(w.terms[0].size(), 2u);
    EXPECT_EQ(std::get<Symbol>(w.terms[0][0]).index, 1u);
    EXPECT_EQ(std::get<Symbol>(w.terms[0][1]).index, 0u);

    EXPECT_EQ(parse_operator_expr("x*D1 + D2", p).terms.size(), 2u);

    const OpWord mixed = parse_operator_expr("D1*x*D2", p);
    Random rng(61);
    for (int t = 0; t < 10; ++t) {
        const RatFunc f = rng.polynomial(2, 3);
        const RatFunc expect = derive(p.derivations[0], var(2, 0) * derive(p.derivations[1], f));
        EXPECT_EQ(apply_operator(mixed, f, p), expect);
    }

    EXPECT_EQ(code_of([&] { (void)parse_operator_expr("D3", p); }), ErrorCode::UnknownDerivation);
    EXPECT_EQ(code_of([&] { (void)parse_operator_expr("x/D1", p); }), ErrorCode::SyntaxError);
    EXPECT_EQ(normalize(parse_operator_expr("D1^2", p), p), NormalOperator::monomial(mi({2, 0}), fx(2, 1)));
}

TEST(ParseNormal, Examples) {
    const auto p = p1();
    const auto q = parse_normal_poly("X[1,0]*X[0,1] + x*S[1]", p);
    EXPECT_TRUE(q.has_placeholders());
    EXPECT_EQ(q.max_order(), 1u);
    EXPECT_EQ(code_of([&] { (void)parse_normal_poly("X[1]", p); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([&] { (void)parse_normal_poly("S[0]", p); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([&] { (void)parse_normal_poly("D1", p); }), ErrorCode::UnknownVariable);
}

TEST(RoundTrip, RatFunc) {
    Random rng(62);
    for (int t = 0; t < 200; ++t) {
        const RatFunc f = rng.field(2, 3, 0.5);
        EXPECT_EQ(parse_field_expr(to_string(f, kXY), kXY), f) << to_string(f, kXY);
    }
}

TEST(RoundTrip, NormalOperator) {
    Random rng(63);
    const auto p = p1();
    for (int t = 0; t < 100; ++t) {
        NormalOperator a(2, 2);
        const auto terms = rng.integer(0, 3);
        for (long k = 0; k < terms; ++k) a.add_term(rng.multi_index(2, 3), rng.field(2, 2));
        const std::string s = to_string(a, p.variables);
        EXPECT_EQ(normalize(parse_operator_expr(s, p), p), a) << s;
    }
}

TEST(RoundTrip, NormalPoly) {
    Random rng(64);
    const auto p = p1();
    for (int t = 0; t < 100; ++t) {
        NormalPoly q = rng.normal_poly(p, 2, 2);
        if (rng.coin(0.3)) q = q + NormalPoly::placeholder(2, 2, 0).scaled(rng.field(2, 1));
        const std::string s = to_string(q, p.variables);
        EXPECT_EQ(parse_normal_poly(s, p), q) << s;
    }
}

TEST(Printing, Deterministic) {
    const auto p = p1();
    EXPECT_EQ(to_string(normalize(parse_operator_expr("D2*D1", p), p), p.variables), "D1*D2 - D1");
    EXPECT_EQ(to_string(normalize(parse_operator_expr("D1*x", p), p), p.variables), "x*D1 + 1");
    EXPECT_EQ(to_string(normalize(parse_operator_expr("D1 - D1", p), p), p.variables), "0");
    EXPECT_EQ(to_string(parse_field_expr("(2*x)/4", kXY), kXY), "x/2");
    EXPECT_EQ(to_string(parse_normal_poly("X[1,1] - X[1,0]", p), p.variables), "X[1,1] - X[1,0]");
}

TEST(PresentationJson, Load) {
    const auto p = parse_presentation_json(kP1);
    EXPECT_EQ(p.dim(), 2u);
    EXPECT_EQ(p.variables, kXY);
    EXPECT_EQ(p.alpha.at(0, 1, 0), fx(2, 1));
    EXPECT_EQ(p.alpha.at(1, 0, 0), fx(2, -1));
}

TEST(PresentationJson, Errors) {
    std::string no_alpha = kP1;
    no_alpha = no_alpha.substr(0, no_alpha.find(",\n  \"alpha\"")) + "}";
    EXPECT_EQ(code_of([&] { (void)parse_presentation_json(no_alpha); }), ErrorCode::PresentationInvalid);
    EXPECT_NO_THROW((void)parse_presentation_json(no_alpha, false));
    EXPECT_EQ(code_of([] { (void)parse_presentation_json("{ \"vars\": [\"x\" "); }), ErrorCode::SchemaError);
    EXPECT_EQ(code_of([] { (void)parse_presentation_json(R"({"vars":["x"],"derivations":[{"action":{}}]})"); }),
              ErrorCode::SchemaError);
    EXPECT_EQ(code_of([] {
                  (void)parse_presentation_json(
                      R"({"vars":["x"],"derivations":[{"action":{"x":"1"}},{"action":{"x":"1"}}],
                          "alpha":[{"k":1,"l":2,"m":1,"value":"1"},{"k":2,"l":1,"m":1,"value":"1"}]})");
              }),
              ErrorCode::SchemaError);
    EXPECT_EQ(code_of([] { (void)load_presentation("/nonexistent/p.json"); }), ErrorCode::IoError);
}

TEST(BasisJson, Load) {
    const auto p = p1();
    const auto a = parse_basis_matrix_json(R"({"n":2,"entries":[["1","0"],["-x","1"]]})", p);
    EXPECT_EQ(a(1, 0), -var(2, 0));
    EXPECT_EQ(code_of([&] { (void)parse_basis_matrix_json(R"({"n":2,"entries":[["1"]]})", p); }),
              ErrorCode::SchemaError);
    const auto beta = parse_structure_constants_json(R"({"beta":[{"k":1,"l":2,"m":1,"value":"1"}]})", p);
    EXPECT_EQ(beta.at(1, 0, 0), fx(2, -1));
    EXPECT_TRUE(parse_structure_constants_json("[]", p).is_zero());
}
