#include "fixtures.hpp"

#include "liediff/errors.hpp"
#include "liediff/lie.hpp"

#include <gtest/gtest.h>

using namespace liediff;
using namespace liediff::testing;

TEST(Antisymmetry, Examples) {
    EXPECT_TRUE(validate_antisymmetry(StructureConstants(2, 2)).empty());
    EXPECT_TRUE(validate_antisymmetry(p1().alpha).empty());

    StructureConstants bad(2, 2);
    bad.set(0, 1, 0, fx(2, 1));
    bad.set(1, 0, 0, fx(2, 1));
    const auto v = validate_antisymmetry(bad);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].k, 0u);
    EXPECT_EQ(v[0].l, 1u);
    EXPECT_EQ(v[0].m, 0u);
    EXPECT_EQ(v[0].sum, fx(2, 2));
}

TEST(Antisymmetry, DiagonalMustVanish) {
    StructureConstants c(2, 1);
    c.set(1, 1, 0, fx(1, 3));
    const auto v = validate_antisymmetry(c);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].k, 1u);
    EXPECT_EQ(v[0].l, 1u);
}

// Brute-force cyclic sum, written independently of the library.
static Rational cyclic(const StructureConstants& c, std::size_t k, std::size_t l, std::size_t m, std::size_t q) {
    Rational s = 0;
    for (std::size_t p = 0; p < c.dim(); ++p) {
        s += c.at(k, l, p).constant_value() * c.at(p, m, q).constant_value();
        s += c.at(l, m, p).constant_value() * c.at(p, k, q).constant_value();
        s += c.at(m, k, p).constant_value() * c.at(p, l, q).constant_value();
    }
    return s;
}

TEST(Jacobi, Sl2PassesAndPerturbedFails) {
    const auto good = sl2_constants(false);
    const auto bad = sl2_constants(true);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
            for (std::size_t m = 0; m < 3; ++m)
                for (std::size_t q = 0; q < 3; ++q) EXPECT_EQ(cyclic(good, k, l, m, q), 0);
    EXPECT_TRUE(validate_jacobi(good).empty());

    const auto v = validate_jacobi(bad);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].k, 0u);
    EXPECT_EQ(v[0].l, 1u);
    EXPECT_EQ(v[0].m, 2u);
    EXPECT_EQ(v[0].q, 1u);
    EXPECT_EQ(v[0].sum.constant_value(), cyclic(bad, 0, 1, 2, 1));
    EXPECT_EQ(v[0].sum.constant_value(), -2);
}

TEST(Jacobi, AbelianPassesAndNonConstantRejected) {
    EXPECT_TRUE(validate_jacobi(StructureConstants(3, 2)).empty());
    StructureConstants c(2, 2);
    c.set(0, 1, 0, var(2, 0));
    c.set(1, 0, 0, -var(2, 0));
    try {
        (void)validate_jacobi(c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonConstantStructureConstants);
    }
}

TEST(Jacobi, ValidatorsAreOrderIndependent) {
    // Relabelling the basis permutes violations but not their number.
    const auto bad = sl2_constants(true);
    const std::vector<std::size_t> perm{2, 0, 1};
    StructureConstants relabelled(3, 0);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
            for (std::size_t m = 0; m < 3; ++m) relabelled.set(perm[k], perm[l], perm[m], bad.at(k, l, m));
    EXPECT_EQ(validate_jacobi(relabelled).size(), validate_jacobi(bad).size());
    EXPECT_EQ(validate_antisymmetry(relabelled).size(), validate_antisymmetry(bad).size());
}

TEST(CheckPresentation, Examples) {
    EXPECT_TRUE(check_presentation(p1()).ok());
    EXPECT_TRUE(check_presentation(p_abelian()).ok());

    auto p = p1();
    p.alpha = StructureConstants(2, 2);
    const auto r = check_presentation(p);
    ASSERT_EQ(r.bracket.size(), 1u);
    EXPECT_EQ(r.bracket[0].k, 0u);
    EXPECT_EQ(r.bracket[0].l, 1u);
    EXPECT_EQ(r.bracket[0].var, 0u);
    EXPECT_EQ(r.bracket[0].residual, fx(2, 1));

    const auto single = make_presentation({"x"}, {{var(1, 0)}});
    EXPECT_TRUE(check_presentation(single).ok());

    EXPECT_FALSE(check_presentation(p_three_invalid()).ok());
}

TEST(CheckPresentation, GeneratorSufficiency) {
    Random rng(21);
    const auto p = p1();
    for (int t = 0; t < 40; ++t) {
        const RatFunc f = rng.field(2, 3);
        const auto& d1 = p.derivations[0];
        const auto& d2 = p.derivations[1];
        RatFunc rhs(2);
        for (std::size_t m = 0; m < 2; ++m) rhs += p.alpha.at(0, 1, m) * derive(p.derivations[m], f);
        EXPECT_EQ(derive(d1, derive(d2, f)) - derive(d2, derive(d1, f)), rhs);
    }
}

TEST(CheckPresentation, NonConstantAlpha) {
    // D1 = d/dx, D2 = x*y d/dy: [D1, D2] = y d/dy = (1/x) D2.
    auto p = make_presentation({"x", "y"}, {{fx(2, 1), fx(2, 0)}, {fx(2, 0), var(2, 0) * var(2, 1)}});
    p.alpha.set(0, 1, 1, RatFunc(MPoly::constant(2, 1), MPoly::variable(2, 0)));
    p.alpha.set(1, 0, 1, -RatFunc(MPoly::constant(2, 1), MPoly::variable(2, 0)));
    EXPECT_TRUE(check_presentation(p).ok());
    EXPECT_FALSE(p.alpha.all_constant());
}
