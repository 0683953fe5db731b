#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace arrlink;

namespace {

FieldPtr q5() { return nf_create(std::vector<long>{1, 1, 1, 1, 1}, 0.309017, 0.951057); }

} // namespace

TEST(NumberField, CyclotomicArithmetic)
{
    auto f = q5();
    const auto a = FieldElement::alpha(f), one = FieldElement::rational(f, 1);
    EXPECT_TRUE(a.pow(5).is_one());
    EXPECT_TRUE((one + a + a.pow(2) + a.pow(3) + a.pow(4)).is_zero());
    EXPECT_TRUE((a * a.inv()).is_one());
    const auto x = one + a * FieldElement::rational(f, mpq_class(3, 7));
    EXPECT_EQ(x / x, one);
    EXPECT_EQ((x - x * a) / (one - a), x);
    EXPECT_FALSE(a.is_rational());
}

TEST(NumberField, Signs)
{
    auto f = q5();
    const auto a = FieldElement::alpha(f);
    EXPECT_EQ(fe_sign(a, Part::Real), 1);
    EXPECT_EQ(fe_sign(a, Part::Imaginary), 1);
    // a + a^4 = 2 cos(2pi/5) is real
    EXPECT_EQ(fe_sign(a + a.pow(4), Part::Imaginary), 0);
    EXPECT_EQ(fe_sign(a.pow(2) + a.pow(3), Part::Real), -1);
}

TEST(NumberField, TinyImaginaryPart)
{
    // imaginary parts of size 1e-12
    auto f = q5();
    const auto a = FieldElement::alpha(f);
    const auto eps = FieldElement::rational(f, mpq_class("1/1000000000000"));
    EXPECT_EQ(fe_sign(eps * (a.pow(2) - a.pow(3)), Part::Imaginary), 1);
    EXPECT_EQ(fe_sign(eps * (a.pow(3) - a.pow(2)), Part::Imaginary), -1);
}

TEST(NumberField, Errors)
{
    EXPECT_TRUE(th::throws_code([] { nf_create(std::vector<long>{-1, 0, 1}, 1, 0); }, Errc::ReducibleMinPoly));
    EXPECT_TRUE(th::throws_code([] { nf_create(std::vector<long>{1, 0, 1}, 0, 0); }, Errc::AmbiguousRootHint));
    auto f = q5();
    EXPECT_TRUE(th::throws_code([&] { FieldElement::rational(f, 0).inv(); }, Errc::DivisionByZero));
    auto g = eisenstein_field();
    EXPECT_TRUE(th::throws_code([&] { FieldElement::alpha(f) + FieldElement::alpha(g); }, Errc::FieldMismatch));
    // Q(2^(1/3)) is not normal
    EXPECT_TRUE(th::throws_code([] { nf_automorphisms(nf_create(std::vector<long>{-2, 0, 0, 1}, 1.26, 0)); },
                                Errc::NotGaloisExtension));
}

TEST(NumberField, Galois)
{
    auto f = q5();
    const auto a = FieldElement::alpha(f);
    EXPECT_EQ(nf_automorphisms(f).size(), 4u);
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(fe_apply(cyclotomic_automorphism(f, 5, k), a), a.pow(k));
    EXPECT_TRUE(is_identity(compose(cyclotomic_automorphism(f, 5, 2), cyclotomic_automorphism(f, 5, 3))));
    EXPECT_EQ(fe_apply(f->conjugation(), a), a.pow(4));
    EXPECT_THROW(cyclotomic_automorphism(f, 5, 5), Error);
}

TEST(NumberField, RootsInField)
{
    auto g = eisenstein_field();
    EXPECT_EQ(roots_in_field(g, {1, 1, 1}).size(), 2u);
    EXPECT_EQ(roots_in_field(g, {-1, 0, 0, 1}).size(), 3u);
    EXPECT_EQ(roots_in_field(g, {-2, 0, 1}).size(), 0u);
}

TEST(NumberField, AdjoinI)
{
    auto f = nf_create(std::vector<long>{-5, 0, 1}, 2.236, 0);
    EXPECT_TRUE(f->totally_real());
    const FieldLift fl = adjoin_i(f);
    const auto s = fl.lift(FieldElement::alpha(f));
    EXPECT_EQ(s * s, FieldElement::rational(s.field(), 5));
    EXPECT_EQ(fe_sign(s, Part::Real), 1);
    EXPECT_FALSE(eisenstein_field()->totally_real());
}
