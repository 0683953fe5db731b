#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace arrlink;

namespace {

WiringDiagram wiring(const std::string &name) { return parse_wiring(read_json(th::data("wiring/" + name + ".json"))); }

Tensor lambda0() { return parse_tensor(read_json(th::data("fixtures/lambda0_C_mod5.json")), th::comb("C")); }

} // namespace

TEST(Linking, FramesAreCertified)
{
    for (uint64_t s = 0; s < 3; ++s) {
        const auto f = choose_frame(th::arr("M1"), s);
        EXPECT_TRUE(frame_certified(f)) << "seed " << s;
        EXPECT_EQ(f.sing.size(), th::comb("C").supports.size());
    }
}

TEST(Linking, M1ByBothMethods)
{
    const auto a = th::arr("M1");
    const auto w = wiring("W_M1");
    LlnOptions o;
    EXPECT_EQ(lln(a, lambda0(), o), 2);
    o.method = Method::Wiring;
    o.wiring = &w;
    EXPECT_EQ(lln(a, lambda0(), o), 2);
    // the computed generator is a multiple of the fixture in the quotient
    const Tensor g = tlg_compute(th::comb("C"), 5).at(0);
    const int64_t vg = lln(a, g, o);
    EXPECT_NE(vg, 0);
}

TEST(Linking, M3ByBothMethods)
{
    const auto a = th::arr("M3");
    const auto w = wiring("W_M3");
    LlnOptions o;
    const int64_t cov = lln(a, lambda0(), o);
    o.method = Method::Wiring;
    o.wiring = &w;
    EXPECT_EQ(lln(a, lambda0(), o), cov);
    EXPECT_EQ(cov, 1);
}

TEST(Linking, FrameIndependence)
{
    const auto m1 = th::arr("M1"), n1 = th::arr("N1");
    const Tensor tn = tlg_compute(th::comb("D"), 7).at(0);
    const int64_t vm = lln(m1, lambda0()), vn = lln(n1, tn);
    EXPECT_NE(vn, 0);
    for (uint64_t s : {1, 2, 3, 17}) {
        LlnOptions o;
        o.seed = s;
        EXPECT_EQ(lln(m1, lambda0(), o), vm) << "M1 seed " << s;
        EXPECT_EQ(lln(n1, tn, o), vn) << "N1 seed " << s;
    }
}

TEST(Linking, GaloisEquivariance)
{
    const auto m1 = th::arr("M1");
    const int64_t v1 = lln(m1, lambda0());
    for (int k = 2; k <= 4; ++k) {
        const auto mk = galois_conjugate(cyclotomic_automorphism(m1.field, 5, k), m1);
        EXPECT_EQ(lln(mk, lambda0()), mod(k * v1, 5)) << "k=" << k;
    }
    const auto n1 = th::arr("N1");
    const Tensor tn = tlg_compute(th::comb("D"), 7).at(0);
    const int64_t w1 = lln(n1, tn);
    for (int k = 2; k <= 6; ++k) {
        const auto nk = galois_conjugate(cyclotomic_automorphism(n1.field, 7, k), n1);
        EXPECT_EQ(lln(nk, tn), mod(k * w1, 7)) << "k=" << k;
    }
}

TEST(Linking, IntegralTensorsPairToZero)
{
    const auto ig = tlg_integral(th::comb("C"));
    const auto t = ulk_table_cov(th::arr("M1"), 0);
    for (auto &b : ig.basis) EXPECT_EQ(pair_tensor(b, t), 0);
}

TEST(Linking, OrbitAndFullSet)
{
    const auto a = th::arr("M1");
    const auto g = comb_automorphisms(th::comb("C"));
    const auto orbit = lln_orbit(a, lambda0(), g);
    ASSERT_EQ(orbit.size(), 4u);
    EXPECT_EQ(orbit.front().value, 2);
    const auto fs = full_set(orbit, 5);
    EXPECT_TRUE(fs.count(2) && fs.count(3));
    EXPECT_FALSE(fs.count(0));
    const PermGroup bad{10, {}, {perm_from_cycles(10, {{1, 2}})}};
    EXPECT_TRUE(th::throws_code([&] { lln_orbit(a, lambda0(), bad); }, Errc::NotAnAutomorphism));
}

TEST(Linking, OrbitMatchesRelabelledArrangements)
{
    for (auto [name, cname, p] : {std::tuple{"M1", "C", 5}, std::tuple{"N1", "D", 7}}) {
        const auto a = th::arr(name);
        const auto c = th::comb(cname);
        const Tensor t = tlg_compute(c, p).at(0);
        LlnOptions o;
        o.seed = 5;
        for (auto &ov : lln_orbit(a, t, comb_automorphisms(c))) EXPECT_EQ(lln(perm_act(ov.sigma, a), t, o), ov.value);
    }
}

TEST(Linking, RejectsInvalidTensor)
{
    Tensor t = lambda0();
    t.values[0][3] = 1;
    EXPECT_TRUE(th::throws_code([&] { lln(th::arr("M1"), t); }, Errc::InvalidTensor));
    LlnOptions o;
    o.method = Method::Wiring;
    EXPECT_TRUE(th::throws_code([&] { lln(th::arr("M1"), lambda0(), o); }, Errc::InconsistentWiring));
}

TEST(Linking, CompareFrakM)
{
    const auto a1 = th::arr("frakM1"), a2 = th::arr("frakM2"), a4 = th::arr("frakM4");
    const auto r12 = compare(a1, a2, 5);
    EXPECT_TRUE(r12.combinatorics_isomorphic);
    EXPECT_EQ(r12.aut_order_1, 1u);
    EXPECT_EQ(r12.tlg_dim, 1);
    EXPECT_EQ(r12.verdict, "non-homeomorphic complements");
    EXPECT_EQ(compare(a1, a4, 5).verdict, "ordered-oriented distinct");
    EXPECT_EQ(compare(a1, a1, 5).verdict, "inconclusive");
    EXPECT_EQ(compare(a1, th::arr("N1"), 5).verdict, "inconclusive");
}
