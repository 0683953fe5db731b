#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace arrlink;

namespace {

WiringDiagram wiring(const std::string &name) { return parse_wiring(read_json(th::data("wiring/" + name + ".json"))); }

} // namespace

TEST(Braid, HalfTwistReversesBlock)
{
    StrandState s{{4, 0, 1, 2, 3}};
    const BraidWord w = half_twist(s, {0, 1, 2});
    EXPECT_EQ(w.letters, (std::vector<int>{2, 3, 2}));
    EXPECT_EQ(s.line_at, (std::vector<int>{4, 2, 1, 0, 3}));
    StrandState t{{0, 1, 2}};
    EXPECT_TRUE(th::throws_code([&] { half_twist(t, {0, 2}); }, Errc::NonContiguousSupport));
}

TEST(Braid, UpperLinking)
{
    // positive letter: the upper strand passes over
    const StrandState s{{0, 1, 2}};
    const BraidWord b{3, {1, 2, -1}};
    EXPECT_EQ(ulk_braid(b, s, 1, 3), (MeridianSum{1, 0, -1}));
    EXPECT_EQ(ulk_braid(b, s, 2, 3), (MeridianSum{1, 0, 0}));
    EXPECT_EQ(ulk_braid(b, s, 0, 3), (MeridianSum{0, 0, 0}));
    EXPECT_TRUE(th::throws_code([&] { ulk_braid(b, StrandState{{0, 2}}, 1, 3); }, Errc::LineAbsent));
    EXPECT_TRUE(th::throws_code([&] { ulk_braid(BraidWord{3, {3}}, s, 1, 3); }, Errc::InconsistentWiring));
}

TEST(Braid, StrandDeletion)
{
    const StrandState s{{0, 1, 2}};
    const BraidWord b{3, {1, 2, 1}};
    auto [w, k] = strand_delete(b, s, {true, false, true});
    EXPECT_EQ(k.line_at, (std::vector<int>{0, 2}));
    EXPECT_EQ(w.letters, (std::vector<int>{1}));
}

TEST(Braid, MeridianEquality)
{
    EXPECT_TRUE(meridian_equal({1, 0, 2}, {0, -1, 1}));
    EXPECT_FALSE(meridian_equal({1, 0, 2}, {1, 0, 1}));
}

TEST(Braid, WiringValidation)
{
    const auto c = th::comb("C");
    EXPECT_NO_THROW(validate_wiring(wiring("W_M1"), c));
    EXPECT_NO_THROW(validate_wiring(wiring("W_M3"), c));
    WiringDiagram w = wiring("W_M1");
    w.events.pop_back();
    EXPECT_TRUE(th::throws_code([&] { validate_wiring(w, c); }, Errc::InconsistentWiring));
    EXPECT_TRUE(th::throws_code([&] { edge_braid(wiring("W_M1"), 0, 0); }, Errc::LineNotInSupport));
}

TEST(Braid, UlkTableMatchesFixture)
{
    const auto c = th::comb("C");
    const UlkTable u = ulk_table_wiring(wiring("W_M1"), c);
    const json fx = read_json(th::data("fixtures/ulk_M1.json")).at("ulk");
    const auto es = edges(c);
    ASSERT_EQ(u.size(), es.size());
    int checked = 0;
    for (size_t e = 0; e < es.size(); ++e) {
        const std::string key = edge_key(c, es[e]);
        ASSERT_TRUE(fx.contains(key)) << key;
        const auto want = fx.at(key).at("meridians").get<MeridianSum>();
        EXPECT_TRUE(meridian_equal(u[e], want)) << key;
        ++checked;
    }
    EXPECT_EQ(checked, static_cast<int>(fx.size()));
}

TEST(Braid, WiringIoRoundTrip)
{
    const auto w = wiring("W_M3");
    const auto b = parse_wiring(emit_wiring(w));
    EXPECT_EQ(b.strands, w.strands);
    ASSERT_EQ(b.events.size(), w.events.size());
    for (size_t k = 0; k < w.events.size(); ++k) {
        EXPECT_EQ(b.events[k].point, w.events[k].point);
        EXPECT_EQ(b.events[k].braid, w.events[k].braid);
    }
}
