#include "helpers.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace arrlink;

namespace {

std::set<Perm> elems(const PermGroup &g) { return {g.elements.begin(), g.elements.end()}; }

PermGroup printed(const std::string &name)
{
    const json j = read_json(th::data("combinatorics/" + name + ".json"));
    const int n = j.at("n").get<int>();
    std::vector<Perm> gens;
    for (auto &c : j.at("aut_generators")) gens.push_back(parse_cycles(n, c));
    return group_closure(n, gens);
}

} // namespace

TEST(Combinatorics, MatchesArrangement)
{
    EXPECT_EQ(comb_from_arrangement(th::arr("M1")), th::comb("C"));
    EXPECT_EQ(comb_from_arrangement(th::arr("M3")), th::comb("C"));
    EXPECT_EQ(comb_from_arrangement(th::arr("N1")), th::comb("D"));
    EXPECT_EQ(comb_from_arrangement(th::arr("frakM2")), th::comb("frakC"));
}

TEST(Combinatorics, PairCoverage)
{
    EXPECT_THROW(comb_make(4, {{0, 1, 2}}), Error);
    EXPECT_THROW(comb_make(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}), Error);
    const auto c = comb_make(3, {{1, 2}, {0, 1}, {0, 2}});
    EXPECT_EQ(c.supports.front(), (std::vector<int>{0, 1}));
}

TEST(Combinatorics, AutomorphismGroups)
{
    const auto gc = comb_automorphisms(th::comb("C"));
    EXPECT_EQ(gc.order(), 4u);
    EXPECT_EQ(elems(gc), elems(printed("C")));
    EXPECT_EQ(comb_automorphisms(th::comb("frakC")).order(), 1u);
    const auto gd = comb_automorphisms(th::comb("D"));
    EXPECT_EQ(gd.order(), 6u);
    EXPECT_EQ(elems(gd), elems(printed("D")));
    for (auto &s : gd.elements) EXPECT_TRUE(is_automorphism(s, th::comb("D")));
}

TEST(Combinatorics, Stability)
{
    EXPECT_TRUE(blowup_stable(th::comb("C")).stable);
    EXPECT_TRUE(blowup_stable(th::comb("D")).stable);
    EXPECT_TRUE(blowup_stable(comb_from_arrangement(maclane(1))).stable);
}

TEST(Combinatorics, Isomorphism)
{
    const auto c = th::comb("C");
    const Perm s = perm_from_cycles(10, {{1, 5}, {2, 7, 3}});
    const auto sc = perm_act(s, c);
    const auto iso = comb_isomorphism(c, sc);
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(perm_act(*iso, c), sc);
    EXPECT_FALSE(comb_isomorphism(c, th::comb("D")).has_value());
}

TEST(Combinatorics, IncidenceGraph)
{
    const auto c = th::comb("C");
    const auto ig = incidence_graph(c);
    EXPECT_TRUE(ig.connected);
    const int E = static_cast<int>(edges(c).size());
    EXPECT_EQ(ig.cycle_rank, E - (c.n + static_cast<int>(c.supports.size())) + 1);
}

TEST(Combinatorics, Perms)
{
    const Perm a = perm_from_cycles(5, {{1, 2, 3}}), b = perm_from_cycles(5, {{4, 5}});
    EXPECT_EQ(perm_compose(a, perm_inverse(a)), perm_identity(5));
    EXPECT_EQ(perm_cycles(perm_compose(a, b)), "(1,2,3)(4,5)");
    EXPECT_EQ(perm_cycles(perm_identity(3)), "()");
    EXPECT_EQ(group_closure(5, {a, b}).order(), 6u);
}
