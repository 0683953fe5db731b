#include "helpers.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

using namespace arrlink;

TEST(Io, ArrangementRoundTrip)
{
    for (const char *name : {"M1", "N3", "frakM2", "frakN6"}) {
        const auto a = th::arr(name);
        const auto b = parse_arrangement(emit_arrangement(a));
        EXPECT_EQ(b.lines, a.lines) << name;
        EXPECT_EQ(b.name, a.name);
        EXPECT_TRUE(b.field->same_as(*a.field));
        EXPECT_EQ(b.field, a.field); // shared
    }
}

TEST(Io, BuiltinRoundTrip)
{
    const auto m = maclane(-1);
    const auto b = parse_arrangement(emit_arrangement(m));
    EXPECT_EQ(b.lines, m.lines);
    EXPECT_EQ(parse_arrangement(dataset_emit("ML-")).lines, m.lines);
}

TEST(Io, CombinatoricsRoundTrip)
{
    const auto c = th::comb("D");
    EXPECT_EQ(parse_combinatorics(emit_combinatorics(c)), c);
}

TEST(Io, Cycles)
{
    EXPECT_EQ(parse_cycles(4, json::parse("[[1,2],[3,4]]")), (Perm{1, 0, 3, 2}));
    EXPECT_EQ(parse_cycles(3, json::parse("[]")), perm_identity(3));
    EXPECT_THROW(parse_cycles(3, json::parse("[[1,4]]")), Error);
}

TEST(Io, SchemaErrors)
{
    EXPECT_TRUE(th::throws_code([] { read_json("/nonexistent/x.json"); }, Errc::SchemaError));
    const std::string p = testing::TempDir() + "bad.json";
    std::ofstream(p) << "{\"name\": ";
    EXPECT_TRUE(th::throws_code([&] { read_json(p); }, Errc::SchemaError));
    json j = emit_arrangement(th::arr("M1"));
    j.erase("lines");
    EXPECT_THROW(parse_arrangement(j), Error);
    json k = emit_arrangement(th::arr("M1"));
    k["lines"][1] = k["lines"][0];
    EXPECT_TRUE(th::throws_code([&] { parse_arrangement(k); }, Errc::DuplicateLine));
}

TEST(Io, TensorMissingEdgesAreZero)
{
    const auto c = th::comb("C");
    const Tensor t = parse_tensor(json::parse(R"({"modulus": 5, "tensor": {}})"), c);
    EXPECT_TRUE(t.is_zero());
    EXPECT_EQ(t.values.size(), edges(c).size());
    EXPECT_THROW(parse_tensor(json::parse(R"({"modulus": 5, "tensor": {"P{1,2}->L1": [0]}})"), c), Error);
}

TEST(Io, DatasetListing)
{
    std::set<std::string> names;
    for (auto &it : dataset_list()) names.insert(it.name);
    for (const char *n : {"M1", "N6", "frakM4", "frakN1", "B01", "B29", "C", "D", "W_M1", "ML+", "R-"})
        EXPECT_TRUE(names.count(n)) << n;
    EXPECT_THROW(dataset_arrangement("nope"), Error);
    EXPECT_EQ(dataset_arrangement("M2").lines, th::arr("M2").lines);
}

TEST(Io, SeedFromEnv)
{
    unsetenv("ARRLINK_SEED");
    EXPECT_EQ(seed_from_env(4), 4u);
    setenv("ARRLINK_SEED", "9", 1);
    EXPECT_EQ(seed_from_env(4), 9u);
    setenv("ARRLINK_SEED", "x1", 1);
    EXPECT_THROW(seed_from_env(), Error);
    unsetenv("ARRLINK_SEED");
}
