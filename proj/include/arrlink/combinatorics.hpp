#pragma once
// Intersection data of an arrangement, its incidence graph, automorphisms.
#include "arrlink/arrangement.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrlink {

using Perm = std::vector<int>; // 0-based images

struct Combinatorics {
    int n = 0;
    std::vector<std::vector<int>> supports; // 0-based, each ascending, list sorted
    bool operator==(const Combinatorics &o) const { return n == o.n && supports == o.supports; }
};

// sorts and checks pair coverage (SchemaError)
Combinatorics comb_make(int n, std::vector<std::vector<int>> supports);
Combinatorics comb_from_arrangement(const Arrangement &a);
// index of the support containing lines i != j
std::vector<std::vector<int>> pair_support(const Combinatorics &c);

struct Edge {
    int point; // index into supports
    int line;
};
// lexicographic by (support, line)
std::vector<Edge> edges(const Combinatorics &c);

struct IncidenceGraph {
    int n_lines = 0, n_points = 0;
    std::vector<Edge> edges;
    int components = 0;
    int cycle_rank = 0; // E - V + components
    bool connected = true;
    // signed edge vectors, one per spanning-tree chord
    std::vector<std::vector<int>> cycle_basis;
};
IncidenceGraph incidence_graph(const Combinatorics &c);

struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<Perm> elements; // identity first
    size_t order() const { return elements.size(); }
};

PermGroup group_closure(int degree, const std::vector<Perm> &gens);
bool is_automorphism(const Perm &s, const Combinatorics &c);
PermGroup comb_automorphisms(const Combinatorics &c);
std::optional<Perm> comb_isomorphism(const Combinatorics &c1, const Combinatorics &c2);

struct BlowupGraph {
    int n_lines = 0;
    std::vector<int> dense; // support indices of the exceptional vertices
    std::vector<std::pair<int, int>> edges;
    bool stable = false;
    // an automorphism of the graph mixing lines and exceptional vertices, if any
    std::optional<std::vector<int>> witness;
};
BlowupGraph blowup_stable(const Combinatorics &c);

Combinatorics perm_act(const Perm &s, const Combinatorics &c);

Perm perm_identity(int n);
Perm perm_compose(const Perm &a, const Perm &b); // a after b
Perm perm_inverse(const Perm &a);
std::string perm_cycles(const Perm &p); // 1-based, "()" for identity
Perm perm_from_cycles(int n, const std::vector<std::vector<int>> &cycles1);

} // namespace arrlink
