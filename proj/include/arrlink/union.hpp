#pragma once
// Ordered unions, the sum of tensors on the two factors, and the
// MacLane / Rybnikov builders.
#include "arrlink/linking.hpp"

#include <optional>

namespace arrlink {

struct OrderedUnion {
    Arrangement a1, a2;
    Arrangement result; // lines of a1, then lines r.. of a2
    int r = 0;
    int n1 = 0;
    std::vector<int> map2; // line j of a2 -> its index in result
};

// r is the longest common prefix unless given
OrderedUnion ordered_union(const Arrangement &a1, const Arrangement &a2, std::optional<int> r = std::nullopt);

// every multiple point of the union lies inside one factor
bool union_generic(const OrderedUnion &u);

Tensor tensor_oplus(const Tensor &t1, const Tensor &t2, const OrderedUnion &u);

struct MultiplicativityResult {
    int64_t lhs = 0, rhs = 0, v1 = 0, v2 = 0;
    bool equal = false;
};
MultiplicativityResult multiplicativity_check(const OrderedUnion &u, const Tensor &t1, const Tensor &t2,
                                              const LlnOptions &opt = {});

FieldPtr eisenstein_field(); // Q(omega), omega ~ exp(2 pi i/3)

// 8 lines, 8 triple points. Lines 0,1,2 are rational and meet at [1:1:1].
Arrangement maclane(int sign);
// generator of TLG(MacLane, Z/3) with lln(maclane(+1)) = 1
Tensor maclane_lambda0(uint64_t seed = 0);

// points x -> x + c (w.x) with c = [1:1:1]; fixes every line through c
Mat3 homology_at_center(const FieldPtr &f, const std::array<long, 3> &w);

struct RybnikovPair {
    OrderedUnion plus, minus;
    Mat3 psi;
    std::array<long, 3> w{};
    int attempts = 0;
};
// retries psi until both unions have only the expected multiple points and isomorphic combinatorics
RybnikovPair rybnikov(uint64_t seed = 0);
Arrangement rybnikov(int sign, uint64_t seed);

struct RybnikovLikeReport {
    bool cond_i_plus = false, cond_i_minus = false;
    size_t h_plus = 0, h_minus = 0, aut_plus = 0, aut_minus = 0;
    bool cond_ii = false;
    std::vector<int64_t> values; // lln(h.A, t) over H+ then H-
    bool predicts_non_homeomorphic = false;
};
// u_plus = A (+) psi+(A), u_minus = A (+) psi-(conj A)
RybnikovLikeReport rybnikov_like_check(const OrderedUnion &u_plus, const OrderedUnion &u_minus, const Tensor &t0,
                                       const LlnOptions &opt = {});

} // namespace arrlink
