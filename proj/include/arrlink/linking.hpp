#pragma once
// Upper linking numbers by a change of variables, the loop linking number,
// orbit values over automorphisms and the comparison report.
#include "arrlink/braid.hpp"
#include "arrlink/tlg.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace arrlink {

// which side counts as "over" at the real crossing of the segment
enum class OverRule { PositiveImaginary, NegativeImaginary };
// crossing parameter: root of the interpolated real part, or the printed q1/(p1+q1)
enum class CrossingFormula { Interpolated, Printed };

struct PhiOptions {
    OverRule over = OverRule::PositiveImaginary;
    CrossingFormula t = CrossingFormula::Interpolated;
};

struct ProjectionFrame {
    Arrangement arr; // over K, or over K(i) when K is totally real
    std::vector<SingularPoint> sing;
    ProjPoint P0;
    Vec3 f0;                        // covector of F0
    Vec3 X;                         // reference point on F0
    std::vector<FieldElement> beta; // per singular point
    std::vector<Vec3> fP;           // per singular point, scaled covector of the line P0 P
    uint64_t seed = 0;
    int attempts = 0;
};

ProjectionFrame choose_frame(const Arrangement &a, uint64_t seed);
// exact check of the segment condition for every singular point
bool frame_certified(const ProjectionFrame &f);

int phi(const ProjectionFrame &f, int point, int line, int other, const PhiOptions &opt = {});
MeridianSum ulk_cov(const ProjectionFrame &f, int point, int line, const PhiOptions &opt = {});

// per edge of comb(a), in edges() order
using UlkTable = std::vector<MeridianSum>;
UlkTable ulk_table_cov(const Arrangement &a, uint64_t seed, const PhiOptions &opt = {});
UlkTable ulk_table_wiring(const WiringDiagram &w, const Combinatorics &c);

int64_t pair_tensor(const Tensor &t, const UlkTable &u); // mod t.modulus (raw when 0)

enum class Method { Cov, Wiring };

struct LlnOptions {
    Method method = Method::Cov;
    const WiringDiagram *wiring = nullptr;
    uint64_t seed = 0;
    PhiOptions phi;
};

int64_t lln(const Arrangement &a, const Tensor &t, const LlnOptions &opt = {});

// wiring diagram of perm_act(sigma, a) from one of a
WiringDiagram wiring_perm(const Perm &sigma, const WiringDiagram &w);

struct OrbitValue {
    Perm sigma;
    int64_t value;
};
std::vector<OrbitValue> lln_orbit(const Arrangement &a, const Tensor &t, const PermGroup &g,
                                  const LlnOptions &opt = {});
std::set<int64_t> full_lln(const Arrangement &a, const Tensor &t, const LlnOptions &opt = {});
std::set<int64_t> full_set(const std::vector<OrbitValue> &orbit, int64_t modulus);

struct CompareReport {
    bool combinatorics_isomorphic = false;
    std::optional<Perm> isomorphism;
    size_t aut_order_1 = 0, aut_order_2 = 0;
    bool stable_1 = false, stable_2 = false;
    int tlg_dim = 0;
    std::vector<int64_t> values_1, values_2;
    std::vector<std::set<int64_t>> full_set_1, full_set_2;
    std::string verdict;
};

CompareReport compare(const Arrangement &a1, const Arrangement &a2, int64_t modulus, uint64_t seed = 0);

} // namespace arrlink
