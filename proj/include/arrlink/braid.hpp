#pragma once
// Braid words, braided wiring diagrams and upper linking numbers.
#include "arrlink/combinatorics.hpp"

#include <vector>

namespace arrlink {

// letter k > 0: positive crossing of the strands at positions k, k+1 (1-based);
// the strand at the smaller position passes over. Negative letters: the other one.
struct BraidWord {
    int strands = 0;
    std::vector<int> letters;
};

struct StrandState {
    std::vector<int> line_at; // position (0-based) -> line (0-based)
    void apply(int letter);
    int position(int line) const; // -1 if absent
};

struct WiringEvent {
    std::vector<int> braid;
    std::vector<int> point; // lines (0-based) in strand order at the event
};

struct WiringDiagram {
    std::vector<int> strands; // initial top-to-bottom order of lines (0-based)
    std::vector<WiringEvent> events;
};

// integer coefficient per line, meaningful modulo adding a constant vector
using MeridianSum = std::vector<int64_t>;
bool meridian_equal(const MeridianSum &a, const MeridianSum &b);

// positive block half-twist on the contiguous strands of support; updates state
BraidWord half_twist(StrandState &state, const std::vector<int> &support);

struct EdgeBraid {
    BraidWord word;    // after strand deletion
    StrandState start; // initial state restricted to the kept strands
};
// b_1 T_1 ... T_{i-1} b_i, keeping L and the lines outside the support of event i
EdgeBraid edge_braid(const WiringDiagram &w, int event, int line);

std::pair<BraidWord, StrandState> strand_delete(const BraidWord &b, const StrandState &state,
                                                const std::vector<bool> &keep);

MeridianSum ulk_braid(const BraidWord &b, const StrandState &state, int line, int n_lines);

// throws InconsistentWiring unless the events cover exactly the supports of c and
// every event's strands are contiguous in the listed order
void validate_wiring(const WiringDiagram &w, const Combinatorics &c);

} // namespace arrlink
