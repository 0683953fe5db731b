#include "arrlink/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace arrlink {

void StrandState::apply(int letter)
{
    const int k = std::abs(letter);
    if (k < 1 || k >= static_cast<int>(line_at.size()))
        throw Error(Errc::InconsistentWiring, "braid letter " + std::to_string(letter) + " out of range");
    std::swap(line_at[k - 1], line_at[k]);
}

int StrandState::position(int line) const
{
    auto it = std::find(line_at.begin(), line_at.end(), line);
    return it == line_at.end() ? -1 : static_cast<int>(it - line_at.begin());
}

bool meridian_equal(const MeridianSum &a, const MeridianSum &b)
{
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const int64_t d = a[0] - b[0];
    for (size_t k = 1; k < a.size(); ++k)
        if (a[k] - b[k] != d) return false;
    return true;
}

static int block_start(const StrandState &s, const std::vector<int> &support)
{
    int lo = static_cast<int>(s.line_at.size()), hi = -1;
    for (int l : support) {
        int p = s.position(l);
        if (p < 0) throw Error(Errc::NonContiguousSupport, "line " + std::to_string(l + 1) + " not carried");
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    if (hi - lo + 1 != static_cast<int>(support.size()))
        throw Error(Errc::NonContiguousSupport, "support strands not adjacent");
    return lo;
}

BraidWord half_twist(StrandState &state, const std::vector<int> &support)
{
    const int p = block_start(state, support) + 1; // 1-based
    const int m = static_cast<int>(support.size());
    BraidWord w;
    w.strands = static_cast<int>(state.line_at.size());
    for (int r = m - 1; r >= 1; --r)
        for (int k = 0; k < r; ++k) w.letters.push_back(p + k);
    for (int x : w.letters) state.apply(x);
    return w;
}

std::pair<BraidWord, StrandState> strand_delete(const BraidWord &b, const StrandState &state,
                                                const std::vector<bool> &keep)
{
    StrandState s = state;
    BraidWord out;
    StrandState kept;
    for (int l : state.line_at)
        if (keep[l]) kept.line_at.push_back(l);
    out.strands = static_cast<int>(kept.line_at.size());
    for (int x : b.letters) {
        const int k = std::abs(x);
        if (k < 1 || k >= static_cast<int>(s.line_at.size()))
            throw Error(Errc::InconsistentWiring, "braid letter out of range");
        const int a = s.line_at[k - 1], c = s.line_at[k];
        if (keep[a] && keep[c]) {
            int pos = 0;
            for (int j = 0; j < k - 1; ++j)
                if (keep[s.line_at[j]]) ++pos;
            out.letters.push_back(x > 0 ? pos + 1 : -(pos + 1));
        }
        s.apply(x);
    }
    return {out, kept};
}

MeridianSum ulk_braid(const BraidWord &b, const StrandState &state, int line, int n_lines)
{
    if (state.position(line) < 0) throw Error(Errc::LineAbsent, "line " + std::to_string(line + 1) + " not carried");
    MeridianSum m(n_lines, 0);
    StrandState s = state;
    for (int x : b.letters) {
        const int k = std::abs(x);
        if (k < 1 || k >= static_cast<int>(s.line_at.size()))
            throw Error(Errc::InconsistentWiring, "braid letter out of range");
        const int upper = s.line_at[k - 1], lower = s.line_at[k];
        const int eps = x > 0 ? 1 : -1;
        const int over = x > 0 ? upper : lower, under = x > 0 ? lower : upper;
        if (under == line) m[over] += eps;
        s.apply(x);
    }
    return m;
}

EdgeBraid edge_braid(const WiringDiagram &w, int event, int line)
{
    const auto &pt = w.events.at(event).point;
    if (std::find(pt.begin(), pt.end(), line) == pt.end())
        throw Error(Errc::LineNotInSupport, "line " + std::to_string(line + 1) + " not in event support");
    StrandState s{w.strands};
    BraidWord word;
    word.strands = static_cast<int>(w.strands.size());
    for (int j = 0; j <= event; ++j) {
        for (int x : w.events[j].braid) {
            s.apply(x);
            word.letters.push_back(x);
        }
        if (j < event) {
            BraidWord t = half_twist(s, w.events[j].point);
            word.letters.insert(word.letters.end(), t.letters.begin(), t.letters.end());
        }
    }
    block_start(s, pt);
    std::vector<bool> keep(*std::max_element(w.strands.begin(), w.strands.end()) + 1, true);
    for (int l : pt)
        if (l != line) keep[l] = false;
    auto [bw, st] = strand_delete(word, StrandState{w.strands}, keep);
    return {bw, st};
}

void validate_wiring(const WiringDiagram &w, const Combinatorics &c)
{
    std::vector<int> sorted_strands = w.strands;
    std::sort(sorted_strands.begin(), sorted_strands.end());
    if (sorted_strands != perm_identity(c.n)) throw Error(Errc::InconsistentWiring, "strands are not the lines");
    std::set<std::vector<int>> seen;
    StrandState s{w.strands};
    for (size_t j = 0; j < w.events.size(); ++j) {
        for (int x : w.events[j].braid) s.apply(x);
        const auto &pt = w.events[j].point;
        int p;
        try {
            p = block_start(s, pt);
        } catch (const Error &) {
            throw Error(Errc::InconsistentWiring, "event " + std::to_string(j + 1) + ": strands not contiguous");
        }
        for (size_t k = 0; k < pt.size(); ++k)
            if (s.line_at[p + k] != pt[k])
                throw Error(Errc::InconsistentWiring, "event " + std::to_string(j + 1) + ": strand order differs");
        auto sp = pt;
        std::sort(sp.begin(), sp.end());
        seen.insert(sp);
        half_twist(s, pt);
    }
    std::set<std::vector<int>> want(c.supports.begin(), c.supports.end());
    if (seen != want || seen.size() != w.events.size())
        throw Error(Errc::InconsistentWiring, "event supports differ from the combinatorics");
}

} // namespace arrlink
