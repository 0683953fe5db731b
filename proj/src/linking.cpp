#include "arrlink/linking.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace arrlink {

namespace {

struct Rng {
    std::mt19937_64 g;
    explicit Rng(uint64_t s) : g(s) {}
    long uni(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
};

FieldElement q(const FieldPtr &f, long v) { return FieldElement::rational(f, v); }

// u = f0(Q) / (f0(Q) - fP(Q)) must avoid the real interval [0, 1]
bool segment_clear(const ProjectionFrame &fr, int p, const Vec3 &fP)
{
    for (size_t k = 0; k < fr.sing.size(); ++k) {
        if (static_cast<int>(k) == p) continue;
        const Vec3 &Q = fr.sing[k].point.c;
        const FieldElement a = dot(fr.f0, Q), b = dot(fP, Q);
        const FieldElement den = a - b;
        if (den.is_zero()) continue;
        const FieldElement u = a / den;
        if (fe_sign(u, Part::Imaginary) != 0) continue;
        if (fe_sign(u, Part::Real) >= 0 && fe_sign(u - q(u.field(), 1), Part::Real) <= 0) return false;
    }
    return true;
}

struct Endpoints {
    FieldElement w0, w1;
};

Endpoints endpoints(const ProjectionFrame &fr, int p, int line, int other)
{
    const FieldPtr &f = fr.arr.field;
    const Vec3 &l = fr.arr.lines[line].c;
    const FieldElement scale = fr.beta[p] / dot(l, fr.P0.c);
    const Vec3 lh{l[0] * scale, l[1] * scale, l[2] * scale};
    const Vec3 &c = fr.arr.lines[other].c;
    const Vec3 &fP = fr.fP[p];
    const Vec3 v0 = cross(c, fr.f0);
    const Vec3 v1 = cross(c, fP);
    (void)f;
    return {dot(lh, v0) / (-dot(fP, v0)), dot(lh, v1) / dot(fr.f0, v1)};
}

bool endpoints_nondegenerate(const ProjectionFrame &fr, int p)
{
    const auto &sup = fr.sing[p].support;
    for (int L : sup)
        for (int k = 0; k < fr.arr.size(); ++k) {
            if (std::binary_search(sup.begin(), sup.end(), k)) continue;
            auto e = endpoints(fr, p, L, k);
            if (fe_sign(e.w0, Part::Real) == 0 || fe_sign(e.w1, Part::Real) == 0) return false;
        }
    return true;
}

} // namespace

ProjectionFrame choose_frame(const Arrangement &a0, uint64_t seed)
{
    ProjectionFrame fr;
    fr.arr = a0.field->totally_real() ? lift(a0, adjoin_i(a0.field)) : a0;
    fr.seed = seed;
    const FieldPtr &f = fr.arr.field;
    fr.sing = singular_points(fr.arr);
    Rng rng(seed);
    const int d = f->degree();
    const FieldElement alpha = FieldElement::alpha(f);

    for (int attempt = 1; attempt <= 256; ++attempt) {
        fr.attempts = attempt;
        // non-rational coordinates: with a rational frame, w0 for a pair of complex
        // conjugate lines is always purely imaginary
        auto coord = [&](long lo, long hi) {
            FieldElement x = q(f, rng.uni(lo, hi));
            if (d >= 2) x = x + alpha * q(f, rng.uni(-2, 2));
            return x;
        };
        Vec3 P0{coord(-5, 5), coord(-5, 5), coord(1, 5)};
        bool ok = true;
        for (auto &l : fr.arr.lines)
            if (dot(l.c, P0).is_zero()) ok = false;
        if (!ok) continue;
        Vec3 dir{coord(-5, 5), coord(-5, 5), coord(-5, 5)};
        Vec3 f0 = cross(P0, dir);
        if (is_zero(f0)) continue;
        for (auto &s : fr.sing)
            if (dot(f0, s.point.c).is_zero()) ok = false;
        if (!ok) continue;
        fr.P0 = make_point(P0);
        fr.f0 = f0;
        fr.X = dir;
        fr.beta.assign(fr.sing.size(), FieldElement());
        fr.fP.assign(fr.sing.size(), Vec3{});
        for (size_t p = 0; p < fr.sing.size() && ok; ++p) {
            Vec3 fh = cross(fr.P0.c, fr.sing[p].point.c);
            const FieldElement kap = dot(fh, fr.X).inv();
            for (auto &x : fh) x = x * kap;
            bool placed = false;
            for (int tries = 0; tries < 16 && !placed; ++tries) {
                FieldElement beta = q(f, rng.uni(1, 3));
                FieldElement pw = alpha;
                for (int k = 1; k < std::min(d, 3); ++k) {
                    beta = beta + pw * q(f, rng.uni(-3, 3));
                    pw = pw * alpha;
                }
                if (fe_sign(beta, Part::Imaginary) == 0) continue;
                Vec3 fP{fh[0] * beta, fh[1] * beta, fh[2] * beta};
                if (!segment_clear(fr, static_cast<int>(p), fP)) continue;
                fr.beta[p] = beta;
                fr.fP[p] = fP;
                if (!endpoints_nondegenerate(fr, static_cast<int>(p))) continue;
                placed = true;
            }
            if (!placed) ok = false;
        }
        if (ok) return fr;
    }
    throw Error(Errc::FrameSearchExhausted, "no certified frame after 256 attempts");
}

bool frame_certified(const ProjectionFrame &fr)
{
    for (size_t p = 0; p < fr.sing.size(); ++p) {
        if (!segment_clear(fr, static_cast<int>(p), fr.fP[p])) return false;
        if (!endpoints_nondegenerate(fr, static_cast<int>(p))) return false;
    }
    return true;
}

int phi(const ProjectionFrame &fr, int p, int line, int other, const PhiOptions &opt)
{
    const auto &sup = fr.sing.at(p).support;
    if (!std::binary_search(sup.begin(), sup.end(), line)) throw Error(Errc::LineNotInSupport, "edge line");
    if (std::binary_search(sup.begin(), sup.end(), other)) return 0;
    const auto e = endpoints(fr, p, line, other);
    const int q1 = fe_sign(e.w0, Part::Real), p1 = fe_sign(e.w1, Part::Real);
    if (q1 == 0 && p1 == 0) throw Error(Errc::DegenerateSegment, "real part vanishes along the segment");
    if (q1 == 0 || p1 == 0) return 0;
    int s;
    if (opt.t == CrossingFormula::Interpolated) {
        if (q1 == p1) return 0;
        const FieldElement cw0 = fe_apply(fr.arr.field->conjugation(), e.w0);
        s = fe_sign(cw0 * e.w1, Part::Imaginary) * q1;
    } else {
        if (q1 != p1) return 0;
        s = fe_sign(e.w0 * e.w1, Part::Imaginary) * q1;
    }
    const bool over = opt.over == OverRule::PositiveImaginary ? s > 0 : s < 0;
    return over ? q1 : 0;
}

MeridianSum ulk_cov(const ProjectionFrame &fr, int p, int line, const PhiOptions &opt)
{
    MeridianSum m(fr.arr.size(), 0);
    for (int k = 0; k < fr.arr.size(); ++k) m[k] = phi(fr, p, line, k, opt);
    return m;
}

// tables are pure functions of (field, lines, seed, options); compare and batch ask for the same ones repeatedly
static std::string table_key(const Arrangement &a, uint64_t seed, const PhiOptions &opt)
{
    std::ostringstream os;
    for (auto &c : a.field->min_poly()) os << c.get_str() << ",";
    os << "@" << a.field->designated() << "|" << seed << "|" << static_cast<int>(opt.over) << static_cast<int>(opt.t);
    for (auto &l : a.lines)
        for (auto &x : l.c) os << "|" << x.str();
    return os.str();
}

UlkTable ulk_table_cov(const Arrangement &a, uint64_t seed, const PhiOptions &opt)
{
    static std::mutex mu;
    static std::map<std::string, UlkTable> memo;
    const std::string key = table_key(a, seed, opt);
    {
        std::lock_guard<std::mutex> g(mu);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const ProjectionFrame fr = choose_frame(a, seed);
    UlkTable t;
    for (size_t p = 0; p < fr.sing.size(); ++p)
        for (int l : fr.sing[p].support) t.push_back(ulk_cov(fr, static_cast<int>(p), l, opt));
    std::lock_guard<std::mutex> g(mu);
    if (memo.size() >= 256) memo.clear();
    memo[key] = t;
    return t;
}

UlkTable ulk_table_wiring(const WiringDiagram &w, const Combinatorics &c)
{
    validate_wiring(w, c);
    std::map<std::vector<int>, int> ev;
    for (size_t j = 0; j < w.events.size(); ++j) {
        auto s = w.events[j].point;
        std::sort(s.begin(), s.end());
        ev[s] = static_cast<int>(j);
    }
    UlkTable t;
    for (auto &e : edges(c)) {
        const EdgeBraid eb = edge_braid(w, ev.at(c.supports[e.point]), e.line);
        t.push_back(ulk_braid(eb.word, eb.start, e.line, c.n));
    }
    return t;
}

int64_t pair_tensor(const Tensor &t, const UlkTable &u)
{
    if (t.values.size() != u.size()) throw Error(Errc::InvalidTensor, "tensor does not match the edges");
    int64_t s = 0;
    for (size_t e = 0; e < u.size(); ++e)
        for (size_t k = 0; k < u[e].size(); ++k) s += t.values[e][k] * u[e][k];
    return t.modulus ? mod(s, t.modulus) : s;
}

int64_t lln(const Arrangement &a, const Tensor &t, const LlnOptions &opt)
{
    const Combinatorics c = comb_from_arrangement(a);
    auto bad = tensor_validate(c, t);
    if (!bad.empty()) throw Error(Errc::InvalidTensor, bad.front().str(c));
    if (opt.method == Method::Wiring) {
        if (!opt.wiring) throw Error(Errc::InconsistentWiring, "wiring method without a diagram");
        return pair_tensor(t, ulk_table_wiring(*opt.wiring, c));
    }
    return pair_tensor(t, ulk_table_cov(a, opt.seed, opt.phi));
}

WiringDiagram wiring_perm(const Perm &s, const WiringDiagram &w)
{
    WiringDiagram r = w;
    for (auto &l : r.strands) l = s[l];
    for (auto &e : r.events)
        for (auto &l : e.point) l = s[l];
    return r;
}

std::vector<OrbitValue> lln_orbit(const Arrangement &a, const Tensor &t, const PermGroup &g, const LlnOptions &opt)
{
    const Combinatorics c = comb_from_arrangement(a);
    std::vector<OrbitValue> out;
    if (opt.method == Method::Cov) {
        // a frame for a is a frame for s.a, so lln(s.a, t) pairs t o s with the table of a
        const auto bad = tensor_validate(c, t);
        if (!bad.empty()) throw Error(Errc::InvalidTensor, bad.front().str(c));
        const UlkTable u = ulk_table_cov(a, opt.seed, opt.phi);
        for (auto &s : g.elements) {
            if (!is_automorphism(s, c)) throw Error(Errc::NotAnAutomorphism, perm_cycles(s));
            out.push_back({s, pair_tensor(tensor_perm(perm_inverse(s), c, t), u)});
        }
        return out;
    }
    for (auto &s : g.elements) {
        if (!is_automorphism(s, c)) throw Error(Errc::NotAnAutomorphism, perm_cycles(s));
        LlnOptions o = opt;
        WiringDiagram w;
        if (opt.method == Method::Wiring && opt.wiring) {
            w = wiring_perm(s, *opt.wiring);
            o.wiring = &w;
        }
        out.push_back({s, lln(perm_act(s, a), t, o)});
    }
    return out;
}

std::set<int64_t> full_set(const std::vector<OrbitValue> &orbit, int64_t modulus)
{
    std::set<int64_t> s;
    for (auto &o : orbit) {
        s.insert(mod(o.value, modulus));
        s.insert(mod(-o.value, modulus));
    }
    return s;
}

std::set<int64_t> full_lln(const Arrangement &a, const Tensor &t, const LlnOptions &opt)
{
    return full_set(lln_orbit(a, t, comb_automorphisms(comb_from_arrangement(a)), opt), t.modulus);
}

CompareReport compare(const Arrangement &a1, const Arrangement &a2, int64_t modulus, uint64_t seed)
{
    CompareReport r;
    const Combinatorics c1 = comb_from_arrangement(a1), c2 = comb_from_arrangement(a2);
    const PermGroup g1 = comb_automorphisms(c1), g2 = comb_automorphisms(c2);
    r.aut_order_1 = g1.order();
    r.aut_order_2 = g2.order();
    r.stable_1 = blowup_stable(c1).stable;
    r.stable_2 = blowup_stable(c2).stable;
    r.isomorphism = comb_isomorphism(c1, c2);
    r.combinatorics_isomorphic = r.isomorphism.has_value();
    if (!r.combinatorics_isomorphic) {
        r.verdict = "inconclusive";
        return r;
    }
    // relabel a2 so that its combinatorics is c1
    const Arrangement b2 = perm_act(perm_inverse(*r.isomorphism), a2);
    const auto gens = tlg_compute(c1, modulus);
    r.tlg_dim = static_cast<int>(gens.size());
    bool nonhomeo = false, ordered = false;
    LlnOptions opt;
    opt.seed = seed;
    for (auto &t : gens) {
        auto o1 = lln_orbit(a1, t, g1, opt);
        auto o2 = lln_orbit(b2, t, g1, opt);
        const int64_t v1 = o1.front().value, v2 = o2.front().value;
        r.values_1.push_back(v1);
        r.values_2.push_back(v2);
        auto f1 = full_set(o1, modulus), f2 = full_set(o2, modulus);
        r.full_set_1.push_back(f1);
        r.full_set_2.push_back(f2);
        if (v1 != v2) ordered = true;
        bool disjoint = true;
        for (auto x : f1)
            if (f2.count(x)) disjoint = false;
        if (g1.order() == 1 && v2 != v1 && v2 != mod(-v1, modulus)) nonhomeo = true;
        if (r.stable_1 && r.stable_2 && disjoint) nonhomeo = true;
    }
    r.verdict = nonhomeo ? "non-homeomorphic complements" : ordered ? "ordered-oriented distinct" : "inconclusive";
    return r;
}

} // namespace arrlink
