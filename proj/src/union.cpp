#include "arrlink/union.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace arrlink {

OrderedUnion ordered_union(const Arrangement &a1, const Arrangement &a2, std::optional<int> r_opt)
{
    if (!a1.field->same_as(*a2.field)) throw Error(Errc::FieldMismatch, "ordered union over different fields");
    const int n1 = a1.size(), n2 = a2.size();
    int r = 0;
    while (r < n1 && r < n2 && a1.lines[r] == a2.lines[r]) ++r;
    if (r_opt) {
        if (*r_opt < 0 || *r_opt > r) throw Error(Errc::SharedLineOutsidePrefix, "prefix lines differ before r");
        r = *r_opt;
    }
    if (r == n1 || r == n2) throw Error(Errc::SharedLineOutsidePrefix, "one factor is contained in the prefix");
    for (int i = r; i < n1; ++i)
        for (int j = r; j < n2; ++j)
            if (a1.lines[i] == a2.lines[j])
                throw Error(Errc::SharedLineOutsidePrefix,
                            "line " + std::to_string(i + 1) + " of the first factor is line " + std::to_string(j + 1) +
                                " of the second");
    OrderedUnion u{a1, a2, {}, r, n1, {}};
    std::vector<ProjLine> lines = a1.lines;
    for (int j = 0; j < n2; ++j) {
        if (j < r) {
            u.map2.push_back(j);
        } else {
            u.map2.push_back(static_cast<int>(lines.size()));
            lines.push_back(a2.lines[j]);
        }
    }
    std::string name = a1.name.empty() && a2.name.empty() ? "" : a1.name + "+" + a2.name;
    u.result = make_arrangement(a1.field, lines, name);
    return u;
}

// add the contribution of one factor: lines of the factor sit at `where` in the union
static void push_factor(const Combinatorics &cu, const std::vector<Edge> &eu, const Combinatorics &cf,
                        const Tensor &tf, const std::vector<int> &where, Tensor &out)
{
    std::vector<int> back(cu.n, -1);
    for (size_t j = 0; j < where.size(); ++j) back[where[j]] = static_cast<int>(j);
    std::map<std::pair<std::vector<int>, int>, int> fidx;
    const auto ef = edges(cf);
    for (size_t e = 0; e < ef.size(); ++e) fidx[{cf.supports[ef[e].point], ef[e].line}] = static_cast<int>(e);
    for (size_t e = 0; e < eu.size(); ++e) {
        const int L = back[eu[e].line];
        if (L < 0) continue;
        std::vector<int> s;
        for (int l : cu.supports[eu[e].point])
            if (back[l] >= 0) s.push_back(back[l]);
        if (s.size() < 2) continue;
        std::sort(s.begin(), s.end());
        auto it = fidx.find({s, L});
        if (it == fidx.end()) throw Error(Errc::InvalidTensor, "factor point missing from its combinatorics");
        for (int j = 0; j < cf.n; ++j) out.values[e][where[j]] += tf.values[it->second][j];
    }
}

Tensor tensor_oplus(const Tensor &t1, const Tensor &t2, const OrderedUnion &u)
{
    if (t1.modulus != t2.modulus) throw Error(Errc::ModulusMismatch, "factors carry different moduli");
    const Combinatorics cu = comb_from_arrangement(u.result);
    const Combinatorics c1 = comb_from_arrangement(u.a1), c2 = comb_from_arrangement(u.a2);
    const auto eu = edges(cu);
    Tensor out = tensor_zero(cu, t1.modulus);
    push_factor(cu, eu, c1, t1, perm_identity(u.n1), out);
    push_factor(cu, eu, c2, t2, u.map2, out);
    if (out.modulus > 0)
        for (auto &v : out.values)
            for (auto &x : v) x = mod(x, out.modulus);
    return out;
}

MultiplicativityResult multiplicativity_check(const OrderedUnion &u, const Tensor &t1, const Tensor &t2,
                                              const LlnOptions &opt)
{
    LlnOptions o = opt;
    o.method = Method::Cov; // wiring diagrams are per arrangement
    o.wiring = nullptr;
    MultiplicativityResult m;
    m.lhs = lln(u.result, tensor_oplus(t1, t2, u), o);
    m.v1 = lln(u.a1, t1, o);
    m.v2 = lln(u.a2, t2, o);
    m.rhs = m.v1 + m.v2;
    if (t1.modulus > 0) m.rhs = mod(m.rhs, t1.modulus);
    m.equal = m.lhs == m.rhs;
    return m;
}

FieldPtr eisenstein_field()
{
    static const FieldPtr f = nf_create(std::vector<long>{1, 1, 1}, -0.5, 0.8660254);
    return f;
}

Arrangement maclane(int sign)
{
    FieldPtr f = eisenstein_field();
    FieldElement w = FieldElement::alpha(f);
    if (sign < 0) w = fe_apply(f->conjugation(), w);
    const FieldElement w2 = w * w, o = FieldElement::rational(f, 1), z = FieldElement::rational(f, 0);
    // dual Hesse configuration without the line z = omega^2 x
    std::vector<ProjLine> l = {
        make_line({z, o, -o}),  make_line({o, z, -o}),  make_line({o, -o, z}),  make_line({o, -w, z}),
        make_line({o, -w2, z}), make_line({z, o, -w}),  make_line({z, o, -w2}), make_line({-w, z, o}),
    };
    return make_arrangement(f, l, sign > 0 ? "ML+" : "ML-");
}

Tensor maclane_lambda0(uint64_t seed)
{
    const Arrangement a = maclane(1);
    const auto gens = tlg_compute(comb_from_arrangement(a), 3);
    if (gens.size() != 1) throw Error(Errc::InvalidTensor, "MacLane TLG mod 3 is not cyclic");
    LlnOptions o;
    o.seed = seed;
    const int64_t v = lln(a, gens[0], o);
    if (v == 0) throw Error(Errc::InvalidTensor, "MacLane generator pairs to 0");
    return v == 1 ? gens[0] : tensor_scale(gens[0], 2);
}

Mat3 homology_at_center(const FieldPtr &f, const std::array<long, 3> &w)
{
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = FieldElement::rational(f, (i == j ? 1 : 0) + w[j]);
    return m;
}

bool union_generic(const OrderedUnion &u)
{
    std::vector<bool> in1(u.result.size(), false), in2(u.result.size(), false);
    for (int j = 0; j < u.n1; ++j) in1[j] = true;
    for (int j : u.map2) in2[j] = true;
    for (auto &s : comb_from_arrangement(u.result).supports) {
        if (s.size() == 2) continue;
        bool a = true, b = true;
        for (int l : s) {
            a = a && in1[l];
            b = b && in2[l];
        }
        if (!a && !b) return false;
    }
    return true;
}

RybnikovPair rybnikov(uint64_t seed)
{
    const Arrangement mp = maclane(1), mm = maclane(-1);
    FieldPtr f = mp.field;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int attempt = 1; attempt <= 200; ++attempt) {
        std::array<long, 3> w{d(rng), d(rng), d(rng)};
        if (w[0] + w[1] + w[2] == -1) continue; // det = 1 + w.c
        if (w[0] == 0 && w[1] == 0 && w[2] == 0) continue;
        const Mat3 psi = homology_at_center(f, w);
        try {
            OrderedUnion up = ordered_union(mp, apply_projectivity(psi, mp), 3);
            OrderedUnion um = ordered_union(mp, apply_projectivity(psi, mm), 3);
            if (!union_generic(up) || !union_generic(um)) continue;
            if (!comb_isomorphism(comb_from_arrangement(up.result), comb_from_arrangement(um.result))) continue;
            up.result.name = "R+";
            um.result.name = "R-";
            return {up, um, psi, w, attempt};
        } catch (const Error &e) {
            if (e.code() != Errc::SharedLineOutsidePrefix && e.code() != Errc::DuplicateLine) throw;
        }
    }
    throw Error(Errc::GenericityExhausted, "no generic psi in 200 draws");
}

Arrangement rybnikov(int sign, uint64_t seed)
{
    auto p = rybnikov(seed);
    return sign > 0 ? p.plus.result : p.minus.result;
}

// H: automorphisms of the union preserving the first factor and acting the same way on both
static bool split_aut(const OrderedUnion &u, std::vector<Perm> &h, size_t &aut_order)
{
    const Combinatorics cu = comb_from_arrangement(u.result), c1 = comb_from_arrangement(u.a1);
    const PermGroup g = comb_automorphisms(cu);
    aut_order = g.order();
    const int n = u.n1;
    if (u.a2.size() != n) return false;
    bool diagonal = true;
    for (auto &s : g.elements) {
        bool keeps = true;
        for (int j = 0; j < n; ++j) keeps = keeps && s[j] < n;
        if (!keeps) continue;
        Perm r(s.begin(), s.begin() + n);
        for (int j = 0; j < n; ++j) diagonal = diagonal && s[u.map2[j]] == u.map2[r[j]];
        if (!is_automorphism(r, c1)) diagonal = false;
        h.push_back(r);
    }
    Perm tau = perm_identity(cu.n);
    for (int j = 0; j < n; ++j) {
        tau[j] = u.map2[j];
        tau[u.map2[j]] = j;
    }
    return diagonal && is_automorphism(tau, cu) && g.order() == 2 * h.size();
}

RybnikovLikeReport rybnikov_like_check(const OrderedUnion &u_plus, const OrderedUnion &u_minus, const Tensor &t0,
                                       const LlnOptions &opt)
{
    RybnikovLikeReport r;
    std::vector<Perm> hp, hm;
    r.cond_i_plus = split_aut(u_plus, hp, r.aut_plus);
    r.cond_i_minus = split_aut(u_minus, hm, r.aut_minus);
    r.h_plus = hp.size();
    r.h_minus = hm.size();
    PermGroup g{u_plus.n1, {}, hp};
    g.elements.insert(g.elements.end(), hm.begin(), hm.end());
    LlnOptions o = opt;
    o.method = Method::Cov;
    o.wiring = nullptr;
    r.cond_ii = true;
    for (auto &ov : lln_orbit(u_plus.a1, t0, g, o)) {
        r.values.push_back(ov.value);
        if (mod(2 * ov.value, t0.modulus) == 0) r.cond_ii = false;
    }
    r.predicts_non_homeomorphic = r.cond_i_plus && r.cond_i_minus && r.cond_ii;
    return r;
}

} // namespace arrlink
