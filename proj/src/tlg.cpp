#include "arrlink/tlg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace arrlink {

bool Tensor::is_zero() const
{
    for (auto &v : values)
        for (auto x : v)
            if (x != 0) return false;
    return true;
}

std::string edge_key(const Combinatorics &c, const Edge &e)
{
    std::ostringstream os;
    os << "P{";
    const auto &s = c.supports[e.point];
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i] + 1;
    os << "}->L" << e.line + 1;
    return os.str();
}

TlgSystem tlg_matrix(const Combinatorics &c)
{
    TlgSystem m;
    m.edges = edges(c);
    m.n = c.n;
    m.ncols = static_cast<int>(m.edges.size()) * c.n;
    const int n = c.n;
    std::map<std::pair<int, int>, int> eid;
    for (size_t e = 0; e < m.edges.size(); ++e) eid[{m.edges[e].point, m.edges[e].line}] = static_cast<int>(e);
    auto row = [&]() -> std::vector<int64_t> & {
        m.rows.emplace_back(m.ncols, 0);
        return m.rows.back();
    };

    for (size_t e = 0; e < m.edges.size(); ++e) {
        auto &r = row();
        for (int k = 0; k < n; ++k) r[m.col(e, k)] = 1;
        m.kinds.push_back("sum-zero " + edge_key(c, m.edges[e]));
    }
    for (size_t p = 0; p < c.supports.size(); ++p)
        for (int k = 0; k < n; ++k) {
            auto &r = row();
            for (int l : c.supports[p]) r[m.col(eid[{static_cast<int>(p), l}], k)] = -1;
            m.kinds.push_back("boundary-point");
        }
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
            auto &r = row();
            for (size_t e = 0; e < m.edges.size(); ++e)
                if (m.edges[e].line == l) r[m.col(e, k)] = 1;
            m.kinds.push_back("boundary-line");
        }
    for (size_t e = 0; e < m.edges.size(); ++e)
        for (int lp : c.supports[m.edges[e].point]) {
            auto &r = row();
            r[m.col(e, lp)] = 1;
            m.kinds.push_back("condition-I " + edge_key(c, m.edges[e]));
        }
    for (size_t e = 0; e < m.edges.size(); ++e) {
        const int L = m.edges[e].line;
        for (auto &s : c.supports) {
            if (!std::binary_search(s.begin(), s.end(), L)) continue;
            auto &r = row();
            for (int lp : s) r[m.col(e, lp)] = 1;
            m.kinds.push_back("condition-II " + edge_key(c, m.edges[e]));
        }
    }
    return m;
}

static Tensor from_flat(const TlgSystem &m, const std::vector<int64_t> &v, int64_t modulus)
{
    Tensor t;
    t.modulus = modulus;
    for (size_t e = 0; e < m.edges.size(); ++e)
        t.values.emplace_back(v.begin() + m.col(e, 0), v.begin() + m.col(e, 0) + m.n);
    return t;
}

static std::vector<int64_t> flat(const Tensor &x)
{
    std::vector<int64_t> v;
    for (auto &e : x.values) v.insert(v.end(), e.begin(), e.end());
    return v;
}

std::vector<Tensor> tlg_compute(const Combinatorics &c, int64_t modulus) { return tlg_group(c, modulus).generators; }

std::vector<Tensor> tlg_kernel(const Combinatorics &c, int64_t modulus)
{
    const TlgSystem m = tlg_matrix(c);
    std::vector<Tensor> out;
    for (auto &v : kernel_mod(m.rows, m.ncols, modulus)) out.push_back(from_flat(m, v, modulus));
    return out;
}

TlgGroup tlg_group(const Combinatorics &c, int64_t modulus)
{
    const TlgSystem m = tlg_matrix(c);
    TlgGroup g;
    if (is_prime(modulus)) {
        const auto k = kernel_mod_prime(m.rows, m.ncols, modulus);
        const IntegralTlg ig = tlg_integral(c);
        IntMat z;
        for (auto &b : ig.basis) z.push_back(flat(b));
        g.kernel_dim = static_cast<int>(k.size());
        g.integral_rank = ig.rank();
        for (auto &v : quotient_mod_prime(k, z, m.ncols, modulus)) {
            g.generators.push_back(from_flat(m, v, modulus));
            g.orders.push_back(modulus);
        }
        return g;
    }
    const Diagonalization d = diagonalize(m.rows, m.ncols);
    g.integral_rank = m.ncols - d.rank();
    for (auto &gen : kernel_mod_composite(d, m.ncols, modulus)) {
        ++g.kernel_dim;
        if (gen.integral) continue;
        g.generators.push_back(from_flat(m, gen.v, modulus));
        g.orders.push_back(gen.order);
    }
    return g;
}

Tensor tlg_class_normal(const IntegralTlg &ig, const Tensor &t)
{
    const int64_t p = t.modulus;
    if (!is_prime(p)) throw Error(Errc::ModulusMismatch, "class normal form needs a prime modulus");
    IntMat z;
    for (auto &b : ig.basis) z.push_back(flat(b));
    const auto tv = flat(t);
    auto q = quotient_mod_prime({tv}, z, static_cast<int>(tv.size()), p);
    Tensor r = t;
    const int n = t.values.empty() ? 0 : static_cast<int>(t.values[0].size());
    for (size_t e = 0; e < r.values.size(); ++e)
        for (int k = 0; k < n; ++k) r.values[e][k] = q.empty() ? 0 : q[0][e * n + k];
    return r;
}

std::string Violation::str(const Combinatorics &c) const
{
    std::ostringstream os;
    os << kind;
    if (edge >= 0) {
        auto es = edges(c);
        os << " at " << edge_key(c, es[edge]);
    }
    if (index >= 0) os << " [" << index + 1 << "]";
    return os.str();
}

std::vector<Violation> tensor_validate(const Combinatorics &c, const Tensor &t)
{
    std::vector<Violation> out;
    const auto es = edges(c);
    const int n = c.n;
    if (t.values.size() != es.size()) return {{"shape", -1, -1}};
    for (auto &v : t.values)
        if (static_cast<int>(v.size()) != n) return {{"shape", -1, -1}};
    auto zero = [&](int64_t x) { return t.modulus ? mod(x, t.modulus) == 0 : x == 0; };
    std::map<std::pair<int, int>, int> eid;
    for (size_t e = 0; e < es.size(); ++e) eid[{es[e].point, es[e].line}] = static_cast<int>(e);

    for (size_t e = 0; e < es.size(); ++e) {
        int64_t s = 0;
        for (auto x : t.values[e]) s += x;
        if (!zero(s)) out.push_back({"sum-zero", static_cast<int>(e), -1});
    }
    for (size_t p = 0; p < c.supports.size(); ++p)
        for (int k = 0; k < n; ++k) {
            int64_t s = 0;
            for (int l : c.supports[p]) s += t.values[eid[{static_cast<int>(p), l}]][k];
            if (!zero(s)) out.push_back({"boundary-point", eid[{static_cast<int>(p), c.supports[p][0]}], k});
        }
    for (int l = 0; l < n; ++l)
        for (int k = 0; k < n; ++k) {
            int64_t s = 0;
            for (size_t e = 0; e < es.size(); ++e)
                if (es[e].line == l) s += t.values[e][k];
            if (!zero(s)) out.push_back({"boundary-line", -1, l});
        }
    for (size_t e = 0; e < es.size(); ++e) {
        for (int lp : c.supports[es[e].point])
            if (!zero(t.values[e][lp])) out.push_back({"condition-I", static_cast<int>(e), lp});
        for (size_t p = 0; p < c.supports.size(); ++p) {
            const auto &s = c.supports[p];
            if (!std::binary_search(s.begin(), s.end(), es[e].line)) continue;
            int64_t sum = 0;
            for (int lp : s) sum += t.values[e][lp];
            if (!zero(sum)) out.push_back({"condition-II", static_cast<int>(e), static_cast<int>(p)});
        }
    }
    return out;
}

IntegralTlg tlg_integral(const Combinatorics &c)
{
    const TlgSystem m = tlg_matrix(c);
    const Diagonalization d = diagonalize(m.rows, m.ncols);
    IntegralTlg ig;
    ig.invariant_factors = invariant_factors(d.diag);
    for (auto &col : kernel_int(d, m.ncols)) {
        std::vector<int64_t> v;
        for (auto &x : col) {
            if (!x.fits_slong_p()) throw Error(Errc::InvalidTensor, "integral kernel entry too large");
            v.push_back(x.get_si());
        }
        ig.basis.push_back(from_flat(m, v, 0));
    }
    return ig;
}

bool lifts_to_integral(const IntegralTlg &ig, const Tensor &t)
{
    const int64_t p = t.modulus;
    if (!is_prime(p)) throw Error(Errc::ModulusMismatch, "lift test needs a prime modulus");
    // t lifts iff it lies in the F_p-span of the reduced integral basis
    IntMat rows;
    for (auto &b : ig.basis) rows.push_back(flat(b));
    const std::vector<int64_t> tv = flat(t);
    const int ncols = static_cast<int>(tv.size());
    const int r0 = rank_mod_prime(rows, ncols, p);
    rows.push_back(tv);
    return rank_mod_prime(rows, ncols, p) == r0;
}

Tensor tensor_zero(const Combinatorics &c, int64_t modulus)
{
    Tensor t;
    t.modulus = modulus;
    t.values.assign(edges(c).size(), std::vector<int64_t>(c.n, 0));
    return t;
}

Tensor tensor_scale(const Tensor &t, int64_t k)
{
    Tensor r = t;
    for (auto &v : r.values)
        for (auto &x : v) x = t.modulus ? mod(x * k, t.modulus) : x * k;
    return r;
}

Tensor tensor_reduce(const Tensor &t, int64_t modulus)
{
    Tensor r = t;
    r.modulus = modulus;
    for (auto &v : r.values)
        for (auto &x : v) x = mod(x, modulus);
    return r;
}

Tensor tensor_perm(const Perm &sigma, const Combinatorics &c, const Tensor &t)
{
    const Combinatorics sc = perm_act(sigma, c);
    const auto es = edges(c), ses = edges(sc);
    std::map<std::pair<std::vector<int>, int>, int> idx;
    for (size_t e = 0; e < ses.size(); ++e) idx[{sc.supports[ses[e].point], ses[e].line}] = static_cast<int>(e);
    Tensor r;
    r.modulus = t.modulus;
    r.values.assign(ses.size(), std::vector<int64_t>(c.n, 0));
    for (size_t e = 0; e < es.size(); ++e) {
        std::vector<int> s;
        for (int l : c.supports[es[e].point]) s.push_back(sigma[l]);
        std::sort(s.begin(), s.end());
        auto &dst = r.values[idx[{s, sigma[es[e].line]}]];
        for (int k = 0; k < c.n; ++k) dst[sigma[k]] = t.values[e][k];
    }
    return r;
}

} // namespace arrlink
