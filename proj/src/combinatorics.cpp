#include "arrlink/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace arrlink {

Combinatorics comb_make(int n, std::vector<std::vector<int>> supports)
{
    std::vector<std::vector<int>> cover(n, std::vector<int>(n, 0));
    for (auto &s : supports) {
        std::sort(s.begin(), s.end());
        if (s.size() < 2) throw Error(Errc::SchemaError, "support of size < 2");
        for (int x : s)
            if (x < 0 || x >= n) throw Error(Errc::SchemaError, "support index out of range");
        for (size_t i = 0; i < s.size(); ++i)
            for (size_t j = i + 1; j < s.size(); ++j) ++cover[s[i]][s[j]];
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (cover[i][j] != 1)
                throw Error(Errc::SchemaError, "pair {" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                   "} covered " + std::to_string(cover[i][j]) + " times");
    std::sort(supports.begin(), supports.end());
    return Combinatorics{n, std::move(supports)};
}

Combinatorics comb_from_arrangement(const Arrangement &a)
{
    std::vector<std::vector<int>> s;
    for (auto &sp : singular_points(a)) s.push_back(sp.support);
    return comb_make(a.size(), std::move(s));
}

std::vector<std::vector<int>> pair_support(const Combinatorics &c)
{
    std::vector<std::vector<int>> ps(c.n, std::vector<int>(c.n, -1));
    for (size_t k = 0; k < c.supports.size(); ++k)
        for (int x : c.supports[k])
            for (int y : c.supports[k])
                if (x != y) ps[x][y] = static_cast<int>(k);
    return ps;
}

std::vector<Edge> edges(const Combinatorics &c)
{
    std::vector<Edge> e;
    for (size_t k = 0; k < c.supports.size(); ++k)
        for (int l : c.supports[k]) e.push_back({static_cast<int>(k), l});
    return e;
}

IncidenceGraph incidence_graph(const Combinatorics &c)
{
    IncidenceGraph g;
    g.n_lines = c.n;
    g.n_points = static_cast<int>(c.supports.size());
    g.edges = edges(c);
    const int V = g.n_lines + g.n_points;
    // vertex ids: lines 0..n-1, points n..
    std::vector<std::vector<std::pair<int, int>>> adj(V);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        int p = c.n + g.edges[e].point, l = g.edges[e].line;
        adj[p].push_back({l, static_cast<int>(e)});
        adj[l].push_back({p, static_cast<int>(e)});
    }
    std::vector<int> parent(V, -1), parent_edge(V, -1), depth(V, -1);
    std::vector<bool> tree(g.edges.size(), false);
    for (int r = 0; r < V; ++r) {
        if (depth[r] >= 0) continue;
        ++g.components;
        depth[r] = 0;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [w, e] : adj[u]) {
                if (depth[w] >= 0) continue;
                depth[w] = depth[u] + 1;
                parent[w] = u;
                parent_edge[w] = e;
                tree[e] = true;
                q.push(w);
            }
        }
    }
    g.connected = g.components == 1;
    g.cycle_rank = static_cast<int>(g.edges.size()) - V + g.components;
    // +1 when an edge is walked from its point to its line
    auto sign_from = [&](int e, int from) { return from >= c.n ? 1 : -1; (void)e; };
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (tree[e]) continue;
        std::vector<int> cyc(g.edges.size(), 0);
        int P = c.n + g.edges[e].point, L = g.edges[e].line;
        cyc[e] = 1;
        // walk L -> P through the tree
        int a = L, b = P;
        std::vector<std::pair<int, int>> down; // edges on the P side, walked toward P
        while (a != b) {
            if (depth[a] >= depth[b]) {
                cyc[parent_edge[a]] += sign_from(parent_edge[a], a);
                a = parent[a];
            } else {
                down.push_back({parent_edge[b], parent[b]});
                b = parent[b];
            }
        }
        for (auto [pe, from] : down) cyc[pe] += sign_from(pe, from);
        g.cycle_basis.push_back(std::move(cyc));
    }
    return g;
}

Perm perm_identity(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_compose(const Perm &a, const Perm &b)
{
    Perm r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm &a)
{
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

std::string perm_cycles(const Perm &p)
{
    std::ostringstream os;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        os << "(";
        for (size_t j = i; !seen[j]; j = p[j]) {
            if (j != i) os << ",";
            os << j + 1;
            seen[j] = true;
        }
        os << ")";
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>> &cycles1)
{
    Perm p = perm_identity(n);
    for (auto &cyc : cycles1)
        for (size_t k = 0; k < cyc.size(); ++k) {
            int a = cyc[k] - 1, b = cyc[(k + 1) % cyc.size()] - 1;
            if (a < 0 || a >= n || b < 0 || b >= n) throw Error(Errc::DegreeMismatch, "cycle entry out of range");
            p[a] = b;
        }
    return p;
}

PermGroup group_closure(int degree, const std::vector<Perm> &gens)
{
    PermGroup g;
    g.degree = degree;
    g.generators = gens;
    std::set<Perm> seen{perm_identity(degree)};
    g.elements.push_back(perm_identity(degree));
    for (size_t k = 0; k < g.elements.size(); ++k)
        for (auto &s : gens) {
            Perm x = perm_compose(s, g.elements[k]);
            if (seen.insert(x).second) g.elements.push_back(x);
        }
    return g;
}

Combinatorics perm_act(const Perm &s, const Combinatorics &c)
{
    if (static_cast<int>(s.size()) != c.n) throw Error(Errc::DegreeMismatch, "permutation degree");
    std::vector<std::vector<int>> sup;
    for (auto &x : c.supports) {
        std::vector<int> y;
        for (int l : x) y.push_back(s[l]);
        std::sort(y.begin(), y.end());
        sup.push_back(y);
    }
    std::sort(sup.begin(), sup.end());
    return Combinatorics{c.n, sup};
}

bool is_automorphism(const Perm &s, const Combinatorics &c)
{
    if (static_cast<int>(s.size()) != c.n) return false;
    return perm_act(s, c) == c;
}

namespace {

std::vector<std::vector<int>> profiles(const Combinatorics &c)
{
    std::vector<std::vector<int>> pr(c.n);
    for (auto &s : c.supports)
        for (int l : s) pr[l].push_back(static_cast<int>(s.size()));
    for (auto &p : pr) std::sort(p.begin(), p.end());
    return pr;
}

// calls visit on every bijection carrying c1 onto c2; stops when visit returns false
void search_isos(const Combinatorics &c1, const Combinatorics &c2, const std::function<bool(const Perm &)> &visit)
{
    if (c1.n != c2.n || c1.supports.size() != c2.supports.size()) return;
    const int n = c1.n;
    const auto pr1 = profiles(c1), pr2 = profiles(c2);
    const auto ps1 = pair_support(c1), ps2 = pair_support(c2);
    std::vector<int> sz1, sz2;
    for (auto &s : c1.supports) sz1.push_back(static_cast<int>(s.size()));
    for (auto &s : c2.supports) sz2.push_back(static_cast<int>(s.size()));
    Perm img(n, -1);
    std::vector<bool> used(n, false);
    bool stop = false;
    std::function<void(int)> rec = [&](int i) {
        if (stop) return;
        if (i == n) {
            if (perm_act(img, c1) == c2) stop = !visit(img);
            return;
        }
        // identity candidate first so the identity is found first when it works
        std::vector<int> cand;
        if (!used[i]) cand.push_back(i);
        for (int j = 0; j < n; ++j)
            if (j != i) cand.push_back(j);
        for (int j : cand) {
            if (used[j] || pr1[i] != pr2[j]) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k) {
                if (sz1[ps1[i][k]] != sz2[ps2[j][img[k]]]) ok = false;
                for (int l = 0; l < k && ok; ++l) {
                    bool col1 = ps1[i][k] == ps1[k][l];
                    bool col2 = ps2[j][img[k]] == ps2[img[k]][img[l]];
                    if (col1 != col2) ok = false;
                }
            }
            if (!ok) continue;
            used[j] = true;
            img[i] = j;
            rec(i + 1);
            used[j] = false;
            img[i] = -1;
            if (stop) return;
        }
    };
    rec(0);
}

} // namespace

PermGroup comb_automorphisms(const Combinatorics &c)
{
    std::vector<Perm> all;
    search_isos(c, c, [&](const Perm &p) {
        all.push_back(p);
        return true;
    });
    // greedy generators
    std::vector<Perm> gens;
    std::set<Perm> span{perm_identity(c.n)};
    for (auto &p : all) {
        if (span.count(p)) continue;
        gens.push_back(p);
        auto g = group_closure(c.n, gens);
        span = std::set<Perm>(g.elements.begin(), g.elements.end());
    }
    PermGroup g = group_closure(c.n, gens);
    return g;
}

std::optional<Perm> comb_isomorphism(const Combinatorics &c1, const Combinatorics &c2)
{
    std::optional<Perm> r;
    if (c1 == c2) return perm_identity(c1.n);
    search_isos(c1, c2, [&](const Perm &p) {
        r = p;
        return false;
    });
    return r;
}

namespace {

// Individualization-refinement search for an automorphism of a simple graph
// sending v to w.
struct GraphAuto {
    int N;
    const std::vector<std::vector<bool>> &adj;
    std::vector<std::vector<int>> nb;

    GraphAuto(const std::vector<std::vector<bool>> &a) : N(static_cast<int>(a.size())), adj(a), nb(N)
    {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (adj[i][j]) nb[i].push_back(j);
    }

    // colors over the disjoint union (copy 1: 0..N-1, copy 2: N..2N-1)
    bool refine(std::vector<int> &col) const
    {
        for (;;) {
            std::map<std::pair<int, std::vector<int>>, int> sig;
            std::vector<std::pair<int, std::vector<int>>> s(2 * N);
            for (int u = 0; u < 2 * N; ++u) {
                const int base = u < N ? 0 : N;
                std::vector<int> ms;
                for (int x : nb[u - base]) ms.push_back(col[x + base]);
                std::sort(ms.begin(), ms.end());
                s[u] = {col[u], ms};
                sig.emplace(s[u], 0);
            }
            int k = 0;
            for (auto &kv : sig) kv.second = k++;
            std::vector<int> nc(2 * N);
            for (int u = 0; u < 2 * N; ++u) nc[u] = sig[s[u]];
            // histograms of both halves must agree
            std::vector<int> h1(k, 0), h2(k, 0);
            for (int u = 0; u < N; ++u) ++h1[nc[u]];
            for (int u = N; u < 2 * N; ++u) ++h2[nc[u]];
            if (h1 != h2) return false;
            const int before = static_cast<int>(std::set<int>(col.begin(), col.end()).size());
            col = nc;
            if (k == before) return true;
        }
    }

    bool rec(std::vector<int> col) const
    {
        if (!refine(col)) return false;
        std::map<int, std::vector<int>> cls1, cls2;
        for (int u = 0; u < N; ++u) cls1[col[u]].push_back(u);
        for (int u = N; u < 2 * N; ++u) cls2[col[u]].push_back(u - N);
        int pick = -1;
        size_t best = 0;
        for (auto &[c, vs] : cls1)
            if (vs.size() > 1 && (pick < 0 || vs.size() < best)) {
                pick = c;
                best = vs.size();
            }
        if (pick < 0) {
            std::vector<int> f(N);
            for (auto &[c, vs] : cls1) f[vs[0]] = cls2[c][0];
            for (int i = 0; i < N; ++i)
                for (int j : nb[i])
                    if (!adj[f[i]][f[j]]) return false;
            found = f;
            return true;
        }
        const int u = cls1[pick][0];
        const int fresh = *std::max_element(col.begin(), col.end()) + 1;
        for (int x : cls2[pick]) {
            auto c2 = col;
            c2[u] = fresh;
            c2[x + N] = fresh;
            if (rec(c2)) return true;
        }
        return false;
    }

    std::optional<std::vector<int>> map(int v, int w) const
    {
        std::vector<int> col(2 * N);
        for (int u = 0; u < N; ++u) col[u] = col[u + N] = static_cast<int>(nb[u].size());
        const int fresh = N + 1;
        col[v] = fresh;
        col[w + N] = fresh;
        found.reset();
        if (rec(col)) return found;
        return std::nullopt;
    }

    mutable std::optional<std::vector<int>> found;
};

} // namespace

BlowupGraph blowup_stable(const Combinatorics &c)
{
    BlowupGraph g;
    g.n_lines = c.n;
    for (size_t k = 0; k < c.supports.size(); ++k)
        if (c.supports[k].size() > 2) g.dense.push_back(static_cast<int>(k));
    const int N = c.n + static_cast<int>(g.dense.size());
    std::vector<std::vector<bool>> adj(N, std::vector<bool>(N, false));
    for (auto &s : c.supports)
        if (s.size() == 2) {
            adj[s[0]][s[1]] = adj[s[1]][s[0]] = true;
            g.edges.push_back({s[0], s[1]});
        }
    for (size_t e = 0; e < g.dense.size(); ++e)
        for (int l : c.supports[g.dense[e]]) {
            const int v = c.n + static_cast<int>(e);
            adj[l][v] = adj[v][l] = true;
            g.edges.push_back({l, v});
        }
    // Partition-preserving automorphisms of this graph restrict injectively onto
    // Aut(c), so the two groups agree exactly when no automorphism sends a line
    // to an exceptional vertex.
    GraphAuto ga(adj);
    g.stable = true;
    for (int v = 0; v < c.n && g.stable; ++v)
        for (int w = c.n; w < N && g.stable; ++w) {
            auto f = ga.map(v, w);
            if (f) {
                g.stable = false;
                g.witness = f;
            }
        }
    return g;
}

} // namespace arrlink
