#include "arrlink/dataset.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>

namespace fs = std::filesystem;

namespace arrlink {

std::string data_dir()
{
    if (const char *e = std::getenv("ARRLINK_DATA_DIR"); e && *e) return e;
#ifdef ARRLINK_DATA_DIR
    return ARRLINK_DATA_DIR;
#else
    return "data";
#endif
}

uint64_t seed_from_env(uint64_t fallback)
{
    const char *e = std::getenv("ARRLINK_SEED");
    if (!e || !*e) return fallback;
    char *end = nullptr;
    const unsigned long long v = std::strtoull(e, &end, 10);
    if (*end) throw Error(Errc::SchemaError, "ARRLINK_SEED must be a non-negative integer");
    return v;
}

static const char *kinds[][2] = {
    {"arrangements", "arrangement"}, {"appendixB", "appendixB"}, {"combinatorics", "combinatorics"},
    {"wiring", "wiring"},            {"fixtures", "fixture"},
};

std::vector<DatasetItem> dataset_list()
{
    std::vector<DatasetItem> out;
    for (auto &k : kinds) {
        const fs::path dir = fs::path(data_dir()) / k[0];
        if (!fs::is_directory(dir)) continue;
        std::vector<DatasetItem> part;
        for (auto &e : fs::directory_iterator(dir))
            if (e.path().extension() == ".json") part.push_back({e.path().stem().string(), k[1], e.path().string()});
        std::sort(part.begin(), part.end(), [](auto &a, auto &b) { return a.name < b.name; });
        out.insert(out.end(), part.begin(), part.end());
    }
    for (const char *b : {"ML+", "ML-", "R+", "R-"})
        if (std::none_of(out.begin(), out.end(), [&](auto &it) { return it.name == b; }))
            out.push_back({b, "builtin", ""});
    return out;
}

static std::optional<DatasetItem> find_item(const std::string &name)
{
    for (auto &it : dataset_list())
        if (it.name == name) return it;
    return std::nullopt;
}

json dataset_emit(const std::string &name, uint64_t seed)
{
    auto it = find_item(name);
    if (!it) throw Error(Errc::SchemaError, "no dataset entry " + name);
    if (it->kind != "builtin") return read_json(it->path);
    return emit_arrangement(dataset_arrangement(name, seed));
}

Arrangement dataset_arrangement(const std::string &name, uint64_t seed)
{
    if (name == "ML+") return maclane(1);
    if (name == "ML-") return maclane(-1);
    if (name == "R+") return rybnikov(1, seed);
    if (name == "R-") return rybnikov(-1, seed);
    auto it = find_item(name);
    if (!it || (it->kind != "arrangement" && it->kind != "appendixB"))
        throw Error(Errc::SchemaError, "no arrangement named " + name);
    return load_arrangement(it->path);
}

Arrangement zeta5_member(const Arrangement &a, int i)
{
    Arrangement r = galois_conjugate(cyclotomic_automorphism(a.field, 5, i), a);
    r.name = a.name + "^" + std::to_string(i);
    return r;
}

static std::string pair_expectation(int i, int j, bool ordered_only)
{
    if ((i + j) % 5 != 0 && !ordered_only) return "non-homeomorphic complements";
    return "ordered-oriented distinct";
}

FamilyReport check_family(const std::string &path, uint64_t seed)
{
    FamilyReport r;
    r.name = fs::path(path).stem().string();
    try {
        const json j = read_json(path);
        const json &ex = j.at("expected");
        const Arrangement a = parse_arrangement(j);
        const Combinatorics c = comb_from_arrangement(a);
        r.supports_ok = c == parse_combinatorics({{"n", a.size()}, {"supports", ex.at("supports")}});
        const PermGroup g = comb_automorphisms(c);
        r.aut_order = g.order();
        std::vector<Perm> gens;
        for (auto &cy : ex.at("aut_generators")) gens.push_back(parse_cycles(a.size(), cy));
        const PermGroup want = group_closure(a.size(), gens);
        std::set<Perm> e1(g.elements.begin(), g.elements.end()), e2(want.elements.begin(), want.elements.end());
        r.aut_ok = e1 == e2 && g.order() == ex.at("aut_order").get<size_t>();
        const int64_t m = ex.at("tlg_modulus").get<int64_t>();
        const auto tl = tlg_compute(c, m);
        r.tlg_dim = static_cast<int>(tl.size());
        r.tlg_ok = r.tlg_dim == ex.at("tlg_dim").get<int>();
        r.ordered_only = ex.at("ordered_only").get<bool>();
        if (tl.empty()) return r;
        std::vector<Arrangement> mem;
        LlnOptions o;
        o.seed = seed;
        r.lln_ok = true;
        for (int i = 1; i <= 4; ++i) {
            mem.push_back(zeta5_member(a, i));
            r.lln.push_back(lln(mem.back(), tl[0], o));
            if (r.lln.back() == 0) r.lln_ok = false;
        }
        r.verdicts_ok = true;
        for (int i = 1; i <= 4; ++i)
            for (int k = i + 1; k <= 4; ++k) {
                const auto rep = compare(mem[i - 1], mem[k - 1], m, seed);
                r.verdicts.push_back(rep.verdict);
                if (rep.verdict != pair_expectation(i, k, r.ordered_only)) r.verdicts_ok = false;
            }
    } catch (const std::exception &e) {
        r.error = e.what();
    }
    return r;
}

std::vector<FamilyReport> batch_appendixB(uint64_t seed, const std::function<void(const FamilyReport &)> &progress)
{
    std::vector<FamilyReport> out;
    for (auto &it : dataset_list()) {
        if (it.kind != "appendixB") continue;
        out.push_back(check_family(it.path, seed));
        if (progress) progress(out.back());
    }
    return out;
}

ProbeReport probe_integral(const Arrangement &a, uint64_t seed)
{
    ProbeReport p;
    const IntegralTlg ig = tlg_integral(comb_from_arrangement(a));
    p.rank = ig.rank();
    for (auto &d : ig.invariant_factors) p.invariant_factors.push_back(d.get_str());
    LlnOptions o;
    o.seed = seed;
    for (auto &t : ig.basis) {
        p.values.push_back(lln(a, t, o));
        if (p.values.back() != 0) p.all_zero = false;
    }
    return p;
}

} // namespace arrlink
