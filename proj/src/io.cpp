#include "arrlink/io.hpp"

#include <fstream>
#include <map>
#include <mutex>

namespace arrlink {

json read_json(const std::string &path)
{
    std::ifstream in(path);
    if (!in) throw Error(Errc::SchemaError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw Error(Errc::SchemaError, path + ": " + e.what());
    }
}

static const json &need(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::SchemaError, std::string("missing key ") + key);
    return j.at(key);
}

FieldPtr parse_field(const json &j)
{
    static std::mutex mu;
    static std::map<std::string, FieldPtr> cache;
    try {
        std::vector<mpz_class> mp;
        for (auto &c : need(j, "min_poly")) mp.emplace_back(c.is_string() ? c.get<std::string>() : std::to_string(c.get<long>()));
        const json &h = need(j, "root_hint");
        const std::string re = need(h, "re").get<std::string>(), im = need(h, "im").get<std::string>();
        std::string key = j.at("min_poly").dump() + "|" + re + "|" + im;
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        FieldPtr f = nf_create(mp, re, im);
        cache[key] = f;
        return f;
    } catch (const json::exception &e) {
        throw Error(Errc::SchemaError, std::string("field: ") + e.what());
    }
}

json emit_field(const NumberField &f)
{
    json mp = json::array();
    for (auto &c : f.min_poly()) {
        if (c.fits_slong_p()) mp.push_back(c.get_si());
        else mp.push_back(c.get_str());
    }
    return {{"min_poly", mp}, {"root_hint", {{"re", f.hint_re()}, {"im", f.hint_im()}}}};
}

FieldElement parse_element(const FieldPtr &f, const json &coeffs)
{
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) > f->degree())
        throw Error(Errc::SchemaError, "coefficient vector must have at most degree entries");
    QPoly c;
    for (auto &x : coeffs) {
        try {
            mpq_class v(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
            if (v.get_den() == 0) throw Error(Errc::SchemaError, "zero denominator");
            v.canonicalize();
            c.push_back(v);
        } catch (const std::invalid_argument &) {
            throw Error(Errc::SchemaError, "bad rational " + x.dump());
        }
    }
    return FieldElement(f, c);
}

json emit_element(const FieldElement &x)
{
    json a = json::array();
    for (auto &c : x.coeffs()) a.push_back(c.get_str());
    while (static_cast<int>(a.size()) < x.field()->degree()) a.push_back("0");
    return a;
}

Arrangement parse_arrangement(const json &j)
{
    FieldPtr f = parse_field(need(j, "field"));
    std::vector<ProjLine> lines;
    const json &ls = need(j, "lines");
    if (!ls.is_array()) throw Error(Errc::SchemaError, "lines must be an array");
    for (auto &l : ls) {
        if (!l.is_array() || l.size() != 3) throw Error(Errc::SchemaError, "each line needs three coefficients");
        lines.push_back(make_line({parse_element(f, l[0]), parse_element(f, l[1]), parse_element(f, l[2])}));
    }
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "";
    return make_arrangement(f, std::move(lines), name);
}

Arrangement load_arrangement(const std::string &path) { return parse_arrangement(read_json(path)); }

json emit_arrangement(const Arrangement &a)
{
    json ls = json::array();
    for (auto &l : a.lines) ls.push_back(json::array({emit_element(l.c[0]), emit_element(l.c[1]), emit_element(l.c[2])}));
    return {{"name", a.name}, {"field", emit_field(*a.field)}, {"lines", ls}};
}

Combinatorics parse_combinatorics(const json &j)
{
    const int n = need(j, "n").get<int>();
    std::vector<std::vector<int>> s;
    for (auto &x : need(j, "supports")) {
        std::vector<int> v;
        for (auto &y : x) v.push_back(y.get<int>() - 1);
        s.push_back(v);
    }
    return comb_make(n, s);
}

json emit_combinatorics(const Combinatorics &c)
{
    json s = json::array();
    for (auto &x : c.supports) {
        json v = json::array();
        for (int y : x) v.push_back(y + 1);
        s.push_back(v);
    }
    return {{"n", c.n}, {"supports", s}};
}

WiringDiagram parse_wiring(const json &j)
{
    WiringDiagram w;
    for (auto &x : need(j, "strands")) w.strands.push_back(x.get<int>() - 1);
    for (auto &e : need(j, "events")) {
        WiringEvent ev;
        for (auto &x : need(e, "braid")) ev.braid.push_back(x.get<int>());
        for (auto &x : need(e, "point")) ev.point.push_back(x.get<int>() - 1);
        w.events.push_back(ev);
    }
    return w;
}

json emit_wiring(const WiringDiagram &w)
{
    json s = json::array(), ev = json::array();
    for (int x : w.strands) s.push_back(x + 1);
    for (auto &e : w.events) {
        json pt = json::array();
        for (int x : e.point) pt.push_back(x + 1);
        ev.push_back({{"braid", e.braid}, {"point", pt}});
    }
    return {{"strands", s}, {"events", ev}};
}

Tensor parse_tensor(const json &j, const Combinatorics &c)
{
    Tensor t = tensor_zero(c, need(j, "modulus").get<int64_t>());
    const auto es = edges(c);
    std::map<std::string, int> idx;
    for (size_t e = 0; e < es.size(); ++e) idx[edge_key(c, es[e])] = static_cast<int>(e);
    for (auto &[k, v] : need(j, "tensor").items()) {
        auto it = idx.find(k);
        if (it == idx.end()) throw Error(Errc::SchemaError, "unknown edge " + k);
        if (!v.is_array() || static_cast<int>(v.size()) != c.n) throw Error(Errc::SchemaError, "bad vector at " + k);
        for (int i = 0; i < c.n; ++i) t.values[it->second][i] = v[i].get<int64_t>();
    }
    return t;
}

json emit_tensor(const Tensor &t, const Combinatorics &c)
{
    json m = json::object();
    const auto es = edges(c);
    for (size_t e = 0; e < es.size(); ++e) m[edge_key(c, es[e])] = t.values[e];
    return {{"modulus", t.modulus}, {"tensor", m}};
}

Perm parse_cycles(int n, const json &j)
{
    std::vector<std::vector<int>> cyc;
    for (auto &c : j) cyc.push_back(c.get<std::vector<int>>());
    return perm_from_cycles(n, cyc);
}

} // namespace arrlink
