// arrlink: invariants of line arrangements from the command line.
#include "arrlink/dataset.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

using namespace arrlink;

namespace {

enum Exit { Ok = 0, Mismatch = 1, InputError = 2 };

bool human = false;

void print_human(const json &j, const std::string &indent = "")
{
    if (j.is_object()) {
        for (auto &[k, v] : j.items()) {
            if (v.is_structured() && !(v.is_array() && std::all_of(v.begin(), v.end(), [](auto &x) {
                                           return x.is_primitive() || (x.is_array() && x.size() <= 4);
                                       }))) {
                std::cout << indent << k << ":\n";
                print_human(v, indent + "  ");
            } else {
                std::cout << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        int i = 0;
        for (auto &v : j) {
            std::cout << indent << "[" << ++i << "]\n";
            print_human(v, indent + "  ");
        }
    } else {
        std::cout << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json &j)
{
    if (human) print_human(j);
    else std::cout << j.dump(2) << "\n";
}

// a path, or the name of a dataset entry
Arrangement load_any(const std::string &s, uint64_t seed)
{
    if (std::filesystem::exists(s)) return load_arrangement(s);
    return dataset_arrangement(s, seed);
}

json cycles_json(const std::vector<Perm> &ps)
{
    json a = json::array();
    for (auto &p : ps) a.push_back(perm_cycles(p));
    return a;
}

json set_json(const std::set<int64_t> &s) { return json(std::vector<int64_t>(s.begin(), s.end())); }

int cmd_invariants(const std::string &file, int64_t modulus, const std::string &wiring_file,
                   const std::string &method, uint64_t seed)
{
    const Arrangement a = load_any(file, seed);
    const Combinatorics c = comb_from_arrangement(a);
    std::optional<WiringDiagram> w;
    if (!wiring_file.empty()) {
        w = parse_wiring(read_json(wiring_file));
        validate_wiring(*w, c);
    }
    if (method == "wiring" && !w) throw Error(Errc::SchemaError, "--method wiring needs --wiring");
    const PermGroup g = comb_automorphisms(c);
    const BlowupGraph bg = blowup_stable(c);
    const IncidenceGraph ig = incidence_graph(c);
    json out;
    out["name"] = a.name;
    out["lines"] = a.size();
    out["field"] = emit_field(*a.field);
    out["combinatorics"] = emit_combinatorics(c)["supports"];
    out["incidence_graph"] = {{"connected", ig.connected}, {"cycle_rank", ig.cycle_rank}};
    out["aut_order"] = g.order();
    out["aut_generators"] = cycles_json(g.generators);
    out["stable"] = bg.stable;
    const TlgGroup tg = tlg_group(c, modulus);
    out["tlg"] = {{"modulus", modulus},
                  {"dim", tg.generators.size()},
                  {"kernel_dim", tg.kernel_dim},
                  {"integral_rank", tg.integral_rank}};
    out["seed"] = seed;
    int rc = Ok;
    json gens = json::array();
    for (size_t k = 0; k < tg.generators.size(); ++k) {
        const Tensor &t = tg.generators[k];
        json e;
        e["index"] = k + 1;
        e["order"] = tg.orders[k];
        e["tensor"] = emit_tensor(t, c)["tensor"];
        LlnOptions o;
        o.seed = seed;
        o.method = method == "wiring" ? Method::Wiring : Method::Cov;
        o.wiring = w ? &*w : nullptr;
        const int64_t v = lln(a, t, o);
        e["lln"] = v;
        e["method"] = method;
        if (w && method == "cov") {
            LlnOptions ow = o;
            ow.method = Method::Wiring;
            const int64_t vw = lln(a, t, ow);
            e["lln_wiring"] = vw;
            if (vw != v) rc = Mismatch;
        }
        e["full_set"] = set_json(full_set(lln_orbit(a, t, g, o), modulus));
        gens.push_back(e);
    }
    if (!gens.empty()) out["generators"] = gens;
    emit(out);
    return rc;
}

json report_json(const CompareReport &r)
{
    json f1 = json::array(), f2 = json::array();
    for (auto &s : r.full_set_1) f1.push_back(set_json(s));
    for (auto &s : r.full_set_2) f2.push_back(set_json(s));
    json j = {{"combinatorics_isomorphic", r.combinatorics_isomorphic},
              {"aut_order_1", r.aut_order_1},
              {"aut_order_2", r.aut_order_2},
              {"stable_1", r.stable_1},
              {"stable_2", r.stable_2},
              {"tlg_dim", r.tlg_dim},
              {"values_1", r.values_1},
              {"values_2", r.values_2},
              {"full_set_1", f1},
              {"full_set_2", f2},
              {"verdict", r.verdict}};
    if (r.isomorphism) j["isomorphism"] = perm_cycles(*r.isomorphism);
    return j;
}

int cmd_compare(const std::string &fa, const std::string &fb, int64_t modulus, uint64_t seed)
{
    const Arrangement a = load_any(fa, seed), b = load_any(fb, seed);
    if (!a.field->same_as(*b.field)) throw Error(Errc::FieldMismatch, "arrangements over different fields");
    emit(report_json(compare(a, b, modulus, seed)));
    return Ok;
}

int cmd_union(const std::string &fa, const std::string &fb, int r, uint64_t seed)
{
    const Arrangement a = load_any(fa, seed), b = load_any(fb, seed);
    const OrderedUnion u = r < 0 ? ordered_union(a, b) : ordered_union(a, b, r);
    json out = emit_arrangement(u.result);
    out["r"] = u.r;
    out["combinatorics"] = emit_combinatorics(comb_from_arrangement(u.result))["supports"];
    emit(out);
    return Ok;
}

int cmd_batch(uint64_t seed)
{
    json rows = json::array();
    bool all = true;
    batch_appendixB(seed, [&](const FamilyReport &f) {
        json row = {{"family", f.name},     {"supports", f.supports_ok}, {"aut_order", f.aut_order},
                    {"aut_ok", f.aut_ok},   {"tlg_dim", f.tlg_dim},      {"lln", f.lln},
                    {"verdicts", f.verdicts}, {"ordered_only", f.ordered_only}, {"ok", f.ok()}};
        if (!f.error.empty()) row["error"] = f.error;
        all = all && f.ok();
        rows.push_back(row);
        if (human) std::cerr << f.name << (f.ok() ? " ok" : " MISMATCH") << "\n";
    });
    emit({{"families", rows}, {"all_ok", all}});
    return all ? Ok : Mismatch;
}

int cmd_probe(const std::string &file, uint64_t seed)
{
    const Arrangement a = load_any(file, seed);
    const ProbeReport p = probe_integral(a, seed);
    emit({{"name", a.name},
          {"integral_rank", p.rank},
          {"invariant_factors", p.invariant_factors},
          {"lln", p.values},
          {"all_zero", p.all_zero}});
    return Ok;
}

int cmd_dataset_list()
{
    json a = json::array();
    for (auto &it : dataset_list()) a.push_back({{"name", it.name}, {"kind", it.kind}});
    emit(a);
    return Ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"arrlink: loop linking numbers of line arrangements"};
    app.require_subcommand(1);
    app.add_flag("--human", human, "plain text instead of JSON");
    uint64_t seed = 0;
    app.add_option("--seed", seed, "frame seed (ARRLINK_SEED overrides)");

    std::string fa, fb, wiring, method = "cov", name;
    int64_t modulus = 0;
    int r = -1;

    auto *inv = app.add_subcommand("invariants", "combinatorics, Aut, TLG and lln of one arrangement");
    inv->add_option("file", fa, "arrangement file or dataset name")->required();
    inv->add_option("--mod", modulus, "coefficient modulus")->required()->check(CLI::Range(int64_t(2), int64_t(1) << 30));
    inv->add_option("--wiring", wiring, "wiring diagram file");
    inv->add_option("--method", method, "cov or wiring")->check(CLI::IsMember({"cov", "wiring"}));

    auto *cmp = app.add_subcommand("compare", "compare two arrangements");
    cmp->add_option("a", fa)->required();
    cmp->add_option("b", fb)->required();
    cmp->add_option("--mod", modulus)->required()->check(CLI::Range(int64_t(2), int64_t(1) << 30));

    auto *uni = app.add_subcommand("union", "ordered union of two arrangements");
    uni->add_option("a", fa)->required();
    uni->add_option("b", fb)->required();
    uni->add_option("--r", r, "shared prefix length (default: detected)");

    auto *bat = app.add_subcommand("batch", "batch checks");
    std::string which;
    bat->add_option("which", which)->required()->check(CLI::IsMember({"appendixB"}));

    auto *prb = app.add_subcommand("probe-integral", "lln of integral tensors");
    prb->add_option("file", fa)->required();

    auto *ds = app.add_subcommand("dataset", "committed datasets");
    ds->require_subcommand(1);
    auto *dl = ds->add_subcommand("list");
    auto *de = ds->add_subcommand("emit");
    de->add_option("name", name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : InputError;
    }

    try {
        seed = seed_from_env(seed);
        if (*inv) return cmd_invariants(fa, modulus, wiring, method, seed);
        if (*cmp) return cmd_compare(fa, fb, modulus, seed);
        if (*uni) return cmd_union(fa, fb, r, seed);
        if (*bat) return cmd_batch(seed);
        if (*prb) return cmd_probe(fa, seed);
        if (*dl) return cmd_dataset_list();
        if (*de) {
            emit(dataset_emit(name, seed));
            return Ok;
        }
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    }
    return InputError;
}
