#pragma once
// JSON file formats.
#include "arrlink/braid.hpp"
#include "arrlink/tlg.hpp"

#include <json.hpp>

#include <string>

namespace arrlink {

using json = nlohmann::json;

json read_json(const std::string &path); // SchemaError on unreadable or malformed files

// fields with identical specs are shared
FieldPtr parse_field(const json &j);
json emit_field(const NumberField &f);

FieldElement parse_element(const FieldPtr &f, const json &coeffs);
json emit_element(const FieldElement &x);

Arrangement parse_arrangement(const json &j);
Arrangement load_arrangement(const std::string &path);
json emit_arrangement(const Arrangement &a);

Combinatorics parse_combinatorics(const json &j); // {"n":..,"supports":[[1,2],..]}
json emit_combinatorics(const Combinatorics &c);

WiringDiagram parse_wiring(const json &j);
json emit_wiring(const WiringDiagram &w);

// {"modulus": n, "tensor": {"P{1,3,9}->L1": [...], ...}}; missing edges are zero
Tensor parse_tensor(const json &j, const Combinatorics &c);
json emit_tensor(const Tensor &t, const Combinatorics &c);

// [[1,2],[5,6]] style cycles, 1-based
Perm parse_cycles(int n, const json &j);

} // namespace arrlink
