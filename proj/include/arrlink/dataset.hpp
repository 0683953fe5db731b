#pragma once
// Committed datasets, batch checks and the integral probe.
#include "arrlink/io.hpp"
#include "arrlink/union.hpp"

#include <functional>

namespace arrlink {

// ARRLINK_DATA_DIR from the environment, else the source tree's data/
std::string data_dir();

struct DatasetItem {
    std::string name;
    std::string kind; // arrangement, appendixB, combinatorics, wiring, fixture, builtin
    std::string path; // empty for builtins
};
std::vector<DatasetItem> dataset_list();
json dataset_emit(const std::string &name, uint64_t seed = 0);
Arrangement dataset_arrangement(const std::string &name, uint64_t seed = 0);

// i-th member of a family given by its first member: zeta5 -> zeta5^i
Arrangement zeta5_member(const Arrangement &a, int i);

struct FamilyReport {
    std::string name;
    bool supports_ok = false;
    bool aut_ok = false;
    size_t aut_order = 0;
    int tlg_dim = 0;
    bool tlg_ok = false;
    std::vector<int64_t> lln; // members 1..4
    bool lln_ok = false;
    std::vector<std::string> verdicts; // pairs (i,j), i<j, lexicographic
    bool verdicts_ok = false;
    bool ordered_only = false;
    std::string error;
    bool ok() const { return error.empty() && supports_ok && aut_ok && tlg_ok && lln_ok && verdicts_ok; }
};
FamilyReport check_family(const std::string &path, uint64_t seed = 0);
std::vector<FamilyReport> batch_appendixB(uint64_t seed = 0,
                                          const std::function<void(const FamilyReport &)> &progress = {});

struct ProbeReport {
    int rank = 0;
    std::vector<std::string> invariant_factors;
    std::vector<int64_t> values; // lln over Z, per basis tensor
    bool all_zero = true;
};
ProbeReport probe_integral(const Arrangement &a, uint64_t seed = 0);

// ARRLINK_SEED if set, else the fallback
uint64_t seed_from_env(uint64_t fallback = 0);

} // namespace arrlink
