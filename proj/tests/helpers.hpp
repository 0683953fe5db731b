#pragma once
#include "arrlink/dataset.hpp"

#include <string>

namespace th {

inline std::string data(const std::string &rel) { return arrlink::data_dir() + "/" + rel; }
inline arrlink::Arrangement arr(const std::string &name) { return arrlink::load_arrangement(data("arrangements/" + name + ".json")); }
inline arrlink::Combinatorics comb(const std::string &name)
{
    return arrlink::parse_combinatorics(arrlink::read_json(data("combinatorics/" + name + ".json")));
}

// throws Error with code c
template <class F> bool throws_code(F &&f, arrlink::Errc c)
{
    try {
        f();
    } catch (const arrlink::Error &e) {
        return e.code() == c;
    }
    return false;
}

inline arrlink::Vec3 v3(const arrlink::FieldPtr &f, long a, long b, long c) { return arrlink::vec3(f, a, b, c); }

} // namespace th
