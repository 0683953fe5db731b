#pragma once
// Projective lines and points over a number field.
#include "arrlink/numberfield.hpp"

#include <array>
#include <string>
#include <vector>

namespace arrlink {

using Vec3 = std::array<FieldElement, 3>;
using Mat3 = std::array<Vec3, 3>; // row-major

// first nonzero coordinate scaled to 1
Vec3 normalize(const Vec3 &v);
Vec3 cross(const Vec3 &u, const Vec3 &v);
FieldElement dot(const Vec3 &u, const Vec3 &v);
bool is_zero(const Vec3 &v);
Vec3 vec3(const FieldPtr &f, long a, long b, long c);

struct ProjLine {
    Vec3 c; // a x + b y + c z = 0
    bool operator==(const ProjLine &o) const { return c == o.c; }
};

struct ProjPoint {
    Vec3 c;
    bool operator==(const ProjPoint &o) const { return c == o.c; }
};

ProjLine make_line(const Vec3 &v);
ProjPoint make_point(const Vec3 &v);

struct Arrangement {
    FieldPtr field;
    std::vector<ProjLine> lines;
    std::string name;
    int size() const { return static_cast<int>(lines.size()); }
};

// normalizes, then rejects duplicates and pencils
Arrangement make_arrangement(FieldPtr f, std::vector<ProjLine> lines, std::string name);
void validate(const Arrangement &a);

ProjPoint intersect(const ProjLine &l1, const ProjLine &l2);
ProjLine line_through(const ProjPoint &p, const ProjPoint &q);
bool incident(const ProjPoint &p, const ProjLine &l);

struct SingularPoint {
    ProjPoint point;
    std::vector<int> support; // 0-based, ascending
};

// sorted lexicographically by support
std::vector<SingularPoint> singular_points(const Arrangement &a);

// points map x -> M x, so lines map l -> l M^{-1}
Arrangement apply_projectivity(const Mat3 &m, const Arrangement &a);
Mat3 mat_inverse(const Mat3 &m);
FieldElement det(const Mat3 &m);

Arrangement galois_conjugate(const GaloisAutomorphism &sigma, const Arrangement &a);

// line i of a becomes line sigma[i] of the result
Arrangement perm_act(const std::vector<int> &sigma, const Arrangement &a);

// re-express over a bigger field (used for the K(i) lift)
Arrangement lift(const Arrangement &a, const FieldLift &fl);

} // namespace arrlink
