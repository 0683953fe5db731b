#include "arrlink/arrangement.hpp"

#include <algorithm>
#include <set>

namespace arrlink {

Vec3 vec3(const FieldPtr &f, long a, long b, long c)
{
    return {FieldElement::rational(f, a), FieldElement::rational(f, b), FieldElement::rational(f, c)};
}

bool is_zero(const Vec3 &v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3 normalize(const Vec3 &v)
{
    for (int k = 0; k < 3; ++k) {
        if (v[k].is_zero()) continue;
        if (v[k].is_one()) return v;
        const FieldElement s = v[k].inv();
        Vec3 r = v;
        for (int j = k; j < 3; ++j) r[j] = j == k ? FieldElement::rational(v[k].field(), 1) : v[j] * s;
        return r;
    }
    return v;
}

Vec3 cross(const Vec3 &u, const Vec3 &v)
{
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

FieldElement dot(const Vec3 &u, const Vec3 &v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

ProjLine make_line(const Vec3 &v)
{
    if (is_zero(v)) throw Error(Errc::SchemaError, "zero covector");
    return ProjLine{normalize(v)};
}

ProjPoint make_point(const Vec3 &v)
{
    if (is_zero(v)) throw Error(Errc::SchemaError, "zero point");
    return ProjPoint{normalize(v)};
}

ProjPoint intersect(const ProjLine &l1, const ProjLine &l2)
{
    Vec3 p = cross(l1.c, l2.c);
    if (is_zero(p)) throw Error(Errc::IdenticalLines, "intersect of identical lines");
    return ProjPoint{normalize(p)};
}

ProjLine line_through(const ProjPoint &p, const ProjPoint &q)
{
    Vec3 l = cross(p.c, q.c);
    if (is_zero(l)) throw Error(Errc::IdenticalPoints, "line through identical points");
    return ProjLine{normalize(l)};
}

bool incident(const ProjPoint &p, const ProjLine &l) { return dot(p.c, l.c).is_zero(); }

void validate(const Arrangement &a)
{
    const int n = a.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.lines[i] == a.lines[j])
                throw Error(Errc::DuplicateLine,
                            "lines " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
    if (n < 3) throw Error(Errc::PencilRejected, "fewer than 3 lines");
    const ProjPoint p = intersect(a.lines[0], a.lines[1]);
    bool pencil = true;
    for (int k = 2; k < n && pencil; ++k) pencil = incident(p, a.lines[k]);
    if (pencil) throw Error(Errc::PencilRejected, "all lines are concurrent");
}

Arrangement make_arrangement(FieldPtr f, std::vector<ProjLine> lines, std::string name)
{
    for (auto &l : lines) l = make_line(l.c);
    Arrangement a{std::move(f), std::move(lines), std::move(name)};
    validate(a);
    return a;
}

std::vector<SingularPoint> singular_points(const Arrangement &a)
{
    const int n = a.size();
    std::vector<std::vector<bool>> done(n, std::vector<bool>(n, false));
    std::vector<SingularPoint> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (done[i][j]) continue;
            SingularPoint sp;
            sp.point = intersect(a.lines[i], a.lines[j]);
            for (int k = 0; k < n; ++k)
                if (k == i || k == j || incident(sp.point, a.lines[k])) sp.support.push_back(k);
            for (int x : sp.support)
                for (int y : sp.support) done[x][y] = true;
            out.push_back(std::move(sp));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SingularPoint &x, const SingularPoint &y) { return x.support < y.support; });
    return out;
}

FieldElement det(const Mat3 &m) { return dot(m[0], cross(m[1], m[2])); }

Mat3 mat_inverse(const Mat3 &m)
{
    const FieldElement d = det(m);
    if (d.is_zero()) throw Error(Errc::SingularMatrix, "projectivity is singular");
    // columns of the inverse are the cross products of rows, scaled
    const Vec3 c0 = cross(m[1], m[2]), c1 = cross(m[2], m[0]), c2 = cross(m[0], m[1]);
    const FieldElement s = d.inv();
    Mat3 r;
    for (int i = 0; i < 3; ++i) r[i] = {c0[i] * s, c1[i] * s, c2[i] * s};
    return r;
}

Arrangement apply_projectivity(const Mat3 &m, const Arrangement &a)
{
    const Mat3 inv = mat_inverse(m);
    Arrangement r{a.field, {}, a.name};
    for (const auto &l : a.lines) {
        Vec3 v;
        for (int j = 0; j < 3; ++j) v[j] = l.c[0] * inv[0][j] + l.c[1] * inv[1][j] + l.c[2] * inv[2][j];
        r.lines.push_back(make_line(v));
    }
    return r;
}

Arrangement galois_conjugate(const GaloisAutomorphism &sigma, const Arrangement &a)
{
    Arrangement r{a.field, {}, a.name};
    for (const auto &l : a.lines)
        r.lines.push_back(make_line({fe_apply(sigma, l.c[0]), fe_apply(sigma, l.c[1]), fe_apply(sigma, l.c[2])}));
    return r;
}

Arrangement perm_act(const std::vector<int> &sigma, const Arrangement &a)
{
    if (static_cast<int>(sigma.size()) != a.size()) throw Error(Errc::DegreeMismatch, "permutation degree");
    Arrangement r{a.field, std::vector<ProjLine>(a.lines.size()), a.name};
    for (int i = 0; i < a.size(); ++i) r.lines[sigma[i]] = a.lines[i];
    return r;
}

Arrangement lift(const Arrangement &a, const FieldLift &fl)
{
    Arrangement r{fl.field, {}, a.name};
    for (const auto &l : a.lines)
        r.lines.push_back(make_line({fl.lift(l.c[0]), fl.lift(l.c[1]), fl.lift(l.c[2])}));
    return r;
}

} // namespace arrlink
