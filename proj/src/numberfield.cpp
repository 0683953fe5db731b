#include "arrlink/numberfield.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

namespace arrlink {

using num::Cx;
using num::Real;

const char *errc_name(Errc c)
{
    switch (c) {
    case Errc::ReducibleMinPoly: return "ReducibleMinPoly";
    case Errc::AmbiguousRootHint: return "AmbiguousRootHint";
    case Errc::NotGaloisExtension: return "NotGaloisExtension";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::IdenticalLines: return "IdenticalLines";
    case Errc::IdenticalPoints: return "IdenticalPoints";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::NonContiguousSupport: return "NonContiguousSupport";
    case Errc::LineNotInSupport: return "LineNotInSupport";
    case Errc::LineAbsent: return "LineAbsent";
    case Errc::FrameSearchExhausted: return "FrameSearchExhausted";
    case Errc::DegenerateSegment: return "DegenerateSegment";
    case Errc::InvalidTensor: return "InvalidTensor";
    case Errc::InconsistentWiring: return "InconsistentWiring";
    case Errc::NotAnAutomorphism: return "NotAnAutomorphism";
    case Errc::SharedLineOutsidePrefix: return "SharedLineOutsidePrefix";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::GenericityExhausted: return "GenericityExhausted";
    case Errc::SchemaError: return "SchemaError";
    case Errc::DuplicateLine: return "DuplicateLine";
    case Errc::PencilRejected: return "PencilRejected";
    }
    return "Error";
}

namespace {

constexpr mpfr_prec_t kBasePrec = 256;

void reduce(QPoly &a, const std::vector<mpz_class> &m)
{
    const size_t d = m.size() - 1;
    for (size_t k = a.size(); k-- > d;) {
        if (a[k] == 0) continue;
        mpq_class c = a[k];
        for (size_t j = 0; j < d; ++j)
            if (m[j] != 0) a[k - d + j] -= c * m[j];
        a[k] = 0;
    }
    a.resize(d);
}

template <class T>
T horner_eval(const std::vector<mpz_class> &p, const T &z, const std::function<T(const mpz_class &)> &lift)
{
    T acc = lift(p.back());
    for (size_t k = p.size() - 1; k-- > 0;) acc = acc * z + lift(p[k]);
    return acc;
}

std::vector<std::complex<double>> dk_roots(const std::vector<double> &monic)
{
    // Durand-Kerner on a monic polynomial (low-to-high)
    const int d = static_cast<int>(monic.size()) - 1;
    double bound = 1.0;
    for (int k = 0; k < d; ++k) bound = std::max(bound, 1.0 + std::abs(monic[k]));
    std::vector<std::complex<double>> z(d);
    const std::complex<double> seed(0.4, 0.9);
    for (int k = 0; k < d; ++k) z[k] = std::pow(seed, k) * std::min(bound, 2.0);
    auto f = [&](std::complex<double> x) {
        std::complex<double> acc = 1.0;
        for (int k = d - 1; k >= 0; --k) acc = acc * x + monic[k];
        return acc;
    };
    for (int it = 0; it < 2000; ++it) {
        double delta = 0;
        for (int i = 0; i < d; ++i) {
            std::complex<double> den = 1.0;
            for (int j = 0; j < d; ++j)
                if (j != i) den *= (z[i] - z[j]);
            std::complex<double> step = f(z[i]) / den;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-15) break;
    }
    return z;
}

Cx eval_int_poly(const std::vector<mpz_class> &p, const Cx &z)
{
    const mpfr_prec_t pr = z.prec();
    Cx acc(Real(p.back(), pr), Real(pr));
    for (size_t k = p.size() - 1; k-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + Real(p[k], pr);
    }
    return acc;
}

std::vector<mpz_class> derivative(const std::vector<mpz_class> &p)
{
    std::vector<mpz_class> d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
    if (d.empty()) d.push_back(0);
    return d;
}

// Newton refinement from a double approximation up to precision prec, plus an
// inclusion radius n*|f|/|f'| (a root of f lies in that disc).
void refine_root(const std::vector<mpz_class> &p, std::complex<double> z0, mpfr_prec_t prec, Cx &out,
                 Real &radius)
{
    const auto dp = derivative(p);
    Cx z(Real(z0.real(), prec), Real(z0.imag(), prec));
    for (mpfr_prec_t cur = 64;; cur = std::min<mpfr_prec_t>(cur * 2, prec)) {
        z = num::with_prec(z, cur + 32);
        for (int it = 0; it < 3; ++it) {
            Cx fz = eval_int_poly(p, z);
            Cx fpz = eval_int_poly(dp, z);
            z = z - fz / fpz;
        }
        if (cur == prec) break;
    }
    z = num::with_prec(z, prec + 32);
    for (int it = 0; it < 2; ++it) z = z - eval_int_poly(p, z) / eval_int_poly(dp, z);
    Real nf(static_cast<double>(p.size() - 1), 64);
    Real rad = nf * num::abs(eval_int_poly(p, z)) / num::abs(eval_int_poly(dp, z));
    rad = rad + num::pow2(-static_cast<long>(prec), 64) * (num::abs(z) + Real(1.0, 64));
    out = z;
    radius = rad.with_prec(64);
}

std::vector<double> monic_double(const QPoly &g)
{
    std::vector<double> r(g.size());
    for (size_t k = 0; k < g.size(); ++k) r[k] = mpq_class(g[k] / g.back()).get_d();
    return r;
}

bool cf_rational(double x, mpq_class &out, double tol)
{
    // continued fraction with denominator bound 1e6
    const long long qmax = 1000000;
    long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = x;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(r);
        if (std::abs(a) > 1e15) break;
        long long ai = static_cast<long long>(a);
        long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
        if (k2 > qmax) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
            out = mpq_class(mpz_class(std::to_string(h1)), mpz_class(std::to_string(k1)));
            out.canonicalize();
            return true;
        }
        double frac = r - a;
        if (frac == 0) break;
        r = 1.0 / frac;
    }
    return false;
}

// Solve sum_k c_k root_i^k = t_i over all embeddings i.
template <class C>
std::vector<C> solve_vandermonde(const std::vector<C> &roots, std::vector<C> rhs,
                                 const std::function<double(const C &)> &mag)
{
    const size_t d = roots.size();
    std::vector<std::vector<C>> m(d, std::vector<C>(d + 1, C()));
    for (size_t i = 0; i < d; ++i) {
        C p = rhs[i] * C() ; // placeholder overwritten below
        (void)p;
    }
    for (size_t i = 0; i < d; ++i) {
        C pw = roots[i] / roots[i]; // 1 in the right precision
        for (size_t k = 0; k < d; ++k) {
            m[i][k] = pw;
            pw = pw * roots[i];
        }
        m[i][d] = rhs[i];
    }
    for (size_t c = 0; c < d; ++c) {
        size_t piv = c;
        for (size_t r = c + 1; r < d; ++r)
            if (mag(m[r][c]) > mag(m[piv][c])) piv = r;
        std::swap(m[c], m[piv]);
        for (size_t r = 0; r < d; ++r) {
            if (r == c) continue;
            C f = m[r][c] / m[c][c];
            for (size_t k = c; k <= d; ++k) m[r][k] = m[r][k] - f * m[c][k];
        }
    }
    std::vector<C> out(d);
    for (size_t i = 0; i < d; ++i) out[i] = m[i][d] / m[i][i];
    return out;
}

struct NumericCtx {
    std::vector<std::complex<double>> rd;
    std::vector<Cx> rh;
    std::vector<int> conj_of;
};

// Recover h in Q[x] of degree < d with h(root_i) = target_i, screening in double first.
std::optional<QPoly> recover(const NumericCtx &ctx, const std::vector<std::complex<double>> &td,
                             const std::vector<Cx> &th)
{
    const size_t d = ctx.rd.size();
    if (d == 1) {
        if (std::abs(td[0].imag()) > 1e-9) return std::nullopt;
        mpq_class q;
        double x = th[0].re.to_double();
        if (!cf_rational(x, q, 1e-12 * std::max(1.0, std::abs(x)))) return std::nullopt;
        return QPoly{q};
    }
    auto cd = solve_vandermonde<std::complex<double>>(
        ctx.rd, td, [](const std::complex<double> &v) { return std::abs(v); });
    for (auto &v : cd) {
        mpq_class q;
        if (std::abs(v.imag()) > 1e-6 * std::max(1.0, std::abs(v))) return std::nullopt;
        if (!cf_rational(v.real(), q, 1e-6 * std::max(1.0, std::abs(v)))) return std::nullopt;
    }
    std::vector<Cx> rh = ctx.rh;
    auto ch = solve_vandermonde<Cx>(rh, th, [](const Cx &v) { return num::abs(v).to_double(); });
    QPoly out(d);
    for (size_t k = 0; k < d; ++k) {
        double x = ch[k].re.to_double();
        if (std::abs(ch[k].im.to_double()) > 1e-20 * std::max(1.0, std::abs(x))) return std::nullopt;
        if (!cf_rational(x, out[k], 1e-13 * std::max(1.0, std::abs(x)))) return std::nullopt;
    }
    return out;
}

NumericCtx numeric_ctx(const NumberField &f)
{
    NumericCtx ctx;
    ctx.rd = f.roots_approx();
    const int d = f.degree();
    for (int k = 0; k < d; ++k) {
        Cx c;
        Real r;
        f.root_ball(k, kBasePrec, c, r);
        ctx.rh.push_back(c);
    }
    ctx.conj_of.resize(d);
    for (int i = 0; i < d; ++i) {
        int best = 0;
        for (int j = 0; j < d; ++j)
            if (std::abs(ctx.rd[j] - std::conj(ctx.rd[i])) < std::abs(ctx.rd[best] - std::conj(ctx.rd[i])))
                best = j;
        ctx.conj_of[i] = best;
    }
    return ctx;
}

FieldElement eval_in_field(const FieldPtr &f, const QPoly &g, const FieldElement &x)
{
    FieldElement acc = FieldElement::rational(f, g.empty() ? mpq_class(0) : g.back());
    for (size_t k = g.size(); k-- > 1;) acc = acc * x + FieldElement::rational(f, g[k - 1]);
    return acc;
}

std::vector<mpz_class> exact_div_int(const std::vector<mpz_class> &a, const std::vector<mpz_class> &b, bool &ok)
{
    // a / b for monic b, integer coefficients
    std::vector<mpz_class> r = a;
    const size_t db = b.size() - 1;
    std::vector<mpz_class> q(a.size() - db);
    for (size_t k = a.size(); k-- > db;) {
        mpz_class c = r[k];
        q[k - db] = c;
        for (size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
    }
    ok = true;
    for (size_t k = 0; k < db; ++k)
        if (r[k] != 0) ok = false;
    return q;
}

} // namespace

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldPtr f, QPoly coeffs) : f_(std::move(f)), c_(std::move(coeffs))
{
    if (c_.size() < static_cast<size_t>(f_->degree())) c_.resize(f_->degree());
    reduce(c_, f_->min_poly());
}

FieldElement FieldElement::rational(FieldPtr f, const mpq_class &q)
{
    QPoly c(f->degree());
    c[0] = q;
    return FieldElement(std::move(f), std::move(c));
}

FieldElement FieldElement::alpha(FieldPtr f)
{
    QPoly c(std::max(2, f->degree()));
    c[1] = 1;
    return FieldElement(std::move(f), std::move(c));
}

bool FieldElement::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const mpq_class &q) { return q == 0; });
}

bool FieldElement::is_one() const
{
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class &q) { return q == 0; });
}

bool FieldElement::is_rational() const
{
    return std::all_of(c_.begin() + (c_.empty() ? 0 : 1), c_.end(), [](const mpq_class &q) { return q == 0; });
}

static void check_same(const FieldElement &a, const FieldElement &b)
{
    if (a.field() != b.field() && !a.field()->same_as(*b.field()))
        throw Error(Errc::FieldMismatch, "operands from different fields");
}

FieldElement FieldElement::operator+(const FieldElement &b) const
{
    check_same(*this, b);
    QPoly r = c_;
    for (size_t k = 0; k < r.size(); ++k) r[k] += b.c_[k];
    FieldElement e;
    e.f_ = f_;
    e.c_ = std::move(r);
    return e;
}

FieldElement FieldElement::operator-(const FieldElement &b) const
{
    check_same(*this, b);
    QPoly r = c_;
    for (size_t k = 0; k < r.size(); ++k) r[k] -= b.c_[k];
    FieldElement e;
    e.f_ = f_;
    e.c_ = std::move(r);
    return e;
}

FieldElement FieldElement::operator-() const
{
    FieldElement e;
    e.f_ = f_;
    e.c_ = c_;
    for (auto &q : e.c_) q = -q;
    return e;
}

FieldElement FieldElement::operator*(const FieldElement &b) const
{
    check_same(*this, b);
    return FieldElement(f_, qpoly_mul(c_, b.c_));
}

FieldElement FieldElement::inv() const
{
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    const int d = f_->degree();
    // columns: this * alpha^j ; solve M e = 1
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
    FieldElement col = *this;
    const FieldElement a = FieldElement::alpha(f_);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
        col = col * a;
    }
    m[0][d] = 1;
    for (int c = 0; c < d; ++c) {
        int piv = c;
        while (m[piv][c] == 0) ++piv;
        std::swap(m[c], m[piv]);
        mpq_class ip = 1 / m[c][c];
        for (int k = c; k <= d; ++k) m[c][k] *= ip;
        for (int r = 0; r < d; ++r) {
            if (r == c || m[r][c] == 0) continue;
            mpq_class f = m[r][c];
            for (int k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
        }
    }
    QPoly e(d);
    for (int i = 0; i < d; ++i) e[i] = m[i][d];
    return FieldElement(f_, std::move(e));
}

FieldElement FieldElement::operator/(const FieldElement &b) const
{
    check_same(*this, b);
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by zero");
    if (b.is_rational()) {
        FieldElement e = *this;
        for (auto &q : e.c_) q /= b.c_[0];
        return e;
    }
    return *this * b.inv();
}

FieldElement FieldElement::pow(unsigned e) const
{
    FieldElement r = FieldElement::rational(f_, 1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement &b) const
{
    check_same(*this, b);
    return c_ == b.c_;
}

std::string FieldElement::str() const
{
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k].get_str();
        if (k == 1) os << "*a";
        else if (k > 1) os << "*a^" << k;
    }
    if (first) os << "0";
    return os.str();
}

QPoly qpoly_mul(const QPoly &a, const QPoly &b)
{
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

void qpoly_trim(QPoly &a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// ---------------------------------------------------------------- NumberField

NumberField::NumberField(std::vector<mpz_class> min_poly, std::string hint_re, std::string hint_im)
    : min_poly_(std::move(min_poly)), hint_re_(std::move(hint_re)), hint_im_(std::move(hint_im))
{
}

void NumberField::root_ball(int k, mpfr_prec_t p, Cx &center, Real &radius) const
{
    if (p <= roots_hp_[k].prec() - 32 || p <= kBasePrec) {
        center = roots_hp_[k];
        radius = radius_hp_[k];
        return;
    }
    refine_root(min_poly_, roots_d_[k], p, center, radius);
}

GaloisAutomorphism NumberField::conjugation() const
{
    GaloisAutomorphism g = autos_[conj_index_];
    g.field = shared_from_this();
    return g;
}

std::vector<GaloisAutomorphism> NumberField::automorphisms() const
{
    auto v = autos_;
    for (auto &g : v) g.field = shared_from_this();
    return v;
}

bool NumberField::same_as(const NumberField &o) const
{
    return min_poly_ == o.min_poly_ && std::abs(alpha_approx() - o.alpha_approx()) < 1e-9;
}

FieldPtr nf_create(const std::vector<long> &min_poly, double hint_re, double hint_im)
{
    std::vector<mpz_class> mp;
    for (long c : min_poly) mp.emplace_back(c);
    std::ostringstream r, i;
    r.precision(17);
    i.precision(17);
    r << hint_re;
    i << hint_im;
    return nf_create(mp, r.str(), i.str());
}

FieldPtr nf_create(const std::vector<mpz_class> &min_poly, const std::string &hint_re,
                   const std::string &hint_im)
{
    if (min_poly.size() < 2 || min_poly.back() != 1)
        throw Error(Errc::ReducibleMinPoly, "min_poly must be monic of degree >= 1");
    auto f = std::make_shared<NumberField>(min_poly, hint_re, hint_im);
    const int d = f->degree();

    std::vector<double> md(min_poly.size());
    for (size_t k = 0; k < md.size(); ++k) md[k] = min_poly[k].get_d();
    f->roots_d_ = d == 1 ? std::vector<std::complex<double>>{-md[0]} : dk_roots(md);
    for (auto &z : f->roots_d_) {
        Cx c;
        Real r;
        refine_root(min_poly, z, kBasePrec, c, r);
        f->roots_hp_.push_back(c);
        f->radius_hp_.push_back(r);
        z = {c.re.to_double(), c.im.to_double()};
    }

    // designated root
    const std::complex<double> hint(std::stod(hint_re), std::stod(hint_im));
    int hits = 0;
    for (int k = 0; k < d; ++k) {
        if (std::abs(f->roots_d_[k] - hint) < 1e-3) {
            ++hits;
            f->designated_ = k;
        }
    }
    if (hits != 1)
        throw Error(Errc::AmbiguousRootHint, "root hint must be within 1e-3 of exactly one root (found " +
                                                  std::to_string(hits) + ")");

    // irreducibility: any monic integer factor of degree <= d/2 has coefficients
    // equal to a symmetric function of a subset of roots
    for (int m = 1; m <= d / 2; ++m) {
        std::vector<int> idx(m);
        for (int i = 0; i < m; ++i) idx[i] = i;
        while (true) {
            std::vector<Cx> prod{Cx(Real(1.0, kBasePrec), Real(kBasePrec))};
            for (int i : idx) {
                std::vector<Cx> nxt(prod.size() + 1, Cx(kBasePrec));
                for (size_t j = 0; j < prod.size(); ++j) {
                    nxt[j + 1] = nxt[j + 1] + prod[j];
                    nxt[j] = nxt[j] - prod[j] * f->roots_hp_[i];
                }
                prod = std::move(nxt);
            }
            bool integral = true;
            std::vector<mpz_class> cand;
            for (auto &c : prod) {
                double re = c.re.to_double(), im = c.im.to_double();
                if (std::abs(im) > 1e-30 || std::abs(re - std::round(re)) > 1e-30) { integral = false; break; }
                cand.emplace_back(std::to_string(static_cast<long long>(std::llround(re))));
            }
            if (integral) {
                bool ok;
                exact_div_int(min_poly, cand, ok);
                if (ok) throw Error(Errc::ReducibleMinPoly, "min_poly has a factor of degree " + std::to_string(m));
            }
            int i = m - 1;
            while (i >= 0 && idx[i] == d - m + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    // automorphisms by permutation search over embeddings
    NumericCtx ctx = numeric_ctx(*f);
    std::vector<int> perm(d, -1);
    std::vector<bool> used(d, false);
    std::vector<QPoly> found;
    std::vector<int> found_root;
    const FieldElement a = FieldElement::alpha(f);
    std::function<void(int)> dfs = [&](int i) {
        if (static_cast<int>(found.size()) == d) return;
        if (i == d) {
            std::vector<std::complex<double>> td(d);
            std::vector<Cx> th;
            for (int k = 0; k < d; ++k) {
                td[k] = ctx.rd[perm[k]];
                th.push_back(ctx.rh[perm[k]]);
            }
            auto h = recover(ctx, td, th);
            if (!h) return;
            FieldElement img(f, *h);
            QPoly mq(min_poly.begin(), min_poly.end());
            if (!eval_in_field(f, mq, img).is_zero()) return;
            for (auto &g : found)
                if (g == img.coeffs()) return;
            found.push_back(img.coeffs());
            found_root.push_back(perm[f->designated_]);
            return;
        }
        const int ci = ctx.conj_of[i];
        for (int j = 0; j < d; ++j) {
            if (used[j]) continue;
            if (ci < i && ctx.conj_of[perm[ci]] != j) continue;
            if (ci == i && ctx.conj_of[j] != j) continue;
            used[j] = true;
            perm[i] = j;
            dfs(i + 1);
            used[j] = false;
            perm[i] = -1;
        }
    };
    dfs(0);
    if (static_cast<int>(found.size()) != d)
        throw Error(Errc::NotGaloisExtension,
                    "found " + std::to_string(found.size()) + " of " + std::to_string(d) + " automorphisms");
    for (size_t k = 0; k < found.size(); ++k) {
        GaloisAutomorphism g;
        g.image_of_alpha = found[k];
        g.root_index = found_root[k];
        if (g.root_index == f->designated_) f->identity_index_ = static_cast<int>(k);
        if (g.root_index == ctx.conj_of[f->designated_]) f->conj_index_ = static_cast<int>(k);
        f->autos_.push_back(std::move(g));
    }
    // identity first, for deterministic listings
    std::swap(f->autos_[0], f->autos_[f->identity_index_]);
    if (f->conj_index_ == 0) f->conj_index_ = f->identity_index_;
    else if (f->conj_index_ == f->identity_index_) f->conj_index_ = 0;
    f->identity_index_ = 0;
    std::sort(f->autos_.begin() + 1, f->autos_.end(),
              [&](const GaloisAutomorphism &x, const GaloisAutomorphism &y) {
                  auto ax = f->roots_d_[x.root_index], ay = f->roots_d_[y.root_index];
                  return std::arg(ax) < std::arg(ay);
              });
    for (size_t k = 0; k < f->autos_.size(); ++k)
        if (f->autos_[k].root_index == ctx.conj_of[f->designated_]) f->conj_index_ = static_cast<int>(k);
    return f;
}

// ---------------------------------------------------------------- operations

FieldElement fe_arith(const FieldElement &a, const FieldElement &b, char op)
{
    switch (op) {
    case '+': return a + b;
    case '-': return a - b;
    case '*': return a * b;
    case '/': return a / b;
    default: throw std::invalid_argument("fe_arith: op must be one of + - * /");
    }
}

FieldElement fe_apply(const GaloisAutomorphism &sigma, const FieldElement &a)
{
    if (sigma.field != a.field() && !sigma.field->same_as(*a.field()))
        throw Error(Errc::FieldMismatch, "automorphism from another field");
    FieldElement img(a.field(), sigma.image_of_alpha);
    return eval_in_field(a.field(), a.coeffs(), img);
}

std::vector<GaloisAutomorphism> nf_automorphisms(const FieldPtr &f) { return f->automorphisms(); }

GaloisAutomorphism compose(const GaloisAutomorphism &s, const GaloisAutomorphism &t)
{
    GaloisAutomorphism r;
    r.field = s.field;
    FieldElement ta(s.field, t.image_of_alpha);
    r.image_of_alpha = fe_apply(s, ta).coeffs();
    for (auto &g : s.field->automorphisms())
        if (g.image_of_alpha == r.image_of_alpha) r.root_index = g.root_index;
    return r;
}

bool is_identity(const GaloisAutomorphism &s)
{
    return FieldElement(s.field, s.image_of_alpha) == FieldElement::alpha(s.field);
}

std::complex<double> fe_approx(const FieldElement &a)
{
    const auto z = a.field()->alpha_approx();
    std::complex<double> acc = 0;
    const auto &c = a.coeffs();
    for (size_t k = c.size(); k-- > 0;) acc = acc * z + c[k].get_d();
    return acc;
}

namespace {

// Value of b at the designated root with an absolute error bound.
void eval_ball(const FieldElement &b, mpfr_prec_t prec, Cx &val, Real &err)
{
    const NumberField &f = *b.field();
    Cx z;
    Real r;
    f.root_ball(f.designated(), prec, z, r);
    const mpfr_prec_t wp = z.prec();
    const auto &c = b.coeffs();
    Cx acc(wp);
    for (size_t k = c.size(); k-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + Real(c[k], wp);
    }
    val = acc;
    // error: root uncertainty plus rounding
    Real M = num::abs(z).with_prec(64) + r;
    Real e1(64), e2(64), Mk(1.0, 64);
    for (size_t k = 0; k < c.size(); ++k) {
        Real ak = num::abs(Real(c[k], 64));
        if (k > 0) {
            e1 = e1 + ak * Real(static_cast<double>(k), 64) * Mk * r;
            Mk = Mk * M;
        }
        e2 = e2 + ak * Mk * Real(8.0 * static_cast<double>(k) + 8.0, 64);
    }
    err = (e1 + e2 * num::pow2(-static_cast<long>(wp) + 2, 64)) * Real(2.0, 64);
}

} // namespace

int fe_sign(const FieldElement &a, Part part)
{
    const FieldElement ca = fe_apply(a.field()->conjugation(), a);
    const FieldElement b = part == Part::Real ? a + ca : a - ca;
    if (b.is_zero()) return 0;
    for (mpfr_prec_t p = 256;; p *= 2) {
        Cx v;
        Real err;
        eval_ball(b, p, v, err);
        const Real &x = part == Part::Real ? v.re : v.im;
        if (num::abs(x) > err) return x.sign();
    }
}

std::vector<FieldElement> roots_in_field(const FieldPtr &f, const QPoly &g0)
{
    QPoly g = g0;
    qpoly_trim(g);
    if (g.size() < 2) return {};
    // exact integer-coefficient copy for refinement
    mpz_class den = 1;
    for (auto &q : g) den = lcm(den, q.get_den());
    std::vector<mpz_class> gi;
    for (auto &q : g) gi.push_back(mpz_class(q * den));
    const int e = static_cast<int>(g.size()) - 1;
    std::vector<std::complex<double>> gr =
        e == 1 ? std::vector<std::complex<double>>{-mpq_class(g[0] / g[1]).get_d()} : dk_roots(monic_double(g));
    std::vector<Cx> grh;
    for (auto &z : gr) {
        Cx c;
        Real r;
        refine_root(gi, z, kBasePrec, c, r);
        grh.push_back(c);
        z = {c.re.to_double(), c.im.to_double()};
    }
    std::vector<int> gconj(e);
    for (int i = 0; i < e; ++i) {
        int best = 0;
        for (int j = 0; j < e; ++j)
            if (std::abs(gr[j] - std::conj(gr[i])) < std::abs(gr[best] - std::conj(gr[i]))) best = j;
        gconj[i] = best;
    }
    NumericCtx ctx = numeric_ctx(*f);
    const int d = f->degree();
    std::vector<int> pick(d, -1);
    std::vector<FieldElement> out;
    std::function<void(int)> dfs = [&](int i) {
        if (i == d) {
            std::vector<std::complex<double>> td(d);
            std::vector<Cx> th;
            for (int k = 0; k < d; ++k) {
                td[k] = gr[pick[k]];
                th.push_back(grh[pick[k]]);
            }
            auto h = recover(ctx, td, th);
            if (!h) return;
            FieldElement x(f, *h);
            if (!eval_in_field(f, g, x).is_zero()) return;
            for (auto &y : out)
                if (y == x) return;
            out.push_back(x);
            return;
        }
        const int ci = ctx.conj_of[i];
        for (int j = 0; j < e; ++j) {
            if (ci < i && gconj[pick[ci]] != j) continue;
            if (ci == i && gconj[j] != j) continue;
            pick[i] = j;
            dfs(i + 1);
        }
    };
    dfs(0);
    std::sort(out.begin(), out.end(), [](const FieldElement &x, const FieldElement &y) {
        return std::arg(fe_approx(x)) < std::arg(fe_approx(y));
    });
    return out;
}

static QPoly cyclotomic_poly(int N)
{
    // Z^N - 1 divided by Phi_m for every proper divisor m
    QPoly p(N + 1);
    p[0] = -1;
    p[N] = 1;
    for (int m = 1; m < N; ++m) {
        if (N % m) continue;
        QPoly q = cyclotomic_poly(m);
        // long division by monic q
        const size_t dq = q.size() - 1;
        QPoly quot(p.size() - dq);
        for (size_t k = p.size(); k-- > dq;) {
            mpq_class c = p[k];
            quot[k - dq] = c;
            for (size_t j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
        }
        p = quot;
    }
    return p;
}

GaloisAutomorphism cyclotomic_automorphism(const FieldPtr &f, int N, int k)
{
    auto zs = roots_in_field(f, cyclotomic_poly(N));
    if (zs.empty()) throw Error(Errc::FieldMismatch, "field has no primitive root of unity of order " + std::to_string(N));
    const FieldElement &z = zs.front();
    const FieldElement target = z.pow(static_cast<unsigned>(((k % N) + N) % N));
    for (auto &s : f->automorphisms())
        if (fe_apply(s, z) == target) return s;
    throw Error(Errc::NotAnAutomorphism, "no automorphism zeta -> zeta^" + std::to_string(k));
}

FieldElement FieldLift::lift(const FieldElement &a) const { return eval_in_field(field, a.coeffs(), image_of_alpha); }

FieldLift adjoin_i(const FieldPtr &f)
{
    const int d = f->degree();
    for (long m = 1; m < 50; ++m) {
        // prod_j ((Z - a_j)^2 + m^2), real coefficients
        std::vector<Real> p{Real(1.0, kBasePrec)};
        for (int j = 0; j < d; ++j) {
            Cx c;
            Real r;
            f->root_ball(j, kBasePrec, c, r);
            const Real &aj = c.re;
            Real c0 = aj * aj + Real(static_cast<double>(m * m), kBasePrec);
            Real c1 = -(aj + aj);
            std::vector<Real> nxt(p.size() + 2, Real(kBasePrec));
            for (size_t k = 0; k < p.size(); ++k) {
                nxt[k] = nxt[k] + p[k] * c0;
                nxt[k + 1] = nxt[k + 1] + p[k] * c1;
                nxt[k + 2] = nxt[k + 2] + p[k];
            }
            p = std::move(nxt);
        }
        std::vector<mpz_class> mp;
        bool ok = true;
        for (auto &c : p) {
            double x = c.to_double();
            if (std::abs(x - std::round(x)) > 1e-20) ok = false;
            mp.emplace_back(std::to_string(static_cast<long long>(std::llround(x))));
        }
        if (!ok) continue;
        const auto a0 = f->alpha_approx();
        std::ostringstream hr, hi;
        hr.precision(17);
        hi.precision(17);
        hr << a0.real();
        hi << static_cast<double>(m);
        FieldPtr g;
        try {
            g = nf_create(mp, hr.str(), hi.str());
        } catch (const Error &) {
            continue;
        }
        QPoly mq(f->min_poly().begin(), f->min_poly().end());
        for (auto &x : roots_in_field(g, mq)) {
            if (std::abs(fe_approx(x) - a0) < 1e-9) return FieldLift{g, x};
        }
    }
    throw Error(Errc::NotGaloisExtension, "could not adjoin i");
}

} // namespace arrlink
