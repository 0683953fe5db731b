#include "arrlink/modlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace arrlink {

int64_t mod(int64_t a, int64_t n)
{
    int64_t r = a % n;
    return r < 0 ? r + n : r;
}

bool is_prime(int64_t n)
{
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static int64_t inv_mod(int64_t a, int64_t p)
{
    int64_t r = 1, b = mod(a, p), e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<int64_t>((__int128)r * b % p);
        b = static_cast<int64_t>((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(IntMat &a, int ncols, int64_t p)
{
    std::vector<int> piv;
    size_t row = 0;
    for (auto &r : a)
        for (auto &x : r) x = mod(x, p);
    for (int c = 0; c < ncols && row < a.size(); ++c) {
        size_t k = row;
        while (k < a.size() && a[k][c] == 0) ++k;
        if (k == a.size()) continue;
        std::swap(a[row], a[k]);
        const int64_t iv = inv_mod(a[row][c], p);
        for (int j = c; j < ncols; ++j) a[row][j] = a[row][j] * iv % p;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == row || a[i][c] == 0) continue;
            const int64_t f = a[i][c];
            for (int j = c; j < ncols; ++j)
                if (a[row][j]) a[i][j] = mod(a[i][j] - f * a[row][j], p);
        }
        piv.push_back(c);
        ++row;
    }
    return piv;
}

} // namespace

int rank_mod_prime(IntMat a, int ncols, int64_t p) { return static_cast<int>(rref(a, ncols, p).size()); }

std::vector<int> rref_mod_prime(IntMat &a, int ncols, int64_t p)
{
    auto piv = rref(a, ncols, p);
    a.resize(piv.size());
    return piv;
}

IntMat quotient_mod_prime(const IntMat &vs, const IntMat &sub, int ncols, int64_t p)
{
    IntMat z = sub;
    const auto pz = rref_mod_prime(z, ncols, p);
    IntMat r;
    for (auto v : vs) {
        for (auto &x : v) x = mod(x, p);
        for (size_t i = 0; i < pz.size(); ++i) {
            const int64_t f = v[pz[i]];
            if (!f) continue;
            for (int j = 0; j < ncols; ++j)
                if (z[i][j]) v[j] = mod(v[j] - f * z[i][j], p);
        }
        r.push_back(v);
    }
    rref_mod_prime(r, ncols, p);
    return r;
}

std::vector<std::vector<int64_t>> kernel_mod_prime(const IntMat &a0, int ncols, int64_t p)
{
    IntMat a = a0;
    auto piv = rref(a, ncols, p);
    std::vector<bool> is_piv(ncols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<int64_t>> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        std::vector<int64_t> v(ncols, 0);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = mod(-a[i][f], p);
        auto first = std::find_if(v.begin(), v.end(), [](int64_t x) { return x != 0; });
        const int64_t s = inv_mod(*first, p);
        for (auto &x : v) x = x * s % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

struct Overflow {};

struct I64 {
    static bool zero(int64_t x) { return x == 0; }
    static int64_t absv(int64_t x)
    {
        if (x == INT64_MIN) throw Overflow{};
        return std::abs(x);
    }
    static int64_t sub_mul(int64_t a, int64_t q, int64_t b)
    {
        int64_t t, r;
        if (__builtin_mul_overflow(q, b, &t) || __builtin_sub_overflow(a, t, &r)) throw Overflow{};
        return r;
    }
    static int64_t quot(int64_t a, int64_t b) { return a / b; }
    static mpz_class to_mpz(int64_t x) { return mpz_class(std::to_string(x)); }
    static int64_t from(int64_t x) { return x; }
};

struct Z {
    static bool zero(const mpz_class &x) { return sgn(x) == 0; }
    static mpz_class absv(const mpz_class &x) { return abs(x); }
    static mpz_class sub_mul(const mpz_class &a, const mpz_class &q, const mpz_class &b) { return a - q * b; }
    static mpz_class quot(const mpz_class &a, const mpz_class &b)
    {
        mpz_class r;
        mpz_tdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    }
    static mpz_class to_mpz(const mpz_class &x) { return x; }
    static mpz_class from(int64_t x) { return mpz_class(std::to_string(x)); }
};

template <class T, class Ops>
Diagonalization diag_impl(const IntMat &a0, int ncols)
{
    const int nrows = static_cast<int>(a0.size());
    std::vector<std::vector<T>> a(nrows, std::vector<T>(ncols));
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) a[i][j] = Ops::from(a0[i][j]);
    std::vector<std::vector<T>> v(ncols, std::vector<T>(ncols, Ops::from(0)));
    for (int j = 0; j < ncols; ++j) v[j][j] = Ops::from(1);

    auto swap_cols = [&](int x, int y) {
        if (x == y) return;
        for (auto &r : a) std::swap(r[x], r[y]);
        std::swap(v[x], v[y]);
    };

    Diagonalization d;
    for (int t = 0; t < std::min(nrows, ncols); ++t) {
        // pivot of least absolute value
        int pr = -1, pc = -1;
        T best = Ops::from(0);
        for (int i = t; i < nrows && !(pr >= 0 && best == Ops::from(1)); ++i)
            for (int j = t; j < ncols; ++j) {
                if (Ops::zero(a[i][j])) continue;
                T m = Ops::absv(a[i][j]);
                if (pr < 0 || m < best) {
                    pr = i;
                    pc = j;
                    best = m;
                    if (best == Ops::from(1)) break;
                }
            }
        if (pr < 0) break;
        std::swap(a[t], a[pr]);
        swap_cols(t, pc);
        for (bool again = true; again;) {
            again = false;
            for (int i = t + 1; i < nrows; ++i) {
                if (Ops::zero(a[i][t])) continue;
                T q = Ops::quot(a[i][t], a[t][t]);
                for (int j = t; j < ncols; ++j)
                    if (!Ops::zero(a[t][j])) a[i][j] = Ops::sub_mul(a[i][j], q, a[t][j]);
                if (!Ops::zero(a[i][t])) {
                    std::swap(a[t], a[i]);
                    again = true;
                }
            }
            for (int j = t + 1; j < ncols; ++j) {
                if (Ops::zero(a[t][j])) continue;
                T q = Ops::quot(a[t][j], a[t][t]);
                for (int i = t; i < nrows; ++i)
                    if (!Ops::zero(a[i][t])) a[i][j] = Ops::sub_mul(a[i][j], q, a[i][t]);
                for (int k = 0; k < ncols; ++k)
                    if (!Ops::zero(v[t][k])) v[j][k] = Ops::sub_mul(v[j][k], q, v[t][k]);
                if (!Ops::zero(a[t][j])) {
                    swap_cols(t, j);
                    again = true;
                }
            }
            if (!again)
                for (int i = t + 1; i < nrows && !again; ++i)
                    if (!Ops::zero(a[i][t])) again = true;
        }
        d.diag.push_back(Ops::to_mpz(a[t][t]));
    }
    for (int j = 0; j < ncols; ++j) {
        ZVec col(ncols);
        for (int k = 0; k < ncols; ++k) col[k] = Ops::to_mpz(v[j][k]);
        d.v_cols.push_back(std::move(col));
    }
    return d;
}

} // namespace

Diagonalization diagonalize(const IntMat &a, int ncols)
{
    try {
        return diag_impl<int64_t, I64>(a, ncols);
    } catch (const Overflow &) {
        return diag_impl<mpz_class, Z>(a, ncols);
    }
}

std::vector<mpz_class> invariant_factors(std::vector<mpz_class> d)
{
    for (auto &x : d) x = abs(x);
    for (size_t i = 0; i < d.size(); ++i)
        for (size_t j = i + 1; j < d.size(); ++j) {
            mpz_class g = gcd(d[i], d[j]), l = lcm(d[i], d[j]);
            d[i] = g;
            d[j] = l;
        }
    return d;
}

std::vector<ZVec> kernel_int(const Diagonalization &d, int ncols)
{
    std::vector<ZVec> out;
    for (int j = d.rank(); j < ncols; ++j) out.push_back(d.v_cols[j]);
    return out;
}

std::vector<ModGenerator> kernel_mod_composite(const Diagonalization &d, int ncols, int64_t n)
{
    std::vector<ModGenerator> out;
    const mpz_class N(std::to_string(n));
    auto reduce = [&](const ZVec &col, const mpz_class &scale) {
        std::vector<int64_t> v(ncols);
        for (int k = 0; k < ncols; ++k) {
            mpz_class x = col[k] * scale;
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), N.get_mpz_t());
            v[k] = r.get_si();
        }
        return v;
    };
    for (int i = 0; i < ncols; ++i) {
        mpz_class g = i < d.rank() ? gcd(d.diag[i], N) : N;
        if (g == 1) continue;
        out.push_back({reduce(d.v_cols[i], N / g), g.get_si(), i >= d.rank()});
    }
    return out;
}

std::vector<std::vector<int64_t>> kernel_mod(const IntMat &a, int ncols, int64_t n)
{
    if (is_prime(n)) return kernel_mod_prime(a, ncols, n);
    std::vector<std::vector<int64_t>> out;
    for (auto &g : kernel_mod_composite(diagonalize(a, ncols), ncols, n)) out.push_back(g.v);
    return out;
}

} // namespace arrlink
