#include "arrlink/mpreal.hpp"

#include <algorithm>
#include <utility>

namespace arrlink::num {

Real::Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }

Real::Real(double v, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(const mpq_class &q, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const mpz_class &z, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const std::string &dec, mpfr_prec_t prec)
{
    mpfr_init2(v_, prec);
    mpfr_set_str(v_, dec.c_str(), 10, MPFR_RNDN);
}

Real::Real(const Real &o)
{
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real &&o) noexcept
{
    // steal the limbs; the moved-from object is left unusable but destructible
    v_[0] = o.v_[0];
    o.live_ = false;
}

Real &Real::operator=(const Real &o)
{
    if (this != &o) {
        if (!live_) { mpfr_init2(v_, o.prec()); live_ = true; }
        else mpfr_set_prec(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real &Real::operator=(Real &&o) noexcept
{
    if (this != &o) {
        if (live_) mpfr_clear(v_);
        v_[0] = o.v_[0];
        live_ = true;
        o.live_ = false;
    }
    return *this;
}

Real::~Real()
{
    if (live_) mpfr_clear(v_);
}

Real Real::with_prec(mpfr_prec_t p) const
{
    Real r(std::max(p, prec()));
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

static mpfr_prec_t pmax(const Real &a, const Real &b) { return std::max(a.prec(), b.prec()); }

Real operator+(const Real &a, const Real &b)
{
    Real r(pmax(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator-(const Real &a, const Real &b)
{
    Real r(pmax(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator*(const Real &a, const Real &b)
{
    Real r(pmax(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator/(const Real &a, const Real &b)
{
    Real r(pmax(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

Real operator-(const Real &a)
{
    Real r(a.prec());
    mpfr_neg(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real abs(const Real &a)
{
    Real r(a.prec());
    mpfr_abs(r.get(), a.get(), MPFR_RNDN);
    return r;
}

Real hypot(const Real &a, const Real &b)
{
    Real r(pmax(a, b));
    mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

bool operator<(const Real &a, const Real &b) { return mpfr_less_p(a.get(), b.get()); }
bool operator>(const Real &a, const Real &b) { return mpfr_greater_p(a.get(), b.get()); }

Real pow2(long e, mpfr_prec_t prec)
{
    Real r(prec);
    mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
    return r;
}

Cx operator+(const Cx &a, const Cx &b) { return Cx(a.re + b.re, a.im + b.im); }
Cx operator-(const Cx &a, const Cx &b) { return Cx(a.re - b.re, a.im - b.im); }

Cx operator*(const Cx &a, const Cx &b)
{
    return Cx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

Cx operator/(const Cx &a, const Cx &b)
{
    Real den = b.re * b.re + b.im * b.im;
    return Cx((a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den);
}

Cx scale(const Cx &a, const Real &s) { return Cx(a.re * s, a.im * s); }
Cx conj(const Cx &a) { return Cx(a.re, -a.im); }
Real abs(const Cx &a) { return hypot(a.re, a.im); }
Cx with_prec(const Cx &a, mpfr_prec_t p) { return Cx(a.re.with_prec(p), a.im.with_prec(p)); }

} // namespace arrlink::num
