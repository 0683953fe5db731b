#pragma once
// Thin RAII wrapper over mpfr_t plus a complex pair; only what the
// certified sign evaluation and root finding need.
#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace arrlink::num {

class Real {
public:
    explicit Real(mpfr_prec_t prec = 128);
    Real(double v, mpfr_prec_t prec);
    Real(const mpq_class &q, mpfr_prec_t prec);
    Real(const mpz_class &z, mpfr_prec_t prec);
    Real(const std::string &dec, mpfr_prec_t prec);
    Real(const Real &o);
    Real(Real &&o) noexcept;
    Real &operator=(const Real &o);
    Real &operator=(Real &&o) noexcept;
    ~Real();

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    // promote to at least p bits, keeping the value
    Real with_prec(mpfr_prec_t p) const;

private:
    mpfr_t v_;
    bool live_ = true;
};

Real operator+(const Real &a, const Real &b);
Real operator-(const Real &a, const Real &b);
Real operator*(const Real &a, const Real &b);
Real operator/(const Real &a, const Real &b);
Real operator-(const Real &a);
Real abs(const Real &a);
Real hypot(const Real &a, const Real &b);
bool operator<(const Real &a, const Real &b);
bool operator>(const Real &a, const Real &b);
Real pow2(long e, mpfr_prec_t prec);

struct Cx {
    Real re, im;
    explicit Cx(mpfr_prec_t p = 128) : re(p), im(p) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    mpfr_prec_t prec() const { return re.prec(); }
};

Cx operator+(const Cx &a, const Cx &b);
Cx operator-(const Cx &a, const Cx &b);
Cx operator*(const Cx &a, const Cx &b);
Cx operator/(const Cx &a, const Cx &b);
Cx scale(const Cx &a, const Real &s);
Cx conj(const Cx &a);
Real abs(const Cx &a);
Cx with_prec(const Cx &a, mpfr_prec_t p);

} // namespace arrlink::num
