#pragma once
// Number fields Q(alpha) with a designated complex embedding.
#include "arrlink/error.hpp"
#include "arrlink/mpreal.hpp"

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace arrlink {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

using QPoly = std::vector<mpq_class>; // low-to-high

class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr f, QPoly coeffs); // reduces mod min_poly
    static FieldElement rational(FieldPtr f, const mpq_class &q);
    static FieldElement alpha(FieldPtr f);

    const FieldPtr &field() const { return f_; }
    const QPoly &coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    FieldElement operator+(const FieldElement &b) const;
    FieldElement operator-(const FieldElement &b) const;
    FieldElement operator*(const FieldElement &b) const;
    FieldElement operator/(const FieldElement &b) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(unsigned e) const;
    bool operator==(const FieldElement &b) const;
    bool operator!=(const FieldElement &b) const { return !(*this == b); }

    std::string str() const; // "a + b*alpha + ..."

private:
    FieldPtr f_;
    QPoly c_;
};

enum class Part { Real, Imaginary };

struct GaloisAutomorphism {
    FieldPtr field;
    QPoly image_of_alpha;
    // index of the root tau(sigma(alpha)) among NumberField::roots_approx()
    int root_index = 0;
};

class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // Use nf_create; the constructor only stores data.
    NumberField(std::vector<mpz_class> min_poly, std::string hint_re, std::string hint_im);

    int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
    const std::vector<mpz_class> &min_poly() const { return min_poly_; }
    const std::string &hint_re() const { return hint_re_; }
    const std::string &hint_im() const { return hint_im_; }
    int designated() const { return designated_; }
    const std::vector<std::complex<double>> &roots_approx() const { return roots_d_; }
    std::complex<double> alpha_approx() const { return roots_d_[designated_]; }
    // stored without the back pointer to avoid a shared_ptr cycle
    GaloisAutomorphism conjugation() const;
    std::vector<GaloisAutomorphism> automorphisms() const;
    // true when the designated embedding is real, i.e. no element has nonzero imaginary part
    bool totally_real() const { return conj_index_ == identity_index_; }

    // root balls at working precision p: center of root k and a radius containing the true root
    void root_ball(int k, mpfr_prec_t p, num::Cx &center, num::Real &radius) const;

    bool same_as(const NumberField &o) const;

private:
    friend FieldPtr nf_create(const std::vector<mpz_class> &, const std::string &, const std::string &);
    std::vector<mpz_class> min_poly_;
    std::string hint_re_, hint_im_;
    std::vector<std::complex<double>> roots_d_;
    std::vector<num::Cx> roots_hp_; // at base precision
    std::vector<num::Real> radius_hp_;
    int designated_ = 0;
    std::vector<GaloisAutomorphism> autos_;
    int conj_index_ = 0;
    int identity_index_ = 0;
};

FieldPtr nf_create(const std::vector<mpz_class> &min_poly, const std::string &hint_re,
                   const std::string &hint_im);
FieldPtr nf_create(const std::vector<long> &min_poly, double hint_re, double hint_im);

FieldElement fe_arith(const FieldElement &a, const FieldElement &b, char op);
int fe_sign(const FieldElement &a, Part part);
FieldElement fe_apply(const GaloisAutomorphism &sigma, const FieldElement &a);
std::vector<GaloisAutomorphism> nf_automorphisms(const FieldPtr &f);
GaloisAutomorphism compose(const GaloisAutomorphism &s, const GaloisAutomorphism &t); // s after t
bool is_identity(const GaloisAutomorphism &s);
std::complex<double> fe_approx(const FieldElement &a);

// All elements of f that are roots of the rational polynomial g.
std::vector<FieldElement> roots_in_field(const FieldPtr &f, const QPoly &g);

// Automorphism sending a primitive N-th root of unity zeta in f to zeta^k; throws if
// f contains no primitive N-th root of unity or k is not a unit mod N.
GaloisAutomorphism cyclotomic_automorphism(const FieldPtr &f, int N, int k);

// K(i) for a field whose designated embedding is real, with the embedding K -> K(i).
struct FieldLift {
    FieldPtr field;
    FieldElement image_of_alpha;
    FieldElement lift(const FieldElement &a) const;
};
FieldLift adjoin_i(const FieldPtr &f);

// polynomial helpers on QPoly
QPoly qpoly_mul(const QPoly &a, const QPoly &b);
void qpoly_trim(QPoly &a);

} // namespace arrlink
