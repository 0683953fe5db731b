#pragma once
// Kernels over Z/p (elimination) and over Z or Z/n (diagonalization with
// tracked column operations).
#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace arrlink {

using IntMat = std::vector<std::vector<int64_t>>;
using ZVec = std::vector<mpz_class>;

bool is_prime(int64_t n);

// right kernel mod prime p; basis vectors normalized so the first nonzero entry is 1,
// ordered by pivot-free column
std::vector<std::vector<int64_t>> kernel_mod_prime(const IntMat &a, int ncols, int64_t p);
int rank_mod_prime(IntMat a, int ncols, int64_t p);
// reduced row echelon form mod p, zero rows dropped; returns pivot columns
std::vector<int> rref_mod_prime(IntMat &a, int ncols, int64_t p);
// canonical basis of span(vs) / span(sub) mod p: reduced against the echelon form of sub, then
// put in echelon form; sub must lie in span(vs)
IntMat quotient_mod_prime(const IntMat &vs, const IntMat &sub, int ncols, int64_t p);

struct Diagonalization {
    std::vector<mpz_class> diag; // nonzero diagonal entries d_0..d_{r-1}
    std::vector<ZVec> v_cols;    // columns of the unimodular V with U A V = diag
    int rank() const { return static_cast<int>(diag.size()); }
};
Diagonalization diagonalize(const IntMat &a, int ncols);

// invariant factors (each divides the next) from an arbitrary nonzero diagonal
std::vector<mpz_class> invariant_factors(std::vector<mpz_class> diag);

// Z-basis of the integer kernel (saturated lattice)
std::vector<ZVec> kernel_int(const Diagonalization &d, int ncols);

// generators of the kernel mod n (any n >= 2) paired with their additive orders
struct ModGenerator {
    std::vector<int64_t> v;
    int64_t order;
    bool integral = false; // reduction of an integer kernel vector
};
std::vector<ModGenerator> kernel_mod_composite(const Diagonalization &d, int ncols, int64_t n);

// dispatcher: prime -> elimination, otherwise diagonalization
std::vector<std::vector<int64_t>> kernel_mod(const IntMat &a, int ncols, int64_t n);

int64_t mod(int64_t a, int64_t n);

} // namespace arrlink
