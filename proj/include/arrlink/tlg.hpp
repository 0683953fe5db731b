#pragma once
// The linear system cutting out the tensor linking group, and its kernel.
#include "arrlink/combinatorics.hpp"
#include "arrlink/modlinalg.hpp"

#include <string>
#include <vector>

namespace arrlink {

struct Tensor {
    int64_t modulus = 0;                     // 0 for integral tensors
    std::vector<std::vector<int64_t>> values; // per edge (edges() order), one entry per line
    bool is_zero() const;
};

struct TlgSystem {
    std::vector<Edge> edges;
    int n = 0; // lines
    int ncols = 0;
    IntMat rows;
    std::vector<std::string> kinds; // one label per row
    int col(int edge, int line) const { return edge * n + line; }
};

TlgSystem tlg_matrix(const Combinatorics &c);

// Generators of TLG(C, Z/n) taken modulo reductions of integral tensors: the
// torsion part, which is what carries nontrivial loop linking numbers. For a
// prime n the representatives are canonical (echelon form, reduced against the
// integral part). tlg_kernel gives the unreduced kernel.
std::vector<Tensor> tlg_compute(const Combinatorics &c, int64_t modulus);
std::vector<Tensor> tlg_kernel(const Combinatorics &c, int64_t modulus);

struct TlgGroup {
    std::vector<Tensor> generators;
    std::vector<int64_t> orders;
    int kernel_dim = 0;    // generators of the unreduced kernel
    int integral_rank = 0; // rank of TLG(C, Z)
};
TlgGroup tlg_group(const Combinatorics &c, int64_t modulus);

struct Violation {
    std::string kind; // sum-zero, boundary-point, boundary-line, condition-I, condition-II, shape
    int edge = -1;
    int index = -1; // line or point involved
    std::string str(const Combinatorics &c) const;
};
std::vector<Violation> tensor_validate(const Combinatorics &c, const Tensor &t);

struct IntegralTlg {
    std::vector<Tensor> basis; // modulus 0
    std::vector<mpz_class> invariant_factors;
    int rank() const { return static_cast<int>(basis.size()); }
};
IntegralTlg tlg_integral(const Combinatorics &c);
// whether a tensor mod prime p is the reduction of an integral one
bool lifts_to_integral(const IntegralTlg &ig, const Tensor &t);

// canonical representative of the class of t (prime modulus) modulo integral
// tensors and nonzero scalars; zero when t lifts
Tensor tlg_class_normal(const IntegralTlg &ig, const Tensor &t);

Tensor tensor_zero(const Combinatorics &c, int64_t modulus);
Tensor tensor_scale(const Tensor &t, int64_t k);
Tensor tensor_reduce(const Tensor &t, int64_t modulus);
std::string edge_key(const Combinatorics &c, const Edge &e); // "P{1,3,9}->L1"

// transport a tensor along sigma: the result lives on perm_act(sigma, c)
Tensor tensor_perm(const Perm &sigma, const Combinatorics &c, const Tensor &t);

} // namespace arrlink
