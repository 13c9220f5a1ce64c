#pragma once

#include <vector>

#include "apolar/graded_form.hpp"
#include "apolar/matrix.hpp"
#include "apolar/multidegree.hpp"

namespace apolar {

// All exponent vectors of the given multidegree, in canonical order
// (descending lexicographic, block 1 outermost).
struct MonomialBasis {
    VariableBlock ring;
    Multidegree degree;
    std::vector<Exponents> monomials;
};
MonomialBasis monomial_basis(const VariableBlock& ring, const Multidegree& degree);

// Middle catalecticant pairing T_B x S_{A-B} -> k for f of multidegree A.
// Rows are indexed by differential operators of multidegree B (canonical
// monomial order), columns by monomials of degree A-B.  The entry at
// (alpha, beta) is the result of applying the composite operator
// d^{alpha+beta} to f by pure iterated differentiation, i.e.
// coeff_f(alpha+beta) * (alpha+beta)!.  With A = 2B the matrix is symmetric.
struct CatalecticantMatrix {
    GradedForm source;
    Multidegree B;
    MonomialBasis row_basis;  // operators, degree B
    MonomialBasis col_basis;  // monomials, degree A - B
    Matrix<Rational> matrix;

    std::size_t rank() const;
    Rational det() const;  // shape_error if not square
    // Basis of the operator-side (left) kernel, integer content-1 vectors.
    std::vector<std::vector<Rational>> operator_kernel() const;
};

// f must be multihomogeneous with declared multidegree A satisfying
// A - B >= 0 componentwise (order_error otherwise); zero f is degenerate.
CatalecticantMatrix catalecticant(const GradedForm& f, const Multidegree& B);

// Apolarity action: g(f), plain iterated differentiation of f by the
// operator polynomial g (dual variables matched positionally).
GradedForm apolar_apply(const GradedForm& g, const GradedForm& f);

// Generic rank of forms of multidegree A on the given product of projective
// spaces:
//   P1 x P1, A = (2,2d) up to factor order -> 2d + 2   (defective family)
//   P1 x P1, other A = (u,v)               -> ceil((u+1)(v+1) / 3)
//   Pn x P1 (n >= 2), A = (2,2d)           -> (d+1)(n+1)
// Anything else -> unsupported_ambient_error.
int generic_rank(const std::vector<std::size_t>& block_sizes, const Multidegree& A);

// (sum_i coords_i x_i)^{2B} per block, multiplied out: the 2B-th power of the
// point's linear form, a form of multidegree 2B.
GradedForm point_power(const VariableBlock& ring, const Multidegree& B,
                       const std::vector<Rational>& coords);

}  // namespace apolar
