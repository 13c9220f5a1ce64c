#pragma once

#include <utility>

#include "apolar/binary_form.hpp"
#include "apolar/matrix.hpp"

namespace apolar {

// Catalecticant of a binary form against degree-k operators: (k+1) rows of
// operators dx^{k-i} dy^i, (d-k+1) columns of monomials, Hankel entries
// coeff_f(i+j) * (d-i-j)! * (i+j)!.  Requires 0 <= k <= d.
Matrix<Rational> binary_catalecticant(const BinaryForm& f, int k);

// Apolar ideal generators of a nonzero binary form of formal degree d >= 1:
// a pair (g1, g2) of operator forms with deg g1 + deg g2 = d + 2 and
// deg g1 minimal.  Content-1 integer coefficients, positive lead.
std::pair<BinaryForm, BinaryForm> binary_apolar_generators(const BinaryForm& f);

// Complex Waring rank by Sylvester: deg g1 when g1 is squarefree (as a
// projective divisor of its formal degree), d + 2 - deg g1 otherwise.
int binary_rank_complex(const BinaryForm& f);

// f lies on the tangent developable of the rational normal curve minus the
// curve itself: complex rank exactly d and f is not a pure d-th power.
// Requires d >= 2.
bool tangential_membership_binary(const BinaryForm& f);

// Ranestad-Schreyer style witness at the point [p:q] of P^1: does the
// degree-d slice of the apolar ideal contain a nonzero operator divisible by
// the square of the dual linear form of [p:q]?  Requires d >= 2 and
// (p, q) != (0, 0).
bool rs_witness_binary(const BinaryForm& f, const Rational& p, const Rational& q);

}  // namespace apolar
