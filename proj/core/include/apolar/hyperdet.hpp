#pragma once

#include <array>
#include <vector>

#include "apolar/binary_form.hpp"
#include "apolar/matrix.hpp"

namespace apolar {

// A 2 x n x n tensor presented as its two n x n slices: the pencil
// a1 T1 + a2 T2.  `symmetric` asserts both slices are symmetric.
struct Pencil {
    int n;
    Matrix<Rational> T1, T2;
    bool symmetric;

    Pencil(Matrix<Rational> t1, Matrix<Rational> t2, bool sym);
};

// det(a1 T1 + a2 T2) as a binary form of formal degree n in (a1, a2),
// computed from n+1 exact rational determinant evaluations and exact
// interpolation.
BinaryForm pencil_form(const Pencil& p);

// Schlaefli hyperdeterminant of the 2 x n x n tensor: the discriminant of
// the pencil form.  An identically zero pencil form yields value 0 with the
// degenerate flag set (the discriminant construction does not apply).
struct Hyperdet2nn {
    Rational value;
    bool degenerate;
};
Hyperdet2nn hyperdet_2nn(const Pencil& p);

// Real rank of the 2 x n x n tensor by root counting on the pencil:
//   zero or discriminant-zero pencil form -> BOUNDARY
//   n distinct real projective roots      -> RANK_N
//   otherwise                             -> RANK_N_PLUS_1
// Roots are counted projectively: Sturm on p(t,1) plus the root at infinity
// when the a1^n coefficient vanishes.
enum class BergqvistVerdict { RANK_N, RANK_N_PLUS_1, BOUNDARY };
const char* to_string(BergqvistVerdict v);
BergqvistVerdict bergqvist_real_rank(const Pencil& p);

// Pencils on the tangential/join loci (hyperdeterminant zero by design):
// T1 = I, T2 = a 2x2 Jordan block at lambda_1 plus diag(lambda_2, ...).
// lambda must be nonempty (n = lambda.size() + 1 >= 2).
Pencil tangential_join_sample(const std::vector<Rational>& lambda);
// Symmetric variant: T1 = diag(1, -1, 1, ..., 1),
// T2 = diag(l1, -l1, l2, ..., l_{n-1}); the pencil form acquires the double
// factor (a1 + l1 a2)^2 up to sign.
Pencil symmetric_tangential_sample(const std::vector<Rational>& lambda);

// 2x2x2 hyperdeterminant (Cayley): discriminant of the quadratic pencil
// form.  Requires n = 2; an identically zero pencil form yields 0.
Rational hyperdet_222(const Pencil& p);

// 2x2x2x2 tensor, entry (i,j,k,l) at index 8i + 4j + 2k + l.
struct Tensor2222 {
    std::array<Rational, 16> z{};
    const Rational& at(int i, int j, int k, int l) const {
        return z[static_cast<std::size_t>(8 * i + 4 * j + 2 * k + l)];
    }
    Rational& at(int i, int j, int k, int l) {
        return z[static_cast<std::size_t>(8 * i + 4 * j + 2 * k + l)];
    }
};

// Substitute u_{ijk} = z_{ijk0} + z_{ijk1} w, take the symbolic 2x2x2
// hyperdeterminant p(w) of the resulting tensor, then the discriminant of p
// at formal degree 4.  p identically zero -> value 0, degenerate flag.
struct Hyperdet2222 {
    UniPoly p;  // the intermediate quartic in w
    Rational value;
    bool degenerate;
};
Hyperdet2222 hyperdet_2222(const Tensor2222& z);

}  // namespace apolar
