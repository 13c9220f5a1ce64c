#pragma once

#include <string>

#include "apolar/catalecticant.hpp"
#include "apolar/matrix.hpp"

namespace apolar {

// Inertia (n_plus, n_minus, n_zero) of a symmetric rational matrix.
struct SignatureReport {
    int n_plus = 0, n_minus = 0, n_zero = 0;
    int size() const { return n_plus + n_minus + n_zero; }
    bool operator==(const SignatureReport& o) const {
        return n_plus == o.n_plus && n_minus == o.n_minus && n_zero == o.n_zero;
    }
    std::string to_string() const {
        return "(" + std::to_string(n_plus) + "," + std::to_string(n_minus) + "," +
               std::to_string(n_zero) + ")";
    }
};

// Exact inertia via the characteristic polynomial: all roots are real, so
// Descartes' rule on the coefficient signs is exact.  Non-symmetric input ->
// symmetry_error.
SignatureReport signature(const Matrix<Rational>& m);

// PSD certificate rank: builds the middle catalecticant of f at B, requires
// it positive semidefinite (not_psd_error otherwise, carrying the signature),
// and returns its rank.
int reznick_rank(const GradedForm& f, const Multidegree& B);

}  // namespace apolar
