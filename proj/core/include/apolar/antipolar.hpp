#pragma once

#include <vector>

#include "apolar/catalecticant.hpp"

namespace apolar {

// Antipolar form Omega(f): a form of multidegree 2B in the dual point
// variables, built from the adjugate of the middle catalecticant phi_f by
//   Omega = prod_i (2 B_i)! * sum_{alpha, beta} adj(phi)_{beta,alpha} * s^{alpha+beta}.
// Normalized so that antipolar evaluation satisfies the exact update rule
//   Omega(l) = det(phi_{f + l^{2B}}) - det(phi_f)
// for every point l (l^{2B} = the 2B-th power of the point's linear form).
struct AntipolarForm {
    GradedForm form;          // in the point ring, multidegree 2B
    GradedForm source;        // f
    Multidegree B;
    Rational det_phi;         // det of the middle catalecticant of f
    VariableBlock point_ring;
};

// Supported ambients: a single projective factor (any B = (b), b >= 1), and
// a product Pn x P1 with B = (1, d), d >= 1 (P1 x P1 is n = 1).  f must have
// multidegree exactly 2B and an invertible middle catalecticant
// (singular_catalecticant_error otherwise).
AntipolarForm antipolar(const GradedForm& f, const Multidegree& B);

Rational antipolar_eval(const AntipolarForm& omega, const std::vector<Rational>& point);

// Membership in the Ranestad-Schreyer style forbidden locus: Omega(l) = 0.
bool rs_membership(const GradedForm& f, const Multidegree& B,
                   const std::vector<Rational>& point);

enum class ForbiddenStatus { FORBIDDEN_CANDIDATE, NOT_DECIDED };
ForbiddenStatus forbidden_certificate(const GradedForm& f, const Multidegree& B,
                                      const std::vector<Rational>& point);

const char* to_string(ForbiddenStatus s);

}  // namespace apolar
