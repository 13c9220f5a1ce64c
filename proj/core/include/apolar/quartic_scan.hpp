#pragma once

#include <string>
#include <vector>

#include "apolar/catalecticant.hpp"

namespace apolar {

// Pencil analysis of a ternary quartic f: how det of the middle catalecticant
// of f + lambda * (a x + b y + c z)^4 depends on the added fourth power.
//
//   delta_poly          det(C_{f + lambda l^4}) - det(C_f), a form of
//                       multidegree (4, 1) in the ring (a,b,c | lambda);
//                       exact for every rank of C_f (terms of higher lambda
//                       degree vanish identically at corank <= 1, and the
//                       whole pencil determinant collapses below that).
//   nullspace_conditions  for each kernel vector N_j of C_f the quadric
//                       sum_beta N_{j,beta} (2!/beta!) (a,b,c)^beta, which
//                       vanishes exactly at directions l with l^4 apolar to
//                       the kernel operator.
//   annotations         rank statements from kernel dimension (Kleppe's
//                       classification of ternary quartics), citation only.
struct QuarticScanReport {
    int rank_Cf = 0;
    Rational det_Cf;
    GradedForm delta_poly;
    std::vector<GradedForm> nullspace_conditions;
    std::vector<std::string> annotations;
};

// f: ternary quartic (single block of 3 variables, degree (4)), nonzero.
QuarticScanReport forbidden_scan_quartic(const GradedForm& f);

}  // namespace apolar
