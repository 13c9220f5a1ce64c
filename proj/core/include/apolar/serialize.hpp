#pragma once

#include <string>

#include "apolar/antipolar.hpp"
#include "apolar/catalecticant.hpp"
#include "apolar/hyperdet.hpp"
#include "apolar/quartic_scan.hpp"
#include "apolar/realcert.hpp"

namespace apolar {

// JSON emitters.  Rationals are strings "p" or "p/q"; term lists are in
// canonical monomial order; matrices are row-major nested arrays.  The full
// schema per payload is documented in the README.
std::string json_of_form(const GradedForm& f, int indent = 2);
std::string json_of_catalecticant(const CatalecticantMatrix& cm, int indent = 2);
std::string json_of_antipolar(const AntipolarForm& af, int indent = 2);
std::string json_of_signature(const SignatureReport& sig, int indent = 2);
std::string json_of_quartic_scan(const QuarticScanReport& rep, int indent = 2);
std::string json_of_boundary(const BoundarySideReport& rep, int indent = 2);
std::string json_of_certificate(const RankCertificate& cert, int indent = 2);
std::string json_of_sample_stats(const SampleStats& st, int indent = 2);
std::string json_of_pencil(const Pencil& p, int indent = 2);
std::string json_of_binary_form(const BinaryForm& f, int indent = 2);
std::string json_of_hyperdet(const Hyperdet2nn& h, int indent = 2);
std::string json_of_hyperdet2222(const Hyperdet2222& h, int indent = 2);
std::string json_of_error(const std::string& kind, const std::string& message,
                          std::size_t offset = std::string::npos, int indent = 2);

// JSON readers; schema_error on malformed or missing fields.
// Pencil:      {"T1": [[..]], "T2": [[..]], "symmetric": bool}
// Tensor2222:  {"entries": [16 rationals]} with index (i,j,k,l) -> 8i+4j+2k+l
// Matrix:      {"matrix": [[..]]} or a bare nested array
Pencil pencil_from_json(const std::string& text);
Tensor2222 tensor2222_from_json(const std::string& text);
Matrix<Rational> matrix_from_json(const std::string& text);

}  // namespace apolar
