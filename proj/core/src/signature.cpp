#include "apolar/signature.hpp"

#include "apolar/unipoly.hpp"

namespace apolar {

SignatureReport signature(const Matrix<Rational>& m) {
    if (!m.is_square()) throw shape_error("signature of a non-square matrix");
    if (!m.is_symmetric()) throw symmetry_error("signature of a non-symmetric matrix");
    std::size_t n = m.rows();
    SignatureReport sig;
    if (n == 0) return sig;
    UniPoly p = charpoly(m);
    // Zero eigenvalues = trailing zero coefficients.
    std::size_t z = 0;
    while (z <= static_cast<std::size_t>(p.degree()) && p.coeff(z) == 0) ++z;
    sig.n_zero = static_cast<int>(z);
    // q has only real nonzero roots; Descartes' rule is exact on those.
    std::vector<Rational> qc(p.coeffs().begin() + z, p.coeffs().end());
    int plus = 0, minus = 0, prev = 0;
    for (std::size_t i = 0; i < qc.size(); ++i) {
        int s = sign(qc[i]);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++plus;
        prev = s;
    }
    prev = 0;
    for (std::size_t i = 0; i < qc.size(); ++i) {
        int s = sign(qc[i]);
        if (s == 0) continue;
        if (i % 2 == 1) s = -s;  // q(-x)
        if (prev != 0 && s != prev) ++minus;
        prev = s;
    }
    sig.n_plus = plus;
    sig.n_minus = minus;
    return sig;
}

int reznick_rank(const GradedForm& f, const Multidegree& B) {
    CatalecticantMatrix cm = catalecticant(f, B);
    if (!cm.matrix.is_square() || !cm.matrix.is_symmetric())
        throw symmetry_error("PSD certificate needs the symmetric middle catalecticant");
    SignatureReport sig = signature(cm.matrix);
    if (sig.n_minus > 0)
        throw not_psd_error("middle catalecticant is not positive semidefinite: inertia " +
                                sig.to_string(),
                            sig.n_plus, sig.n_minus, sig.n_zero);
    return sig.n_plus;
}

}  // namespace apolar
