#include "apolar/quartic_scan.hpp"

namespace apolar {

QuarticScanReport forbidden_scan_quartic(const GradedForm& f) {
    if (f.is_zero() || f.is_ringless())
        throw degenerate_input_error("scan of the zero quartic");
    if (f.ring().block_count() != 1 || f.ring().size(0) != 3)
        throw unsupported_ambient_error("scan expects a ternary form");
    if (!f.degree() || (*f.degree())[0] != 4)
        throw degree_error("scan expects a quartic");

    CatalecticantMatrix cm = catalecticant(f, Multidegree{2});
    const auto& mons = cm.row_basis.monomials;  // degree-2 monomials, 6 of them

    QuarticScanReport rep;
    rep.rank_Cf = static_cast<int>(cm.rank());
    rep.det_Cf = det_exact(cm.matrix);

    // Rank-one update: det(C + 24 lambda v v^T) - det(C) = 24 lambda v^T adj(C) v
    // with v_alpha = (a,b,c)^alpha, exactly and for every rank of C.
    VariableBlock dring({3, 1}, {"a", "b", "c", "lambda"});
    Matrix<Rational> adj = adjugate(cm.matrix);
    GradedForm delta = GradedForm::zero(dring, Multidegree{4, 1});
    for (std::size_t i = 0; i < mons.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j) {
            Rational c = adj.at(i, j);
            if (c == 0) continue;
            Exponents e(4, 0);
            for (std::size_t v = 0; v < 3; ++v) e[v] = mons[i][v] + mons[j][v];
            e[3] = 1;
            delta.add_term(e, c * 24);
        }
    rep.delta_poly = delta;

    VariableBlock cring({3}, {"a", "b", "c"});
    std::vector<std::vector<Rational>> kernel = kernel_basis(cm.matrix);
    for (const auto& nv : kernel) {
        GradedForm cond = GradedForm::zero(cring, Multidegree{2});
        for (std::size_t b = 0; b < mons.size(); ++b) {
            if (nv[b] == 0) continue;
            Exponents e(mons[b].begin(), mons[b].end());
            Int fac = 1;
            for (int k : e) fac *= factorial(k);
            cond.add_term(e, nv[b] * Rational(2) / Rational(fac));
        }
        rep.nullspace_conditions.push_back(cond);
    }

    std::size_t k = kernel.size();
    if (k == 0) {
        rep.annotations.push_back(
            "kernel dimension 0: invertible middle catalecticant, rank 6 "
            "(Kleppe, Thm 3.7)");
    } else if (k == 1) {
        // Gram matrix of the kernel operator as a quadric in the dual
        // variables; basis order is x^2, xy, xz, y^2, yz, z^2.
        const auto& n = kernel.front();
        Matrix<Rational> g(3, 3);
        g.at(0, 0) = n[0];
        g.at(1, 1) = n[3];
        g.at(2, 2) = n[5];
        g.at(0, 1) = g.at(1, 0) = n[1] / 2;
        g.at(0, 2) = g.at(2, 0) = n[2] / 2;
        g.at(1, 2) = g.at(2, 1) = n[4] / 2;
        if (rank(g) == 1)
            rep.annotations.push_back(
                "kernel generated by the square of a linear form: rank 7 "
                "(Kleppe, Thm 3.6)");
        else
            rep.annotations.push_back(
                "one-dimensional kernel: rank determined by the kernel conic "
                "(Kleppe, Thm 3.2)");
    } else if (k == 2) {
        rep.annotations.push_back(
            "two-dimensional kernel: rank 4 or 6 (Kleppe, Thm 3.2)");
    } else {
        rep.annotations.push_back("kernel dimension " + std::to_string(k) +
                                  ": middle catalecticant rank at most 3");
    }
    return rep;
}

}  // namespace apolar
