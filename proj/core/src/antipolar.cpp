#include "apolar/antipolar.hpp"

namespace apolar {

namespace {
VariableBlock dual_point_ring(const VariableBlock& ring, const Multidegree& B) {
    if (ring.block_count() == 1) {
        std::size_t n = ring.size(0);
        static const char* letters[] = {"a", "b", "c", "d"};
        std::vector<std::string> names;
        if (n <= 4)
            for (std::size_t i = 0; i < n; ++i) names.push_back(letters[i]);
        else
            for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i + 1));
        return VariableBlock({n}, std::move(names));
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ring.size(0); ++i) names.push_back("s" + std::to_string(i + 1));
    names.push_back("t1");
    names.push_back("t2");
    return VariableBlock({ring.size(0), 2}, std::move(names));
}

void check_ambient(const VariableBlock& ring, const Multidegree& B) {
    if (ring.block_count() == 1) {
        if (B.size() != 1 || B[0] < 1)
            throw order_error("classical antipolar needs B = (b) with b >= 1");
        return;
    }
    if (ring.block_count() == 2 && ring.size(1) == 2 && B.size() == 2 && B[0] == 1 &&
        B[1] >= 1)
        return;
    throw unsupported_ambient_error(
        "antipolar supports a single factor or Pn x P1 with B = (1,d)");
}
}  // namespace

AntipolarForm antipolar(const GradedForm& f, const Multidegree& B) {
    if (f.is_zero() || f.is_ringless())
        throw degenerate_input_error("antipolar of the zero form");
    check_ambient(f.ring(), B);
    if (!f.degree() || *f.degree() != B.scaled(2))
        throw shape_error("antipolar needs a form of multidegree exactly 2B");

    CatalecticantMatrix phi = catalecticant(f, B);
    Rational det = det_exact(phi.matrix);
    if (det == 0)
        throw singular_catalecticant_error("middle catalecticant is singular");
    Matrix<Rational> adj = adjugate(phi.matrix);

    VariableBlock pring = dual_point_ring(f.ring(), B);
    Rational scale = 1;
    for (std::size_t i = 0; i < B.size(); ++i) scale *= Rational(factorial(2 * B[i]));

    const auto& mons = phi.row_basis.monomials;  // row and column bases agree
    GradedForm omega = GradedForm::zero(pring, B.scaled(2));
    for (std::size_t a = 0; a < mons.size(); ++a)
        for (std::size_t b = 0; b < mons.size(); ++b) {
            Rational c = adj.at(b, a);
            if (c == 0) continue;
            Exponents e(pring.total());
            for (std::size_t v = 0; v < pring.total(); ++v)
                e[v] = mons[a][v] + mons[b][v];
            omega.add_term(e, c * scale);
        }

    AntipolarForm out;
    out.form = omega;
    out.source = f;
    out.B = B;
    out.det_phi = det;
    out.point_ring = pring;
    return out;
}

Rational antipolar_eval(const AntipolarForm& omega, const std::vector<Rational>& point) {
    if (point.size() != omega.point_ring.total())
        throw dimension_error("antipolar evaluation point has wrong length");
    return omega.form.eval(point);
}

bool rs_membership(const GradedForm& f, const Multidegree& B,
                   const std::vector<Rational>& point) {
    AntipolarForm omega = antipolar(f, B);
    return antipolar_eval(omega, point) == 0;
}

ForbiddenStatus forbidden_certificate(const GradedForm& f, const Multidegree& B,
                                      const std::vector<Rational>& point) {
    return rs_membership(f, B, point) ? ForbiddenStatus::FORBIDDEN_CANDIDATE
                                      : ForbiddenStatus::NOT_DECIDED;
}

const char* to_string(ForbiddenStatus s) {
    return s == ForbiddenStatus::FORBIDDEN_CANDIDATE ? "FORBIDDEN_CANDIDATE" : "NOT_DECIDED";
}

}  // namespace apolar
