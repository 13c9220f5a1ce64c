#include "apolar/hyperdet.hpp"

namespace apolar {

Pencil::Pencil(Matrix<Rational> t1, Matrix<Rational> t2, bool sym)
    : n(static_cast<int>(t1.rows())), T1(std::move(t1)), T2(std::move(t2)), symmetric(sym) {
    if (!T1.is_square() || !T2.is_square() || T1.rows() != T2.rows())
        throw shape_error("pencil slices must be square of equal size");
    if (n < 1) throw dimension_error("pencil slices must be nonempty");
    if (symmetric && (!T1.is_symmetric() || !T2.is_symmetric()))
        throw symmetry_error("pencil declared symmetric but a slice is not");
}

BinaryForm pencil_form(const Pencil& p) {
    int n = p.n;
    // q(k) = det(k T1 + T2) = pencil form at (k, 1); interpolate exactly from
    // n+1 values.
    Matrix<Rational> vand(n + 1, n + 1);
    std::vector<Rational> vals(n + 1);
    for (int k = 0; k <= n; ++k) {
        Matrix<Rational> m = p.T1.scaled(Rational(k)) + p.T2;
        vals[k] = det_exact(m);
        Rational pw = 1;
        for (int j = 0; j <= n; ++j) {
            vand.at(k, j) = pw;
            pw *= Rational(k);
        }
    }
    std::vector<Rational> qc = solve(vand, vals);  // q_j = coeff of k^j
    BinaryForm f(n);
    for (int j = 0; j <= n; ++j) f.coeff(n - j) = qc[j];  // a1^j a2^{n-j}
    return f;
}

Hyperdet2nn hyperdet_2nn(const Pencil& p) {
    BinaryForm f = pencil_form(p);
    if (f.is_zero()) return {Rational(0), true};
    return {discriminant(f), false};
}

const char* to_string(BergqvistVerdict v) {
    switch (v) {
        case BergqvistVerdict::RANK_N: return "RANK_N";
        case BergqvistVerdict::RANK_N_PLUS_1: return "RANK_N_PLUS_1";
        default: return "BOUNDARY";
    }
}

BergqvistVerdict bergqvist_real_rank(const Pencil& p) {
    BinaryForm f = pencil_form(p);
    if (f.is_zero()) return BergqvistVerdict::BOUNDARY;
    if (discriminant(f) == 0) return BergqvistVerdict::BOUNDARY;
    // Squarefree pencil: count projective real roots.
    int roots = sturm_real_root_count(f.affine_in_t());
    if (f.coeff(0) == 0) ++roots;  // simple root at infinity
    return roots == p.n ? BergqvistVerdict::RANK_N : BergqvistVerdict::RANK_N_PLUS_1;
}

Pencil tangential_join_sample(const std::vector<Rational>& lambda) {
    if (lambda.empty())
        throw dimension_error("tangential sample needs at least one eigenvalue");
    int n = static_cast<int>(lambda.size()) + 1;
    Matrix<Rational> t1 = Matrix<Rational>::identity(n);
    Matrix<Rational> t2(n, n);
    t2.at(0, 0) = lambda[0];
    t2.at(0, 1) = 1;
    t2.at(1, 1) = lambda[0];
    for (int i = 2; i < n; ++i) t2.at(i, i) = lambda[static_cast<std::size_t>(i) - 1];
    return Pencil(std::move(t1), std::move(t2), false);
}

Pencil symmetric_tangential_sample(const std::vector<Rational>& lambda) {
    if (lambda.empty())
        throw dimension_error("tangential sample needs at least one eigenvalue");
    int n = static_cast<int>(lambda.size()) + 1;
    Matrix<Rational> t1(n, n), t2(n, n);
    t1.at(0, 0) = 1;
    t1.at(1, 1) = -1;
    for (int i = 2; i < n; ++i) t1.at(i, i) = 1;
    t2.at(0, 0) = lambda[0];
    t2.at(1, 1) = -lambda[0];
    for (int i = 2; i < n; ++i) t2.at(i, i) = lambda[static_cast<std::size_t>(i) - 1];
    return Pencil(std::move(t1), std::move(t2), true);
}

Rational hyperdet_222(const Pencil& p) {
    if (p.n != 2) throw shape_error("Cayley hyperdeterminant needs 2x2 slices");
    BinaryForm f = pencil_form(p);
    if (f.is_zero()) return 0;
    return discriminant(f);
}

Hyperdet2222 hyperdet_2222(const Tensor2222& z) {
    // u_{ijk}(w) = z_{ijk0} + z_{ijk1} w.
    auto u = [&](int i, int j, int k) {
        return UniPoly({z.at(i, j, k, 0), z.at(i, j, k, 1)});
    };
    UniPoly alpha = u(0, 0, 0) * u(0, 1, 1) - u(0, 0, 1) * u(0, 1, 0);
    UniPoly gamma = u(1, 0, 0) * u(1, 1, 1) - u(1, 0, 1) * u(1, 1, 0);
    UniPoly sum = (u(0, 0, 0) + u(1, 0, 0)) * (u(0, 1, 1) + u(1, 1, 1)) -
                  (u(0, 0, 1) + u(1, 0, 1)) * (u(0, 1, 0) + u(1, 1, 0));
    UniPoly beta = sum - alpha - gamma;
    UniPoly p = beta * beta - alpha * gamma * UniPoly::constant(4);
    if (p.is_zero()) return {p, Rational(0), true};
    return {p, discriminant(BinaryForm::homogenize(p, 4)), false};
}

}  // namespace apolar
