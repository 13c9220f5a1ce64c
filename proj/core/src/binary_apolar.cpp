#include "apolar/binary_apolar.hpp"

namespace apolar {

Matrix<Rational> binary_catalecticant(const BinaryForm& f, int k) {
    int d = f.formal_degree();
    if (k < 0 || k > d) throw order_error("binary catalecticant degree out of range");
    Matrix<Rational> m(k + 1, d - k + 1);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= d - k; ++j)
            m.at(i, j) =
                f.coeff(i + j) * Rational(factorial(d - i - j) * factorial(i + j));
    return m;
}

namespace {
struct MinimalKernel {
    int d1;
    std::vector<std::vector<Rational>> basis;  // operator coefficient vectors
};

MinimalKernel minimal_apolar_degree(const BinaryForm& f) {
    int d = f.formal_degree();
    for (int k = 1; k <= d; ++k) {
        auto ker = kernel_basis(binary_catalecticant(f, k).transpose());
        if (!ker.empty()) return {k, std::move(ker)};
    }
    // Every operator of degree d+1 annihilates f.
    std::vector<std::vector<Rational>> all;
    for (int i = 0; i <= d + 1; ++i) {
        std::vector<Rational> e(d + 2, Rational(0));
        e[i] = 1;
        all.push_back(std::move(e));
    }
    return {d + 1, std::move(all)};
}

BinaryForm to_form(int degree, const std::vector<Rational>& coeffs) {
    return BinaryForm(degree, coeffs);
}

// Coefficient vectors of g * x^{m-j} y^j, j = 0..m, inside T_{deg g + m}.
Matrix<Rational> multiples_matrix(const BinaryForm& g, int m) {
    int dg = g.formal_degree();
    Matrix<Rational> w(dg + m + 1, m + 1);
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= dg; ++i) w.at(i + j, j) = g.coeff(i);
    return w;
}

bool in_column_span(const Matrix<Rational>& w, const std::vector<Rational>& v) {
    Matrix<Rational> ext(w.rows(), w.cols() + 1);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        for (std::size_t j = 0; j < w.cols(); ++j) ext.at(i, j) = w.at(i, j);
        ext.at(i, w.cols()) = v[i];
    }
    return rank(ext) == rank(w);
}
}  // namespace

std::pair<BinaryForm, BinaryForm> binary_apolar_generators(const BinaryForm& f) {
    if (f.is_zero()) throw degenerate_input_error("apolar ideal of the zero form");
    int d = f.formal_degree();
    if (d < 1) throw degree_error("apolar generators need degree >= 1");
    MinimalKernel mk = minimal_apolar_degree(f);
    int d1 = mk.d1, d2 = d + 2 - d1;
    BinaryForm g1 = to_form(d1, mk.basis.front());

    std::vector<std::vector<Rational>> candidates;
    if (d2 <= d) {
        candidates = kernel_basis(binary_catalecticant(f, d2).transpose());
    } else {
        for (int i = 0; i <= d2; ++i) {
            std::vector<Rational> e(d2 + 1, Rational(0));
            e[i] = 1;
            candidates.push_back(std::move(e));
        }
    }
    Matrix<Rational> w = multiples_matrix(g1, d2 - d1);
    for (const auto& v : candidates)
        if (!in_column_span(w, v)) return {g1, to_form(d2, v)};
    throw error("apolar ideal is not a complete intersection");  // unreachable
}

int binary_rank_complex(const BinaryForm& f) {
    if (f.is_zero()) throw degenerate_input_error("rank of the zero form");
    int d = f.formal_degree();
    if (d < 1) throw degree_error("rank needs degree >= 1");
    MinimalKernel mk = minimal_apolar_degree(f);
    BinaryForm g1 = to_form(mk.d1, mk.basis.front());
    bool squarefree = mk.d1 < 2 || discriminant(g1) != 0;
    return squarefree ? mk.d1 : d + 2 - mk.d1;
}

bool tangential_membership_binary(const BinaryForm& f) {
    if (f.is_zero()) throw degenerate_input_error("tangential membership of the zero form");
    int d = f.formal_degree();
    if (d < 2) throw degree_error("tangential membership needs degree >= 2");
    MinimalKernel mk = minimal_apolar_degree(f);
    BinaryForm g1 = to_form(mk.d1, mk.basis.front());
    bool squarefree = mk.d1 < 2 || discriminant(g1) != 0;
    int rank = squarefree ? mk.d1 : d + 2 - mk.d1;
    bool is_power = (mk.d1 == 1);  // annihilated by a single first-order operator
    return rank == d && !is_power;
}

bool rs_witness_binary(const BinaryForm& f, const Rational& p, const Rational& q) {
    if (f.is_zero()) throw degenerate_input_error("witness for the zero form");
    if (p == 0 && q == 0) throw degenerate_input_error("witness point must be nonzero");
    int d = f.formal_degree();
    if (d < 2) throw degree_error("witness slice needs degree >= 2");
    // Dual linear operator of [p:q]: L = q dx - p dy kills every power of
    // p x + q y.
    BinaryForm L(1, {q, -p});
    BinaryForm L2 = L * L;
    Matrix<Rational> w = multiples_matrix(L2, d - 2);  // basis of L^2 T_{d-2}
    // The degree-d slice of the apolar ideal is the kernel of one functional:
    // u |-> sum_m u_m coeff_f(m) (d-m)! m!.
    std::vector<Rational> phi(d + 1);
    for (int m = 0; m <= d; ++m)
        phi[m] = f.coeff(m) * Rational(factorial(d - m) * factorial(m));
    Matrix<Rational> a(1, w.cols());
    for (std::size_t j = 0; j < w.cols(); ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < w.rows(); ++i) s += phi[i] * w.at(i, j);
        a.at(0, j) = s;
    }
    return !kernel_basis(a).empty();
}

}  // namespace apolar
