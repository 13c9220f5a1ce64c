#include "apolar/catalecticant.hpp"

#include <algorithm>

namespace apolar {

namespace {
// Exponent vectors of total degree d in `size` variables, descending lex.
void compositions(int d, std::size_t size, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (cur.size() + 1 == size) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur.push_back(k);
        compositions(d - k, size, cur, out);
        cur.pop_back();
    }
}
}  // namespace

MonomialBasis monomial_basis(const VariableBlock& ring, const Multidegree& degree) {
    if (degree.size() != ring.block_count())
        throw dimension_error("multidegree arity does not match ring block count");
    for (int d : degree.deg)
        if (d < 0) throw order_error("negative multidegree");
    std::vector<std::vector<Exponents>> per_block;
    for (std::size_t b = 0; b < ring.block_count(); ++b) {
        std::vector<std::vector<int>> combos;
        std::vector<int> cur;
        compositions(degree[b], ring.size(b), cur, combos);
        per_block.push_back(std::move(combos));
    }
    std::vector<Exponents> monomials;
    std::vector<std::size_t> idx(per_block.size(), 0);
    for (;;) {
        Exponents e;
        for (std::size_t b = 0; b < per_block.size(); ++b) {
            const auto& part = per_block[b][idx[b]];
            e.insert(e.end(), part.begin(), part.end());
        }
        monomials.push_back(std::move(e));
        std::size_t b = per_block.size();
        while (b-- > 0) {
            if (++idx[b] < per_block[b].size()) break;
            idx[b] = 0;
            if (b == 0) {
                // Blocks exhausted: descending lex per block with block 1
                // outermost is exactly enumeration order.
                return MonomialBasis{ring, degree, std::move(monomials)};
            }
        }
    }
}

std::size_t CatalecticantMatrix::rank() const { return apolar::rank(matrix); }

Rational CatalecticantMatrix::det() const {
    if (!matrix.is_square())
        throw shape_error("determinant of a non-square catalecticant");
    return det_exact(matrix);
}

std::vector<std::vector<Rational>> CatalecticantMatrix::operator_kernel() const {
    return kernel_basis(matrix.transpose());
}

CatalecticantMatrix catalecticant(const GradedForm& f, const Multidegree& B) {
    if (f.is_zero() || f.is_ringless())
        throw degenerate_input_error("catalecticant of the zero form");
    if (!f.degree())
        throw degree_error("catalecticant requires a multihomogeneous form");
    const Multidegree& A = *f.degree();
    if (B.size() != A.size())
        throw dimension_error("catalecticant degree arity mismatch");
    for (int d : B.deg)
        if (d < 0) throw order_error("negative catalecticant degree");
    if (!A.geq(B))
        throw order_error("catalecticant needs B <= A componentwise, got B = " +
                          B.to_string() + " for a form of multidegree " + A.to_string());

    CatalecticantMatrix cm;
    cm.source = f;
    cm.B = B;
    cm.row_basis = monomial_basis(f.ring(), B);
    cm.col_basis = monomial_basis(f.ring(), A - B);
    cm.matrix = Matrix<Rational>(cm.row_basis.monomials.size(), cm.col_basis.monomials.size());
    std::size_t nv = f.ring().total();
    for (std::size_t r = 0; r < cm.row_basis.monomials.size(); ++r)
        for (std::size_t c = 0; c < cm.col_basis.monomials.size(); ++c) {
            Exponents g(nv);
            for (std::size_t v = 0; v < nv; ++v)
                g[v] = cm.row_basis.monomials[r][v] + cm.col_basis.monomials[c][v];
            Rational coeff = f.coeff(g);
            if (coeff == 0) continue;
            Int fac = 1;
            for (std::size_t v = 0; v < nv; ++v) fac *= factorial(g[v]);
            cm.matrix.at(r, c) = coeff * Rational(fac);
        }
    return cm;
}

GradedForm apolar_apply(const GradedForm& g, const GradedForm& f) {
    if (g.is_ringless() || f.is_ringless()) return GradedForm();
    if (g.ring().total() != f.ring().total() ||
        g.ring().sizes() != f.ring().sizes())
        throw ring_mismatch_error("operator and form have incompatible rings");
    if (g.degree() && f.degree() && !f.degree()->geq(*g.degree()))
        throw order_error("operator degree exceeds form degree");
    GradedForm out(f.ring());
    for (const auto& [ge, gc] : g.terms()) {
        GradedForm d = f;
        for (std::size_t v = 0; v < ge.size() && !d.is_zero(); ++v)
            for (int k = 0; k < ge[v]; ++k) d = d.derivative(v);
        out = out + d * gc;
    }
    if (g.degree() && f.degree()) out.set_degree(*f.degree() - *g.degree());
    return out;
}

int generic_rank(const std::vector<std::size_t>& block_sizes, const Multidegree& A) {
    if (A.size() != block_sizes.size())
        throw dimension_error("multidegree arity does not match block count");
    if (block_sizes.size() == 2 && block_sizes[0] == 2 && block_sizes[1] == 2) {
        int u = A[0], v = A[1];
        if (u < 1 || v < 1) throw order_error("generic rank needs positive bidegree");
        if (u == 2 && v % 2 == 0) return v + 2;
        if (v == 2 && u % 2 == 0) return u + 2;
        return ((u + 1) * (v + 1) + 2) / 3;
    }
    if (block_sizes.size() == 2 && block_sizes[0] >= 3 && block_sizes[1] == 2) {
        int n = static_cast<int>(block_sizes[0]) - 1;
        if (A[0] == 2 && A[1] % 2 == 0 && A[1] >= 2) {
            int d = A[1] / 2;
            return (d + 1) * (n + 1);
        }
        throw unsupported_ambient_error(
            "generic rank on Pn x P1 is only provided for multidegree (2,2d)");
    }
    throw unsupported_ambient_error("generic rank: unsupported product of factors");
}

GradedForm point_power(const VariableBlock& ring, const Multidegree& B,
                       const std::vector<Rational>& coords) {
    if (coords.size() != ring.total())
        throw dimension_error("point has wrong number of coordinates");
    if (B.size() != ring.block_count())
        throw dimension_error("multidegree arity does not match ring block count");
    GradedForm out = GradedForm::constant(ring, 1);
    for (std::size_t b = 0; b < ring.block_count(); ++b) {
        std::vector<Rational> c(coords.begin() + ring.block_start(b),
                                coords.begin() + ring.block_start(b) + ring.size(b));
        GradedForm lin = GradedForm::linear(ring, b, c);
        if (lin.is_zero() && 2 * B[b] > 0)
            throw degenerate_input_error("point has a zero coordinate block");
        out = out * lin.pow(2 * B[b]);
    }
    return out;
}

}  // namespace apolar
