#include "apolar/matrix.hpp"

#include <algorithm>

#include "apolar/graded_form.hpp"
#include "apolar/unipoly.hpp"

namespace apolar {

Rational det_exact(const Matrix<Rational>& m) {
    if (!m.is_square()) throw shape_error("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return 1;
    // Clear denominators row by row, then integer Bareiss.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, denominator(m.at(i, j)));
        scale /= Rational(l);
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = m.at(i, j) * Rational(l);
            a[i][j] = numerator(v);
        }
    }
    Int prev = 1;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = t / prev;  // exact by the Bareiss identity
            }
        prev = a[k][k];
    }
    return Rational(sgn) * scale * Rational(a[n - 1][n - 1]);
}

GradedForm det_bareiss_form(const Matrix<GradedForm>& m) {
    if (!m.is_square()) throw shape_error("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return GradedForm();
    std::vector<std::vector<GradedForm>> a(n, std::vector<GradedForm>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    GradedForm prev;  // ringless 1 sentinel handled below
    bool have_prev = false;
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            // No pivot: the first k+1 columns are dependent, so det = 0.
            if (p == n) return GradedForm();
            std::swap(a[k], a[p]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                GradedForm t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = have_prev ? t.exact_divide(prev) : t;
            }
        prev = a[k][k];
        have_prev = true;
    }
    GradedForm d = a[n - 1][n - 1];
    return sgn > 0 ? d : -d;
}

GradedForm det_symbolic(const Matrix<GradedForm>& m) {
    if (!m.is_square()) throw shape_error("determinant of a non-square matrix");
    if (m.rows() < 5) return det_cofactor(m);
    return det_bareiss_form(m);
}

Matrix<Rational> adjugate(const Matrix<Rational>& m) {
    if (!m.is_square()) throw shape_error("adjugate of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return m;
    Matrix<Rational> adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = det_exact(m.minor_matrix(i, j));
            adj.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

Matrix<GradedForm> adjugate(const Matrix<GradedForm>& m) {
    if (!m.is_square()) throw shape_error("adjugate of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return m;
    Matrix<GradedForm> adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = GradedForm::constant(m.at(0, 0).ring(), 1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            GradedForm c = det_symbolic(m.minor_matrix(i, j));
            adj.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

namespace {
// Row echelon reduction; returns pivot columns.  The matrix is mutated.
std::vector<std::size_t> rref(Matrix<Rational>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}
}  // namespace

std::size_t rank(const Matrix<Rational>& m) {
    Matrix<Rational> w = m;
    return rref(w).size();
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix<Rational>& m) {
    Matrix<Rational> w = m;
    std::vector<std::size_t> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w.at(r, free);
        // Normalize: integer entries, content 1, first nonzero entry positive.
        Int l = 1;
        for (const auto& x : v) l = lcm(l, denominator(x));
        Int g = 0;
        for (auto& x : v) {
            x *= Rational(l);
            Int nx = numerator(x);
            g = gcd(g, nx < 0 ? Int(-nx) : nx);
        }
        if (g > 1)
            for (auto& x : v) x /= Rational(g);
        for (const auto& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

UniPoly charpoly(const Matrix<Rational>& m) {
    if (!m.is_square()) throw shape_error("characteristic polynomial of a non-square matrix");
    std::size_t n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Matrix<Rational> mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational ak = -trace(mk) / Rational(k);
        c[n - k] = ak;
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ak;
        mk = m * mk;
    }
    return UniPoly(std::move(c));
}

Rational trace(const Matrix<Rational>& m) {
    if (!m.is_square()) throw shape_error("trace of a non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

std::vector<Rational> solve(const Matrix<Rational>& a, const std::vector<Rational>& b) {
    if (!a.is_square() || b.size() != a.rows())
        throw dimension_error("solve: shape mismatch");
    std::size_t n = a.rows();
    Matrix<Rational> aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() == n)
        throw degenerate_input_error("solve: singular coefficient matrix");
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug.at(i, n);
    return x;
}

}  // namespace apolar
