#pragma once

#include <cstddef>
#include <vector>

#include "apolar/error.hpp"
#include "apolar/rational.hpp"

namespace apolar {

class UniPoly;

// Dense row-major matrix over an exact coefficient type.
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), e_(r * c) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& at(std::size_t i, std::size_t j) {
        if (i >= rows_ || j >= cols_) throw dimension_error("matrix index out of range");
        return e_[i * cols_ + j];
    }
    const T& at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw dimension_error("matrix index out of range");
        return e_[i * cols_ + j];
    }
    T& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const T& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o, "+");
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
        return m;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o, "-");
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
        return m;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw dimension_error("matrix product shape mismatch");
        Matrix m(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k)
                for (std::size_t j = 0; j < o.cols_; ++j)
                    m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
        return m;
    }
    Matrix scaled(const T& c) const {
        Matrix m(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * c;
        return m;
    }
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    Matrix minor_matrix(std::size_t row, std::size_t col) const {
        Matrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

private:
    void require_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_error(std::string("matrix shape mismatch in ") + op);
    }
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

// Laplace expansion; reference path and small-size dispatch target.
template <class T>
T det_cofactor(const Matrix<T>& m) {
    if (!m.is_square()) throw shape_error("determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) throw dimension_error("cofactor determinant of an empty matrix");
    if (n == 1) return m.at(0, 0);
    T acc = m.at(0, 0) * det_cofactor(m.minor_matrix(0, 0));
    for (std::size_t j = 1; j < n; ++j) {
        T term = m.at(0, j) * det_cofactor(m.minor_matrix(0, j));
        if (j % 2 == 0)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

class GradedForm;

// Exact determinant of a rational matrix (fraction-free Bareiss after
// clearing row denominators).
Rational det_exact(const Matrix<Rational>& m);

// Determinant over the polynomial ring: Laplace below 5x5, fraction-free
// Bareiss with exact polynomial division from 5x5 up.
GradedForm det_symbolic(const Matrix<GradedForm>& m);
GradedForm det_bareiss_form(const Matrix<GradedForm>& m);

// Classical adjugate: adj(M) * M = det(M) * I.  1x1 -> [[1]].
Matrix<Rational> adjugate(const Matrix<Rational>& m);
Matrix<GradedForm> adjugate(const Matrix<GradedForm>& m);

std::size_t rank(const Matrix<Rational>& m);

// Basis of the right kernel; each vector has integer entries with content 1
// and positive first nonzero entry.
std::vector<std::vector<Rational>> kernel_basis(const Matrix<Rational>& m);

// Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.
UniPoly charpoly(const Matrix<Rational>& m);

Rational trace(const Matrix<Rational>& m);

// Unique solution of Ax = b for invertible A.
std::vector<Rational> solve(const Matrix<Rational>& a, const std::vector<Rational>& b);

}  // namespace apolar
