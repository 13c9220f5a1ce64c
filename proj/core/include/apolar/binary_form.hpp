#pragma once

#include <vector>

#include "apolar/error.hpp"
#include "apolar/rational.hpp"
#include "apolar/unipoly.hpp"

namespace apolar {

// Homogeneous binary form of a fixed formal degree d; coefficient of
// x^{d-i} y^i at index i.  The formal degree is part of the type: a form may
// have vanishing top coefficients (roots at infinity in the dehomogenization).
class BinaryForm {
public:
    BinaryForm() : d_(0), c_(1, Rational(0)) {}
    explicit BinaryForm(int formal_degree)
        : d_(formal_degree), c_(formal_degree + 1, Rational(0)) {
        if (formal_degree < 0) throw degree_error("negative formal degree");
    }
    BinaryForm(int formal_degree, std::vector<Rational> coeffs)
        : d_(formal_degree), c_(std::move(coeffs)) {
        if (formal_degree < 0) throw degree_error("negative formal degree");
        if (c_.size() != static_cast<std::size_t>(d_) + 1)
            throw dimension_error("binary form needs d+1 coefficients");
    }

    // Homogenization of p to formal degree d: x^d p(y/x) ... i.e. the form
    // with F(t,1) = p(t) and formal degree d >= deg p.
    static BinaryForm homogenize(const UniPoly& p, int formal_degree);

    int formal_degree() const { return d_; }
    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }
    // Coefficient of x^{d-i} y^i.
    Rational coeff(std::size_t i) const { return c_.at(i); }
    Rational& coeff(std::size_t i) { return c_.at(i); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x, const Rational& y) const;
    UniPoly affine_in_t() const;  // p(t) = F(t, 1), coeff of t^j is c_{d-j}

    BinaryForm operator+(const BinaryForm& o) const;
    BinaryForm operator-(const BinaryForm& o) const;
    BinaryForm operator-() const;
    BinaryForm operator*(const BinaryForm& o) const;  // degrees add
    BinaryForm operator*(const Rational& k) const;
    bool operator==(const BinaryForm& o) const { return d_ == o.d_ && c_ == o.c_; }

    BinaryForm reversed() const;           // F(y, x)
    BinaryForm shear_y(const Rational& c) const;  // F(x, c*x + y)

private:
    int d_;
    std::vector<Rational> c_;
};

// Discriminant normalized so that disc(a x^2 + b xy + c y^2) = b^2 - 4ac:
// (-1)^{d(d-1)/2} Res(p, p') / lc with the resultant at formal degrees
// (d, d-1).  Invariant under unimodular coordinate changes; a vanishing lead
// coefficient is handled by swapping or shearing coordinates first.
// Degree below 2 -> 1; the zero form -> degenerate_input_error.
Rational discriminant(const BinaryForm& f);

// Exact positivity of an even-degree real binary form on the projective line:
// positive leading coefficients in both charts, no real roots of F(t,1)
// (Sturm), positive sample value.  Odd degree -> degree_error; zero form ->
// degenerate_input_error.
bool binary_form_positive(const BinaryForm& f);

}  // namespace apolar
