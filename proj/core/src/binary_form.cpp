#include "apolar/binary_form.hpp"

#include <algorithm>

namespace apolar {

BinaryForm BinaryForm::homogenize(const UniPoly& p, int formal_degree) {
    if (p.degree() > formal_degree)
        throw degree_error("polynomial degree exceeds requested formal degree");
    BinaryForm f(formal_degree);
    for (int j = 0; j <= p.degree(); ++j) f.c_[formal_degree - j] = p.coeff(j);
    return f;
}

Rational BinaryForm::eval(const Rational& x, const Rational& y) const {
    Rational total = 0;
    for (int i = 0; i <= d_; ++i) {
        Rational t = c_[i];
        for (int k = 0; k < d_ - i; ++k) t *= x;
        for (int k = 0; k < i; ++k) t *= y;
        total += t;
    }
    return total;
}

UniPoly BinaryForm::affine_in_t() const {
    std::vector<Rational> a(d_ + 1);
    for (int i = 0; i <= d_; ++i) a[d_ - i] = c_[i];
    return UniPoly(std::move(a));
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
    if (d_ != o.d_) throw degree_error("binary form degree mismatch in +");
    BinaryForm r(d_);
    for (int i = 0; i <= d_; ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

BinaryForm BinaryForm::operator-() const {
    BinaryForm r(d_);
    for (int i = 0; i <= d_; ++i) r.c_[i] = -c_[i];
    return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + (-o); }

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
    BinaryForm r(d_ + o.d_);
    for (int i = 0; i <= d_; ++i)
        for (int j = 0; j <= o.d_; ++j) r.c_[i + j] += c_[i] * o.c_[j];
    return r;
}

BinaryForm BinaryForm::operator*(const Rational& k) const {
    BinaryForm r(d_);
    for (int i = 0; i <= d_; ++i) r.c_[i] = c_[i] * k;
    return r;
}

BinaryForm BinaryForm::reversed() const {
    BinaryForm r(d_);
    for (int i = 0; i <= d_; ++i) r.c_[i] = c_[d_ - i];
    return r;
}

BinaryForm BinaryForm::shear_y(const Rational& c) const {
    // y -> c*x + y; expand y^i binomially.
    BinaryForm r(d_);
    for (int i = 0; i <= d_; ++i) {
        if (c_[i] == 0) continue;
        Rational binom = 1, cp = 1;
        // term c_i x^{d-i} (cx + y)^i contributes to y^j for j <= i.
        for (int j = i; j >= 0; --j) {
            r.c_[j] += c_[i] * binom * cp;
            if (j > 0) {
                binom = binom * Rational(j) / Rational(i - j + 1);
                cp *= c;
            }
        }
    }
    return r;
}

Rational discriminant(const BinaryForm& f) {
    if (f.is_zero()) throw degenerate_input_error("discriminant of the zero form");
    int d = f.formal_degree();
    if (d < 2) return 1;
    BinaryForm g = f;
    if (g.coeff(0) == 0) g = g.reversed();  // disc invariant: weight d(d-1) is even
    if (g.coeff(0) == 0) {
        // Both pure powers of x and y are absent; shear until F(1,c) != 0.
        for (int k = 1;; ++k) {
            for (Rational c : {Rational(k), Rational(-k)}) {
                if (f.eval(1, c) != 0) {
                    g = f.shear_y(c);  // unimodular, so disc unchanged
                    goto found;
                }
            }
            if (k > d + 1)
                throw degenerate_input_error("could not regularize binary form");
        }
    found:;
    }
    UniPoly p = g.affine_in_t();
    UniPoly dp = p.derivative();
    Rational res = resultant_formal(p, d, dp, d - 1);
    Rational disc = res / g.coeff(0);
    return (d * (d - 1) / 2) % 2 == 0 ? disc : -disc;
}

bool binary_form_positive(const BinaryForm& f) {
    if (f.is_zero()) throw degenerate_input_error("positivity of the zero form");
    if (f.formal_degree() % 2 != 0)
        throw degree_error("positivity test requires even degree");
    int d = f.formal_degree();
    if (f.coeff(0) <= 0 || f.coeff(d) <= 0) return false;  // F(1,0), F(0,1)
    if (f.eval(1, 1) <= 0) return false;
    if (d == 0) return true;
    return sturm_real_root_count(f.affine_in_t()) == 0;
}

}  // namespace apolar
