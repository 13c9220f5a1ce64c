#pragma once

#include <string>
#include <utility>
#include <vector>

#include "apolar/error.hpp"
#include "apolar/rational.hpp"

namespace apolar {

// Dense univariate polynomial, coefficient of x^i at index i.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static UniPoly from_desc(std::vector<Rational> coeffs);  // highest degree first
    static UniPoly constant(const Rational& c) { return UniPoly({c}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational lead() const { return is_zero() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;  // Horner
    int sign_at(const Rational& x) const { return sign(eval(x)); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& k) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly derivative() const;
    // Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly rem(const UniPoly& d) const { return divmod(d).second; }
    UniPoly monic() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, or zero if both zero
UniPoly squarefree_part(const UniPoly& p);        // p / gcd(p, p'), monic

// Number of distinct real roots (Sturm on the squarefree part).
// Zero polynomial -> degenerate_input_error; constants -> 0.
int sturm_real_root_count(const UniPoly& p);
// Distinct real roots in the half-open interval (a, b], a < b required.
int sturm_real_root_count(const UniPoly& p, const Rational& a, const Rational& b);

// All real roots strictly inside (-cauchy_root_bound, +cauchy_root_bound).
Rational cauchy_root_bound(const UniPoly& p);

// One entry per distinct real root, left to right.  Either an exact rational
// root, or an open interval (lo, hi) with p(lo), p(hi) nonzero containing
// exactly one root.
struct RootIsolation {
    bool exact;
    Rational point;     // the root when exact
    Rational lo, hi;    // bracketing interval otherwise
};
std::vector<RootIsolation> isolate_real_roots(const UniPoly& p);

// Sylvester resultant at formal degrees (m, n); the formal degree may exceed
// the true degree (rows padded with the given leading zeros).
Rational resultant_formal(const UniPoly& p, int m, const UniPoly& q, int n);

}  // namespace apolar
