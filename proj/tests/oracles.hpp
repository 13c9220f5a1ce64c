#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is deliberately written from first principles with
// different algorithms than the code under test:
//   - determinants by explicit permutation sums,
//   - adjugates by minor enumeration,
//   - matrix inertia by symmetric congruence (Gaussian) reduction,
//   - real root counting by Descartes bisection (Vincent-Collins-Akritas),
//   - the 2x2x2 hyperdeterminant by Cayley's explicit degree-4 polynomial.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/rational.hpp"
#include "apolar/unipoly.hpp"

namespace oracle {

using apolar::Matrix;
using apolar::Rational;

// ---------------------------------------------------------------- determinant

// Signed permutation sum over all column orders.
inline Rational o_det(const Matrix<Rational>& m) {
    std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    Rational acc = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = 1;
        for (std::size_t i = 0; i < n; ++i) term *= m.at(i, perm[i]);
        acc += (inversions % 2 == 0) ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

inline Matrix<Rational> o_adjugate(const Matrix<Rational>& m) {
    std::size_t n = m.rows();
    Matrix<Rational> adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = o_det(m.minor_matrix(i, j));
            adj.at(j, i) = ((i + j) % 2 == 0) ? c : -c;
        }
    return adj;
}

// -------------------------------------------------------------------- inertia

struct Inertia {
    int n_plus = 0, n_minus = 0, n_zero = 0;
    bool operator==(const Inertia& o) const {
        return n_plus == o.n_plus && n_minus == o.n_minus && n_zero == o.n_zero;
    }
};

// Symmetric congruence reduction A -> E A E^T, counting pivot signs.
inline Inertia o_inertia(Matrix<Rational> a) {
    std::size_t n = a.rows();
    Inertia r;
    for (std::size_t k = 0; k < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t j = k + 1;
            for (; j < n; ++j)
                if (a.at(j, j) != 0) break;
            if (j < n) {  // swap rows/cols k <-> j (a congruence)
                for (std::size_t t = 0; t < n; ++t) std::swap(a.at(k, t), a.at(j, t));
                for (std::size_t t = 0; t < n; ++t) std::swap(a.at(t, k), a.at(t, j));
            } else {
                for (j = k + 1; j < n; ++j)
                    if (a.at(k, j) != 0) break;
                if (j == n) {  // active row is entirely zero
                    ++r.n_zero;
                    continue;
                }
                // row/col addition makes the diagonal entry 2 a_kj != 0
                for (std::size_t t = 0; t < n; ++t) a.at(k, t) += a.at(j, t);
                for (std::size_t t = 0; t < n; ++t) a.at(t, k) += a.at(t, j);
            }
        }
        Rational d = a.at(k, k);
        if (d > 0)
            ++r.n_plus;
        else
            ++r.n_minus;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Rational f = a.at(i, k) / d;
            for (std::size_t t = 0; t < n; ++t) a.at(i, t) -= f * a.at(k, t);
            for (std::size_t t = 0; t < n; ++t) a.at(t, i) -= f * a.at(t, k);
        }
    }
    return r;
}

// ------------------------------------------------------ real root counting

namespace detail {
using Poly = std::vector<Rational>;  // ascending coefficients

inline void normalize(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(i));
    return d;
}

inline Rational eval(const Poly& p, const Rational& x) {
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline Poly rem(Poly a, const Poly& b) {
    normalize(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        normalize(a);
    }
    return a;
}

inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    normalize(a);
    Poly q(a.size() > b.size() ? a.size() - b.size() + 1 : std::size_t{1}, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        normalize(a);
    }
    normalize(q);
    return {q, a};
}

inline Poly gcd(Poly a, Poly b) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly squarefree(Poly p) {
    normalize(p);
    if (p.size() <= 1) return p;
    Poly g = gcd(p, derivative(p));
    if (g.size() <= 1) return p;
    return divmod(p, g).first;
}

inline int sign_variations(const Poly& p) {
    int v = 0, last = 0;
    for (const auto& c : p) {
        int s = apolar::sign(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

inline Poly taylor_shift(const Poly& p, const Rational& a) {  // p(x + a)
    Poly out = p;
    // repeated synthetic division by (x - (-a)) accumulates Taylor coefficients
    for (std::size_t k = 0; k + 1 < out.size(); ++k)
        for (std::size_t i = out.size() - 1; i-- > k;) out[i] += out[i + 1] * a;
    return out;
}

inline Poly stretch(const Poly& p, const Rational& s) {  // p(s * x)
    Poly out = p;
    Rational f = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
        f *= s;
        out[i] *= f;
    }
    return out;
}

inline Poly reversed(const Poly& p) {
    Poly out(p.rbegin(), p.rend());
    normalize(out);
    return out;
}

// Exact division by (x - r) for a known rational root r.
inline Poly deflate_root(const Poly& p, const Rational& r) {
    Poly lin{-r, Rational(1)};
    return divmod(p, lin).first;
}

// Distinct roots in the open interval (0, 1); requires p squarefree with
// p(0) != 0 and p(1) != 0.
inline int vca_open01(const Poly& p) {
    // Descartes transform: positive roots of (1+x)^n p(1/(1+x)) are in
    // bijection with roots of p in (0,1).
    Poly q = taylor_shift(reversed(p), Rational(1));
    int v = sign_variations(q);
    if (v <= 1) return v;
    Rational half(1, 2);
    if (eval(p, half) == 0) {
        Poly deflated = deflate_root(p, half);
        return 1 + vca_open01(deflated);
    }
    Poly left = stretch(p, half);                  // roots in (0, 1/2)
    Poly right = taylor_shift(left, Rational(1));  // roots in (1/2, 1)
    return vca_open01(left) + vca_open01(right);
}

// Distinct roots of squarefree p in the open interval (a, b).
inline int open_interval_roots(Poly p, const Rational& a, const Rational& b) {
    normalize(p);
    if (p.size() <= 1) return 0;
    if (eval(p, a) == 0) p = deflate_root(p, a);
    if (eval(p, b) == 0) p = deflate_root(p, b);
    if (p.size() <= 1) return 0;
    Poly unit = stretch(taylor_shift(p, a), b - a);  // p(a + (b-a) x)
    return vca_open01(unit);
}

inline Rational cauchy_bound(const Poly& p) {
    Rational mx = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rational a = abs(p[i] / p.back());
        if (a > mx) mx = a;
    }
    return mx + 1;
}
}  // namespace detail

// Number of distinct real roots of p (Descartes bisection, no Sturm chains).
inline int o_distinct_real_roots(const apolar::UniPoly& p) {
    detail::Poly c(p.coeffs().begin(), p.coeffs().end());
    detail::Poly s = detail::squarefree(c);
    if (s.size() <= 1) return 0;
    int count = detail::eval(s, Rational(0)) == 0 ? 1 : 0;
    Rational m = detail::cauchy_bound(s);
    count += detail::open_interval_roots(s, Rational(0), m);
    count += detail::open_interval_roots(s, -m, Rational(0));
    return count;
}

// Number of distinct real roots in the half-open interval (a, b].
inline int o_roots_in(const apolar::UniPoly& p, const Rational& a, const Rational& b) {
    detail::Poly c(p.coeffs().begin(), p.coeffs().end());
    detail::Poly s = detail::squarefree(c);
    if (s.size() <= 1) return 0;
    int count = detail::eval(s, b) == 0 ? 1 : 0;
    return count + detail::open_interval_roots(s, a, b);
}

// ------------------------------------------------- 2x2x2 hyperdeterminant

// Cayley's explicit polynomial in the eight entries u_{ijk}; the slices are
// u_{0jk} = T1(j,k) and u_{1jk} = T2(j,k).
inline Rational o_cayley222(const Matrix<Rational>& t1, const Matrix<Rational>& t2) {
    auto u = [&](int i, int j, int k) -> const Rational& {
        return (i == 0 ? t1 : t2).at(static_cast<std::size_t>(j), static_cast<std::size_t>(k));
    };
    const Rational &u000 = u(0, 0, 0), &u001 = u(0, 0, 1), &u010 = u(0, 1, 0),
                   &u011 = u(0, 1, 1), &u100 = u(1, 0, 0), &u101 = u(1, 0, 1),
                   &u110 = u(1, 1, 0), &u111 = u(1, 1, 1);
    Rational sq = u000 * u000 * u111 * u111 + u001 * u001 * u110 * u110 +
                  u010 * u010 * u101 * u101 + u100 * u100 * u011 * u011;
    Rational cross = u000 * u001 * u110 * u111 + u000 * u010 * u101 * u111 +
                     u000 * u011 * u100 * u111 + u001 * u010 * u101 * u110 +
                     u001 * u011 * u110 * u100 + u010 * u011 * u101 * u100;
    Rational quad = u000 * u011 * u101 * u110 + u001 * u010 * u100 * u111;
    return sq - Rational(2) * cross + Rational(4) * quad;
}

// ------------------------------------------------------------ deterministic RNG

// Small deterministic generator for test data (same contract as the library
// sampler, used here only as a source of fixed pseudo-random integers).
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform in [-bound, bound]
    long long int_in(long long bound) {
        return static_cast<long long>(next() % (2 * bound + 1)) - bound;
    }
    Rational rational(long long bound, long long den_bound) {
        long long num = int_in(bound);
        long long den = 1 + static_cast<long long>(next() % den_bound);
        return Rational(num, den);
    }
};

}  // namespace oracle
