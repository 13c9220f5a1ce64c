#include "apolar/unipoly.hpp"

#include <algorithm>

#include "apolar/matrix.hpp"

namespace apolar {

void UniPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_desc(std::vector<Rational> coeffs) {
    std::reverse(coeffs.begin(), coeffs.end());
    return UniPoly(std::move(coeffs));
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& k) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= k;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(i);
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw degenerate_input_error("division by the zero polynomial");
    std::vector<Rational> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<Rational> q(degree() - dd + 1, Rational(0));
    for (int k = degree() - dd; k >= 0; --k) {
        Rational f = r[k + dd] / d.c_[dd];
        q[k] = f;
        if (f == 0) continue;
        for (int i = 0; i <= dd; ++i) r[k + i] -= f * d.c_[i];
    }
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / lead());
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Rational a = c_[i];
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (i == 0)
            s += apolar::to_string(a);
        else {
            if (a != 1) s += apolar::to_string(a) + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f.rem(g);
        f = g;
        g = r;
    }
    return f.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() < 1) return p.monic();
    UniPoly g = gcd(p, p.derivative());
    return p.divmod(g).first.monic();
}

namespace {
// Sign variation count of a sequence, zeros skipped.
int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = chain[chain.size() - 2].rem(chain.back());
        chain.push_back(-r);
    }
    chain.pop_back();
    return chain;
}

int variations_at(const std::vector<UniPoly>& chain, const Rational& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(p.sign_at(x));
    return variations(s);
}

int variations_at_inf(const std::vector<UniPoly>& chain, int dir) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) {
        int ls = sign(p.lead());
        if (dir < 0 && p.degree() % 2 == 1) ls = -ls;
        s.push_back(p.is_zero() ? 0 : ls);
    }
    return variations(s);
}
}  // namespace

int sturm_real_root_count(const UniPoly& p) {
    if (p.is_zero()) throw degenerate_input_error("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    UniPoly q = squarefree_part(p);
    if (q.degree() == 0) return 0;
    auto chain = sturm_chain(q);
    return variations_at_inf(chain, -1) - variations_at_inf(chain, +1);
}

int sturm_real_root_count(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw degenerate_input_error("root count of the zero polynomial");
    if (!(a < b)) throw order_error("interval endpoints must satisfy a < b");
    if (p.degree() == 0) return 0;
    UniPoly q = squarefree_part(p);
    if (q.degree() == 0) return 0;
    auto chain = sturm_chain(q);
    return variations_at(chain, a) - variations_at(chain, b);
}

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.degree() < 1) return 1;
    Rational m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = p.coeff(i) / p.lead();
        if (a < 0) a = -a;
        m = std::max(m, a);
    }
    return m + 1;
}

std::vector<RootIsolation> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw degenerate_input_error("root isolation of the zero polynomial");
    UniPoly q = squarefree_part(p);
    if (q.degree() < 1) return {};
    auto chain = sturm_chain(q);
    Rational M = cauchy_root_bound(q);
    std::vector<RootIsolation> out;
    // Invariant: (lo, hi] carries `count` distinct roots and q(lo), q(hi) != 0
    // unless hi is itself a root (handled by splitting at exact roots).
    struct Seg {
        Rational lo, hi;
        int count;
    };
    std::vector<Seg> stack;
    int total = variations_at(chain, -M) - variations_at(chain, M);
    if (total > 0) stack.push_back({-M, M, total});
    std::vector<Seg> done;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        Rational mid = (s.lo + s.hi) / 2;
        if (q.eval(mid) == 0) {
            out.push_back({true, mid, 0, 0});
            // Exclude the exact root by an interval around it free of others.
            Rational eps = (s.hi - s.lo) / 4;
            while (sturm_real_root_count(q, mid - eps, mid + eps) +
                       (q.eval(mid - eps) == 0 ? 1 : 0) >
                   1)
                eps /= 2;
            while (q.eval(mid - eps) == 0 || q.eval(mid + eps) == 0) eps /= 2;
            int left = variations_at(chain, s.lo) - variations_at(chain, mid - eps);
            int right = variations_at(chain, mid + eps) - variations_at(chain, s.hi);
            if (left > 0) stack.push_back({s.lo, mid - eps, left});
            if (right > 0) stack.push_back({mid + eps, s.hi, right});
            continue;
        }
        int left = variations_at(chain, s.lo) - variations_at(chain, mid);
        int right = s.count - left;
        if (s.count == 1 && (left == 0 || right == 0)) {
            // Narrow wide single-root intervals no further; record as is when
            // the half already isolates.
            if (left == 1)
                done.push_back({s.lo, mid, 1});
            else
                done.push_back({mid, s.hi, 1});
            continue;
        }
        if (left > 0) stack.push_back({s.lo, mid, left});
        if (right > 0) stack.push_back({mid, s.hi, right});
    }
    for (const auto& s : done) out.push_back({false, 0, s.lo, s.hi});
    std::sort(out.begin(), out.end(), [](const RootIsolation& a, const RootIsolation& b) {
        Rational ka = a.exact ? a.point : a.lo;
        Rational kb = b.exact ? b.point : b.lo;
        return ka < kb;
    });
    return out;
}

Rational resultant_formal(const UniPoly& p, int m, const UniPoly& q, int n) {
    if (m < 0 || n < 0) throw degree_error("formal degrees must be nonnegative");
    if (p.degree() > m || q.degree() > n)
        throw degree_error("true degree exceeds formal degree in resultant");
    if (m == 0 && n == 0) return 1;
    std::size_t size = static_cast<std::size_t>(m + n);
    Matrix<Rational> S(size, size);
    // n rows of p shifted, then m rows of q shifted; row r of the p block has
    // p's coefficient of x^{m-k} in column r+k.
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) S.at(r, r + k) = p.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) S.at(n + r, r + k) = q.coeff(n - k);
    return det_exact(S);
}

}  // namespace apolar
