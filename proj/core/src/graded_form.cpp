#include "apolar/graded_form.hpp"

#include <algorithm>

namespace apolar {

namespace {
std::string monomial_string(const VariableBlock& ring, const Exponents& e) {
    std::string s;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.name(v);
        if (e[v] != 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
}
}  // namespace

Multidegree GradedForm::multidegree_of(const Exponents& e) const {
    Multidegree d(std::vector<int>(ring_.block_count(), 0));
    std::size_t pos = 0;
    for (std::size_t b = 0; b < ring_.block_count(); ++b)
        for (std::size_t i = 0; i < ring_.size(b); ++i) d[b] += e[pos++];
    return d;
}

int GradedForm::total_degree() const {
    int t = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        t = std::max(t, s);
    }
    return t;
}

GradedForm GradedForm::form(const VariableBlock& ring,
                            const std::vector<std::pair<Exponents, Rational>>& terms,
                            std::optional<Multidegree> expected) {
    GradedForm f(ring);
    std::optional<Multidegree> seen = expected;
    const Exponents* first = nullptr;
    for (const auto& [e, c] : terms) {
        if (e.size() != ring.total())
            throw dimension_error("exponent vector length does not match ring");
        for (int k : e)
            if (k < 0) throw order_error("negative exponent");
        if (c == 0) continue;
        Multidegree d = f.multidegree_of(e);
        if (!seen) {
            seen = d;
            first = &e;
        } else if (d != *seen) {
            std::string a = first ? monomial_string(ring, *first) : "(declared degree)";
            throw degree_error("form is not multihomogeneous: monomials " + a + " and " +
                               monomial_string(ring, e) + " have multidegrees " +
                               (first ? f.multidegree_of(*first) : *seen).to_string() + " and " +
                               d.to_string());
        }
        f.add_term(e, c);
    }
    f.degree_ = seen;  // zero form keeps the declared degree if any
    return f;
}

GradedForm GradedForm::polynomial(const VariableBlock& ring,
                                  const std::vector<std::pair<Exponents, Rational>>& terms) {
    GradedForm f(ring);
    for (const auto& [e, c] : terms) {
        if (e.size() != ring.total())
            throw dimension_error("exponent vector length does not match ring");
        for (int k : e)
            if (k < 0) throw order_error("negative exponent");
        f.add_term(e, c);
    }
    return f;
}

GradedForm GradedForm::zero(const VariableBlock& ring, std::optional<Multidegree> degree) {
    GradedForm f(ring);
    f.degree_ = std::move(degree);
    return f;
}

GradedForm GradedForm::constant(const VariableBlock& ring, const Rational& c) {
    GradedForm f(ring);
    f.degree_ = Multidegree(std::vector<int>(ring.block_count(), 0));
    if (c != 0) f.add_term(Exponents(ring.total(), 0), c);
    return f;
}

GradedForm GradedForm::monomial(const VariableBlock& ring, const Exponents& e,
                                const Rational& c) {
    return form(ring, {{e, c}});
}

GradedForm GradedForm::linear(const VariableBlock& ring, std::size_t block,
                              const std::vector<Rational>& coeffs) {
    if (block >= ring.block_count()) throw dimension_error("block index out of range");
    if (coeffs.size() != ring.size(block))
        throw dimension_error("linear form has wrong number of coefficients");
    std::vector<int> deg(ring.block_count(), 0);
    deg[block] = 1;
    GradedForm f = zero(ring, Multidegree(deg));
    std::size_t start = ring.block_start(block);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Exponents e(ring.total(), 0);
        e[start + i] = 1;
        f.add_term(e, coeffs[i]);
    }
    return f;
}

void GradedForm::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void GradedForm::check_compatible(const GradedForm& o, const char* op) const {
    if (is_ringless() || o.is_ringless()) return;  // ringless zero is universal
    if (ring_ != o.ring_)
        throw ring_mismatch_error(std::string("operands of ") + op +
                                  " live in different rings");
}

GradedForm GradedForm::operator-() const {
    GradedForm r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

GradedForm GradedForm::operator+(const GradedForm& o) const {
    check_compatible(o, "+");
    if (is_ringless()) return o;
    if (o.is_ringless()) return *this;
    GradedForm r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    // Degree bookkeeping: keep a common declared degree, drop it on mismatch.
    if (degree_ && o.degree_ && *degree_ == *o.degree_)
        r.degree_ = degree_;
    else if (is_zero() && o.degree_)
        r.degree_ = o.degree_;
    else if (o.is_zero() && degree_)
        r.degree_ = degree_;
    else
        r.degree_ = std::nullopt;
    return r;
}

GradedForm GradedForm::operator-(const GradedForm& o) const { return *this + (-o); }

GradedForm GradedForm::operator*(const GradedForm& o) const {
    check_compatible(o, "*");
    if (is_ringless() || o.is_ringless()) {
        GradedForm z = is_ringless() ? o : *this;  // other factor is a ringless zero
        return GradedForm(z.ring_.block_count() ? z.ring_ : VariableBlock());
    }
    GradedForm r(ring_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    if (degree_ && o.degree_) r.degree_ = *degree_ + *o.degree_;
    return r;
}

GradedForm GradedForm::operator*(const Rational& c) const {
    GradedForm r(ring_);
    r.degree_ = degree_;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool GradedForm::operator==(const GradedForm& o) const {
    if (is_zero() && o.is_zero()) return true;
    if (!is_ringless() && !o.is_ringless() && ring_ != o.ring_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

GradedForm GradedForm::pow(unsigned n) const {
    if (is_ringless()) {
        if (n == 0) throw degenerate_input_error("0^0 of a ringless zero form");
        return *this;
    }
    GradedForm r = constant(ring_, 1);
    GradedForm base = *this;
    while (n) {
        if (n & 1u) r = r * base;
        base = base * base;
        n >>= 1u;
    }
    return r;
}

GradedForm GradedForm::derivative(std::size_t var) const {
    if (is_ringless()) return *this;
    if (var >= ring_.total()) throw dimension_error("derivative variable out of range");
    GradedForm r(ring_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    if (degree_) {
        std::size_t b = ring_.block_of(var);
        if ((*degree_)[b] > 0) {
            Multidegree d = *degree_;
            d[b] -= 1;
            r.degree_ = d;
        }
    }
    return r;
}

Rational GradedForm::eval(const std::vector<Rational>& point) const {
    if (is_ringless()) return 0;
    if (point.size() != ring_.total())
        throw dimension_error("evaluation point has wrong number of coordinates");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < e.size(); ++v)
            for (int k = 0; k < e[v]; ++k) t *= point[v];
        total += t;
    }
    return total;
}

GradedForm GradedForm::exact_divide(const GradedForm& divisor) const {
    check_compatible(divisor, "exact_divide");
    if (divisor.is_zero()) throw degenerate_input_error("division by the zero form");
    if (is_zero()) return GradedForm(ring_.block_count() ? ring_ : divisor.ring_);
    GradedForm q(ring_);
    GradedForm r = *this;
    const auto& dl = *divisor.terms_.begin();  // leading term of divisor
    while (!r.is_zero()) {
        const auto& rl = *r.terms_.begin();
        Exponents e = rl.first;
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= dl.first[i];
            if (e[i] < 0) ok = false;
        }
        if (!ok) throw error("exact_divide: division is not exact");
        Rational c = rl.second / dl.second;
        q.add_term(e, c);
        GradedForm t(ring_);
        t.add_term(e, c);
        r = r - t * divisor;
    }
    if (degree_ && divisor.degree_ && degree_->geq(*divisor.degree_))
        q.degree_ = *degree_ - *divisor.degree_;
    return q;
}

Rational GradedForm::content() const {
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        num_gcd = gcd(num_gcd, numerator(c) < 0 ? Int(-numerator(c)) : numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    if (num_gcd == 0) return 0;
    return Rational(num_gcd, den_lcm);
}

GradedForm GradedForm::primitive_part() const {
    if (is_zero()) return *this;
    Rational c = content();
    GradedForm r = *this * (Rational(1) / c);
    if (r.terms_.begin()->second < 0) r = -r;
    return r;
}

std::string GradedForm::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (s.empty()) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string m = monomial_string(ring_, e);
        if (m == "1")
            s += apolar::to_string(a);
        else if (a == 1)
            s += m;
        else
            s += apolar::to_string(a) + "*" + m;
    }
    return s;
}

}  // namespace apolar
