#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apolar/error.hpp"
#include "apolar/multidegree.hpp"
#include "apolar/rational.hpp"
#include "apolar/variables.hpp"

namespace apolar {

// Canonical term order: per-block degree tuples descending, then the full
// exponent vector in descending lexicographic order.  On a multihomogeneous
// form this reduces to plain descending lex with block 1 outermost.
struct TermOrder {
    std::vector<std::size_t> block_sizes;

    bool operator()(const Exponents& a, const Exponents& b) const {
        std::size_t pos = 0;
        for (std::size_t s : block_sizes) {
            int da = 0, db = 0;
            for (std::size_t i = 0; i < s; ++i) {
                da += a[pos + i];
                db += b[pos + i];
            }
            if (da != db) return da > db;
            pos += s;
        }
        return a > b;  // descending lex tiebreak
    }
};

// Sparse polynomial with exact rational coefficients.  A declared multidegree
// marks the form multihomogeneous; multihomogeneity is checked on construction
// and preserved by ring operations.  Forms without a declared degree are plain
// polynomials (symbolic determinants and the like).
class GradedForm {
public:
    using TermMap = std::map<Exponents, Rational, TermOrder>;

    GradedForm() : terms_(TermOrder{}) {}  // ringless zero

    explicit GradedForm(VariableBlock ring)
        : ring_(std::move(ring)), terms_(TermOrder{ring_.sizes()}) {}

    // Multihomogeneous form; degree inferred from the first term unless given.
    // Mixed multidegrees raise degree_error naming two offending monomials.
    static GradedForm form(const VariableBlock& ring,
                           const std::vector<std::pair<Exponents, Rational>>& terms,
                           std::optional<Multidegree> expected = std::nullopt);

    // Ungraded polynomial; no homogeneity check.
    static GradedForm polynomial(const VariableBlock& ring,
                                 const std::vector<std::pair<Exponents, Rational>>& terms);

    static GradedForm zero(const VariableBlock& ring,
                           std::optional<Multidegree> degree = std::nullopt);
    static GradedForm constant(const VariableBlock& ring, const Rational& c);
    static GradedForm monomial(const VariableBlock& ring, const Exponents& e,
                               const Rational& c = 1);
    // Linear form sum_i coeffs[i] * (variables of one block).
    static GradedForm linear(const VariableBlock& ring, std::size_t block,
                             const std::vector<Rational>& coeffs);

    const VariableBlock& ring() const { return ring_; }
    const std::optional<Multidegree>& degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_ringless() const { return ring_.block_count() == 0; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Multidegree multidegree_of(const Exponents& e) const;
    int total_degree() const;  // max over terms; -1 for zero

    GradedForm operator-() const;
    GradedForm operator+(const GradedForm& o) const;
    GradedForm operator-(const GradedForm& o) const;
    GradedForm operator*(const GradedForm& o) const;
    GradedForm operator*(const Rational& c) const;
    friend GradedForm operator*(const Rational& c, const GradedForm& f) { return f * c; }
    bool operator==(const GradedForm& o) const;
    bool operator!=(const GradedForm& o) const { return !(*this == o); }

    GradedForm pow(unsigned n) const;
    GradedForm derivative(std::size_t var) const;
    Rational eval(const std::vector<Rational>& point) const;

    // Exact multivariate division; throws error if the division is not exact.
    GradedForm exact_divide(const GradedForm& divisor) const;

    // gcd of all coefficients (positive), 0 for the zero form.
    Rational content() const;
    // Scaled so coefficients are integers with content 1 and the leading
    // coefficient (canonical order) is positive.
    GradedForm primitive_part() const;

    std::string to_string() const;  // canonical order; round-trips through parse_form

    void add_term(const Exponents& e, const Rational& c);  // no degree re-check
    void set_degree(std::optional<Multidegree> d) { degree_ = std::move(d); }

private:
    void check_compatible(const GradedForm& o, const char* op) const;

    VariableBlock ring_;
    std::optional<Multidegree> degree_;
    TermMap terms_;
};

}  // namespace apolar
