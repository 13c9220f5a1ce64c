#include "apolar/realcert.hpp"

#include <algorithm>
#include <thread>

namespace apolar {

const char* to_string(BoundarySide s) {
    switch (s) {
        case BoundarySide::OMEGA_DEFINITE: return "OMEGA_DEFINITE";
        case BoundarySide::OMEGA_HAS_REAL_ZERO: return "OMEGA_HAS_REAL_ZERO";
        default: return "ON_BOUNDARY";
    }
}

const char* to_string(RankVerdict v) {
    switch (v) {
        case RankVerdict::PSD_RANK: return "PSD_RANK";
        case RankVerdict::REAL_RANK_EQ: return "REAL_RANK_EQ";
        case RankVerdict::REAL_RANK_GE: return "REAL_RANK_GE";
        default: return "INCONCLUSIVE";
    }
}

std::string RankCertificate::summary() const {
    if (verdict == RankVerdict::INCONCLUSIVE) return "INCONCLUSIVE";
    return std::string(to_string(verdict)) + "(" + std::to_string(rank) + ")";
}

BoundarySideReport omega_real_zero_exists(const AntipolarForm& omega) {
    const VariableBlock& pr = omega.point_ring;
    if (pr.block_count() != 2 || pr.size(0) != 2 || pr.size(1) != 2 ||
        omega.B.size() != 2 || omega.B[0] != 1 || omega.B[1] < 1)
        throw unsupported_ambient_error(
            "boundary test needs an antipolar form on P1 x P1 with B = (1,d)");
    int d = omega.B[1];
    int n = 2 * d;

    // Omega = A(t) s1^2 + B(t) s1 s2 + C(t) s2^2 with A, B, C of degree 2d.
    BinaryForm A(n), Bt(n), C(n);
    for (const auto& [e, c] : omega.form.terms()) {
        BinaryForm* dst = e[0] == 2 ? &A : (e[0] == 1 ? &Bt : &C);
        dst->coeff(e[3]) += c;  // coeff of t1^{2d-i} t2^i at i = e3
    }
    BinaryForm D = (A * C) * Rational(4) - Bt * Bt;  // degree 4d

    BoundarySideReport rep{BoundarySide::ON_BOUNDARY, D, -1, std::nullopt, std::nullopt};
    if (D.is_zero()) return rep;  // degenerate pencil: boundary

    UniPoly q = D.affine_in_t();
    rep.distinct_real_roots_of_D = sturm_real_root_count(q);

    if (binary_form_positive(D)) {
        rep.side = BoundarySide::OMEGA_DEFINITE;
        return rep;
    }

    // Sample one rational point in every sign region of q, plus t = [1:0].
    std::vector<Rational> samples;
    auto roots = isolate_real_roots(q);
    Rational M = cauchy_root_bound(q);
    samples.push_back(-M - 1);
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        Rational right = roots[i].exact ? roots[i].point : roots[i].hi;
        Rational left = roots[i + 1].exact ? roots[i + 1].point : roots[i + 1].lo;
        samples.push_back((right + left) / 2);
    }
    samples.push_back(M + 1);
    samples.push_back(0);
    samples.push_back(1);
    samples.push_back(-1);

    for (const Rational& t : samples) {
        Rational v = q.eval(t);
        if (v < 0) {
            rep.side = BoundarySide::OMEGA_HAS_REAL_ZERO;
            rep.negative_point = std::make_pair(t, Rational(1));
            rep.negative_value = v;
            return rep;
        }
    }
    Rational at_inf = D.coeff(0);  // D(1, 0)
    if (at_inf < 0) {
        rep.side = BoundarySide::OMEGA_HAS_REAL_ZERO;
        rep.negative_point = std::make_pair(Rational(1), Rational(0));
        rep.negative_value = at_inf;
        return rep;
    }
    // No negative sample: D >= 0 everywhere here, and it is not positive
    // definite, so it has a real zero (a finite root or t = [1:0]).
    rep.side = BoundarySide::ON_BOUNDARY;
    return rep;
}

namespace {
const char* kGenericityAssumption =
    "complex rank of f equals the generic value for bidegree (2,2d)";

// Search a rational point l' with Omega(l') = -det(phi); then
// phi_{f + nu(l')} drops rank by exactly one and stays PSD-compatible.
void search_witness(const GradedForm& f, const Multidegree& B,
                    const AntipolarForm& omega, const BoundarySideReport& side,
                    RankCertificate& cert) {
    if (!side.negative_point) return;
    Rational t1 = side.negative_point->first, t2 = side.negative_point->second;
    Rational target = -cert.det_phi;
    if (target <= 0) return;
    static const int kPairs[][2] = {
        {1, 0},  {0, 1},  {1, 1},  {1, -1}, {2, 1},  {1, 2},  {2, -1}, {1, -2},
        {3, 1},  {1, 3},  {3, -1}, {1, -3}, {3, 2},  {2, 3},  {3, -2}, {2, -3},
        {4, 1},  {1, 4},  {4, -1}, {1, -4}, {5, 1},  {1, 5},  {5, -1}, {1, -5},
        {4, 3},  {3, 4},  {4, -3}, {3, -4}, {5, 2},  {2, 5},  {5, -2}, {2, -5},
        {6, 1},  {1, 6},  {6, -1}, {1, -6}, {5, 3},  {3, 5},  {5, -3}, {3, -5}};
    for (const auto& p : kPairs) {
        Rational s1 = p[0], s2 = p[1];
        Rational val = omega.form.eval({s1, s2, t1, t2});
        if (val <= 0) continue;
        auto mu = rational_sqrt(target / val);
        if (!mu) continue;
        std::vector<Rational> lprime{*mu * s1, *mu * s2, t1, t2};
        GradedForm fprime = f + point_power(f.ring(), B, lprime);
        CatalecticantMatrix phi2 = catalecticant(fprime, B);
        if (det_exact(phi2.matrix) != 0) continue;  // exact re-verification
        SignatureReport sig2 = signature(phi2.matrix);
        if (sig2.n_minus != 0 || sig2.n_zero != 1) continue;
        cert.witness_point = lprime;
        cert.witness_signature = sig2;
        return;
    }
}
}  // namespace

RankCertificate rank_certify(const GradedForm& f, const RankCertifyOptions& opts) {
    if (f.is_zero() || f.is_ringless())
        throw degenerate_input_error("rank certification of the zero form");
    const VariableBlock& r = f.ring();
    if (r.block_count() != 2 || r.size(0) != 2 || r.size(1) != 2)
        throw unsupported_ambient_error("rank certification works on P1 x P1");
    if (!f.degree() || (*f.degree())[0] != 2 || (*f.degree())[1] % 2 != 0 ||
        (*f.degree())[1] < 2)
        throw degree_error("rank certification needs bidegree (2, 2d), d >= 1");
    int d = (*f.degree())[1] / 2;
    Multidegree B{1, d};

    CatalecticantMatrix phi = catalecticant(f, B);
    RankCertificate cert;
    cert.det_phi = det_exact(phi.matrix);
    if (cert.det_phi == 0)
        throw singular_catalecticant_error(
            "middle catalecticant is singular; the certificate does not apply");
    cert.phi_signature = signature(phi.matrix);
    int size = 2 * d + 2;

    if (cert.phi_signature.n_plus == size) {
        cert.verdict = RankVerdict::PSD_RANK;
        cert.rank = size;
        return cert;
    }
    if (cert.phi_signature.n_plus == size - 1 && cert.phi_signature.n_minus == 1) {
        AntipolarForm omega = antipolar(f, B);
        cert.side = omega_real_zero_exists(omega);
        switch (cert.side->side) {
            case BoundarySide::OMEGA_HAS_REAL_ZERO:
                cert.verdict = RankVerdict::REAL_RANK_EQ;
                cert.rank = size;
                cert.assumptions.push_back(kGenericityAssumption);
                if (opts.search_witness) search_witness(f, B, omega, *cert.side, cert);
                break;
            case BoundarySide::OMEGA_DEFINITE:
                cert.verdict = RankVerdict::REAL_RANK_GE;
                cert.rank = size + 1;
                cert.assumptions.push_back(kGenericityAssumption);
                break;
            default:
                cert.verdict = RankVerdict::INCONCLUSIVE;
                break;
        }
        return cert;
    }
    cert.verdict = RankVerdict::INCONCLUSIVE;
    return cert;
}

GradedForm sample_form(int d, std::uint64_t seed, std::int64_t index) {
    if (d < 1) throw degree_error("sampling needs d >= 1");
    VariableBlock ring = VariableBlock::p1xp1();
    MonomialBasis basis = monomial_basis(ring, Multidegree{2, 2 * d});
    SplitMix64 rng(seed ^ (static_cast<std::uint64_t>(index) * 0x9E3779B97F4A7C15ull));
    std::vector<std::pair<Exponents, Rational>> terms;
    for (const auto& e : basis.monomials) {
        std::int64_t c = static_cast<std::int64_t>(rng.next() % 19u) - 9;
        if (c != 0) terms.emplace_back(e, Rational(c));
    }
    GradedForm f = GradedForm::form(ring, terms, Multidegree{2, 2 * d});
    return f;
}

SampleStats typical_rank_sample(int d, std::int64_t n_samples, std::uint64_t seed,
                                int workers) {
    if (d < 1) throw degree_error("sampling needs d >= 1");
    if (n_samples < 1)
        throw empty_statistics_error("sampling needs at least one sample");
    if (workers < 1) workers = 1;
    workers = static_cast<int>(
        std::min<std::int64_t>(workers, n_samples));

    auto run_range = [&](std::int64_t lo, std::int64_t hi, SampleStats& st) {
        for (std::int64_t i = lo; i < hi; ++i) {
            GradedForm f = sample_form(d, seed, i);
            if (f.is_zero()) {
                ++st.verdict_counts["SINGULAR"];
                continue;
            }
            try {
                RankCertifyOptions o;
                o.search_witness = false;
                RankCertificate c = rank_certify(f, o);
                ++st.signature_counts[c.phi_signature.to_string()];
                ++st.verdict_counts[c.summary()];
                if (c.side) ++st.boundary_counts[to_string(c.side->side)];
            } catch (const singular_catalecticant_error&) {
                ++st.verdict_counts["SINGULAR"];
            }
        }
    };

    std::vector<SampleStats> parts(workers);
    if (workers == 1) {
        run_range(0, n_samples, parts[0]);
    } else {
        std::vector<std::thread> threads;
        std::int64_t chunk = (n_samples + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            std::int64_t lo = w * chunk, hi = std::min<std::int64_t>(n_samples, lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back(run_range, lo, hi, std::ref(parts[w]));
        }
        for (auto& t : threads) t.join();
    }

    SampleStats total;
    total.d = d;
    total.seed = seed;
    total.n_samples = n_samples;
    for (const auto& p : parts) {
        for (const auto& [k, v] : p.signature_counts) total.signature_counts[k] += v;
        for (const auto& [k, v] : p.verdict_counts) total.verdict_counts[k] += v;
        for (const auto& [k, v] : p.boundary_counts) total.boundary_counts[k] += v;
    }
    return total;
}

}  // namespace apolar
