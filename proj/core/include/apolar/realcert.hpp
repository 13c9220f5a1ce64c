#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apolar/antipolar.hpp"
#include "apolar/binary_form.hpp"
#include "apolar/signature.hpp"

namespace apolar {

// Which side of the real-rank boundary the antipolar form puts f on.
// For Omega of bidegree (2, 2d) write Omega = A(t) s1^2 + B(t) s1 s2 +
// C(t) s2^2 and let D = 4AC - B^2 (degree 4d in t):
//   OMEGA_DEFINITE       D > 0 on all of P^1 (and A > 0): Omega definite
//   OMEGA_HAS_REAL_ZERO  D < 0 somewhere: Omega vanishes on real points
//   ON_BOUNDARY          D >= 0 with a real zero, or D identically zero
enum class BoundarySide { OMEGA_DEFINITE, OMEGA_HAS_REAL_ZERO, ON_BOUNDARY };
const char* to_string(BoundarySide s);

struct BoundarySideReport {
    BoundarySide side;
    BinaryForm D;                    // 4AC - B^2 in (t1, t2)
    int distinct_real_roots_of_D;    // of D(t,1), Sturm; -1 when D == 0
    // With side == OMEGA_HAS_REAL_ZERO: a rational t with D(t) < 0.
    std::optional<std::pair<Rational, Rational>> negative_point;
    std::optional<Rational> negative_value;
};

// Requires omega built on P1 x P1 (point ring blocks (2,2), B = (1,d)).
BoundarySideReport omega_real_zero_exists(const AntipolarForm& omega);

enum class RankVerdict { PSD_RANK, REAL_RANK_EQ, REAL_RANK_GE, INCONCLUSIVE };
const char* to_string(RankVerdict v);

struct RankCertificate {
    RankVerdict verdict = RankVerdict::INCONCLUSIVE;
    int rank = 0;  // the certified value r in EQ(r) / GE(r) / PSD(r)
    SignatureReport phi_signature;
    Rational det_phi;
    std::optional<BoundarySideReport> side;  // when the Omega test ran
    // Decomposition-point witness: l' in P^1 x P^1 coordinates (s1,s2,t1,t2)
    // with phi_{f + nu(l')} verified PSD of rank 2d+1 (nu = the 2B-th power
    // of l').  Searched for, not guaranteed; interval data is always present
    // through `side` when applicable.
    std::optional<std::vector<Rational>> witness_point;
    std::optional<SignatureReport> witness_signature;
    std::vector<std::string> assumptions;
    std::string summary() const;
};

struct RankCertifyOptions {
    bool search_witness = true;
};

// Real rank certification for f of bidegree (2, 2d) on P1 x P1:
//   inertia (2d+2, 0, 0)  -> PSD_RANK(2d+2)
//   inertia (2d+1, 1, 0)  -> by the antipolar boundary test:
//       OMEGA_HAS_REAL_ZERO -> REAL_RANK_EQ(2d+2)
//       OMEGA_DEFINITE      -> REAL_RANK_GE(2d+3)
//       ON_BOUNDARY         -> INCONCLUSIVE
//   anything else         -> INCONCLUSIVE
// Singular middle catalecticant -> singular_catalecticant_error.
// EQ/GE verdicts assume f has the generic complex rank 2d+2; the assumption
// is recorded on the certificate.
RankCertificate rank_certify(const GradedForm& f, const RankCertifyOptions& opts = {});

// Deterministic splitmix64 stream, the sampling contract for
// typical_rank_sample: sample i seeds the state with seed XOR
// (i * 0x9E3779B97F4A7C15), then draws one output per coefficient and maps
// it to (output mod 19) - 9 in [-9, 9].  Coefficients fill the canonical
// descending-lex monomial order of bidegree (2, 2d).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

GradedForm sample_form(int d, std::uint64_t seed, std::int64_t index);

struct SampleStats {
    int d = 0;
    std::uint64_t seed = 0;
    std::int64_t n_samples = 0;
    std::map<std::string, std::int64_t> signature_counts;  // "(3,1,0)" -> count
    std::map<std::string, std::int64_t> verdict_counts;    // "REAL_RANK_EQ(4)" -> count
    std::map<std::string, std::int64_t> boundary_counts;   // among (2d+1,1,0) forms
};

// n_samples >= 1 (empty_statistics_error otherwise); `workers` threads split
// the index range; counts are independent of the split.
SampleStats typical_rank_sample(int d, std::int64_t n_samples, std::uint64_t seed,
                                int workers = 1);

}  // namespace apolar
