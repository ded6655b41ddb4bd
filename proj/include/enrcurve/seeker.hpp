#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enrcurve/cover.hpp"
#include "enrcurve/quadric.hpp"
#include "enrcurve/roots.hpp"

namespace enrcurve {

inline constexpr const char* kToolVersion = "enrcurve 0.1.0";

/// restrict(B, C) = c * q * s^2 for C = {x0 A + x1 Bc = 0} of class (1, n),
/// q of degree 2 and s of degree 2n + 1. Unknown vector layout:
/// [A_0..A_n, Bc_0..Bc_n, q_0..q_2, s_0..s_(2n+1), c].
struct TangencySystem {
    BiForm branch;
    std::size_t n = 0;
    /// B / max|coefficient|, the form the residual is measured against.
    double branch_scale = 1.0;

    std::size_t unknown_count() const { return 4 * n + 8; }
    std::size_t equation_count() const { return 4 * n + 5; }
    std::size_t curve_size() const { return 2 * n + 2; }
    std::size_t q_offset() const { return curve_size(); }
    std::size_t s_offset() const { return q_offset() + 3; }
    std::size_t c_offset() const { return s_offset() + 2 * n + 2; }
};

/// Throws std::invalid_argument unless B is an admissible branch curve.
TangencySystem build_system(const BiForm& b, std::size_t n);

/// Coefficient j of the curve vector, of q and of s pinned to 1.
struct Gauge {
    std::size_t curve = 0;
    std::size_t q = 0;
    std::size_t s = 0;

    friend bool operator==(const Gauge&, const Gauge&) = default;
};

struct Tolerances {
    double residual = 1e-10;
    double jacobian = 1e-6;
    double cluster = 1e-6;
};

struct SolverOptions {
    int max_iterations = 200;
    double converge = 1e-12;
    bool sigma_symmetric_starts = false;
    Tolerances tolerances;
};

struct CertificateChecks {
    bool residual = false;
    bool jacobian = false;
    bool profile = false;
    bool irreducible = false;
    bool q_squarefree = false;
    bool q_coprime_s = false;
    bool not_square = false;
    bool consistent = false;  // stored numbers match a recomputation

    bool all() const {
        return residual && jacobian && profile && irreducible && q_squarefree && q_coprime_s && not_square && consistent;
    }
    /// Name of the first failing check, empty when all pass.
    std::string first_failure() const;
};

struct Certificate {
    std::int64_t m = 1;
    BiForm branch;
    ComplexGraphCurve curve;
    std::optional<GraphCurve> exact_curve;  // rational lines only
    ComplexForm q;
    ComplexForm s;
    Complex c;
    Gauge gauge;
    double residual_norm = 0.0;
    double jacobian_min_sv = 0.0;
    MultiplicityProfile profile;
    std::uint64_t rng_seed = 0;
    std::int64_t seed_index = -1;  // -1 on the discriminant path
    int iterations = 0;
    CertificateChecks checks;
    Tolerances tolerances;
    TangencyReport tangency;
    // Enriques side: C_Y of class (2m-2)e + 2f.
    std::int64_t pa_enriques = 0;
    std::int64_t phi = 0;
    bool two_divisible = false;

    std::size_t n() const { return static_cast<std::size_t>(m - 1); }
};

/// Residual vector of restrict(B/scale, C) - c q s^2, low y1-power first.
std::vector<Complex> residual(const TangencySystem& sys, const std::vector<Complex>& x);
/// Smallest singular value of the Jacobian with the gauge columns removed.
double jacobian_min_sv(const TangencySystem& sys, const std::vector<Complex>& x, const Gauge& gauge);

std::vector<Complex> pack(const TangencySystem& sys, const ComplexGraphCurve& curve, const ComplexForm& q,
                          const ComplexForm& s, Complex c);

struct NewtonTrace {
    std::vector<double> residual_norms;
    bool converged = false;
};

/// Damped Newton from a seeded random start. Empty on divergence or when a
/// check fails. The trace, when given, records the residual norm per iterate.
std::optional<Certificate> newton_solve(const TangencySystem& sys, std::uint64_t seed, const SolverOptions& options = {},
                                        NewtonTrace* trace = nullptr);

/// Newton polish from a given start with the given gauge; used by the line
/// path, which seeds it with a discriminant root.
std::optional<Certificate> polish(const TangencySystem& sys, std::vector<Complex> x, const Gauge& gauge,
                                  const SolverOptions& options, NewtonTrace* trace = nullptr);

/// Re-derives every check from the certificate data alone.
CertificateChecks recheck(const Certificate& cert, const Tolerances& tol);
bool certify(const Certificate& cert, const Tolerances& tol);
inline bool certify(const Certificate& cert) { return certify(cert, cert.tolerances); }

/// sigma image: sigma(C), q(y0,-y1), s(y0,-y1), re-gauged. Requires a
/// sigma-invariant branch curve.
Certificate sigma_act(const Certificate& cert);

/// Projective distance sqrt(1 - |<u,v>|^2 / (|u|^2 |v|^2)) between the
/// (A, Bc) coefficient vectors.
double curve_distance(const ComplexGraphCurve& a, const ComplexGraphCurve& b);

struct TangentLine {
    ProjectivePoint alpha;                     // x = (alpha0 : alpha1)
    std::optional<std::array<Rational, 2>> exact_alpha;
    Certificate certificate;
};

struct TangentLineReport {
    BinaryForm discriminant;          // degree 24 in (alpha0 : alpha1)
    std::vector<RootCluster> roots;   // with multiplicities, summing to 24
    std::vector<TangentLine> lines;   // simple tangency, profile {1,1,2}
};

/// disc_y B(alpha0, alpha1; y) by interpolation at alpha = (1 : t), t = 0..24.
BinaryForm pencil_discriminant(const BiForm& b);

/// m = 1: the lines x = alpha tangent to B. Throws std::domain_error when the
/// discriminant vanishes identically.
TangentLineReport exact_tangent_lines(const BiForm& b, const SolverOptions& options = {});

struct SeekResult {
    std::vector<Certificate> certificates;
    std::size_t attempts = 0;
    std::size_t converged = 0;
    std::size_t duplicates = 0;
    std::size_t sigma_partners = 0;
    std::string diagnostic;
};

/// m = 1 takes the discriminant path; m >= 2 runs newton_solve over seeds
/// derive_seed(master, i), i < seed_count, in parallel. Results are merged in
/// seed order, deduplicated and reduced modulo sigma.
SeekResult seek(const BiForm& b, std::int64_t m, std::size_t seed_count, std::uint64_t master_seed,
                const SolverOptions& options = {});
/// Same stream on one thread.
SeekResult seek_serial(const BiForm& b, std::int64_t m, std::size_t seed_count, std::uint64_t master_seed,
                       const SolverOptions& options = {});

}  // namespace enrcurve
