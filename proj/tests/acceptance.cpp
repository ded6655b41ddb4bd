// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// when any criterion fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <unistd.h>

#include "enrcurve/io.hpp"
#include "enrcurve/ladder.hpp"
#include "enrcurve/lattice.hpp"
#include "enrcurve/seeker.hpp"
#include "enrcurve/severi.hpp"
#include "oracles.hpp"

using namespace enrcurve;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kMasterSeed = 20261019;

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome genus_ladder_check() {
    const auto rows = genus_ladder(10000);
    for (const auto& r : rows) {
        if (r.k != 4 * r.m - 3) return {false, "k != 4m-3 at m = " + std::to_string(r.m)};
    }
    if (!ladder_covers_residue_class(rows)) return {false, "ladder misses a residue class member"};
    return {true, "k = 4m-3 for m = 1..10000, {k} = {k = 1 mod 4, k <= 39997}"};
}

Outcome severi_dimension_check() {
    for (std::int64_t m = 1; m <= 10000; ++m) {
        const SeveriSpec s = rational_family_spec(m);
        if (dedieu_dim(s) != 0) return {false, "dim != 0 at m = " + std::to_string(m)};
        if (dedieu_side_condition(s) != 1) return {false, "side != 1 at m = " + std::to_string(m)};
    }
    return {true, "dim 0, side condition 1 for m = 1..10000"};
}

Outcome congruence_check() {
    const CongruenceScan s = congruence_scan(3);
    const CongruenceScan reference = congruence_scan_serial(3);
    const bool ok = s == reference && s.vectors == 282475249u && s.odd_squares == 0 && s.residue_violations == 0;
    return {ok, "kernel == full Gram reference; " + std::to_string(s.vectors) + " vectors, " + std::to_string(s.odd_squares) + " odd squares, " +
                    std::to_string(s.divisible_nonnegative) + " 2-divisible with H^2 >= 0, " +
                    std::to_string(s.residue_violations) + " residue violations"};
}

Outcome phi_check() {
    for (std::int64_t m = 2; m <= 20; ++m) {
        const CertifiedPhi a = phi_certified(LatticeVector::hyperbolic(m - 1, 1), 10);
        const CertifiedPhi b = phi_certified(cy_class(m), 10);
        if (a.result.value != 1 || !a.stable) return {false, "phi((m-1)e+f) != 1 at m = " + std::to_string(m)};
        if (b.result.value != 2 || !b.stable) return {false, "phi((2m-2)e+2f) != 2 at m = " + std::to_string(m)};
    }
    return {true, "phi = 1 and 2 for m = 2..20, radius 10, stable at radius 12"};
}

Outcome lines_check(const BiForm& b) {
    const TangentLineReport report = exact_tangent_lines(b);
    if (report.discriminant.degree() != 24) return {false, "discriminant degree " + std::to_string(report.discriminant.degree())};
    int total = 0;
    for (const auto& r : report.roots) total += r.multiplicity;
    if (total != 24) return {false, "root multiplicities sum to " + std::to_string(total)};
    if (report.lines.empty()) return {false, "no simple-tangency line"};
    const SeveriSpec spec = rational_family_spec(1);
    for (const auto& line : report.lines) {
        const Certificate& c = line.certificate;
        if (!certify(c)) return {false, "line certificate fails: " + c.checks.first_failure()};
        if (!membership_verify(b, c.curve, spec, ClusterOptions{})) return {false, "line fails membership"};
        if (c.tangency.geom_genus_pullback != 0 || c.tangency.pa_pullback != 1) return {false, "line pullback genus"};
    }
    return {true, "degree 24, " + std::to_string(report.roots.size()) + " distinct roots, " + std::to_string(report.lines.size()) +
                      " tangent lines certified with alpha = [2,1], g = 0, p_a(C_X) = 1"};
}

Outcome conic_check(const BiForm& b, const SeekResult& result) {
    if (result.certificates.empty()) return {false, result.diagnostic};
    const fs::path dir = fs::temp_directory_path() / ("enrcurve_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    int index = 0;
    for (const Certificate& c : result.certificates) {
        if (c.residual_norm > 1e-10 || c.jacobian_min_sv < 1e-6) return {false, "tolerance violated"};
        if (!(c.profile == MultiplicityProfile({1, 1, 2, 2, 2}))) return {false, "profile"};
        if (c.pa_enriques != 5 || c.phi != 2 || !c.two_divisible) return {false, "Enriques data"};
        const fs::path p = dir / ("cert_" + std::to_string(index++) + ".json");
        write_json_file(p, to_json(c));
        const Certificate back = certificate_from_json(read_json_file(p));
        if (!certify(back) || !membership_verify(b, back.curve, rational_family_spec(2), ClusterOptions{})) {
            return {false, "re-certification from file fails"};
        }
    }
    fs::remove_all(dir);
    return {true, std::to_string(result.certificates.size()) + " certificate(s) from " + std::to_string(result.attempts) +
                      " seeds; re-certified from file; p_a(C_Y) = 5, phi = 2, 2-divisible"};
}

Outcome cross_oracle_check() {
    Rng rng(derive_seed(kMasterSeed, 7));
    int squares = 0;
    const GraphCurve line = line_curve(Rational(1), Rational(0));
    for (int trial = 0; trial < 100; ++trial) {
        BinaryForm f;
        std::optional<bool> built;
        if (trial % 2 == 0) {
            BinaryForm s(2);
            for (std::size_t i = 0; i <= 2; ++i) s[i] = Rational(rng.uniform_int(-6, 6));
            if (s.is_zero()) s[0] = 1;
            f = s * s * Rational(rng.uniform_int(1, 9));
            built = true;
        } else if (trial % 4 == 1) {
            const auto roots = oracle::random_roots(rng, 3, 1);
            f = oracle::form_from_roots(Rational(1), {roots[0], roots[1]}) *
                power(BinaryForm::linear(-roots[2].first, Rational(1)), 2);
            built = false;
        } else {
            f = BinaryForm(4);
            for (std::size_t i = 0; i <= 4; ++i) f[i] = Rational(rng.uniform_int(-9, 9));
            if (f[4] == 0) f[4] = 1;
        }
        // x0^4 f(y) + x1^4 y0^4 restricts to f on the line x = (1:0).
        BiForm b(4, 4);
        for (int l = 0; l <= 4; ++l) b.coeff(0, l) = f[static_cast<std::size_t>(l)];
        b.coeff(4, 0) = 1;
        const bool split = splits(b, line);
        const bool square = is_square(restrict(b, line)).has_value();
        if (split != square) return {false, "disagreement at case " + std::to_string(trial)};
        if (built && *built != split) return {false, "construction oracle disagrees at case " + std::to_string(trial)};
        squares += split ? 1 : 0;
    }
    return {true, "100 cases agree (" + std::to_string(squares) + " squares)"};
}

Outcome sigma_and_determinism_check(const BiForm& b, const SeekResult& conics) {
    std::size_t checked = 0;
    for (const Certificate& c : conics.certificates) {
        if (!certify(sigma_act(c))) return {false, "sigma image fails for seed " + std::to_string(c.seed_index)};
        ++checked;
    }
    for (const auto& line : exact_tangent_lines(b).lines) {
        if (!certify(sigma_act(line.certificate))) return {false, "sigma image of a line fails"};
        ++checked;
    }
    auto dump = [](const SeekResult& r) {
        std::string out;
        for (const auto& c : r.certificates) out += to_json(c).dump(2) + "\n";
        return out;
    };
    const SeekResult again = seek(b, 2, 500, kMasterSeed);
    const SeekResult serial = seek_serial(b, 2, 500, kMasterSeed);
    if (dump(again) != dump(conics)) return {false, "repeated run differs"};
    if (dump(serial) != dump(conics)) return {false, "serial run differs"};
    return {true, std::to_string(checked) + " sigma images re-certify; repeated and serial runs byte-identical"};
}

}  // namespace

int main() {
    const BiForm branch = random_admissible_branch(derive_seed(kMasterSeed, 0));
    SeekResult conics;
    int failures = 0;
    auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %d %-22s %8.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    };
    report(1, "genus ladder", genus_ladder_check);
    report(2, "severi dimension", severi_dimension_check);
    report(3, "congruence scan", congruence_check);
    report(4, "phi values", phi_check);
    report(5, "m=1 tangent lines", [&] { return lines_check(branch); });
    report(6, "m=2 seek", [&] {
        conics = seek(branch, 2, 500, kMasterSeed);
        return conic_check(branch, conics);
    });
    report(7, "splits cross-oracle", cross_oracle_check);
    report(8, "sigma and determinism", [&] { return sigma_and_determinism_check(branch, conics); });
    return failures == 0 ? 0 : 1;
}
