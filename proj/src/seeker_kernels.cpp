#include <stdexcept>
#include <string>

#include <omp.h>

#include "enrcurve/rng.hpp"
#include "enrcurve/seeker.hpp"

namespace enrcurve {

namespace {

constexpr double kDedupThreshold = 1e-6;

std::optional<Certificate> attempt(const TangencySystem& sys, std::uint64_t master, std::size_t index,
                                   const SolverOptions& options) {
    try {
        std::optional<Certificate> cert = newton_solve(sys, derive_seed(master, index), options);
        if (cert) cert->seed_index = static_cast<std::int64_t>(index);
        return cert;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// Single reducer: candidates arrive in seed order, so the kept set does not
// depend on scheduling.
void reduce(std::vector<Certificate> candidates, SeekResult& out) {
    for (Certificate& cert : candidates) {
        bool duplicate = false;
        for (const Certificate& kept : out.certificates) {
            if (curve_distance(kept.curve, cert.curve) < kDedupThreshold) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) {
            ++out.duplicates;
            continue;
        }
        const ComplexGraphCurve image = sigma_act(cert.curve);
        bool partner = false;
        for (const Certificate& kept : out.certificates) {
            if (curve_distance(kept.curve, image) < kDedupThreshold) {
                partner = true;
                break;
            }
        }
        if (partner) {
            ++out.sigma_partners;
            continue;
        }
        out.certificates.push_back(std::move(cert));
    }
    if (out.certificates.empty()) {
        out.diagnostic = "no certificate after " + std::to_string(out.attempts) + " attempts (" +
                         std::to_string(out.converged) + " converged and passed checks)";
    }
}

SeekResult run_lines(const BiForm& b, const SolverOptions& options) {
    SeekResult out;
    TangentLineReport report = exact_tangent_lines(b, options);
    out.attempts = report.roots.size();
    std::vector<Certificate> candidates;
    for (TangentLine& line : report.lines) candidates.push_back(std::move(line.certificate));
    out.converged = candidates.size();
    reduce(std::move(candidates), out);
    return out;
}

void check_request(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
}

}  // namespace

SeekResult seek(const BiForm& b, std::int64_t m, std::size_t seed_count, std::uint64_t master_seed,
                const SolverOptions& options) {
    check_request(m);
    if (m == 1) return run_lines(b, options);
    const TangencySystem sys = build_system(b, static_cast<std::size_t>(m - 1));
    std::vector<std::optional<Certificate>> slots(seed_count);
    const auto count = static_cast<std::int64_t>(seed_count);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
        slots[static_cast<std::size_t>(i)] = attempt(sys, master_seed, static_cast<std::size_t>(i), options);
    }
    SeekResult out;
    out.attempts = seed_count;
    std::vector<Certificate> candidates;
    for (auto& slot : slots) {
        if (slot) candidates.push_back(std::move(*slot));
    }
    out.converged = candidates.size();
    reduce(std::move(candidates), out);
    return out;
}

SeekResult seek_serial(const BiForm& b, std::int64_t m, std::size_t seed_count, std::uint64_t master_seed,
                       const SolverOptions& options) {
    check_request(m);
    if (m == 1) return run_lines(b, options);
    const TangencySystem sys = build_system(b, static_cast<std::size_t>(m - 1));
    SeekResult out;
    out.attempts = seed_count;
    std::vector<Certificate> candidates;
    for (std::size_t i = 0; i < seed_count; ++i) {
        if (auto cert = attempt(sys, master_seed, i, options)) candidates.push_back(std::move(*cert));
    }
    out.converged = candidates.size();
    reduce(std::move(candidates), out);
    return out;
}

}  // namespace enrcurve
