#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "enrcurve/lattice.hpp"

namespace enrcurve {

namespace {

constexpr int kE8 = 8;
using W = std::array<std::int64_t, kE8>;

// q(w) = sum_i diag[i] * (w_i + sum_{j>i} upper[i][j] w_j)^2 for the positive
// definite E8 form q(w) = -(w.w).
struct E8Cholesky {
    std::array<double, kE8> diag{};
    std::array<std::array<double, kE8>, kE8> upper{};

    E8Cholesky() {
        const IntMatrix& g = e8_negative_gram();
        std::array<std::array<double, kE8>, kE8> q{};
        for (int i = 0; i < kE8; ++i) {
            for (int j = 0; j < kE8; ++j) q[i][j] = -static_cast<double>(g[i][j]);
        }
        for (int i = 0; i < kE8; ++i) {
            for (int j = i + 1; j < kE8; ++j) {
                q[j][i] = q[i][j];
                q[i][j] /= q[i][i];
            }
            for (int k = i + 1; k < kE8; ++k) {
                for (int l = k; l < kE8; ++l) q[k][l] -= q[k][i] * q[i][l];
            }
        }
        for (int i = 0; i < kE8; ++i) {
            diag[i] = q[i][i];
            for (int j = i + 1; j < kE8; ++j) upper[i][j] = q[i][j];
        }
    }
};

const E8Cholesky& cholesky() {
    static const E8Cholesky c;
    return c;
}

std::int64_t e8_norm(const W& w) {
    const IntMatrix& g = e8_negative_gram();
    std::int64_t s = 0;
    for (int i = 0; i < kE8; ++i) {
        if (w[i] == 0) continue;
        for (int j = 0; j < kE8; ++j) s -= w[i] * g[i][j] * w[j];
    }
    return s;
}

// Calls visit(w) for every w in [-radius, radius]^8 with q(w) == target.
template <class Visit>
void enumerate_e8_norm(std::int64_t target, int radius, Visit&& visit) {
    const E8Cholesky& ch = cholesky();
    W w{};
    constexpr double eps = 1e-9;
    auto rec = [&](auto&& self, int i, double budget) -> void {
        if (i < 0) {
            if (e8_norm(w) == target) visit(w);
            return;
        }
        double center = 0.0;
        for (int j = i + 1; j < kE8; ++j) center -= ch.upper[i][j] * static_cast<double>(w[j]);
        const double half = std::sqrt(std::max(budget, 0.0) / ch.diag[i]);
        const auto lo = std::max<std::int64_t>(-radius, static_cast<std::int64_t>(std::ceil(center - half - eps)));
        const auto hi = std::min<std::int64_t>(radius, static_cast<std::int64_t>(std::floor(center + half + eps)));
        for (std::int64_t x = lo; x <= hi; ++x) {
            const double t = static_cast<double>(x) - center;
            const double rest = budget - ch.diag[i] * t * t;
            if (rest < -eps) continue;
            w[i] = x;
            self(self, i - 1, rest);
        }
        w[i] = 0;
    };
    rec(rec, kE8 - 1, static_cast<double>(target) + eps);
}

std::int64_t isqrt_ceil(std::int64_t x) {
    if (x <= 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r < x) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= x) --r;
    return r;
}

struct Candidate {
    std::int64_t a, b, lower_bound;
};

struct PhiProblem {
    std::int64_t he, hf;
    W hw{};
    std::array<std::int64_t, kE8> pairing{};  // G8 * h_w, so w.h_w = sum w_i pairing_i
    std::vector<Candidate> candidates;
};

PhiProblem setup_phi(const LatticeVector& H, int radius) {
    if (std::all_of(H.coords.begin(), H.coords.end(), [](std::int64_t c) { return c == 0; })) {
        throw std::invalid_argument("phi needs H != 0");
    }
    if (square(H) < 0) throw std::invalid_argument("phi needs H^2 >= 0");
    if (radius < 1) throw std::domain_error("search radius too small: no isotropic vector with E.(e+f) > 0");
    PhiProblem p;
    p.he = H.coords[0];
    p.hf = H.coords[1];
    for (int i = 0; i < kE8; ++i) p.hw[i] = H.coords[2 + i];
    const IntMatrix& g = e8_negative_gram();
    for (int i = 0; i < kE8; ++i) {
        for (int j = 0; j < kE8; ++j) p.pairing[i] += g[i][j] * p.hw[j];
    }
    const std::int64_t qh = e8_norm(p.hw);
    // E = a e + b f + w isotropic with a + b > 0 forces a, b >= 0.
    for (std::int64_t a = 0; a <= radius; ++a) {
        for (std::int64_t b = 0; b <= radius; ++b) {
            if (a == 0 && b == 0) continue;
            const std::int64_t lb = a * p.hf + b * p.he - isqrt_ceil(2 * a * b * qh);
            p.candidates.push_back({a, b, lb});
        }
    }
    std::stable_sort(p.candidates.begin(), p.candidates.end(),
                     [](const Candidate& x, const Candidate& y) { return x.lower_bound < y.lower_bound; });
    return p;
}

struct Best {
    std::int64_t value = std::numeric_limits<std::int64_t>::max();
    LatticeVector witness;
    bool found = false;

    void offer(std::int64_t v, const LatticeVector& e) {
        if (!found || v < value || (v == value && e > witness)) {
            value = v;
            witness = e;
            found = true;
        }
    }
};

template <class Offer>
void scan_candidate(const PhiProblem& p, const Candidate& c, int radius, Offer&& offer) {
    const std::int64_t base = c.a * p.hf + c.b * p.he;
    auto consider = [&](const W& w) {
        LatticeVector e = LatticeVector::hyperbolic(c.a, c.b);
        std::int64_t value = base;
        for (int i = 0; i < kE8; ++i) {
            e.coords[2 + i] = w[i];
            value += w[i] * p.pairing[i];
        }
        if (is_primitive(e)) offer(value, e);
    };
    if (c.a * c.b == 0) {
        consider(W{});
        return;
    }
    enumerate_e8_norm(2 * c.a * c.b, radius, consider);
}

PhiResult finish(const Best& best, int radius) {
    if (!best.found) throw std::domain_error("search radius too small: no isotropic vector with E.(e+f) > 0");
    return {best.value, best.witness, radius};
}

}  // namespace

PhiResult phi_serial(const LatticeVector& H, int radius) {
    const PhiProblem p = setup_phi(H, radius);
    Best best;
    for (const Candidate& c : p.candidates) {
        if (best.found && c.lower_bound > best.value) break;
        scan_candidate(p, c, radius, [&](std::int64_t v, const LatticeVector& e) { best.offer(v, e); });
    }
    return finish(best, radius);
}

PhiResult phi(const LatticeVector& H, int radius) {
    const PhiProblem p = setup_phi(H, radius);
    std::atomic<std::int64_t> bound{std::numeric_limits<std::int64_t>::max()};
    Best merged;
    const auto count = static_cast<std::int64_t>(p.candidates.size());
#pragma omp parallel
    {
        Best local;
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t idx = 0; idx < count; ++idx) {
            const Candidate& c = p.candidates[static_cast<std::size_t>(idx)];
            // Strict comparison keeps every tie reachable, so the witness is
            // independent of the schedule.
            if (c.lower_bound > bound.load(std::memory_order_relaxed)) continue;
            scan_candidate(p, c, radius, [&](std::int64_t v, const LatticeVector& e) {
                local.offer(v, e);
                std::int64_t cur = bound.load(std::memory_order_relaxed);
                while (v < cur && !bound.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
                }
            });
        }
#pragma omp critical(enrcurve_phi_merge)
        {
            if (local.found) merged.offer(local.value, local.witness);
        }
    }
    return finish(merged, radius);
}

namespace {

void tally(CongruenceScan& s, std::int64_t h2, bool divisible) {
    ++s.vectors;
    if (h2 % 2 != 0) {
        ++s.odd_squares;
        return;
    }
    if (h2 < 0) return;
    ++s.nonnegative;
    if (!divisible) return;
    ++s.divisible_nonnegative;
    if (genus_from_square(h2).residue != 1) ++s.residue_violations;
}

}  // namespace

CongruenceScan congruence_scan_serial(int radius) {
    if (radius < 0) throw std::invalid_argument("negative radius");
    CongruenceScan s;
    const std::int64_t side = 2 * radius + 1;
    std::int64_t total = 1;
    for (int i = 0; i < kLatticeRank; ++i) total *= side;
    LatticeVector h;
    for (std::int64_t idx = 0; idx < total; ++idx) {
        std::int64_t rest = idx;
        for (int i = 0; i < kLatticeRank; ++i) {
            h.coords[i] = rest % side - radius;
            rest /= side;
        }
        tally(s, square(h), two_divisible(h));
    }
    return s;
}

CongruenceScan congruence_scan(int radius) {
    if (radius < 0) throw std::invalid_argument("negative radius");
    const std::int64_t side = 2 * radius + 1;
    std::int64_t w_total = 1;
    for (int i = 0; i < kE8; ++i) w_total *= side;

    std::uint64_t vectors = 0, odd = 0, nonneg = 0, div_nonneg = 0, violations = 0;
#pragma omp parallel for schedule(static) reduction(+ : vectors, odd, nonneg, div_nonneg, violations)
    for (std::int64_t idx = 0; idx < w_total; ++idx) {
        W w{};
        std::int64_t rest = idx;
        bool w_even = true;
        for (int i = 0; i < kE8; ++i) {
            w[i] = rest % side - radius;
            rest /= side;
            w_even = w_even && (w[i] % 2 == 0);
        }
        // H = he e + hf f + w, so H^2 = 2 he hf + w.w.
        const std::int64_t ww = -e8_norm(w);
        CongruenceScan local;
        for (std::int64_t he = -radius; he <= radius; ++he) {
            for (std::int64_t hf = -radius; hf <= radius; ++hf) {
                tally(local, 2 * he * hf + ww, w_even && he % 2 == 0 && hf % 2 == 0);
            }
        }
        vectors += local.vectors;
        odd += local.odd_squares;
        nonneg += local.nonnegative;
        div_nonneg += local.divisible_nonnegative;
        violations += local.residue_violations;
    }
    return {vectors, odd, nonneg, div_nonneg, violations};
}

}  // namespace enrcurve
