// Independent reference computations shared by the test suites. Nothing here
// calls the resultant, squarefree or clustering code under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "enrcurve/forms.hpp"
#include "enrcurve/quadric.hpp"
#include "enrcurve/rng.hpp"

namespace oracle {

using enrcurve::BinaryForm;
using enrcurve::Rational;

// c * prod (y1 - t y0)^mult: affine roots t with the given multiplicities.
inline BinaryForm form_from_roots(const Rational& c, const std::vector<std::pair<Rational, int>>& roots) {
    BinaryForm f = BinaryForm::constant(c);
    for (const auto& [t, mult] : roots) {
        for (int k = 0; k < mult; ++k) f = f * BinaryForm::linear(-t, Rational(1));
    }
    return f;
}

// c^(2d-2) prod_{i<j} (t_i - t_j)^2 with roots listed with repetition.
inline Rational root_product_discriminant(const Rational& c, const std::vector<Rational>& roots) {
    const auto d = static_cast<long>(roots.size());
    Rational out = 1;
    for (long e = 0; e < 2 * d - 2; ++e) out *= c;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) out *= (roots[i] - roots[j]) * (roots[i] - roots[j]);
    }
    return out;
}

// Profile {multiplicities} read off directly from the construction data.
inline std::vector<int> expected_profile(const std::vector<std::pair<Rational, int>>& roots, int extra_at_infinity = 0) {
    std::vector<int> out;
    for (const auto& r : roots) out.push_back(r.second);
    if (extra_at_infinity > 0) out.push_back(extra_at_infinity);
    std::sort(out.begin(), out.end());
    return out;
}

// Distinct small rationals with multiplicity in [1, max_mult].
inline std::vector<std::pair<Rational, int>> random_roots(enrcurve::Rng& rng, int count, int max_mult, long height = 9,
                                                          long max_den = 4) {
    std::vector<std::pair<Rational, int>> out;
    std::vector<Rational> pool;
    for (long q = 1; q <= max_den; ++q) {
        for (long p = -height; p <= height; ++p) {
            Rational r(p, q);
            r.canonicalize();
            if (std::find(pool.begin(), pool.end(), r) == pool.end()) pool.push_back(r);
        }
    }
    if (count > static_cast<int>(pool.size())) throw std::invalid_argument("not enough distinct rationals at this height");
    while (static_cast<int>(out.size()) < count) {
        const Rational t(rng.uniform_int(-height, height), rng.uniform_int(1, max_den));
        Rational canon = t;
        canon.canonicalize();
        if (std::any_of(out.begin(), out.end(), [&](const auto& p) { return p.first == canon; })) continue;
        out.emplace_back(canon, static_cast<int>(rng.uniform_int(1, max_mult)));
    }
    return out;
}

// Admissible branch curve whose restriction to the line x = (1:1) is the
// given quartic: adjust the sigma-invariant coefficients b(0, l), l even, and
// b(1, l), l odd, of a random member. Tries successive seeds until the result
// is admissible.
inline enrcurve::BiForm branch_with_line_restriction(std::uint64_t seed, const BinaryForm& quartic) {
    if (quartic.degree() != 4) throw std::invalid_argument("quartic expected");
    for (std::uint64_t k = 0; k < 64; ++k) {
        enrcurve::BiForm b = enrcurve::random_admissible_branch(seed + k);
        for (int l = 0; l <= 4; ++l) {
            const int j0 = l % 2;
            Rational others = 0;
            for (int j = 0; j <= 4; ++j) {
                if (j != j0) others += b.coeff(j, l);
            }
            b.coeff(j0, l) = quartic[static_cast<std::size_t>(l)] - others;
        }
        if (enrcurve::check_branch_admissible(b).admissible()) return b;
    }
    throw std::runtime_error("no admissible branch curve found");
}

}  // namespace oracle
