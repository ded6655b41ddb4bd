#include "enrcurve/cover.hpp"

#include <stdexcept>

namespace enrcurve {

std::int64_t delta_invariant(int k) {
    if (k < 1) throw std::invalid_argument("contact order must be positive");
    return k / 2;
}

std::string ak_type(int k) {
    if (k < 1) throw std::invalid_argument("contact order must be positive");
    if (k == 1) return "smooth";
    return "A" + std::to_string(k - 1);
}

std::int64_t pullback_pa(DivisorClass c) { return 2 * c.a * c.b + 1; }

std::int64_t pullback_square(DivisorClass c1, DivisorClass c2) { return 2 * intersect(c1, c2); }

std::int64_t required_even_count(std::int64_t m, std::int64_t n, int k, int k_prime) {
    if (m != 1 && n != 1) throw std::invalid_argument("required_even_count needs m == 1 or n == 1");
    if (k < 1 || k_prime < 1 || k % 2 == 0 || k_prime % 2 == 0) {
        throw std::invalid_argument("odd contact orders k, k' expected");
    }
    return 2 * m + 2 * n - (k - 1) / 2 - (k_prime - 1) / 2 - 1;
}

TangencyReport analyze_profile(const MultiplicityProfile& profile, DivisorClass curve_class) {
    TangencyReport r;
    r.profile = profile;
    r.curve_class = curve_class;
    r.odd_points = profile.odd_count();
    r.pa_pullback = pullback_pa(curve_class);
    for (int k : profile.entries()) r.delta_total += delta_invariant(k);
    r.geom_genus_pullback = r.pa_pullback - r.delta_total;
    r.splits = r.odd_points == 0;
    return r;
}

TangencyReport analyze(const BiForm& b, const GraphCurve& c) {
    const BinaryForm restricted = restrict(b, c);
    TangencyReport r = analyze_profile(multiplicity_profile(restricted), c.divisor_class());
    // The square test is an independent route to the same answer.
    if (r.splits != is_square(restricted).has_value()) {
        throw std::logic_error("profile parity and square test disagree");
    }
    return r;
}

TangencyReport analyze(const BiForm& b, const ComplexGraphCurve& c, const ClusterOptions& options) {
    const ComplexForm restricted = restrict(b, c);
    if (restricted.is_zero()) throw std::domain_error("restriction vanishes identically");
    return analyze_profile(multiplicity_profile(restricted, options), c.divisor_class());
}

bool splits(const BiForm& b, const GraphCurve& c) { return multiplicity_profile(restrict(b, c)).all_even(); }

}  // namespace enrcurve
