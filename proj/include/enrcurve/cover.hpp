#pragma once

#include <cstdint>
#include <string>

#include "enrcurve/quadric.hpp"
#include "enrcurve/roots.hpp"

namespace enrcurve {

/// Tangency data of a curve C against the branch curve B, and the genus
/// bookkeeping of its pullback C_X to the double cover. The cover is never
/// constructed: at a contact point of order k, C_X has local equation
/// t^2 = x^k, an A_(k-1) point with delta invariant floor(k/2).
struct TangencyReport {
    MultiplicityProfile profile;
    DivisorClass curve_class;
    int odd_points = 0;
    std::int64_t pa_pullback = 0;
    std::int64_t delta_total = 0;
    std::int64_t geom_genus_pullback = 0;
    /// Every contact order even. Only the not-a-square proxy is checked: an
    /// irreducible pullback on a very general cover also needs the absence of
    /// smooth (-2)-curves, which is not computable here.
    bool splits = false;
};

std::int64_t delta_invariant(int k);

/// "smooth" for k = 1, otherwise "A<k-1>".
std::string ak_type(int k);

/// 2mn + 1 for the class (m, n).
std::int64_t pullback_pa(DivisorClass c);

/// C_X^2 = 2 C_Q^2, and likewise for mixed products.
std::int64_t pullback_square(DivisorClass c1, DivisorClass c2);

/// Number of even contacts r = 2m + 2n - (k-1)/2 - (k'-1)/2 - 1 forced on a
/// rational pullback with odd contacts k, k'. Needs m == 1 or n == 1.
std::int64_t required_even_count(std::int64_t m, std::int64_t n, int k, int k_prime);

/// Report from a profile already computed for a curve of the given class.
TangencyReport analyze_profile(const MultiplicityProfile& profile, DivisorClass curve_class);

/// Exact analysis through the squarefree decomposition of restrict(B, C).
TangencyReport analyze(const BiForm& b, const GraphCurve& c);
/// Float analysis through root clustering.
TangencyReport analyze(const BiForm& b, const ComplexGraphCurve& c, const ClusterOptions& options);

/// Every contact order even.
bool splits(const BiForm& b, const GraphCurve& c);

}  // namespace enrcurve
