#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "enrcurve/quadric.hpp"

namespace enrcurve {

inline constexpr int kLatticeRank = 10;

/// Coordinates in the basis (e, f, v1..v8) of U + E8(-1): e^2 = f^2 = 0,
/// e.f = 1, and v_i the simple roots of E8 negated (v_i^2 = -2). Node order
/// follows Bourbaki: chain v1-v3-v4-v5-v6-v7-v8 with v2 attached to v4.
struct LatticeVector {
    std::array<std::int64_t, kLatticeRank> coords{};

    static LatticeVector e() { return unit(0); }
    static LatticeVector f() { return unit(1); }
    static LatticeVector v(int i) { return unit(1 + i); }  // i in 1..8
    static LatticeVector unit(int index);
    /// a e + b f
    static LatticeVector hyperbolic(std::int64_t a, std::int64_t b);

    friend LatticeVector operator+(LatticeVector x, const LatticeVector& y) {
        for (int i = 0; i < kLatticeRank; ++i) x.coords[i] += y.coords[i];
        return x;
    }
    friend LatticeVector operator*(std::int64_t s, LatticeVector x) {
        for (auto& c : x.coords) c *= s;
        return x;
    }
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Gram matrix of U + E8(-1) in the basis above.
const IntMatrix& enriques_gram();
/// Gram matrix of E8(-1) alone (8 x 8).
const IntMatrix& e8_negative_gram();

std::int64_t inner(const LatticeVector& u, const LatticeVector& v);
inline std::int64_t square(const LatticeVector& u) { return inner(u, u); }
bool is_primitive(const LatticeVector& u);

/// Reference class for effectivity: E counts as positive when E.(e + f) > 0.
inline LatticeVector positivity_reference() { return LatticeVector::hyperbolic(1, 1); }

struct PhiResult {
    std::int64_t value = 0;
    LatticeVector witness;
    int radius = 0;
};

/// min E.H over primitive isotropic E with E.(e+f) > 0 and all coordinates
/// in [-radius, radius]. Ties keep the lexicographically largest witness.
/// Requires H != 0 and H^2 >= 0. OpenMP over (a, b) slabs of E = a e + b f + w.
PhiResult phi(const LatticeVector& H, int radius);
/// Single-threaded reference of the same enumeration.
PhiResult phi_serial(const LatticeVector& H, int radius);

struct CertifiedPhi {
    PhiResult result;
    bool stable = false;  // same value at radius + 2
};
CertifiedPhi phi_certified(const LatticeVector& H, int radius = 10);

bool two_divisible(const LatticeVector& H);

struct GenusCongruence {
    std::int64_t pa;
    int residue;  // pa mod 4 in 0..3
};
/// pa = H^2/2 + 1. Requires H^2 >= 0; a 2-divisible H must land on residue 1
/// (std::logic_error otherwise).
GenusCongruence genus_and_congruence(const LatticeVector& H);
GenusCongruence genus_from_square(std::int64_t h_squared);

/// (2m - 2) e + 2 f: C_Y.e = 2 and C_Y^2 = 8m - 8.
LatticeVector cy_class(std::int64_t m);

struct CyReport {
    LatticeVector cls;
    std::int64_t pa;
    std::int64_t phi;
    LatticeVector phi_witness;
    bool phi_stable;
    bool two_divisible;
};
CyReport cy_report(std::int64_t m, int radius = 10);

enum class LatticeLabel { enriques, hs, very_general_cover };

struct LatticeSpec {
    IntMatrix gram;
    LatticeLabel label = LatticeLabel::enriques;
    std::int64_t m = 0;  // hs only

    std::string name() const;
};

LatticeSpec enriques_spec();
/// U + E8(-2) + <-4(m+1)>
LatticeSpec hs_gram(std::int64_t m);
/// U(2) + E8(-2)
LatticeSpec very_general_cover_spec();

std::string determinant_string(const IntMatrix& gram);
struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Signature signature(const IntMatrix& gram);

/// Intersection identities behind pi(s1) ~ O_Q(m-1, 1).
struct SpecialClassReport {
    std::int64_t b_dot_e2;          // B_Y.E2 with B_Y = (m-1) E1 + E2
    std::int64_t pullback_dot_a2;   // (s1 + s2).A2 = 2 B_Y.E2
    std::int64_t s1_dot_a2;         // pi(s1).O(0,1)
    DivisorClass pi_s1;
    DivisorClass pi_s1_plus_s2;
    bool consistent = false;
};
SpecialClassReport special_class_check(std::int64_t m);

struct CongruenceScan {
    std::uint64_t vectors = 0;
    std::uint64_t odd_squares = 0;
    std::uint64_t nonnegative = 0;
    std::uint64_t divisible_nonnegative = 0;
    std::uint64_t residue_violations = 0;

    friend bool operator==(const CongruenceScan&, const CongruenceScan&) = default;
};
/// Every H with coordinates in [-radius, radius]: counts odd H^2, and 2-divisible
/// H with H^2 >= 0 whose genus is not 1 mod 4. OpenMP kernel.
CongruenceScan congruence_scan(int radius);
/// Reference: full Gram evaluation per vector.
CongruenceScan congruence_scan_serial(int radius);

}  // namespace enrcurve
