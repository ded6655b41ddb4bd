#include <gtest/gtest.h>

#include <numeric>

#include "enrcurve/lattice.hpp"
#include "enrcurve/rng.hpp"

using namespace enrcurve;

namespace {

LatticeVector vec(std::array<std::int64_t, kLatticeRank> c) { return LatticeVector{c}; }

// Full Gram product, no shortcuts.
std::int64_t gram_inner(const LatticeVector& u, const LatticeVector& v) {
    const IntMatrix& g = enriques_gram();
    std::int64_t out = 0;
    for (int i = 0; i < kLatticeRank; ++i)
        for (int j = 0; j < kLatticeRank; ++j) out += u.coords[i] * g[i][j] * v.coords[j];
    return out;
}

// Primitive isotropic E in the box with E.(e+f) > 0, by plain enumeration.
const std::vector<LatticeVector>& isotropic_box(int radius) {
    static std::vector<LatticeVector> cache;
    static int cached_radius = -1;
    if (cached_radius == radius) return cache;
    cache.clear();
    LatticeVector e;
    e.coords.fill(-radius);
    const LatticeVector ref = LatticeVector::hyperbolic(1, 1);
    while (true) {
        if (gram_inner(e, e) == 0 && gram_inner(e, ref) > 0) {
            std::int64_t g = 0;
            for (auto c : e.coords) g = std::gcd(g, c);
            if (g == 1) cache.push_back(e);
        }
        int k = 0;
        while (k < kLatticeRank && e.coords[k] == radius) e.coords[k++] = -radius;
        if (k == kLatticeRank) break;
        ++e.coords[k];
    }
    cached_radius = radius;
    return cache;
}

PhiResult brute_phi(const LatticeVector& h, int radius) {
    PhiResult best;
    best.value = std::numeric_limits<std::int64_t>::max();
    for (const auto& e : isotropic_box(radius)) {
        const std::int64_t v = gram_inner(e, h);
        if (v < best.value || (v == best.value && e > best.witness)) {
            best.value = v;
            best.witness = e;
        }
    }
    best.radius = radius;
    return best;
}

// Bareiss fraction-free determinant.
std::int64_t det(IntMatrix a) {
    const std::size_t n = a.size();
    std::int64_t prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

TEST(Lattice, GramBasics) {
    const LatticeVector e = LatticeVector::e(), f = LatticeVector::f();
    EXPECT_EQ(inner(e, f), 1);
    EXPECT_EQ(inner(e, e), 0);
    EXPECT_EQ(square(LatticeVector::v(1)), -2);
    const IntMatrix& g = enriques_gram();
    for (int i = 0; i < kLatticeRank; ++i) {
        EXPECT_EQ(g[i][i] % 2, 0);
        for (int j = 0; j < kLatticeRank; ++j) EXPECT_EQ(g[i][j], g[j][i]);
    }
    // U + E8(-1) is unimodular of signature (1, 9).
    EXPECT_EQ(det(g), -1);
    const Signature s = signature(g);
    EXPECT_EQ(s.positive, 1);
    EXPECT_EQ(s.negative, 9);
    EXPECT_EQ(det(e8_negative_gram()), 1);
}

TEST(Lattice, InnerAgreesWithGramProduct) {
    Rng rng(6);
    for (int k = 0; k < 200; ++k) {
        LatticeVector u, v;
        for (int i = 0; i < kLatticeRank; ++i) {
            u.coords[i] = rng.uniform_int(-9, 9);
            v.coords[i] = rng.uniform_int(-9, 9);
        }
        EXPECT_EQ(inner(u, v), gram_inner(u, v));
        EXPECT_EQ(square(u) % 2, 0);
    }
}

TEST(Phi, SmallExamples) {
    const PhiResult a = phi(LatticeVector::hyperbolic(1, 1), 10);
    EXPECT_EQ(a.value, 1);
    EXPECT_EQ(a.witness, LatticeVector::e());
    for (std::int64_t m = 2; m < 8; ++m) {
        const PhiResult r = phi(LatticeVector::hyperbolic(m - 1, 1), 10);
        EXPECT_EQ(r.value, 1);
        EXPECT_EQ(r.witness, LatticeVector::e());
    }
    // (2m-2) e + 2 f at m = 3: e.H = 2 < f.H = 4.
    const PhiResult c = phi(cy_class(3), 10);
    EXPECT_EQ(c.value, 2);
    EXPECT_EQ(c.witness, LatticeVector::e());
    EXPECT_THROW(phi(LatticeVector{}, 5), std::invalid_argument);
    EXPECT_THROW(phi(LatticeVector::v(1), 5), std::invalid_argument);
    EXPECT_THROW(phi(LatticeVector::hyperbolic(1, 1), 0), std::domain_error);
}

TEST(Phi, MatchesBruteForceAtRadiusTwo) {
    const std::vector<LatticeVector> hs{
        LatticeVector::hyperbolic(1, 1),
        LatticeVector::hyperbolic(2, 2),
        LatticeVector::hyperbolic(4, 2),
        LatticeVector::hyperbolic(3, 5),
        vec({3, 2, 1, 0, 0, 0, 0, 0, 0, 0}),
        vec({4, 3, 0, 1, 1, 0, 0, 0, 0, 0}),
        vec({5, 5, 1, 0, 0, 0, 0, 0, 0, 1}),
    };
    for (const auto& h : hs) {
        ASSERT_GE(square(h), 0);
        const PhiResult expected = brute_phi(h, 2);
        const PhiResult serial = phi_serial(h, 2);
        const PhiResult parallel = phi(h, 2);
        EXPECT_EQ(serial.value, expected.value);
        EXPECT_EQ(serial.witness, expected.witness);
        EXPECT_EQ(parallel.value, expected.value);
        EXPECT_EQ(parallel.witness, expected.witness);
    }
}

TEST(Phi, WitnessAndScaling) {
    for (const auto& h : {LatticeVector::hyperbolic(2, 2), vec({3, 2, 1, 0, 0, 0, 0, 0, 0, 0}), cy_class(4)}) {
        const PhiResult r = phi(h, 6);
        EXPECT_EQ(square(r.witness), 0);
        EXPECT_TRUE(is_primitive(r.witness));
        EXPECT_GT(inner(r.witness, positivity_reference()), 0);
        EXPECT_EQ(phi(2 * h, 6).value, 2 * r.value);
    }
}

TEST(Phi, SerialAndParallelAgreeOnRandomClasses) {
    Rng rng(15);
    int checked = 0;
    while (checked < 10) {
        LatticeVector h;
        h.coords[0] = rng.uniform_int(1, 6);
        h.coords[1] = rng.uniform_int(1, 6);
        for (int i = 2; i < kLatticeRank; ++i) h.coords[i] = rng.uniform_int(-1, 1);
        if (square(h) < 0) continue;
        const PhiResult a = phi(h, 4), b = phi_serial(h, 4);
        EXPECT_EQ(a.value, b.value);
        EXPECT_EQ(a.witness, b.witness);
        ++checked;
    }
}

TEST(Genus, TwoDivisibilityAndCongruence) {
    EXPECT_TRUE(two_divisible(cy_class(5)));
    EXPECT_FALSE(two_divisible(LatticeVector::hyperbolic(1, 1)));
    EXPECT_TRUE(two_divisible(LatticeVector{}));

    const GenusCongruence a = genus_and_congruence(LatticeVector::hyperbolic(2, 2));
    EXPECT_EQ(a.pa, 5);
    EXPECT_EQ(a.residue, 1);
    const GenusCongruence b = genus_and_congruence(LatticeVector::hyperbolic(1, 1));
    EXPECT_EQ(b.pa, 2);
    EXPECT_EQ(b.residue, 2);
    EXPECT_THROW(genus_and_congruence(LatticeVector::v(3)), std::invalid_argument);
}

TEST(Genus, CongruenceScanSerialMatchesParallel) {
    const CongruenceScan serial = congruence_scan_serial(2);
    const CongruenceScan parallel = congruence_scan(2);
    EXPECT_EQ(serial, parallel);
    EXPECT_EQ(serial.vectors, 9765625u);
    EXPECT_EQ(serial.odd_squares, 0u);
    EXPECT_EQ(serial.residue_violations, 0u);
    EXPECT_GT(serial.divisible_nonnegative, 0u);
}

TEST(CyClass, ClassGenusAndPhi) {
    EXPECT_EQ(cy_class(1), LatticeVector::hyperbolic(0, 2));
    EXPECT_EQ(cy_class(2), LatticeVector::hyperbolic(2, 2));
    for (std::int64_t m = 1; m <= 10000; ++m) {
        const LatticeVector c = cy_class(m);
        ASSERT_EQ(inner(c, LatticeVector::e()), 2);
        ASSERT_EQ(square(c), 8 * m - 8);
        ASSERT_EQ(genus_and_congruence(c).pa - 4 * m + 3, 0);
    }
    const CyReport r2 = cy_report(2);
    EXPECT_EQ(r2.pa, 5);
    EXPECT_EQ(r2.phi, 2);
    EXPECT_TRUE(r2.two_divisible);
    EXPECT_TRUE(r2.phi_stable);
    const CyReport r3 = cy_report(3);
    EXPECT_EQ(r3.pa, 9);
    EXPECT_EQ(r3.phi, 2);
    const CyReport r1 = cy_report(1);
    EXPECT_EQ(r1.pa, 1);
    EXPECT_EQ(r1.phi, 0);
    EXPECT_THROW(cy_class(0), std::invalid_argument);
}

TEST(HsLattice, BlocksDeterminantAndSignature) {
    EXPECT_EQ(hs_gram(0).gram[10][10], -4);
    EXPECT_EQ(hs_gram(1).gram[10][10], -8);
    for (std::int64_t m = 0; m < 8; ++m) {
        const LatticeSpec s = hs_gram(m);
        ASSERT_EQ(s.gram.size(), 11u);
        // det U = -1, det E8(-2) = 2^8, last block -4(m+1).
        EXPECT_EQ(det(s.gram), 1024 * (m + 1));
        EXPECT_EQ(determinant_string(s.gram), std::to_string(1024 * (m + 1)));
        const Signature sig = signature(s.gram);
        EXPECT_EQ(sig.positive, 1);
        EXPECT_EQ(sig.negative, 10);
    }
    const LatticeSpec cover = very_general_cover_spec();
    EXPECT_EQ(det(cover.gram), -1024);
}

TEST(SpecialClass, IntersectionChain) {
    const SpecialClassReport r2 = special_class_check(2);
    EXPECT_EQ(r2.b_dot_e2, 1);
    EXPECT_EQ(r2.pullback_dot_a2, 2);
    EXPECT_EQ(r2.s1_dot_a2, 1);
    EXPECT_TRUE(r2.consistent);
    const SpecialClassReport r1 = special_class_check(1);
    EXPECT_EQ(r1.b_dot_e2, 0);
    EXPECT_EQ(r1.pullback_dot_a2, 0);
    EXPECT_EQ(r1.s1_dot_a2, 0);
    const SpecialClassReport r5 = special_class_check(5);
    EXPECT_EQ(r5.b_dot_e2, 4);
    EXPECT_EQ(r5.pullback_dot_a2, 8);
    EXPECT_EQ(r5.s1_dot_a2, 4);
    EXPECT_EQ(r5.pi_s1, (DivisorClass{4, 1}));
    EXPECT_TRUE(r5.consistent);
}
