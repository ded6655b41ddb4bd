#include <gtest/gtest.h>

#include "enrcurve/cover.hpp"
#include "oracles.hpp"

using namespace enrcurve;

namespace {

BinaryForm form(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return BinaryForm(v);
}

// B = x0^4 F(y) + x1^4 y0^4: restriction to the line x = (1:0) is F.
BiForm branch_through(const BinaryForm& f) {
    BiForm b(4, 4);
    for (int l = 0; l <= 4; ++l) b.coeff(0, l) = f[static_cast<std::size_t>(l)];
    b.coeff(4, 0) = 1;
    return b;
}

const GraphCurve kLineAtZero = line_curve(Rational(1), Rational(0));

}  // namespace

TEST(Cover, DeltaInvariantAndSingularityType) {
    EXPECT_EQ(delta_invariant(1), 0);
    EXPECT_EQ(delta_invariant(2), 1);
    EXPECT_EQ(delta_invariant(5), 2);
    EXPECT_EQ(delta_invariant(8), 4);
    EXPECT_THROW(delta_invariant(0), std::invalid_argument);
    EXPECT_EQ(ak_type(1), "smooth");
    EXPECT_EQ(ak_type(2), "A1");
    EXPECT_EQ(ak_type(3), "A2");
}

TEST(Cover, PullbackGenusAndSquares) {
    EXPECT_EQ(pullback_pa({1, 0}), 1);
    EXPECT_EQ(pullback_pa({1, 1}), 3);
    for (std::int64_t m = 1; m < 20; ++m) {
        EXPECT_EQ(pullback_pa({1, m - 1}), 2 * m - 1);
        EXPECT_EQ(pullback_square({1, m - 1}, {1, m - 1}), 4 * m - 4);
    }
    EXPECT_EQ(pullback_square({1, 1}, {1, 1}), 4);
    EXPECT_EQ(pullback_square({1, 0}, {0, 1}), 2);
}

TEST(Cover, RequiredEvenCount) {
    EXPECT_EQ(required_even_count(1, 0, 1, 1), 1);
    EXPECT_EQ(required_even_count(1, 1, 1, 1), 3);
    for (std::int64_t m = 1; m < 20; ++m) EXPECT_EQ(required_even_count(1, m - 1, 1, 1), 2 * m - 1);
    EXPECT_EQ(required_even_count(1, 2, 3, 1), 4);
    EXPECT_THROW(required_even_count(1, 1, 2, 1), std::invalid_argument);
    EXPECT_THROW(required_even_count(2, 2, 1, 1), std::invalid_argument);
}

TEST(Cover, AnalyzeProfileExamples) {
    const TangencyReport line = analyze_profile(MultiplicityProfile({2, 1, 1}), {1, 0});
    EXPECT_EQ(line.pa_pullback, 1);
    EXPECT_EQ(line.delta_total, 1);
    EXPECT_EQ(line.geom_genus_pullback, 0);
    EXPECT_EQ(line.odd_points, 2);
    EXPECT_FALSE(line.splits);

    const TangencyReport conic = analyze_profile(MultiplicityProfile({2, 2, 2, 1, 1}), {1, 1});
    EXPECT_EQ(conic.pa_pullback, 3);
    EXPECT_EQ(conic.delta_total, 3);
    EXPECT_EQ(conic.geom_genus_pullback, 0);

    const TangencyReport fiber = analyze_profile(MultiplicityProfile({1, 1, 1, 1}), {1, 0});
    EXPECT_EQ(fiber.delta_total, 0);
    EXPECT_EQ(fiber.geom_genus_pullback, 1);
}

TEST(Cover, RationalPullbackExactlyAtTheBudget) {
    // Profile {1, 1, 2^(2n+1)} exhausts pa(C_X) = 2n + 1 for every n.
    for (int n = 0; n < 12; ++n) {
        std::vector<int> entries(static_cast<std::size_t>(2 * n + 1), 2);
        entries.push_back(1);
        entries.push_back(1);
        const TangencyReport r = analyze_profile(MultiplicityProfile(entries), {1, n});
        EXPECT_EQ(r.geom_genus_pullback, 0) << n;
        EXPECT_EQ(r.odd_points, 2);
        EXPECT_EQ(MultiplicityProfile(entries).total(), 4 * n + 4);
    }
}

TEST(Splits, ElementaryCases) {
    const BinaryForm lin = form({2, 1});
    const BinaryForm quad = form({-1, 0, 1});  // two simple roots
    EXPECT_TRUE(splits(branch_through(lin * lin * form({3, 1}) * form({3, 1})), kLineAtZero));
    EXPECT_TRUE(splits(branch_through(form({0, 0, 0, 0, 1})), kLineAtZero));  // y1^4
    EXPECT_FALSE(splits(branch_through(quad * lin * lin), kLineAtZero));
    EXPECT_FALSE(splits(branch_through(quad * form({-3, 0, 1})), kLineAtZero));

    // Profile level: a cubic squared splits, a squarefree octic does not.
    const BinaryForm cubic = form({1, -2, 0, 3});
    EXPECT_TRUE(analyze_profile(multiplicity_profile(cubic * cubic), {1, 1}).splits);
    const BinaryForm octic = form({1, 0, -1}) * form({4, 0, -1}) * form({9, 0, -1}) * form({16, 0, -1});
    EXPECT_FALSE(analyze_profile(multiplicity_profile(octic), {1, 1}).splits);
}

TEST(Splits, AgreesWithSquareTestAndConstruction) {
    Rng rng(31);
    int squares = 0;
    for (int trial = 0; trial < 100; ++trial) {
        BinaryForm f;
        bool built_square = false;
        switch (trial % 3) {
            case 0: {
                BinaryForm s(2);
                for (std::size_t i = 0; i <= 2; ++i) s[i] = Rational(rng.uniform_int(-6, 6));
                if (s.is_zero()) s[0] = 1;
                f = s * s * Rational(rng.uniform_int(1, 7));
                built_square = true;
                break;
            }
            case 1: {
                const auto roots = oracle::random_roots(rng, 2, 1);
                const auto lin = oracle::random_roots(rng, 1, 1);
                f = oracle::form_from_roots(Rational(1), roots);
                if (lin[0].first != roots[0].first && lin[0].first != roots[1].first) {
                    f = f * power(BinaryForm::linear(-lin[0].first, Rational(1)), 2);
                } else {
                    f = f * power(BinaryForm::y0(), 2);
                }
                break;
            }
            default: {
                f = BinaryForm(4);
                for (std::size_t i = 0; i <= 4; ++i) f[i] = Rational(rng.uniform_int(-9, 9));
                if (f[4] == 0) f[4] = 1;
                built_square = is_square(f).has_value();
                break;
            }
        }
        const BiForm b = branch_through(f);
        const bool split = splits(b, kLineAtZero);
        EXPECT_EQ(split, is_square(restrict(b, kLineAtZero)).has_value());
        if (trial % 3 != 2) EXPECT_EQ(split, built_square) << trial;
        EXPECT_EQ(analyze(b, kLineAtZero).splits, split);
        squares += split ? 1 : 0;
    }
    EXPECT_GE(squares, 34);
}

TEST(Analyze, ExactAndFloatAgree) {
    const BiForm b = oracle::branch_with_line_restriction(3, form({-6, 1, 1}) * form({-1, 1}) * form({-1, 1}));
    const GraphCurve tangent = line_curve(Rational(1), Rational(1));
    const TangencyReport exact = analyze(b, tangent);
    EXPECT_EQ(exact.profile, MultiplicityProfile({1, 1, 2}));
    EXPECT_EQ(exact.geom_genus_pullback, 0);
    const TangencyReport approx = analyze(b, to_complex(tangent), ClusterOptions{});
    EXPECT_EQ(approx.profile, exact.profile);
    EXPECT_EQ(approx.geom_genus_pullback, exact.geom_genus_pullback);
}

TEST(Analyze, SigmaEquivariant) {
    Rng rng(41);
    const BiForm b = random_admissible_branch(17);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(0, 3));
        BinaryForm a(n), bc(n);
        for (std::size_t i = 0; i <= n; ++i) {
            a[i] = Rational(rng.uniform_int(-4, 4));
            bc[i] = Rational(rng.uniform_int(-4, 4));
        }
        a[n] = 1;
        const GraphCurve c(a, bc);
        if (!is_irreducible(c)) continue;
        const TangencyReport r = analyze(b, c);
        const TangencyReport s = analyze(b, sigma_act(c));
        EXPECT_EQ(r.profile, s.profile);
        EXPECT_EQ(r.geom_genus_pullback, s.geom_genus_pullback);
        EXPECT_EQ(r.odd_points % 2, 0);
        EXPECT_EQ(r.profile.total(), static_cast<int>(4 * n + 4));
        EXPECT_GE(r.geom_genus_pullback, 0);
    }
}
