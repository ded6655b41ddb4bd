#include "enrcurve/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <gmpxx.h>

namespace enrcurve {

namespace {

IntMatrix build_e8_negative() {
    IntMatrix g(8, std::vector<std::int64_t>(8, 0));
    for (int i = 0; i < 8; ++i) g[i][i] = -2;
    // Bourbaki E8: 1-3, 3-4, 4-5, 5-6, 6-7, 7-8, 2-4 (1-based).
    const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (const auto& e : edges) {
        g[e[0] - 1][e[1] - 1] = 1;
        g[e[1] - 1][e[0] - 1] = 1;
    }
    return g;
}

IntMatrix build_enriques() {
    IntMatrix g(kLatticeRank, std::vector<std::int64_t>(kLatticeRank, 0));
    g[0][1] = g[1][0] = 1;
    const IntMatrix& e8 = e8_negative_gram();
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) g[2 + i][2 + j] = e8[i][j];
    }
    return g;
}

}  // namespace

LatticeVector LatticeVector::unit(int index) {
    if (index < 0 || index >= kLatticeRank) throw std::out_of_range("lattice basis index");
    LatticeVector v;
    v.coords[static_cast<std::size_t>(index)] = 1;
    return v;
}

LatticeVector LatticeVector::hyperbolic(std::int64_t a, std::int64_t b) {
    LatticeVector v;
    v.coords[0] = a;
    v.coords[1] = b;
    return v;
}

const IntMatrix& e8_negative_gram() {
    static const IntMatrix g = build_e8_negative();
    return g;
}

const IntMatrix& enriques_gram() {
    static const IntMatrix g = build_enriques();
    return g;
}

std::int64_t inner(const LatticeVector& u, const LatticeVector& v) {
    const IntMatrix& g = enriques_gram();
    std::int64_t s = 0;
    for (int i = 0; i < kLatticeRank; ++i) {
        if (u.coords[i] == 0) continue;
        for (int j = 0; j < kLatticeRank; ++j) s += u.coords[i] * g[i][j] * v.coords[j];
    }
    return s;
}

bool is_primitive(const LatticeVector& u) {
    std::int64_t g = 0;
    for (auto c : u.coords) g = std::gcd(g, c);
    return g == 1;
}

CertifiedPhi phi_certified(const LatticeVector& H, int radius) {
    CertifiedPhi out;
    out.result = phi(H, radius);
    out.stable = phi(H, radius + 2).value == out.result.value;
    return out;
}

bool two_divisible(const LatticeVector& H) {
    for (auto c : H.coords) {
        if (c % 2 != 0) return false;
    }
    return true;
}

GenusCongruence genus_from_square(std::int64_t h_squared) {
    if (h_squared < 0) throw std::invalid_argument("genus needs H^2 >= 0");
    if (h_squared % 2 != 0) throw std::logic_error("odd self-intersection in an even lattice");
    const std::int64_t pa = h_squared / 2 + 1;
    return {pa, static_cast<int>(((pa % 4) + 4) % 4)};
}

GenusCongruence genus_and_congruence(const LatticeVector& H) {
    const GenusCongruence g = genus_from_square(square(H));
    if (two_divisible(H) && g.residue != 1) throw std::logic_error("2-divisible class with genus not 1 mod 4");
    return g;
}

LatticeVector cy_class(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    return LatticeVector::hyperbolic(2 * m - 2, 2);
}

CyReport cy_report(std::int64_t m, int radius) {
    CyReport r;
    r.cls = cy_class(m);
    r.pa = genus_and_congruence(r.cls).pa;
    const CertifiedPhi p = phi_certified(r.cls, radius);
    r.phi = p.result.value;
    r.phi_witness = p.result.witness;
    r.phi_stable = p.stable;
    r.two_divisible = two_divisible(r.cls);
    return r;
}

std::string LatticeSpec::name() const {
    switch (label) {
        case LatticeLabel::enriques: return "U+E8(-1)";
        case LatticeLabel::hs: return "U+E8(-2)+<" + std::to_string(-4 * (m + 1)) + ">";
        case LatticeLabel::very_general_cover: return "U(2)+E8(-2)";
    }
    return "";
}

LatticeSpec enriques_spec() { return {enriques_gram(), LatticeLabel::enriques, 0}; }

LatticeSpec hs_gram(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    IntMatrix g(11, std::vector<std::int64_t>(11, 0));
    g[0][1] = g[1][0] = 1;
    const IntMatrix& e8 = e8_negative_gram();
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) g[2 + i][2 + j] = 2 * e8[i][j];
    }
    g[10][10] = -4 * (m + 1);
    return {std::move(g), LatticeLabel::hs, m};
}

LatticeSpec very_general_cover_spec() {
    IntMatrix g = enriques_gram();
    for (auto& row : g) {
        for (auto& x : row) x *= 2;
    }
    return {std::move(g), LatticeLabel::very_general_cover, 0};
}

std::string determinant_string(const IntMatrix& gram) {
    // Bareiss fraction-free elimination.
    const std::size_t n = gram.size();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(gram[i][j]);
    }
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return "0";
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    mpz_class det = n == 0 ? mpz_class(1) : a[n - 1][n - 1] * sign;
    return det.get_str();
}

Signature signature(const IntMatrix& gram) {
    const auto n = static_cast<Eigen::Index>(gram.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = static_cast<double>(gram[i][j]);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    Signature s;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ev = es.eigenvalues()[i];
        if (ev > 1e-9) {
            ++s.positive;
        } else if (ev < -1e-9) {
            ++s.negative;
        } else {
            ++s.zero;
        }
    }
    return s;
}

SpecialClassReport special_class_check(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("m must be at least 1");
    SpecialClassReport r;
    const LatticeVector e1 = LatticeVector::e();
    const LatticeVector e2 = LatticeVector::f();
    const LatticeVector b = (m - 1) * e1 + e2;
    r.b_dot_e2 = inner(b, e2);
    // The K3 cover is etale of degree 2, so pullbacks double intersections.
    r.pullback_dot_a2 = 2 * r.b_dot_e2;
    // A1, A2 map onto the rulings O(1,0), O(0,1); pi(s1) is a section of the
    // first, so its class is (k, 1), and pi(s1).O(0,1) = B_Y.E2 fixes k.
    r.pi_s1 = {r.b_dot_e2, 1};
    r.s1_dot_a2 = intersect(r.pi_s1, {0, 1});
    r.pi_s1_plus_s2 = r.pi_s1 + r.pi_s1;
    // pi_*((m-1) A1~ + A2~) = (m-1) * 2 (1,0) + 2 (0,1)
    const DivisorClass pushed = (2 * (m - 1)) * DivisorClass{1, 0} + 2 * DivisorClass{0, 1};
    r.consistent = r.s1_dot_a2 == r.b_dot_e2 && r.pullback_dot_a2 == 2 * r.s1_dot_a2 && r.pi_s1_plus_s2 == pushed &&
                   r.pi_s1 == DivisorClass{m - 1, 1};
    return r;
}

}  // namespace enrcurve
