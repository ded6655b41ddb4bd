#include "enrcurve/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <unsupported/Eigen/Polynomials>

namespace enrcurve {

ProjectivePoint ProjectivePoint::from(Complex z0, Complex z1) {
    if (std::abs(z0) >= std::abs(z1)) {
        if (z0 == Complex{}) throw std::invalid_argument("(0:0) is not a point of P^1");
        return {Complex{1.0, 0.0}, z1 / z0};
    }
    return {z0 / z1, Complex{1.0, 0.0}};
}

double chordal_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
    const double na = std::sqrt(std::norm(a.z0) + std::norm(a.z1));
    const double nb = std::sqrt(std::norm(b.z0) + std::norm(b.z1));
    return std::abs(a.z0 * b.z1 - a.z1 * b.z0) / (na * nb);
}

namespace {

// Companion eigenvalues in extended precision: a k-fold root is only
// resolved to about eps^(1/k), and the clustering threshold sits at 1e-6.
std::vector<Complex> companion_roots(const std::vector<Complex>& ascending) {
    using Wide = std::complex<long double>;
    if (ascending.size() < 2) return {};
    Eigen::Matrix<Wide, Eigen::Dynamic, 1> c(static_cast<Eigen::Index>(ascending.size()));
    for (std::size_t i = 0; i < ascending.size(); ++i) c[static_cast<Eigen::Index>(i)] = Wide(ascending[i]);
    Eigen::PolynomialSolver<Wide, Eigen::Dynamic> solver(c);
    std::vector<Complex> out;
    for (const Wide& r : solver.roots()) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    return out;
}

}  // namespace

std::vector<ProjectivePoint> projective_roots(const ComplexForm& f) {
    if (f.is_zero()) throw std::domain_error("roots of the zero form");
    const std::size_t d = f.degree();
    std::size_t lo = 0;
    while (f[lo] == Complex{}) ++lo;
    std::size_t hi = d;
    while (f[hi] == Complex{}) --hi;

    std::vector<ProjectivePoint> roots;
    roots.reserve(d);
    // y1^lo divides f: root (1:0). y0^(d-hi) divides f: root (0:1).
    for (std::size_t k = 0; k < lo; ++k) roots.push_back({Complex{1.0, 0.0}, Complex{}});
    for (std::size_t k = hi; k < d; ++k) roots.push_back({Complex{}, Complex{1.0, 0.0}});

    std::vector<Complex> middle(f.coeffs().begin() + static_cast<std::ptrdiff_t>(lo),
                                f.coeffs().begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    if (middle.size() >= 2) {
        if (std::abs(middle.back()) >= std::abs(middle.front())) {
            for (const Complex& t : companion_roots(middle)) roots.push_back(ProjectivePoint::affine(t));
        } else {
            std::reverse(middle.begin(), middle.end());
            for (const Complex& u : companion_roots(middle)) roots.push_back(ProjectivePoint::from(u, Complex{1.0, 0.0}));
        }
    }
    return roots;
}

std::vector<RootCluster> cluster_roots(std::span<const ProjectivePoint> roots, const ClusterOptions& options) {
    const std::size_t n = roots.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    std::vector<double> dist(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dij = chordal_distance(roots[i], roots[j]);
            dist[i * n + j] = dist[j * n + i] = dij;
            if (dij <= options.tolerance) parent[find(i)] = find(j);
        }
    }

    std::vector<std::vector<std::size_t>> members;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        if (slot[r] == n) {
            slot[r] = members.size();
            members.emplace_back();
        }
        members[slot[r]].push_back(i);
    }

    std::vector<RootCluster> clusters;
    clusters.reserve(members.size());
    for (const auto& group : members) {
        RootCluster c;
        c.multiplicity = static_cast<int>(group.size());
        for (std::size_t a : group) {
            for (std::size_t b : group) c.diameter = std::max(c.diameter, dist[a * n + b]);
        }
        if (c.diameter > options.tolerance) {
            std::ostringstream msg;
            msg << "root cluster of size " << group.size() << " spans " << c.diameter << " > tolerance "
                << options.tolerance;
            throw AmbiguousClustering(msg.str());
        }
        // Average in the chart of the first member.
        const ProjectivePoint& ref = roots[group.front()];
        const bool y0_chart = ref.z0 == Complex{1.0, 0.0};
        Complex sum{};
        for (std::size_t a : group) sum += y0_chart ? roots[a].z1 / roots[a].z0 : roots[a].z0 / roots[a].z1;
        sum /= static_cast<double>(group.size());
        c.center = y0_chart ? ProjectivePoint::affine(sum) : ProjectivePoint::from(sum, Complex{1.0, 0.0});
        clusters.push_back(c);
    }

    const double gap = options.separation * options.tolerance;
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            for (std::size_t i : members[a]) {
                for (std::size_t j : members[b]) {
                    if (dist[i * n + j] <= gap) {
                        std::ostringstream msg;
                        msg << "roots at chordal distance " << dist[i * n + j] << " fall between tolerance "
                            << options.tolerance << " and separation " << gap;
                        throw AmbiguousClustering(msg.str());
                    }
                }
            }
        }
    }
    return clusters;
}

MultiplicityProfile multiplicity_profile(const ComplexForm& f, const ClusterOptions& options) {
    const auto roots = projective_roots(f);
    std::vector<int> entries;
    for (const auto& c : cluster_roots(roots, options)) entries.push_back(c.multiplicity);
    return MultiplicityProfile(std::move(entries));
}

bool numerically_coprime(const ComplexForm& f, const ComplexForm& g, double tolerance) {
    if (f.is_zero() || g.is_zero()) return false;
    const auto rf = projective_roots(f);
    const auto rg = projective_roots(g);
    for (const auto& a : rf) {
        for (const auto& b : rg) {
            if (chordal_distance(a, b) <= tolerance) return false;
        }
    }
    return true;
}

double root_separation(const ComplexForm& f) {
    const auto r = projective_roots(f);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j < r.size(); ++j) best = std::min(best, chordal_distance(r[i], r[j]));
    }
    return best;
}

}  // namespace enrcurve
