#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "enrcurve/forms.hpp"

namespace enrcurve {

/// Point (z0 : z1) of P^1, scaled so that the larger coordinate equals 1.
struct ProjectivePoint {
    Complex z0{1.0, 0.0};
    Complex z1{0.0, 0.0};

    static ProjectivePoint from(Complex z0, Complex z1);
    /// The point (1 : t).
    static ProjectivePoint affine(Complex t) { return from(Complex{1.0, 0.0}, t); }
};

/// |a0 b1 - a1 b0| / (|a| |b|); a metric on P^1 bounded by 1.
double chordal_distance(const ProjectivePoint& a, const ProjectivePoint& b);

/// All roots of a nonzero complex form, repeated by multiplicity (degree many).
/// Exactly vanishing end coefficients produce exact roots (1:0) / (0:1); the
/// remaining part is solved in whichever chart has the larger end coefficient.
std::vector<ProjectivePoint> projective_roots(const ComplexForm& f);

struct ClusterOptions {
    double tolerance = 1e-6;   // chordal linkage threshold
    double separation = 100.0; // distinct clusters must be farther than separation * tolerance
};

struct RootCluster {
    ProjectivePoint center;
    int multiplicity = 0;
    double diameter = 0.0;
};

class AmbiguousClustering : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Single-linkage clustering. Throws AmbiguousClustering when the grouping is
/// not stable: a cluster wider than the tolerance, or two clusters closer than
/// separation * tolerance.
std::vector<RootCluster> cluster_roots(std::span<const ProjectivePoint> roots, const ClusterOptions& options = {});

/// Float-path profile by root clustering.
MultiplicityProfile multiplicity_profile(const ComplexForm& f, const ClusterOptions& options);

/// True when no root of f lies within the clustering tolerance of a root of g
/// (and neither form vanishes identically).
bool numerically_coprime(const ComplexForm& f, const ComplexForm& g, double tolerance);

/// Smallest chordal distance between distinct roots; +inf below two roots.
double root_separation(const ComplexForm& f);

}  // namespace enrcurve
