#include "enrcurve/seeker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "enrcurve/lattice.hpp"
#include "enrcurve/rng.hpp"
#include "enrcurve/severi.hpp"

namespace enrcurve {

namespace {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

struct Unpacked {
    ComplexForm A, Bc, q, s;
    Complex c;
};

Unpacked unpack(const TangencySystem& sys, const std::vector<Complex>& x) {
    const std::size_t n = sys.n;
    Unpacked u{ComplexForm(n), ComplexForm(n), ComplexForm(2), ComplexForm(2 * n + 1), x[sys.c_offset()]};
    for (std::size_t i = 0; i <= n; ++i) {
        u.A[i] = x[i];
        u.Bc[i] = x[n + 1 + i];
    }
    for (std::size_t i = 0; i < 3; ++i) u.q[i] = x[sys.q_offset() + i];
    for (std::size_t i = 0; i < 2 * n + 2; ++i) u.s[i] = x[sys.s_offset() + i];
    return u;
}

double norm2(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& z : v) s += std::norm(z);
    return std::sqrt(s);
}

// y-part of B for x-exponent j: sum_l coeff(j, l) y0^(4-l) y1^l, scaled.
std::vector<ComplexForm> branch_rows(const TangencySystem& sys) {
    const BiForm& b = sys.branch;
    std::vector<ComplexForm> rows;
    for (int j = 0; j <= b.d1(); ++j) {
        ComplexForm row(static_cast<std::size_t>(b.d2()));
        for (int l = 0; l <= b.d2(); ++l) row[static_cast<std::size_t>(l)] = Complex(b.coeff(j, l).get_d() / sys.branch_scale, 0.0);
        rows.push_back(row);
    }
    return rows;
}

std::vector<ComplexForm> powers(const ComplexForm& f, int k) {
    std::vector<ComplexForm> out{ComplexForm::constant(Complex(1.0, 0.0))};
    for (int e = 1; e <= k; ++e) out.push_back(out.back() * f);
    return out;
}

CMatrix full_jacobian(const TangencySystem& sys, const std::vector<Complex>& x) {
    const Unpacked u = unpack(sys, x);
    const std::size_t n = sys.n;
    const int d1 = sys.branch.d1();
    const std::vector<ComplexForm> rows = branch_rows(sys);
    const ComplexForm minus_a = -u.A;
    const std::vector<ComplexForm> pb = powers(u.Bc, d1);
    const std::vector<ComplexForm> pa = powers(minus_a, d1);

    // R = sum_j row_j Bc^(d1-j) (-A)^j; dR/dA and dR/dBc before the monomial shift.
    const std::size_t inner_degree = static_cast<std::size_t>(sys.branch.d2()) + static_cast<std::size_t>(d1 - 1) * n;
    ComplexForm da(inner_degree), db(inner_degree);
    for (int j = 0; j <= d1; ++j) {
        if (j > 0) {
            da += rows[static_cast<std::size_t>(j)] * pb[static_cast<std::size_t>(d1 - j)] * pa[static_cast<std::size_t>(j - 1)] *
                  Complex(-static_cast<double>(j), 0.0);
        }
        if (j < d1) {
            db += rows[static_cast<std::size_t>(j)] * pb[static_cast<std::size_t>(d1 - j - 1)] * pa[static_cast<std::size_t>(j)] *
                  Complex(static_cast<double>(d1 - j), 0.0);
        }
    }
    const ComplexForm s2 = u.s * u.s;
    const ComplexForm dq = -(u.c * s2);
    const ComplexForm ds = -(Complex(2.0, 0.0) * u.c * u.q * u.s);
    const ComplexForm dc = -(u.q * s2);

    CMatrix jac = CMatrix::Zero(static_cast<Eigen::Index>(sys.equation_count()), static_cast<Eigen::Index>(sys.unknown_count()));
    auto put_shifted = [&](const ComplexForm& f, std::size_t column, std::size_t shift) {
        for (std::size_t i = 0; i <= f.degree(); ++i) jac(static_cast<Eigen::Index>(i + shift), static_cast<Eigen::Index>(column)) = f[i];
    };
    for (std::size_t k = 0; k <= n; ++k) {
        put_shifted(da, k, k);
        put_shifted(db, n + 1 + k, k);
    }
    for (std::size_t k = 0; k < 3; ++k) put_shifted(dq, sys.q_offset() + k, k);
    for (std::size_t k = 0; k < 2 * n + 2; ++k) put_shifted(ds, sys.s_offset() + k, k);
    put_shifted(dc, sys.c_offset(), 0);
    return jac;
}

std::vector<std::size_t> free_columns(const TangencySystem& sys, const Gauge& g) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < sys.unknown_count(); ++k) {
        if (k == g.curve || k == sys.q_offset() + g.q || k == sys.s_offset() + g.s) continue;
        cols.push_back(k);
    }
    return cols;
}

CMatrix reduced_jacobian(const TangencySystem& sys, const std::vector<Complex>& x, const Gauge& g) {
    const CMatrix full = full_jacobian(sys, x);
    const std::vector<std::size_t> cols = free_columns(sys, g);
    CMatrix out(full.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = full.col(static_cast<Eigen::Index>(cols[k]));
    return out;
}

std::size_t argmax_abs(std::span<const Complex> v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    }
    return best;
}

ComplexForm divided(const ComplexForm& f, Complex by) { return f * (Complex(1.0, 0.0) / by); }

// Unit representative of a projective point.
Eigen::Vector2cd unit_vector(const ProjectivePoint& p) {
    Eigen::Vector2cd v(p.z0, p.z1);
    return v / v.norm();
}

// Linear form vanishing at (z0 : z1).
ComplexForm linear_factor(const Eigen::Vector2cd& v) { return ComplexForm::linear(v(1), -v(0)); }

ComplexForm product_of_roots(const std::vector<Eigen::Vector2cd>& roots) {
    ComplexForm out = ComplexForm::constant(Complex(1.0, 0.0));
    for (const auto& r : roots) out = out * linear_factor(r);
    return out;
}

Complex least_squares_scalar(const ComplexForm& basis, const ComplexForm& target) {
    Complex num{}, den{};
    for (std::size_t i = 0; i <= basis.degree(); ++i) {
        num += std::conj(basis[i]) * target[i];
        den += std::conj(basis[i]) * basis[i];
    }
    return num / den;
}

struct Start {
    std::vector<Complex> x;
    Gauge gauge;
};

Start random_start(const TangencySystem& sys, Rng& rng, bool sigma_symmetric) {
    const std::size_t n = sys.n;
    auto draw = [&] {
        const double re = rng.uniform(-1.0, 1.0);
        const double im = rng.uniform(-1.0, 1.0);
        return Complex(re, im);
    };
    ComplexForm a(n), bc(n);
    for (std::size_t i = 0; i <= n; ++i) {
        a[i] = draw();
        bc[i] = draw();
        if (sigma_symmetric) {
            // A even-indexed and Bc odd-indexed give sigma(C) = C.
            if (i % 2 == 1) a[i] = Complex{};
            if (i % 2 == 0) bc[i] = Complex{};
        }
    }
    std::vector<Complex> curve(a.coeffs().begin(), a.coeffs().end());
    curve.insert(curve.end(), bc.coeffs().begin(), bc.coeffs().end());
    Gauge g;
    g.curve = argmax_abs(curve);
    const Complex pivot = curve[g.curve];
    a = divided(a, pivot);
    bc = divided(bc, pivot);
    (g.curve <= n ? a[g.curve] : bc[g.curve - n - 1]) = Complex(1.0, 0.0);
    ComplexGraphCurve c{a, bc};

    const ComplexForm r = restrict(sys.branch, c) * Complex(1.0 / sys.branch_scale, 0.0);
    std::vector<Eigen::Vector2cd> roots;
    for (const ProjectivePoint& p : projective_roots(r)) roots.push_back(unit_vector(p));

    // Two random roots seed q; the rest pair up greedily into the double roots of s.
    std::vector<Eigen::Vector2cd> q_roots;
    for (int k = 0; k < 2; ++k) {
        const auto pick = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(roots.size()) - 1));
        q_roots.push_back(roots[pick]);
        roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    std::vector<Eigen::Vector2cd> s_roots;
    while (!roots.empty()) {
        const Eigen::Vector2cd u = roots.front();
        roots.erase(roots.begin());
        std::size_t nearest = 0;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const double d = std::abs(u(0) * roots[i](1) - u(1) * roots[i](0));
            if (d < best) {
                best = d;
                nearest = i;
            }
        }
        Eigen::Vector2cd v = roots[nearest];
        roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(nearest));
        const Complex overlap = u.dot(v);  // conj(u) . v
        if (std::abs(overlap) > 0.0) v *= std::conj(overlap) / std::abs(overlap);
        s_roots.push_back((u + v).normalized());
    }
    ComplexForm q = product_of_roots(q_roots);
    ComplexForm s = product_of_roots(s_roots);
    g.q = argmax_abs(q.coeffs());
    g.s = argmax_abs(s.coeffs());
    q = divided(q, q[g.q]);
    s = divided(s, s[g.s]);
    q[g.q] = Complex(1.0, 0.0);
    s[g.s] = Complex(1.0, 0.0);
    const Complex cc = least_squares_scalar(q * s * s, r);
    return {pack(sys, c, q, s, cc), g};
}

bool finite(const std::vector<Complex>& x) {
    return std::all_of(x.begin(), x.end(), [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

bool squarefree_numeric(const ComplexForm& f, const ClusterOptions& options) {
    if (f.is_zero()) return false;
    try {
        const auto roots = projective_roots(f);
        const auto clusters = cluster_roots(roots, options);
        return std::all_of(clusters.begin(), clusters.end(), [](const RootCluster& c) { return c.multiplicity == 1; });
    } catch (const AmbiguousClustering&) {
        return false;
    }
}

bool relatively_close(double a, double b, double rel) {
    if (!std::isfinite(a) || !std::isfinite(b)) return false;
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + std::numeric_limits<double>::min();
}

CertificateChecks recheck_with(const TangencySystem& sys, const Certificate& cert, const Tolerances& tol,
                               MultiplicityProfile* profile_out, double* residual_out, double* sv_out) {
    CertificateChecks ck;
    const ClusterOptions opts{tol.cluster, ClusterOptions{}.separation};
    const std::vector<Complex> x = pack(sys, cert.curve, cert.q, cert.s, cert.c);
    const double res = norm2(residual(sys, x));
    const double sv = jacobian_min_sv(sys, x, cert.gauge);
    if (residual_out) *residual_out = res;
    if (sv_out) *sv_out = sv;

    const bool gauged = cert.gauge.curve < sys.curve_size() && cert.gauge.q < 3 && cert.gauge.s < 2 * sys.n + 2 &&
                        x[cert.gauge.curve] == Complex(1.0, 0.0) && cert.q[cert.gauge.q] == Complex(1.0, 0.0) &&
                        cert.s[cert.gauge.s] == Complex(1.0, 0.0);

    ck.residual = res <= tol.residual && cert.residual_norm <= tol.residual;
    ck.jacobian = sv >= tol.jacobian && cert.jacobian_min_sv >= tol.jacobian;

    const MultiplicityProfile expected = MultiplicityProfile::from_alpha(std::vector<int>{2, static_cast<int>(2 * sys.n + 1)});
    MultiplicityProfile found;
    try {
        found = multiplicity_profile(restrict(sys.branch, cert.curve), opts);
    } catch (const AmbiguousClustering&) {
    }
    if (profile_out) *profile_out = found;
    ck.profile = found == expected;
    ck.irreducible = is_irreducible(cert.curve, tol.cluster);
    ck.not_square = found.total() > 0 && found.odd_count() > 0;

    if (cert.exact_curve) {
        const SeveriSpec spec = rational_family_spec(cert.m);
        const bool exact_member = membership_verify(sys.branch, *cert.exact_curve, spec);
        const bool matches = curve_distance(to_complex(*cert.exact_curve), cert.curve) < tol.cluster;
        ck.profile = ck.profile && exact_member && matches;
        ck.irreducible = ck.irreducible && is_irreducible(*cert.exact_curve);
        ck.not_square = ck.not_square && !is_square(restrict(sys.branch, *cert.exact_curve)).has_value();
    }

    ck.q_squarefree = squarefree_numeric(cert.q, opts);
    ck.q_coprime_s = numerically_coprime(cert.q, cert.s, tol.cluster);
    ck.consistent = gauged && relatively_close(res, cert.residual_norm, 1e-6) &&
                    relatively_close(sv, cert.jacobian_min_sv, 1e-6) && cert.profile == found &&
                    static_cast<std::int64_t>(cert.curve.n()) == cert.m - 1;
    return ck;
}

void fill_enriques(Certificate& cert) {
    const CyReport cy = cy_report(cert.m);
    cert.pa_enriques = cy.pa;
    cert.phi = cy.phi;
    cert.two_divisible = cy.two_divisible;
}

}  // namespace

std::string CertificateChecks::first_failure() const {
    if (!residual) return "residual";
    if (!jacobian) return "jacobian";
    if (!profile) return "profile";
    if (!irreducible) return "irreducible";
    if (!q_squarefree) return "q_squarefree";
    if (!q_coprime_s) return "q_coprime_s";
    if (!not_square) return "not_square";
    if (!consistent) return "consistent";
    return {};
}

TangencySystem build_system(const BiForm& b, std::size_t n) {
    if (b.d1() != 4 || b.d2() != 4) throw std::invalid_argument("branch curve must have bidegree (4,4)");
    const AdmissibilityReport report = check_branch_admissible(b);
    if (!report.admissible()) throw std::invalid_argument("branch curve is not admissible");
    return {b, n, b.max_abs_coeff()};
}

std::vector<Complex> pack(const TangencySystem& sys, const ComplexGraphCurve& curve, const ComplexForm& q,
                          const ComplexForm& s, Complex c) {
    if (curve.n() != sys.n || q.degree() != 2 || s.degree() != 2 * sys.n + 1) {
        throw std::invalid_argument("unknowns do not match the system degrees");
    }
    std::vector<Complex> x;
    x.reserve(sys.unknown_count());
    x.insert(x.end(), curve.A.coeffs().begin(), curve.A.coeffs().end());
    x.insert(x.end(), curve.Bc.coeffs().begin(), curve.Bc.coeffs().end());
    x.insert(x.end(), q.coeffs().begin(), q.coeffs().end());
    x.insert(x.end(), s.coeffs().begin(), s.coeffs().end());
    x.push_back(c);
    return x;
}

std::vector<Complex> residual(const TangencySystem& sys, const std::vector<Complex>& x) {
    const Unpacked u = unpack(sys, x);
    ComplexGraphCurve curve;
    curve.A = u.A;
    curve.Bc = u.Bc;
    const ComplexForm r = restrict_to(sys.branch, curve) * Complex(1.0 / sys.branch_scale, 0.0) - u.c * u.q * u.s * u.s;
    return {r.coeffs().begin(), r.coeffs().end()};
}

double jacobian_min_sv(const TangencySystem& sys, const std::vector<Complex>& x, const Gauge& gauge) {
    const CMatrix j = reduced_jacobian(sys, x, gauge);
    if (!j.allFinite()) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(j);
    return svd.singularValues().minCoeff();
}

std::optional<Certificate> polish(const TangencySystem& sys, std::vector<Complex> x, const Gauge& gauge,
                                  const SolverOptions& options, NewtonTrace* trace) {
    const std::vector<std::size_t> cols = free_columns(sys, gauge);
    std::vector<Complex> r = residual(sys, x);
    double norm = norm2(r);
    if (trace) trace->residual_norms.push_back(norm);
    int iterations = 0;
    bool converged = norm <= options.converge;
    while (!converged && iterations < options.max_iterations) {
        const CMatrix j = reduced_jacobian(sys, x, gauge);
        CVector rhs(static_cast<Eigen::Index>(r.size()));
        for (std::size_t i = 0; i < r.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = -r[i];
        const CVector dx = j.partialPivLu().solve(rhs);
        if (!dx.allFinite()) break;

        double t = 1.0;
        bool accepted = false;
        std::vector<Complex> trial;
        std::vector<Complex> trial_r;
        double trial_norm = 0.0;
        while (t >= 1e-10) {
            trial = x;
            for (std::size_t k = 0; k < cols.size(); ++k) trial[cols[k]] += t * dx(static_cast<Eigen::Index>(k));
            trial_r = residual(sys, trial);
            trial_norm = norm2(trial_r);
            if (std::isfinite(trial_norm) && trial_norm <= (1.0 - 1e-4 * t) * norm) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        ++iterations;
        if (!accepted) break;
        x = std::move(trial);
        r = std::move(trial_r);
        norm = trial_norm;
        if (trace) trace->residual_norms.push_back(norm);
        if (!finite(x) || norm2(x) > 1e8) break;
        converged = norm <= options.converge;
    }
    if (trace) trace->converged = converged;
    if (!finite(x) || norm > options.tolerances.residual) return std::nullopt;

    const Unpacked u = unpack(sys, x);
    Certificate cert;
    cert.m = static_cast<std::int64_t>(sys.n) + 1;
    cert.branch = sys.branch;
    cert.curve = ComplexGraphCurve(u.A, u.Bc);
    cert.q = u.q;
    cert.s = u.s;
    cert.c = u.c;
    cert.gauge = gauge;
    cert.iterations = iterations;
    cert.tolerances = options.tolerances;
    cert.residual_norm = norm;
    cert.jacobian_min_sv = jacobian_min_sv(sys, x, gauge);
    MultiplicityProfile found;
    cert.checks = recheck_with(sys, cert, options.tolerances, &found, nullptr, nullptr);
    cert.profile = found;
    cert.checks.consistent = true;
    if (!cert.checks.all()) return std::nullopt;
    cert.tangency = analyze(sys.branch, cert.curve, ClusterOptions{options.tolerances.cluster, ClusterOptions{}.separation});
    fill_enriques(cert);
    return cert;
}

std::optional<Certificate> newton_solve(const TangencySystem& sys, std::uint64_t seed, const SolverOptions& options,
                                        NewtonTrace* trace) {
    Rng rng(seed);
    Start start;
    try {
        start = random_start(sys, rng, options.sigma_symmetric_starts);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    std::optional<Certificate> cert = polish(sys, std::move(start.x), start.gauge, options, trace);
    if (cert) cert->rng_seed = seed;
    return cert;
}

CertificateChecks recheck(const Certificate& cert, const Tolerances& tol) {
    try {
        if (cert.m < 1) return {};
        const TangencySystem sys = build_system(cert.branch, cert.n());
        MultiplicityProfile found;
        return recheck_with(sys, cert, tol, &found, nullptr, nullptr);
    } catch (const std::exception&) {
        return {};
    }
}

bool certify(const Certificate& cert, const Tolerances& tol) { return recheck(cert, tol).all(); }

Certificate sigma_act(const Certificate& cert) {
    Certificate out = cert;
    ComplexGraphCurve curve = enrcurve::sigma_act(cert.curve);
    std::vector<Complex> flat(curve.A.coeffs().begin(), curve.A.coeffs().end());
    flat.insert(flat.end(), curve.Bc.coeffs().begin(), curve.Bc.coeffs().end());
    const Complex pivot = flat[cert.gauge.curve];
    curve = ComplexGraphCurve(divided(curve.A, pivot), divided(curve.Bc, pivot));
    const std::size_t n = cert.n();
    (cert.gauge.curve <= n ? curve.A[cert.gauge.curve] : curve.Bc[cert.gauge.curve - n - 1]) = Complex(1.0, 0.0);
    ComplexForm q = twist_y1(cert.q);
    ComplexForm s = twist_y1(cert.s);
    const Complex qp = q[cert.gauge.q];
    const Complex sp = s[cert.gauge.s];
    q = divided(q, qp);
    s = divided(s, sp);
    q[cert.gauge.q] = Complex(1.0, 0.0);
    s[cert.gauge.s] = Complex(1.0, 0.0);
    // restrict(B, sigma C)(y) = restrict(B, C)(y0, -y1) when B is sigma-invariant;
    // the curve pivot is +-1 and enters to the fourth power.
    out.c = cert.c * qp * sp * sp;
    out.curve = curve;
    out.q = q;
    out.s = s;
    if (cert.exact_curve) out.exact_curve = enrcurve::sigma_act(*cert.exact_curve);

    const TangencySystem sys = build_system(cert.branch, cert.n());
    const std::vector<Complex> x = pack(sys, out.curve, out.q, out.s, out.c);
    out.residual_norm = norm2(residual(sys, x));
    out.jacobian_min_sv = jacobian_min_sv(sys, x, out.gauge);
    MultiplicityProfile found;
    out.checks = recheck_with(sys, out, out.tolerances, &found, nullptr, nullptr);
    out.profile = found;
    try {
        out.tangency = analyze(sys.branch, out.curve, ClusterOptions{out.tolerances.cluster, ClusterOptions{}.separation});
    } catch (const AmbiguousClustering&) {
    }
    return out;
}

double curve_distance(const ComplexGraphCurve& a, const ComplexGraphCurve& b) {
    if (a.n() != b.n()) return 1.0;
    Complex overlap{};
    double na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i <= a.n(); ++i) {
        overlap += std::conj(a.A[i]) * b.A[i] + std::conj(a.Bc[i]) * b.Bc[i];
        na += std::norm(a.A[i]) + std::norm(a.Bc[i]);
        nb += std::norm(b.A[i]) + std::norm(b.Bc[i]);
    }
    const double cos2 = std::norm(overlap) / (na * nb);
    return std::sqrt(std::max(0.0, 1.0 - cos2));
}

}  // namespace enrcurve
