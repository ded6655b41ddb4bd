#include <algorithm>
#include <cmath>
#include <limits>

#include "enrcurve/seeker.hpp"
#include "enrcurve/severi.hpp"

namespace enrcurve {

namespace {

constexpr std::size_t kPencilDegree = 24;

BinaryForm pencil_quartic(const BiForm& b, const Rational& t) {
    // x = (1 : t): coefficient of y0^(4-l) y1^l is sum_j b(j, l) t^j.
    BinaryForm quartic(static_cast<std::size_t>(b.d2()));
    for (int l = 0; l <= b.d2(); ++l) {
        Rational acc = 0;
        Rational tp = 1;
        for (int j = 0; j <= b.d1(); ++j) {
            acc += b.coeff(j, l) * tp;
            tp *= t;
        }
        quartic[static_cast<std::size_t>(l)] = acc;
    }
    return quartic;
}

// Convergents of x with denominators up to max_den.
std::vector<Rational> convergents(double x, long max_den) {
    std::vector<Rational> out;
    if (!std::isfinite(x) || std::abs(x) > 1e12) return out;
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
    mpz_class k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    out.emplace_back(h, k);
    for (int step = 0; step < 40 && frac > 1e-15; ++step) {
        const double inv = 1.0 / frac;
        const double a_d = std::floor(inv);
        if (a_d > 1e12) break;
        const mpz_class a = static_cast<long>(a_d);
        frac = inv - a_d;
        mpz_class h_next = a * h + h_prev;
        mpz_class k_next = a * k + k_prev;
        if (cmp(k_next, max_den) > 0) break;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
        out.emplace_back(h, k);
    }
    for (auto& r : out) r.canonicalize();
    return out;
}

// An exact rational point of P^1 where f vanishes, if the float root is one.
std::optional<std::array<Rational, 2>> rational_root(const BinaryForm& f, const ProjectivePoint& p) {
    const bool chart0 = std::abs(p.z0) >= std::abs(p.z1);
    const Complex t = chart0 ? p.z1 / p.z0 : p.z0 / p.z1;
    if (std::abs(t.imag()) > 1e-8 * std::max(1.0, std::abs(t))) return std::nullopt;
    for (const Rational& r : convergents(t.real(), 1000000)) {
        // Early convergents can be other rational roots of f.
        if (std::abs(r.get_d() - t.real()) > 1e-8 * std::max(1.0, std::abs(t))) continue;
        std::array<Rational, 2> alpha = chart0 ? std::array<Rational, 2>{Rational(1), r} : std::array<Rational, 2>{r, Rational(1)};
        if (is_zero(f(alpha[0], alpha[1]))) return alpha;
    }
    return std::nullopt;
}

std::optional<Certificate> line_certificate(const TangencySystem& sys, const ProjectivePoint& alpha, const SolverOptions& options) {
    ComplexGraphCurve line = line_curve(alpha.z0, alpha.z1);
    Gauge g;
    g.curve = std::abs(line.A[0]) >= std::abs(line.Bc[0]) ? 0 : 1;
    const Complex pivot = g.curve == 0 ? line.A[0] : line.Bc[0];
    line = ComplexGraphCurve(line.A * (Complex(1.0, 0.0) / pivot), line.Bc * (Complex(1.0, 0.0) / pivot));
    (g.curve == 0 ? line.A[0] : line.Bc[0]) = Complex(1.0, 0.0);

    const ComplexForm r = restrict(sys.branch, line) * Complex(1.0 / sys.branch_scale, 0.0);
    std::vector<ProjectivePoint> roots = projective_roots(r);
    if (roots.size() != 4) return std::nullopt;
    // The closest pair is the tangency point.
    std::size_t bi = 0, bj = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            const double d = chordal_distance(roots[i], roots[j]);
            if (d < best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    auto linear = [](const ProjectivePoint& p) { return ComplexForm::linear(p.z1, -p.z0); };
    ComplexForm s = linear(roots[bi]);
    ComplexForm q = ComplexForm::constant(Complex(1.0, 0.0));
    for (std::size_t i = 0; i < 4; ++i) {
        if (i != bi && i != bj) q = q * linear(roots[i]);
    }
    g.q = std::abs(q[0]) >= std::abs(q[1]) ? (std::abs(q[0]) >= std::abs(q[2]) ? 0 : 2) : (std::abs(q[1]) >= std::abs(q[2]) ? 1 : 2);
    g.s = std::abs(s[0]) >= std::abs(s[1]) ? 0 : 1;
    q = q * (Complex(1.0, 0.0) / q[g.q]);
    s = s * (Complex(1.0, 0.0) / s[g.s]);
    q[g.q] = Complex(1.0, 0.0);
    s[g.s] = Complex(1.0, 0.0);
    const ComplexForm basis = q * s * s;
    Complex num{}, den{};
    for (std::size_t i = 0; i <= basis.degree(); ++i) {
        num += std::conj(basis[i]) * r[i];
        den += std::norm(basis[i]);
    }
    return polish(sys, pack(sys, line, q, s, num / den), g, options);
}

}  // namespace

BinaryForm pencil_discriminant(const BiForm& b) {
    if (b.d1() != 4 || b.d2() != 4) throw std::invalid_argument("pencil discriminant needs bidegree (4,4)");
    std::vector<Rational> xs, ys;
    for (std::size_t k = 0; k <= kPencilDegree; ++k) {
        const Rational t(static_cast<long>(k));
        xs.push_back(t);
        ys.push_back(discriminant(pencil_quartic(b, t)));
    }
    return homogenize(interpolate(xs, ys), kPencilDegree);
}

TangentLineReport exact_tangent_lines(const BiForm& b, const SolverOptions& options) {
    const TangencySystem sys = build_system(b, 0);
    TangentLineReport report;
    report.discriminant = pencil_discriminant(b);
    if (report.discriminant.is_zero()) {
        throw std::domain_error("pencil discriminant vanishes identically: non-reduced restriction along every line");
    }
    const SquarefreeDecomposition sqf = squarefree_decomposition(report.discriminant);
    for (const SquarefreeFactor& factor : sqf.factors) {
        if (factor.factor.degree() == 0) continue;
        for (const ProjectivePoint& p : projective_roots(to_complex(factor.factor))) {
            report.roots.push_back({p, factor.multiplicity, 0.0});
        }
    }
    const SeveriSpec spec = rational_family_spec(1);
    for (const RootCluster& root : report.roots) {
        std::optional<Certificate> cert;
        try {
            cert = line_certificate(sys, root.center, options);
        } catch (const std::exception&) {
            continue;
        }
        if (!cert) continue;
        TangentLine line;
        line.alpha = ProjectivePoint::from(-cert->curve.Bc[0], cert->curve.A[0]);
        line.exact_alpha = rational_root(report.discriminant, line.alpha);
        if (line.exact_alpha) {
            const GraphCurve exact = line_curve((*line.exact_alpha)[0], (*line.exact_alpha)[1]);
            if (membership_verify(b, exact, spec)) {
                cert->exact_curve = exact;
                cert->checks = recheck(*cert, cert->tolerances);
            } else {
                line.exact_alpha.reset();
            }
        }
        line.certificate = std::move(*cert);
        report.lines.push_back(std::move(line));
    }
    return report;
}

}  // namespace enrcurve
