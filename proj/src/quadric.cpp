#include "enrcurve/quadric.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "enrcurve/rng.hpp"
#include "enrcurve/roots.hpp"

namespace enrcurve {

std::int64_t arithmetic_genus(DivisorClass c) {
    if (c.a < 0 || c.b < 0) throw std::invalid_argument("arithmetic_genus needs an effective class");
    return (c.a - 1) * (c.b - 1);
}

BiForm::BiForm(int d1, int d2) : d1_(d1), d2_(d2) {
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("negative bidegree");
    coeffs_.resize(static_cast<std::size_t>((d1 + 1) * (d2 + 1)));
}

BiForm BiForm::from_monomials(int d1, int d2, const std::vector<Monomial>& monomials) {
    BiForm out(d1, d2);
    std::set<std::pair<int, int>> seen;
    for (const auto& m : monomials) {
        if (m.i < 0 || m.j < 0 || m.k < 0 || m.l < 0 || m.i + m.j != d1 || m.k + m.l != d2) {
            std::ostringstream msg;
            msg << "monomial exponents (" << m.i << "," << m.j << "," << m.k << "," << m.l
                << ") do not match bidegree (" << d1 << "," << d2 << ")";
            throw std::invalid_argument(msg.str());
        }
        if (!seen.insert({m.j, m.l}).second) {
            std::ostringstream msg;
            msg << "duplicate monomial (" << m.i << "," << m.j << "," << m.k << "," << m.l << ")";
            throw std::invalid_argument(msg.str());
        }
        out.coeff(m.j, m.l) = m.coeff;
    }
    return out;
}

std::vector<BiForm::Monomial> BiForm::monomials() const {
    std::vector<Monomial> out;
    for (int j = 0; j <= d1_; ++j) {
        for (int l = 0; l <= d2_; ++l) {
            if (sgn(coeff(j, l)) != 0) out.push_back({d1_ - j, j, d2_ - l, l, coeff(j, l)});
        }
    }
    return out;
}

bool BiForm::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

BiForm BiForm::scaled(const Rational& s) const {
    BiForm out = *this;
    for (auto& c : out.coeffs_) c *= s;
    return out;
}

double BiForm::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c.get_d()));
    return m;
}

ComplexGraphCurve to_complex(const GraphCurve& c) { return {to_complex(c.A), to_complex(c.Bc)}; }

bool is_irreducible(const GraphCurve& c) {
    const BinaryForm g = gcd(c.A, c.Bc);
    return g.degree() == 0 && !g.is_zero();
}

bool is_irreducible(const ComplexGraphCurve& c, double tolerance) {
    if (c.n() == 0) return !(c.A.is_zero() && c.Bc.is_zero());
    return numerically_coprime(c.A, c.Bc, tolerance);
}

BiForm sigma_act(const BiForm& b) {
    BiForm out = b;
    for (int j = 0; j <= b.d1(); ++j) {
        for (int l = 0; l <= b.d2(); ++l) {
            if ((j + l) % 2 != 0) out.coeff(j, l) = -b.coeff(j, l);
        }
    }
    return out;
}

std::string FixedPointHit::describe() const {
    auto point = [](int idx) { return idx == 0 ? std::string("(1:0)") : std::string("(0:1)"); };
    return "B vanishes at the sigma-fixed point (" + point(x_index) + ", " + point(y_index) + ")";
}

namespace {

// F(u, v) in one affine chart, F[pu][pv].
using Bivariate = std::vector<std::vector<Rational>>;

Bivariate chart_form(const BiForm& b, int x_chart, int y_chart) {
    Bivariate f(static_cast<std::size_t>(b.d1() + 1), std::vector<Rational>(static_cast<std::size_t>(b.d2() + 1)));
    for (int j = 0; j <= b.d1(); ++j) {
        for (int l = 0; l <= b.d2(); ++l) {
            const int pu = x_chart == 0 ? j : b.d1() - j;
            const int pv = y_chart == 0 ? l : b.d2() - l;
            f[static_cast<std::size_t>(pu)][static_cast<std::size_t>(pv)] = b.coeff(j, l);
        }
    }
    return f;
}

Bivariate d_du(const Bivariate& f) {
    Bivariate out(f.size() - 1, std::vector<Rational>(f[0].size()));
    for (std::size_t pu = 1; pu < f.size(); ++pu) {
        for (std::size_t pv = 0; pv < f[pu].size(); ++pv) out[pu - 1][pv] = f[pu][pv] * static_cast<long>(pu);
    }
    if (out.empty()) out.assign(1, std::vector<Rational>(f[0].size()));
    return out;
}

Bivariate d_dv(const Bivariate& f) {
    const std::size_t nv = f[0].size();
    Bivariate out(f.size(), std::vector<Rational>(nv > 1 ? nv - 1 : 1));
    for (std::size_t pu = 0; pu < f.size(); ++pu) {
        for (std::size_t pv = 1; pv < nv; ++pv) out[pu][pv - 1] = f[pu][pv] * static_cast<long>(pv);
    }
    return out;
}

// Coefficients in v of F(u0, v) at formal degree, as a binary form in (w, v).
BinaryForm specialize_u(const Bivariate& f, const Rational& u0) {
    BinaryForm out(f[0].size() - 1);
    for (std::size_t pv = 0; pv < f[0].size(); ++pv) {
        Rational acc = 0;
        for (std::size_t pu = f.size(); pu-- > 0;) acc = acc * u0 + f[pu][pv];
        out[pv] = acc;
    }
    return out;
}

std::vector<Complex> specialize_u_complex(const Bivariate& f, Complex u0) {
    std::vector<Complex> out(f[0].size());
    for (std::size_t pv = 0; pv < f[0].size(); ++pv) {
        Complex acc{};
        for (std::size_t pu = f.size(); pu-- > 0;) acc = acc * u0 + f[pu][pv].get_d();
        out[pv] = acc;
    }
    return out;
}

Complex eval_complex(const Bivariate& f, Complex u, Complex v) {
    Complex acc{};
    for (std::size_t pu = f.size(); pu-- > 0;) {
        Complex row{};
        for (std::size_t pv = f[pu].size(); pv-- > 0;) row = row * v + f[pu][pv].get_d();
        acc = acc * u + row;
    }
    return acc;
}

double abs_scale(const Bivariate& f, Complex u, Complex v) {
    double s = 0.0;
    const double au = std::abs(u), av = std::abs(v);
    for (std::size_t pu = 0; pu < f.size(); ++pu) {
        for (std::size_t pv = 0; pv < f[pu].size(); ++pv) {
            s += std::abs(f[pu][pv].get_d()) * std::pow(au, static_cast<double>(pu)) * std::pow(av, static_cast<double>(pv));
        }
    }
    return s;
}

// Res_v(f, g) as a polynomial in u, by evaluation at integer nodes.
Polynomial eliminant(const Bivariate& f, const Bivariate& g) {
    const std::size_t dv_f = f[0].size() - 1, dv_g = g[0].size() - 1;
    const std::size_t du_f = f.size() - 1, du_g = g.size() - 1;
    const std::size_t bound = dv_g * du_f + dv_f * du_g;
    std::vector<Rational> xs, ys;
    for (std::size_t k = 0; k <= bound; ++k) {
        Rational u0(static_cast<long>(k) - static_cast<long>(bound / 2));
        xs.push_back(u0);
        ys.push_back(resultant(specialize_u(f, u0), specialize_u(g, u0)));
    }
    return interpolate(xs, ys);
}

Polynomial squarefree_part(const Polynomial& p) {
    Polynomial out = Polynomial::constant(1);
    for (const auto& [g, _] : yun_squarefree(p)) out = out * g;
    return out;
}

constexpr double kNumericSingularTol = 1e-7;

}  // namespace

namespace {

bool smooth_impl(const BiForm& b, SmoothnessMethod& used, std::string* detail) {
    used = SmoothnessMethod::exact;
    if (b.is_zero()) {
        if (detail) *detail = "zero form";
        return false;
    }
    for (int xc = 0; xc < 2; ++xc) {
        for (int yc = 0; yc < 2; ++yc) {
            const Bivariate f = chart_form(b, xc, yc);
            const Bivariate fu = d_du(f);
            const Bivariate fv = d_dv(f);
            const Polynomial r1 = eliminant(f, fv);
            const Polynomial r2 = eliminant(f, fu);
            std::ostringstream where;
            where << "chart (x" << xc << "=1, y" << yc << "=1)";
            if (r1.is_zero() || r2.is_zero()) {
                // F shares a factor with a partial: B is non-reduced or contains a ruling line.
                if (detail) *detail = "vanishing eliminant in " + where.str();
                return false;
            }
            const Polynomial g = gcd(r1, r2);
            if (g.degree() < 1) continue;

            // Candidate abscissae exist; decide numerically.
            used = SmoothnessMethod::numeric;
            const Polynomial sq = squarefree_part(g);
            ComplexForm gc(static_cast<std::size_t>(sq.degree()));
            for (int i = 0; i <= sq.degree(); ++i) gc[static_cast<std::size_t>(i)] = Complex(sq.coeff(i).get_d(), 0.0);
            for (const auto& pu : projective_roots(gc)) {
                if (std::abs(pu.z0) < 1e-12) continue;  // u at infinity: other chart
                const Complex u0 = pu.z1 / pu.z0;
                const auto fv_coeffs = specialize_u_complex(f, u0);
                ComplexForm fu0(fv_coeffs.size() - 1);
                for (std::size_t i = 0; i < fv_coeffs.size(); ++i) fu0[i] = fv_coeffs[i];
                if (fu0.is_zero()) continue;
                for (const auto& pv : projective_roots(fu0)) {
                    if (std::abs(pv.z0) < 1e-12) continue;
                    const Complex v0 = pv.z1 / pv.z0;
                    const double scale = std::max(abs_scale(f, u0, v0), 1e-300);
                    const double gu = std::abs(eval_complex(fu, u0, v0)) / scale;
                    const double gv = std::abs(eval_complex(fv, u0, v0)) / scale;
                    if (gu < kNumericSingularTol && gv < kNumericSingularTol) {
                        if (detail) {
                            std::ostringstream msg;
                            msg << "singular point near (u, v) = (" << u0 << ", " << v0 << ") in " << where.str();
                            *detail = msg.str();
                        }
                        return false;
                    }
                }
            }
        }
    }
    if (detail) *detail = used == SmoothnessMethod::numeric ? "smooth (numeric decision)" : "smooth (coprime eliminants)";
    return true;
}

}  // namespace

bool is_smooth(const BiForm& b, SmoothnessMethod* method, std::string* detail) {
    SmoothnessMethod used = SmoothnessMethod::exact;
    const bool smooth = smooth_impl(b, used, detail);
    if (method) *method = used;
    return smooth;
}

AdmissibilityReport check_branch_admissible(const BiForm& b) {
    if (b.d1() != 4 || b.d2() != 4) throw std::invalid_argument("branch curve must have bidegree (4,4)");
    AdmissibilityReport report;
    report.sigma_invariant = true;
    for (int j = 0; j <= 4; ++j) {
        for (int l = 0; l <= 4; ++l) {
            if ((j + l) % 2 != 0 && sgn(b.coeff(j, l)) != 0) report.sigma_invariant = false;
        }
    }
    // B((1:0),(1:0)) is the x0^4 y0^4 coefficient, and so on.
    for (int xi = 0; xi < 2; ++xi) {
        for (int yi = 0; yi < 2; ++yi) {
            if (sgn(b.coeff(4 * xi, 4 * yi)) == 0) report.fixed_point_hits.push_back({xi, yi});
        }
    }
    report.avoids_fixed_points = report.fixed_point_hits.empty();
    report.smooth = is_smooth(b, &report.smoothness_method, &report.smoothness_detail);
    return report;
}

BinaryForm restrict(const BiForm& b, const GraphCurve& c) {
    BinaryForm r = restrict_to(b, c);
    if (r.is_zero()) throw std::domain_error("restriction vanishes identically: the curve lies in the branch locus");
    return r;
}

ComplexForm restrict(const BiForm& b, const ComplexGraphCurve& c) { return restrict_to(b, c); }

BiForm random_admissible_branch(std::uint64_t seed, int coeff_bound) {
    Rng rng(seed);
    for (;;) {
        BiForm b(4, 4);
        for (int j = 0; j <= 4; ++j) {
            for (int l = 0; l <= 4; ++l) {
                if ((j + l) % 2 != 0) continue;
                std::int64_t v = 0;
                const bool corner = (j == 0 || j == 4) && (l == 0 || l == 4);
                do {
                    v = rng.uniform_int(-coeff_bound, coeff_bound);
                } while (corner && v == 0);
                b.coeff(j, l) = Rational(static_cast<long>(v));
            }
        }
        if (check_branch_admissible(b).admissible()) return b;
    }
}

}  // namespace enrcurve
