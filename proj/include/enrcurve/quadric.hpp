#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "enrcurve/forms.hpp"

namespace enrcurve {

/// Class O_Q(a, b) on Q = P^1 x P^1, the bidegree of a defining form;
/// (1,0) is a line x = const.
struct DivisorClass {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend DivisorClass operator+(DivisorClass l, DivisorClass r) { return {l.a + r.a, l.b + r.b}; }
    friend DivisorClass operator*(std::int64_t s, DivisorClass c) { return {s * c.a, s * c.b}; }
    friend bool operator==(DivisorClass, DivisorClass) = default;
};

inline constexpr DivisorClass kCanonicalQ{-2, -2};
inline constexpr DivisorClass kBranchClass{4, 4};

/// (a,b).(c,d) = ad + bc
constexpr std::int64_t intersect(DivisorClass x, DivisorClass y) { return x.a * y.b + x.b * y.a; }
/// Adjunction with K_Q = (-2,-2): (a-1)(b-1).
std::int64_t arithmetic_genus(DivisorClass c);

/// Bihomogeneous form of bidegree (d1, d2) in x = (x0:x1), y = (y0:y1).
/// Stored densely: coeff(j, l) multiplies x0^(d1-j) x1^j y0^(d2-l) y1^l.
class BiForm {
public:
    struct Monomial {
        int i, j, k, l;  // exponents of x0, x1, y0, y1
        Rational coeff;
    };

    BiForm() : BiForm(0, 0) {}
    BiForm(int d1, int d2);
    /// Validates exponent sums and rejects duplicate monomials.
    static BiForm from_monomials(int d1, int d2, const std::vector<Monomial>& monomials);

    int d1() const { return d1_; }
    int d2() const { return d2_; }
    DivisorClass divisor_class() const { return {d1_, d2_}; }

    const Rational& coeff(int j, int l) const { return coeffs_[index(j, l)]; }
    Rational& coeff(int j, int l) { return coeffs_[index(j, l)]; }
    /// Nonzero monomials in (j, l) lexicographic order.
    std::vector<Monomial> monomials() const;
    bool is_zero() const;

    template <class T>
    T operator()(const T& x0, const T& x1, const T& y0, const T& y1) const;

    BiForm scaled(const Rational& s) const;
    /// Largest |coefficient| as a double; used for numeric normalization.
    double max_abs_coeff() const;

    friend bool operator==(const BiForm&, const BiForm&) = default;

private:
    std::size_t index(int j, int l) const { return static_cast<std::size_t>(j * (d2_ + 1) + l); }
    int d1_;
    int d2_;
    std::vector<Rational> coeffs_;
};

/// Member of |O_Q(1, n)|: zero locus of x0 * A(y) + x1 * Bc(y), with A and
/// Bc binary forms of degree n. Parametrized by y -> ((Bc(y) : -A(y)), y).
template <class Coeff>
struct BasicGraphCurve {
    Form<Coeff> A;
    Form<Coeff> Bc;

    BasicGraphCurve() = default;
    BasicGraphCurve(Form<Coeff> a, Form<Coeff> b) : A(std::move(a)), Bc(std::move(b)) {
        if (A.degree() != Bc.degree()) throw std::invalid_argument("graph curve forms must share a degree");
        if (A.is_zero() && Bc.is_zero()) throw std::invalid_argument("graph curve forms cannot both vanish");
    }

    std::size_t n() const { return A.degree(); }
    DivisorClass divisor_class() const { return {1, static_cast<std::int64_t>(A.degree())}; }
};

using GraphCurve = BasicGraphCurve<Rational>;
using ComplexGraphCurve = BasicGraphCurve<Complex>;

/// The line x = (alpha0 : alpha1), as the n = 0 curve (A, Bc) = (alpha1, -alpha0).
template <class Coeff>
BasicGraphCurve<Coeff> line_curve(const Coeff& alpha0, const Coeff& alpha1) {
    return {Form<Coeff>::constant(alpha1), Form<Coeff>::constant(-alpha0)};
}

ComplexGraphCurve to_complex(const GraphCurve& c);

/// gcd(A, Bc) is constant.
bool is_irreducible(const GraphCurve& c);
bool is_irreducible(const ComplexGraphCurve& c, double tolerance);

/// sigma((x0:x1),(y0:y1)) = ((x0:-x1),(y0:-y1)).
BiForm sigma_act(const BiForm& b);

template <class Coeff>
BasicGraphCurve<Coeff> sigma_act(const BasicGraphCurve<Coeff>& c) {
    // sigma(C) = { x0 A(y0,-y1) - x1 Bc(y0,-y1) = 0 }
    return {twist_y1(c.A), -twist_y1(c.Bc)};
}

struct FixedPointHit {
    int x_index;  // 0 -> x = (1:0), 1 -> x = (0:1)
    int y_index;
    std::string describe() const;
};

enum class SmoothnessMethod { exact, numeric };

struct AdmissibilityReport {
    bool sigma_invariant = false;
    bool avoids_fixed_points = false;
    std::vector<FixedPointHit> fixed_point_hits;
    bool smooth = false;
    SmoothnessMethod smoothness_method = SmoothnessMethod::exact;
    std::string smoothness_detail;

    bool admissible() const { return sigma_invariant && avoids_fixed_points && smooth; }
};

/// Requires bidegree (4,4).
AdmissibilityReport check_branch_admissible(const BiForm& b);

/// Smoothness alone: no common zero of B and its partials. Per affine chart
/// the two resultants Res_v(F, F_v), Res_v(F, F_u) must be coprime; when
/// they are not, candidate points are inspected numerically.
bool is_smooth(const BiForm& b, SmoothnessMethod* method = nullptr, std::string* detail = nullptr);

/// Pullback of B along the parametrization of C: a form of degree d2 + d1 * n.
template <class Coeff>
Form<Coeff> restrict_to(const BiForm& b, const BasicGraphCurve<Coeff>& c);

/// Exact restriction; throws std::domain_error if C lies in B.
BinaryForm restrict(const BiForm& b, const GraphCurve& c);
ComplexForm restrict(const BiForm& b, const ComplexGraphCurve& c);

/// Uniformly random sigma-invariant (4,4) form with small integer coefficients
/// that passes check_branch_admissible. Deterministic in the seed.
BiForm random_admissible_branch(std::uint64_t seed, int coeff_bound = 5);

// ---------------------------------------------------------------------------

template <class T>
T BiForm::operator()(const T& x0, const T& x1, const T& y0, const T& y1) const {
    T total = T(0);
    for (int j = 0; j <= d1_; ++j) {
        T xpart = T(1);
        for (int e = 0; e < d1_ - j; ++e) xpart = xpart * x0;
        for (int e = 0; e < j; ++e) xpart = xpart * x1;
        for (int l = 0; l <= d2_; ++l) {
            const Rational& c = coeff(j, l);
            if (sgn(c) == 0) continue;
            T ypart = T(1);
            for (int e = 0; e < d2_ - l; ++e) ypart = ypart * y0;
            for (int e = 0; e < l; ++e) ypart = ypart * y1;
            total = total + coerce<T>(c) * xpart * ypart;
        }
    }
    return total;
}

template <class Coeff>
Form<Coeff> restrict_to(const BiForm& b, const BasicGraphCurve<Coeff>& c) {
    const std::size_t n = c.n();
    const int d1 = b.d1();
    const int d2 = b.d2();
    const Form<Coeff> x0 = c.Bc;
    const Form<Coeff> x1 = -c.A;
    std::vector<Form<Coeff>> p0{Form<Coeff>::constant(Coeff(1))};
    std::vector<Form<Coeff>> p1{Form<Coeff>::constant(Coeff(1))};
    for (int e = 1; e <= d1; ++e) {
        p0.push_back(p0.back() * x0);
        p1.push_back(p1.back() * x1);
    }
    Form<Coeff> out(static_cast<std::size_t>(d2) + static_cast<std::size_t>(d1) * n);
    for (int j = 0; j <= d1; ++j) {
        // Accumulate the y-part first: sum_l coeff(j,l) y0^(d2-l) y1^l.
        Form<Coeff> ypart(static_cast<std::size_t>(d2));
        bool any = false;
        for (int l = 0; l <= d2; ++l) {
            if (sgn(b.coeff(j, l)) == 0) continue;
            ypart[static_cast<std::size_t>(l)] = coerce<Coeff>(b.coeff(j, l));
            any = true;
        }
        if (!any) continue;
        out += p0[static_cast<std::size_t>(d1 - j)] * p1[static_cast<std::size_t>(j)] * ypart;
    }
    return out;
}

}  // namespace enrcurve
