#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "enrcurve/rational.hpp"
#include "enrcurve/univariate.hpp"

namespace enrcurve {

/// Binary form of fixed degree d in (y0, y1). Coefficient i multiplies
/// y0^(d-i) * y1^i, so the vector runs from y0^d to y1^d.
template <class Coeff>
class Form {
public:
    Form() : coeffs_(1) {}
    explicit Form(std::size_t degree) : coeffs_(degree + 1) {}
    explicit Form(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("binary form needs degree+1 coefficients");
    }

    static Form constant(const Coeff& c) { return Form(std::vector<Coeff>{c}); }
    static Form monomial(std::size_t degree, std::size_t y1_power, const Coeff& c = Coeff(1)) {
        Form f(degree);
        f.coeffs_.at(y1_power) = c;
        return f;
    }
    static Form y0() { return Form(std::vector<Coeff>{Coeff(1), Coeff(0)}); }
    static Form y1() { return Form(std::vector<Coeff>{Coeff(0), Coeff(1)}); }
    /// a*y0 + b*y1
    static Form linear(const Coeff& a, const Coeff& b) { return Form(std::vector<Coeff>{a, b}); }

    std::size_t degree() const { return coeffs_.size() - 1; }
    std::span<const Coeff> coeffs() const { return coeffs_; }
    const Coeff& operator[](std::size_t i) const { return coeffs_[i]; }
    Coeff& operator[](std::size_t i) { return coeffs_[i]; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return enrcurve::is_zero(c); });
    }

    template <class T>
    T operator()(const T& y0, const T& y1) const {
        // Horner in y1, carrying the y0 powers along; valid at y0 == 0 too.
        const std::size_t d = degree();
        T acc = coerce<T>(coeffs_[d]);
        T y0_power = T(1);
        for (std::size_t i = d; i-- > 0;) {
            y0_power = y0_power * y0;
            acc = acc * y1 + coerce<T>(coeffs_[i]) * y0_power;
        }
        return acc;
    }

    Form& operator+=(const Form& rhs) {
        require_same_degree(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    Form& operator-=(const Form& rhs) {
        require_same_degree(rhs);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }
    Form& operator*=(const Coeff& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    Form operator-() const {
        Form out = *this;
        for (auto& c : out.coeffs_) c = -c;
        return out;
    }

    friend Form operator+(Form lhs, const Form& rhs) { return lhs += rhs; }
    friend Form operator-(Form lhs, const Form& rhs) { return lhs -= rhs; }
    friend Form operator*(Form lhs, const Coeff& s) { return lhs *= s; }
    friend Form operator*(const Coeff& s, Form rhs) { return rhs *= s; }
    friend Form operator*(const Form& lhs, const Form& rhs) {
        Form out(lhs.degree() + rhs.degree());
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
            if (enrcurve::is_zero(lhs.coeffs_[i])) continue;
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
        return out;
    }
    friend bool operator==(const Form& lhs, const Form& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
    void require_same_degree(const Form& rhs) const {
        if (rhs.degree() != degree()) throw std::invalid_argument("adding binary forms of different degree");
    }
    std::vector<Coeff> coeffs_;
};

using BinaryForm = Form<Rational>;
using ComplexForm = Form<Complex>;

template <class Coeff>
Form<Coeff> power(const Form<Coeff>& f, std::size_t e) {
    Form<Coeff> r = Form<Coeff>::constant(Coeff(1));
    for (std::size_t k = 0; k < e; ++k) r = r * f;
    return r;
}

/// y0 -> y0, y1 -> -y1
template <class Coeff>
Form<Coeff> twist_y1(const Form<Coeff>& f) {
    Form<Coeff> out = f;
    for (std::size_t i = 1; i < out.degree() + 1; i += 2) out[i] = -out[i];
    return out;
}

template <class Coeff>
Form<Coeff> partial_y0(const Form<Coeff>& f) {
    if (f.degree() == 0) return Form<Coeff>(0);
    Form<Coeff> out(f.degree() - 1);
    for (std::size_t i = 0; i < f.degree(); ++i) out[i] = f[i] * Coeff(static_cast<long>(f.degree() - i));
    return out;
}

template <class Coeff>
Form<Coeff> partial_y1(const Form<Coeff>& f) {
    if (f.degree() == 0) return Form<Coeff>(0);
    Form<Coeff> out(f.degree() - 1);
    for (std::size_t i = 1; i <= f.degree(); ++i) out[i - 1] = f[i] * Coeff(static_cast<long>(i));
    return out;
}

ComplexForm to_complex(const BinaryForm& f);

/// Multiset of intersection multiplicities, kept sorted ascending.
class MultiplicityProfile {
public:
    MultiplicityProfile() = default;
    explicit MultiplicityProfile(std::vector<int> entries);

    std::span<const int> entries() const { return entries_; }
    int total() const;
    int odd_count() const;
    bool all_even() const { return odd_count() == 0; }
    /// alpha[i-1] = number of entries equal to i; no trailing zeros.
    std::vector<int> alpha() const;
    static MultiplicityProfile from_alpha(std::span<const int> alpha);

    friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;

private:
    std::vector<int> entries_;
};

struct SquarefreeFactor {
    BinaryForm factor;
    int multiplicity;
};

/// f = unit * prod factor^multiplicity. Factors are squarefree, pairwise
/// coprime, and scaled so that their last nonzero coefficient is 1.
struct SquarefreeDecomposition {
    Rational unit;
    std::vector<SquarefreeFactor> factors;  // ascending multiplicity
};

/// Dehomogenization at y0 = 1: sum c_i t^i.
Polynomial chart_polynomial(const BinaryForm& f);
/// Homogenizes p to a form of the given degree (must be >= deg p).
BinaryForm homogenize(const Polynomial& p, std::size_t degree);
/// Rescales so the last nonzero coefficient is 1; zero stays zero.
BinaryForm normalized(const BinaryForm& f);

/// Greatest common divisor, normalized; gcd(f, 0) = f.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);
/// Exact quotient f / g; throws if g does not divide f.
BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g);
bool divides(const BinaryForm& g, const BinaryForm& f);

SquarefreeDecomposition squarefree_decomposition(const BinaryForm& f);
MultiplicityProfile multiplicity_profile(const BinaryForm& f);

/// Sylvester resultant of two forms at their declared degrees.
Rational resultant(const BinaryForm& f, const BinaryForm& g);
/// disc(f) = (-1)^(d(d-1)/2) * Res(df/dy0, df/dy1) / d^(d-2). For a form with
/// nonzero y1^d coefficient c_d this equals Res(p, p') * (-1)^(d(d-1)/2) / c_d of the
/// chart polynomial p(t) = f(1, t), i.e. c_d^(2d-2) * prod_{i<j} (t_i - t_j)^2.
Rational discriminant(const BinaryForm& f);

/// s with f = c * s^2 when every multiplicity is even, otherwise empty.
std::optional<BinaryForm> is_square(const BinaryForm& f);

}  // namespace enrcurve
