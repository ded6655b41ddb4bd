#pragma once

#include <span>
#include <utility>
#include <vector>

#include "enrcurve/rational.hpp"

namespace enrcurve {

/// Dense univariate polynomial over Q, coefficients in ascending order.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(int power, const Rational& c = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const Rational& leading() const;
    Rational coeff(int power) const;
    std::span<const Rational> coeffs() const { return coeffs_; }

    Rational operator()(const Rational& t) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend Polynomial operator*(Polynomial lhs, const Rational& s) { return lhs *= s; }
    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Polynomial derivative(const Polynomial& p);
Polynomial monic(const Polynomial& p);
Polynomial pow(const Polynomial& p, int e);

/// Euclidean division; throws on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// Quotient of an exact division; throws if the remainder is nonzero.
Polynomial exact_quotient(const Polynomial& num, const Polynomial& den);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// Yun's algorithm: p = lc(p) * prod g_i^i with g_i monic, squarefree and pairwise coprime.
/// Only nonconstant factors are returned.
std::vector<std::pair<Polynomial, int>> yun_squarefree(const Polynomial& p);

/// Unique interpolant of degree < points.size() through (x_k, y_k).
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Determinant by fraction-exact Gaussian elimination; row-major square matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace enrcurve
