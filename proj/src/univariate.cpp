#include "enrcurve/univariate.hpp"

#include <stdexcept>

namespace enrcurve {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(int power, const Rational& c) {
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::coeff(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(power)];
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial derivative(const Polynomial& p) {
    if (p.degree() < 1) return {};
    std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = p.coeff(i) * i;
    return Polynomial(std::move(out));
}

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    Rational inv = 1 / p.leading();
    return p * inv;
}

Polynomial pow(const Polynomial& p, int e) {
    Polynomial result = Polynomial::constant(1);
    for (int i = 0; i < e; ++i) result = result * p;
    return result;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {Polynomial{}, num};
    std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
    std::vector<Rational> quo(static_cast<std::size_t>(num.degree() - den.degree() + 1));
    const Rational inv_lead = 1 / den.leading();
    const int dd = den.degree();
    for (int k = num.degree() - dd; k >= 0; --k) {
        Rational factor = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
        quo[static_cast<std::size_t>(k)] = factor;
        if (sgn(factor) == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= factor * den.coeff(j);
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

std::vector<std::pair<Polynomial, int>> yun_squarefree(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero");
    std::vector<std::pair<Polynomial, int>> out;
    if (p.degree() < 1) return out;
    const Polynomial dp = derivative(p);
    const Polynomial a0 = gcd(p, dp);
    Polynomial b = exact_quotient(p, a0);
    Polynomial c = exact_quotient(dp, a0);
    Polynomial d = c - derivative(b);
    for (int i = 1; b.degree() >= 1; ++i) {
        Polynomial a = gcd(b, d);
        if (a.degree() >= 1) out.emplace_back(a, i);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - derivative(b);
    }
    for (auto& [g, _] : out) g = monic(g);
    return out;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    const std::size_t n = xs.size();
    // Newton divided differences.
    std::vector<Rational> dd(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational den = xs[i] - xs[i - level];
            if (sgn(den) == 0) throw std::invalid_argument("interpolate: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / den;
        }
    }
    Polynomial result;
    for (std::size_t k = n; k-- > 0;) {
        result = result * Polynomial(std::vector<Rational>{-xs[k], 1});
        result += Polynomial::constant(dd[k]);
    }
    return result;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        const Rational inv = 1 / m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (sgn(m[row][col]) == 0) continue;
            Rational factor = m[row][col] * inv;
            for (std::size_t k = col; k < n; ++k) m[row][k] -= factor * m[col][k];
        }
    }
    return det;
}

}  // namespace enrcurve
