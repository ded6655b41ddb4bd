#include "enrcurve/forms.hpp"

#include <algorithm>

namespace enrcurve {

ComplexForm to_complex(const BinaryForm& f) {
    ComplexForm out(f.degree());
    for (std::size_t i = 0; i <= f.degree(); ++i) out[i] = Complex(f[i].get_d(), 0.0);
    return out;
}

MultiplicityProfile::MultiplicityProfile(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e <= 0) throw std::invalid_argument("multiplicities must be positive");
    }
    std::sort(entries_.begin(), entries_.end());
}

int MultiplicityProfile::total() const {
    int sum = 0;
    for (int e : entries_) sum += e;
    return sum;
}

int MultiplicityProfile::odd_count() const {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(), [](int e) { return e % 2 != 0; }));
}

std::vector<int> MultiplicityProfile::alpha() const {
    if (entries_.empty()) return {};
    std::vector<int> a(static_cast<std::size_t>(entries_.back()), 0);
    for (int e : entries_) ++a[static_cast<std::size_t>(e - 1)];
    return a;
}

MultiplicityProfile MultiplicityProfile::from_alpha(std::span<const int> alpha) {
    std::vector<int> entries;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) throw std::invalid_argument("alpha entries must be nonnegative");
        entries.insert(entries.end(), static_cast<std::size_t>(alpha[i]), static_cast<int>(i + 1));
    }
    return MultiplicityProfile(std::move(entries));
}

Polynomial chart_polynomial(const BinaryForm& f) {
    return Polynomial(std::vector<Rational>(f.coeffs().begin(), f.coeffs().end()));
}

BinaryForm homogenize(const Polynomial& p, std::size_t degree) {
    if (p.degree() > static_cast<int>(degree)) throw std::invalid_argument("homogenize: degree too small");
    BinaryForm out(degree);
    for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(i)] = p.coeff(i);
    return out;
}

BinaryForm normalized(const BinaryForm& f) {
    for (std::size_t i = f.degree() + 1; i-- > 0;) {
        if (sgn(f[i]) != 0) {
            Rational inv = 1 / f[i];
            return f * inv;
        }
    }
    return f;
}

namespace {

// Multiplicity of the root (0:1), i.e. the power of y0 dividing f.
std::size_t y0_order(const BinaryForm& f, const Polynomial& chart) {
    return f.degree() - static_cast<std::size_t>(chart.degree());
}

}  // namespace

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) return f;
    if (f.is_zero()) return g;
    const Polynomial p = chart_polynomial(f);
    const Polynomial q = chart_polynomial(g);
    const std::size_t e = std::min(y0_order(f, p), y0_order(g, q));
    const Polynomial h = gcd(p, q);
    return homogenize(h, static_cast<std::size_t>(h.degree()) + e);
}

BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero form");
    if (g.degree() > f.degree()) throw std::domain_error("inexact form division");
    if (f.is_zero()) return BinaryForm(f.degree() - g.degree());
    const Polynomial p = chart_polynomial(f);
    const Polynomial q = chart_polynomial(g);
    if (y0_order(g, q) > y0_order(f, p)) throw std::domain_error("inexact form division");
    return homogenize(exact_quotient(p, q), f.degree() - g.degree());
}

bool divides(const BinaryForm& g, const BinaryForm& f) {
    try {
        (void)divide_exact(f, g);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

SquarefreeDecomposition squarefree_decomposition(const BinaryForm& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition of the zero form");
    const Polynomial p = chart_polynomial(f);
    const std::size_t e = y0_order(f, p);

    SquarefreeDecomposition out;
    out.unit = p.leading();
    bool merged = false;
    for (auto& [g, mult] : yun_squarefree(p)) {
        std::size_t deg = static_cast<std::size_t>(g.degree());
        BinaryForm form = homogenize(g, deg);
        if (static_cast<std::size_t>(mult) == e) {
            form = form * BinaryForm::y0();
            merged = true;
        }
        out.factors.push_back({std::move(form), mult});
    }
    if (e > 0 && !merged) out.factors.push_back({BinaryForm::y0(), static_cast<int>(e)});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const SquarefreeFactor& a, const SquarefreeFactor& b) { return a.multiplicity < b.multiplicity; });
    return out;
}

MultiplicityProfile multiplicity_profile(const BinaryForm& f) {
    std::vector<int> entries;
    for (const auto& [factor, mult] : squarefree_decomposition(f).factors) {
        entries.insert(entries.end(), factor.degree(), mult);
    }
    return MultiplicityProfile(std::move(entries));
}

Rational resultant(const BinaryForm& f, const BinaryForm& g) {
    const std::size_t d = f.degree();
    const std::size_t e = g.degree();
    const std::size_t n = d + e;
    if (n == 0) return 1;
    std::vector<std::vector<Rational>> sylvester(n, std::vector<Rational>(n));
    for (std::size_t k = 0; k < e; ++k) {
        for (std::size_t i = 0; i <= d; ++i) sylvester[k][k + i] = f[i];
    }
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i <= e; ++i) sylvester[e + k][k + i] = g[i];
    }
    // The rows hold coefficients by ascending y1 power; flipping to the
    // descending affine convention costs (-1)^(d e).
    Rational r = determinant(std::move(sylvester));
    if ((d * e) % 2 == 1) r = -r;
    return r;
}

Rational discriminant(const BinaryForm& f) {
    const std::size_t d = f.degree();
    if (d <= 1) return 1;
    Rational r = resultant(partial_y0(f), partial_y1(f));
    if ((d - 1) % 2 == 1) r = -r;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), d, d - 2);
    r /= Rational(scale);
    if ((d * (d - 1) / 2) % 2 == 1) r = -r;
    return r;
}

std::optional<BinaryForm> is_square(const BinaryForm& f) {
    const auto sqf = squarefree_decomposition(f);
    BinaryForm root = BinaryForm::constant(1);
    for (const auto& [factor, mult] : sqf.factors) {
        if (mult % 2 != 0) return std::nullopt;
        root = root * power(factor, static_cast<std::size_t>(mult / 2));
    }
    return root;
}

}  // namespace enrcurve
