#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace enrcurve {

using Rational = mpq_class;
using Complex = std::complex<double>;

// Accepts "p", "p/q" and leading sign; the result is canonicalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

template <class T>
T coerce(const Rational& value) {
    if constexpr (std::is_same_v<T, Rational>) {
        return value;
    } else {
        return T(value.get_d());
    }
}

template <class T>
T coerce(const Complex& value) {
    return T(value);
}

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(const Complex& value) { return value == Complex{}; }

inline double magnitude(const Rational& value) { return std::abs(value.get_d()); }
inline double magnitude(const Complex& value) { return std::abs(value); }

}  // namespace enrcurve
