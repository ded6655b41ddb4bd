#include "enrcurve/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace enrcurve {

Rational parse_rational(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    std::size_t slash_count = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char ch = s[i];
        if (ch == '/') {
            ++slash_count;
            continue;
        }
        if (ch == '-' && (i == 0 || s[i - 1] == '/')) continue;
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("malformed rational literal: " + std::string(text));
        }
    }
    if (slash_count > 1 || s.back() == '/' || s.front() == '/') {
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
    Rational value;
    if (value.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational literal: " + std::string(text));
    }
    if (sgn(value.get_den()) == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace enrcurve
