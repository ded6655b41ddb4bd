#pragma once

#include <filesystem>
#include <stdexcept>

#include "json.hpp"

#include "enrcurve/quadric.hpp"
#include "enrcurve/seeker.hpp"

namespace enrcurve {

using Json = nlohmann::json;

/// Malformed or unreadable input (as opposed to a failed mathematical check).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// {"degree": d, "coeffs": ["num/den", ...]} from y0^d to y1^d.
Json to_json(const BinaryForm& f);
BinaryForm binary_form_from_json(const Json& j);

/// [[re, im], ...]
Json to_json(const ComplexForm& f);
ComplexForm complex_form_from_json(const Json& j);

/// {"bidegree": [d1, d2], "monomials": [[i, j, k, l, "num/den"], ...]}
Json to_json(const BiForm& b);
BiForm bi_form_from_json(const Json& j);

/// {"n": n, "A": [...], "B": [...]}
Json to_json(const GraphCurve& c);
GraphCurve graph_curve_from_json(const Json& j);
Json to_json(const ComplexGraphCurve& c);
ComplexGraphCurve complex_graph_curve_from_json(const Json& j);

Json to_json(const TangencyReport& r);
Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace enrcurve
