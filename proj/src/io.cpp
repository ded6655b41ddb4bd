#include "enrcurve/io.hpp"

#include <fstream>
#include <sstream>

#include "enrcurve/severi.hpp"

namespace enrcurve {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const Json::exception& e) {
        throw InputError(std::string(what) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string(what) + ": " + e.what());
    }
}

Json complex_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError("complex number must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("expected an array of rationals");
    std::vector<Rational> out;
    for (const Json& v : j) {
        if (v.is_string()) {
            out.push_back(parse_rational(v.get<std::string>()));
        } else if (v.is_number_integer()) {
            out.emplace_back(v.get<long>());
        } else {
            throw InputError("rational must be a \"num/den\" string or an integer");
        }
    }
    return out;
}

Json rationals_json(std::span<const Rational> values) {
    Json out = Json::array();
    for (const Rational& r : values) out.push_back(to_string(r));
    return out;
}

Json class_json(DivisorClass c) { return Json::array({c.a, c.b}); }

DivisorClass class_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("class must be [a, b]");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace

Json to_json(const BinaryForm& f) { return {{"degree", f.degree()}, {"coeffs", rationals_json(f.coeffs())}}; }

BinaryForm binary_form_from_json(const Json& j) {
    return guarded("binary form", [&] {
        const auto degree = j.at("degree").get<std::size_t>();
        std::vector<Rational> coeffs = rationals_from_json(j.at("coeffs"));
        if (coeffs.size() != degree + 1) throw InputError("binary form needs degree + 1 coefficients");
        return BinaryForm(std::move(coeffs));
    });
}

Json to_json(const ComplexForm& f) {
    Json out = Json::array();
    for (const Complex& z : f.coeffs()) out.push_back(complex_json(z));
    return out;
}

ComplexForm complex_form_from_json(const Json& j) {
    return guarded("complex form", [&] {
        if (!j.is_array() || j.empty()) throw InputError("complex form must be a nonempty array");
        std::vector<Complex> coeffs;
        for (const Json& z : j) coeffs.push_back(complex_from_json(z));
        return ComplexForm(std::move(coeffs));
    });
}

Json to_json(const BiForm& b) {
    Json monomials = Json::array();
    for (const BiForm::Monomial& m : b.monomials()) monomials.push_back({m.i, m.j, m.k, m.l, to_string(m.coeff)});
    return {{"bidegree", {b.d1(), b.d2()}}, {"monomials", monomials}};
}

BiForm bi_form_from_json(const Json& j) {
    return guarded("bihomogeneous form", [&] {
        const Json& deg = j.at("bidegree");
        if (!deg.is_array() || deg.size() != 2) throw InputError("bidegree must be [d1, d2]");
        const int d1 = deg[0].get<int>();
        const int d2 = deg[1].get<int>();
        if (d1 < 0 || d2 < 0) throw InputError("bidegree must be nonnegative");
        std::vector<BiForm::Monomial> monomials;
        for (const Json& m : j.at("monomials")) {
            if (!m.is_array() || m.size() != 5) throw InputError("monomial must be [i, j, k, l, coeff]");
            const Json& c = m[4];
            Rational coeff = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
            monomials.push_back({m[0].get<int>(), m[1].get<int>(), m[2].get<int>(), m[3].get<int>(), coeff});
        }
        return BiForm::from_monomials(d1, d2, monomials);
    });
}

Json to_json(const GraphCurve& c) {
    return {{"n", c.n()}, {"A", rationals_json(c.A.coeffs())}, {"B", rationals_json(c.Bc.coeffs())}};
}

GraphCurve graph_curve_from_json(const Json& j) {
    return guarded("curve", [&] {
        const auto n = j.at("n").get<std::size_t>();
        std::vector<Rational> a = rationals_from_json(j.at("A"));
        std::vector<Rational> b = rationals_from_json(j.at("B"));
        if (a.size() != n + 1 || b.size() != n + 1) throw InputError("curve forms need n + 1 coefficients");
        return GraphCurve(BinaryForm(std::move(a)), BinaryForm(std::move(b)));
    });
}

Json to_json(const ComplexGraphCurve& c) { return {{"n", c.n()}, {"A", to_json(c.A)}, {"B", to_json(c.Bc)}}; }

ComplexGraphCurve complex_graph_curve_from_json(const Json& j) {
    return guarded("curve", [&] {
        const auto n = j.at("n").get<std::size_t>();
        ComplexForm a = complex_form_from_json(j.at("A"));
        ComplexForm b = complex_form_from_json(j.at("B"));
        if (a.degree() != n || b.degree() != n) throw InputError("curve forms need n + 1 coefficients");
        return ComplexGraphCurve(std::move(a), std::move(b));
    });
}

Json to_json(const TangencyReport& r) {
    return {{"profile", std::vector<int>(r.profile.entries().begin(), r.profile.entries().end())},
            {"class", class_json(r.curve_class)},
            {"odd_points", r.odd_points},
            {"pa_pullback", r.pa_pullback},
            {"delta_total", r.delta_total},
            {"geom_genus_pullback", r.geom_genus_pullback},
            {"splits", r.splits}};
}

Json to_json(const Certificate& cert) {
    Json j;
    j["tool_version"] = kToolVersion;
    j["m"] = cert.m;
    j["n"] = cert.n();
    j["branch"] = to_json(cert.branch);
    j["curve"] = to_json(cert.curve);
    if (cert.exact_curve) j["exact_curve"] = to_json(*cert.exact_curve);
    j["q"] = to_json(cert.q);
    j["s"] = to_json(cert.s);
    j["c"] = complex_json(cert.c);
    j["gauge"] = {{"curve", cert.gauge.curve}, {"q", cert.gauge.q}, {"s", cert.gauge.s}};
    j["residual_norm"] = cert.residual_norm;
    j["jacobian_min_sv"] = cert.jacobian_min_sv;
    j["profile"] = std::vector<int>(cert.profile.entries().begin(), cert.profile.entries().end());
    j["alpha"] = cert.profile.alpha();
    j["rng_seed"] = cert.rng_seed;
    j["seed_index"] = cert.seed_index;
    j["iterations"] = cert.iterations;
    j["checks"] = {{"residual", cert.checks.residual},         {"jacobian", cert.checks.jacobian},
                   {"profile", cert.checks.profile},           {"irreducible", cert.checks.irreducible},
                   {"q_squarefree", cert.checks.q_squarefree}, {"q_coprime_s", cert.checks.q_coprime_s},
                   {"not_square", cert.checks.not_square},     {"consistent", cert.checks.consistent}};
    j["tolerances"] = {{"residual", cert.tolerances.residual},
                       {"jacobian", cert.tolerances.jacobian},
                       {"cluster", cert.tolerances.cluster}};
    j["tangency"] = to_json(cert.tangency);
    j["enriques"] = {{"pa", cert.pa_enriques}, {"phi", cert.phi}, {"two_divisible", cert.two_divisible}};
    return j;
}

Certificate certificate_from_json(const Json& j) {
    return guarded("certificate", [&] {
        Certificate cert;
        cert.m = j.at("m").get<std::int64_t>();
        if (cert.m < 1) throw InputError("m must be at least 1");
        cert.branch = bi_form_from_json(j.at("branch"));
        cert.curve = complex_graph_curve_from_json(j.at("curve"));
        if (j.contains("exact_curve")) cert.exact_curve = graph_curve_from_json(j.at("exact_curve"));
        cert.q = complex_form_from_json(j.at("q"));
        cert.s = complex_form_from_json(j.at("s"));
        cert.c = complex_from_json(j.at("c"));
        const Json& g = j.at("gauge");
        cert.gauge = {g.at("curve").get<std::size_t>(), g.at("q").get<std::size_t>(), g.at("s").get<std::size_t>()};
        cert.residual_norm = j.at("residual_norm").get<double>();
        cert.jacobian_min_sv = j.at("jacobian_min_sv").get<double>();
        cert.profile = MultiplicityProfile(j.at("profile").get<std::vector<int>>());
        cert.rng_seed = j.at("rng_seed").get<std::uint64_t>();
        cert.seed_index = j.at("seed_index").get<std::int64_t>();
        cert.iterations = j.value("iterations", 0);
        const Json& ck = j.at("checks");
        cert.checks.residual = ck.at("residual").get<bool>();
        cert.checks.jacobian = ck.at("jacobian").get<bool>();
        cert.checks.profile = ck.at("profile").get<bool>();
        cert.checks.irreducible = ck.at("irreducible").get<bool>();
        cert.checks.q_squarefree = ck.at("q_squarefree").get<bool>();
        cert.checks.q_coprime_s = ck.at("q_coprime_s").get<bool>();
        cert.checks.not_square = ck.at("not_square").get<bool>();
        cert.checks.consistent = ck.at("consistent").get<bool>();
        const Json& tol = j.at("tolerances");
        cert.tolerances = {tol.at("residual").get<double>(), tol.at("jacobian").get<double>(), tol.at("cluster").get<double>()};
        const Json& t = j.at("tangency");
        cert.tangency.profile = MultiplicityProfile(t.at("profile").get<std::vector<int>>());
        cert.tangency.curve_class = class_from_json(t.at("class"));
        cert.tangency.odd_points = t.at("odd_points").get<int>();
        cert.tangency.pa_pullback = t.at("pa_pullback").get<std::int64_t>();
        cert.tangency.delta_total = t.at("delta_total").get<std::int64_t>();
        cert.tangency.geom_genus_pullback = t.at("geom_genus_pullback").get<std::int64_t>();
        cert.tangency.splits = t.at("splits").get<bool>();
        const Json& e = j.at("enriques");
        cert.pa_enriques = e.at("pa").get<std::int64_t>();
        cert.phi = e.at("phi").get<std::int64_t>();
        cert.two_divisible = e.at("two_divisible").get<bool>();
        return cert;
    });
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace enrcurve
