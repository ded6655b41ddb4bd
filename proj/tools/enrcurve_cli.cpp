// enrcurve: command-line front end.
//
// Exit codes: 0 success, 1 a mathematical check failed or nothing was found,
// 2 malformed input or usage. OMP_NUM_THREADS sets the thread count.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "enrcurve/cover.hpp"
#include "enrcurve/io.hpp"
#include "enrcurve/ladder.hpp"
#include "enrcurve/lattice.hpp"
#include "enrcurve/seeker.hpp"
#include "enrcurve/severi.hpp"

namespace fs = std::filesystem;
using namespace enrcurve;

namespace {

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kInputError = 2;

std::string join(const std::vector<int>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    return out.str();
}

std::string join(std::span<const int> v) { return join(std::vector<int>(v.begin(), v.end())); }

DivisorClass parse_class(const std::vector<std::int64_t>& v, const char* name) {
    if (v.size() != 2) throw InputError(std::string(name) + " needs two integers a,b");
    return {v[0], v[1]};
}

void print_tangency(const TangencyReport& r) {
    std::printf("profile       {%s}\n", join(r.profile.entries()).c_str());
    std::printf("alpha         [%s]\n", join(r.profile.alpha()).c_str());
    std::printf("class         (%lld,%lld)\n", static_cast<long long>(r.curve_class.a), static_cast<long long>(r.curve_class.b));
    std::printf("odd points    %d\n", r.odd_points);
    for (int k : r.profile.entries()) std::printf("  contact %d -> %s\n", k, ak_type(k).c_str());
    std::printf("p_a(C_X)      %lld\n", static_cast<long long>(r.pa_pullback));
    std::printf("delta         %lld\n", static_cast<long long>(r.delta_total));
    std::printf("g(C_X)        %lld\n", static_cast<long long>(r.geom_genus_pullback));
    std::printf("splits        %s\n", r.splits ? "yes" : "no");
}

int cmd_check(const std::string& path) {
    const BiForm b = bi_form_from_json(read_json_file(path));
    if (b.d1() != 4 || b.d2() != 4) throw InputError("branch curve must have bidegree (4,4)");
    const AdmissibilityReport r = check_branch_admissible(b);
    std::printf("sigma-invariant      %s\n", r.sigma_invariant ? "yes" : "no");
    std::printf("avoids fixed points  %s\n", r.avoids_fixed_points ? "yes" : "no");
    for (const FixedPointHit& hit : r.fixed_point_hits) std::printf("  %s\n", hit.describe().c_str());
    std::printf("smooth               %s (%s%s%s)\n", r.smooth ? "yes" : "no",
                r.smoothness_method == SmoothnessMethod::exact ? "exact" : "numeric",
                r.smoothness_detail.empty() ? "" : ": ", r.smoothness_detail.c_str());
    std::printf("admissible           %s\n", r.admissible() ? "yes" : "no");
    return r.admissible() ? kOk : kDomainFailure;
}

int cmd_tangency(const std::string& branch_path, const std::string& curve_path) {
    const BiForm b = bi_form_from_json(read_json_file(branch_path));
    const GraphCurve c = graph_curve_from_json(read_json_file(curve_path));
    print_tangency(analyze(b, c));
    return kOk;
}

int cmd_severi_dim(const std::vector<std::int64_t>& k, const std::vector<std::int64_t>& t, const std::vector<std::int64_t>& l,
                   std::int64_t gamma, const std::vector<int>& alpha) {
    SeveriSpec s;
    s.canonical_class = parse_class(k, "--K");
    s.T_class = parse_class(t, "--T");
    s.L_class = parse_class(l, "--L");
    s.gamma = gamma;
    s.alpha = AlphaSeq(alpha);
    if (!s.compatible()) {
        std::fprintf(stderr, "alpha is incompatible: I alpha = %lld but L.T = %lld\n", static_cast<long long>(s.alpha.weight()),
                     static_cast<long long>(intersect(s.L_class, s.T_class)));
        return kInputError;
    }
    const std::int64_t side = dedieu_side_condition(s);
    std::printf("dim   %lld\n", static_cast<long long>(dedieu_dim(s)));
    std::printf("side  %lld (%s)\n", static_cast<long long>(side), side >= 1 ? "dimension count applies" : "side condition fails");
    return kOk;
}

struct SeekConfig {
    std::string branch;
    std::int64_t m = 2;
    std::size_t seeds = 500;
    std::uint64_t master = 1;
    std::string out = "certificates";
    Tolerances tol;
    bool sigma_starts = false;
    bool serial = false;
};

int cmd_seek(const SeekConfig& cfg) {
    if (cfg.tol.residual <= 0 || cfg.tol.jacobian <= 0 || cfg.tol.cluster <= 0) throw InputError("tolerances must be positive");
    const BiForm b = bi_form_from_json(read_json_file(cfg.branch));
    if (b.d1() != 4 || b.d2() != 4) throw InputError("branch curve must have bidegree (4,4)");
    if (!check_branch_admissible(b).admissible()) {
        std::fprintf(stderr, "branch curve is not admissible; run `check` for details\n");
        return kDomainFailure;
    }
    SolverOptions options;
    options.tolerances = cfg.tol;
    options.sigma_symmetric_starts = cfg.sigma_starts;
    const SeekResult result = cfg.serial ? seek_serial(b, cfg.m, cfg.seeds, cfg.master, options)
                                         : seek(b, cfg.m, cfg.seeds, cfg.master, options);

    fs::create_directories(cfg.out);
    Json index = Json::array();
    for (std::size_t i = 0; i < result.certificates.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "cert_%04zu.json", i);
        write_json_file(fs::path(cfg.out) / name, to_json(result.certificates[i]));
        index.push_back(name);
    }
    const CyReport cy = cy_report(cfg.m);
    Json summary = {{"tool_version", kToolVersion},
                    {"m", cfg.m},
                    {"seed_count", cfg.seeds},
                    {"master_seed", cfg.master},
                    {"attempts", result.attempts},
                    {"converged", result.converged},
                    {"duplicates", result.duplicates},
                    {"sigma_partners", result.sigma_partners},
                    {"certificates", index},
                    {"pa_enriques", cy.pa},
                    {"phi", cy.phi},
                    {"phi_stable", cy.phi_stable},
                    {"two_divisible", cy.two_divisible}};
    write_json_file(fs::path(cfg.out) / "summary.json", summary);

    std::printf("m=%lld: %zu certificate(s) from %zu attempts (%zu passed, %zu duplicates, %zu sigma partners)\n",
                static_cast<long long>(cfg.m), result.certificates.size(), result.attempts, result.converged, result.duplicates,
                result.sigma_partners);
    std::printf("C_Y: p_a = %lld, phi = %lld, 2-divisible = %s\n", static_cast<long long>(cy.pa), static_cast<long long>(cy.phi),
                cy.two_divisible ? "yes" : "no");
    if (result.certificates.empty()) {
        std::fprintf(stderr, "%s\n", result.diagnostic.c_str());
        return kDomainFailure;
    }
    return kOk;
}

struct ToleranceOverrides {
    std::optional<double> residual, jacobian, cluster;
};

int cmd_verify(const std::string& path, const ToleranceOverrides& over) {
    const Json j = read_json_file(path);
    const Certificate cert = certificate_from_json(j);
    if (!j.contains("alpha") || !j["alpha"].is_array()) throw InputError("certificate lacks an alpha array");
    Tolerances tol = cert.tolerances;
    if (over.residual) tol.residual = *over.residual;
    if (over.jacobian) tol.jacobian = *over.jacobian;
    if (over.cluster) tol.cluster = *over.cluster;
    std::string failure;
    const CertificateChecks ck = recheck(cert, tol);
    if (!ck.all()) failure = ck.first_failure();

    const SeveriSpec spec = rational_family_spec(cert.m);
    const std::vector<int> expected(spec.alpha.values().begin(), spec.alpha.values().end());
    if (failure.empty() && j.at("alpha").get<std::vector<int>>() != expected) failure = "alpha";
    if (failure.empty() && !membership_verify(cert.branch, cert.curve, spec, ClusterOptions{tol.cluster, ClusterOptions{}.separation})) {
        failure = "membership";
    }
    if (failure.empty() && cert.exact_curve && !membership_verify(cert.branch, *cert.exact_curve, spec)) failure = "exact membership";
    if (!failure.empty()) {
        std::printf("FAIL %s: check '%s'\n", path.c_str(), failure.c_str());
        return kDomainFailure;
    }
    std::printf("ok %s: m=%lld residual=%.3e min_sv=%.3e profile={%s}\n", path.c_str(), static_cast<long long>(cert.m),
                cert.residual_norm, cert.jacobian_min_sv, join(cert.profile.entries()).c_str());
    return kOk;
}

int cmd_phi(const std::vector<std::int64_t>& coords, int radius, bool serial) {
    if (coords.size() != static_cast<std::size_t>(kLatticeRank)) throw InputError("--class needs 10 integers (e, f, v1..v8)");
    LatticeVector h;
    std::copy(coords.begin(), coords.end(), h.coords.begin());
    const PhiResult r = serial ? phi_serial(h, radius) : phi(h, radius);
    std::printf("H^2      %lld\n", static_cast<long long>(square(h)));
    std::printf("phi      %lld\n", static_cast<long long>(r.value));
    std::printf("witness ");
    for (auto c : r.witness.coords) std::printf(" %lld", static_cast<long long>(c));
    std::printf("\nradius   %d\n", r.radius);
    return kOk;
}

void print_lattice(const LatticeSpec& spec) {
    const Signature sig = signature(spec.gram);
    std::printf("lattice     %s\n", spec.name().c_str());
    std::printf("rank        %zu\n", spec.gram.size());
    std::printf("det         %s\n", determinant_string(spec.gram).c_str());
    std::printf("signature   (%d,%d)\n", sig.positive, sig.negative);
}

int cmd_lattice(const std::string& which, std::int64_t m) {
    if (which == "enriques") {
        print_lattice(enriques_spec());
    } else if (which == "cover") {
        print_lattice(very_general_cover_spec());
    } else if (which == "hs") {
        if (m < 1) throw InputError("--m must be at least 1");
        print_lattice(hs_gram(m));
        const SpecialClassReport s = special_class_check(m);
        std::printf("B_Y.E2      %lld\n", static_cast<long long>(s.b_dot_e2));
        std::printf("pi(s1)      O(%lld,%lld)\n", static_cast<long long>(s.pi_s1.a), static_cast<long long>(s.pi_s1.b));
        std::printf("consistent  %s\n", s.consistent ? "yes" : "no");
        if (!s.consistent) return kDomainFailure;
    } else if (which == "cy") {
        if (m < 1) throw InputError("--m must be at least 1");
        const CyReport r = cy_report(m);
        std::printf("class       (%lld)e + (%lld)f\n", static_cast<long long>(r.cls.coords[0]), static_cast<long long>(r.cls.coords[1]));
        std::printf("p_a         %lld\n", static_cast<long long>(r.pa));
        std::printf("phi         %lld%s\n", static_cast<long long>(r.phi), r.phi_stable ? "" : " (not radius-stable)");
        std::printf("2-divisible %s\n", r.two_divisible ? "yes" : "no");
    } else {
        throw InputError("unknown lattice '" + which + "' (enriques, cover, hs, cy)");
    }
    return kOk;
}

int cmd_table(std::int64_t m_max) {
    const std::vector<LadderRow> rows = genus_ladder(m_max);
    std::printf("%8s %8s %14s %4s\n", "m", "k", "alpha", "dim");
    bool dims_ok = true;
    for (const LadderRow& r : rows) {
        std::printf("%8lld %8lld %14s %4lld\n", static_cast<long long>(r.m), static_cast<long long>(r.k),
                    ("[" + join(r.alpha.values()) + "]").c_str(), static_cast<long long>(r.dimension));
        dims_ok = dims_ok && r.dimension == 0;
    }
    const bool covered = ladder_covers_residue_class(rows);
    std::printf("k covers {k = 1 mod 4, k <= %lld}: %s\n", static_cast<long long>(4 * m_max - 3), covered ? "yes" : "no");
    return covered && dims_ok ? kOk : kDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singular rational curves on Enriques surfaces via double quadrics"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string branch, curve, cert_path;
    auto* check = app.add_subcommand("check", "Admissibility of a (4,4) branch curve");
    check->add_option("branch", branch, "Branch curve JSON")->required();

    auto* tangency = app.add_subcommand("tangency", "Contact profile of a curve against the branch curve");
    tangency->add_option("--branch", branch, "Branch curve JSON")->required();
    tangency->add_option("--curve", curve, "Curve JSON {n, A, B}")->required();

    std::vector<std::int64_t> k_class{-2, -2}, t_class{4, 4}, l_class;
    std::int64_t gamma = 0;
    std::vector<int> alpha;
    auto* severi = app.add_subcommand("severi-dim", "Expected dimension of V_{gamma,alpha}");
    severi->add_option("--K", k_class, "Canonical class a,b")->delimiter(',')->expected(2);
    severi->add_option("--T", t_class, "Tangency curve class a,b")->delimiter(',')->expected(2);
    severi->add_option("--L", l_class, "Curve class a,b")->delimiter(',')->expected(2)->required();
    severi->add_option("--gamma", gamma, "Geometric genus");
    severi->add_option("--alpha", alpha, "alpha_1,alpha_2,...")->delimiter(',')->required();

    SeekConfig seek_cfg;
    auto* seek_cmd = app.add_subcommand("seek", "Search for curves of class (1, m-1) with alpha = [2, 2m-1]");
    seek_cmd->add_option("--branch", seek_cfg.branch, "Branch curve JSON")->required();
    seek_cmd->add_option("--m", seek_cfg.m, "Family index m >= 1")->check(CLI::PositiveNumber);
    seek_cmd->add_option("--seeds", seek_cfg.seeds, "Number of restarts");
    seek_cmd->add_option("--seed", seek_cfg.master, "Master seed");
    seek_cmd->add_option("--out", seek_cfg.out, "Output directory");
    seek_cmd->add_option("--tol-res", seek_cfg.tol.residual, "Residual tolerance");
    seek_cmd->add_option("--tol-jac", seek_cfg.tol.jacobian, "Jacobian singular value floor");
    seek_cmd->add_option("--tol-cluster", seek_cfg.tol.cluster, "Root clustering tolerance");
    seek_cmd->add_flag("--sigma-starts", seek_cfg.sigma_starts, "Start from sigma-invariant curves");
    seek_cmd->add_flag("--serial", seek_cfg.serial, "Single-threaded reference run");

    ToleranceOverrides verify_tol;
    auto* verify = app.add_subcommand("verify", "Re-certify a certificate file from scratch");
    verify->add_option("certificate", cert_path, "Certificate JSON")->required();
    verify->add_option("--tol-res", verify_tol.residual, "Residual tolerance (default: the file's)");
    verify->add_option("--tol-jac", verify_tol.jacobian, "Jacobian singular value floor (default: the file's)");
    verify->add_option("--tol-cluster", verify_tol.cluster, "Root clustering tolerance (default: the file's)");

    std::vector<std::int64_t> phi_class;
    int radius = 10;
    bool phi_serial_flag = false;
    auto* phi_cmd = app.add_subcommand("phi", "phi(H) by isotropic vector enumeration");
    phi_cmd->add_option("--class", phi_class, "10 coordinates e,f,v1..v8")->delimiter(',')->required();
    phi_cmd->add_option("--radius", radius, "Coordinate bound");
    phi_cmd->add_flag("--serial", phi_serial_flag, "Single-threaded reference run");

    std::string which;
    std::int64_t lattice_m = 1;
    auto* lattice = app.add_subcommand("lattice", "Lattice invariants: enriques, cover, hs, cy");
    lattice->add_option("which", which, "enriques | cover | hs | cy")->required();
    lattice->add_option("--m", lattice_m, "m for hs and cy");

    std::int64_t m_max = 10;
    auto* table = app.add_subcommand("table", "Genus ladder k = p_a(C_Y) for m = 1..m_max");
    table->add_option("--m-max", m_max, "Largest m")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*check) return cmd_check(branch);
        if (*tangency) return cmd_tangency(branch, curve);
        if (*severi) return cmd_severi_dim(k_class, t_class, l_class, gamma, alpha);
        if (*seek_cmd) return cmd_seek(seek_cfg);
        if (*verify) return cmd_verify(cert_path, verify_tol);
        if (*phi_cmd) return cmd_phi(phi_class, radius, phi_serial_flag);
        if (*lattice) return cmd_lattice(which, lattice_m);
        if (*table) return cmd_table(m_max);
    } catch (const InputError& e) {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return kInputError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kDomainFailure;
    }
    return kInputError;
}
