#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "enrcurve/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / ("enrcurve_cli_test_" + std::to_string(::getpid()));
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome run(const std::string& args) {
    const fs::path log = work_dir() / "stdout.txt";
    const std::string cmd = std::string(ENRCURVE_CLI) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(log)};
}

std::string data(const std::string& name) { return (fs::path(ENRCURVE_DATA_DIR) / name).string(); }

std::vector<fs::path> certificate_files(const fs::path& dir) {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().filename().string().rfind("cert_", 0) == 0) out.push_back(e.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Cli, CheckExitCodes) {
    EXPECT_EQ(run("check " + data("branch_admissible.json")).code, 0);
    const Outcome hit = run("check " + data("branch_fixed_point.json"));
    EXPECT_EQ(hit.code, 1);
    EXPECT_NE(hit.out.find("fixed point"), std::string::npos) << hit.out;
    EXPECT_EQ(run("check " + data("branch_not_invariant.json")).code, 1);
    EXPECT_EQ(run("check " + data("branch_malformed.json")).code, 2);
    EXPECT_EQ(run("check " + (work_dir() / "missing.json").string()).code, 2);
}

TEST(Cli, HelpAndUsageErrors) {
    EXPECT_EQ(run("--help").code, 0);
    EXPECT_EQ(run("seek --help").code, 0);
    EXPECT_EQ(run("no-such-command").code, 2);
    EXPECT_EQ(run("phi --class 1,2,3").code, 2);
    EXPECT_EQ(run("lattice nowhere").code, 2);
}

TEST(Cli, Tangency) {
    const Outcome r = run("tangency --branch " + data("branch_admissible.json") + " --curve " + data("curve_1_1.json"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("profile"), std::string::npos);
}

TEST(Cli, SeveriDim) {
    const Outcome r = run("severi-dim --K -2,-2 --T 4,4 --L 1,1 --gamma 0 --alpha 2,3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("dim   0"), std::string::npos) << r.out;
    EXPECT_EQ(run("severi-dim --L 1,1 --alpha 1").code, 2);
}

TEST(Cli, TableReachesAllResidues) {
    const Outcome r = run("table --m-max 26");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("      26      101"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find(": yes"), std::string::npos);
}

TEST(Cli, PhiAndLattice) {
    const Outcome p = run("phi --class 2,2,0,0,0,0,0,0,0,0 --radius 6");
    EXPECT_EQ(p.code, 0);
    EXPECT_NE(p.out.find("phi      2"), std::string::npos) << p.out;
    const Outcome s = run("phi --class 2,2,0,0,0,0,0,0,0,0 --radius 6 --serial");
    EXPECT_EQ(s.out, p.out);
    const Outcome hs = run("lattice hs --m 3");
    EXPECT_EQ(hs.code, 0);
    EXPECT_NE(hs.out.find("4096"), std::string::npos) << hs.out;
    const Outcome cy = run("lattice cy --m 3");
    EXPECT_NE(cy.out.find("p_a         9"), std::string::npos) << cy.out;
}

TEST(Cli, SeekVerifyReplay) {
    const fs::path a = work_dir() / "seek_a", b = work_dir() / "seek_b", c = work_dir() / "seek_c";
    const std::string base = "seek --branch " + data("branch_admissible.json") + " --m 2 --seeds 60 --seed 5 --out ";
    ASSERT_EQ(run(base + a.string()).code, 0);
    ASSERT_EQ(run(base + b.string()).code, 0);
    ASSERT_EQ(run(base + c.string() + " --serial").code, 0);
    const auto files = certificate_files(a);
    ASSERT_FALSE(files.empty());
    for (const auto& f : files) {
        EXPECT_EQ(slurp(f), slurp(b / f.filename()));
        EXPECT_EQ(slurp(f), slurp(c / f.filename()));
        const Outcome v = run("verify " + f.string());
        EXPECT_EQ(v.code, 0) << v.out;
    }
    EXPECT_EQ(certificate_files(b).size(), files.size());
    const enrcurve::Json summary = enrcurve::read_json_file(a / "summary.json");
    EXPECT_EQ(summary.at("pa_enriques"), 5);
    EXPECT_EQ(summary.at("phi"), 2);
    EXPECT_EQ(summary.at("two_divisible"), true);

    // Tampering is caught and named.
    enrcurve::Json cert = enrcurve::read_json_file(files.front());
    enrcurve::Json tampered = cert;
    tampered["residual_norm"] = 1e-30;
    enrcurve::write_json_file(work_dir() / "tampered.json", tampered);
    const Outcome t = run("verify " + (work_dir() / "tampered.json").string());
    EXPECT_EQ(t.code, 1);
    EXPECT_NE(t.out.find("check '"), std::string::npos) << t.out;

    enrcurve::Json wrong_alpha = cert;
    wrong_alpha["alpha"] = enrcurve::Json::array({0, 4});
    enrcurve::write_json_file(work_dir() / "wrong_alpha.json", wrong_alpha);
    const Outcome w = run("verify " + (work_dir() / "wrong_alpha.json").string());
    EXPECT_EQ(w.code, 1);
    EXPECT_NE(w.out.find("alpha"), std::string::npos) << w.out;

    EXPECT_EQ(run("verify " + files.front().string() + " --tol-jac 1e9").code, 1);
    EXPECT_EQ(run("verify " + data("branch_admissible.json")).code, 2);
}

TEST(Cli, SeekLinesAndInadmissibleBranch) {
    const fs::path d = work_dir() / "seek_lines";
    const Outcome r = run("seek --branch " + data("branch_admissible.json") + " --m 1 --out " + d.string());
    EXPECT_EQ(r.code, 0) << r.out;
    const auto files = certificate_files(d);
    ASSERT_FALSE(files.empty());
    EXPECT_EQ(run("verify " + files.front().string()).code, 0);
    EXPECT_EQ(run("seek --branch " + data("branch_fixed_point.json") + " --m 2 --seeds 5 --out " + (work_dir() / "x").string()).code, 1);
    EXPECT_EQ(run("seek --branch " + data("branch_admissible.json") + " --m 2 --tol-res -1 --out " + (work_dir() / "y").string()).code, 2);
}
