/** \file test_driver.cpp
 * Run orchestration: scheme-shorthand parsing, configuration validation,
 * pinned single-run regression errors, artifact layout, deterministic
 * reruns, blow-up reporting and convergence studies.
 */

#include "vwdg/driver.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using namespace vwdg;
using nlohmann::json;

/** Fresh scratch directory per fixture instantiation. */
class DriverFiles : public ::testing::Test {
  protected:
    fs::path dir_;
    void SetUp() override {
        dir_ = fs::temp_directory_path() / "vwdg_test_driver";
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
};

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

long line_count(const std::string& s) {
    long n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

TEST(ParseScheme, RoundTripsAllSixteenNames) {
    for (const char* f : {"rs", "vw"})
        for (int p = 0; p <= 3; ++p)
            for (const char* m : {"c", "d"}) {
                const std::string name = std::string(f) + std::to_string(p) + m;
                auto [form, order, mode] = parse_scheme(name);
                EXPECT_EQ(scheme_name(form, order, mode), name);
                EXPECT_EQ(form == Formulation::RS, f[0] == 'r');
                EXPECT_EQ(order, p);
                EXPECT_EQ(mode == Mode::conservative, m[0] == 'c');
            }
}

TEST(ParseScheme, RejectsMalformedNames) {
    for (const char* bad : {"", "rs3", "rs4c", "xx1c", "rs0x", "vw3dd", "RS3C"})
        EXPECT_THROW(parse_scheme(bad), std::invalid_argument) << "name=" << bad;
}

TEST(ApplyScheme, SetsTheThreeFields) {
    RunConfig cfg;
    apply_scheme(cfg, "rs2d");
    EXPECT_EQ(cfg.formulation, Formulation::RS);
    EXPECT_EQ(cfg.p, 2);
    EXPECT_EQ(cfg.mode, Mode::dissipative);
    EXPECT_EQ(scheme_name(cfg), "rs2d");
}

TEST(Fmt, ShortestFormRoundTripsExactly) {
    for (double v : {0.1, 1.0 / 3.0, 6.2831853071795862, 2.5756449039238914e-07, -0.0, 320.0})
        EXPECT_EQ(std::stod(fmt(v)), v);
    EXPECT_EQ(fmt(0.1), "0.1");
    EXPECT_EQ(fmt(1.0), "1");
}

TEST(ValidateRunConfig, RejectsOutOfRangeValues) {
    const RunConfig good;
    {
        RunConfig c = good;
        c.N = 1;
        EXPECT_THROW(validate(c), std::invalid_argument);
    }
    {
        RunConfig c = good;
        c.p = 4;
        EXPECT_THROW(validate(c), std::invalid_argument);
    }
    {
        RunConfig c = good;
        c.t_end = -0.5;
        EXPECT_THROW(validate(c), std::invalid_argument);
    }
    {
        RunConfig c = good;
        c.problem = "kink";
        EXPECT_THROW(validate(c), std::invalid_argument);
    }
    {
        RunConfig c = good;
        c.cfl_factor = 0.0;
        EXPECT_THROW(validate(c), std::invalid_argument);
    }
    {
        RunConfig c = good;
        c.alpha = -1.0;
        EXPECT_THROW(validate(c), std::invalid_argument);
    }
    EXPECT_NO_THROW(validate(good));
}

TEST(PreparedRun, UsesTheCflStepAndProblemDomain) {
    RunConfig cfg;
    apply_scheme(cfg, "vw2c");
    cfg.N = 50;
    PreparedRun pr = prepare(cfg);
    EXPECT_DOUBLE_EQ(pr.dt, 0.1 * pr.mesh.dx / std::sqrt(1.5));
    EXPECT_EQ(pr.mesh.N, 50);
    EXPECT_EQ(pr.basis.order, 2);
    EXPECT_TRUE(pr.scfg.source != nullptr);
}

TEST(Regression, ManufacturedErrorsStayPinned) {
    // Frozen outputs of the current implementation at N = 320, t = 1,
    // cfl = 0.1 (collocation L2 error of psi).  These guard the assembled
    // schemes end to end; a coefficient regression anywhere moves them far
    // outside the band.
    struct Pin {
        const char* scheme;
        double value;
    };
    const Pin pins[] = {
        {"rs0c", 2.2155298833225023e-03},
        {"vw3d", 2.5756449039238914e-07},
    };
    for (const Pin& pin : pins) {
        RunConfig cfg;
        apply_scheme(cfg, pin.scheme);
        cfg.N = 320;
        cfg.t_end = 1.0;
        PreparedRun pr = prepare(cfg);
        MarchResult mr = execute(pr);
        const double e = l2_error(mr.state.psi, pr.pb.exact_psi, cfg.t_end);
        EXPECT_NEAR(e, pin.value, 1e-3 * pin.value) << pin.scheme;
    }
}

TEST_F(DriverFiles, RunWritesArtifactsWithStableLayout) {
    RunConfig cfg;
    apply_scheme(cfg, "vw1c");
    cfg.N = 40;
    cfg.t_end = 0.3;
    cfg.output_dir = (dir_ / "run").string();
    const RunSummary s = run_files(cfg);
    EXPECT_EQ(s.exit_code, 0);
    EXPECT_GT(s.steps, 0);
    ASSERT_TRUE(s.e_l2.has_value());

    const std::string energy = slurp(dir_ / "run" / "energy.csv");
    EXPECT_EQ(energy.substr(0, 4), "t,E\n");
    EXPECT_EQ(line_count(energy), s.steps + 2);  // header + initial + one per step

    const std::string snap = slurp(dir_ / "run" / "snapshot_0.3.csv");
    EXPECT_EQ(snap.substr(0, 11), "x,psi,a,b\n0");
    EXPECT_EQ(line_count(snap), 1 + 40 * 2);  // header + N * (p + 1) nodes

    const json j = json::parse(slurp(dir_ / "run" / "manifest.json"));
    EXPECT_EQ(j.at("scheme"), "vw1c");
    EXPECT_EQ(j.at("problem"), "manufactured");
    EXPECT_EQ(j.at("N"), 40);
    EXPECT_EQ(j.at("status"), "ok");
    EXPECT_TRUE(j.at("blow_up_time").is_null());
    EXPECT_DOUBLE_EQ(j.at("dt").get<double>(), s.dt);
    EXPECT_DOUBLE_EQ(j.at("e_l2").get<double>(), *s.e_l2);
    EXPECT_GE(j.at("wall_time_s").get<double>(), 0.0);
}

TEST_F(DriverFiles, RerunsAreByteIdentical) {
    RunConfig cfg;
    apply_scheme(cfg, "rs2d");
    cfg.N = 24;
    cfg.t_end = 0.2;
    cfg.snapshot_times = {0.1, 0.2};
    for (const char* sub : {"a", "b"}) {
        cfg.output_dir = (dir_ / sub).string();
        ASSERT_EQ(run_files(cfg).exit_code, 0);
    }
    for (const char* file : {"energy.csv", "snapshot_0.1.csv", "snapshot_0.2.csv"})
        EXPECT_EQ(slurp(dir_ / "a" / file), slurp(dir_ / "b" / file)) << file;
    // Manifests agree except for the wall-clock entry.
    json ja = json::parse(slurp(dir_ / "a" / "manifest.json"));
    json jb = json::parse(slurp(dir_ / "b" / "manifest.json"));
    ja.erase("wall_time_s");
    jb.erase("wall_time_s");
    EXPECT_EQ(ja, jb);
}

TEST_F(DriverFiles, ZeroHorizonWritesTheInitialSnapshot) {
    RunConfig cfg;
    apply_scheme(cfg, "vw3c");
    cfg.N = 64;
    cfg.t_end = 0.0;
    cfg.output_dir = (dir_ / "t0").string();
    const RunSummary s = run_files(cfg);
    EXPECT_EQ(s.exit_code, 0);
    EXPECT_EQ(s.steps, 0);
    EXPECT_TRUE(fs::exists(dir_ / "t0" / "snapshot_0.csv"));
    // Initial data are sampled at the collocation nodes, so against the
    // exact solution at t = 0 the collocation L2 error is identically zero.
    ASSERT_TRUE(s.e_l2.has_value());
    EXPECT_EQ(*s.e_l2, 0.0);
}

TEST_F(DriverFiles, BlowUpReportsExitCodeTwo) {
    RunConfig cfg;
    apply_scheme(cfg, "vw1c");
    cfg.N = 40;
    cfg.t_end = 1000.0;
    cfg.cfl_factor = 10.0;  // far outside the stability region
    cfg.output_dir = (dir_ / "boom").string();
    const RunSummary s = run_files(cfg);
    EXPECT_EQ(s.exit_code, 2);
    ASSERT_TRUE(s.blow_up_time.has_value());
    EXPECT_GT(*s.blow_up_time, 0.0);
    const json j = json::parse(slurp(dir_ / "boom" / "manifest.json"));
    EXPECT_EQ(j.at("status"), "blowup");
    EXPECT_DOUBLE_EQ(j.at("blow_up_time").get<double>(), *s.blow_up_time);
    EXPECT_TRUE(j.at("e_l2").is_null());
    EXPECT_FALSE(fs::exists(dir_ / "boom" / "energy.csv"));
}

TEST(ConvergenceStudy, ErrorsFallAtTheExpectedRate) {
    RunConfig cfg;
    apply_scheme(cfg, "rs1c");
    cfg.t_end = 1.0;
    const std::vector<ConvergenceRow> rows = convergence_study(cfg, 0, 2);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].N, 20);
    EXPECT_EQ(rows[2].N, 80);
    EXPECT_FALSE(rows[0].rate.has_value());
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LT(rows[i].error, rows[i - 1].error);
        ASSERT_TRUE(rows[i].rate.has_value());
    }
    EXPECT_NEAR(*rows[2].rate, 1.0, 0.4);  // p = 1 conservative: first order
    EXPECT_THROW(convergence_study(cfg, 2, 1), std::invalid_argument);
}

TEST_F(DriverFiles, ConvergenceCsvLayout) {
    RunConfig cfg;
    apply_scheme(cfg, "rs0c");
    cfg.t_end = 0.5;
    cfg.output_dir = (dir_ / "conv").string();
    const fs::path csv = convergence_files(cfg, 0, 1);
    const std::string text = slurp(csv);
    std::stringstream ss(text);
    std::string line;
    std::getline(ss, line);
    EXPECT_EQ(line, "i,N,error,rate");
    std::getline(ss, line);
    EXPECT_EQ(line.substr(0, 5), "0,20,");
    EXPECT_EQ(line.back(), ',');  // first row has no rate
    std::getline(ss, line);
    EXPECT_EQ(line.substr(0, 5), "1,40,");
    EXPECT_NE(line.back(), ',');
    const json j = json::parse(slurp(dir_ / "conv" / "manifest.json"));
    EXPECT_EQ(j.at("i_min"), 0);
    EXPECT_EQ(j.at("i_max"), 1);
    EXPECT_EQ(j.at("problem"), "manufactured");
}

}  // namespace
