/** \file driver.hpp
 * Run orchestration shared by the CLI and the test-suites: configuration,
 * scheme-shorthand parsing, deterministic CSV/JSON writers, single runs and
 * convergence studies.
 *
 * All CSV numbers use the shortest round-trip decimal form of the underlying
 * binary doubles, so reruns with identical configuration produce
 * byte-identical files; the JSON manifest is identical too except for its
 * wall-time entry.
 */

#pragma once

#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "vwdg/basis.hpp"
#include "vwdg/diagnostics.hpp"
#include "vwdg/mesh.hpp"
#include "vwdg/problems.hpp"
#include "vwdg/scheme_rs.hpp"
#include "vwdg/scheme_vw.hpp"
#include "vwdg/timestepper.hpp"

namespace vwdg {

/** Everything a single run needs; defaults match the standard experiments. */
struct RunConfig {
    Formulation formulation = Formulation::VW;
    int p = 3;
    Mode mode = Mode::conservative;
    int N = 100;
    double alpha = 0.5;
    double beta = 1.5;
    std::string problem = "manufactured";
    double t_end = 1.0;
    std::vector<double> snapshot_times;  ///< Empty means {t_end}.
    double shock_C = 0.1;
    double shock_theta = 1.0;
    double cfl_factor = 0.1;
    std::string output_dir;  ///< Empty means "<scheme>_<problem>".
};

/** Parses the scheme shorthand rs0c..vw3d. */
inline std::tuple<Formulation, int, Mode> parse_scheme(const std::string& s) {
    if (s.size() == 4) {
        Formulation f = Formulation::RS;
        bool ok = true;
        if (s.compare(0, 2, "rs") == 0)
            f = Formulation::RS;
        else if (s.compare(0, 2, "vw") == 0)
            f = Formulation::VW;
        else
            ok = false;
        const char pc = s[2], mc = s[3];
        if (ok && pc >= '0' && pc <= '3' && (mc == 'c' || mc == 'd'))
            return {f, pc - '0', mc == 'c' ? Mode::conservative : Mode::dissipative};
    }
    throw std::invalid_argument("unrecognized scheme '" + s + "' (expected rs0c..vw3d)");
}

inline std::string scheme_name(Formulation f, int p, Mode m) {
    std::string s = f == Formulation::RS ? "rs" : "vw";
    s += static_cast<char>('0' + p);
    s += m == Mode::conservative ? 'c' : 'd';
    return s;
}

inline std::string scheme_name(const RunConfig& cfg) {
    return scheme_name(cfg.formulation, cfg.p, cfg.mode);
}

/** Sets formulation, order and mode from a shorthand like "vw3d". */
inline void apply_scheme(RunConfig& cfg, const std::string& shorthand) {
    std::tie(cfg.formulation, cfg.p, cfg.mode) = parse_scheme(shorthand);
}

inline void validate(const RunConfig& cfg) {
    if (cfg.p < 0 || cfg.p > max_order) throw std::invalid_argument("p must be in 0..3");
    if (cfg.N < 2) throw std::invalid_argument("N must be at least 2");
    if (!(cfg.t_end >= 0.0)) throw std::invalid_argument("t_end must be nonnegative");
    validate(ElasticConstants{cfg.alpha, cfg.beta});
    SchemeConfig scfg;
    scfg.ec = {cfg.alpha, cfg.beta};
    scfg.shock_C = cfg.shock_C;
    scfg.shock_theta = cfg.shock_theta;
    validate(scfg);
    if (!(cfg.cfl_factor > 0.0)) throw std::invalid_argument("cfl_factor must be positive");
    if (cfg.problem != "manufactured" && cfg.problem != "gaussian" && cfg.problem != "travelling")
        throw std::invalid_argument("unknown problem: " + cfg.problem);
}

/** Shortest decimal form that round-trips to the same double. */
inline std::string fmt(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

/** A validated run, ready to execute. */
struct PreparedRun {
    ProblemSpec pb;
    Mesh mesh;
    NodalBasis basis;
    SchemeConfig scfg;
    TimeControls tc;
    double dt = 0.0;
    State st0;
};

inline PreparedRun prepare(const RunConfig& cfg) {
    validate(cfg);
    PreparedRun pr;
    pr.pb = make_problem(cfg.problem, {cfg.alpha, cfg.beta});
    pr.mesh = make_mesh(pr.pb.x_left, pr.pb.x_right, cfg.N, pr.pb.periodic);
    pr.basis = make_basis(cfg.p);
    pr.scfg.ec = {cfg.alpha, cfg.beta};
    pr.scfg.mode = cfg.mode;
    pr.scfg.shock_C = cfg.shock_C;
    pr.scfg.shock_theta = cfg.shock_theta;
    pr.scfg.source = pr.pb.source;
    pr.tc.t_end = cfg.t_end;
    pr.tc.cfl_factor = cfg.cfl_factor;
    pr.tc.snapshot_times =
        cfg.snapshot_times.empty() ? std::vector<double>{cfg.t_end} : cfg.snapshot_times;
    pr.dt = cfl_dt(pr.mesh, pr.scfg.ec, cfg.cfl_factor);
    pr.st0 = initial_state(pr.pb, cfg.formulation, pr.mesh, pr.basis);
    return pr;
}

/** Marches the prepared run to t_end. Throws BlowUpError on blow-up. */
inline MarchResult execute(const PreparedRun& pr) {
    auto f = [&pr](double t, const State& u) { return rhs(pr.scfg, u, t); };
    return march(f, pr.st0, pr.tc, pr.dt);
}

inline void write_snapshot_csv(const std::filesystem::path& path, const State& st) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    os << "x,psi,a,b\n";
    const int nn = st.psi.basis.n();
    for (int j = 0; j < st.psi.mesh.N; ++j)
        for (int k = 0; k < nn; ++k)
            os << fmt(st.psi.node_x(j, k)) << ',' << fmt(st.psi(j, k)) << ',' << fmt(st.a(j, k))
               << ',' << fmt(st.b(j, k)) << '\n';
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

inline void write_energy_csv(const std::filesystem::path& path, const EnergyTrace& trace) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    os << "t,E\n";
    for (std::size_t i = 0; i < trace.times.size(); ++i)
        os << fmt(trace.times[i]) << ',' << fmt(trace.energies[i]) << '\n';
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

/** What run_files reports back, mirroring the manifest. */
struct RunSummary {
    int exit_code = 0;
    double dt = 0.0;
    long steps = 0;
    double initial_energy = 0.0;
    double final_energy = 0.0;
    std::optional<double> e_l2;
    std::optional<double> blow_up_time;
    std::filesystem::path out_dir;
};

namespace detail {

inline nlohmann::ordered_json config_json(const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["scheme"] = scheme_name(cfg);
    j["formulation"] = cfg.formulation == Formulation::RS ? "rs" : "vw";
    j["p"] = cfg.p;
    j["mode"] = cfg.mode == Mode::conservative ? "conservative" : "dissipative";
    j["problem"] = cfg.problem;
    j["N"] = cfg.N;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["t_end"] = cfg.t_end;
    j["snapshot_times"] = cfg.snapshot_times;
    j["shock_C"] = cfg.shock_C;
    j["shock_theta"] = cfg.shock_theta;
    j["cfl_factor"] = cfg.cfl_factor;
    return j;
}

inline void write_manifest(const std::filesystem::path& path, const nlohmann::ordered_json& j) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    os << j.dump(2) << '\n';
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace detail

/** Runs one configuration and writes energy.csv, snapshot_<t>.csv and
 * manifest.json into the output directory. Returns exit code 0 on success
 * and 2 on blow-up (manifest records the blow-up time); I/O and
 * configuration failures throw. */
inline RunSummary run_files(const RunConfig& cfg) {
    const PreparedRun pr = prepare(cfg);
    const std::filesystem::path dir =
        cfg.output_dir.empty() ? std::filesystem::path(scheme_name(cfg) + "_" + cfg.problem)
                               : std::filesystem::path(cfg.output_dir);
    std::filesystem::create_directories(dir);

    RunSummary s;
    s.dt = pr.dt;
    s.out_dir = dir;
    s.initial_energy = discrete_energy(pr.st0);

    nlohmann::ordered_json j = detail::config_json(cfg);
    j["dt"] = pr.dt;
    j["initial_energy"] = s.initial_energy;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        MarchResult mr = execute(pr);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_energy_csv(dir / "energy.csv", mr.trace);
        for (const Snapshot& sn : mr.snapshots)
            write_snapshot_csv(dir / ("snapshot_" + fmt(sn.t) + ".csv"), sn.state);
        s.steps = mr.steps;
        s.final_energy = mr.trace.energies.back();
        if (pr.pb.exact_psi) s.e_l2 = l2_error(mr.state.psi, pr.pb.exact_psi, cfg.t_end);
        j["status"] = "ok";
        j["steps"] = mr.steps;
        j["final_energy"] = s.final_energy;
        if (s.e_l2)
            j["e_l2"] = *s.e_l2;
        else
            j["e_l2"] = nullptr;
        j["blow_up_time"] = nullptr;
        j["wall_time_s"] = wall;
    } catch (const BlowUpError& e) {
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        s.exit_code = 2;
        s.blow_up_time = e.t;
        j["status"] = "blowup";
        j["steps"] = nullptr;
        j["final_energy"] = nullptr;
        j["e_l2"] = nullptr;
        j["blow_up_time"] = e.t;
        j["wall_time_s"] = wall;
    }
    detail::write_manifest(dir / "manifest.json", j);
    return s;
}

/** One row of a convergence table. */
struct ConvergenceRow {
    int i = 0;
    int N = 0;
    double error = 0.0;
    std::optional<double> rate;  ///< Empty on the first row.
};

/** Manufactured-solution refinement study over N = 20 * 2^i, i in
 * [i_min, i_max]; the problem field of the base configuration is ignored. */
inline std::vector<ConvergenceRow> convergence_study(const RunConfig& base, int i_min, int i_max) {
    if (i_min < 0 || i_min > i_max) throw std::invalid_argument("need 0 <= i_min <= i_max");
    RunConfig cfg = base;
    cfg.problem = "manufactured";
    std::vector<ConvergenceRow> rows;
    for (int i = i_min; i <= i_max; ++i) {
        cfg.N = 20 * (1 << i);
        const PreparedRun pr = prepare(cfg);
        const MarchResult mr = execute(pr);
        ConvergenceRow row;
        row.i = i;
        row.N = cfg.N;
        row.error = l2_error(mr.state.psi, pr.pb.exact_psi, cfg.t_end);
        if (!rows.empty()) row.rate = std::log2(rows.back().error / row.error);
        rows.push_back(row);
    }
    return rows;
}

inline void write_convergence_csv(const std::filesystem::path& path,
                                  const std::vector<ConvergenceRow>& rows) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    os << "i,N,error,rate\n";
    for (const ConvergenceRow& r : rows) {
        os << r.i << ',' << r.N << ',' << fmt(r.error) << ',';
        if (r.rate) os << fmt(*r.rate);
        os << '\n';
    }
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

/** Runs the study and writes convergence.csv plus a small manifest into the
 * output directory. */
inline std::filesystem::path convergence_files(const RunConfig& base, int i_min, int i_max) {
    const std::vector<ConvergenceRow> rows = convergence_study(base, i_min, i_max);
    const std::filesystem::path dir =
        base.output_dir.empty()
            ? std::filesystem::path(scheme_name(base) + "_convergence")
            : std::filesystem::path(base.output_dir);
    std::filesystem::create_directories(dir);
    write_convergence_csv(dir / "convergence.csv", rows);
    nlohmann::ordered_json j = detail::config_json(base);
    j["problem"] = "manufactured";
    j["i_min"] = i_min;
    j["i_max"] = i_max;
    detail::write_manifest(dir / "manifest.json", j);
    return dir / "convergence.csv";
}

}  // namespace vwdg
