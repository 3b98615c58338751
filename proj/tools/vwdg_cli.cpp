/** Command-line driver: single runs and manufactured-solution convergence
 * studies for the DG variational wave equation solver.
 *
 * Exit codes: 0 success, 1 configuration or I/O error, 2 blow-up.
 */

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "vwdg/vwdg.hpp"

namespace {

void add_common_options(CLI::App* sub, vwdg::RunConfig& cfg, std::string& scheme) {
    sub->add_option("scheme", scheme, "scheme shorthand <rs|vw><0-3><c|d>, e.g. vw3d")
        ->required();
    sub->add_option("--problem", cfg.problem, "manufactured | gaussian | travelling")
        ->capture_default_str();
    sub->add_option("--N", cfg.N, "number of elements")->capture_default_str();
    sub->add_option("--alpha", cfg.alpha, "elastic constant alpha > 0")->capture_default_str();
    sub->add_option("--beta", cfg.beta, "elastic constant beta > 0")->capture_default_str();
    sub->add_option("--shock-C", cfg.shock_C, "shock-capturing constant")->capture_default_str();
    sub->add_option("--shock-theta", cfg.shock_theta, "shock-capturing exponent")
        ->capture_default_str();
    sub->add_option("--cfl", cfg.cfl_factor, "CFL factor")->capture_default_str();
    sub->add_option("--output", cfg.output_dir, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-conservative/dissipative DG solver for the 1D variational wave "
                 "equation psi_tt = c (c psi_x)_x"};
    app.require_subcommand(1);

    vwdg::RunConfig cfg;
    std::string scheme;
    int i_min = 4, i_max = 8;

    CLI::App* run = app.add_subcommand("run", "run one scheme and write CSV/JSON artifacts");
    add_common_options(run, cfg, scheme);
    run->add_option("--t-end", cfg.t_end, "final time")->capture_default_str();
    run->add_option("--snapshot-times", cfg.snapshot_times,
                    "times to write snapshot CSVs at (default: t_end)");

    CLI::App* conv =
        app.add_subcommand("convergence", "manufactured-solution study over N = 20*2^i");
    add_common_options(conv, cfg, scheme);
    conv->add_option("--t-end", cfg.t_end, "final time")->capture_default_str();
    conv->add_option("--i-min", i_min, "first refinement index")->capture_default_str();
    conv->add_option("--i-max", i_max, "last refinement index")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        vwdg::apply_scheme(cfg, scheme);
        if (run->parsed()) {
            const vwdg::RunSummary s = vwdg::run_files(cfg);
            if (s.exit_code == 0) {
                std::cout << vwdg::scheme_name(cfg) << " " << cfg.problem << ": " << s.steps
                          << " steps, dt = " << s.dt << ", E(0) = " << s.initial_energy
                          << ", E(T) = " << s.final_energy;
                if (s.e_l2) std::cout << ", e_L2 = " << *s.e_l2;
                std::cout << "\nartifacts in " << s.out_dir.string() << "\n";
            } else {
                std::cout << vwdg::scheme_name(cfg) << " " << cfg.problem
                          << ": blow-up at t = " << *s.blow_up_time << "\nartifacts in "
                          << s.out_dir.string() << "\n";
            }
            return s.exit_code;
        }
        const auto csv = vwdg::convergence_files(cfg, i_min, i_max);
        std::cout << vwdg::scheme_name(cfg) << " convergence table written to " << csv.string()
                  << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
