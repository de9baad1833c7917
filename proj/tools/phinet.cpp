// phinet: integrated information of linear-Gaussian networks from the
// command line. Subcommands: sweep, poles, spectrum, closed-form, modes,
// simulate.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "phinet/analytic.hpp"
#include "phinet/errors.hpp"
#include "phinet/lyapunov.hpp"
#include "phinet/phi.hpp"
#include "phinet/simulate.hpp"
#include "phinet/spectral.hpp"
#include "phinet/sweep.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericalError = 3, kIoError = 4 };

struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoFailure("cannot write " + out_path);
  out << text;
  if (!out) throw IoFailure("write failed for " + out_path);
}

phinet::OutputFormat parse_format(const std::string& s) {
  return s == "json" ? phinet::OutputFormat::kJson : phinet::OutputFormat::kCsv;
}

struct CommonOptions {
  std::string network = "1";
  std::string output = "csv";
  std::string out;
  double noise_sigma2 = 1.0;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_format = true) {
  cmd->add_option("--network", o.network, "Bundled network id 1..6 or a network file")
      ->capture_default_str();
  cmd->add_option("--noise-sigma2", o.noise_sigma2, "Isotropic noise variance (bundled networks)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  if (with_format) {
    cmd->add_option("--output", o.output, "Output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
  }
  cmd->add_option("--out", o.out, "Write to this path instead of standard output");
}

void add_grid(CLI::App* cmd, phinet::SweepConfig& c) {
  cmd->add_option("--g-min", c.g_min, "Smallest coupling")->capture_default_str();
  cmd->add_option("--g-max", c.g_max, "Largest coupling")->capture_default_str();
  cmd->add_option("--steps", c.steps, "Number of grid points")->capture_default_str();
  cmd->add_option("--stop-at-fraction-of-critical", c.stop_at_fraction_of_critical,
                  "Evaluate only below this fraction of the first critical coupling")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrated information of networks with linear Gaussian dynamics"};
  app.require_subcommand(1);

  CommonOptions common;
  phinet::SweepConfig sweep_cfg;
  std::uint64_t seed = 0;

  auto* sweep = app.add_subcommand("sweep", "Phi profile over a coupling grid");
  add_common(sweep, common);
  add_grid(sweep, sweep_cfg);
  sweep->add_option("--seed", seed, "Accepted for interface symmetry; the sweep is deterministic");

  auto* poles = app.add_subcommand("poles", "Critical couplings: spectral vs closed-form roots");
  add_common(poles, common);

  auto* spectrum = app.add_subcommand("spectrum", "Adjacency eigenvalues at unit coupling");
  add_common(spectrum, common);

  auto* closed = app.add_subcommand("closed-form", "Exact rational phi(g) as JSON");
  add_common(closed, common, false);

  auto* modes = app.add_subcommand("modes", "Stationary covariance eigenvalues over a grid");
  add_common(modes, common);
  add_grid(modes, sweep_cfg);

  double sim_g = 0.1;
  int sim_steps = 100000;
  int sim_burn_in = -1;
  std::string dump_path;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo cross-check of covariance and phi");
  add_common(simulate, common, false);
  simulate->add_option("--g", sim_g, "Coupling")->capture_default_str();
  simulate->add_option("--steps", sim_steps, "Trajectory length T")->capture_default_str();
  simulate->add_option("--seed", seed, "64-bit seed")->capture_default_str();
  simulate->add_option("--burn-in", sim_burn_in, "Burn-in steps (default: automatic)");
  simulate->add_option("--dump", dump_path, "Write the trajectory as CSV to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfigError;
  }

  try {
    const auto format = parse_format(common.output);
    std::ostringstream out;

    if (*sweep) {
      sweep_cfg.network = common.network;
      sweep_cfg.noise_sigma2 = common.noise_sigma2;
      sweep_cfg.output = format;
      if (sweep->count("--seed")) sweep_cfg.seed = seed;
      const auto rows = phinet::run_sweep(sweep_cfg);
      if (format == phinet::OutputFormat::kJson) {
        phinet::write_sweep_json(out, rows);
      } else {
        phinet::write_sweep_csv(out, rows);
      }
    } else if (*poles) {
      const auto model = phinet::resolve_network(common.network, common.noise_sigma2);
      phinet::write_poles(out, phinet::report_poles(model.adjacency()), format);
    } else if (*spectrum) {
      const auto model = phinet::resolve_network(common.network, common.noise_sigma2);
      phinet::write_spectrum(out, phinet::report_spectrum(model.adjacency()), format);
    } else if (*closed) {
      const auto model = phinet::resolve_network(common.network, common.noise_sigma2);
      const auto sigma2 = model.noise().isotropic_sigma2();
      if (!sigma2) throw phinet::InvalidArgument("closed form needs isotropic noise");
      out << phinet::to_json(phinet::phi_rational(model.adjacency(), mpq_class(*sigma2))) << '\n';
    } else if (*modes) {
      sweep_cfg.network = common.network;
      sweep_cfg.noise_sigma2 = common.noise_sigma2;
      sweep_cfg.validate();
      const auto model = phinet::resolve_network(common.network, common.noise_sigma2);
      const double clip = sweep_cfg.stop_at_fraction_of_critical *
                          phinet::spectral_report(model.adjacency()).first_critical;
      std::vector<double> grid;
      for (double g : sweep_cfg.grid())
        if (g < clip) grid.push_back(g);
      phinet::write_modes(out, phinet::dominance_curve(model, grid), format);
    } else if (*simulate) {
      const auto model =
          phinet::resolve_network(common.network, common.noise_sigma2).with_coupling(sim_g);
      std::optional<int> burn_in;
      if (sim_burn_in >= 0) burn_in = sim_burn_in;
      const auto traj = phinet::sample_trajectory(model, sim_steps, seed, burn_in);
      const auto est = phinet::empirical_phi(traj, model);
      const auto exact = phinet::integrated_information(model);
      const auto stationary = phinet::solve_stationary(model);
      const double cov_err =
          (phinet::empirical_covariance(traj) - stationary.sigma).cwiseAbs().maxCoeff();

      nlohmann::json j;
      j["units"] = "nats";
      j["g"] = sim_g;
      j["steps"] = sim_steps;
      j["burn_in"] = traj.burn_in;
      j["seed"] = seed;
      j["normal_algorithm"] = std::string(phinet::kNormalAlgorithm);
      j["empirical_phi_nats"] = est.result.phi_nats;
      j["bias_bound"] = est.bias_bound;
      j["model_phi_nats"] = exact.phi_nats;
      j["max_abs_covariance_error"] = cov_err;
      out << j.dump(2) << '\n';

      if (!dump_path.empty()) {
        std::ostringstream csv;
        phinet::write_trajectory_csv(csv, traj);
        emit(csv.str(), dump_path);
      }
    }
    emit(out.str(), common.out);
    return kOk;
  } catch (const phinet::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const phinet::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const phinet::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kIoError;
  } catch (const IoFailure& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIoError;
  }
}
