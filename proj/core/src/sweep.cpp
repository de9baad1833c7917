#include "phinet/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "phinet/analytic.hpp"
#include "phinet/errors.hpp"
#include "phinet/lyapunov.hpp"
#include "phinet/parallel.hpp"
#include "phinet/phi.hpp"

namespace phinet {

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string optional_field(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string{};
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void SweepConfig::validate() const {
  if (!std::isfinite(g_min) || !std::isfinite(g_max) || g_min < 0.0 || !(g_min < g_max)) {
    throw InvalidArgument("sweep needs 0 <= g_min < g_max");
  }
  if (steps < 2) throw InvalidArgument("sweep needs steps >= 2");
  if (!(stop_at_fraction_of_critical > 0.0 && stop_at_fraction_of_critical <= 1.0)) {
    throw InvalidArgument("stop_at_fraction_of_critical must lie in (0, 1]");
  }
  if (!(noise_sigma2 > 0.0) || !std::isfinite(noise_sigma2)) {
    throw InvalidArgument("noise_sigma2 must be positive");
  }
}

std::vector<double> SweepConfig::grid() const {
  std::vector<double> g(static_cast<std::size_t>(steps));
  const double step = (g_max - g_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) g[static_cast<std::size_t>(i)] = g_min + i * step;
  g.back() = g_max;
  return g;
}

NetworkModel resolve_network(const std::string& network, double sigma2) {
  int id = 0;
  const auto* last = network.data() + network.size();
  auto [ptr, ec] = std::from_chars(network.data(), last, id);
  if (ec == std::errc{} && ptr == last) {
    return NetworkModel(paper_network(id), 0.0, sigma2);
  }
  return load_network(network, 0.0);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  return run_sweep(resolve_network(config.network, config.noise_sigma2), config);
}

std::vector<SweepRow> run_sweep(const NetworkModel& model, const SweepConfig& config) {
  config.validate();
  const auto report = spectral_report(model.adjacency());
  const double clip = config.stop_at_fraction_of_critical * report.first_critical;
  const auto grid = config.grid();

  return parallel_map(grid.size(), [&](std::size_t i) {
    SweepRow row;
    row.g = grid[i];
    const NetworkModel at_g = model.with_coupling(row.g);
    const auto stability = is_stable(at_g);
    row.spectral_radius = stability.spectral_radius;
    if (!stability.stable || !(row.g < clip)) return row;

    const auto stationary = solve_stationary(at_g);
    const auto phi = assemble_phi(conditional_covariances(at_g, stationary.sigma), row.g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(stationary.sigma, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = es.eigenvalues();  // ascending
    row.stable = true;
    row.phi_nats = phi.phi_nats;
    row.leading_cov_eig = ev(ev.size() - 1);
    row.dominance_ratio = ev.size() > 1 ? ev(ev.size() - 1) / ev(ev.size() - 2) : 1.0;
    return row;
  });
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << format_number(r.g) << ',' << optional_field(r.phi_nats) << ','
        << (r.stable ? "true" : "false") << ',' << format_number(r.spectral_radius) << ','
        << optional_field(r.leading_cov_eig) << ',' << optional_field(r.dominance_ratio) << '\n';
  }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  nlohmann::json j;
  j["units"] = "nats";
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) {
    j["rows"].push_back({{"g", r.g},
                         {"phi_nats", optional_number(r.phi_nats)},
                         {"stable", r.stable},
                         {"spectral_radius", r.spectral_radius},
                         {"leading_cov_eig", optional_number(r.leading_cov_eig)},
                         {"dominance_ratio", optional_number(r.dominance_ratio)}});
  }
  out << j.dump(2) << '\n';
}

PoleTable report_poles(const AdjacencyMatrix& adjacency) {
  PoleTable t;
  try {
    t.spectral = critical_couplings(adjacency);
  } catch (const NoCriticalityError&) {
  }
  t.analytic = denominator_poles(phi_rational(adjacency));
  if (t.spectral.size() != t.analytic.size()) {
    t.max_rel_discrepancy = std::numeric_limits<double>::infinity();
    return t;
  }
  for (std::size_t i = 0; i < t.spectral.size(); ++i) {
    const double rel = std::abs(t.spectral[i] - t.analytic[i]) / std::abs(t.spectral[i]);
    t.max_rel_discrepancy = std::max(t.max_rel_discrepancy, rel);
  }
  return t;
}

void write_poles(std::ostream& out, const PoleTable& table, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    nlohmann::json j;
    j["spectral"] = table.spectral;
    j["analytic"] = table.analytic;
    j["max_rel_discrepancy"] = std::isfinite(table.max_rel_discrepancy)
                                   ? nlohmann::json(table.max_rel_discrepancy)
                                   : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
    return;
  }
  out << "index,spectral,analytic\n";
  const std::size_t rows = std::max(table.spectral.size(), table.analytic.size());
  for (std::size_t i = 0; i < rows; ++i) {
    out << i << ',' << (i < table.spectral.size() ? format_number(table.spectral[i]) : "") << ','
        << (i < table.analytic.size() ? format_number(table.analytic[i]) : "") << '\n';
  }
  out << "# max_rel_discrepancy=" << format_number(table.max_rel_discrepancy) << '\n';
}

std::vector<double> report_spectrum(const AdjacencyMatrix& adjacency) {
  return adjacency_spectrum(adjacency);
}

void write_spectrum(std::ostream& out, const std::vector<double>& spectrum, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    out << nlohmann::json{{"eigenvalues", spectrum}}.dump(2) << '\n';
    return;
  }
  out << "index,eigenvalue\n";
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    // Round-off zeros print as 0 rather than 1e-16 noise.
    const double v = std::abs(spectrum[i]) < 1e-12 ? 0.0 : spectrum[i];
    out << i << ',' << format_number(v) << '\n';
  }
}

void write_modes(std::ostream& out, const std::vector<ModeProfile>& profiles, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : profiles) {
      j.push_back({{"g", p.coupling},
                   {"covariance_eigenvalues", p.covariance_eigenvalues},
                   {"dominance_ratio", p.dominance_ratio}});
    }
    out << j.dump(2) << '\n';
    return;
  }
  const std::size_t n = profiles.empty() ? 0 : profiles.front().covariance_eigenvalues.size();
  out << 'g';
  for (std::size_t i = 0; i < n; ++i) out << ",eig_" << i;
  out << ",dominance_ratio\n";
  for (const auto& p : profiles) {
    out << format_number(p.coupling);
    for (double v : p.covariance_eigenvalues) out << ',' << format_number(v);
    out << ',' << format_number(p.dominance_ratio) << '\n';
  }
}

}  // namespace phinet
