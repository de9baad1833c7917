#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phinet/netmodel.hpp"
#include "phinet/spectral.hpp"

namespace phinet {

enum class OutputFormat { kCsv, kJson };

struct SweepConfig {
  // Bundled network id "1".."6" or a network file path.
  std::string network = "1";
  double g_min = 0.0;
  double g_max = 0.1;
  int steps = 50;
  double stop_at_fraction_of_critical = 0.999;
  // Noise variance for bundled networks; network files carry their own.
  double noise_sigma2 = 1.0;
  OutputFormat output = OutputFormat::kCsv;
  std::optional<std::uint64_t> seed;

  // Throws InvalidArgument on a malformed config.
  void validate() const;
  std::vector<double> grid() const;
};

struct SweepRow {
  double g = 0.0;
  bool stable = false;
  double spectral_radius = 0.0;
  // Empty whenever `stable` is false.
  std::optional<double> phi_nats;
  std::optional<double> leading_cov_eig;
  std::optional<double> dominance_ratio;
};

// Bundled id or file. Throws InvalidArgument for a bad id, ParseError for a
// bad file.
NetworkModel resolve_network(const std::string& network, double sigma2 = 1.0);

// One row per grid point, ascending in g. A row is marked stable, and carries
// numbers, only when g < stop_at_fraction_of_critical * g* and the model is
// stable at g; other rows keep just g and the spectral radius.
std::vector<SweepRow> run_sweep(const SweepConfig& config);
std::vector<SweepRow> run_sweep(const NetworkModel& model, const SweepConfig& config);

inline constexpr const char* kSweepCsvHeader =
    "g,phi_nats,stable,spectral_radius,leading_cov_eig,dominance_ratio";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& out, const std::vector<SweepRow>& rows);

struct PoleTable {
  std::vector<double> spectral;  // 1/|mu|, ascending
  std::vector<double> analytic;  // denominator roots, ascending
  // Max relative gap between matched entries; +inf when the counts differ,
  // 0 for two empty columns.
  double max_rel_discrepancy = 0.0;
};

PoleTable report_poles(const AdjacencyMatrix& adjacency);
void write_poles(std::ostream& out, const PoleTable& table, OutputFormat format);

std::vector<double> report_spectrum(const AdjacencyMatrix& adjacency);
void write_spectrum(std::ostream& out, const std::vector<double>& spectrum, OutputFormat format);

void write_modes(std::ostream& out, const std::vector<ModeProfile>& profiles, OutputFormat format);

// %.12g
std::string format_number(double value);

}  // namespace phinet
