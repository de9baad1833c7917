#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "phinet/errors.hpp"
#include "phinet/sweep.hpp"

namespace phinet {
namespace {

SweepConfig config(std::string network, double g_min, double g_max, int steps) {
  SweepConfig c;
  c.network = std::move(network);
  c.g_min = g_min;
  c.g_max = g_max;
  c.steps = steps;
  return c;
}

TEST(SweepConfig, Validation) {
  EXPECT_NO_THROW(SweepConfig{}.validate());
  EXPECT_THROW(config("1", 0.1, 0.1, 5).validate(), InvalidArgument);
  EXPECT_THROW(config("1", -0.1, 0.1, 5).validate(), InvalidArgument);
  EXPECT_THROW(config("1", 0.0, 0.1, 1).validate(), InvalidArgument);
  auto c = config("1", 0.0, 0.1, 5);
  c.stop_at_fraction_of_critical = 0.0;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c.stop_at_fraction_of_critical = 1.01;
  EXPECT_THROW(c.validate(), InvalidArgument);
  c.stop_at_fraction_of_critical = 1.0;
  c.noise_sigma2 = 0.0;
  EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(SweepConfig, GridEndpoints) {
  const auto g = config("1", 0.0, 0.11, 50).grid();
  ASSERT_EQ(g.size(), 50u);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), 0.11);
}

TEST(RunSweep, TwoSteps) {
  for (const char* id : {"1", "3", "6"}) {
    const auto rows = run_sweep(config(id, 0.0, 0.05, 2));
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].g, 0.0);
    EXPECT_EQ(rows[1].g, 0.05);
    ASSERT_TRUE(rows[0].phi_nats.has_value());
    EXPECT_LE(std::abs(*rows[0].phi_nats), 1e-12);
    EXPECT_GT(*rows[1].phi_nats, 0.0);
  }
}

TEST(RunSweep, CompleteGraphProfileClipsAtPole) {
  const auto rows = run_sweep(config("1", 0.0, 0.11, 50));
  ASSERT_EQ(rows.size(), 50u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GT(rows[i].g, rows[i - 1].g);
    ASSERT_TRUE(rows[i].stable);
    EXPECT_GT(*rows[i].phi_nats, *rows[i - 1].phi_nats);
    EXPECT_GE(*rows[i].dominance_ratio, *rows[i - 1].dominance_ratio);
  }
  // 5 ln((1 - 73 q) / ((1 - q)(1 - 81 q))) at g = 0.11
  EXPECT_NEAR(*rows.back().phi_nats, 8.905300, 1e-5);

  const auto past = run_sweep(config("1", 0.0, 0.2, 21));
  for (const auto& r : past) {
    EXPECT_EQ(r.stable, r.g < 0.999 / 9.0) << r.g;
    EXPECT_NEAR(r.spectral_radius, 9.0 * r.g, 1e-12);
    EXPECT_EQ(r.phi_nats.has_value(), r.stable);
  }
}

TEST(RunSweep, NonNegativeEverywhere) {
  for (int id = 1; id <= kPaperNetworkCount; ++id) {
    for (const auto& r : run_sweep(config(std::to_string(id), 0.0, 1.0, 200))) {
      if (r.stable) EXPECT_GE(*r.phi_nats, -1e-12) << id << " g=" << r.g;
    }
  }
}

TEST(RunSweep, BadNetwork) {
  EXPECT_THROW(run_sweep(config("7", 0.0, 0.1, 3)), InvalidArgument);
  EXPECT_THROW(run_sweep(config("/nonexistent/file.net", 0.0, 0.1, 3)), ParseError);
}

TEST(RunSweep, ReadsNetworkFiles) {
  const auto path = bundled_data_dir() / "network6.net";
  const auto from_file = run_sweep(config(path.string(), 0.0, 0.4, 9));
  const auto bundled = run_sweep(config("6", 0.0, 0.4, 9));
  ASSERT_EQ(from_file.size(), bundled.size());
  for (std::size_t i = 0; i < bundled.size(); ++i) EXPECT_EQ(*from_file[i].phi_nats, *bundled[i].phi_nats);
}

TEST(WriteSweep, CsvAndJson) {
  const auto rows = run_sweep(config("6", 0.0, 0.6, 4));
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  EXPECT_EQ(csv.str(),
            "g,phi_nats,stable,spectral_radius,leading_cov_eig,dominance_ratio\n"
            "0,0,true,0,1,1\n"
            "0.2," + format_number(*rows[1].phi_nats) + ",true,0.4," +
                format_number(*rows[1].leading_cov_eig) + "," +
                format_number(*rows[1].dominance_ratio) + "\n"
            "0.4," + format_number(*rows[2].phi_nats) + ",true,0.8," +
                format_number(*rows[2].leading_cov_eig) + "," +
                format_number(*rows[2].dominance_ratio) + "\n"
            "0.6,,false,1.2,,\n");

  std::ostringstream js;
  write_sweep_json(js, rows);
  const auto j = nlohmann::json::parse(js.str());
  EXPECT_EQ(j["units"], "nats");
  ASSERT_EQ(j["rows"].size(), 4u);
  EXPECT_TRUE(j["rows"][3]["phi_nats"].is_null());
  EXPECT_EQ(j["rows"][1]["phi_nats"].get<double>(), *rows[1].phi_nats);
}

TEST(ReportPoles, CompleteGraph) {
  const auto t = report_poles(paper_network(1));
  ASSERT_EQ(t.spectral.size(), 2u);
  EXPECT_NEAR(t.analytic[0], 1.0 / 9.0, 1e-12);
  EXPECT_NEAR(t.analytic[1], 1.0, 1e-12);
  EXPECT_LE(t.max_rel_discrepancy, 1e-10);

  std::ostringstream csv;
  write_poles(csv, t, OutputFormat::kCsv);
  EXPECT_EQ(csv.str().rfind("index,spectral,analytic\n0,0.111111111111,0.111111111111\n", 0), 0u);

  const auto empty = report_poles(build_empty(2));
  EXPECT_TRUE(empty.spectral.empty());
  EXPECT_TRUE(empty.analytic.empty());
  EXPECT_EQ(empty.max_rel_discrepancy, 0.0);
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(1.0 / 9.0), "0.111111111111");
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(1e-20), "1e-20");
}

}  // namespace
}  // namespace phinet
