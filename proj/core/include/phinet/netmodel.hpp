#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

namespace phinet {

// Square real weight matrix of a network. Entry (i, j) is the weight with
// which node j drives node i in x[t+1] = A x[t] + e[t]. Immutable once built.
class AdjacencyMatrix {
 public:
  // Validates squareness and finiteness. With `symmetric` set, the matrix must
  // equal its transpose exactly.
  static AdjacencyMatrix from_weights(Eigen::MatrixXd weights, bool symmetric);

  // Convenience: builds a symmetric matrix when the weights happen to be
  // symmetric, a general one otherwise.
  static AdjacencyMatrix from_weights(Eigen::MatrixXd weights);

  int size() const { return static_cast<int>(weights_.rows()); }
  const Eigen::MatrixXd& weights() const { return weights_; }
  bool symmetric() const { return symmetric_; }
  bool has_self_loops() const { return has_self_loops_; }

  friend bool operator==(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
    return a.symmetric_ == b.symmetric_ && a.weights_.rows() == b.weights_.rows() &&
           a.weights_.cols() == b.weights_.cols() && a.weights_ == b.weights_;
  }

 private:
  AdjacencyMatrix(Eigen::MatrixXd weights, bool symmetric);

  Eigen::MatrixXd weights_;
  bool symmetric_ = false;
  bool has_self_loops_ = false;
};

// Covariance of the innovation noise e[t]. Stored symmetrized; positive
// definiteness is checked at construction.
class NoiseCovariance {
 public:
  static NoiseCovariance isotropic(int n, double sigma2);
  static NoiseCovariance from_matrix(Eigen::MatrixXd matrix);

  int size() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  // Set only when the covariance is sigma2 * I.
  std::optional<double> isotropic_sigma2() const { return isotropic_sigma2_; }
  bool is_diagonal() const;

 private:
  NoiseCovariance(Eigen::MatrixXd matrix, std::optional<double> sigma2)
      : matrix_(std::move(matrix)), isotropic_sigma2_(sigma2) {}

  Eigen::MatrixXd matrix_;
  std::optional<double> isotropic_sigma2_;
};

// Adjacency template scaled by a global coupling, plus innovation noise.
class NetworkModel {
 public:
  NetworkModel(AdjacencyMatrix adjacency, double coupling, NoiseCovariance noise);
  // Isotropic noise shortcut.
  NetworkModel(AdjacencyMatrix adjacency, double coupling, double sigma2 = 1.0);

  const AdjacencyMatrix& adjacency() const { return adjacency_; }
  double coupling() const { return coupling_; }
  const NoiseCovariance& noise() const { return noise_; }
  int size() const { return adjacency_.size(); }

  // g * template.
  Eigen::MatrixXd effective() const { return coupling_ * adjacency_.weights(); }

  NetworkModel with_coupling(double g) const { return {adjacency_, g, noise_}; }

 private:
  AdjacencyMatrix adjacency_;
  double coupling_;
  NoiseCovariance noise_;
};

// Complete graph K_n with unit weights. Requires n >= 2.
AdjacencyMatrix build_complete(int n);

// Cycle C_n with unit weights. Requires n >= 3.
AdjacencyMatrix build_cycle(int n);

// Moebius ladder: C_n plus chords joining antipodal nodes. Requires even n >= 4.
AdjacencyMatrix build_mobius_ladder(int n);

// Empty graph on n >= 1 nodes.
AdjacencyMatrix build_empty(int n);

// Builds a symmetric unit-weight template from an undirected edge list.
AdjacencyMatrix from_edges(int n, std::span<const std::pair<int, int>> edges);

inline constexpr int kPaperNetworkCount = 6;

// The six bundled ten-node networks, ordered from densest (1, complete graph)
// to sparsest (6, ten-cycle).
AdjacencyMatrix paper_network(int id);

// Loads the text network format:
//
//   n <count> symmetric <true|false> noise <sigma2|file>
//   u v w
//   ...
//
// `u v w` sets entry (u, v) to w (and (v, u) when symmetric). Indices are
// 0-based, '#' starts a comment. The noise token is either a positive number
// (isotropic variance) or a path, relative to the network file, of a
// whitespace-separated n x n matrix. Weights are taken as the template and
// scaled by `coupling`.
NetworkModel load_network(const std::filesystem::path& path, double coupling = 1.0);

// Parses the same format from a string; `base_dir` resolves a noise file.
NetworkModel parse_network(std::string_view text, double coupling = 1.0,
                           const std::filesystem::path& base_dir = {});

// Writes `adjacency` in the network file format with isotropic noise.
std::string format_network(const AdjacencyMatrix& adjacency, double sigma2 = 1.0);

// Directory holding the bundled network files, or empty when unknown.
std::filesystem::path bundled_data_dir();

}  // namespace phinet
