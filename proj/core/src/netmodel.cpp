#include "phinet/netmodel.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "phinet/errors.hpp"

namespace phinet {

namespace {

bool all_finite(const Eigen::MatrixXd& m) { return m.allFinite(); }

std::optional<double> parse_double(std::string_view token) {
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

std::optional<long> parse_long(std::string_view token) {
  long value = 0;
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) line = line.substr(0, pos);
  return line;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Eigen::MatrixXd parse_matrix_file(const std::filesystem::path& path, int n) {
  const std::string text = read_file(path);
  std::vector<double> values;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    for (auto token : split_ws(strip_comment(line))) {
      auto v = parse_double(token);
      if (!v) throw ParseError("bad number '" + std::string(token) + "' in " + path.string());
      values.push_back(*v);
    }
  }
  if (values.size() != static_cast<std::size_t>(n) * n) {
    throw ParseError("noise file " + path.string() + " holds " + std::to_string(values.size()) +
                     " values, expected " + std::to_string(n * n));
  }
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = values[static_cast<std::size_t>(i) * n + j];
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// AdjacencyMatrix

AdjacencyMatrix::AdjacencyMatrix(Eigen::MatrixXd weights, bool symmetric)
    : weights_(std::move(weights)), symmetric_(symmetric) {
  has_self_loops_ = (weights_.diagonal().array() != 0.0).any();
}

AdjacencyMatrix AdjacencyMatrix::from_weights(Eigen::MatrixXd weights, bool symmetric) {
  if (weights.rows() != weights.cols() || weights.rows() == 0) {
    throw InvalidArgument("adjacency matrix must be square and non-empty");
  }
  if (!all_finite(weights)) throw InvalidArgument("adjacency matrix has non-finite entries");
  if (symmetric && weights != weights.transpose()) {
    throw InvalidArgument("adjacency matrix flagged symmetric but is not");
  }
  return AdjacencyMatrix(std::move(weights), symmetric);
}

AdjacencyMatrix AdjacencyMatrix::from_weights(Eigen::MatrixXd weights) {
  const bool symmetric = weights.rows() == weights.cols() && weights == weights.transpose();
  return from_weights(std::move(weights), symmetric);
}

// ---------------------------------------------------------------------------
// NoiseCovariance

NoiseCovariance NoiseCovariance::isotropic(int n, double sigma2) {
  if (n < 1) throw InvalidArgument("noise dimension must be positive");
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw InvalidArgument("noise variance must be positive and finite");
  }
  return NoiseCovariance(sigma2 * Eigen::MatrixXd::Identity(n, n), sigma2);
}

NoiseCovariance NoiseCovariance::from_matrix(Eigen::MatrixXd matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() == 0) {
    throw InvalidArgument("noise covariance must be square and non-empty");
  }
  if (!matrix.allFinite()) throw InvalidArgument("noise covariance has non-finite entries");
  Eigen::MatrixXd sym = 0.5 * (matrix + matrix.transpose());
  Eigen::LLT<Eigen::MatrixXd> llt(sym);
  if (llt.info() != Eigen::Success) {
    throw InvalidArgument("noise covariance is not positive definite");
  }
  const double d = sym(0, 0);
  const bool iso = sym == d * Eigen::MatrixXd::Identity(sym.rows(), sym.cols());
  return NoiseCovariance(std::move(sym), iso ? std::optional<double>(d) : std::nullopt);
}

bool NoiseCovariance::is_diagonal() const {
  return matrix_ == Eigen::MatrixXd(matrix_.diagonal().asDiagonal());
}

// ---------------------------------------------------------------------------
// NetworkModel

NetworkModel::NetworkModel(AdjacencyMatrix adjacency, double coupling, NoiseCovariance noise)
    : adjacency_(std::move(adjacency)), coupling_(coupling), noise_(std::move(noise)) {
  if (!(coupling_ >= 0.0) || !std::isfinite(coupling_)) {
    throw InvalidArgument("coupling must be finite and non-negative");
  }
  if (noise_.size() != adjacency_.size()) {
    throw InvalidArgument("noise covariance and adjacency sizes differ");
  }
}

NetworkModel::NetworkModel(AdjacencyMatrix adjacency, double coupling, double sigma2)
    : NetworkModel(adjacency, coupling, NoiseCovariance::isotropic(adjacency.size(), sigma2)) {}

// ---------------------------------------------------------------------------
// Builders

AdjacencyMatrix build_complete(int n) {
  if (n < 2) throw InvalidArgument("complete graph needs n >= 2");
  Eigen::MatrixXd w = Eigen::MatrixXd::Ones(n, n);
  w.diagonal().setZero();
  return AdjacencyMatrix::from_weights(std::move(w), true);
}

AdjacencyMatrix build_cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    w(i, j) = w(j, i) = 1.0;
  }
  return AdjacencyMatrix::from_weights(std::move(w), true);
}

AdjacencyMatrix build_mobius_ladder(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("Moebius ladder needs even n >= 4");
  Eigen::MatrixXd w = build_cycle(n).weights();
  for (int i = 0; i < n / 2; ++i) w(i, i + n / 2) = w(i + n / 2, i) = 1.0;
  return AdjacencyMatrix::from_weights(std::move(w), true);
}

AdjacencyMatrix build_empty(int n) {
  if (n < 1) throw InvalidArgument("empty graph needs n >= 1");
  return AdjacencyMatrix::from_weights(Eigen::MatrixXd::Zero(n, n), true);
}

AdjacencyMatrix from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) throw InvalidArgument("graph needs n >= 1");
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidArgument("edge index out of range");
    w(u, v) = w(v, u) = 1.0;
  }
  return AdjacencyMatrix::from_weights(std::move(w), true);
}

// ---------------------------------------------------------------------------
// File format

NetworkModel parse_network(std::string_view text, double coupling,
                           const std::filesystem::path& base_dir) {
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  bool symmetric = false;
  std::string noise_token;
  Eigen::MatrixXd w;
  Eigen::MatrixXi seen;

  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(lines, line)) {
    ++line_no;
    auto tokens = split_ws(strip_comment(line));
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 6 || tokens[0] != "n" || tokens[2] != "symmetric" ||
          tokens[4] != "noise") {
        throw fail("expected header 'n <count> symmetric <true|false> noise <sigma2|file>'");
      }
      auto count = parse_long(tokens[1]);
      if (!count || *count < 1) throw fail("node count must be a positive integer");
      n = static_cast<int>(*count);
      if (tokens[3] == "true") {
        symmetric = true;
      } else if (tokens[3] == "false") {
        symmetric = false;
      } else {
        throw fail("symmetric flag must be 'true' or 'false'");
      }
      noise_token = std::string(tokens[5]);
      w = Eigen::MatrixXd::Zero(n, n);
      seen = Eigen::MatrixXi::Zero(n, n);
      have_header = true;
      continue;
    }

    if (tokens.size() != 3) throw fail("expected 'u v w'");
    auto u = parse_long(tokens[0]);
    auto v = parse_long(tokens[1]);
    auto weight = parse_double(tokens[2]);
    if (!u || !v || !weight) throw fail("malformed edge");
    if (*u < 0 || *v < 0 || *u >= n || *v >= n) throw fail("node index out of range");
    if (!std::isfinite(*weight)) throw fail("non-finite weight");

    auto set = [&](long r, long c) {
      if (seen(r, c) && w(r, c) != *weight) {
        throw fail("conflicting weights for entry (" + std::to_string(r) + ", " +
                   std::to_string(c) + ")");
      }
      w(r, c) = *weight;
      seen(r, c) = 1;
    };
    set(*u, *v);
    if (symmetric) set(*v, *u);
  }
  if (!have_header) throw ParseError("missing header line");

  auto adjacency = AdjacencyMatrix::from_weights(std::move(w), symmetric);

  if (auto sigma2 = parse_double(noise_token)) {
    if (!(*sigma2 > 0.0)) throw ParseError("noise variance must be positive");
    return NetworkModel(std::move(adjacency), coupling, *sigma2);
  }
  std::filesystem::path noise_path(noise_token);
  if (noise_path.is_relative()) noise_path = base_dir / noise_path;
  try {
    return NetworkModel(std::move(adjacency), coupling,
                        NoiseCovariance::from_matrix(parse_matrix_file(noise_path, n)));
  } catch (const InvalidArgument& e) {
    throw ParseError(noise_path.string() + ": " + e.what());
  }
}

NetworkModel load_network(const std::filesystem::path& path, double coupling) {
  return parse_network(read_file(path), coupling, path.parent_path());
}

std::string format_network(const AdjacencyMatrix& adjacency, double sigma2) {
  std::ostringstream out;
  out.precision(17);
  const int n = adjacency.size();
  out << "n " << n << " symmetric " << (adjacency.symmetric() ? "true" : "false") << " noise "
      << sigma2 << '\n';
  const auto& w = adjacency.weights();
  for (int i = 0; i < n; ++i) {
    for (int j = adjacency.symmetric() ? i : 0; j < n; ++j) {
      if (w(i, j) != 0.0) out << i << ' ' << j << ' ' << w(i, j) << '\n';
    }
  }
  return out.str();
}

std::filesystem::path bundled_data_dir() {
#ifdef PHINET_DATA_DIR
  return std::filesystem::path(PHINET_DATA_DIR) / "networks";
#else
  return {};
#endif
}

}  // namespace phinet
