#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace antgls {

using City = int;
using Cost = std::int64_t;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InconsistentInstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Coord {
  double x = 0.0;
  double y = 0.0;
};

enum class EdgeWeightType { euc_2d };

// A parsed TSPLIB problem. Cities are 0-based internally, in file order.
struct Instance {
  std::string name;
  int dimension = 0;
  std::vector<Coord> coords;
  EdgeWeightType edge_weight_type = EdgeWeightType::euc_2d;
};

// Dense symmetric integer distance matrix with zero diagonal.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  // Validates symmetry, zero diagonal and non-negativity; throws
  // InconsistentInstanceError otherwise.
  DistanceMatrix(int n, std::vector<std::int32_t> row_major);

  int size() const { return n_; }
  std::int32_t operator()(City i, City j) const {
    return d_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
              static_cast<std::size_t>(j)];
  }

 private:
  int n_ = 0;
  std::vector<std::int32_t> d_;
};

// nint(sqrt(dx^2 + dy^2)), rounding half up as TSPLIB95 does.
std::int32_t euc2d_distance(Coord a, Coord b);

Instance parse_tsplib(std::string_view content);

DistanceMatrix build_distance_matrix(const Instance& inst);

// "n" followed by n*n whitespace separated integers, row-major.
DistanceMatrix parse_matrix_fixture(std::string_view content);

// What the CLI and benchmarks load: either a TSPLIB file or a matrix fixture.
struct Problem {
  std::string name;
  std::optional<Instance> instance;
  DistanceMatrix distances;
};

// Chooses the format by the first token: an integer means matrix fixture.
Problem parse_problem(std::string_view content, std::string fallback_name);
Problem load_problem(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace antgls
