#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "antgls/tsplib.hpp"

namespace antgls {

// Seedable generator behind every stochastic choice of a run. Draws are
// derived from raw 64-bit outputs so sequences do not depend on the
// standard library's distribution implementations.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform on [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on [0, bound); bound must be positive.
  std::size_t uniform_index(std::size_t bound);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(i)]);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct Tour {
  std::vector<City> order;
  Cost cost = 0;

  std::size_t size() const { return order.size(); }
  friend bool operator==(const Tour&, const Tour&) = default;
};

Cost tour_cost(std::span<const City> order, const DistanceMatrix& d);

Tour make_tour(std::vector<City> order, const DistanceMatrix& d);

bool is_permutation(std::span<const City> order, int n);

// Uniformly random permutation of 0..n-1 (Fisher-Yates).
Tour random_tour(int n, const DistanceMatrix& d, RandomSource& rng);

// Greedy nearest-neighbor tour from `start`; ties go to the smaller city index.
Tour nearest_neighbor_tour(const DistanceMatrix& d, City start);

// "0 4 2 ... cost=123"
std::string format_tour(const Tour& tour);

// Individuals in insertion order; duplicates allowed.
struct Population {
  std::vector<Tour> individuals;

  std::size_t size() const { return individuals.size(); }
  bool empty() const { return individuals.empty(); }
};

// Lowest cost individual; the earliest inserted wins ties. Throws on empty.
const Tour& population_best(const Population& pop);

}  // namespace antgls
