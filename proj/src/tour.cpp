#include "antgls/tour.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace antgls {

std::size_t RandomSource::uniform_index(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_index: bound must be positive");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t b = bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % b);
}

Cost tour_cost(std::span<const City> order, const DistanceMatrix& d) {
  const std::size_t n = order.size();
  Cost total = 0;
  for (std::size_t i = 0; i < n; ++i) total += d(order[i], order[(i + 1) % n]);
  return total;
}

Tour make_tour(std::vector<City> order, const DistanceMatrix& d) {
  Tour t;
  t.cost = tour_cost(order, d);
  t.order = std::move(order);
  return t;
}

bool is_permutation(std::span<const City> order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (City c : order) {
    if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)]) return false;
    seen[static_cast<std::size_t>(c)] = 1;
  }
  return true;
}

Tour random_tour(int n, const DistanceMatrix& d, RandomSource& rng) {
  std::vector<City> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  return make_tour(std::move(order), d);
}

Tour nearest_neighbor_tour(const DistanceMatrix& d, City start) {
  const int n = d.size();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<City> order;
  order.reserve(static_cast<std::size_t>(n));
  City cur = start;
  visited[static_cast<std::size_t>(cur)] = 1;
  order.push_back(cur);
  for (int step = 1; step < n; ++step) {
    City next = -1;
    for (City u = 0; u < n; ++u) {
      if (visited[static_cast<std::size_t>(u)]) continue;
      if (next < 0 || d(cur, u) < d(cur, next)) next = u;
    }
    visited[static_cast<std::size_t>(next)] = 1;
    order.push_back(next);
    cur = next;
  }
  return make_tour(std::move(order), d);
}

std::string format_tour(const Tour& tour) {
  std::ostringstream os;
  for (City c : tour.order) os << c << ' ';
  os << "cost=" << tour.cost;
  return os.str();
}

const Tour& population_best(const Population& pop) {
  if (pop.empty()) throw std::invalid_argument("population_best: empty population");
  const Tour* best = &pop.individuals.front();
  for (const auto& t : pop.individuals) {
    if (t.cost < best->cost) best = &t;
  }
  return *best;
}

}  // namespace antgls
