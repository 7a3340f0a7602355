#include "antgls/local_search.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace antgls {

namespace {

void check_cut(const Tour& tour, int cut) {
  const int n = static_cast<int>(tour.size());
  if (cut < 1 || cut > n - 1) {
    throw std::out_of_range("2-opt cut " + std::to_string(cut) + " outside [1, " + std::to_string(n - 1) + "]");
  }
}

void check_cuts(const Tour& tour, int i, int j) {
  const int n = static_cast<int>(tour.size());
  if (i < 1 || j <= i || j > n - 1) {
    throw std::out_of_range("3-opt cuts (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") do not give three non-empty segments");
  }
}

}  // namespace

Cost two_opt_predicted_cost(const Tour& tour, int cut, const DistanceMatrix& d) {
  check_cut(tour, cut);
  const auto& t = tour.order;
  const City a_first = t.front();
  const City a_end = t[static_cast<std::size_t>(cut - 1)];
  const City b_first = t[static_cast<std::size_t>(cut)];
  const City b_end = t.back();
  return tour.cost - d(a_end, b_first) - d(b_end, a_first) + d(a_end, b_end) + d(b_first, a_first);
}

Tour apply_two_opt(const Tour& tour, int cut, const DistanceMatrix& d) {
  Tour out{tour.order, two_opt_predicted_cost(tour, cut, d)};
  std::reverse(out.order.begin() + cut, out.order.end());
  return out;
}

Tour two_opt_ls(Tour tour, const DistanceMatrix& d, RandomSource& rng, int patience) {
  const int n = static_cast<int>(tour.size());
  if (n < 3) return tour;
  int failures = 0;
  while (failures < patience) {
    const int cut = 1 + static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n - 1)));
    const Cost predicted = two_opt_predicted_cost(tour, cut, d);
    if (predicted < tour.cost) {
      std::reverse(tour.order.begin() + cut, tour.order.end());
      tour.cost = predicted;
      failures = 0;
    } else {
      ++failures;
    }
  }
  return tour;
}

std::array<Cost, kThreeOptMethods> three_opt_predicted_costs(const Tour& tour, int i, int j,
                                                              const DistanceMatrix& d) {
  check_cuts(tour, i, j);
  const auto& t = tour.order;
  const City a1 = t.front();
  const City a2 = t[static_cast<std::size_t>(i - 1)];
  const City b1 = t[static_cast<std::size_t>(i)];
  const City b2 = t[static_cast<std::size_t>(j - 1)];
  const City c1 = t[static_cast<std::size_t>(j)];
  const City c2 = t.back();

  const Cost base = tour.cost - d(a2, b1) - d(b2, c1) - d(c2, a1);
  return {
      base + d(a2, c1) + d(c2, b1) + d(b2, a1),  // A C  B
      base + d(a2, b2) + d(b1, c1) + d(c2, a1),  // A B' C
      base + d(a2, b1) + d(b2, c2) + d(c1, a1),  // A B  C'
      base + d(a2, b2) + d(b1, c2) + d(c1, a1),  // A B' C'
      base + d(a2, c2) + d(c1, b1) + d(b2, a1),  // A C' B
      base + d(a2, c1) + d(c2, b2) + d(b1, a1),  // A C  B'
      base + d(a2, c2) + d(c1, b2) + d(b1, a1),  // A C' B'
  };
}

Tour apply_three_opt(const Tour& tour, int i, int j, int method, const DistanceMatrix& d) {
  if (method < 1 || method > kThreeOptMethods) throw std::out_of_range("3-opt method must be in 1..7");
  const Cost predicted = three_opt_predicted_costs(tour, i, j, d)[static_cast<std::size_t>(method - 1)];

  const auto& t = tour.order;
  const auto a_end = t.begin() + i;
  const auto b_end = t.begin() + j;
  std::vector<City> b(a_end, b_end);
  std::vector<City> c(b_end, t.end());
  const bool reverse_b = method == 2 || method == 4 || method == 6 || method == 7;
  const bool reverse_c = method == 3 || method == 4 || method == 5 || method == 7;
  const bool swap_bc = method == 1 || method >= 5;
  if (reverse_b) std::reverse(b.begin(), b.end());
  if (reverse_c) std::reverse(c.begin(), c.end());

  Tour out;
  out.order.reserve(t.size());
  out.order.insert(out.order.end(), t.begin(), a_end);
  const auto& first = swap_bc ? c : b;
  const auto& second = swap_bc ? b : c;
  out.order.insert(out.order.end(), first.begin(), first.end());
  out.order.insert(out.order.end(), second.begin(), second.end());
  out.cost = predicted;
  return out;
}

Tour three_opt_ls(Tour tour, const DistanceMatrix& d, RandomSource& rng, int patience) {
  const int n = static_cast<int>(tour.size());
  if (n < 3) return tour;
  int failures = 0;
  while (failures < patience) {
    // Two distinct cut points from [1, n-1].
    const int x = 1 + static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n - 1)));
    int y = 1 + static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n - 2)));
    if (y >= x) ++y;
    const int i = std::min(x, y);
    const int j = std::max(x, y);

    const auto costs = three_opt_predicted_costs(tour, i, j, d);
    const auto best = std::min_element(costs.begin(), costs.end());
    if (*best < tour.cost) {
      tour = apply_three_opt(tour, i, j, static_cast<int>(best - costs.begin()) + 1, d);
      failures = 0;
    } else {
      ++failures;
    }
  }
  return tour;
}

Tour classify_method_at(const Tour& tour, int second_start, const DistanceMatrix& d, SearchObserver* observer) {
  const int n = static_cast<int>(tour.size());
  if (n < 3) throw std::invalid_argument("classify needs at least 3 cities");
  if (second_start < 2 || second_start > n - 1) {
    throw std::out_of_range("classify second pointer must start in [2, n-1]");
  }
  const auto& in = tour.order;
  std::vector<City> out;
  out.reserve(in.size());
  out.push_back(in.front());

  int p1 = 1;
  int p2 = second_start;
  std::vector<Candidate> pointed;
  while (p1 < second_start && p2 < n) {
    const City c = out.back();
    const City u = in[static_cast<std::size_t>(p1)];
    const City v = in[static_cast<std::size_t>(p2)];
    const bool take_first = d(c, u) <= d(c, v);
    const City chosen = take_first ? u : v;
    if (observer) {
      pointed = {Candidate{u, true, 0}, Candidate{v, true, 1}};
      observer->on_transition(TransitionTrace{c, pointed, {}, chosen, Branch::greedy});
    }
    out.push_back(chosen);
    (take_first ? p1 : p2) += 1;
  }
  out.insert(out.end(), in.begin() + p1, in.begin() + second_start);
  out.insert(out.end(), in.begin() + p2, in.end());
  return make_tour(std::move(out), d);
}

Tour classify_method(const Tour& tour, const DistanceMatrix& d, RandomSource& rng, SearchObserver* observer) {
  const int n = static_cast<int>(tour.size());
  if (n < 3) throw std::invalid_argument("classify needs at least 3 cities");
  const int second = 2 + static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n - 2)));
  return classify_method_at(tour, second, d, observer);
}

Tour classify_ls(Tour tour, const DistanceMatrix& d, int repetitions, RandomSource& rng) {
  for (int r = 0; r < repetitions; ++r) {
    Tour next = classify_method(tour, d, rng);
    if (next.cost >= tour.cost) break;
    tour = std::move(next);
  }
  return tour;
}

}  // namespace antgls
