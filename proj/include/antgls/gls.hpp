#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "antgls/observer.hpp"
#include "antgls/pheromone.hpp"
#include "antgls/tour.hpp"

namespace antgls {

struct SolverConfig {
  int population_size = 50;
  int generation_size = 500;
  int pointers_k = 3;
  AcsParams acs;
  int classify_K = 4;
  // Consecutive failed random trials before 2-opt / 3-opt stop; 0 means n.
  int ls_patience = 0;
  std::uint64_t seed = 1;
  int max_while_iterations = 1000;
  std::optional<std::chrono::duration<double>> time_limit;

  // Throws std::invalid_argument. `n` is the instance size.
  void validate(int n) const;
  int effective_patience(int n) const { return ls_patience > 0 ? ls_patience : n; }
};

enum class StopReason { converged, iteration_cap, time_limit };

const char* to_string(StopReason r);

struct RunReport {
  Tour best_tour;
  Cost best_cost = 0;
  int iterations_completed = 0;
  long long children_generated = 0;
  double wall_time_s = 0.0;
  // (while-iteration, population best cost); iteration 0 is the initial population.
  std::vector<std::pair<int, Cost>> cost_history;
  SolverConfig config;
  std::uint64_t seed = 0;
  StopReason stop_reason = StopReason::converged;
};

// Random tours, each refined by classify_ls.
Population initialize_population(const SolverConfig& config, const DistanceMatrix& d, RandomSource& rng);

// Two distinct slots, uniformly without replacement: (father, mother).
std::pair<std::size_t, std::size_t> select_parents(const Population& pop, RandomSource& rng);

// Keeps the `capacity` cheapest individuals, earlier insertions first on ties.
// Individuals at index >= `incumbents` are this generation's children; returns
// true when at least one of them survives.
bool reduce_population(Population& pop, std::size_t capacity, std::size_t incumbents);

RunReport run_gls(const DistanceMatrix& d, const SolverConfig& config, SearchObserver* observer = nullptr);

// (cost - optimum) / optimum * 100
double compute_quality(Cost cost, Cost optimum);

}  // namespace antgls
