#include "antgls/gls.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "antgls/local_search.hpp"
#include "antgls/pbx.hpp"

namespace antgls {

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::converged: return "converged";
    case StopReason::iteration_cap: return "iteration_cap";
    case StopReason::time_limit: return "time_limit";
  }
  return "?";
}

void SolverConfig::validate(int n) const {
  if (n < 3) throw std::invalid_argument("instance needs at least 3 cities");
  if (population_size < 2) throw std::invalid_argument("population_size must be at least 2");
  if (generation_size < 1) throw std::invalid_argument("generation_size must be positive");
  if (pointers_k < 3 || pointers_k > n) {
    throw std::invalid_argument("pointers must lie in [3, " + std::to_string(n) + "]");
  }
  if (classify_K < 1) throw std::invalid_argument("classify_K must be positive");
  if (ls_patience < 0) throw std::invalid_argument("ls_patience must be non-negative");
  if (max_while_iterations < 1) throw std::invalid_argument("max_while_iterations must be positive");
  if (time_limit && time_limit->count() <= 0.0) throw std::invalid_argument("time_limit must be positive");
  acs.validate();
}

Population initialize_population(const SolverConfig& config, const DistanceMatrix& d, RandomSource& rng) {
  Population pop;
  pop.individuals.reserve(static_cast<std::size_t>(config.population_size));
  for (int i = 0; i < config.population_size; ++i) {
    Tour t = random_tour(d.size(), d, rng);
    pop.individuals.push_back(classify_ls(std::move(t), d, config.classify_K, rng));
  }
  return pop;
}

std::pair<std::size_t, std::size_t> select_parents(const Population& pop, RandomSource& rng) {
  const std::size_t m = pop.size();
  if (m < 2) throw std::invalid_argument("select_parents: need at least two individuals");
  const std::size_t father = rng.uniform_index(m);
  std::size_t mother = rng.uniform_index(m - 1);
  if (mother >= father) ++mother;
  return {father, mother};
}

bool reduce_population(Population& pop, std::size_t capacity, std::size_t incumbents) {
  auto& ind = pop.individuals;
  if (ind.size() <= capacity) return ind.size() > incumbents;
  std::vector<std::size_t> idx(ind.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return ind[a].cost < ind[b].cost; });
  idx.resize(capacity);
  const bool changed = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= incumbents; });
  std::vector<Tour> kept;
  kept.reserve(capacity);
  for (std::size_t i : idx) kept.push_back(std::move(ind[i]));
  ind = std::move(kept);
  return changed;
}

RunReport run_gls(const DistanceMatrix& d, const SolverConfig& config, SearchObserver* observer) {
  const int n = d.size();
  config.validate(n);
  using clock = std::chrono::steady_clock;
  const auto started = clock::now();
  auto out_of_time = [&] {
    return config.time_limit && clock::now() - started >= *config.time_limit;
  };

  RandomSource rng(config.seed);
  PheromoneMatrix tau = init_pheromone(d);
  const int patience = config.effective_patience(n);
  const auto capacity = static_cast<std::size_t>(config.population_size);

  RunReport report;
  report.config = config;
  report.seed = config.seed;

  Population pop = initialize_population(config, d, rng);
  report.cost_history.emplace_back(0, population_best(pop).cost);

  report.stop_reason = StopReason::iteration_cap;
  while (report.iterations_completed < config.max_while_iterations) {
    if (out_of_time()) {
      report.stop_reason = StopReason::time_limit;
      break;
    }
    const std::size_t incumbents = pop.size();
    bool timed_out = false;
    for (int k = 0; k < config.generation_size; ++k) {
      const auto [f, m] = select_parents(pop, rng);
      // Children join the population immediately; copy the parents first.
      const Tour father = pop.individuals[f];
      const Tour mother = pop.individuals[m];
      Tour child = ant_crossover(father, mother, config.pointers_k, tau, config.acs, d, rng, observer);
      if (observer) observer->on_child(child);
      child = two_opt_ls(std::move(child), d, rng, patience);
      if (observer) observer->on_local_search(child);
      child = three_opt_ls(std::move(child), d, rng, patience);
      if (observer) observer->on_local_search(child);
      pop.individuals.push_back(std::move(child));
      ++report.children_generated;
      if (out_of_time()) {
        timed_out = true;
        break;
      }
    }
    const bool changed = reduce_population(pop, capacity, incumbents);
    tau.global_update(population_best(pop), config.acs.alpha);
    ++report.iterations_completed;
    report.cost_history.emplace_back(report.iterations_completed, population_best(pop).cost);
    if (observer) observer->on_generation(report.iterations_completed, pop, tau);

    if (timed_out) {
      report.stop_reason = StopReason::time_limit;
      break;
    }
    if (!changed) {
      report.stop_reason = StopReason::converged;
      break;
    }
  }

  report.best_tour = population_best(pop);
  report.best_cost = report.best_tour.cost;
  report.wall_time_s = std::chrono::duration<double>(clock::now() - started).count();
  return report;
}

double compute_quality(Cost cost, Cost optimum) {
  if (optimum <= 0) throw std::invalid_argument("known optimum must be positive");
  return static_cast<double>(cost - optimum) / static_cast<double>(optimum) * 100.0;
}

}  // namespace antgls
