#pragma once

#include <span>
#include <vector>

#include "antgls/observer.hpp"
#include "antgls/pheromone.hpp"
#include "antgls/tour.hpp"

namespace antgls {

// One pointer into a parent. It sweeps the cyclic positions
// [start, segment_end) and dies on reaching segment_end.
struct Cursor {
  int start = 0;
  int current = 0;
  int segment_end = 0;
  bool alive = true;
};

// k cursors over one parent whose segments partition the parent's cyclic order.
class ParentCursors {
 public:
  // Cursor 0 sits right after `start_city`; cursor i at cyclic offset
  // round(i * n / k) from it. Throws std::invalid_argument unless
  // 3 <= k <= n and `start_city` occurs in `parent`.
  ParentCursors(std::span<const City> parent, City start_city, int k);

  int size() const { return static_cast<int>(cursors_.size()); }
  const Cursor& cursor(int i) const { return cursors_[static_cast<std::size_t>(i)]; }
  City pointed(int i) const { return parent_[static_cast<std::size_t>(cursor(i).current)]; }
  int segment_length(int i) const;

  // Moves every alive cursor past cities already in the child.
  void skip_visited(const std::vector<char>& visited);
  void advance(int i);

 private:
  std::span<const City> parent_;
  std::vector<Cursor> cursors_;
};

inline ParentCursors init_cursors(const Tour& parent, City start_city, int k) {
  return ParentCursors(parent.order, start_city, k);
}

struct CrossoverState {
  std::vector<City> child;
  std::vector<char> visited;
  City current = -1;
  ParentCursors father;
  ParentCursors mother;

  CrossoverState(const Tour& father_tour, const Tour& mother_tour, City start_city, int k);

  bool complete() const { return child.size() == visited.size(); }
};

// The candidate set PC: distinct unvisited cities under alive cursors, father
// cursors first, then mother, each in index order. A city pointed at twice is
// owned by the first cursor in that order. Kills cursors that run out of
// segment while skipping visited cities.
std::vector<Candidate> pointed_candidates(CrossoverState& state);

// Appends the candidate's city, makes it current and advances its cursor.
void commit(CrossoverState& state, const Candidate& chosen);

// Nearest candidate to `current`; the earlier candidate in list order wins ties.
const Candidate& select_nearest(std::span<const Candidate> candidates, City current, const DistanceMatrix& d);

// One deterministic PBX step. Returns the appended city.
City pbx_greedy_step(CrossoverState& state, const DistanceMatrix& d, SearchObserver* observer = nullptr);

Tour pbx_crossover_from(const Tour& father, const Tour& mother, City start_city, int k, const DistanceMatrix& d,
                        SearchObserver* observer = nullptr);

// Start city drawn uniformly from rng.
Tour pbx_crossover(const Tour& father, const Tour& mother, int k, RandomSource& rng, const DistanceMatrix& d,
                   SearchObserver* observer = nullptr);

// tau(r,u) * eta(r,u)^beta with eta = 1/d, capped where d == 0.
double transition_weight(const PheromoneMatrix& tau, const DistanceMatrix& d, City r, City u, double beta);

inline constexpr double kZeroDistanceVisibility = 1e6;

// Pseudo-random-proportional choice of the ant over the pointed cities.
// Draws q; exploits (argmax, earliest candidate on ties) when q <= q0,
// otherwise samples proportionally to the weights. Commits the choice.
City ant_transition(CrossoverState& state, const PheromoneMatrix& tau, const AcsParams& params,
                    const DistanceMatrix& d, RandomSource& rng, SearchObserver* observer = nullptr);

// PBX driven by ant transitions; applies the local pheromone update on each
// traversed edge (n - 1 updates).
Tour ant_crossover_from(const Tour& father, const Tour& mother, City start_city, int k, PheromoneMatrix& tau,
                        const AcsParams& params, const DistanceMatrix& d, RandomSource& rng,
                        SearchObserver* observer = nullptr);

Tour ant_crossover(const Tour& father, const Tour& mother, int k, PheromoneMatrix& tau, const AcsParams& params,
                   const DistanceMatrix& d, RandomSource& rng, SearchObserver* observer = nullptr);

// Plain ACS construction over all unvisited cities, for comparison runs.
Tour acs_construct_tour(PheromoneMatrix& tau, const AcsParams& params, const DistanceMatrix& d, RandomSource& rng,
                        SearchObserver* observer = nullptr);

}  // namespace antgls
