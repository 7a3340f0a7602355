#pragma once

#include <span>
#include <string>

#include "antgls/tsplib.hpp"

namespace antgls {

struct Tour;
struct Population;
class PheromoneMatrix;

enum class Branch { greedy, exploit, explore };

const char* to_string(Branch b);

// A city pointed at by an alive cursor. For the plain ACS constructor every
// unvisited city is a candidate and `cursor` is -1.
struct Candidate {
  City city = -1;
  bool from_father = true;
  int cursor = -1;
};

struct TransitionTrace {
  City current = -1;
  std::span<const Candidate> candidates;
  // Normalized transition probabilities over `candidates`; empty for greedy steps.
  std::span<const double> probabilities;
  City chosen = -1;
  Branch branch = Branch::greedy;
};

// "c=4, PC={5,1,6,2}, chosen=5, branch=greedy"; `label_offset` shifts
// printed city indices (1 gives TSPLIB-style labels).
std::string format_transition(const TransitionTrace& t, int label_offset = 0);

// Hooks into a run. All callbacks default to no-ops; pass nullptr where no
// observation is wanted.
class SearchObserver {
 public:
  virtual ~SearchObserver() = default;

  virtual void on_transition(const TransitionTrace&) {}
  // Raw crossover output, before local search.
  virtual void on_child(const Tour&) {}
  // Output of each local search procedure.
  virtual void on_local_search(const Tour&) {}
  // After reduction and the global pheromone update of a while-iteration.
  virtual void on_generation(int, const Population&, const PheromoneMatrix&) {}
};

}  // namespace antgls
