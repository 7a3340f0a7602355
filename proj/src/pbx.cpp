#include "antgls/pbx.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace antgls {

const char* to_string(Branch b) {
  switch (b) {
    case Branch::greedy: return "greedy";
    case Branch::exploit: return "exploit";
    case Branch::explore: return "explore";
  }
  return "?";
}

std::string format_transition(const TransitionTrace& t, int label_offset) {
  std::ostringstream os;
  os << "c=" << t.current + label_offset << ", PC={";
  for (std::size_t i = 0; i < t.candidates.size(); ++i) {
    if (i) os << ',';
    os << t.candidates[i].city + label_offset;
  }
  os << "}, chosen=" << t.chosen + label_offset << ", branch=" << to_string(t.branch);
  return os.str();
}

// ---------------------------------------------------------------------------

ParentCursors::ParentCursors(std::span<const City> parent, City start_city, int k) : parent_(parent) {
  const int n = static_cast<int>(parent.size());
  if (k < 3 || k > n) {
    throw std::invalid_argument("number of pointers must lie in [3, n], got " + std::to_string(k));
  }
  auto it = std::find(parent.begin(), parent.end(), start_city);
  if (it == parent.end()) throw std::invalid_argument("start city not present in parent");
  const int first = (static_cast<int>(it - parent.begin()) + 1) % n;

  std::vector<int> starts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    // round(i * n / k) in integer arithmetic
    const long long offset = (2LL * i * n + k) / (2LL * k);
    starts[static_cast<std::size_t>(i)] = static_cast<int>((first + offset) % n);
  }
  cursors_.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const int s = starts[static_cast<std::size_t>(i)];
    cursors_.push_back(Cursor{s, s, starts[static_cast<std::size_t>((i + 1) % k)], true});
  }
}

int ParentCursors::segment_length(int i) const {
  const int n = static_cast<int>(parent_.size());
  const auto& c = cursor(i);
  const int len = (c.segment_end - c.start + n) % n;
  return len == 0 ? n : len;
}

void ParentCursors::advance(int i) {
  auto& c = cursors_[static_cast<std::size_t>(i)];
  c.current = (c.current + 1) % static_cast<int>(parent_.size());
  if (c.current == c.segment_end) c.alive = false;
}

void ParentCursors::skip_visited(const std::vector<char>& visited) {
  for (int i = 0; i < size(); ++i) {
    while (cursor(i).alive && visited[static_cast<std::size_t>(pointed(i))]) advance(i);
  }
}

// ---------------------------------------------------------------------------

CrossoverState::CrossoverState(const Tour& father_tour, const Tour& mother_tour, City start_city, int k)
    : visited(father_tour.size(), 0),
      current(start_city),
      father(father_tour.order, start_city, k),
      mother(mother_tour.order, start_city, k) {
  if (father_tour.size() != mother_tour.size()) {
    throw std::invalid_argument("crossover parents differ in size");
  }
  child.reserve(father_tour.size());
  child.push_back(start_city);
  visited[static_cast<std::size_t>(start_city)] = 1;
}

std::vector<Candidate> pointed_candidates(CrossoverState& state) {
  std::vector<Candidate> out;
  if (state.complete()) return out;
  state.father.skip_visited(state.visited);
  state.mother.skip_visited(state.visited);

  auto collect = [&](const ParentCursors& pc, bool from_father) {
    for (int i = 0; i < pc.size(); ++i) {
      if (!pc.cursor(i).alive) continue;
      const City city = pc.pointed(i);
      const bool dup = std::any_of(out.begin(), out.end(), [&](const Candidate& c) { return c.city == city; });
      if (!dup) out.push_back(Candidate{city, from_father, i});
    }
  };
  collect(state.father, true);
  collect(state.mother, false);

  if (out.empty()) throw std::logic_error("PBX: child incomplete but no pointed city remains");
  return out;
}

void commit(CrossoverState& state, const Candidate& chosen) {
  state.child.push_back(chosen.city);
  state.visited[static_cast<std::size_t>(chosen.city)] = 1;
  state.current = chosen.city;
  (chosen.from_father ? state.father : state.mother).advance(chosen.cursor);
}

const Candidate& select_nearest(std::span<const Candidate> candidates, City current, const DistanceMatrix& d) {
  if (candidates.empty()) throw std::invalid_argument("select_nearest: no candidates");
  const Candidate* best = &candidates.front();
  for (const auto& c : candidates) {
    if (d(current, c.city) < d(current, best->city)) best = &c;
  }
  return *best;
}

City pbx_greedy_step(CrossoverState& state, const DistanceMatrix& d, SearchObserver* observer) {
  if (state.complete()) throw std::logic_error("pbx_greedy_step: child already complete");
  const auto candidates = pointed_candidates(state);
  const Candidate chosen = select_nearest(candidates, state.current, d);
  if (observer) observer->on_transition(TransitionTrace{state.current, candidates, {}, chosen.city, Branch::greedy});
  commit(state, chosen);
  return chosen.city;
}

Tour pbx_crossover_from(const Tour& father, const Tour& mother, City start_city, int k, const DistanceMatrix& d,
                        SearchObserver* observer) {
  CrossoverState state(father, mother, start_city, k);
  while (!state.complete()) pbx_greedy_step(state, d, observer);
  return make_tour(std::move(state.child), d);
}

Tour pbx_crossover(const Tour& father, const Tour& mother, int k, RandomSource& rng, const DistanceMatrix& d,
                   SearchObserver* observer) {
  if (father.size() != mother.size()) throw std::invalid_argument("crossover parents differ in size");
  const auto start = static_cast<City>(rng.uniform_index(father.size()));
  return pbx_crossover_from(father, mother, start, k, d, observer);
}

// ---------------------------------------------------------------------------

double transition_weight(const PheromoneMatrix& tau, const DistanceMatrix& d, City r, City u, double beta) {
  const auto dist = d(r, u);
  const double eta = dist == 0 ? kZeroDistanceVisibility : 1.0 / static_cast<double>(dist);
  return tau(r, u) * std::pow(eta, beta);
}

namespace {

// Index into `weights` picked by the pseudo-random-proportional rule.
// Always draws q; the explore branch draws one more uniform.
std::size_t choose(std::span<const double> weights, double q0, RandomSource& rng, Branch& branch,
                   std::vector<double>* probabilities) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (probabilities) {
    probabilities->clear();
    for (double w : weights) probabilities->push_back(w / total);
  }

  const double q = rng.uniform01();
  if (q <= q0 || !(total > 0.0) || !std::isfinite(total)) {
    branch = Branch::exploit;
    return static_cast<std::size_t>(std::max_element(weights.begin(), weights.end()) - weights.begin());
  }
  branch = Branch::explore;
  const double target = rng.uniform01() * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (target < acc) return i;
  }
  return weights.size() - 1;
}

}  // namespace

City ant_transition(CrossoverState& state, const PheromoneMatrix& tau, const AcsParams& params,
                    const DistanceMatrix& d, RandomSource& rng, SearchObserver* observer) {
  if (state.complete()) throw std::logic_error("ant_transition: child already complete");
  const auto candidates = pointed_candidates(state);
  std::vector<double> weights;
  weights.reserve(candidates.size());
  for (const auto& c : candidates) weights.push_back(transition_weight(tau, d, state.current, c.city, params.beta));

  std::vector<double> probabilities;
  Branch branch = Branch::exploit;
  const std::size_t pick = choose(weights, params.q0, rng, branch, observer ? &probabilities : nullptr);
  const Candidate chosen = candidates[pick];
  if (observer) observer->on_transition(TransitionTrace{state.current, candidates, probabilities, chosen.city, branch});
  commit(state, chosen);
  return chosen.city;
}

Tour ant_crossover_from(const Tour& father, const Tour& mother, City start_city, int k, PheromoneMatrix& tau,
                        const AcsParams& params, const DistanceMatrix& d, RandomSource& rng,
                        SearchObserver* observer) {
  CrossoverState state(father, mother, start_city, k);
  while (!state.complete()) {
    const City from = state.current;
    const City to = ant_transition(state, tau, params, d, rng, observer);
    tau.local_update(from, to, params.rho);
  }
  return make_tour(std::move(state.child), d);
}

Tour ant_crossover(const Tour& father, const Tour& mother, int k, PheromoneMatrix& tau, const AcsParams& params,
                   const DistanceMatrix& d, RandomSource& rng, SearchObserver* observer) {
  if (father.size() != mother.size()) throw std::invalid_argument("crossover parents differ in size");
  const auto start = static_cast<City>(rng.uniform_index(father.size()));
  return ant_crossover_from(father, mother, start, k, tau, params, d, rng, observer);
}

Tour acs_construct_tour(PheromoneMatrix& tau, const AcsParams& params, const DistanceMatrix& d, RandomSource& rng,
                        SearchObserver* observer) {
  const int n = d.size();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  std::vector<City> order;
  order.reserve(static_cast<std::size_t>(n));
  City cur = static_cast<City>(rng.uniform_index(static_cast<std::size_t>(n)));
  visited[static_cast<std::size_t>(cur)] = 1;
  order.push_back(cur);

  std::vector<Candidate> candidates;
  std::vector<double> weights;
  std::vector<double> probabilities;
  while (static_cast<int>(order.size()) < n) {
    candidates.clear();
    weights.clear();
    for (City u = 0; u < n; ++u) {
      if (visited[static_cast<std::size_t>(u)]) continue;
      candidates.push_back(Candidate{u, true, -1});
      weights.push_back(transition_weight(tau, d, cur, u, params.beta));
    }
    Branch branch = Branch::exploit;
    const City next = candidates[choose(weights, params.q0, rng, branch, observer ? &probabilities : nullptr)].city;
    if (observer) observer->on_transition(TransitionTrace{cur, candidates, probabilities, next, branch});
    tau.local_update(cur, next, params.rho);
    visited[static_cast<std::size_t>(next)] = 1;
    order.push_back(next);
    cur = next;
  }
  return make_tour(std::move(order), d);
}

}  // namespace antgls
