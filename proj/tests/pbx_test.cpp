#include "antgls/pbx.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "antgls/figures.hpp"
#include "oracles.hpp"
#include "test_data.hpp"

namespace antgls {
namespace {

using figures::tour_from_labels;

std::vector<int> labels(const std::vector<City>& cities) {
  std::vector<int> out;
  for (City c : cities) out.push_back(c + 1);
  return out;
}

std::vector<int> candidate_labels(const std::vector<Candidate>& cs) {
  std::vector<int> out;
  for (const auto& c : cs) out.push_back(c.city + 1);
  return out;
}

struct Recorder : SearchObserver {
  std::vector<std::vector<Candidate>> candidates;
  std::vector<std::vector<double>> probabilities;
  std::vector<City> chosen;
  std::vector<Branch> branches;
  void on_transition(const TransitionTrace& t) override {
    candidates.emplace_back(t.candidates.begin(), t.candidates.end());
    probabilities.emplace_back(t.probabilities.begin(), t.probabilities.end());
    chosen.push_back(t.chosen);
    branches.push_back(t.branch);
  }
};

DistanceMatrix random_euclidean(int n, RandomSource& rng) {
  Instance inst;
  inst.name = "random";
  inst.dimension = n;
  for (int i = 0; i < n; ++i) inst.coords.push_back({rng.uniform01() * 100.0, rng.uniform01() * 100.0});
  return build_distance_matrix(inst);
}

class EightCity : public ::testing::Test {
 protected:
  DistanceMatrix d = figures::eight_city_matrix();
  Tour father = tour_from_labels(figures::kPbxFather, d);
  Tour mother = tour_from_labels(figures::kPbxMother, d);
  City start = figures::kPbxStartLabel - 1;
};

TEST_F(EightCity, CursorLayout) {
  const auto cursors = init_cursors(father, start, 3);
  ASSERT_EQ(cursors.size(), 3);
  EXPECT_EQ(cursors.cursor(0).start, 1);
  EXPECT_EQ(cursors.cursor(1).start, 4);
  EXPECT_EQ(cursors.cursor(2).start, 6);
  EXPECT_EQ(labels({cursors.pointed(0), cursors.pointed(1), cursors.pointed(2)}), (std::vector<int>{5, 1, 6}));
  EXPECT_EQ(cursors.cursor(0).segment_end, 4);
  EXPECT_EQ(cursors.cursor(2).segment_end, 1);
  EXPECT_EQ(cursors.segment_length(0) + cursors.segment_length(1) + cursors.segment_length(2), 8);

  // Mother: right neighbor of 4 is 2.
  const auto m = init_cursors(mother, start, 3);
  EXPECT_EQ(labels({m.pointed(0), m.pointed(1), m.pointed(2)}), (std::vector<int>{2, 1, 5}));
}

TEST_F(EightCity, CursorCountLimits) {
  EXPECT_THROW(init_cursors(father, start, 2), std::invalid_argument);
  EXPECT_THROW(init_cursors(father, start, 9), std::invalid_argument);
  EXPECT_THROW(init_cursors(father, 42, 3), std::invalid_argument);
  const auto all = init_cursors(father, start, 8);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(all.segment_length(i), 1);
}

TEST(Cursors, SegmentsPartitionTheParent) {
  RandomSource rng(3);
  for (int n : {3, 4, 7, 8, 13, 51}) {
    std::vector<City> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (int k = 3; k <= n; ++k) {
      const ParentCursors pc(order, order[rng.uniform_index(order.size())], k);
      std::vector<int> covered(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < pc.segment_length(i); ++j) ++covered[static_cast<std::size_t>((pc.cursor(i).start + j) % n)];
      }
      for (int c : covered) ASSERT_EQ(c, 1) << "n=" << n << " k=" << k;
    }
  }
}

TEST_F(EightCity, FirstStepCandidates) {
  CrossoverState state(father, mother, start, 3);
  const auto pc = pointed_candidates(state);
  // Father's pointers give 5, 1, 6; the mother's right-neighbor pointer adds 2.
  EXPECT_EQ(candidate_labels(pc), (std::vector<int>{5, 1, 6, 2}));
  EXPECT_TRUE(pc[0].from_father);
  EXPECT_FALSE(pc[3].from_father);
}

TEST_F(EightCity, GreedyStepOnNarratedCandidateSets) {
  // c=4 against {5, 7, 1, 6}: d = 20, 37, 31, 21
  std::vector<Candidate> step1{{4, true, 0}, {6, false, 0}, {0, true, 1}, {5, true, 2}};
  EXPECT_EQ(select_nearest(step1, 3, d).city + 1, 5);
  // c=5 against {1, 7, 6}: d = 22, 40, 25
  std::vector<Candidate> step2{{0, true, 1}, {6, false, 0}, {5, true, 2}};
  EXPECT_EQ(select_nearest(step2, 4, d).city + 1, 1);
  std::vector<Candidate> single{{2, false, 1}};
  EXPECT_EQ(select_nearest(single, 4, d).city, 2);
}

TEST_F(EightCity, GreedyTieGoesToEarlierCandidate) {
  // d(4,2) == d(4,7) == 37
  std::vector<Candidate> tied{{1, false, 0}, {6, true, 1}};
  EXPECT_EQ(select_nearest(tied, 3, d).city, 1);
  std::swap(tied[0], tied[1]);
  EXPECT_EQ(select_nearest(tied, 3, d).city, 6);
}

TEST_F(EightCity, FullGreedyTraceMatchesReference) {
  Recorder rec;
  const Tour child = pbx_crossover_from(father, mother, start, 3, d, &rec);
  // Frozen from the reference oracle.
  EXPECT_EQ(labels(child.order), (std::vector<int>{4, 5, 2, 1, 8, 7, 6, 3}));
  EXPECT_EQ(child.cost, 180);
  EXPECT_EQ(child.order, oracle::pbx_reference(father.order, mother.order, start, 3, d));
  ASSERT_EQ(rec.chosen.size(), 7u);
  EXPECT_EQ(candidate_labels(rec.candidates[1]), (std::vector<int>{7, 1, 6, 2}));
  for (Branch b : rec.branches) EXPECT_EQ(b, Branch::greedy);
}

TEST_F(EightCity, IdenticalParents) {
  const Tour child = pbx_crossover_from(father, father, start, 3, d);
  EXPECT_EQ(child.order, oracle::pbx_reference(father.order, father.order, start, 3, d));
  EXPECT_EQ(labels(child.order), (std::vector<int>{4, 5, 1, 2, 6, 7, 8, 3}));
  EXPECT_EQ(child.cost, 183);
}

TEST_F(EightCity, CompleteStateHasNoCandidates) {
  CrossoverState state(father, mother, start, 3);
  while (!state.complete()) pbx_greedy_step(state, d);
  EXPECT_TRUE(pointed_candidates(state).empty());
  EXPECT_THROW(pbx_greedy_step(state, d), std::logic_error);
}

TEST_F(EightCity, ExhaustedCursorDies) {
  CrossoverState state(father, mother, start, 3);
  // Father cursor 1 covers positions 4..5 (cities 1, 2). Visit both.
  state.visited[0] = state.visited[1] = 1;
  state.child.push_back(0);
  state.child.push_back(1);
  const auto pc = pointed_candidates(state);
  EXPECT_FALSE(state.father.cursor(1).alive);
  for (const auto& c : pc) EXPECT_FALSE(c.from_father && c.cursor == 1);
}

TEST(PbxCrossover, MatchesReferenceOnRandomInstances) {
  RandomSource rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng.uniform_index(40));
    const auto d = random_euclidean(n, rng);
    const Tour f = random_tour(n, d, rng);
    const Tour m = random_tour(n, d, rng);
    const int k = 3 + static_cast<int>(rng.uniform_index(static_cast<std::size_t>(n - 2)));
    const City s = static_cast<City>(rng.uniform_index(static_cast<std::size_t>(n)));
    const Tour child = pbx_crossover_from(f, m, s, k, d);
    ASSERT_TRUE(is_permutation(child.order, n));
    ASSERT_EQ(child.order, oracle::pbx_reference(f.order, m.order, s, k, d));
    ASSERT_EQ(child.cost, oracle::closed_length(child.order, d));
  }
}

TEST(PbxCrossover, RejectsMismatchedParents) {
  const auto d = figures::eight_city_matrix();
  const Tour f = tour_from_labels({1, 2, 3, 4, 5, 6, 7, 8}, d);
  const Tour m{{0, 1, 2, 3, 4, 5, 6}, 0};
  RandomSource rng(1);
  EXPECT_THROW(pbx_crossover(f, m, 3, rng, d), std::invalid_argument);
}

TEST(PbxCrossover, EveryCityCanStart) {
  const auto d = figures::eight_city_matrix();
  const Tour f = tour_from_labels(figures::kPbxFather, d);
  const Tour m = tour_from_labels(figures::kPbxMother, d);
  RandomSource rng(8);
  std::vector<int> starts(8, 0);
  for (int i = 0; i < 2000; ++i) ++starts[static_cast<std::size_t>(pbx_crossover(f, m, 3, rng, d).order[0])];
  for (int s : starts) EXPECT_GT(s, 0);
}

// ---- ant transition ---------------------------------------------------------

TEST_F(EightCity, SamplingWeightsOverFirstStep) {
  // Narrated candidate set {5, 7, 1, 6} at c=4 with uniform tau and beta=2.
  const PheromoneMatrix tau(8, 0.01);
  const std::vector<City> cities{4, 6, 0, 5};
  std::vector<double> w;
  for (City u : cities) w.push_back(transition_weight(tau, d, 3, u, 2.0));
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  const double expected_total = 0.01 * (1 / 400.0 + 1 / 1369.0 + 1 / 961.0 + 1 / 441.0);
  EXPECT_NEAR(total, expected_total, 1e-15);
  double sum = 0.0;
  for (double x : w) sum += x / total;
  EXPECT_NEAR(sum, 1.0, 1e-12);
  EXPECT_GT(w[0], w[1]);
}

TEST_F(EightCity, SingletonCandidateAlwaysChosen) {
  PheromoneMatrix tau(8, 0.01);
  for (double q0 : {0.0, 1.0}) {
    AcsParams params;
    params.q0 = q0;
    RandomSource rng(5);
    CrossoverState state(father, mother, start, 3);
    // Leave exactly one unvisited city (label 3).
    for (City c = 0; c < 8; ++c) {
      if (c != 2 && c != start) {
        state.visited[static_cast<std::size_t>(c)] = 1;
        state.child.push_back(c);
      }
    }
    state.current = 7;
    EXPECT_EQ(ant_transition(state, tau, params, d, rng), 2);
    EXPECT_TRUE(state.complete());
  }
}

TEST_F(EightCity, ExploitationWithUniformTauMatchesGreedy) {
  PheromoneMatrix tau = init_pheromone(d);
  AcsParams params;
  params.q0 = 1.0;
  RandomSource rng(17);
  Recorder rec;
  const Tour ant = ant_crossover_from(father, mother, start, 3, tau, params, d, rng, &rec);
  EXPECT_EQ(ant.order, pbx_crossover_from(father, mother, start, 3, d).order);
  for (Branch b : rec.branches) EXPECT_EQ(b, Branch::exploit);
}

TEST(AntCrossover, GreedyConsistencyOnRandomInstances) {
  RandomSource rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = random_euclidean(20, rng);
    const Tour f = random_tour(20, d, rng);
    const Tour m = random_tour(20, d, rng);
    const City s = static_cast<City>(rng.uniform_index(20));
    PheromoneMatrix tau = init_pheromone(d);
    AcsParams params;
    params.q0 = 1.0;
    RandomSource ant_rng(trial);
    EXPECT_EQ(ant_crossover_from(f, m, s, 3, tau, params, d, ant_rng).order,
              pbx_crossover_from(f, m, s, 3, d).order);
  }
}

TEST(AntCrossover, AppliesOneLocalUpdatePerTransition) {
  const auto& d = testing::eil51().distances;
  RandomSource rng(21);
  const Tour f = random_tour(51, d, rng);
  const Tour m = random_tour(51, d, rng);
  PheromoneMatrix tau = init_pheromone(d);
  // Lift every entry above tau0 so a local update always changes it.
  for (City i = 0; i < 51; ++i) {
    for (City j = i + 1; j < 51; ++j) tau.set(i, j, 1.0);
  }
  AcsParams params;
  const Tour child = ant_crossover(f, m, 3, tau, params, d, rng);
  ASSERT_TRUE(is_permutation(child.order, 51));

  int changed = 0;
  for (City i = 0; i < 51; ++i) {
    for (City j = i + 1; j < 51; ++j) {
      if (tau(i, j) != 1.0) {
        ++changed;
        EXPECT_DOUBLE_EQ(tau(i, j), 0.9 + 0.1 * tau.tau0());
      }
    }
  }
  EXPECT_EQ(changed, 50);
  for (std::size_t k = 0; k + 1 < child.order.size(); ++k) EXPECT_NE(tau(child.order[k], child.order[k + 1]), 1.0);
}

TEST(AntCrossover, DeterministicForSeed) {
  const auto& d = testing::eil51().distances;
  RandomSource setup(4);
  const Tour f = random_tour(51, d, setup);
  const Tour m = random_tour(51, d, setup);
  auto once = [&] {
    PheromoneMatrix tau = init_pheromone(d);
    RandomSource rng(77);
    return ant_crossover(f, m, 3, tau, AcsParams{}, d, rng);
  };
  EXPECT_EQ(once(), once());
}

TEST(AntCrossover, ProbabilitiesNormalizedEveryStep) {
  const auto& d = testing::eil51().distances;
  RandomSource rng(12);
  PheromoneMatrix tau = init_pheromone(d);
  AcsParams params;
  params.q0 = 0.5;
  Recorder rec;
  for (int i = 0; i < 20; ++i) {
    const Tour f = random_tour(51, d, rng);
    const Tour m = random_tour(51, d, rng);
    ASSERT_TRUE(is_permutation(ant_crossover(f, m, 4, tau, params, d, rng, &rec).order, 51));
  }
  bool explored = false;
  for (std::size_t s = 0; s < rec.probabilities.size(); ++s) {
    ASSERT_EQ(rec.probabilities[s].size(), rec.candidates[s].size());
    const double sum = std::accumulate(rec.probabilities[s].begin(), rec.probabilities[s].end(), 0.0);
    ASSERT_NEAR(sum, 1.0, 1e-9);
    explored |= rec.branches[s] == Branch::explore;
  }
  EXPECT_TRUE(explored);
}

TEST(AntTransition, ZeroDistanceCandidateIsFinite) {
  // Cities 0 and 1 coincide.
  const DistanceMatrix d(4, {0, 0, 5, 5, 0, 0, 5, 5, 5, 5, 0, 3, 5, 5, 3, 0});
  const PheromoneMatrix tau(4, 0.1);
  EXPECT_DOUBLE_EQ(transition_weight(tau, d, 0, 1, 2.0), 0.1 * kZeroDistanceVisibility * kZeroDistanceVisibility);
  const Tour t{{0, 1, 2, 3}, 13};
  PheromoneMatrix work(4, 0.1);
  RandomSource rng(1);
  AcsParams params;
  params.q0 = 1.0;
  const Tour child = ant_crossover_from(t, t, 0, 3, work, params, d, rng);
  EXPECT_EQ(child.order[1], 1);
}

// ---- plain ACS --------------------------------------------------------------

TEST(AcsConstruct, TriangleHasOneTour) {
  const DistanceMatrix d(3, {0, 2, 3, 2, 0, 4, 3, 4, 0});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    PheromoneMatrix tau = init_pheromone(d);
    RandomSource rng(seed);
    const Tour t = acs_construct_tour(tau, AcsParams{}, d, rng);
    EXPECT_TRUE(is_permutation(t.order, 3));
    EXPECT_EQ(t.cost, 9);
  }
}

TEST(AcsConstruct, DistributionsSumToOne) {
  const auto& d = testing::eil51().distances;
  PheromoneMatrix tau = init_pheromone(d);
  RandomSource rng(6);
  Recorder rec;
  AcsParams params;
  params.q0 = 0.3;
  for (int i = 0; i < 5; ++i) ASSERT_TRUE(is_permutation(acs_construct_tour(tau, params, d, rng, &rec).order, 51));
  ASSERT_EQ(rec.chosen.size(), 5u * 50u);
  for (std::size_t s = 0; s < rec.probabilities.size(); ++s) {
    EXPECT_EQ(rec.candidates[s].size(), 50u - s % 50u);
    EXPECT_NEAR(std::accumulate(rec.probabilities[s].begin(), rec.probabilities[s].end(), 0.0), 1.0, 1e-9);
  }
  // The last step of each construction is forced.
  EXPECT_EQ(rec.candidates[49].size(), 1u);
}

TEST(FormatTransition, OneBasedLabels) {
  const std::vector<Candidate> cs{{4, true, 0}, {1, false, 0}};
  const TransitionTrace t{3, cs, {}, 4, Branch::greedy};
  EXPECT_EQ(format_transition(t, 1), "c=4, PC={5,2}, chosen=5, branch=greedy");
  EXPECT_EQ(format_transition(t), "c=3, PC={4,1}, chosen=4, branch=greedy");
}

}  // namespace
}  // namespace antgls
