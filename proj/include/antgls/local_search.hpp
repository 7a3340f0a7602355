#pragma once

#include <array>

#include "antgls/observer.hpp"
#include "antgls/tour.hpp"

namespace antgls {

// ---- 2-opt suffix move ------------------------------------------------------
//
// The tour is split at `cut` into A = order[0, cut) and B = order[cut, n);
// the move replaces A B by A B^-1. Only the edges (A_end, B_first) and the
// closing edge (B_end, A_first) change.

// Exact cost after reversing the suffix. Requires 1 <= cut <= n-1.
Cost two_opt_predicted_cost(const Tour& tour, int cut, const DistanceMatrix& d);

Tour apply_two_opt(const Tour& tour, int cut, const DistanceMatrix& d);

// Samples random cuts, applying each improving reversal, until `patience`
// consecutive samples fail to improve.
Tour two_opt_ls(Tour tour, const DistanceMatrix& d, RandomSource& rng, int patience);

// ---- 3-opt segment move -----------------------------------------------------
//
// Cut points 1 <= i < j <= n-1 give A = [0, i), B = [i, j), C = [j, n).
// The seven reconnections (X' is X reversed):
//   1: A C  B     2: A B' C     3: A B  C'    4: A B' C'
//   5: A C' B     6: A C  B'    7: A C' B'
inline constexpr int kThreeOptMethods = 7;

std::array<Cost, kThreeOptMethods> three_opt_predicted_costs(const Tour& tour, int i, int j,
                                                              const DistanceMatrix& d);

// `method` in 1..7.
Tour apply_three_opt(const Tour& tour, int i, int j, int method, const DistanceMatrix& d);

// Each trial draws (i, j), evaluates all seven methods and applies the best one
// if it strictly improves. Stops after `patience` consecutive failures.
Tour three_opt_ls(Tour tour, const DistanceMatrix& d, RandomSource& rng, int patience);

// ---- classify ---------------------------------------------------------------

// One classify pass with the second pointer starting at `second_start`
// (2 <= second_start <= n-1). Keeps tour[0] first, then repeatedly appends
// whichever pointed city is nearer to the last appended one (first pointer on
// ties). The first pointer dies at `second_start`, the second at the tour end;
// the survivor's remaining cities are appended in order.
Tour classify_method_at(const Tour& tour, int second_start, const DistanceMatrix& d,
                        SearchObserver* observer = nullptr);

// Same, with the second pointer drawn uniformly from [2, n-1].
Tour classify_method(const Tour& tour, const DistanceMatrix& d, RandomSource& rng,
                     SearchObserver* observer = nullptr);

// Up to `repetitions` classify passes, stopping at the first pass that does
// not strictly lower the cost. Never returns a worse tour.
Tour classify_ls(Tour tour, const DistanceMatrix& d, int repetitions, RandomSource& rng);

}  // namespace antgls
