#pragma once

#include <ostream>
#include <vector>

#include "antgls/tour.hpp"
#include "antgls/tsplib.hpp"

namespace antgls {

// Ant Colony System parameters.
//   alpha: global evaporation, (0, 1)
//   beta:  heuristic exponent, >= 0
//   rho:   local evaporation, (0, 1)
//   q0:    exploitation threshold, [0, 1]
struct AcsParams {
  double alpha = 0.1;
  double beta = 2.0;
  double rho = 0.1;
  double q0 = 0.9;

  // Throws std::invalid_argument naming the first out-of-range field.
  void validate() const;
};

class PheromoneMatrix {
 public:
  PheromoneMatrix(int n, double tau0);

  int size() const { return n_; }
  double tau0() const { return tau0_; }

  double operator()(City r, City s) const { return tau_[index(r, s)]; }

  // Sets both (r,s) and (s,r).
  void set(City r, City s, double value);

  // tau(r,s) <- (1 - rho) tau(r,s) + rho tau0
  void local_update(City r, City s, double rho);

  // tau(r,s) <- (1 - alpha) tau(r,s) + alpha / best.cost on every edge of
  // the closed best tour; everything else is left alone.
  void global_update(const Tour& best, double alpha);

  // Upper triangle as "i,j,tau" rows.
  void write_csv(std::ostream& os) const;

 private:
  std::size_t index(City r, City s) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(s);
  }

  int n_;
  double tau0_;
  std::vector<double> tau_;
};

// tau0 = 1 / (n * L_nn), L_nn the nearest-neighbor tour length from city 0.
PheromoneMatrix init_pheromone(const DistanceMatrix& d);

}  // namespace antgls
