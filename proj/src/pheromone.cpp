#include "antgls/pheromone.hpp"

#include <cmath>
#include <iomanip>
#include <stdexcept>
#include <string>

namespace antgls {

void AcsParams::validate() const {
  auto reject = [](const char* name, double v, const char* range) {
    throw std::invalid_argument(std::string(name) + "=" + std::to_string(v) + " outside " + range);
  };
  if (!(alpha > 0.0 && alpha < 1.0)) reject("alpha", alpha, "(0, 1)");
  if (!(beta >= 0.0) || !std::isfinite(beta)) reject("beta", beta, "[0, inf)");
  if (!(rho > 0.0 && rho < 1.0)) reject("rho", rho, "(0, 1)");
  if (!(q0 >= 0.0 && q0 <= 1.0)) reject("q0", q0, "[0, 1]");
}

PheromoneMatrix::PheromoneMatrix(int n, double tau0)
    : n_(n), tau0_(tau0), tau_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), tau0) {
  if (n < 1) throw std::invalid_argument("pheromone matrix needs a positive size");
  if (!(tau0 > 0.0)) throw std::invalid_argument("tau0 must be positive");
}

void PheromoneMatrix::set(City r, City s, double value) {
  tau_[index(r, s)] = value;
  tau_[index(s, r)] = value;
}

void PheromoneMatrix::local_update(City r, City s, double rho) {
  if (r == s) throw std::invalid_argument("local_update: r == s");
  set(r, s, (1.0 - rho) * (*this)(r, s) + rho * tau0_);
}

void PheromoneMatrix::global_update(const Tour& best, double alpha) {
  if (best.cost <= 0) throw std::invalid_argument("global_update: best tour must have positive cost");
  const double deposit = alpha / static_cast<double>(best.cost);
  const std::size_t n = best.order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const City r = best.order[i];
    const City s = best.order[(i + 1) % n];
    set(r, s, (1.0 - alpha) * (*this)(r, s) + deposit);
  }
}

void PheromoneMatrix::write_csv(std::ostream& os) const {
  os << "i,j,tau\n" << std::setprecision(17);
  for (City i = 0; i < n_; ++i) {
    for (City j = i + 1; j < n_; ++j) os << i << ',' << j << ',' << (*this)(i, j) << '\n';
  }
}

PheromoneMatrix init_pheromone(const DistanceMatrix& d) {
  const int n = d.size();
  if (n < 3) throw std::invalid_argument("init_pheromone: need at least 3 cities");
  const Tour nn = nearest_neighbor_tour(d, 0);
  if (nn.cost <= 0) throw std::invalid_argument("init_pheromone: nearest-neighbor tour has zero length");
  return PheromoneMatrix(n, 1.0 / (static_cast<double>(n) * static_cast<double>(nn.cost)));
}

}  // namespace antgls
