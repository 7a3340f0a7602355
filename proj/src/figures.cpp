#include "antgls/figures.hpp"

namespace antgls::figures {

DistanceMatrix eight_city_matrix() {
  return DistanceMatrix(8, {
                               0,  12, 19, 31, 22, 17, 23, 12,  //
                               12, 0,  15, 37, 21, 28, 35, 22,  //
                               19, 15, 0,  50, 36, 35, 35, 21,  //
                               31, 37, 50, 0,  20, 21, 37, 38,  //
                               22, 21, 36, 20, 0,  25, 40, 33,  //
                               17, 28, 35, 21, 25, 0,  16, 18,  //
                               23, 35, 35, 37, 40, 16, 0,  14,  //
                               12, 22, 21, 38, 33, 18, 14, 0,
                           });
}

Tour tour_from_labels(const std::vector<int>& labels, const DistanceMatrix& d) {
  std::vector<City> order;
  order.reserve(labels.size());
  for (int l : labels) order.push_back(l - 1);
  return make_tour(std::move(order), d);
}

}  // namespace antgls::figures
