#pragma once

#include <vector>

#include "antgls/tour.hpp"
#include "antgls/tsplib.hpp"

namespace antgls::figures {

// The worked 8-city example. Cities are 0-based here; labels in the
// original example are these plus one.
DistanceMatrix eight_city_matrix();

// Converts 1-based labels to a Tour.
Tour tour_from_labels(const std::vector<int>& labels, const DistanceMatrix& d);

inline const std::vector<int> kPbxFather = {4, 5, 7, 3, 1, 2, 6, 8};
inline const std::vector<int> kPbxMother = {3, 1, 7, 5, 6, 4, 2, 8};
inline constexpr int kPbxStartLabel = 4;

inline const std::vector<int> kClassifyInput = {4, 5, 1, 2, 7, 6, 3, 8};
// Position of city 7 in kClassifyInput.
inline constexpr int kClassifySecondStart = 4;

}  // namespace antgls::figures
