#pragma once

// Test-only reference computations. These deliberately avoid the library's
// implementation paths so they can check them.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <vector>

#include "antgls/tsplib.hpp"

namespace antgls::oracle {

inline std::int64_t closed_length(const std::vector<int>& order, const DistanceMatrix& d) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) total += d(order[i], order[i + 1]);
  total += d(order.back(), order.front());
  return total;
}

struct Enumeration {
  std::int64_t optimum = 0;
  std::size_t distinct_tours = 0;
};

// All tours with city 0 first, each undirected cycle counted once.
inline Enumeration enumerate_tours(const DistanceMatrix& d) {
  const int n = d.size();
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  Enumeration e;
  e.optimum = -1;
  do {
    if (rest.front() > rest.back()) continue;  // keep one orientation
    std::vector<int> t{0};
    t.insert(t.end(), rest.begin(), rest.end());
    const auto c = closed_length(t, d);
    if (e.optimum < 0 || c < e.optimum) e.optimum = c;
    ++e.distinct_tours;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return e;
}

// PBX as explicit per-cursor queues of the cities left in each segment.
inline std::vector<int> pbx_reference(const std::vector<int>& father, const std::vector<int>& mother, int start,
                                      int k, const DistanceMatrix& d) {
  const int n = static_cast<int>(father.size());
  auto segments = [&](const std::vector<int>& parent) {
    const int p0 = static_cast<int>((std::find(parent.begin(), parent.end(), start) - parent.begin() + 1) % n);
    std::vector<int> starts;
    for (int i = 0; i < k; ++i) starts.push_back((p0 + static_cast<int>((2LL * i * n + k) / (2LL * k))) % n);
    std::vector<std::deque<int>> out;
    for (int i = 0; i < k; ++i) {
      int len = (starts[static_cast<std::size_t>((i + 1) % k)] - starts[static_cast<std::size_t>(i)] + n) % n;
      if (len == 0) len = n;
      std::deque<int> seg;
      for (int j = 0; j < len; ++j) seg.push_back(parent[static_cast<std::size_t>((starts[static_cast<std::size_t>(i)] + j) % n)]);
      out.push_back(std::move(seg));
    }
    return out;
  };
  auto fs = segments(father);
  auto ms = segments(mother);
  std::vector<int> child{start};
  std::vector<bool> in_child(static_cast<std::size_t>(n), false);
  in_child[static_cast<std::size_t>(start)] = true;
  while (static_cast<int>(child.size()) < n) {
    std::deque<int>* best_seg = nullptr;
    int best_city = -1;
    for (auto* group : {&fs, &ms}) {
      for (auto& seg : *group) {
        while (!seg.empty() && in_child[static_cast<std::size_t>(seg.front())]) seg.pop_front();
        if (seg.empty()) continue;
        const int c = seg.front();
        if (best_seg == nullptr || d(child.back(), c) < d(child.back(), best_city)) {
          best_seg = &seg;
          best_city = c;
        }
      }
    }
    best_seg->pop_front();
    child.push_back(best_city);
    in_child[static_cast<std::size_t>(best_city)] = true;
  }
  return child;
}

}  // namespace antgls::oracle
