#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "firesched/rng.hpp"

namespace firesched {

// Two-part route encoding: a permutation of the n fire ids followed by the
// m per-UAV route lengths. Route i is the contiguous slice of the permutation
// after the lengths of routes 1..i-1.
struct TwoPartChromosome {
  std::vector<int> task_order;     // permutation of 1..n
  std::vector<int> route_lengths;  // m positive entries summing to n

  friend bool operator==(const TwoPartChromosome&, const TwoPartChromosome&) = default;
};

struct RoutePlan {
  std::vector<std::vector<int>> routes;  // routes[i] = ordered fire ids of UAV i+1

  friend bool operator==(const RoutePlan&, const RoutePlan&) = default;
};

inline bool is_valid(const TwoPartChromosome& c) {
  const std::size_t n = c.task_order.size();
  if (c.route_lengths.empty() || c.route_lengths.size() > n) return false;
  std::vector<char> seen(n + 1, 0);
  for (int id : c.task_order) {
    if (id < 1 || static_cast<std::size_t>(id) > n || seen[id]) return false;
    seen[id] = 1;
  }
  long long sum = 0;
  for (int len : c.route_lengths) {
    if (len < 1) return false;
    sum += len;
  }
  return sum == static_cast<long long>(n);
}

inline void validate(const TwoPartChromosome& c) {
  if (!is_valid(c)) throw std::invalid_argument("invalid two-part chromosome");
}

inline RoutePlan decode(const TwoPartChromosome& c) {
  validate(c);
  RoutePlan plan;
  plan.routes.reserve(c.route_lengths.size());
  auto cursor = c.task_order.begin();
  for (int len : c.route_lengths) {
    plan.routes.emplace_back(cursor, cursor + len);
    cursor += len;
  }
  return plan;
}

inline TwoPartChromosome encode(const RoutePlan& plan) {
  TwoPartChromosome c;
  for (const auto& route : plan.routes) {
    if (route.empty()) throw std::invalid_argument("encode: empty route");
    c.task_order.insert(c.task_order.end(), route.begin(), route.end());
    c.route_lengths.push_back(static_cast<int>(route.size()));
  }
  validate(c);  // rejects plans that do not partition 1..n
  return c;
}

// Uniform over valid chromosomes: a uniform permutation paired with a uniform
// composition of n into m positive parts (an (m-1)-subset of the n-1 cuts).
inline TwoPartChromosome random_chromosome(int n, int m, Rng& rng) {
  if (m < 1 || n < m) throw std::invalid_argument("random_chromosome: need n >= m >= 1");
  TwoPartChromosome c;
  c.task_order.resize(n);
  std::iota(c.task_order.begin(), c.task_order.end(), 1);
  rng.shuffle(c.task_order);

  std::vector<int> cuts(n - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  for (int i = 0; i < m - 1; ++i) {
    int j = i + static_cast<int>(rng.uniform_int(cuts.size() - i));
    std::swap(cuts[i], cuts[j]);
  }
  cuts.resize(m - 1);
  std::sort(cuts.begin(), cuts.end());

  c.route_lengths.reserve(m);
  int prev = 0;
  for (int cut : cuts) {
    c.route_lengths.push_back(cut - prev);
    prev = cut;
  }
  c.route_lengths.push_back(n - prev);
  return c;
}

// Total repair for raw crossover output. First part: keep the first
// occurrence of each id in order, then append the missing ids ascending.
// Second part: clamp entries to >= 1, then walk the sum back to n one unit at
// a time, taking from the largest entry / giving to the smallest (first index
// on ties).
inline TwoPartChromosome repair(std::vector<int> task_order_raw,
                                std::vector<int> route_lengths_raw) {
  const int n = static_cast<int>(task_order_raw.size());
  const int m = static_cast<int>(route_lengths_raw.size());
  if (m < 1 || n < m) throw std::invalid_argument("repair: need n >= m >= 1");

  std::vector<char> seen(n + 1, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int id : task_order_raw) {
    if (id >= 1 && id <= n && !seen[id]) {
      seen[id] = 1;
      order.push_back(id);
    }
  }
  for (int id = 1; id <= n; ++id)
    if (!seen[id]) order.push_back(id);

  long long sum = 0;
  for (int& len : route_lengths_raw) {
    len = std::max(len, 1);
    sum += len;
  }
  while (sum > n) {
    auto it = std::max_element(route_lengths_raw.begin(), route_lengths_raw.end());
    --*it;
    --sum;
  }
  while (sum < n) {
    auto it = std::min_element(route_lengths_raw.begin(), route_lengths_raw.end());
    ++*it;
    ++sum;
  }
  return {std::move(order), std::move(route_lengths_raw)};
}

}  // namespace firesched
