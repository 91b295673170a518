#pragma once

// Test-only brute-force references. Nothing here calls into the library's
// sumset code or kernels.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline std::vector<std::int64_t> as_set(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::map<std::int64_t, std::uint64_t> profile(const std::vector<std::int64_t>& raw) {
  const auto a = as_set(raw);
  std::map<std::int64_t, std::uint64_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) ++out[a[i] + a[j]];
  }
  return out;
}

inline std::uint64_t rep(const std::vector<std::int64_t>& a, std::int64_t n) {
  auto p = profile(a);
  auto it = p.find(n);
  return it == p.end() ? 0 : it->second;
}

inline bool is_sidon(const std::vector<std::int64_t>& raw) {
  const auto a = as_set(raw);
  std::set<std::int64_t> sums;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) {
      if (!sums.insert(a[i] + a[j]).second) return false;
    }
  }
  return true;
}

inline std::vector<std::int64_t> greedy(std::int64_t n) {
  std::vector<std::int64_t> d;
  for (std::int64_t c = 1; c <= n; ++c) {
    d.push_back(c);
    if (!is_sidon(d)) d.pop_back();
  }
  return d;
}

inline std::size_t counting(const std::vector<std::int64_t>& a, std::int64_t y, std::int64_t x) {
  return static_cast<std::size_t>(
      std::count_if(a.begin(), a.end(), [&](std::int64_t v) { return y <= v && v <= x; }));
}

}  // namespace oracle
