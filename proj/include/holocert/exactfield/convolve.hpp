#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "holocert/exactfield/field.hpp"

namespace holocert::detail {

// Truncated product: result has min(limit, |a|+|b|-1) entries.
template <class K, class F>
std::vector<K> convolve(const std::vector<K>& a, const std::vector<K>& b, std::size_t limit, const F& field) {
  if (a.empty() || b.empty() || limit == 0) return {};
  std::size_t n = std::min(limit, a.size() + b.size() - 1);
  std::vector<K> out(n, field.zero());
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (is_zero(a[i])) continue;
    std::size_t jmax = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) {
      if (is_zero(b[j])) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

inline std::vector<FpElem> convolve(const std::vector<FpElem>& a, const std::vector<FpElem>& b, std::size_t limit,
                                    const PrimeField& field) {
  if (a.empty() || b.empty() || limit == 0) return {};
  std::size_t n = std::min(limit, a.size() + b.size() - 1);
  std::vector<unsigned __int128> acc(n, 0);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    std::uint64_t ai = a[i].value();
    if (ai == 0) continue;
    std::size_t jmax = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) acc[i + j] += ai * std::uint64_t{b[j].value()};
  }
  std::vector<FpElem> out;
  out.reserve(n);
  for (auto v : acc) out.emplace_back(static_cast<long long>(v % field.p), field.p);
  return out;
}

}  // namespace holocert::detail
