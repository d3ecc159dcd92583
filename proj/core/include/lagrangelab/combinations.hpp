#pragma once

#include <cstddef>
#include <vector>

namespace lagrangelab {

/// Calls f(indices) for every r-subset of {0..n-1} in increasing
/// lexicographic order. Stops early when f returns false.
template <class F>
void for_each_combination(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(c))) return;
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
  }
}

/// Same, in decreasing lexicographic order.
template <class F>
void for_each_combination_desc(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = n - r + i;
  while (true) {
    if (!f(static_cast<const std::vector<std::size_t>&>(c))) return;
    std::size_t i = r;
    while (i > 0 && c[i - 1] == (i == 1 ? 0 : c[i - 2] + 1)) --i;
    if (i == 0) return;
    --c[i - 1];
    for (std::size_t j = i; j < r; ++j) c[j] = n - r + j;
  }
}

}  // namespace lagrangelab
