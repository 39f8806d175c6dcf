#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincolor {

namespace detail {
inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) throw std::overflow_error("Ramsey bound overflows 64 bits");
  return a * b;
}
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > UINT64_MAX - b) throw std::overflow_error("Ramsey bound overflows 64 bits");
  return a + b;
}

// R(n_1, ..., n_c) <= sum_i R(..., n_i - 1, ...) - (c - 2), with R = 1 once some n_i <= 1.
inline std::uint64_t graph_bound(std::vector<std::uint64_t> ns, std::map<std::vector<std::uint64_t>, std::uint64_t>& memo) {
  std::sort(ns.begin(), ns.end());
  if (ns.empty()) return 0;
  if (ns.front() <= 1) return 1;
  if (auto it = memo.find(ns); it != memo.end()) return it->second;
  const std::uint64_t c = ns.size();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i > 0 && ns[i] == ns[i - 1]) {  // symmetric term already summed once
      continue;
    }
    auto smaller = ns;
    --smaller[i];
    const auto mult = static_cast<std::uint64_t>(std::count(ns.begin(), ns.end(), ns[i]));
    total = checked_add(total, checked_mul(mult, graph_bound(smaller, memo)));
  }
  const std::uint64_t out = c >= 2 ? total - (c - 2) : total + 1;
  return memo[ns] = out;
}

inline std::uint64_t states_below(std::uint64_t n, std::uint64_t colors) {
  // multisets of size `colors` from {1..n}: C(n + colors - 1, colors), saturated
  long double v = 1;
  for (std::uint64_t i = 1; i <= colors; ++i) {
    v = v * static_cast<long double>(n + i - 1) / static_cast<long double>(i);
    if (v > 1e7L) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(v);
}

// Multinomial (c(n-1))! / ((n-1)!)^c, the same recursion without the correction term.
inline std::uint64_t multinomial_bound(std::uint64_t n, std::uint64_t colors) {
  std::uint64_t out = 1, placed = 0;
  for (std::uint64_t c = 0; c < colors; ++c)
    for (std::uint64_t i = 1; i < n; ++i) {
      ++placed;
      // out * placed / i stays integral: it is a product of binomials
      std::uint64_t g = std::gcd(placed, i);
      std::uint64_t num = placed / g, den = i / g;
      if (out % den != 0) throw std::logic_error("multinomial step not integral");
      out = checked_mul(out / den, num);
    }
  return out;
}
}  // namespace detail

/// A number m with m -> (n)^exponent_colors: every colouring of the exponent-subsets of an m-set
/// has a homogeneous n-set. An upper bound, not the Ramsey number itself. Never below `exponent`.
inline std::uint64_t ramsey_upper_bound(std::uint64_t n, std::uint64_t exponent, std::uint64_t colors) {
  if (exponent != 2 && exponent != 3) throw std::invalid_argument("exponent must be 2 or 3");
  if (colors == 0) throw std::invalid_argument("need at least one colour");
  auto graphs = [&](std::uint64_t size) -> std::uint64_t {
    if (size <= 1) return size;
    if (colors == 1) return size;
    if (detail::states_below(size, colors) == UINT64_MAX) return detail::multinomial_bound(size, colors);
    std::map<std::vector<std::uint64_t>, std::uint64_t> memo;
    return detail::graph_bound(std::vector<std::uint64_t>(colors, size), memo);
  };
  std::uint64_t m = 0;
  if (exponent == 2) {
    m = graphs(n);
  } else if (n <= 2 || colors == 1) {
    m = n;
  } else {
    // An end-homogeneous sequence a_1..a_N with N = R^2(n-1) + 1 contains a homogeneous n-set.
    // Choosing a_i splits what is left into c^{i-1} classes, so s_i = c^{i-1}(s_{i+1} - 1) + 2.
    const std::uint64_t big_n = detail::checked_add(graphs(n - 1), 1);
    std::uint64_t s = 1;
    for (std::uint64_t i = big_n - 1; i >= 2; --i) {
      std::uint64_t power = 1;
      for (std::uint64_t t = 1; t < i; ++t) power = detail::checked_mul(power, colors);
      s = detail::checked_add(detail::checked_mul(power, s - 1), 2);
    }
    m = detail::checked_add(s, 1);
  }
  return std::max(m, exponent);
}

/// The preprocessing of the triple classifier: n large enough for the pigeonhole steps.
inline std::uint64_t lifted_n(std::uint64_t n, std::uint64_t degree_bound, std::uint64_t k, std::uint64_t l) {
  return std::max({n, degree_bound * (2 * k) * (2 * k) + 1, 3 * l + 1});
}

/// Colours of the triple classifier: three clauses times three b times k slots, plus OK.
inline std::uint64_t triple_label_count(std::uint64_t k) { return 9 * k + 1; }

}  // namespace lincolor
