#pragma once

#include <lincolor/hj/lines.hpp>
#include <lincolor/hypergraph/linear_hypergraph.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lincolor::hj {

/// Per level m a triple x_0(m), x_1(m), x_2(m) solving the component's equation, shrinking fast.
struct EmbeddingScheme {
  std::size_t component = 0;
  std::array<GroupPoint, 3> base;           // level 0
  std::vector<Rational> scale;              // x_i(m) = scale[m] * base_i
  std::vector<std::array<GroupPoint, 3>> levels;

  std::size_t depth() const { return levels.size(); }
};

namespace detail {
inline std::optional<std::array<GroupPoint, 3>> solve_base(const LinearHypergraph& h, std::size_t comp,
                                                           const GroupPoint& x0, const GroupPoint& x1) {
  const auto& c = h.component(comp);
  GroupPoint x2 = h.inverse(comp, 2) * (-(c.g(0) * x0 + c.g(1) * x1));
  if (x0.is_zero() || x1.is_zero() || x2.is_zero() || x0 == x1 || x1 == x2 || x0 == x2) return std::nullopt;
  return std::array<GroupPoint, 3>{x0, x1, std::move(x2)};
}

inline Rational min_pairwise_squared_distance(const std::vector<GroupPoint>& pts) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) continue;
      Rational d = squared_norm(pts[i] - pts[j]);
      if (!best || d < *best) best = d;
    }
  if (!best) throw std::logic_error("no two distinct earlier points");
  return *best;
}

inline Rational quarter_power(std::size_t m) {
  Rational r(1);
  for (std::size_t i = 0; i < m; ++i) r /= 4;
  return r;
}
}  // namespace detail

/// The least solution in a fixed search order: x0 = e_0, x1 = t e_0 for t = 2, 3, ..., then small
/// integer points for x1.
inline std::array<GroupPoint, 3> base_triple(const LinearHypergraph& h, std::size_t comp = 0) {
  if (comp >= h.component_count()) throw std::invalid_argument("no such component");
  if (!h.component(comp).sum_is_zero()) throw std::invalid_argument("component is not sum-zero");
  const auto x0 = GroupPoint::axis(h.field(), h.dim(), 0);
  for (long t = 2; t <= 8; ++t)
    if (auto s = detail::solve_base(h, comp, x0, Scalar(h.field(), t) * x0)) return *s;
  std::vector<GroupPoint> candidates;
  const long ext = h.field()->degree() == 2 ? 2 : 0;
  std::vector<Scalar> entries;
  for (long a = -2; a <= 2; ++a)
    for (long b = -ext; b <= ext; ++b) entries.emplace_back(h.field(), a, b);
  std::vector<std::size_t> digit(h.dim(), 0);
  while (true) {
    std::vector<Scalar> e;
    for (auto d : digit) e.push_back(entries[d]);
    candidates.emplace_back(std::move(e));
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == entries.size()) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  std::sort(candidates.begin(), candidates.end());
  for (const auto& x1 : candidates)
    if (auto s = detail::solve_base(h, comp, x0, x1)) return *s;
  throw std::invalid_argument("no hyperedge of nonzero points found for this component");
}

/// Levels 0..M-1: level m is the base triple scaled by delta_m = delta_{m-1} / K, K = 2, 4, 8, ...
/// until every point has squared norm below 4^{-m} times the least squared distance between
/// distinct earlier points.
inline EmbeddingScheme build_embedding(const LinearHypergraph& h, std::size_t M, std::size_t comp = 0) {
  EmbeddingScheme s;
  s.component = comp;
  s.base = base_triple(h, comp);
  std::vector<GroupPoint> earlier;
  Rational delta(1);
  for (std::size_t m = 0; m < M; ++m) {
    if (m > 0) {
      const Rational bound = detail::quarter_power(m) * detail::min_pairwise_squared_distance(earlier);
      Rational k(2);
      while (true) {
        const Rational trial = delta / k;
        bool small = true;
        for (const auto& b : s.base) small = small && trial * trial * squared_norm(b) < bound;
        if (small) {
          delta = trial;
          break;
        }
        k *= 2;
      }
    }
    std::array<GroupPoint, 3> level;
    for (int i = 0; i < 3; ++i) level[i] = Scalar(h.field(), delta) * s.base[i];
    for (const auto& p : level) earlier.push_back(p);
    s.scale.push_back(delta);
    s.levels.push_back(std::move(level));
  }
  return s;
}

/// Re-checks every level: nonzero, pairwise distinct, the equation, and the decay inequality.
inline std::optional<std::string> verify_scheme(const LinearHypergraph& h, const EmbeddingScheme& s) {
  std::vector<GroupPoint> earlier;
  for (std::size_t m = 0; m < s.levels.size(); ++m) {
    const auto& x = s.levels[m];
    const std::string at = "level " + std::to_string(m) + ": ";
    for (const auto& p : x)
      if (p.is_zero()) return at + "zero point";
    if (x[0] == x[1] || x[1] == x[2] || x[0] == x[2]) return at + "points not distinct";
    if (!h.satisfies(s.component, x[0], x[1], x[2])) return at + "equation fails";
    if (m > 0) {
      const Rational bound = detail::quarter_power(m) * detail::min_pairwise_squared_distance(earlier);
      for (const auto& p : x)
        if (!(squared_norm(p) < bound)) return at + "decay fails for " + p.to_string();
    }
    earlier.insert(earlier.end(), x.begin(), x.end());
  }
  return std::nullopt;
}

/// pi(y) = sum over positions m of x_{y_m}(m).
inline GroupPoint pi(const LinearHypergraph& h, const EmbeddingScheme& s, const Word& y) {
  if (y.size() > s.depth()) throw std::invalid_argument("word longer than the scheme");
  GroupPoint out = GroupPoint::zero(h.field(), h.dim());
  for (std::size_t m = 0; m < y.size(); ++m) {
    if (y[m] > 2) throw std::invalid_argument("letter outside {0,1,2}");
    out = out + s.levels[m][y[m]];
  }
  return out;
}

struct LineImage {
  CombinatorialLine line;
  std::array<GroupPoint, 3> images;
  bool distinct = false;
  bool equation = false;  // sum_i g_i(pi(line(i))) = 0 in the scheme's component
  bool hyperedge = false;  // the image set is recognised by the hypergraph

  bool ok() const { return distinct && equation && hyperedge; }
};

/// Images of every line of 3^L, L <= depth, with their hyperedge verdicts.
inline std::vector<LineImage> check_homomorphism(const LinearHypergraph& h, const EmbeddingScheme& s, std::uint32_t L) {
  std::vector<LineImage> out;
  for (const auto& l : lines(L, 3)) {
    LineImage r{l, {}};
    for (std::uint32_t c = 0; c < 3; ++c) r.images[c] = pi(h, s, l.point(c));
    const auto& x = r.images;
    r.distinct = !(x[0] == x[1] || x[1] == x[2] || x[0] == x[2]);
    r.equation = h.satisfies(s.component, x[0], x[1], x[2]);
    r.hyperedge = r.distinct && h.hyperedge(x[0], x[1], x[2]).has_value();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace lincolor::hj
