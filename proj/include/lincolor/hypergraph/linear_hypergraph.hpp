#pragma once

#include <lincolor/algebra/matrix.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lincolor {

/// Names of the six maps whose injectivity makes a component slim.
inline constexpr std::array<const char*, 6> kSlimConditionNames = {"g0", "g1", "g2", "g0+g1", "g1+g2", "g0+g2"};

/// A ternary hypergraph cut out by g0(x0) + g1(x1) + g2(x2) = 0.
/// Slimness is not enforced here; LinearHypergraph does that.
class SlimComponent {
 public:
  SlimComponent(ExactMatrix g0, ExactMatrix g1, ExactMatrix g2) : g_{std::move(g0), std::move(g1), std::move(g2)} {
    for (int i = 1; i < 3; ++i) {
      if (g_[i].dim() != g_[0].dim()) throw std::invalid_argument("component matrices differ in dimension");
      if (!same_field(g_[i].field(), g_[0].field())) throw std::invalid_argument("component matrices differ in field");
    }
  }

  static SlimComponent scalars(const FieldPtr& field, std::size_t dim, const Scalar& s0, const Scalar& s1,
                               const Scalar& s2) {
    return SlimComponent(ExactMatrix::scalar(field, dim, s0), ExactMatrix::scalar(field, dim, s1),
                         ExactMatrix::scalar(field, dim, s2));
  }

  const ExactMatrix& g(std::size_t i) const { return g_[i]; }
  std::size_t dim() const { return g_[0].dim(); }
  const FieldPtr& field() const { return g_[0].field(); }

  /// The six maps in the order of kSlimConditionNames.
  std::array<ExactMatrix, 6> slim_maps() const {
    return {g_[0], g_[1], g_[2], g_[0] + g_[1], g_[1] + g_[2], g_[0] + g_[2]};
  }

  bool sum_is_zero() const { return (g_[0] + g_[1] + g_[2]).is_zero(); }

 private:
  std::array<ExactMatrix, 3> g_;
};

struct SlimReport {
  std::array<bool, 6> injective{};
  bool sum_zero = false;

  bool slim() const {
    for (bool b : injective)
      if (!b) return false;
    return true;
  }
};

inline SlimReport verify_slim(const SlimComponent& component) {
  SlimReport report;
  const auto maps = component.slim_maps();
  for (std::size_t i = 0; i < maps.size(); ++i) report.injective[i] = maps[i].is_injective();
  report.sum_zero = component.sum_is_zero();
  return report;
}

/// All six assignments of three labelled objects to the three roles, in lexicographic order.
/// kPermutations[p][r] is the object playing role r.
inline constexpr std::array<std::array<std::uint8_t, 3>, 6> kPermutations = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

/// A hyperedge with its points in sorted order and one witnessing enumeration:
/// points[roles[r]] plays role r in component `component`.
struct Hyperedge {
  std::array<GroupPoint, 3> points;
  std::size_t component = 0;
  std::array<std::uint8_t, 3> roles{0, 1, 2};

  const GroupPoint& in_role(std::size_t r) const { return points[roles[r]]; }

  friend bool operator==(const Hyperedge& a, const Hyperedge& b) { return a.points == b.points; }

  std::string to_string() const {
    return "{" + points[0].to_string() + " " + points[1].to_string() + " " + points[2].to_string() + "}";
  }
};

/// One way to complete a pair (x, y) to a hyperedge: x plays role_x, y plays role_y, z the remaining role.
struct Completion {
  GroupPoint z;
  std::size_t component = 0;
  std::uint8_t role_x = 0;
  std::uint8_t role_y = 1;
  std::uint8_t role_z = 2;
};

/// A finite union of slim components over a common field and dimension.
class LinearHypergraph {
 public:
  LinearHypergraph(FieldPtr field, std::size_t dim, std::vector<SlimComponent> components)
      : field_(std::move(field)), dim_(dim), components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("a hypergraph needs at least one component");
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const auto& c = components_[i];
      if (c.dim() != dim_) throw std::invalid_argument("component " + std::to_string(i) + " has wrong dimension");
      if (!same_field(c.field(), field_)) throw std::invalid_argument("component " + std::to_string(i) + " has wrong field");
      const auto report = verify_slim(c);
      for (std::size_t k = 0; k < 6; ++k)
        if (!report.injective[k])
          throw std::invalid_argument("component " + std::to_string(i) + " is not slim: " + kSlimConditionNames[k] +
                                      " is not injective");
      Inverses inv{{*c.g(0).inverse(), *c.g(1).inverse(), *c.g(2).inverse()},
                   {*(c.g(0) + c.g(1)).inverse(), *(c.g(1) + c.g(2)).inverse(), *(c.g(0) + c.g(2)).inverse()}};
      inverses_.push_back(std::move(inv));
    }
  }

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t component_count() const { return components_.size(); }
  const SlimComponent& component(std::size_t i) const { return components_[i]; }
  const std::vector<SlimComponent>& components() const { return components_; }

  const ExactMatrix& inverse(std::size_t component, std::size_t role) const { return inverses_[component].g[role]; }

  /// Every map a closed subspace must be closed under: each g, each inverse, each inverse of a pairwise sum.
  std::vector<const ExactMatrix*> closure_maps() const {
    std::vector<const ExactMatrix*> out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      for (std::size_t r = 0; r < 3; ++r) out.push_back(&components_[i].g(r));
      for (std::size_t r = 0; r < 3; ++r) out.push_back(&inverses_[i].g[r]);
      for (std::size_t r = 0; r < 3; ++r) out.push_back(&inverses_[i].pair_sums[r]);
    }
    return out;
  }

  /// Upper bound on the number of third points of any pair.
  std::size_t degree_bound() const { return 6 * components_.size(); }

  bool satisfies(std::size_t component, const GroupPoint& x0, const GroupPoint& x1, const GroupPoint& x2) const {
    const auto& c = components_[component];
    return (c.g(0) * x0 + c.g(1) * x1 + c.g(2) * x2).is_zero();
  }

  /// Witness for {a, b, c} being a hyperedge, if any: points must be pairwise distinct.
  std::optional<Hyperedge> hyperedge(const GroupPoint& a, const GroupPoint& b, const GroupPoint& c) const {
    if (a == b || b == c || a == c) return std::nullopt;
    Hyperedge e{{a, b, c}};
    std::sort(e.points.begin(), e.points.end());
    for (std::size_t i = 0; i < components_.size(); ++i)
      for (const auto& perm : kPermutations)
        if (satisfies(i, e.points[perm[0]], e.points[perm[1]], e.points[perm[2]])) {
          e.component = i;
          e.roles = perm;
          return e;
        }
    return std::nullopt;
  }

  bool verify(const Hyperedge& e) const {
    if (e.component >= components_.size()) return false;
    const auto& p = e.points;
    if (p[0] == p[1] || p[1] == p[2] || p[0] == p[2]) return false;
    return satisfies(e.component, e.in_role(0), e.in_role(1), e.in_role(2));
  }

  /// Every completion of the pair (x, y), one entry per (component, role of x, role of y),
  /// skipping solutions that coincide with x or y.
  std::vector<Completion> completions(const GroupPoint& x, const GroupPoint& y) const {
    if (x == y) throw std::invalid_argument("third points need two distinct points");
    std::vector<Completion> out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      const auto& c = components_[i];
      for (const auto& perm : kPermutations) {
        // perm maps role -> object with x = 0, y = 1, z = 2.
        std::uint8_t rx = 0, ry = 0, rz = 0;
        for (std::uint8_t r = 0; r < 3; ++r) {
          if (perm[r] == 0) rx = r;
          else if (perm[r] == 1) ry = r;
          else rz = r;
        }
        GroupPoint z = inverses_[i].g[rz] * (-(c.g(rx) * x + c.g(ry) * y));
        if (z == x || z == y) continue;
        out.push_back(Completion{std::move(z), i, rx, ry, rz});
      }
    }
    return out;
  }

 private:
  struct Inverses {
    std::array<ExactMatrix, 3> g;
    std::array<ExactMatrix, 3> pair_sums;
  };

  FieldPtr field_;
  std::size_t dim_;
  std::vector<SlimComponent> components_;
  std::vector<Inverses> inverses_;
};

/// All z with {x, y, z} a hyperedge, sorted and without repetition.
inline std::vector<GroupPoint> third_points(const LinearHypergraph& h, const GroupPoint& x, const GroupPoint& y) {
  std::vector<GroupPoint> out;
  for (auto& c : h.completions(x, y)) out.push_back(std::move(c.z));
  out = canonical_point_set(std::move(out));
  if (out.size() > h.degree_bound()) throw std::logic_error("third point count exceeds 6 per component");
  return out;
}

/// Every hyperedge inside s, each once, ordered lexicographically by sorted point triple.
inline std::vector<Hyperedge> find_hyperedges(const LinearHypergraph& h, std::vector<GroupPoint> s) {
  s = canonical_point_set(std::move(s));
  std::vector<Hyperedge> out;
  if (s.size() < 3) return out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      for (const auto& z : third_points(h, s[i], s[j])) {
        if (!(s[j] < z)) continue;
        if (!std::binary_search(s.begin(), s.end(), z)) continue;
        out.push_back(*h.hyperedge(s[i], s[j], z));
      }
    }
  std::sort(out.begin(), out.end(), [](const Hyperedge& a, const Hyperedge& b) { return a.points < b.points; });
  return out;
}

}  // namespace lincolor
