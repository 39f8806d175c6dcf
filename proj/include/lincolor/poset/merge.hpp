#pragma once

#include <lincolor/poset/condition.hpp>

#include <set>

namespace lincolor {

/// Two conditions over a common closed core V with A0 ∩ A1 = V, both restricting on V to pbar.
struct MergeScene {
  ClosedSubspace core;
  Condition p0;
  Condition p1;
  TotalSampleColoring pbar;  // colouring of the sampled core points
};

inline std::optional<std::string> check_scene(const LinearHypergraph& h, const MergeScene& s) {
  if (auto defect = closure_defect(h, s.core.basis)) return "core not closed: image " + defect->to_string();
  for (const auto* p : {&s.p0, &s.p1}) {
    const std::string which = p == &s.p0 ? "p0: " : "p1: ";
    if (auto err = validate(h, *p)) return which + *err;
    if (!p->domain.basis.contains(s.core.basis)) return which + "domain does not contain the core";
    std::size_t on_core = 0;
    for (const auto& [x, c] : p->coloring) {
      if (!s.core.contains(x)) continue;
      ++on_core;
      auto it = s.pbar.find(x);
      if (it == s.pbar.end() || !(it->second == c)) return which + "disagrees with pbar at " + x.to_string();
    }
    if (on_core != s.pbar.size()) return which + "does not extend pbar";
  }
  for (const auto& [x, c] : s.pbar)
    if (!s.core.contains(x)) return "pbar colours " + x.to_string() + " outside the core";
  if (s.p0.domain.basis.intersection_rank(s.p1.domain.basis) != s.core.basis.rank())
    return "A0 ∩ A1 is larger than the core";
  return std::nullopt;
}

struct CrossPair {
  GroupPoint x0;
  GroupPoint x1;
  std::uint32_t tier = 0;
};

/// Sampled points of p off the core, sorted.
inline std::vector<GroupPoint> off_core(const MergeScene& s, const Condition& p) {
  std::vector<GroupPoint> out;
  for (const auto& [x, c] : p.coloring)
    if (!s.core.contains(x)) out.push_back(x);
  return out;
}

/// Pairs (x0, x1) off the core with equal tiers completing {x0, x1, x} to a hyperedge.
inline std::vector<CrossPair> blocking_pairs(const LinearHypergraph& h, const MergeScene& s, const GroupPoint& x) {
  if (s.p0.domain.contains(x) || s.p1.domain.contains(x))
    throw std::invalid_argument("point " + x.to_string() + " lies inside a condition's domain");
  const auto s1 = off_core(s, s.p1);
  std::vector<CrossPair> out;
  for (const auto& x0 : off_core(s, s.p0)) {
    const auto t0 = s.p0.coloring.at(x0).tier;
    for (const auto& z : third_points(h, x0, x)) {
      if (!std::binary_search(s1.begin(), s1.end(), z)) continue;
      if (s.p1.coloring.at(z).tier == t0) out.push_back(CrossPair{x0, z, t0});
    }
  }
  return out;
}

/// The least tier n such that no cross pair of tier n completes a hyperedge with x.
inline std::uint32_t compute_nx(const LinearHypergraph& h, const MergeScene& s, const GroupPoint& x) {
  std::set<std::uint32_t> blocked;
  for (const auto& pr : blocking_pairs(h, s, x)) blocked.insert(pr.tier);
  std::uint32_t n = 0;
  while (blocked.count(n)) ++n;
  return n;
}

struct MergeCensus {
  std::size_t inside_old = 0;  // no new point: lies inside A0 or A1
  std::size_t one_new = 0;     // exactly one new point, completed by a cross pair
  std::size_t many_new = 0;    // two or more new points
};

struct MergeResult {
  Condition q;
  std::vector<std::pair<GroupPoint, std::uint32_t>> new_tiers;
  MergeCensus census;
  OrderReport below_p0;
  OrderReport below_p1;
};

/// A common lower bound of p0 and p1 whose sample adds the extra points, coloured injectively
/// with fresh tags at tier n_x.
inline MergeResult merge(const LinearHypergraph& h, const MergeScene& s, std::vector<GroupPoint> extra) {
  if (auto err = check_scene(h, s)) throw std::invalid_argument("invalid merge scene: " + *err);
  MergeResult r;
  r.q.coloring = s.p0.coloring;
  for (const auto& [x, c] : s.p1.coloring) {
    auto [it, fresh] = r.q.coloring.try_emplace(x, c);
    if (!fresh && !(it->second == c)) throw std::logic_error("p0 ∪ p1 is not a function at " + x.to_string());
  }
  extra = canonical_point_set(std::move(extra));
  auto seed = s.p0.domain.basis.vectors();
  for (const auto& v : s.p1.domain.basis.vectors()) seed.push_back(v);
  seed.insert(seed.end(), extra.begin(), extra.end());
  r.q.domain = gamma_closure(h, seed);

  std::set<GroupPoint> fresh_points;
  for (const auto& x : extra) {
    if (r.q.coloring.count(x)) continue;
    const auto n = compute_nx(h, s, x);
    r.new_tiers.emplace_back(x, n);
    fresh_points.insert(x);
  }
  // Injective on the new points: one fresh tag per point within its tier.
  for (const auto& [x, n] : r.new_tiers) r.q.coloring[x] = Color::fresh(n, fresh_tag(n, {&r.q.coloring}));

  for (const auto& e : find_hyperedges(h, r.q.sample())) {
    std::size_t k = 0;
    const GroupPoint* only = nullptr;
    for (const auto& p : e.points)
      if (fresh_points.count(p)) {
        ++k;
        only = &p;
      }
    const auto& c = r.q.coloring;
    const bool mono = c.at(e.points[0]) == c.at(e.points[1]) && c.at(e.points[1]) == c.at(e.points[2]);
    if (mono) throw std::logic_error("merge produced the monochromatic hyperedge " + e.to_string());
    if (k == 0) {
      const bool in0 = std::all_of(e.points.begin(), e.points.end(), [&](auto& p) { return s.p0.domain.contains(p); });
      const bool in1 = std::all_of(e.points.begin(), e.points.end(), [&](auto& p) { return s.p1.domain.contains(p); });
      if (!in0 && !in1) throw std::logic_error("old hyperedge " + e.to_string() + " straddles both domains");
      ++r.census.inside_old;
    } else if (k == 1) {
      std::vector<const GroupPoint*> rest;
      for (const auto& p : e.points)
        if (&p != only) rest.push_back(&p);
      auto off = [&](const Condition& p, const GroupPoint& y) { return p.coloring.count(y) && !s.core.contains(y); };
      const bool cross = (off(s.p0, *rest[0]) && off(s.p1, *rest[1])) || (off(s.p1, *rest[0]) && off(s.p0, *rest[1]));
      if (!cross) throw std::logic_error("one-new hyperedge " + e.to_string() + " lacks a cross pair");
      ++r.census.one_new;
    } else {
      ++r.census.many_new;
    }
  }
  r.below_p0 = leq(r.q, s.p0);
  r.below_p1 = leq(r.q, s.p1);
  if (!r.below_p0.holds || !r.below_p1.holds) throw std::logic_error("merge is not below both conditions");
  return r;
}

}  // namespace lincolor
