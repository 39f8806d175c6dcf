#pragma once

// Seeded random instances for the property suites and the CLI.

#include <lincolor/hypergraph/closure.hpp>
#include <lincolor/poset/merge.hpp>

#include <cstdint>
#include <functional>
#include <random>

namespace lincolor::gen {

using Rng = std::mt19937_64;

// std::uniform_int_distribution differs between standard libraries; this keeps streams portable.
inline std::uint64_t below(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }
inline std::int64_t between(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}
inline bool coin(Rng& rng, unsigned percent) { return below(rng, 100) < percent; }

inline Rational small_rational(Rng& rng, std::int64_t span = 4) {
  Rational r(static_cast<long>(between(rng, -span, span)), static_cast<unsigned long>(between(rng, 1, 3)));
  r.canonicalize();
  return r;
}

inline Scalar small_scalar(Rng& rng, const FieldPtr& field, std::int64_t span = 4) {
  return Scalar(field, small_rational(rng, span), field->degree() == 2 ? small_rational(rng, span) : Rational(0));
}

inline GroupPoint small_point(Rng& rng, const FieldPtr& field, std::size_t dim, std::int64_t span = 4) {
  std::vector<Scalar> e;
  for (std::size_t i = 0; i < dim; ++i) e.push_back(small_scalar(rng, field, span));
  return GroupPoint(std::move(e));
}

/// Random rational combination of the basis vectors.
inline GroupPoint point_in(Rng& rng, const Basis& a, std::int64_t span = 3) {
  GroupPoint p = GroupPoint::zero(a.field(), a.dim());
  for (const auto& v : a.vectors()) p = p + Scalar(a.field(), small_rational(rng, span)) * v;
  return p;
}

inline GroupPoint point_outside(Rng& rng, const Basis& a, std::int64_t span = 4) {
  if (a.is_full()) throw std::invalid_argument("no point lies outside the full space");
  while (true) {
    auto p = small_point(rng, a.field(), a.dim(), span);
    if (!a.contains(p)) return p;
  }
}

/// Grows a point pool by adding third points of random pairs, keeping those `accept` admits.
/// Hyperedges among the pool are therefore plentiful.
inline void grow(const LinearHypergraph& h, Rng& rng, std::vector<GroupPoint>& pool, std::size_t target,
                 const std::function<bool(const GroupPoint&)>& accept, const std::vector<GroupPoint>& helpers = {}) {
  std::size_t attempts = 0;
  while (pool.size() < target && attempts++ < 40 * target) {
    if (pool.empty()) return;
    const auto& x = pool[below(rng, pool.size())];
    const bool use_helper = !helpers.empty() && coin(rng, 50);
    const auto& y = use_helper ? helpers[below(rng, helpers.size())] : pool[below(rng, pool.size())];
    if (x == y) continue;
    auto zs = third_points(h, x, y);
    if (zs.empty()) continue;
    auto z = zs[below(rng, zs.size())];
    if (!accept(z) || std::find(pool.begin(), pool.end(), z) != pool.end()) continue;
    pool.push_back(std::move(z));
  }
}

/// A random closed subspace of rank below the ambient one, grown from random seeds.
inline ClosedSubspace random_proper_closed(const LinearHypergraph& h, Rng& rng) {
  for (int tries = 0; tries < 50; ++tries) {
    std::vector<GroupPoint> seed;
    const std::size_t n = below(rng, 2) + (tries < 25 ? 1 : 0);
    for (std::size_t i = 0; i < n; ++i) seed.push_back(small_point(rng, h.field(), h.dim(), 3));
    auto c = gamma_closure(h, seed);
    if (!c.basis.is_full()) return c;
  }
  return gamma_closure(h, {});
}

/// A sample of up to max_points outside A, rich in remainder edges: pairs (x, z) with z in A
/// are completed to hyperedges and the third point kept when it also lies outside A.
inline std::vector<GroupPoint> remainder_sample(const LinearHypergraph& h, const Basis& a, Rng& rng,
                                                std::size_t max_points) {
  std::vector<GroupPoint> pool;
  const std::size_t seeds = 2 + below(rng, 3);
  for (std::size_t i = 0; i < seeds; ++i) pool.push_back(point_outside(rng, a));
  std::vector<GroupPoint> helpers;
  for (int i = 0; i < 6; ++i) helpers.push_back(point_in(rng, a));
  const std::size_t target = std::min<std::size_t>(max_points, 8 + below(rng, max_points));
  grow(h, rng, pool, target, [&](const GroupPoint& z) { return !a.contains(z); }, helpers);
  return canonical_point_set(std::move(pool));
}

/// An increasing chain of closed subspaces ending at the full space.
inline std::vector<ClosedSubspace> random_chain(const LinearHypergraph& h, Rng& rng) {
  std::vector<ClosedSubspace> chain;
  auto current = random_proper_closed(h, rng);
  chain.push_back(current);
  while (!current.basis.is_full()) {
    auto seed = current.basis.vectors();
    seed.push_back(point_outside(rng, current.basis));
    if (coin(rng, 30)) seed.push_back(small_point(rng, h.field(), h.dim()));
    current = gamma_closure(h, seed);
    chain.push_back(current);
  }
  return chain;
}

/// A sample spread over the stages of a chain, with hyperedges inside stages and across them.
inline std::vector<GroupPoint> chain_sample(const LinearHypergraph& h, const std::vector<ClosedSubspace>& chain,
                                            Rng& rng, std::size_t max_points) {
  std::vector<GroupPoint> pool;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& a = chain[i].basis;
    const std::size_t n = 1 + below(rng, 3);
    for (std::size_t k = 0; k < n; ++k) {
      GroupPoint p = point_in(rng, a);
      if (i > 0 && chain[i - 1].contains(p)) continue;
      if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(std::move(p));
    }
  }
  if (pool.size() < 2) pool.push_back(small_point(rng, h.field(), h.dim()));
  grow(h, rng, pool, std::min<std::size_t>(max_points, 10 + below(rng, max_points)),
       [](const GroupPoint&) { return true; });
  return canonical_point_set(std::move(pool));
}

/// Recolours points accepted by `movable` with fresh colours until no hyperedge is monochromatic.
inline void repair(const LinearHypergraph& h, Rng& rng, TotalSampleColoring& col,
                   const std::function<bool(const GroupPoint&)>& movable) {
  while (auto bad = verify_coloring(h, col)) {
    const GroupPoint* target = nullptr;
    for (const auto& p : bad->points)
      if (movable(p)) target = &p;
    if (!target) throw std::logic_error("cannot repair hyperedge " + bad->to_string());
    const auto tier = static_cast<std::uint32_t>(below(rng, 2));
    col[*target] = Color::fresh(tier, fresh_tag(tier, {&col}));
  }
}

inline Color pooled_color(Rng& rng, std::uint32_t tiers = 2, std::uint64_t tags = 2) {
  return Color::fresh(static_cast<std::uint32_t>(below(rng, tiers)), below(rng, tags));
}

struct SceneInstance {
  MergeScene scene;
  std::vector<GroupPoint> extra;
};

/// A merge scene with A0 ∩ A1 = V, colours drawn from a small pool so that equal tiers across
/// the two conditions are common, and extra points planted as third points of cross pairs.
inline SceneInstance random_merge_scene(const LinearHypergraph& h, Rng& rng, std::size_t points_per_side = 8) {
  ClosedSubspace core, a0, a1;
  for (int tries = 0;; ++tries) {
    if (tries > 200) throw std::runtime_error("could not build a merge scene in this space");
    std::vector<GroupPoint> seed;
    if (coin(rng, 70)) seed.push_back(small_point(rng, h.field(), h.dim(), 3));
    core = gamma_closure(h, seed);
    auto widen = [&] {
      auto s = core.basis.vectors();
      s.push_back(small_point(rng, h.field(), h.dim(), 3));
      return gamma_closure(h, s);
    };
    a0 = widen();
    a1 = widen();
    if (a0.basis.is_full() || a1.basis.is_full() || a0 == a1 || a0.basis == core.basis || a1.basis == core.basis)
      continue;
    if (a0.basis.intersection_rank(a1.basis) == core.basis.rank()) break;
  }

  std::vector<GroupPoint> core_pts;
  if (!core.basis.is_zero()) {
    for (int i = 0; i < 2; ++i) core_pts.push_back(point_in(rng, core.basis));
    core_pts = canonical_point_set(core_pts);
    grow(h, rng, core_pts, 2 + below(rng, 4), [&](const GroupPoint& z) { return core.contains(z); });
  }
  TotalSampleColoring pbar;
  for (const auto& x : core_pts) pbar[x] = pooled_color(rng);
  repair(h, rng, pbar, [](const GroupPoint&) { return true; });

  auto side = [&](const ClosedSubspace& a) {
    std::vector<GroupPoint> pts;
    for (int i = 0; i < 3; ++i) {
      auto p = point_in(rng, a.basis);
      if (!core.contains(p)) pts.push_back(std::move(p));
    }
    if (pts.empty()) pts.push_back(a.basis.vectors().back());
    pts = canonical_point_set(pts);
    grow(h, rng, pts, points_per_side, [&](const GroupPoint& z) { return a.contains(z) && !core.contains(z); },
         core_pts);
    Condition p{a, pbar};
    for (const auto& x : pts) p.coloring[x] = pooled_color(rng);
    repair(h, rng, p.coloring, [&](const GroupPoint& x) { return !core.contains(x); });
    return p;
  };
  SceneInstance out;
  out.scene = MergeScene{core, side(a0), side(a1), pbar};

  const auto s0 = off_core(out.scene, out.scene.p0);
  const auto s1 = off_core(out.scene, out.scene.p1);
  const std::size_t planted = 1 + below(rng, 5);
  for (std::size_t i = 0; i < planted && !s0.empty() && !s1.empty(); ++i) {
    const auto zs = third_points(h, s0[below(rng, s0.size())], s1[below(rng, s1.size())]);
    for (const auto& z : zs) out.extra.push_back(z);
  }
  const std::size_t loose = below(rng, 3);
  for (std::size_t i = 0; i < loose; ++i) {
    auto x = small_point(rng, h.field(), h.dim());
    if (!a0.contains(x) && !a1.contains(x)) out.extra.push_back(std::move(x));
  }
  out.extra = canonical_point_set(std::move(out.extra));
  return out;
}

}  // namespace lincolor::gen
