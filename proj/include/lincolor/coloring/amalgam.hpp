#pragma once

#include <lincolor/coloring/color.hpp>
#include <lincolor/quotient/remainder.hpp>

#include <set>

namespace lincolor {

using TotalSampleColoring = std::map<GroupPoint, Color>;

/// First monochromatic hyperedge among the coloured points, if any.
inline std::optional<Hyperedge> verify_coloring(const LinearHypergraph& h, const TotalSampleColoring& e) {
  std::vector<GroupPoint> dom;
  dom.reserve(e.size());
  for (const auto& [x, c] : e) dom.push_back(x);
  for (auto& edge : find_hyperedges(h, std::move(dom))) {
    const auto& c0 = e.at(edge.points[0]);
    if (c0 == e.at(edge.points[1]) && c0 == e.at(edge.points[2])) return edge;
  }
  return std::nullopt;
}

struct QuotientColoring {
  std::vector<std::uint32_t> class_colors;
  std::vector<std::uint32_t> point_colors;  // indexed like the remainder graph's vertices
  std::uint32_t colors_used = 0;
};

/// First-fit in class order, then pulled back along the class map.
inline QuotientColoring greedy_quotient_coloring(const QuotientGraph& q, const std::vector<std::size_t>& class_of) {
  QuotientColoring out;
  const auto adj = q.adjacency();
  out.class_colors.assign(q.classes.size(), 0);
  for (std::size_t c = 0; c < q.classes.size(); ++c) {
    std::set<std::uint32_t> taken;
    for (std::size_t d : adj[c])
      if (d < c) taken.insert(out.class_colors[d]);
    std::uint32_t k = 0;
    while (taken.count(k)) ++k;
    out.class_colors[c] = k;
    out.colors_used = std::max(out.colors_used, k + 1);
  }
  for (std::size_t c : class_of) out.point_colors.push_back(out.class_colors[c]);
  return out;
}

inline QuotientColoring greedy_quotient_coloring(const Quotient& q) {
  return greedy_quotient_coloring(q.graph, q.class_of);
}

/// One level of a finite filtration: a closed subspace with the stage colouring c on sampled
/// points of the subspace and the remainder colouring d on sampled points new at this level.
struct Stage {
  ClosedSubspace space;
  TotalSampleColoring c;
  TotalSampleColoring d;  // empty at the least stage
};

struct CoherentSequence {
  std::vector<GroupPoint> sample;
  std::vector<Stage> stages;

  std::optional<std::size_t> least_stage(const GroupPoint& x) const {
    for (std::size_t i = 0; i < stages.size(); ++i)
      if (stages[i].space.contains(x)) return i;
    return std::nullopt;
  }

  /// Sampled points whose least stage is i.
  std::vector<GroupPoint> new_points(std::size_t i) const {
    std::vector<GroupPoint> out;
    for (const auto& x : sample)
      if (stages[i].space.contains(x) && (i == 0 || !stages[i - 1].space.contains(x))) out.push_back(x);
    return canonical_point_set(std::move(out));
  }

  std::vector<GroupPoint> points_in(std::size_t i) const {
    std::vector<GroupPoint> out;
    for (const auto& x : sample)
      if (stages[i].space.contains(x)) out.push_back(x);
    return canonical_point_set(std::move(out));
  }
};

/// Checks the five coherence conditions on the sampled window; returns the first failure.
inline std::optional<std::string> check_coherent(const LinearHypergraph& h, const CoherentSequence& seq) {
  if (seq.stages.empty()) return "no stages";
  for (std::size_t i = 0; i < seq.stages.size(); ++i) {
    const auto& st = seq.stages[i];
    const std::string at = "stage " + std::to_string(i) + ": ";
    if (auto defect = closure_defect(h, st.space.basis)) return at + "subspace not closed, image " + defect->to_string();
    if (i > 0 && !st.space.basis.contains(seq.stages[i - 1].space.basis)) return at + "filtration not increasing";
    const auto inside = seq.points_in(i);
    if (st.c.size() != inside.size()) return at + "c is not defined exactly on the sampled subspace";
    for (const auto& x : inside)
      if (!st.c.count(x)) return at + "c misses " + x.to_string();
    if (auto bad = verify_coloring(h, st.c)) return at + "c is monochromatic on " + bad->to_string();
    if (i == 0) {
      if (!st.d.empty()) return at + "d must be null at the least stage";
      continue;
    }
    const auto fresh = seq.new_points(i);
    if (st.d.size() != fresh.size()) return at + "d is not defined exactly on the new points";
    const auto g = remainder_graph(h, seq.stages[i - 1].space, fresh);
    for (const auto& e : g.edges) {
      const auto& x = g.vertices[e.u];
      const auto& y = g.vertices[e.v];
      if (!st.d.count(x) || !st.d.count(y)) return at + "d misses a remainder vertex";
      if (st.d.at(x) == st.d.at(y)) return at + "d is constant on remainder edge " + x.to_string() + " " + y.to_string();
    }
  }
  for (const auto& x : seq.sample)
    if (!seq.least_stage(x)) return "sample point " + x.to_string() + " lies in no stage";
  return std::nullopt;
}

/// e(x) = c_i(x) at the least stage, otherwise the pair <c_i(x), d_i(x)>, i the least stage containing x.
inline TotalSampleColoring amalgamate(const CoherentSequence& seq) {
  TotalSampleColoring e;
  for (const auto& x : seq.sample) {
    const auto i = seq.least_stage(x);
    if (!i) throw std::invalid_argument("sample point " + x.to_string() + " lies in no stage");
    const auto& st = seq.stages[*i];
    e[x] = *i == 0 ? st.c.at(x) : pair_color(st.c.at(x), st.d.at(x));
  }
  return e;
}

struct CaseCensus {
  std::size_t case1 = 0;  // exactly one point at the top level
  std::size_t case2 = 0;
  std::size_t case3 = 0;
  std::optional<Hyperedge> first_case1;
};

/// Sorts the sampled hyperedges by how many of their points sit at the top least-stage.
inline CaseCensus classify_cases(const LinearHypergraph& h, const CoherentSequence& seq) {
  CaseCensus census;
  for (auto& e : find_hyperedges(h, seq.sample)) {
    std::array<std::size_t, 3> lv{};
    for (int k = 0; k < 3; ++k) lv[k] = seq.least_stage(e.points[k]).value();
    const std::size_t top = *std::max_element(lv.begin(), lv.end());
    const auto at_top = std::count(lv.begin(), lv.end(), top);
    if (at_top == 1) {
      ++census.case1;
      if (!census.first_case1) census.first_case1 = std::move(e);
    } else if (at_top == 2) {
      ++census.case2;
    } else {
      ++census.case3;
    }
  }
  return census;
}

enum class StageColoring { Injective, Greedy };

/// First-fit proper colouring of the points in order: each point gets the least colour
/// that closes no monochromatic hyperedge with earlier points.
inline TotalSampleColoring greedy_hypergraph_coloring(const LinearHypergraph& h, const std::vector<GroupPoint>& points,
                                                      std::uint64_t tag_base = 0) {
  TotalSampleColoring out;
  std::map<GroupPoint, std::uint64_t> k;
  const auto edges = find_hyperedges(h, points);
  std::map<GroupPoint, std::vector<const Hyperedge*>> incident;
  for (const auto& e : edges)
    for (const auto& p : e.points) incident[p].push_back(&e);
  for (const auto& x : points) {
    std::set<std::uint64_t> blocked;
    for (const Hyperedge* e : incident[x]) {
      std::vector<std::uint64_t> others;
      for (const auto& p : e->points)
        if (!(p == x) && k.count(p)) others.push_back(k[p]);
      if (others.size() == 2 && others[0] == others[1]) blocked.insert(others[0]);
    }
    std::uint64_t c = 0;
    while (blocked.count(c)) ++c;
    k[x] = c;
    out[x] = Color::fresh(0, tag_base + c);
  }
  return out;
}

/// Builds stage colourings over a chain of closed subspaces: c_i injective or greedy at tier 0,
/// d_i the pullback of the greedy colouring of the quotient over the previous stage.
inline CoherentSequence make_coherent_sequence(const LinearHypergraph& h, const std::vector<ClosedSubspace>& chain,
                                               std::vector<GroupPoint> sample, StageColoring mode) {
  CoherentSequence seq{canonical_point_set(std::move(sample)), {}};
  for (const auto& a : chain) seq.stages.push_back(Stage{a, {}, {}});
  for (std::size_t i = 0; i < chain.size(); ++i) {
    auto& st = seq.stages[i];
    const auto inside = seq.points_in(i);
    if (mode == StageColoring::Injective) {
      std::uint64_t id = 0;
      for (const auto& x : inside) st.c[x] = Color::fresh(0, id++);
    } else {
      st.c = greedy_hypergraph_coloring(h, inside);
    }
    if (i == 0) continue;
    const auto q = quotient(h, chain[i - 1], seq.new_points(i));
    const auto col = greedy_quotient_coloring(q);
    for (std::size_t v = 0; v < q.remainder.vertices.size(); ++v)
      st.d[q.remainder.vertices[v]] = Color::fresh(0, col.point_colors[v]);
  }
  return seq;
}

}  // namespace lincolor
