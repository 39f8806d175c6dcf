#pragma once

#include <lincolor/coloring/amalgam.hpp>

namespace lincolor {

/// A proper colouring of finitely many sampled points of a closed subspace.
struct Condition {
  ClosedSubspace domain;
  TotalSampleColoring coloring;

  static Condition empty(const LinearHypergraph& h) { return Condition{gamma_closure(h, {}), {}}; }

  std::vector<GroupPoint> sample() const {
    std::vector<GroupPoint> out;
    for (const auto& [x, c] : coloring) out.push_back(x);
    return out;
  }
};

/// Sample inside the subspace, subspace closed, colouring proper.
inline std::optional<std::string> validate(const LinearHypergraph& h, const Condition& p) {
  if (auto defect = closure_defect(h, p.domain.basis)) return "domain not closed: image " + defect->to_string();
  for (const auto& [x, c] : p.coloring)
    if (!p.domain.contains(x)) return "sampled point " + x.to_string() + " lies outside the domain";
  if (auto bad = verify_coloring(h, p.coloring)) return "monochromatic hyperedge " + bad->to_string();
  return std::nullopt;
}

struct CosetBound {
  GroupPoint representative;
  std::size_t points = 0;
  std::uint32_t m = 0;  // every colour on the coset has tier < m
};

struct OrderReport {
  bool holds = false;
  std::string reason;
  std::vector<CosetBound> cosets;  // cosets of dom(p) met by new sampled points of q
};

/// q <= p: p's colouring is contained in q's, dom(p) is contained in dom(q), and for each
/// dom(p)-coset met by q's sample outside dom(p) the tiers are bounded by the reported m.
inline OrderReport leq(const Condition& q, const Condition& p) {
  OrderReport r;
  if (!q.domain.basis.contains(p.domain.basis)) {
    r.reason = "dom(p) is not contained in dom(q)";
    return r;
  }
  for (const auto& [x, c] : p.coloring) {
    auto it = q.coloring.find(x);
    if (it == q.coloring.end()) {
      r.reason = "q does not colour " + x.to_string();
      return r;
    }
    if (!(it->second == c)) {
      r.reason = "q and p disagree at " + x.to_string();
      return r;
    }
  }
  std::vector<GroupPoint> outside;
  for (const auto& [x, c] : q.coloring)
    if (!p.domain.contains(x)) outside.push_back(x);
  for (auto& cls : coset_partition(p.domain, outside)) {
    CosetBound b{cls.representative, cls.members.size(), 0};
    for (const auto& x : cls.members) b.m = std::max(b.m, q.coloring.at(x).tier + 1);
    r.cosets.push_back(std::move(b));
  }
  r.holds = true;
  return r;
}

/// The least tag k such that (tier, {k}) is used by none of the given colourings.
inline std::uint64_t fresh_tag(std::uint32_t tier, std::initializer_list<const TotalSampleColoring*> used) {
  std::uint64_t k = 0;
  for (const auto* col : used)
    for (const auto& [x, c] : *col)
      if (c.tier == tier && c.tag.size() == 1) k = std::max(k, c.tag[0] + 1);
  return k;
}

/// q <= p containing x: the domain becomes the closure of dom(p) and x, and x gets a fresh colour in tier 0.
inline Condition extend(const LinearHypergraph& h, const Condition& p, const GroupPoint& x) {
  if (p.coloring.count(x)) return p;
  auto seed = p.domain.basis.vectors();
  seed.push_back(x);
  Condition q{gamma_closure(h, seed), p.coloring};
  q.coloring[x] = Color::fresh(0, fresh_tag(0, {&p.coloring}));
  return q;
}

/// The union of a descending chain p_0 >= p_1 >= ..., checked link by link.
inline Condition chain_union(const std::vector<Condition>& chain) {
  if (chain.empty()) throw std::invalid_argument("empty chain");
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (auto r = leq(chain[i], chain[i - 1]); !r.holds)
      throw std::invalid_argument("chain is not descending at link " + std::to_string(i) + ": " + r.reason);
  Condition u = chain.back();
  for (const auto& c : chain) u.coloring.insert(c.coloring.begin(), c.coloring.end());
  return u;
}

}  // namespace lincolor
