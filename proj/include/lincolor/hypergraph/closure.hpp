#pragma once

#include <lincolor/algebra/basis.hpp>
#include <lincolor/hypergraph/linear_hypergraph.hpp>

#include <deque>
#include <map>

namespace lincolor {

/// A subspace closed under every generating map, its inverse and the inverses of pairwise sums.
struct ClosedSubspace {
  Basis basis;
  std::vector<GroupPoint> seed;

  bool contains(const GroupPoint& x) const { return basis.contains(x); }
  friend bool operator==(const ClosedSubspace& a, const ClosedSubspace& b) { return a.basis == b.basis; }
};

/// Smallest closed subspace containing the seed. Each round adds at least one dimension,
/// so saturation stops after at most d * [K:Q] additions.
inline ClosedSubspace gamma_closure(const LinearHypergraph& h, std::vector<GroupPoint> seed) {
  Basis basis(h.field(), h.dim());
  std::deque<GroupPoint> queue;
  for (const auto& s : seed)
    if (basis.adjoin(s)) queue.push_back(s);
  const auto maps = h.closure_maps();
  while (!queue.empty()) {
    GroupPoint v = std::move(queue.front());
    queue.pop_front();
    for (const ExactMatrix* m : maps) {
      GroupPoint w = (*m) * v;
      if (basis.adjoin(w)) queue.push_back(std::move(w));
    }
  }
  return ClosedSubspace{std::move(basis), std::move(seed)};
}

/// Wraps a basis already known to be closed; verifies the claim.
inline ClosedSubspace as_closed(const LinearHypergraph& h, const Basis& basis) {
  auto closed = gamma_closure(h, basis.vectors());
  if (!(closed.basis == basis)) throw std::invalid_argument("subspace is not closed under the hypergraph maps");
  return closed;
}

/// First image of a basis vector under a closure map that leaves the span, if any.
inline std::optional<GroupPoint> closure_defect(const LinearHypergraph& h, const Basis& basis) {
  for (const auto& v : basis.vectors())
    for (const ExactMatrix* m : h.closure_maps()) {
      GroupPoint w = (*m) * v;
      if (!basis.contains(w)) return w;
    }
  return std::nullopt;
}

struct CosetClass {
  GroupPoint representative;
  std::vector<GroupPoint> members;
};

/// Classes of x ~ y iff x - y lies in the subspace. Members are sorted; each class is
/// represented by its first member, and classes are ordered by representative.
inline std::vector<CosetClass> coset_partition(const Basis& a, std::vector<GroupPoint> s) {
  s = canonical_point_set(std::move(s));
  std::map<GroupPoint, std::size_t> by_normal_form;
  std::vector<CosetClass> classes;
  for (auto& x : s) {
    auto [it, fresh] = by_normal_form.try_emplace(a.normal_form(x), classes.size());
    if (fresh) classes.push_back(CosetClass{x, {}});
    classes[it->second].members.push_back(std::move(x));
  }
  return classes;
}

inline std::vector<CosetClass> coset_partition(const ClosedSubspace& a, std::vector<GroupPoint> s) {
  return coset_partition(a.basis, std::move(s));
}

}  // namespace lincolor
