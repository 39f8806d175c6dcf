#pragma once

#include <lincolor/hypergraph/closure.hpp>

#include <deque>
#include <optional>
#include <utility>

namespace lincolor {

/// Edge {vertices[u], vertices[v]} with u < v, witnessed by z in the subspace.
struct RemainderEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  GroupPoint z;
  Hyperedge witness;
};

/// The remainder graph over a subspace A, restricted to a finite sample outside A.
struct RemainderGraph {
  Basis subspace;
  std::vector<GroupPoint> vertices;  // sorted
  std::vector<RemainderEdge> edges;  // sorted by (u, v)

  std::optional<std::size_t> index_of(const GroupPoint& x) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
    if (it == vertices.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

/// Throws if some sample point lies in the subspace, naming its index in the input order.
inline void require_outside(const Basis& a, const std::vector<GroupPoint>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (a.contains(s[i]))
      throw std::invalid_argument("sample point " + std::to_string(i) + " " + s[i].to_string() +
                                  " lies inside the subspace");
}

inline RemainderGraph remainder_graph(const LinearHypergraph& h, const Basis& a, std::vector<GroupPoint> s) {
  require_outside(a, s);
  RemainderGraph g{a, canonical_point_set(std::move(s)), {}};
  const auto& v = g.vertices;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (auto& c : h.completions(v[i], v[j])) {
        if (!a.contains(c.z)) continue;
        auto witness = *h.hyperedge(v[i], v[j], c.z);
        g.edges.push_back(RemainderEdge{i, j, std::move(c.z), std::move(witness)});
        break;
      }
  return g;
}

inline RemainderGraph remainder_graph(const LinearHypergraph& h, const ClosedSubspace& a, std::vector<GroupPoint> s) {
  return remainder_graph(h, a.basis, std::move(s));
}

/// Re-derives every edge: z in A, x and y outside A, and {x, y, z} a hyperedge under the stored witness.
inline std::optional<std::string> verify_remainder_graph(const LinearHypergraph& h, const RemainderGraph& g) {
  for (const auto& e : g.edges) {
    const auto& x = g.vertices[e.u];
    const auto& y = g.vertices[e.v];
    if (!g.subspace.contains(e.z)) return "witness " + e.z.to_string() + " lies outside the subspace";
    if (g.subspace.contains(x) || g.subspace.contains(y)) return "edge endpoint inside the subspace";
    std::array<GroupPoint, 3> expect{x, y, e.z};
    std::sort(expect.begin(), expect.end());
    if (e.witness.points != expect || !h.verify(e.witness))
      return "edge " + x.to_string() + " " + y.to_string() + " fails its witness";
  }
  return std::nullopt;
}

/// One directed use of the hyperedge equation: a point of class `from` in role from_role,
/// a point of class `to` in role to_role, and z in A in the remaining role.
struct Incidence {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t component = 0;
  std::uint8_t from_role = 0;
  std::uint8_t to_role = 0;
  GroupPoint x, y, z;
};

struct QuotientEdge {
  std::size_t c = 0;
  std::size_t d = 0;
  std::size_t remainder_edge = 0;  // first witnessing edge
};

struct QuotientGraph {
  std::vector<CosetClass> classes;
  std::vector<QuotientEdge> edges;  // c < d, sorted, one per class pair
  std::vector<Incidence> incidences;

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(classes.size());
    for (const auto& e : edges) {
      adj[e.c].push_back(e.d);
      adj[e.d].push_back(e.c);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
  }
};

struct Quotient {
  RemainderGraph remainder;
  QuotientGraph graph;
  std::vector<std::size_t> class_of;  // indexed like remainder.vertices
};

inline Quotient quotient(const LinearHypergraph& h, const ClosedSubspace& a, std::vector<GroupPoint> s) {
  Quotient q{remainder_graph(h, a, s), {}, {}};
  const auto& verts = q.remainder.vertices;
  q.graph.classes = coset_partition(a, verts);
  std::map<GroupPoint, std::size_t> label;
  for (std::size_t c = 0; c < q.graph.classes.size(); ++c)
    for (const auto& x : q.graph.classes[c].members) label.emplace(x, c);
  q.class_of.reserve(verts.size());
  for (const auto& x : verts) q.class_of.push_back(label.at(x));

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> first_edge;
  for (std::size_t k = 0; k < q.remainder.edges.size(); ++k) {
    const auto& e = q.remainder.edges[k];
    const std::size_t cu = q.class_of[e.u], cv = q.class_of[e.v];
    if (cu == cv)
      throw std::logic_error("remainder edge " + verts[e.u].to_string() + " " + verts[e.v].to_string() +
                             " joins one coset; the subspace is not closed");
    first_edge.try_emplace({std::min(cu, cv), std::max(cu, cv)}, k);
    for (const auto& c : h.completions(verts[e.u], verts[e.v])) {
      if (!a.contains(c.z)) continue;
      q.graph.incidences.push_back(Incidence{cu, cv, c.component, c.role_x, c.role_y, verts[e.u], verts[e.v], c.z});
      q.graph.incidences.push_back(Incidence{cv, cu, c.component, c.role_y, c.role_x, verts[e.v], verts[e.u], c.z});
    }
  }
  for (const auto& [cd, k] : first_edge) q.graph.edges.push_back(QuotientEdge{cd.first, cd.second, k});
  return q;
}

struct LocalFinitenessReport {
  bool ok = true;
  std::size_t max_degree = 0;
  std::string detail;
  std::optional<std::pair<Incidence, Incidence>> violation;
};

/// From each class, a fixed component and ordered role pair may reach at most one neighbour class.
inline LocalFinitenessReport check_local_finiteness(const QuotientGraph& q, const LinearHypergraph& h) {
  LocalFinitenessReport r;
  std::map<std::tuple<std::size_t, std::size_t, std::uint8_t, std::uint8_t>, const Incidence*> seen;
  for (const auto& inc : q.incidences) {
    const std::uint8_t rz = static_cast<std::uint8_t>(3 - inc.from_role - inc.to_role);
    std::array<const GroupPoint*, 3> by_role{};
    by_role[inc.from_role] = &inc.x;
    by_role[inc.to_role] = &inc.y;
    by_role[rz] = &inc.z;
    if (inc.component >= h.component_count() || !h.satisfies(inc.component, *by_role[0], *by_role[1], *by_role[2])) {
      r.ok = false;
      r.detail = "incidence " + inc.x.to_string() + " " + inc.y.to_string() + " fails its equation";
      r.violation = std::pair{inc, inc};
      return r;
    }
    auto [it, fresh] = seen.try_emplace({inc.from, inc.component, inc.from_role, inc.to_role}, &inc);
    if (!fresh && it->second->to != inc.to) {
      r.ok = false;
      r.detail = "class " + std::to_string(inc.from) + " reaches classes " + std::to_string(it->second->to) + " and " +
                 std::to_string(inc.to) + " through component " + std::to_string(inc.component) + " roles (" +
                 std::to_string(inc.from_role) + "," + std::to_string(inc.to_role) + ")";
      r.violation = std::pair{*it->second, inc};
      return r;
    }
  }
  for (const auto& row : q.adjacency()) r.max_degree = std::max(r.max_degree, row.size());
  return r;
}

struct BipartiteReport {
  std::vector<int> side;                        // 0/1 per vertex when bipartite
  std::optional<std::vector<std::size_t>> odd_cycle;  // vertex indices, closing edge implied
};

/// Breadth-first 2-colouring; returns either a 2-colouring or an odd cycle.
inline BipartiteReport bipartition(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  BipartiteReport r;
  r.side.assign(n, -1);
  std::vector<std::size_t> parent(n), depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (r.side[root] != -1) continue;
    r.side[root] = 0;
    parent[root] = root;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (r.side[v] == -1) {
          r.side[v] = 1 - r.side[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (r.side[v] == r.side[u]) {
          std::vector<std::size_t> left{u}, right{v};
          std::size_t a = u, b = v;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          left.insert(left.end(), right.rbegin(), right.rend());
          r.odd_cycle = std::move(left);
          r.side.clear();
          return r;
        }
      }
    }
  }
  return r;
}

inline BipartiteReport check_bipartite(const RemainderGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : g.edges) edges.emplace_back(e.u, e.v);
  return bipartition(g.vertices.size(), edges);
}

struct Biclique {
  std::vector<GroupPoint> c0;
  std::vector<GroupPoint> c1;
};

/// C0 = B0 + eps, C1 = (B1 + eps) / 2. For u = b0 + eps and v = (b1 + eps)/2 the point
/// z = b1 - b0 of A gives u - 2v + z = 0.
inline Biclique ap_biclique(const Basis& a, const std::vector<GroupPoint>& b0, const std::vector<GroupPoint>& b1,
                            const GroupPoint& eps) {
  for (std::size_t i = 0; i < b0.size(); ++i)
    if (!a.contains(b0[i])) throw std::invalid_argument("B0[" + std::to_string(i) + "] lies outside A");
  for (std::size_t i = 0; i < b1.size(); ++i)
    if (!a.contains(b1[i])) throw std::invalid_argument("B1[" + std::to_string(i) + "] lies outside A");
  for (const auto& x : b0)
    if (std::find(b1.begin(), b1.end(), x) != b1.end())
      throw std::invalid_argument("B0 and B1 share the point " + x.to_string());
  if (a.contains(eps)) throw std::invalid_argument("eps lies inside A");
  const Scalar half(a.field(), Rational(1, 2));
  Biclique out;
  for (const auto& x : b0) out.c0.push_back(x + eps);
  for (const auto& x : b1) out.c1.push_back(half * (x + eps));
  return out;
}

}  // namespace lincolor
