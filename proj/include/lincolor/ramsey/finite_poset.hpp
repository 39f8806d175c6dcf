#pragma once

#include <lincolor/hypergraph/linear_hypergraph.hpp>

#include <algorithm>
#include <array>
#include <iterator>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincolor {

/// Raised when an exhaustive search would exceed its configured budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A hypergraph of arity 2 or 3 on the vertices 0..n-1.
class FiniteHypergraph {
 public:
  using Edge = std::vector<std::uint32_t>;

  explicit FiniteHypergraph(std::uint32_t n = 0) : incident_(n) {}

  FiniteHypergraph(std::uint32_t n, std::vector<Edge> edges) : incident_(n) {
    for (auto& e : edges) add_edge(std::move(e));
  }

  /// The hyperedges of h among the given points, vertex i being points[i].
  static FiniteHypergraph from_points(const LinearHypergraph& h, const std::vector<GroupPoint>& points) {
    FiniteHypergraph g(static_cast<std::uint32_t>(points.size()));
    std::map<GroupPoint, std::uint32_t> index;
    for (std::uint32_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
    if (index.size() != points.size()) throw std::invalid_argument("universe points must be distinct");
    for (const auto& e : find_hyperedges(h, points))
      g.add_edge({index.at(e.points[0]), index.at(e.points[1]), index.at(e.points[2])});
    return g;
  }

  void add_edge(Edge e) {
    std::sort(e.begin(), e.end());
    if (e.size() < 2 || e.size() > 3 || std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("edges need two or three distinct vertices");
    for (auto v : e)
      if (v >= incident_.size()) throw std::invalid_argument("edge vertex out of range");
    const auto id = edges_.size();
    for (auto v : e) incident_[v].push_back(id);
    edges_.push_back(std::move(e));
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(incident_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& incident(std::uint32_t v) const { return incident_[v]; }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// A finite partial colouring. The entry order is the fixed enumeration x_0, x_1, ... of the domain.
struct FiniteCondition {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;  // (vertex, colour)

  std::size_t size() const { return entries.size(); }
  std::uint32_t point(std::size_t j) const { return entries[j].first; }
  std::uint32_t color(std::size_t j) const { return entries[j].second; }

  bool contains(std::uint32_t v) const {
    for (const auto& [x, c] : entries)
      if (x == v) return true;
    return false;
  }
  std::optional<std::uint32_t> color_of(std::uint32_t v) const {
    for (const auto& [x, c] : entries)
      if (x == v) return c;
    return std::nullopt;
  }

  friend bool operator==(const FiniteCondition&, const FiniteCondition&) = default;
  friend auto operator<=>(const FiniteCondition&, const FiniteCondition&) = default;

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(entries[j].first) + "->" + std::to_string(entries[j].second);
    }
    return out + "}";
  }
};

/// True iff no edge inside the domain is monochromatic.
inline bool is_proper(const FiniteHypergraph& g, const std::map<std::uint32_t, std::uint32_t>& col) {
  for (const auto& [v, c] : col)
    for (auto id : g.incident(v)) {
      const auto& e = g.edges()[id];
      if (e[0] != v) continue;  // test each edge once, from its least vertex
      bool mono = true;
      for (auto w : e) {
        auto it = col.find(w);
        if (it == col.end() || it->second != c) {
          mono = false;
          break;
        }
      }
      if (mono) return false;
    }
  return true;
}

inline bool is_proper(const FiniteHypergraph& g, const FiniteCondition& p) {
  std::map<std::uint32_t, std::uint32_t> col;
  for (const auto& [x, c] : p.entries)
    if (auto [it, fresh] = col.emplace(x, c); !fresh) return false;
  return is_proper(g, col);
}

/// The union of the conditions when it is a function and a proper colouring, sorted by vertex.
inline std::optional<FiniteCondition> lower_bound(const FiniteHypergraph& g, const std::vector<FiniteCondition>& conds) {
  std::map<std::uint32_t, std::uint32_t> col;
  for (const auto& p : conds)
    for (const auto& [x, c] : p.entries) {
      auto [it, fresh] = col.emplace(x, c);
      if (!fresh && it->second != c) return std::nullopt;
    }
  if (!is_proper(g, col)) return std::nullopt;
  FiniteCondition out;
  out.entries.assign(col.begin(), col.end());
  return out;
}

/// f(u) for a triple or pair of indices: a clause number with the least witnessing (b, j), or OK.
struct ClassLabel {
  static constexpr int kOk = -1;
  int clause = kOk;
  std::uint32_t b = 0;
  std::uint32_t j = 0;

  bool ok() const { return clause == kOk; }
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  std::string to_string() const {
    if (ok()) return "OK";
    return "<" + std::to_string(clause) + "," + std::to_string(b) + "," + std::to_string(j) + ">";
  }
};

namespace detail {
inline void require_uniform(const std::vector<const FiniteCondition*>& u) {
  for (const auto* p : u)
    if (p->size() != u[0]->size()) throw std::invalid_argument("classified conditions need domains of one size");
}
}  // namespace detail

/// The four-way split on [m]^3. u holds the conditions p_{i0}, p_{i1}, p_{i2} with i0 < i1 < i2.
inline ClassLabel classify_triple(const FiniteHypergraph& g, const std::array<const FiniteCondition*, 3>& u) {
  detail::require_uniform({u[0], u[1], u[2]});
  const std::size_t k = u[0]->size();
  // Clause 0: x_j^{i_b} lies in some other domain yet differs from x_j there for some other c.
  for (std::uint32_t b = 0; b < 3; ++b)
    for (std::uint32_t j = 0; j < k; ++j) {
      const auto x = u[b]->point(j);
      bool in_other = false, differs = false;
      for (std::uint32_t c = 0; c < 3; ++c) {
        if (c == b) continue;
        in_other = in_other || u[c]->contains(x);
        differs = differs || u[c]->point(j) != x;
      }
      if (in_other && differs) return {0, b, j};
    }
  // Clause 1: same point at slot j, different colours.
  for (std::uint32_t b = 0; b < 3; ++b)
    for (std::uint32_t j = 0; j < k; ++j)
      for (std::uint32_t c = 0; c < 3; ++c)
        if (c != b && u[c]->point(j) == u[b]->point(j) && u[c]->color(j) != u[b]->color(j)) return {1, b, j};
  // Clause 2: an edge inside the union whose only point outside the other two domains is x_j^{i_b}.
  auto in_union = [&](std::uint32_t v) { return u[0]->contains(v) || u[1]->contains(v) || u[2]->contains(v); };
  for (std::uint32_t b = 0; b < 3; ++b)
    for (std::uint32_t j = 0; j < k; ++j) {
      const auto x = u[b]->point(j);
      auto in_others = [&](std::uint32_t v) {
        for (std::uint32_t c = 0; c < 3; ++c)
          if (c != b && u[c]->contains(v)) return true;
        return false;
      };
      if (in_others(x)) continue;
      for (auto id : g.incident(x)) {
        const auto& e = g.edges()[id];
        bool fits = true;
        for (auto v : e)
          if (!in_union(v) || (v != x && !in_others(v))) fits = false;
        if (fits) return {2, b, j};
      }
    }
  return {};
}

/// The split on [m]^2 for graphs, u = (p_{i0}, p_{i1}) with i0 < i1.
inline ClassLabel classify_pair(const FiniteHypergraph& g, const std::array<const FiniteCondition*, 2>& u) {
  detail::require_uniform({u[0], u[1]});
  const std::size_t k = u[0]->size();
  for (std::uint32_t b = 0; b < 2; ++b)
    for (std::uint32_t j = 0; j < k; ++j) {
      const auto x = u[b]->point(j);
      if (x != u[1 - b]->point(j) && u[1 - b]->contains(x)) return {0, b, j};
    }
  for (std::uint32_t j = 0; j < k; ++j)
    if (u[0]->point(j) == u[1]->point(j) && u[0]->color(j) != u[1]->color(j)) return {1, 0, j};
  for (std::uint32_t b = 0; b < 2; ++b)
    for (std::uint32_t j = 0; j < k; ++j) {
      const auto x = u[b]->point(j);
      if (u[1 - b]->contains(x)) continue;
      for (auto id : g.incident(x))
        for (auto v : g.edges()[id])
          if (v != x && u[1 - b]->contains(v) && !u[b]->contains(v)) return {2, b, j};
    }
  return {};
}

struct HomogeneityVerdict {
  bool ok = true;
  std::string failure;
  std::vector<std::uint32_t> heart;  // common pairwise intersection of the domains
  std::optional<FiniteCondition> bound;
  bool delta_system = true;
};

namespace detail {
inline std::vector<std::uint32_t> domain_of(const FiniteCondition& p) {
  std::vector<std::uint32_t> d;
  for (const auto& [x, c] : p.entries) d.push_back(x);
  std::sort(d.begin(), d.end());
  return d;
}

inline HomogeneityVerdict check_bound_conclusions(const FiniteHypergraph& g, const std::vector<FiniteCondition>& family,
                                                  const std::vector<std::size_t>& a, bool require_delta) {
  HomogeneityVerdict v;
  auto fail = [&](std::string why) {
    v.ok = false;
    v.failure = std::move(why);
    return v;
  };
  // Delta-system: every pairwise intersection is the same set.
  std::optional<std::vector<std::uint32_t>> heart;
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = s + 1; t < a.size(); ++t) {
      const auto ds = domain_of(family[a[s]]), dt = domain_of(family[a[t]]);
      std::vector<std::uint32_t> meet;
      std::set_intersection(ds.begin(), ds.end(), dt.begin(), dt.end(), std::back_inserter(meet));
      if (!heart) heart = meet;
      else if (*heart != meet) {
        if (!require_delta) {
          v.delta_system = false;
          continue;
        }
        return fail("domains of " + std::to_string(a[s]) + " and " + std::to_string(a[t]) +
                    " meet outside the common heart");
      }
    }
  if (heart && v.delta_system) v.heart = *heart;
  // The union is a function.
  std::map<std::uint32_t, std::uint32_t> col;
  std::map<std::uint32_t, std::size_t> owner;
  for (auto i : a)
    for (const auto& [x, c] : family[i].entries) {
      auto [it, fresh] = col.emplace(x, c);
      if (!fresh && it->second != c) return fail("union is not a function at vertex " + std::to_string(x));
      owner.emplace(x, i);
    }
  // Every edge inside the union lies inside one domain.
  for (const auto& e : g.edges()) {
    if (!std::all_of(e.begin(), e.end(), [&](auto x) { return col.count(x) > 0; })) continue;
    bool inside_one = false;
    for (auto i : a)
      inside_one = inside_one || std::all_of(e.begin(), e.end(), [&](auto x) { return family[i].contains(x); });
    if (!inside_one) {
      std::string s;
      for (auto x : e) s += (s.empty() ? "" : " ") + std::to_string(x);
      return fail("edge {" + s + "} straddles several domains");
    }
  }
  std::vector<FiniteCondition> members;
  for (auto i : a) members.push_back(family[i]);
  v.bound = lower_bound(g, members);
  if (!v.bound) return fail("union is not a proper colouring");
  return v;
}
}  // namespace detail

/// For an index set all of whose triples classify OK, checks the conclusions drawn from that:
/// a Delta-system, a functional union, edges inside single domains, a common lower bound.
inline HomogeneityVerdict ok_homogeneous_implies_bound(const FiniteHypergraph& g,
                                                       const std::vector<FiniteCondition>& family,
                                                       std::vector<std::size_t> a) {
  std::sort(a.begin(), a.end());
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = s + 1; t < a.size(); ++t)
      for (std::size_t r = t + 1; r < a.size(); ++r) {
        const auto lab = classify_triple(g, {&family[a[s]], &family[a[t]], &family[a[r]]});
        if (!lab.ok())
          throw std::invalid_argument("index set is not OK-homogeneous: triple labelled " + lab.to_string());
      }
  return detail::check_bound_conclusions(g, family, a, true);
}

/// Pair version. Pairwise OK does not force a common heart once three domains are involved
/// (two may share a slot point the third lacks), so the Delta-system is reported, not required.
inline HomogeneityVerdict ok_homogeneous_pairs_implies_bound(const FiniteHypergraph& g,
                                                             const std::vector<FiniteCondition>& family,
                                                             std::vector<std::size_t> a) {
  std::sort(a.begin(), a.end());
  for (std::size_t s = 0; s < a.size(); ++s)
    for (std::size_t t = s + 1; t < a.size(); ++t) {
      const auto lab = classify_pair(g, {&family[a[s]], &family[a[t]]});
      if (!lab.ok()) throw std::invalid_argument("index set is not OK-homogeneous: pair labelled " + lab.to_string());
    }
  return detail::check_bound_conclusions(g, family, a, false);
}

namespace detail {
template <class Fits>
void homogeneous_dfs(std::size_t total, std::size_t min_size, std::size_t max_size, std::size_t limit,
                     std::vector<std::size_t>& cur, std::vector<std::vector<std::size_t>>& out, const Fits& fits) {
  if (out.size() >= limit) return;
  if (cur.size() >= min_size) out.push_back(cur);
  if (cur.size() == max_size) return;
  for (std::size_t i = cur.empty() ? 0 : cur.back() + 1; i < total && out.size() < limit; ++i) {
    if (!fits(cur, i)) continue;
    cur.push_back(i);
    homogeneous_dfs(total, min_size, max_size, limit, cur, out, fits);
    cur.pop_back();
  }
}
}  // namespace detail

/// Index sets with min_size..max_size members all of whose triples classify OK, lexicographically, at most limit.
inline std::vector<std::vector<std::size_t>> ok_homogeneous_sets(const FiniteHypergraph& g,
                                                                 const std::vector<FiniteCondition>& family,
                                                                 std::size_t min_size, std::size_t max_size,
                                                                 std::size_t limit = SIZE_MAX) {
  const std::size_t f = family.size();
  std::vector<bool> ok(f * f * f, false);
  for (std::size_t a = 0; a < f; ++a)
    for (std::size_t b = a + 1; b < f; ++b)
      for (std::size_t c = b + 1; c < f; ++c)
        ok[(a * f + b) * f + c] = classify_triple(g, {&family[a], &family[b], &family[c]}).ok();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  detail::homogeneous_dfs(f, min_size, max_size, limit, cur, out, [&](const std::vector<std::size_t>& s, std::size_t i) {
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t y = x + 1; y < s.size(); ++y)
        if (!ok[(s[x] * f + s[y]) * f + i]) return false;
    return true;
  });
  return out;
}

/// The same search for the pair classifier.
inline std::vector<std::vector<std::size_t>> ok_homogeneous_pair_sets(const FiniteHypergraph& g,
                                                                      const std::vector<FiniteCondition>& family,
                                                                      std::size_t min_size, std::size_t max_size,
                                                                      std::size_t limit = SIZE_MAX) {
  const std::size_t f = family.size();
  std::vector<bool> ok(f * f, false);
  for (std::size_t a = 0; a < f; ++a)
    for (std::size_t b = a + 1; b < f; ++b) ok[a * f + b] = classify_pair(g, {&family[a], &family[b]}).ok();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  detail::homogeneous_dfs(f, min_size, max_size, limit, cur, out, [&](const std::vector<std::size_t>& s, std::size_t i) {
    for (auto x : s)
      if (!ok[x * f + i]) return false;
    return true;
  });
  return out;
}

/// Each condition together with its domain enumerated in reverse, so that slot order varies.
inline std::vector<FiniteCondition> with_reversed_enumerations(const std::vector<FiniteCondition>& family) {
  std::vector<FiniteCondition> out = family;
  for (const auto& p : family) {
    FiniteCondition r{std::vector(p.entries.rbegin(), p.entries.rend())};
    if (r != p) out.push_back(std::move(r));
  }
  return out;
}

/// A_kl: proper conditions with k-point domains and colours below l, domains listed in increasing
/// order, conditions ordered lexicographically.
inline std::vector<FiniteCondition> conditions_kl(const FiniteHypergraph& g, std::uint32_t k, std::uint32_t l,
                                                  std::uint64_t budget = 1u << 22) {
  std::vector<FiniteCondition> out;
  const std::uint32_t n = g.size();
  if (k > n) return out;
  std::vector<std::uint32_t> dom(k);
  for (std::uint32_t i = 0; i < k; ++i) dom[i] = i;
  while (true) {
    std::vector<std::uint32_t> col(k, 0);
    while (true) {
      FiniteCondition p;
      for (std::uint32_t i = 0; i < k; ++i) p.entries.emplace_back(dom[i], col[i]);
      if (is_proper(g, p)) {
        out.push_back(std::move(p));
        if (out.size() > budget) throw BudgetExceeded("A_kl exceeds the enumeration budget");
      }
      std::int64_t i = static_cast<std::int64_t>(k) - 1;
      while (i >= 0 && col[i] + 1 == l) col[i--] = 0;
      if (i < 0 || l == 0) break;
      ++col[i];
    }
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && dom[i] == n - k + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++dom[i];
    for (auto t = static_cast<std::size_t>(i) + 1; t < k; ++t) dom[t] = dom[t - 1] + 1;
  }
  return out;
}

struct RamseyCheck {
  bool holds = true;
  std::size_t family_size = 0;  // |A_kl|
  std::uint64_t tuples_checked = 0;
  std::vector<FiniteCondition> violating_tuple;
};

/// Exhaustive check that every m-tuple from A_kl has n members with a common lower bound.
/// The property does not depend on the order of the tuple, so nondecreasing index tuples cover all.
inline RamseyCheck check_ramsey_centered(const FiniteHypergraph& g, std::uint32_t k, std::uint32_t l, std::uint32_t n,
                                         std::uint32_t m, std::uint64_t budget = 50'000'000) {
  RamseyCheck r;
  const auto family = conditions_kl(g, k, l);
  r.family_size = family.size();
  // |A|^m against the budget, without overflow.
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    if (family.size() > 1 && total > budget / family.size())
      throw BudgetExceeded("|A_kl|^m exceeds the budget of " + std::to_string(budget));
    total *= std::max<std::size_t>(family.size(), 1);
  }
  if (family.empty() || m == 0) {
    r.holds = n == 0 || m >= n;  // vacuous: no tuples to refute
    return r;
  }
  std::vector<std::size_t> tuple(m, 0);
  std::map<std::vector<std::size_t>, bool> memo;  // sorted index set -> has a common lower bound
  auto bounded = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> key(idx);
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<FiniteCondition> members;
    for (auto i : key) members.push_back(family[i]);
    return memo[key] = lower_bound(g, members).has_value();
  };
  while (true) {
    ++r.tuples_checked;
    bool found = false;
    if (n <= m) {
      std::vector<std::size_t> pick(n);
      for (std::uint32_t i = 0; i < n; ++i) pick[i] = i;
      while (!found) {
        std::vector<std::size_t> idx;
        for (auto p : pick) idx.push_back(tuple[p]);
        found = bounded(idx);
        std::int64_t i = static_cast<std::int64_t>(n) - 1;
        while (i >= 0 && pick[i] == m - n + static_cast<std::size_t>(i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (auto t = static_cast<std::size_t>(i) + 1; t < n; ++t) pick[t] = pick[t - 1] + 1;
      }
    }
    if (!found) {
      r.holds = false;
      for (auto i : tuple) r.violating_tuple.push_back(family[i]);
      return r;
    }
    std::int64_t i = static_cast<std::int64_t>(m) - 1;
    while (i >= 0 && tuple[i] + 1 == family.size()) --i;
    if (i < 0) break;
    ++tuple[i];
    for (auto t = static_cast<std::size_t>(i) + 1; t < m; ++t) tuple[t] = tuple[i];
  }
  return r;
}

}  // namespace lincolor
