// Runs the ten acceptance criteria and prints one [PASS]/[FAIL] line each.
// Usage: acceptance [--seed N] [--cli PATH] [--scratch DIR]

#include <lincolor/cli/run.hpp>
#include <lincolor/lincolor.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;
using namespace lincolor;

namespace {

std::uint64_t g_seed = 20240611;
std::string g_cli;
fs::path g_scratch = fs::temp_directory_path() / "lincolor-acceptance";

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

// ---- 1 -----------------------------------------------------------------------

// Determinant by cofactors, independent of the elimination used by verify_slim (dim <= 2 here).
Scalar det(const ExactMatrix& m) {
  if (m.dim() == 1) return m(0, 0);
  if (m.dim() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  throw std::invalid_argument("det oracle covers dim <= 2");
}

Outcome slimness() {
  Outcome o;
  for (const auto& h : {presets::equilateral(1), presets::ap(1), presets::equilateral(2), presets::ap(2)}) {
    for (std::size_t c = 0; c < h.components().size(); ++c) {
      const auto r = verify_slim(h.component(c));
      o.require(r.slim() && r.sum_zero, "preset component " + std::to_string(c) + " not slim");
      for (const auto& m : h.component(c).slim_maps()) o.require(!det(m).is_zero(), "singular slim map");
    }
  }
  // planted degenerate triples: g1 = -g0, and g2 = 0
  const auto q = Field::rationals();
  for (const auto& bad : {SlimComponent::scalars(q, 2, 1, -1, 3), SlimComponent::scalars(q, 2, 1, 2, 0)})
    o.require(!verify_slim(bad).slim(), "degenerate triple passed");
  o.detail = o.ok ? "presets slim with sum zero; planted degeneracies caught" : o.detail;
  return o;
}

// ---- 2, 3 --------------------------------------------------------------------

// Edges recomputed from scratch: z = -g_r^{-1}(g_p x + g_q y) for every component and role pair.
std::set<std::pair<std::size_t, std::size_t>> edge_oracle(const LinearHypergraph& h, const Basis& a,
                                                          const std::vector<GroupPoint>& v) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      for (std::size_t c = 0; c < h.components().size(); ++c)
        for (std::size_t p = 0; p < 3; ++p)
          for (std::size_t q = 0; q < 3; ++q) {
            if (p == q) continue;
            const std::size_t r = 3 - p - q;
            const auto& comp = h.component(c);
            const auto z = -(h.inverse(c, r) * (comp.g(p) * v[i] + comp.g(q) * v[j]));
            if (a.contains(z)) out.insert({i, j});
          }
  return out;
}

struct RemainderStats {
  std::size_t instances = 0, edges = 0, ap_instances = 0;
};

Outcome remainder_suite(RemainderStats& st, bool bipartite_part) {
  Outcome o;
  gen::Rng rng(g_seed);
  const std::vector<LinearHypergraph> spaces{presets::ap(2), presets::equilateral(2)};
  for (int trial = 0; trial < 50; ++trial) {
    const auto& h = spaces[trial % 2];
    const auto a = gen::random_proper_closed(h, rng);
    const auto s = gen::remainder_sample(h, a.basis, rng, 40);
    o.require(s.size() <= 40, "sample larger than 40");
    const auto q = quotient(h, a, s);
    const auto& g = q.remainder;
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (const auto& e : g.edges) got.insert({e.u, e.v});
    o.require(got == edge_oracle(h, a.basis, g.vertices), "remainder edges differ from the oracle");
    o.require(!verify_remainder_graph(h, g), "remainder edge witness fails");
    const auto col = greedy_quotient_coloring(q);
    for (const auto& e : g.edges) o.require(col.point_colors[e.u] != col.point_colors[e.v], "f(x) = f(y) on an edge");
    o.require(check_local_finiteness(q.graph, h).ok, "neighbour class not unique");
    // d = d': two incidences from one class with equal component and roles reach one class
    std::map<std::tuple<std::size_t, std::size_t, int, int>, std::size_t> reach;
    for (const auto& inc : q.graph.incidences) {
      auto [it, fresh] = reach.try_emplace({inc.from, inc.component, inc.from_role, inc.to_role}, inc.to);
      o.require(fresh || it->second == inc.to, "d != d' for one (class, component, role pair)");
    }
    if (bipartite_part && trial % 2 == 0) {
      const auto bp = check_bipartite(g);
      o.require(!bp.odd_cycle, "AP remainder graph has an odd cycle");
      if (!bp.odd_cycle)
        for (const auto& e : g.edges) o.require(bp.side[e.u] != bp.side[e.v], "two-colouring certificate broken");
      ++st.ap_instances;
    }
    ++st.instances;
    st.edges += g.edges.size();
  }
  o.require(st.edges > 100, "too few remainder edges to be meaningful");
  return o;
}

Outcome remainder_homomorphism() {
  RemainderStats st;
  auto o = remainder_suite(st, false);
  if (o.ok) o.detail = std::to_string(st.instances) + " instances, " + std::to_string(st.edges) + " edges";
  return o;
}

Outcome odd_cycle_free() {
  RemainderStats st;
  auto o = remainder_suite(st, true);
  gen::Rng rng(g_seed + 3);
  const auto h = presets::ap(2);
  std::size_t bicliques = 0, cross_pairs = 0;
  while (bicliques < 20) {
    const auto a = gen::random_proper_closed(h, rng);
    if (a.basis.is_zero()) continue;
    const auto v = a.basis.vectors()[0];
    std::vector<GroupPoint> b0, b1;
    const std::size_t n0 = 2 + gen::below(rng, 5), n1 = 2 + gen::below(rng, 5);
    for (std::size_t i = 0; i < n0; ++i) b0.push_back(Scalar(static_cast<long>(2 * i)) * v);
    for (std::size_t i = 0; i < n1; ++i) b1.push_back(Scalar(static_cast<long>(2 * i + 1)) * v);
    const auto eps = gen::point_outside(rng, a.basis);
    const auto bc = ap_biclique(a.basis, b0, b1, eps);
    auto all = bc.c0;
    all.insert(all.end(), bc.c1.begin(), bc.c1.end());
    const auto g = remainder_graph(h, a, all);
    std::set<std::pair<GroupPoint, GroupPoint>> edges;
    for (const auto& e : g.edges) edges.insert({g.vertices[e.u], g.vertices[e.v]});
    for (const auto& x : bc.c0)
      for (const auto& y : bc.c1) {
        o.require(edges.count({std::min(x, y), std::max(x, y)}) == 1, "biclique cross pair is not an edge");
        ++cross_pairs;
      }
    o.require(!check_bipartite(g).odd_cycle, "biclique graph not bipartite");
    ++bicliques;
  }
  if (o.ok)
    o.detail = std::to_string(st.ap_instances) + " AP graphs bipartite; " + std::to_string(cross_pairs) +
               "/" + std::to_string(cross_pairs) + " biclique cross pairs are edges";
  return o;
}

// ---- 4 -----------------------------------------------------------------------

Outcome amalgamation() {
  Outcome o;
  gen::Rng rng(g_seed + 4);
  const std::vector<std::pair<LinearHypergraph, std::size_t>> settings{
      {presets::ap(2), 30}, {presets::equilateral(1), 24}, {presets::equilateral(2), 24}, {presets::ap(3), 30}};
  std::size_t n = 0, edges = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto& [h, max_points] = settings[trial % settings.size()];
    const auto chain = gen::random_chain(h, rng);
    const auto sample = gen::chain_sample(h, chain, rng, max_points);
    const auto seq = make_coherent_sequence(h, chain, sample, trial % 2 ? StageColoring::Greedy : StageColoring::Injective);
    o.require(!check_coherent(h, seq), "incoherent sequence");
    const auto e = amalgamate(seq);
    // monochromatic check by brute force over all triples of the sample
    const auto& pts = seq.sample;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          if (!h.hyperedge(pts[i], pts[j], pts[k])) continue;
          ++edges;
          o.require(!(e.at(pts[i]) == e.at(pts[j]) && e.at(pts[j]) == e.at(pts[k])), "monochromatic hyperedge");
        }
    o.require(!verify_coloring(h, e), "verify_coloring found a monochromatic hyperedge");
    o.require(classify_cases(h, seq).case1 == 0, "Case-1 hyperedge");
    ++n;
  }
  o.require(n >= 100, "fewer than 100 sequences");
  if (o.ok) o.detail = std::to_string(n) + " sequences, " + std::to_string(edges) + " hyperedges, no Case 1";
  return o;
}

// ---- 5 -----------------------------------------------------------------------

Outcome balanced_merge() {
  Outcome o;
  gen::Rng rng(g_seed + 5);
  const std::vector<std::pair<LinearHypergraph, std::size_t>> spaces{
      {presets::ap(3), 8}, {presets::ap(4), 8}, {presets::equilateral(3), 6}};
  std::size_t raised = 0, news = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& [h, per_side] = spaces[trial % spaces.size()];
    const auto inst = gen::random_merge_scene(h, rng, per_side);
    o.require(!check_scene(h, inst.scene), "invalid scene generated");
    const auto r = merge(h, inst.scene, inst.extra);
    o.require(!verify_coloring(h, r.q.coloring), "merge colouring not proper");
    for (const auto& [x, n] : r.new_tiers) {
      o.require(r.q.coloring.at(x).tier == compute_nx(h, inst.scene, x), "new tier differs from n_x");
      raised += n > 0;
      ++news;
    }
    o.require(leq(r.q, inst.scene.p0).holds, "q not below p0");
    o.require(leq(r.q, inst.scene.p1).holds, "q not below p1");
  }
  if (o.ok) o.detail = "100 scenes, " + std::to_string(news) + " new points, " + std::to_string(raised) + " raised tiers";
  return o;
}

// ---- 6 -----------------------------------------------------------------------

Outcome ramsey_soundness() {
  Outcome o;
  std::vector<GroupPoint> line;
  const auto ap = presets::ap(1);
  for (long i = 0; i < 6; ++i) line.push_back(GroupPoint::axis(ap.field(), 1, 0, Scalar(i)));
  const auto g = FiniteHypergraph::from_points(ap, line);
  o.require(g.edges().size() == 6, "6-point progression line should have 6 edges");
  std::size_t sets = 0;
  for (std::uint32_t k = 1; k <= 2; ++k)
    for (std::uint32_t l = 1; l <= 2; ++l) {
      const auto family = with_reversed_enumerations(conditions_kl(g, k, l));
      // every OK-homogeneous index set of size at least three, no size cap
      for (const auto& a : ok_homogeneous_sets(g, family, 3, family.size())) {
        const auto v = ok_homogeneous_implies_bound(g, family, a);
        o.require(v.ok, "k=" + std::to_string(k) + " l=" + std::to_string(l) + ": " + v.failure);
        ++sets;
      }
    }
  const FiniteHypergraph two(2);
  const auto yes = check_ramsey_centered(two, 1, 2, 2, 5);
  const auto no = check_ramsey_centered(two, 1, 2, 2, 2);
  o.require(yes.holds, "ramsey-centered (m=5) should hold");
  o.require(!no.holds && no.violating_tuple.size() == 2, "ramsey-centered (m=2) should fail with a tuple");
  if (!no.holds && no.violating_tuple.size() == 2)
    o.require(!lower_bound(two, no.violating_tuple), "certificate tuple has a common lower bound");
  if (o.ok) o.detail = std::to_string(sets) + " OK-homogeneous sets sound; m=5 holds, m=2 refuted by " +
                       no.violating_tuple[0].to_string() + " " + no.violating_tuple[1].to_string();
  return o;
}

// ---- 7 -----------------------------------------------------------------------

// Lines counted from templates over {0..n-1, *} with at least one '*'.
std::uint64_t template_lines(std::uint32_t N, std::uint32_t n) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < N; ++i) total *= n + 1;
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < total; ++t) {
    bool star = false;
    for (std::uint64_t r = t; r && !star; r /= n + 1) star = r % (n + 1) == n;
    count += star;
  }
  return count;
}

// Least number of line-free sets covering all of n^N, by breadth-first search over covered sets.
std::uint32_t set_cover_oracle(std::uint32_t N, std::uint32_t n) {
  const auto words = hj::word_count(N, n);
  std::vector<std::uint64_t> line_masks;
  for (const auto& l : hj::lines(N, n)) {
    std::uint64_t m = 0;
    for (const auto& w : l.points()) m |= std::uint64_t{1} << hj::word_index(w, n);
    line_masks.push_back(m);
  }
  std::vector<std::uint64_t> free_sets;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << words); ++s)
    if (std::none_of(line_masks.begin(), line_masks.end(), [&](std::uint64_t m) { return (s & m) == m; }))
      free_sets.push_back(s);
  const std::uint64_t full = (std::uint64_t{1} << words) - 1;
  std::set<std::uint64_t> frontier{0};
  for (std::uint32_t k = 1;; ++k) {
    std::set<std::uint64_t> next;
    for (auto c : frontier)
      for (auto f : free_sets) next.insert(c | f);
    if (next.count(full)) return k;
    frontier = std::move(next);
  }
}

Outcome hales_jewett() {
  Outcome o;
  const auto t = hj::hj_threshold(2, 2, 3);
  o.require(t && *t == 2, "hj_threshold(2, 2) != 2");
  // all 16 colourings of 2^2 contain a monochromatic line, and some colouring of 2^1 does not
  std::size_t escaping = 0;
  for (std::uint32_t c = 0; c < 16; ++c) {
    bool mono = false;
    for (const auto& l : hj::lines(2, 2)) {
      const auto a = hj::word_index(l.point(0), 2), b = hj::word_index(l.point(1), 2);
      mono = mono || ((c >> a) & 1) == ((c >> b) & 1);
    }
    escaping += !mono;
  }
  o.require(escaping == 0, "a 2-colouring of 2^2 avoids monochromatic lines");
  std::vector<hj::Word> cube;
  for (std::uint64_t i = 0; i < 4; ++i) cube.push_back(hj::word_at(i, 2, 2));
  const auto cover = hj::phi_cover(cube, 2, 2);
  o.require(cover.parts == 3, "phi(2^2) != 3");
  o.require(cover.parts == set_cover_oracle(2, 2), "phi differs from the set-cover oracle");
  o.require(hj::is_line_free_cover(cover, 2, 2), "cover has a monochromatic line");
  for (std::uint32_t N = 1; N <= 4; ++N)
    for (std::uint32_t n = 2; n <= 3; ++n) {
      const auto ls = hj::lines(N, n);
      std::set<std::vector<hj::Word>> distinct;
      for (const auto& l : ls) {
        auto p = l.points();
        std::sort(p.begin(), p.end());
        distinct.insert(p);
      }
      o.require(ls.size() == template_lines(N, n) && distinct.size() == ls.size() && hj::line_count(N, n) == ls.size(),
                "line count mismatch at N=" + std::to_string(N) + " n=" + std::to_string(n));
    }
  if (o.ok) o.detail = "threshold 2, phi 3 (oracle 3), line counts for N<=4, n<=3 agree";
  return o;
}

// ---- 8 -----------------------------------------------------------------------

Outcome embedding() {
  Outcome o;
  const auto h = presets::equilateral(1);
  const auto s = hj::build_embedding(h, 5);
  o.require(s.depth() == 5, "scheme depth != 5");
  o.require(!hj::verify_scheme(h, s), "decay or equation certificate fails");
  // decay recomputed: |x_i(m)|^2 < 4^-m min over earlier pairwise squared distances
  std::vector<GroupPoint> earlier;
  for (std::size_t m = 0; m < s.depth(); ++m) {
    if (m > 0) {
      Rational least = -1;
      for (std::size_t a = 0; a < earlier.size(); ++a)
        for (std::size_t b = a + 1; b < earlier.size(); ++b) {
          const auto d = squared_norm(earlier[a] - earlier[b]);
          if (least < 0 || d < least) least = d;
        }
      Rational quarter = 1;
      for (std::size_t i = 0; i < m; ++i) quarter /= 4;
      for (const auto& p : s.levels[m]) o.require(squared_norm(p) < quarter * least, "decay fails");
    }
    earlier.insert(earlier.end(), s.levels[m].begin(), s.levels[m].end());
  }
  std::size_t lines = 0;
  for (std::uint32_t L = 1; L <= 5; ++L)
    for (const auto& r : hj::check_homomorphism(h, s, L)) {
      // pi recomputed from the levels
      std::array<GroupPoint, 3> img;
      for (std::uint32_t c = 0; c < 3; ++c) {
        img[c] = GroupPoint::zero(h.field(), h.dim());
        const auto w = r.line.point(c);
        for (std::size_t m = 0; m < w.size(); ++m) img[c] = img[c] + s.levels[m][w[m]];
        o.require(img[c] == r.images[c], "pi differs from the recomputation");
      }
      o.require(!(img[0] == img[1] || img[1] == img[2] || img[0] == img[2]), "images not distinct");
      const auto e = h.hyperedge(img[0], img[1], img[2]);
      o.require(e && h.verify(*e), "line image is not a hyperedge: " + r.line.to_string());
      ++lines;
    }
  o.require(lines == 1001, "expected 1001 lines of 3^L, L <= 5");
  if (o.ok) o.detail = "decay certified at 5 levels; " + std::to_string(lines) + " lines map to hyperedges";
  return o;
}

// ---- 9 -----------------------------------------------------------------------

bool scan_rectangle(const grid::GridColoring& g) {
  for (std::size_t s0 = 0; s0 < g.rows(); ++s0)
    for (std::size_t s1 = s0 + 1; s1 < g.rows(); ++s1)
      for (std::size_t t0 = 0; t0 < g.cols(); ++t0)
        for (std::size_t t1 = t0 + 1; t1 < g.cols(); ++t1) {
          const auto c = g(s0, t0);
          if (g(s0, t1) == c && g(s1, t0) == c && g(s1, t1) == c) return true;
        }
  return false;
}

Outcome grid_rectangles() {
  Outcome o;
  grid::GridColoring g(3, 7);
  std::size_t escapes = 0;
  for (std::uint32_t mask = 0; mask < (1u << 21); ++mask) {
    for (std::size_t i = 0; i < 21; ++i) g.at(i / 7, i % 7) = (mask >> i) & 1;
    const auto w = grid::find_mono_rectangle(g);
    if (!w) ++escapes;
    else if (!grid::verify(g, *w)) o.require(false, "bad rectangle witness");
  }
  o.require(escapes == 0, std::to_string(escapes) + " 2-colourings of 3x7 escape");
  gen::Rng rng(g_seed + 9);
  std::size_t with = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    std::size_t rows, cols;
    do {
      rows = 1 + gen::below(rng, 8);
      cols = 1 + gen::below(rng, 8);
    } while (rows * cols > 24);
    const auto colors = static_cast<std::uint32_t>(1 + gen::below(rng, 3));
    grid::GridColoring r(rows, cols);
    for (std::size_t s = 0; s < rows; ++s)
      for (std::size_t t = 0; t < cols; ++t) r.at(s, t) = static_cast<std::uint32_t>(gen::below(rng, colors));
    const auto w = grid::find_mono_rectangle(r);
    o.require(w.has_value() == scan_rectangle(r), "finder disagrees with the 4-subset scan");
    if (w) o.require(grid::verify(r, *w), "bad rectangle witness");
    with += w.has_value();
  }
  if (o.ok) o.detail = "2^21 colourings of 3x7 all forced; 10000 random grids agree (" + std::to_string(with) +
                       " with a rectangle)";
  return o;
}

// ---- 10 ----------------------------------------------------------------------

std::vector<cli::RunConfig> cli_suite() {
  std::vector<cli::RunConfig> out;
  auto add = [&](std::string cmd, std::string sub, const std::function<void(cli::RunConfig&)>& f) {
    cli::RunConfig c;
    c.command = std::move(cmd);
    c.sub = std::move(sub);
    c.seed = g_seed;
    f(c);
    out.push_back(c);
  };
  add("verify-slim", "", [](auto& c) { c.preset = "equilateral"; });
  add("closure", "", [](auto& c) { c.dim = 2; c.points = {"(1,3)"}; });
  for (const char* p : {"ap", "equilateral"}) {
    add("remainder", "", [&](auto& c) { c.preset = p; c.dim = 2; });
    add("quotient", "", [&](auto& c) { c.preset = p; c.dim = 2; });
    add("color", "", [&](auto& c) { c.preset = p; c.dim = 2; c.max_points = 24; });
    add("poset-merge", "", [&](auto& c) { c.preset = p; c.dim = 3; });
  }
  add("ramsey-check", "", [](auto& c) { c.m = 5; });
  add("ramsey-check", "", [](auto& c) { c.m = 2; });
  add("hj", "threshold", [](auto&) {});
  add("hj", "phi", [](auto&) {});
  add("hj", "embed", [](auto& c) { c.preset = "equilateral"; c.depth = 5; });
  add("grid", "rectangle", [](auto& c) { c.rows = 4; c.cols = 5; });
  add("grid", "corner", [](auto& c) { c.rows = 3; c.cols = 3; });
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

Outcome determinism() {
  Outcome o;
  const auto suite = cli_suite();
  std::array<fs::path, 2> dirs{g_scratch / "run1", g_scratch / "run2"};
  for (const auto& d : dirs) {
    fs::remove_all(d);
    fs::create_directories(d);
    for (std::size_t i = 0; i < suite.size(); ++i) {
      const auto r = cli::run(suite[i]);
      o.require(!r.certificate.empty(), suite[i].command + " emitted no certificate");
      std::ofstream(d / (std::to_string(i) + ".cert"), std::ios::binary) << r.certificate;
      std::ofstream(d / (std::to_string(i) + ".txt"), std::ios::binary) << r.report;
    }
  }
  std::size_t files = 0;
  for (std::size_t i = 0; i < suite.size(); ++i)
    for (const char* ext : {".cert", ".txt"}) {
      const auto name = std::to_string(i) + ext;
      o.require(slurp(dirs[0] / name) == slurp(dirs[1] / name), "files differ: " + name);
      ++files;
    }
  // the binary itself, twice, writing certificate files
  if (!g_cli.empty()) {
    const std::vector<std::string> args{"--preset ap --dim 2 color", "--preset equilateral hj embed --depth 4",
                                        "ramsey-check -m 2", "grid corner --rows 4 --cols 4"};
    for (std::size_t i = 0; i < args.size(); ++i) {
      std::array<std::string, 2> certs;
      for (int run = 0; run < 2; ++run) {
        const auto path = dirs[run] / ("cli" + std::to_string(i) + ".cert");
        const auto cmd = shell_quote(g_cli) + " --seed " + std::to_string(g_seed) + " --out " +
                         shell_quote(path.string()) + " " + args[i] + " > /dev/null";
        const int rc = std::system(cmd.c_str());
        o.require(rc != -1 && WEXITSTATUS(rc) <= 1, "binary failed: " + args[i]);
        certs[run] = slurp(path);
      }
      o.require(!certs[0].empty() && certs[0] == certs[1], "binary certificates differ: " + args[i]);
      ++files;
    }
  }
  if (o.ok) o.detail = std::to_string(files) + " report/certificate files byte-identical across two runs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string key = argv[i];
    if (key == "--seed") g_seed = std::stoull(argv[i + 1]);
    else if (key == "--cli") g_cli = argv[i + 1];
    else if (key == "--scratch") g_scratch = argv[i + 1];
    else {
      std::cerr << "usage: acceptance [--seed N] [--cli PATH] [--scratch DIR]\n";
      return 2;
    }
  }
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"slimness", 1, slimness},
      {"remainder homomorphism", 30, remainder_homomorphism},
      {"odd-cycle-freeness", 10, odd_cycle_free},
      {"amalgamation", 60, amalgamation},
      {"balanced merge", 60, balanced_merge},
      {"ramsey-poset soundness", 60, ramsey_soundness},
      {"hales-jewett", 30, hales_jewett},
      {"embedding", 60, embedding},
      {"grid rectangles", 120, grid_rectangles},
      {"determinism", 120, determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) o.require(false, "over the time limit");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << c.name << " (" << secs << " s, limit "
         << c.limit_seconds << " s): " << o.detail;
    std::cout << line.str() << std::endl;
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
