#pragma once

// Subcommand logic behind the lincolor binary. Every run yields an exit status, a text report
// and a certificate that `verify` can re-run and compare.

#include <lincolor/generators.hpp>
#include <lincolor/grid/rectangles.hpp>
#include <lincolor/hj/embedding.hpp>
#include <lincolor/hj/lines.hpp>
#include <lincolor/hypergraph/presets.hpp>
#include <lincolor/io/certificate.hpp>
#include <lincolor/io/spec_format.hpp>
#include <lincolor/ramsey/bounds.hpp>
#include <lincolor/ramsey/finite_poset.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace lincolor::cli {

enum Status : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct RunConfig {
  std::string command;  // verify-slim closure remainder quotient color poset-merge ramsey-check hj grid verify
  std::string sub;      // hj: threshold phi embed; grid: rectangle corner

  std::string spec_text;  // contents of --spec; the preset is used when empty
  std::string preset = "ap";
  std::size_t dim = 1;

  std::uint64_t seed = 1;
  std::uint64_t budget = 50'000'000;
  std::size_t max_points = 40;

  std::vector<std::string> points;
  std::vector<std::string> generators;
  std::string mode = "greedy";  // stage colourings for `color`: greedy or injective

  // ramsey-check
  std::uint32_t k = 1, l = 2, n = 2, m = 5, universe = 2;
  bool edgeless = false;
  bool soundness = false;

  // hj
  std::uint32_t alphabet = 2, colors = 2, max_length = 3, length = 2, depth = 3;
  std::size_t component = 0;
  std::vector<std::string> words;

  // grid
  std::string grid_text;
  std::size_t rows = 3, cols = 7;

  // verify
  std::string cert_text;
};

struct RunResult {
  int status = kPass;
  std::string report;
  std::string certificate;
};

namespace detail {

using io::Json;

struct Context {
  const RunConfig& cfg;
  std::ostringstream report;
  Json input = Json::object();
  Json result = Json::object();
  bool pass = true;

  explicit Context(const RunConfig& c) : cfg(c) {}

  void line(const std::string& s) { report << s << "\n"; }
  void check(bool ok, const std::string& what) {
    line(std::string(ok ? "ok   " : "FAIL ") + what);
    pass = pass && ok;
  }
};

inline LinearHypergraph hypergraph(const RunConfig& cfg) {
  if (!cfg.spec_text.empty()) return io::parse_spec(cfg.spec_text);
  return presets::by_name(cfg.preset, cfg.dim);
}

inline std::vector<GroupPoint> parse_points(const std::vector<std::string>& texts, const LinearHypergraph& h) {
  std::vector<GroupPoint> out;
  for (const auto& t : texts) {
    auto p = GroupPoint::parse(t, h.field());
    if (p.dim() != h.dim()) throw std::invalid_argument("point " + t + " has dimension " + std::to_string(p.dim()));
    out.push_back(std::move(p));
  }
  return out;
}

inline Json strings(const std::vector<std::string>& v) { return Json(v); }

inline Json coloring_json(const TotalSampleColoring& col) {
  Json a = Json::array();
  for (const auto& [x, c] : col) a.push_back(Json::array({x.to_string(), c.to_string()}));
  return a;
}

inline Json edge_json(const Hyperedge& e) {
  return Json{{"points", io::points_json({e.points[0], e.points[1], e.points[2]})},
              {"component", e.component},
              {"roles", Json::array({e.roles[0], e.roles[1], e.roles[2]})}};
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

// ---- verify-slim -------------------------------------------------------------

inline void verify_slim_cmd(Context& cx) {
  const auto& cfg = cx.cfg;
  io::SpecContents spec;
  if (!cfg.spec_text.empty()) {
    spec = io::parse_spec_contents(cfg.spec_text);
  } else {
    const auto h = presets::by_name(cfg.preset, cfg.dim);
    spec = io::SpecContents{h.field(), h.dim(), h.components(), {}};
  }
  cx.input["spec"] = io::write_spec(spec.field, spec.dim, spec.components);
  Json comps = Json::array();
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const auto r = verify_slim(spec.components[i]);
    Json c = Json::object();
    for (std::size_t k = 0; k < 6; ++k) {
      c[kSlimConditionNames[k]] = r.injective[k];
      cx.check(r.injective[k], "component " + std::to_string(i) + ": " + kSlimConditionNames[k] + " injective");
    }
    c["sum_zero"] = r.sum_zero;
    cx.line(std::string("info component ") + std::to_string(i) + ": g0+g1+g2 " + (r.sum_zero ? "= 0" : "!= 0"));
    comps.push_back(c);
  }
  cx.result["components"] = comps;
}

// ---- closure -----------------------------------------------------------------

inline void closure_cmd(Context& cx) {
  const auto h = hypergraph(cx.cfg);
  const auto seed = parse_points(cx.cfg.points, h);
  cx.input["spec"] = io::write_spec(h);
  cx.input["points"] = strings(cx.cfg.points);
  const auto c = gamma_closure(h, seed);
  cx.result["rank"] = c.basis.rank();
  cx.result["basis"] = io::points_json(c.basis.vectors());
  cx.line("rank " + std::to_string(c.basis.rank()) + " of " + std::to_string(h.dim() * h.field()->degree()) +
          " (over Q)");
  for (const auto& v : c.basis.vectors()) cx.line("basis " + v.to_string());
  cx.check(!closure_defect(h, c.basis), "basis closed under every closure map");
  bool contains = true;
  for (const auto& x : seed) contains = contains && c.basis.contains(x);
  cx.check(contains, "closure contains the seed");
}

// ---- remainder / quotient ----------------------------------------------------

struct Instance {
  ClosedSubspace a;
  std::vector<GroupPoint> sample;
};

inline Instance remainder_instance(Context& cx, const LinearHypergraph& h) {
  const auto& cfg = cx.cfg;
  cx.input["spec"] = io::write_spec(h);
  cx.input["generators"] = strings(cfg.generators);
  cx.input["points"] = strings(cfg.points);
  cx.input["seed"] = cfg.seed;
  cx.input["max_points"] = cfg.max_points;
  gen::Rng rng(cfg.seed);
  Instance in;
  in.a = cfg.generators.empty() && cfg.points.empty() ? gen::random_proper_closed(h, rng)
                                                        : gamma_closure(h, parse_points(cfg.generators, h));
  in.sample = cfg.points.empty() ? gen::remainder_sample(h, in.a.basis, rng, cfg.max_points)
                                 : canonical_point_set(parse_points(cfg.points, h));
  cx.result["subspace"] = io::points_json(in.a.basis.vectors());
  cx.line("subspace rank " + std::to_string(in.a.basis.rank()) + ", sample " + std::to_string(in.sample.size()) +
          " points");
  return in;
}

inline void remainder_cmd(Context& cx) {
  const auto h = hypergraph(cx.cfg);
  const auto in = remainder_instance(cx, h);
  const auto g = remainder_graph(h, in.a, in.sample);
  cx.result["vertices"] = io::points_json(g.vertices);
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"z", e.z.to_string()}, {"witness", edge_json(e.witness)}});
    cx.line("edge " + g.vertices[e.u].to_string() + " -- " + g.vertices[e.v].to_string() + " via " + e.z.to_string());
  }
  cx.result["edges"] = edges;
  const auto err = verify_remainder_graph(h, g);
  cx.check(!err, "every edge completed by a point of the subspace" + (err ? ": " + *err : std::string()));
  const auto bip = check_bipartite(g);
  if (bip.odd_cycle) {
    std::vector<std::string> cyc;
    for (auto v : *bip.odd_cycle) cyc.push_back(g.vertices[v].to_string());
    cx.result["odd_cycle"] = cyc;
    cx.line("info odd cycle " + join(cyc));
  } else {
    cx.result["two_coloring"] = bip.side;
    bool proper = true;
    for (const auto& e : g.edges) proper = proper && bip.side[e.u] != bip.side[e.v];
    cx.check(proper, "bipartite: two-colouring separates every edge");
  }
}

inline void quotient_cmd(Context& cx) {
  const auto h = hypergraph(cx.cfg);
  const auto in = remainder_instance(cx, h);
  const auto q = quotient(h, in.a, in.sample);
  Json classes = Json::array();
  for (const auto& c : q.graph.classes) classes.push_back(io::points_json(c.members));
  cx.result["classes"] = classes;
  Json edges = Json::array();
  for (const auto& e : q.graph.edges) {
    edges.push_back(Json::array({e.c, e.d}));
    cx.line("class edge " + std::to_string(e.c) + " -- " + std::to_string(e.d));
  }
  cx.result["edges"] = edges;
  const auto lf = check_local_finiteness(q.graph, h);
  cx.result["max_degree"] = lf.max_degree;
  cx.line("classes " + std::to_string(q.graph.classes.size()) + ", max degree " + std::to_string(lf.max_degree));
  cx.check(lf.ok, "one neighbour class per (class, component, role pair)" + (lf.ok ? std::string() : ": " + lf.detail));
  const auto col = greedy_quotient_coloring(q);
  cx.result["class_colors"] = col.class_colors;
  bool proper = true;
  for (const auto& e : q.remainder.edges) proper = proper && col.point_colors[e.u] != col.point_colors[e.v];
  cx.line("colours used " + std::to_string(col.colors_used));
  cx.check(proper, "pulled-back colouring separates every remainder edge");
}

// ---- color -------------------------------------------------------------------

inline void color_cmd(Context& cx) {
  const auto& cfg = cx.cfg;
  const auto h = hypergraph(cfg);
  if (cfg.mode != "greedy" && cfg.mode != "injective") throw std::invalid_argument("mode must be greedy or injective");
  cx.input["spec"] = io::write_spec(h);
  cx.input["seed"] = cfg.seed;
  cx.input["mode"] = cfg.mode;
  cx.input["max_points"] = cfg.max_points;
  gen::Rng rng(cfg.seed);
  const auto chain = gen::random_chain(h, rng);
  const auto sample = gen::chain_sample(h, chain, rng, cfg.max_points);
  const auto seq = make_coherent_sequence(h, chain, sample,
                                          cfg.mode == "greedy" ? StageColoring::Greedy : StageColoring::Injective);
  Json ranks = Json::array();
  for (const auto& s : seq.stages) ranks.push_back(s.space.basis.rank());
  cx.result["stage_ranks"] = ranks;
  const auto err = check_coherent(h, seq);
  cx.check(!err, "stage colourings coherent" + (err ? ": " + *err : std::string()));
  const auto e = amalgamate(seq);
  cx.result["coloring"] = coloring_json(e);
  for (const auto& [x, c] : e) cx.line(x.to_string() + " -> " + c.to_string());
  const auto census = classify_cases(h, seq);
  cx.result["census"] = {census.case1, census.case2, census.case3};
  cx.line("hyperedges by points at the top stage: one " + std::to_string(census.case1) + ", two " +
          std::to_string(census.case2) + ", three " + std::to_string(census.case3));
  const auto bad = verify_coloring(h, e);
  cx.check(!bad, "no monochromatic hyperedge" + (bad ? ": " + bad->to_string() : std::string()));
  cx.check(census.case1 == 0, "no hyperedge with a single point at its top stage");
}

// ---- poset-merge -------------------------------------------------------------

inline void merge_cmd(Context& cx) {
  const auto& cfg = cx.cfg;
  const auto h = hypergraph(cfg);
  cx.input["spec"] = io::write_spec(h);
  cx.input["seed"] = cfg.seed;
  gen::Rng rng(cfg.seed);
  const auto inst = gen::random_merge_scene(h, rng);
  const auto& s = inst.scene;
  cx.result["core"] = io::points_json(s.core.basis.vectors());
  cx.result["p0"] = {{"domain", io::points_json(s.p0.domain.basis.vectors())}, {"coloring", coloring_json(s.p0.coloring)}};
  cx.result["p1"] = {{"domain", io::points_json(s.p1.domain.basis.vectors())}, {"coloring", coloring_json(s.p1.coloring)}};
  cx.result["extra"] = io::points_json(inst.extra);
  const auto scene_err = check_scene(h, s);
  cx.check(!scene_err, "scene valid" + (scene_err ? ": " + *scene_err : std::string()));
  const auto r = merge(h, s, inst.extra);
  Json tiers = Json::array();
  bool tiers_ok = true;
  for (const auto& [x, n] : r.new_tiers) {
    tiers.push_back(Json::array({x.to_string(), n}));
    cx.line("new " + x.to_string() + " tier " + std::to_string(n));
    tiers_ok = tiers_ok && r.q.coloring.at(x).tier == compute_nx(h, s, x);
  }
  cx.result["new_tiers"] = tiers;
  cx.result["q"] = {{"domain", io::points_json(r.q.domain.basis.vectors())}, {"coloring", coloring_json(r.q.coloring)}};
  cx.result["census"] = {r.census.inside_old, r.census.one_new, r.census.many_new};
  const auto bad = verify_coloring(h, r.q.coloring);
  cx.check(!bad, "merge colouring proper");
  cx.check(tiers_ok, "each new tier equals n_x");
  cx.check(r.below_p0.holds, "q <= p0");
  cx.check(r.below_p1.holds, "q <= p1");
}

// ---- ramsey-check ------------------------------------------------------------

inline FiniteHypergraph ramsey_universe(const RunConfig& cfg, const LinearHypergraph& h) {
  if (cfg.edgeless) return FiniteHypergraph(cfg.universe);
  std::vector<GroupPoint> pts;
  for (std::uint32_t i = 0; i < cfg.universe; ++i)
    pts.push_back(GroupPoint::axis(h.field(), h.dim(), 0, Scalar(h.field(), static_cast<long>(i))));
  return FiniteHypergraph::from_points(h, pts);
}

inline Json condition_json(const FiniteCondition& p) {
  Json a = Json::array();
  for (const auto& [x, c] : p.entries) a.push_back(Json::array({x, c}));
  return a;
}

inline void ramsey_cmd(Context& cx) {
  const auto& cfg = cx.cfg;
  const auto h = hypergraph(cfg);
  cx.input["spec"] = io::write_spec(h);
  cx.input["k"] = cfg.k;
  cx.input["l"] = cfg.l;
  cx.input["n"] = cfg.n;
  cx.input["m"] = cfg.m;
  cx.input["universe"] = cfg.universe;
  cx.input["edgeless"] = cfg.edgeless;
  cx.input["soundness"] = cfg.soundness;
  cx.input["budget"] = cfg.budget;
  const auto g = ramsey_universe(cfg, h);
  cx.result["edges"] = g.edges();
  cx.line("universe " + std::to_string(g.size()) + " points, " + std::to_string(g.edges().size()) + " edges");
  const auto r = check_ramsey_centered(g, cfg.k, cfg.l, cfg.n, cfg.m, cfg.budget);
  cx.result["family_size"] = r.family_size;
  cx.result["tuples_checked"] = r.tuples_checked;
  cx.result["holds"] = r.holds;
  Json tuple = Json::array();
  for (const auto& p : r.violating_tuple) tuple.push_back(condition_json(p));
  cx.result["violating_tuple"] = tuple;
  if (!r.holds) {
    std::vector<std::string> parts;
    for (const auto& p : r.violating_tuple) parts.push_back(p.to_string());
    cx.line("violating tuple " + join(parts));
  }
  cx.check(r.holds, "every " + std::to_string(cfg.m) + "-tuple from A_kl (" + std::to_string(r.family_size) +
                        " conditions) has " + std::to_string(cfg.n) + " members with a common lower bound");
  if (cfg.soundness) {
    std::size_t sets = 0;
    bool ok = true;
    for (std::uint32_t k = 1; k <= cfg.k; ++k)
      for (std::uint32_t l = 1; l <= cfg.l; ++l) {
        const auto family = with_reversed_enumerations(conditions_kl(g, k, l));
        for (const auto& a : ok_homogeneous_sets(g, family, 3, 5)) {
          ++sets;
          const auto v = ok_homogeneous_implies_bound(g, family, a);
          if (!v.ok && ok) cx.line("counterexample k=" + std::to_string(k) + " l=" + std::to_string(l) + ": " + v.failure);
          ok = ok && v.ok;
        }
      }
    cx.result["ok_homogeneous_sets"] = sets;
    cx.check(ok, std::to_string(sets) + " OK-homogeneous sets yield a Delta-system with a common lower bound");
  }
}

// ---- hj ----------------------------------------------------------------------

inline std::vector<hj::Word> cube(std::uint32_t N, std::uint32_t n) {
  std::vector<hj::Word> all;
  for (std::uint64_t i = 0; i < hj::word_count(N, n); ++i) all.push_back(hj::word_at(i, N, n));
  return all;
}

inline std::vector<hj::Word> hj_words(const RunConfig& cfg) {
  if (cfg.words.empty()) return cube(cfg.length, cfg.alphabet);
  std::vector<hj::Word> out;
  for (const auto& w : cfg.words) out.push_back(hj::parse_word(w, cfg.alphabet));
  return out;
}

inline void hj_cmd(Context& cx) {
  const auto& cfg = cx.cfg;
  cx.input["sub"] = cfg.sub;
  if (cfg.sub == "threshold") {
    cx.input["alphabet"] = cfg.alphabet;
    cx.input["colors"] = cfg.colors;
    cx.input["max_length"] = cfg.max_length;
    cx.input["budget"] = cfg.budget;
    const auto t = hj::hj_threshold(cfg.alphabet, cfg.colors, cfg.max_length, cfg.budget);
    cx.result["threshold"] = t ? Json(*t) : Json(nullptr);
    cx.line(t ? "threshold " + std::to_string(*t) : "no threshold up to length " + std::to_string(cfg.max_length));
    // independent confirmation by the line-free cover search
    if (t) {
      cx.check(hj::phi(cube(*t, cfg.alphabet), *t, cfg.alphabet, cfg.budget) > cfg.colors,
               "no line-free cover of length " + std::to_string(*t) + " with " + std::to_string(cfg.colors) + " parts");
      if (*t > 1)
        cx.check(hj::phi(cube(*t - 1, cfg.alphabet), *t - 1, cfg.alphabet, cfg.budget) <= cfg.colors,
                 "a line-free cover of length " + std::to_string(*t - 1) + " exists");
    }
  } else if (cfg.sub == "phi") {
    cx.input["alphabet"] = cfg.alphabet;
    cx.input["length"] = cfg.length;
    cx.input["words"] = strings(cfg.words);
    const auto cover = hj::phi_cover(hj_words(cfg), cfg.length, cfg.alphabet, cfg.budget);
    cx.result["phi"] = cover.parts;
    Json parts = Json::array();
    for (std::size_t i = 0; i < cover.words.size(); ++i) {
      parts.push_back(Json::array({hj::word_string(cover.words[i]), cover.part[i]}));
      cx.line(hj::word_string(cover.words[i]) + " part " + std::to_string(cover.part[i]));
    }
    cx.result["cover"] = parts;
    cx.line("phi " + std::to_string(cover.parts));
    cx.check(hj::is_line_free_cover(cover, cfg.length, cfg.alphabet), "cover parts are line-free");
  } else if (cfg.sub == "embed") {
    const auto h = hypergraph(cfg);
    cx.input["spec"] = io::write_spec(h);
    cx.input["depth"] = cfg.depth;
    cx.input["component"] = cfg.component;
    const auto s = hj::build_embedding(h, cfg.depth, cfg.component);
    Json levels = Json::array();
    for (std::size_t m = 0; m < s.levels.size(); ++m) {
      levels.push_back(io::points_json({s.levels[m][0], s.levels[m][1], s.levels[m][2]}));
      cx.line("level " + std::to_string(m) + " " + s.levels[m][0].to_string() + " " + s.levels[m][1].to_string() + " " +
              s.levels[m][2].to_string());
    }
    cx.result["levels"] = levels;
    const auto err = hj::verify_scheme(h, s);
    cx.check(!err, "levels solve the equation and decay" + (err ? ": " + *err : std::string()));
    std::size_t total = 0, good = 0;
    for (std::uint32_t L = 1; L <= cfg.depth; ++L)
      for (const auto& r : hj::check_homomorphism(h, s, L)) {
        ++total;
        good += r.ok();
      }
    cx.result["lines"] = total;
    cx.result["lines_ok"] = good;
    cx.check(good == total, std::to_string(good) + "/" + std::to_string(total) +
                                " lines map to hyperedges of distinct points");
  } else {
    throw std::invalid_argument("hj needs one of: threshold, phi, embed");
  }
}

// ---- grid --------------------------------------------------------------------

inline std::string grid_text(const grid::GridColoring& g) {
  std::string out;
  for (std::size_t s = 0; s < g.rows(); ++s) {
    for (std::size_t t = 0; t < g.cols(); ++t) out += (t ? " " : "") + std::to_string(g(s, t));
    out += "\n";
  }
  return out;
}

inline void grid_cmd(Context& cx) {
  const auto& cfg = cx.cfg;
  cx.input["sub"] = cfg.sub;
  grid::GridColoring g(0, 0);
  if (!cfg.grid_text.empty()) {
    g = grid::GridColoring::parse(cfg.grid_text);
  } else {
    gen::Rng rng(cfg.seed);
    g = grid::GridColoring(cfg.rows, cfg.cols);
    for (std::size_t s = 0; s < cfg.rows; ++s)
      for (std::size_t t = 0; t < cfg.cols; ++t) g.at(s, t) = static_cast<std::uint32_t>(gen::below(rng, cfg.colors));
  }
  cx.input["grid"] = grid_text(g);
  cx.line(std::to_string(g.rows()) + "x" + std::to_string(g.cols()) + " grid");
  if (cfg.sub == "rectangle") {
    const auto w = grid::find_mono_rectangle(g);
    if (w) {
      cx.result["witness"] = {{"rows", {w->s0, w->s1}}, {"columns", {w->t0, w->t1}}, {"color", w->color}};
      cx.line("rectangle " + w->to_string());
      cx.check(grid::verify(g, *w), "witness cells share its colour");
    } else {
      cx.result["witness"] = nullptr;
      cx.line("no monochromatic rectangle");
    }
  } else if (cfg.sub == "corner") {
    const auto w = grid::find_mono_corner(g);
    if (w) {
      auto cell = [](const grid::Cell& c) { return Json::array({c.first, c.second}); };
      cx.result["witness"] = {{"cells", {cell(w->corner), cell(w->along_row), cell(w->along_col)}}, {"color", w->color}};
      cx.line("corner " + w->to_string());
      cx.check(grid::verify(g, *w), "witness cells share its colour");
    } else {
      cx.result["witness"] = nullptr;
      cx.line("no monochromatic corner");
    }
  } else {
    throw std::invalid_argument("grid needs one of: rectangle, corner");
  }
}

inline RunConfig config_from_input(const std::string& command, const Json& in) {
  RunConfig c;
  c.command = command;
  auto get = [&](const char* key, auto& field) {
    if (in.contains(key)) field = in.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("sub", c.sub);
  get("spec", c.spec_text);
  get("seed", c.seed);
  get("budget", c.budget);
  get("max_points", c.max_points);
  get("points", c.points);
  get("generators", c.generators);
  get("mode", c.mode);
  get("k", c.k);
  get("l", c.l);
  get("n", c.n);
  get("m", c.m);
  get("universe", c.universe);
  get("edgeless", c.edgeless);
  get("soundness", c.soundness);
  get("alphabet", c.alphabet);
  get("colors", c.colors);
  get("max_length", c.max_length);
  get("length", c.length);
  get("words", c.words);
  get("depth", c.depth);
  get("component", c.component);
  get("grid", c.grid_text);
  return c;
}

}  // namespace detail

RunResult run(const RunConfig& cfg);

namespace detail {

// Re-runs the recorded input, compares results, and re-checks stored witnesses directly.
inline void verify_cmd(Context& cx) {
  const Json cert = io::read_certificate(cx.cfg.cert_text);
  for (const char* key : {"command", "input", "result", "pass"})
    if (!cert.contains(key)) throw std::invalid_argument(std::string("certificate lacks '") + key + "'");
  const auto command = cert.at("command").get<std::string>();
  if (command == "verify") throw std::invalid_argument("certificate of a verify run");
  const auto cfg = config_from_input(command, cert.at("input"));
  cx.line("certificate of '" + command + (cfg.sub.empty() ? "" : " " + cfg.sub) + "'");
  const auto again = run(cfg);
  if (again.status == kUsage || again.status == kBudget) {
    cx.check(false, "re-run finished: " + again.report);
    return;
  }
  const Json redo = io::read_certificate(again.certificate);
  cx.check(redo.at("result") == cert.at("result"), "re-run reproduces the recorded result");
  cx.check(redo.at("pass") == cert.at("pass"), "re-run reproduces the recorded verdict");
  const auto& res = cert.at("result");
  if (command == "closure") {
    const auto h = io::parse_spec(cfg.spec_text);
    const auto basis = Basis::span(h.field(), h.dim(), io::points_from_json(res.at("basis"), h.field()));
    cx.check(!closure_defect(h, basis), "recorded basis is closed");
  } else if (command == "remainder") {
    const auto h = io::parse_spec(cfg.spec_text);
    const auto a = Basis::span(h.field(), h.dim(), io::points_from_json(res.at("subspace"), h.field()));
    const auto vs = io::points_from_json(res.at("vertices"), h.field());
    bool ok = true;
    for (const auto& e : res.at("edges")) {
      const auto z = GroupPoint::parse(e.at("z").get<std::string>(), h.field());
      const auto& u = vs.at(e.at("u").get<std::size_t>());
      const auto& v = vs.at(e.at("v").get<std::size_t>());
      ok = ok && a.contains(z) && !a.contains(u) && !a.contains(v) && h.hyperedge(u, v, z).has_value();
    }
    cx.check(ok, "recorded edges are hyperedges completed inside the subspace");
  } else if (command == "color") {
    const auto h = io::parse_spec(cfg.spec_text);
    std::map<GroupPoint, std::string> col;
    for (const auto& rec : res.at("coloring"))
      col[GroupPoint::parse(rec.at(0).get<std::string>(), h.field())] = rec.at(1).get<std::string>();
    std::vector<GroupPoint> dom;
    for (const auto& [x, c] : col) dom.push_back(x);
    bool ok = true;
    for (const auto& e : find_hyperedges(h, dom))
      ok = ok && !(col[e.points[0]] == col[e.points[1]] && col[e.points[1]] == col[e.points[2]]);
    cx.check(ok, "recorded colouring has no monochromatic hyperedge");
  } else if (command == "ramsey-check" && !res.at("holds").get<bool>()) {
    const auto h = io::parse_spec(cfg.spec_text);
    const auto g = ramsey_universe(cfg, h);
    std::vector<FiniteCondition> tuple;
    for (const auto& p : res.at("violating_tuple")) {
      FiniteCondition fc;
      for (const auto& e : p) fc.entries.emplace_back(e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>());
      tuple.push_back(std::move(fc));
    }
    bool refutes = tuple.size() == cfg.m;
    if (refutes && cfg.n <= cfg.m) {
      std::vector<std::size_t> pick(cfg.n);
      for (std::size_t i = 0; i < cfg.n; ++i) pick[i] = i;
      while (refutes) {
        std::vector<FiniteCondition> members;
        for (auto i : pick) members.push_back(tuple[i]);
        refutes = !lower_bound(g, members).has_value();
        std::int64_t i = static_cast<std::int64_t>(cfg.n) - 1;
        while (i >= 0 && pick[i] == cfg.m - cfg.n + static_cast<std::size_t>(i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (auto t = static_cast<std::size_t>(i) + 1; t < cfg.n; ++t) pick[t] = pick[t - 1] + 1;
      }
    }
    cx.check(refutes, "no " + std::to_string(cfg.n) + " members of the recorded tuple have a common lower bound");
  } else if (command == "hj" && cfg.sub == "embed") {
    const auto h = io::parse_spec(cfg.spec_text);
    hj::EmbeddingScheme s;
    s.component = cfg.component;
    if (res.at("levels").empty()) throw std::invalid_argument("certificate has no levels");
    for (const auto& lv : res.at("levels")) {
      const auto p = io::points_from_json(lv, h.field());
      s.levels.push_back({p.at(0), p.at(1), p.at(2)});
    }
    cx.check(!hj::verify_scheme(h, s), "recorded levels pass the decay and equation checks");
  } else if (command == "grid" && !res.at("witness").is_null()) {
    const auto g = grid::GridColoring::parse(cfg.grid_text);
    const auto& w = res.at("witness");
    const auto color = w.at("color").get<std::uint32_t>();
    bool ok = true;
    std::vector<grid::Cell> cells;
    if (cfg.sub == "rectangle") {
      for (auto s : w.at("rows"))
        for (auto t : w.at("columns")) cells.emplace_back(s.get<std::size_t>(), t.get<std::size_t>());
    } else {
      for (const auto& c : w.at("cells")) cells.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    }
    for (const auto& [s, t] : cells) ok = ok && s < g.rows() && t < g.cols() && g(s, t) == color;
    cx.check(ok, "recorded witness cells share its colour");
  }
}

}  // namespace detail

inline RunResult run(const RunConfig& cfg) {
  detail::Context cx(cfg);
  RunResult out;
  try {
    if (cfg.budget == 0) throw std::invalid_argument("budget must be positive");
    const auto& c = cfg.command;
    if (c == "verify-slim") detail::verify_slim_cmd(cx);
    else if (c == "closure") detail::closure_cmd(cx);
    else if (c == "remainder") detail::remainder_cmd(cx);
    else if (c == "quotient") detail::quotient_cmd(cx);
    else if (c == "color") detail::color_cmd(cx);
    else if (c == "poset-merge") detail::merge_cmd(cx);
    else if (c == "ramsey-check") detail::ramsey_cmd(cx);
    else if (c == "hj") detail::hj_cmd(cx);
    else if (c == "grid") detail::grid_cmd(cx);
    else if (c == "verify") detail::verify_cmd(cx);
    else throw std::invalid_argument("unknown subcommand '" + c + "'");
  } catch (const BudgetExceeded& e) {
    return RunResult{kBudget, std::string("budget exceeded: ") + e.what() + "\n", ""};
  } catch (const std::overflow_error& e) {
    return RunResult{kBudget, std::string("budget exceeded: ") + e.what() + "\n", ""};
  } catch (const std::logic_error& e) {
    // invalid_argument derives from logic_error; other logic errors are failed internal checks
    if (dynamic_cast<const std::invalid_argument*>(&e)) return RunResult{kUsage, std::string("error: ") + e.what() + "\n", ""};
    cx.check(false, e.what());
  } catch (const std::exception& e) {
    return RunResult{kUsage, std::string("error: ") + e.what() + "\n", ""};
  }
  cx.line(cx.pass ? "PASS" : "FAIL");
  out.status = cx.pass ? kPass : kCheckFailed;
  out.report = cx.report.str();
  if (cfg.command != "verify") {
    io::Json body{{"command", cfg.command}, {"input", cx.input}, {"result", cx.result}, {"pass", cx.pass}};
    out.certificate = io::write_certificate(body);
  } else {
    out.certificate = io::write_certificate(io::Json{{"command", "verify"}, {"pass", cx.pass}});
  }
  return out;
}

}  // namespace lincolor::cli
