#include <lincolor/cli/run.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using lincolor::cli::RunConfig;
  RunConfig cfg;
  std::string spec_path, out_path, format = "text", grid_path, cert_path;

  CLI::App app{"Exact checks for colourings of slim linear hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--spec", spec_path, "hypergraph spec file (lincolor-v1)")->check(CLI::ExistingFile);
  app.add_option("--preset", cfg.preset, "preset hypergraph when no spec is given")
      ->check(CLI::IsMember({"ap", "equilateral"}));
  app.add_option("--dim", cfg.dim, "dimension of the preset")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized instances");
  app.add_option("--budget", cfg.budget, "largest enumeration allowed")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "write the certificate to this file");
  app.add_option("--format", format, "what to print on stdout")->check(CLI::IsMember({"text", "certificate"}));

  app.add_subcommand("verify-slim", "injectivity of g_i and g_i+g_j per component");

  auto* closure = app.add_subcommand("closure", "least closed subspace containing the points");
  closure->add_option("points", cfg.points, "seed points such as (1,0)");

  auto add_instance = [&](CLI::App* sc) {
    sc->add_option("--gen", cfg.generators, "generators of the subspace (closed first)");
    sc->add_option("--point", cfg.points, "sample points outside the subspace");
    sc->add_option("--max-points", cfg.max_points, "size of a random sample");
  };
  auto* remainder = app.add_subcommand("remainder", "remainder graph over a closed subspace");
  add_instance(remainder);
  auto* quot = app.add_subcommand("quotient", "quotient graph, local finiteness and a colouring");
  add_instance(quot);

  auto* color = app.add_subcommand("color", "amalgamate a random coherent sequence and verify it");
  color->add_option("--mode", cfg.mode, "stage colourings")->check(CLI::IsMember({"greedy", "injective"}));
  color->add_option("--max-points", cfg.max_points, "sample size");

  app.add_subcommand("poset-merge", "merge two conditions of a random scene");

  auto* ramsey = app.add_subcommand("ramsey-check", "Ramsey-centeredness of A_kl on a finite universe");
  ramsey->add_option("-k", cfg.k, "domain size");
  ramsey->add_option("-l", cfg.l, "number of colours");
  ramsey->add_option("-n", cfg.n, "members needing a common lower bound");
  ramsey->add_option("-m", cfg.m, "tuple length");
  ramsey->add_option("--universe", cfg.universe, "points 0..u-1 on the first axis");
  ramsey->add_flag("--edgeless", cfg.edgeless, "drop all hyperedges");
  ramsey->add_flag("--soundness", cfg.soundness, "also check every OK-homogeneous set up to size 5");

  auto* hj = app.add_subcommand("hj", "combinatorial lines");
  hj->require_subcommand(1);
  auto* threshold = hj->add_subcommand("threshold", "least length forcing a monochromatic line");
  threshold->add_option("--alphabet", cfg.alphabet)->check(CLI::Range(2u, 64u));
  threshold->add_option("--colors", cfg.colors)->check(CLI::PositiveNumber);
  threshold->add_option("--max-length", cfg.max_length)->check(CLI::PositiveNumber);
  auto* phi = hj->add_subcommand("phi", "least number of line-free sets covering the words");
  phi->add_option("--alphabet", cfg.alphabet)->check(CLI::Range(2u, 64u));
  phi->add_option("--length", cfg.length)->check(CLI::PositiveNumber);
  phi->add_option("words", cfg.words, "words over 0..n-1; the whole cube when omitted");
  auto* embed = hj->add_subcommand("embed", "map words of 3^M into the hypergraph");
  embed->add_option("--depth", cfg.depth, "M")->check(CLI::PositiveNumber);
  embed->add_option("--component", cfg.component);

  auto* grid = app.add_subcommand("grid", "monochromatic rectangles and corners");
  grid->require_subcommand(1);
  auto grid_args = [&](CLI::App* sc) {
    sc->add_option("--grid", grid_path, "grid file: rows of colour indices")->check(CLI::ExistingFile);
    sc->add_option("--rows", cfg.rows);
    sc->add_option("--cols", cfg.cols);
    sc->add_option("--colors", cfg.colors, "colours of a random grid")->check(CLI::PositiveNumber);
  };
  auto* rect = grid->add_subcommand("rectangle", "four corners in one colour")->alias("find-rectangle");
  auto* corner = grid->add_subcommand("corner", "three corners in one colour")->alias("find-corner");
  grid_args(rect);
  grid_args(corner);

  auto* verify = app.add_subcommand("verify", "re-run a certificate and check its witnesses");
  verify->add_option("--cert", cert_path, "certificate file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lincolor::cli::kUsage;
  }

  for (auto* sc : app.get_subcommands()) {
    cfg.command = sc->get_name();
    for (auto* sub : sc->get_subcommands()) cfg.sub = sub->get_name();
  }

  try {
    if (!spec_path.empty()) cfg.spec_text = slurp(spec_path);
    if (!grid_path.empty()) cfg.grid_text = slurp(grid_path);
    if (!cert_path.empty()) cfg.cert_text = slurp(cert_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return lincolor::cli::kUsage;
  }

  const auto result = lincolor::cli::run(cfg);
  if (result.status == lincolor::cli::kUsage || result.status == lincolor::cli::kBudget) {
    std::cerr << result.report;
    return result.status;
  }
  std::cout << (format == "text" ? result.report : result.certificate);
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return lincolor::cli::kUsage;
    }
    out << result.certificate;
  }
  return result.status;
}
