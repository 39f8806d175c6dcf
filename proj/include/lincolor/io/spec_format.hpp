#pragma once

// Hypergraph spec files:
//
//   lincolor-v1
//   field rational            | field minpoly 1 c1 c0   (w^2 + c1 w + c0 = 0)
//   dim 2
//   component
//   g0 1 0 0 1                (d*d scalars, row-major)
//   g1 -2 0 0 -2
//   g2 1 0 0 1
//
// '#' starts a comment. Several component blocks may follow.

#include <lincolor/hypergraph/linear_hypergraph.hpp>

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincolor::io {

inline constexpr const char* kSpecMagic = "lincolor-v1";

struct ParseError : std::invalid_argument {
  ParseError(std::size_t line, const std::string& what)
      : std::invalid_argument("line " + std::to_string(line) + ": " + what), line_number(line) {}
  std::size_t line_number;
};

namespace detail {
inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}
}  // namespace detail

/// The declared components, not yet checked for slimness.
struct SpecContents {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<SlimComponent> components;
  std::vector<std::size_t> component_lines;
};

inline SpecContents parse_spec_contents(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool seen_magic = false;
  std::optional<FieldPtr> field;
  std::optional<std::size_t> dim;
  struct Block {
    std::size_t line;
    std::array<std::optional<ExactMatrix>, 3> g;
  };
  std::vector<Block> blocks;

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
    const auto w = detail::split_words(raw);
    if (w.empty()) continue;
    if (!seen_magic) {
      if (w.size() != 1 || w[0] != kSpecMagic) throw ParseError(lineno, "expected header '" + std::string(kSpecMagic) + "'");
      seen_magic = true;
      continue;
    }
    const auto& key = w[0];
    if (key == "field") {
      if (field) throw ParseError(lineno, "field declared twice");
      if (w.size() == 2 && w[1] == "rational") {
        field = Field::rationals();
      } else if (w.size() == 5 && w[1] == "minpoly") {
        try {
          if (parse_rational(w[2]) != 1) throw ParseError(lineno, "minimal polynomial must be monic");
          field = Field::quadratic(parse_rational(w[3]), parse_rational(w[4]));
        } catch (const ParseError&) {
          throw;
        } catch (const std::exception& e) {
          throw ParseError(lineno, e.what());
        }
      } else {
        throw ParseError(lineno, "expected 'field rational' or 'field minpoly 1 c1 c0'");
      }
    } else if (key == "dim") {
      if (dim) throw ParseError(lineno, "dim declared twice");
      if (w.size() != 2) throw ParseError(lineno, "expected 'dim d'");
      try {
        std::size_t used = 0;
        const long d = std::stol(w[1], &used);
        if (used != w[1].size() || d < 1) throw std::invalid_argument("dim");
        dim = static_cast<std::size_t>(d);
      } catch (const std::exception&) {
        throw ParseError(lineno, "dimension must be a positive integer");
      }
    } else if (key == "component") {
      if (!field || !dim) throw ParseError(lineno, "component before field and dim");
      if (w.size() != 1) throw ParseError(lineno, "unexpected text after 'component'");
      blocks.push_back(Block{lineno, {}});
    } else if (key == "g0" || key == "g1" || key == "g2") {
      if (blocks.empty()) throw ParseError(lineno, key + " outside a component block");
      const std::size_t r = static_cast<std::size_t>(key[1] - '0');
      auto& slot = blocks.back().g[r];
      if (slot) throw ParseError(lineno, key + " given twice");
      if (w.size() != 1 + *dim * *dim)
        throw ParseError(lineno, key + " needs " + std::to_string(*dim * *dim) + " scalars");
      std::vector<Scalar> cells;
      for (std::size_t i = 1; i < w.size(); ++i) {
        try {
          cells.push_back(Scalar(*field, 0) + Scalar::parse(w[i], *field));
        } catch (const std::exception& e) {
          throw ParseError(lineno, "bad scalar '" + w[i] + "': " + e.what());
        }
      }
      slot = ExactMatrix(*field, *dim, std::move(cells));
    } else {
      throw ParseError(lineno, "unknown keyword '" + key + "'");
    }
  }
  if (!seen_magic) throw ParseError(lineno + 1, "missing header '" + std::string(kSpecMagic) + "'");
  if (!field) throw ParseError(lineno + 1, "missing field declaration");
  if (!dim) throw ParseError(lineno + 1, "missing dim");
  if (blocks.empty()) throw ParseError(lineno + 1, "no components");
  SpecContents out{*field, *dim, {}, {}};
  for (const auto& b : blocks) {
    for (int r = 0; r < 3; ++r)
      if (!b.g[r]) throw ParseError(b.line, "component lacks g" + std::to_string(r));
    out.components.emplace_back(*b.g[0], *b.g[1], *b.g[2]);
    out.component_lines.push_back(b.line);
  }
  return out;
}

inline LinearHypergraph parse_spec(const std::string& text) {
  auto c = parse_spec_contents(text);
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    const auto report = verify_slim(c.components[i]);
    for (std::size_t k = 0; k < 6; ++k)
      if (!report.injective[k])
        throw ParseError(c.component_lines[i], std::string("component is not slim: ") + kSlimConditionNames[k] +
                                                   " is not injective");
  }
  return LinearHypergraph(c.field, c.dim, std::move(c.components));
}

inline std::string write_spec(const FieldPtr& field, std::size_t dim, const std::vector<SlimComponent>& comps);

inline std::string write_spec(const LinearHypergraph& h) { return write_spec(h.field(), h.dim(), h.components()); }

inline std::string write_spec(const FieldPtr& field, std::size_t dim, const std::vector<SlimComponent>& comps) {
  std::ostringstream out;
  out << kSpecMagic << "\n";
  if (field->degree() == 1) out << "field rational\n";
  else out << "field minpoly 1 " << to_string(field->c1()) << " " << to_string(field->c0()) << "\n";
  out << "dim " << dim << "\n";
  for (const auto& c : comps) {
    out << "component\n";
    for (std::size_t r = 0; r < 3; ++r) {
      out << "g" << r;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out << " " << c.g(r)(i, j).to_string();
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace lincolor::io
