#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace lincolor::grid {

/// A total colouring of rows x columns, row-major.
class GridColoring {
 public:
  GridColoring(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> cells)
      : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (cells_.size() != rows_ * cols_) throw std::invalid_argument("grid is not total on rows x columns");
  }
  GridColoring(std::size_t rows, std::size_t cols, std::uint32_t fill = 0)
      : GridColoring(rows, cols, std::vector<std::uint32_t>(rows * cols, fill)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t operator()(std::size_t s, std::size_t t) const { return cells_[s * cols_ + t]; }
  std::uint32_t& at(std::size_t s, std::size_t t) { return cells_[s * cols_ + t]; }
  const std::vector<std::uint32_t>& cells() const { return cells_; }

  /// Rows of whitespace-separated colour indices; blank lines and '#' comments skipped.
  static GridColoring parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::uint32_t> cells;
    std::size_t rows = 0, cols = 0, lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
      std::istringstream ls(line);
      std::vector<std::uint32_t> row;
      std::string tok;
      while (ls >> tok) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(tok, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != tok.size() || tok[0] == '-')
          throw std::invalid_argument("line " + std::to_string(lineno) + ": bad colour '" + tok + "'");
        row.push_back(static_cast<std::uint32_t>(v));
      }
      if (row.empty()) continue;
      if (rows == 0) cols = row.size();
      if (row.size() != cols)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " + std::to_string(cols) + " cells");
      cells.insert(cells.end(), row.begin(), row.end());
      ++rows;
    }
    return GridColoring(rows, cols, std::move(cells));
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> cells_;
};

using Cell = std::pair<std::size_t, std::size_t>;  // (row, column)

/// {s0, s1} x {t0, t1} in one colour.
struct RectangleWitness {
  std::size_t s0 = 0, s1 = 0, t0 = 0, t1 = 0;
  std::uint32_t color = 0;

  std::array<Cell, 4> cells() const { return {{{s0, t0}, {s0, t1}, {s1, t0}, {s1, t1}}}; }
  std::string to_string() const {
    return "rows " + std::to_string(s0) + "," + std::to_string(s1) + " columns " + std::to_string(t0) + "," +
           std::to_string(t1) + " colour " + std::to_string(color);
  }
};

/// Three corners of a rectangle in one colour: `corner` shares its row with `along_row` and its
/// column with `along_col`.
struct CornerWitness {
  Cell corner, along_row, along_col;
  std::uint32_t color = 0;

  std::array<Cell, 3> cells() const { return {corner, along_row, along_col}; }
  std::string to_string() const {
    auto c = [](const Cell& x) { return "(" + std::to_string(x.first) + "," + std::to_string(x.second) + ")"; };
    return "cells " + c(corner) + " " + c(along_row) + " " + c(along_col) + " colour " + std::to_string(color);
  }
};

/// Column by column, each same-coloured row pair is a signature (s0, s1, colour); the first
/// signature seen in two columns is a rectangle.
inline std::optional<RectangleWitness> find_mono_rectangle(const GridColoring& g) {
  std::map<std::tuple<std::size_t, std::size_t, std::uint32_t>, std::size_t> first_column;
  for (std::size_t t = 0; t < g.cols(); ++t)
    for (std::size_t s0 = 0; s0 < g.rows(); ++s0)
      for (std::size_t s1 = s0 + 1; s1 < g.rows(); ++s1) {
        if (g(s0, t) != g(s1, t)) continue;
        auto [it, fresh] = first_column.try_emplace({s0, s1, g(s0, t)}, t);
        if (!fresh) return RectangleWitness{s0, s1, it->second, t, g(s0, t)};
      }
  return std::nullopt;
}

/// A cell whose colour recurs both in its row and in its column.
inline std::optional<CornerWitness> find_mono_corner(const GridColoring& g) {
  // least other occurrence of each colour per row and per column
  auto partner_in_row = [&](std::size_t s, std::size_t t) -> std::optional<std::size_t> {
    for (std::size_t u = 0; u < g.cols(); ++u)
      if (u != t && g(s, u) == g(s, t)) return u;
    return std::nullopt;
  };
  auto partner_in_col = [&](std::size_t s, std::size_t t) -> std::optional<std::size_t> {
    for (std::size_t r = 0; r < g.rows(); ++r)
      if (r != s && g(r, t) == g(s, t)) return r;
    return std::nullopt;
  };
  std::vector<std::map<std::uint32_t, std::size_t>> row_count(g.rows()), col_count(g.cols());
  for (std::size_t s = 0; s < g.rows(); ++s)
    for (std::size_t t = 0; t < g.cols(); ++t) {
      ++row_count[s][g(s, t)];
      ++col_count[t][g(s, t)];
    }
  for (std::size_t s = 0; s < g.rows(); ++s)
    for (std::size_t t = 0; t < g.cols(); ++t)
      if (row_count[s][g(s, t)] > 1 && col_count[t][g(s, t)] > 1)
        return CornerWitness{{s, t}, {s, *partner_in_row(s, t)}, {*partner_in_col(s, t), t}, g(s, t)};
  return std::nullopt;
}

inline bool verify(const GridColoring& g, const RectangleWitness& w) {
  if (w.s0 == w.s1 || w.t0 == w.t1 || std::max(w.s0, w.s1) >= g.rows() || std::max(w.t0, w.t1) >= g.cols())
    return false;
  for (const auto& [s, t] : w.cells())
    if (g(s, t) != w.color) return false;
  return true;
}

inline bool verify(const GridColoring& g, const CornerWitness& w) {
  const auto& [cs, ct] = w.corner;
  if (w.along_row.first != cs || w.along_row.second == ct) return false;
  if (w.along_col.second != ct || w.along_col.first == cs) return false;
  for (const auto& [s, t] : w.cells())
    if (s >= g.rows() || t >= g.cols() || g(s, t) != w.color) return false;
  return true;
}

/// l + 1 rows and l * C(l + 1, 2) + 1 columns force a monochromatic rectangle.
inline std::pair<std::size_t, std::size_t> pigeonhole_shape(std::size_t colors) {
  return {colors + 1, colors * (colors + 1) * colors / 2 + 1};
}

}  // namespace lincolor::grid
