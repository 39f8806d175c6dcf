#pragma once

#include <lincolor/ramsey/finite_poset.hpp>  // BudgetExceeded

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lincolor::hj {

/// A word of fixed length over the alphabet {0..n-1}; position 0 first.
using Word = std::vector<std::uint32_t>;

inline std::string word_string(const Word& w) {
  std::string s;
  for (auto c : w) s += c < 10 ? static_cast<char>('0' + c) : '?';
  return s;
}

inline Word parse_word(const std::string& s, std::uint32_t n) {
  Word w;
  for (char ch : s) {
    if (ch < '0' || ch > '9' || static_cast<std::uint32_t>(ch - '0') >= n)
      throw std::invalid_argument("letter '" + std::string(1, ch) + "' outside the alphabet");
    w.push_back(static_cast<std::uint32_t>(ch - '0'));
  }
  return w;
}

/// Words of length N in lexicographic order are numbered 0..n^N - 1.
inline std::uint64_t word_count(std::uint32_t N, std::uint32_t n, std::uint64_t limit = 1u << 24) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < N; ++i) {
    if (total > limit / n) throw BudgetExceeded("n^N exceeds the word budget");
    total *= n;
  }
  return total;
}

inline std::uint64_t word_index(const Word& w, std::uint32_t n) {
  std::uint64_t k = 0;
  for (auto c : w) {
    if (c >= n) throw std::invalid_argument("letter outside the alphabet");
    k = k * n + c;
  }
  return k;
}

inline Word word_at(std::uint64_t k, std::uint32_t N, std::uint32_t n) {
  Word w(N);
  for (std::uint32_t i = N; i-- > 0; k /= n) w[i] = static_cast<std::uint32_t>(k % n);
  return w;
}

/// The n words equal to `base` off the active positions and constant on them.
struct CombinatorialLine {
  std::vector<std::uint32_t> active;  // increasing, nonempty
  Word base;                          // letters on active positions are irrelevant and kept at 0
  std::uint32_t n = 2;

  Word point(std::uint32_t letter) const {
    Word w = base;
    for (auto p : active) w[p] = letter;
    return w;
  }
  std::vector<Word> points() const {
    std::vector<Word> out;
    for (std::uint32_t c = 0; c < n; ++c) out.push_back(point(c));
    return out;
  }
  std::string to_string() const {
    std::string s = word_string(base);
    for (auto p : active) s[p] = '*';
    return s;
  }
};

/// Lines of n^N: active sets by increasing bitmask, then bases in lexicographic order.
inline std::vector<CombinatorialLine> lines(std::uint32_t N, std::uint32_t n, std::uint64_t budget = 1u << 22) {
  if (N < 1 || n < 2) throw std::invalid_argument("lines need N >= 1 and n >= 2");
  if (N > 24) throw BudgetExceeded("word length too large");
  // (n + 1)^N - n^N lines in total
  if (word_count(N, n + 1, budget * 4) - word_count(N, n) > budget) throw BudgetExceeded("too many lines");
  std::vector<CombinatorialLine> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << N); ++mask) {
    CombinatorialLine line;
    line.n = n;
    std::vector<std::uint32_t> free;
    for (std::uint32_t p = 0; p < N; ++p) (mask >> p & 1 ? line.active : free).push_back(p);
    const auto bases = word_count(static_cast<std::uint32_t>(free.size()), n);
    for (std::uint64_t b = 0; b < bases; ++b) {
      const Word z = word_at(b, static_cast<std::uint32_t>(free.size()), n);
      line.base.assign(N, 0);
      for (std::size_t t = 0; t < free.size(); ++t) line.base[free[t]] = z[t];
      out.push_back(line);
    }
  }
  return out;
}

/// Closed form for the number of lines.
inline std::uint64_t line_count(std::uint32_t N, std::uint32_t n) { return word_count(N, n + 1) - word_count(N, n); }

/// Lines of n^N as sorted word-index tuples, and per word the lines through it.
struct LineIndex {
  std::uint32_t N = 0, n = 0;
  std::vector<std::vector<std::uint64_t>> members;
  std::map<std::uint64_t, std::vector<std::size_t>> through;

  LineIndex(std::uint32_t N_, std::uint32_t n_) : N(N_), n(n_) {
    for (const auto& l : lines(N, n)) {
      std::vector<std::uint64_t> m;
      for (const auto& w : l.points()) m.push_back(word_index(w, n));
      for (auto k : m) through[k].push_back(members.size());
      members.push_back(std::move(m));
    }
  }
};

/// Lines all of whose words lie in the sample.
inline std::vector<CombinatorialLine> delta_hyperedges(std::uint32_t N, std::uint32_t n, const std::vector<Word>& sample) {
  std::vector<std::uint64_t> have;
  for (const auto& w : sample) {
    if (w.size() != N) throw std::invalid_argument("sample word of the wrong length");
    have.push_back(word_index(w, n));
  }
  std::sort(have.begin(), have.end());
  std::vector<CombinatorialLine> out;
  for (const auto& l : lines(N, n)) {
    bool inside = true;
    for (const auto& w : l.points()) inside = inside && std::binary_search(have.begin(), have.end(), word_index(w, n));
    if (inside) out.push_back(l);
  }
  return out;
}

/// An optimal cover: the distinct words of b in lexicographic order with the part holding each.
struct LineFreeCover {
  std::vector<Word> words;
  std::vector<std::uint32_t> part;
  std::uint32_t parts = 0;
};

/// phi(b): least number of line-free sets covering b. Only lines inside b can obstruct, so this is
/// the least k admitting a k-colouring of b with no monochromatic line, found by backtracking.
inline LineFreeCover phi_cover(const std::vector<Word>& b, std::uint32_t N, std::uint32_t n,
                               std::uint64_t budget = 50'000'000) {
  if (b.empty()) throw std::invalid_argument("phi of the empty set");
  std::vector<std::uint64_t> verts;
  for (const auto& w : b) {
    if (w.size() != N) throw std::invalid_argument("word of the wrong length");
    verts.push_back(word_index(w, n));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  const LineIndex index(N, n);
  std::map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = i;
  // per vertex, the lines inside b in which it is the last vertex to be coloured
  std::vector<std::vector<std::vector<std::size_t>>> closing(verts.size());
  for (const auto& m : index.members) {
    std::vector<std::size_t> local;
    for (auto k : m)
      if (auto it = pos.find(k); it != pos.end()) local.push_back(it->second);
    if (local.size() != m.size()) continue;
    std::sort(local.begin(), local.end());
    closing[local.back()].push_back(local);
  }
  std::vector<std::uint32_t> col(verts.size(), 0);
  std::uint64_t nodes = 0;
  auto colourable = [&](std::uint32_t k) {
    // depth-first, new colours only in increasing order
    std::function<bool(std::size_t, std::uint32_t)> go = [&](std::size_t v, std::uint32_t used) {
      if (v == verts.size()) return true;
      if (++nodes > budget) throw BudgetExceeded("phi search exceeds the node budget");
      for (std::uint32_t c = 0; c < std::min(k, used + 1); ++c) {
        col[v] = c;
        bool mono = false;
        for (const auto& l : closing[v]) {
          mono = std::all_of(l.begin(), l.end(), [&](std::size_t u) { return col[u] == c; });
          if (mono) break;
        }
        if (!mono && go(v + 1, std::max(used, c + 1))) return true;
      }
      return false;
    };
    return go(0, 0);
  };
  std::uint32_t k = 1;
  while (!colourable(k)) ++k;
  LineFreeCover out;
  for (auto v : verts) out.words.push_back(word_at(v, N, n));
  out.part = col;
  out.parts = k;
  return out;
}

inline std::uint32_t phi(const std::vector<Word>& b, std::uint32_t N, std::uint32_t n, std::uint64_t budget = 50'000'000) {
  return phi_cover(b, N, n, budget).parts;
}

/// Independent check of a cover: parts in range and no line of n^N inside one part.
inline bool is_line_free_cover(const LineFreeCover& c, std::uint32_t N, std::uint32_t n) {
  if (c.part.size() != c.words.size()) return false;
  std::map<std::uint64_t, std::uint32_t> where;
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    if (c.part[i] >= c.parts || c.words[i].size() != N) return false;
    where[word_index(c.words[i], n)] = c.part[i];
  }
  for (const auto& l : lines(N, n)) {
    std::optional<std::uint32_t> common;
    bool mono = true;
    for (const auto& w : l.points()) {
      auto it = where.find(word_index(w, n));
      if (it == where.end() || (common && *common != it->second)) {
        mono = false;
        break;
      }
      common = it->second;
    }
    if (mono) return false;
  }
  return true;
}

/// Least N <= maxN such that every colouring of n^N has a monochromatic line, by enumerating all
/// colors^(n^N) colourings.
inline std::optional<std::uint32_t> hj_threshold(std::uint32_t n, std::uint32_t colors, std::uint32_t maxN,
                                                 std::uint64_t budget = 1u << 24) {
  if (n < 2 || colors < 1) throw std::invalid_argument("need n >= 2 and at least one colour");
  for (std::uint32_t N = 1; N <= maxN; ++N) {
    const auto words = word_count(N, n);
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < words; ++i) {
      if (total > budget / colors) throw BudgetExceeded("colors^(n^N) exceeds the budget at N=" + std::to_string(N));
      total *= colors;
    }
    const LineIndex index(N, n);
    std::vector<std::uint32_t> col(words, 0);
    bool escaped = false;
    for (std::uint64_t t = 0; t < total && !escaped; ++t) {
      bool mono_found = false;
      for (const auto& m : index.members) {
        const auto c = col[m[0]];
        if (std::all_of(m.begin(), m.end(), [&](std::uint64_t k) { return col[k] == c; })) {
          mono_found = true;
          break;
        }
      }
      escaped = !mono_found;
      for (std::size_t i = 0; i < col.size() && ++col[i] == colors; ++i) col[i] = 0;
    }
    if (!escaped) return N;
  }
  return std::nullopt;
}

}  // namespace lincolor::hj
