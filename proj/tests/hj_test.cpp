#include <lincolor/hj/embedding.hpp>
#include <lincolor/hj/lines.hpp>
#include <lincolor/hypergraph/presets.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

namespace lincolor::hj {
namespace {

std::vector<Word> all_words(std::uint32_t N, std::uint32_t n) {
  std::vector<Word> out;
  for (std::uint64_t k = 0; k < word_count(N, n); ++k) out.push_back(word_at(k, N, n));
  return out;
}

// Independent test: the set varies exactly on some positions, each word is constant there,
// and the constants exhaust the alphabet.
bool is_line(const std::vector<Word>& s, std::uint32_t n) {
  if (s.size() != n) return false;
  const std::size_t N = s[0].size();
  std::vector<std::size_t> moving;
  for (std::size_t p = 0; p < N; ++p) {
    bool same = true;
    for (const auto& w : s) same = same && w[p] == s[0][p];
    if (!same) moving.push_back(p);
  }
  if (moving.empty()) return false;
  std::set<std::uint32_t> letters;
  for (const auto& w : s) {
    for (auto p : moving)
      if (w[p] != w[moving[0]]) return false;
    letters.insert(w[moving[0]]);
  }
  return letters.size() == n;
}

// n-subsets of `words` forming lines, as sorted word sets.
std::set<std::vector<Word>> scan_lines(std::vector<Word> words, std::uint32_t n) {
  std::sort(words.begin(), words.end());
  std::set<std::vector<Word>> out;
  std::vector<std::size_t> pick(n);
  for (std::uint32_t i = 0; i < n; ++i) pick[i] = i;
  if (words.size() < n) return out;
  while (true) {
    std::vector<Word> s;
    for (auto p : pick) s.push_back(words[p]);
    if (is_line(s, n)) out.insert(s);
    std::int64_t i = n - 1;
    while (i >= 0 && pick[i] == words.size() - n + static_cast<std::size_t>(i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (std::size_t t = i + 1; t < n; ++t) pick[t] = pick[t - 1] + 1;
  }
  return out;
}

std::set<std::vector<Word>> as_sets(const std::vector<CombinatorialLine>& ls) {
  std::set<std::vector<Word>> out;
  for (const auto& l : ls) {
    auto p = l.points();
    std::sort(p.begin(), p.end());
    out.insert(p);
  }
  return out;
}

// Minimum cover by line-free subsets, by breadth-first search over covered masks.
std::uint32_t cover_oracle(const std::vector<Word>& b, std::uint32_t n) {
  const std::size_t s = b.size();
  const auto ls = scan_lines(b, n);
  std::vector<std::uint32_t> line_masks;
  for (const auto& l : ls) {
    std::uint32_t m = 0;
    for (const auto& w : l) m |= 1u << (std::find(b.begin(), b.end(), w) - b.begin());
    line_masks.push_back(m);
  }
  std::vector<std::uint32_t> free_sets;
  for (std::uint32_t m = 1; m < (1u << s); ++m)
    if (std::none_of(line_masks.begin(), line_masks.end(), [&](std::uint32_t l) { return (m & l) == l; }))
      free_sets.push_back(m);
  std::vector<int> dist(1u << s, -1);
  dist[0] = 0;
  std::vector<std::uint32_t> frontier = {0};
  while (dist[(1u << s) - 1] < 0) {
    std::vector<std::uint32_t> next;
    for (auto m : frontier)
      for (auto f : free_sets)
        if (dist[m | f] < 0) {
          dist[m | f] = dist[m] + 1;
          next.push_back(m | f);
        }
    frontier = std::move(next);
  }
  return static_cast<std::uint32_t>(dist[(1u << s) - 1]);
}

TEST(Lines, SmallExamples) {
  const auto l1 = lines(1, 2);
  ASSERT_EQ(l1.size(), 1u);
  EXPECT_EQ(l1[0].points(), (std::vector<Word>{{0}, {1}}));
  EXPECT_EQ(lines(2, 2).size(), 5u);
  EXPECT_EQ(lines(3, 2).size(), 19u);
  EXPECT_EQ(lines(2, 3)[0].to_string(), "*0");
}

TEST(Lines, CountMatchesSubsetScan) {
  for (std::uint32_t N = 1; N <= 4; ++N)
    for (std::uint32_t n = 2; n <= 3; ++n) {
      const auto ls = lines(N, n);
      EXPECT_EQ(ls.size(), line_count(N, n));
      EXPECT_EQ(as_sets(ls).size(), ls.size()) << "duplicates at N=" << N << " n=" << n;
      EXPECT_EQ(as_sets(ls), scan_lines(all_words(N, n), n)) << "N=" << N << " n=" << n;
    }
}

TEST(Lines, RejectsBadParameters) {
  EXPECT_THROW(lines(0, 2), std::invalid_argument);
  EXPECT_THROW(lines(2, 1), std::invalid_argument);
  EXPECT_THROW(lines(30, 3), BudgetExceeded);
}

TEST(Phi, Examples) {
  EXPECT_EQ(phi({{0, 1}}, 2, 2), 1u);
  EXPECT_EQ(phi(all_words(2, 2), 2, 2), 3u);
  EXPECT_EQ(phi({{0, 0}, {1, 0}}, 2, 2), 2u);
  EXPECT_EQ(cover_oracle(all_words(2, 2), 2), 3u);
  EXPECT_THROW(phi({}, 2, 2), std::invalid_argument);
}

TEST(Phi, MatchesSetCoverOracle) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 150; ++t) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 2);
    const std::uint32_t N = n == 2 ? 3 : 2;
    auto words = all_words(N, n);
    std::shuffle(words.begin(), words.end(), rng);
    words.resize(1 + rng() % std::min<std::size_t>(words.size(), 9));
    EXPECT_EQ(phi(words, N, n), cover_oracle(words, n));
  }
}

TEST(Threshold, Examples) {
  EXPECT_EQ(hj_threshold(2, 2, 3), 2u);
  EXPECT_EQ(hj_threshold(2, 1, 3), 1u);
  EXPECT_EQ(hj_threshold(3, 2, 1), std::nullopt);
  EXPECT_THROW(hj_threshold(3, 2, 4), BudgetExceeded);
}

TEST(Threshold, PhiExceedsColoursAtThreshold) {
  // With 2 colours at N = 2 every colouring has a line, so no cover by 2 line-free sets exists.
  EXPECT_GE(phi(all_words(2, 2), 2, 2), 2u);
  EXPECT_GT(phi(all_words(2, 2), 2, 2), 2u);
  EXPECT_EQ(phi(all_words(1, 2), 1, 2), 2u);
}

TEST(DeltaHyperedges, Examples) {
  const std::vector<Word> line = {{0, 0}, {1, 1}, {2, 2}};
  const auto e = delta_hyperedges(2, 3, line);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].to_string(), "**");
  // Every line has a point using the letter 2.
  std::vector<Word> sample;
  for (const auto& w : all_words(3, 3))
    if (std::count(w.begin(), w.end(), 2u) == 0) sample.push_back(w);
  ASSERT_EQ(sample.size(), 8u);
  EXPECT_TRUE(delta_hyperedges(3, 3, sample).empty());
}

TEST(DeltaHyperedges, MatchesSubsetScan) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 2);
    const std::uint32_t N = 1 + static_cast<std::uint32_t>(rng() % 3);
    std::vector<Word> sample;
    for (const auto& w : all_words(N, n))
      if (rng() % 3 != 0) sample.push_back(w);
    EXPECT_EQ(as_sets(delta_hyperedges(N, n, sample)), scan_lines(sample, n));
  }
}

const LinearHypergraph& eq1() {
  static const auto h = presets::equilateral(1);
  return h;
}

TEST(Embedding, EquilateralBaseTriple) {
  const auto b = base_triple(eq1());
  const auto k = Field::eisenstein();
  EXPECT_EQ(b[0], test::pt("(1)", k));
  EXPECT_EQ(b[1], test::pt("(2)", k));
  EXPECT_EQ(b[2], test::pt("(1+w)", k));
  // (1 - w) 1 + w 2 - (1 + w) = 0
  const Scalar w = Scalar::generator(k), one(k, 1);
  EXPECT_TRUE(((one - w) * one + w * Scalar(k, 2) - (one + w)).is_zero());
}

TEST(Embedding, EmptyAndDecay) {
  const auto empty = build_embedding(eq1(), 0);
  EXPECT_EQ(empty.depth(), 0u);
  EXPECT_FALSE(verify_scheme(eq1(), empty));
  for (std::size_t M = 1; M <= 6; ++M) {
    const auto s = build_embedding(eq1(), M);
    EXPECT_FALSE(verify_scheme(eq1(), s)) << *verify_scheme(eq1(), s);
    for (std::size_t m = 1; m < M; ++m) EXPECT_LT(s.scale[m], s.scale[m - 1]);
  }
}

TEST(Embedding, TamperedSchemeFails) {
  auto s = build_embedding(eq1(), 3);
  s.levels[2] = s.levels[1];
  EXPECT_TRUE(verify_scheme(eq1(), s));
  s = build_embedding(eq1(), 3);
  s.levels[1][0] = s.levels[1][0] + s.levels[1][0];
  EXPECT_TRUE(verify_scheme(eq1(), s));
}

TEST(Embedding, PiUnfoldsDefinition) {
  const auto s = build_embedding(eq1(), 3);
  EXPECT_EQ(pi(eq1(), s, {0, 0}), s.levels[0][0] + s.levels[1][0]);
  EXPECT_EQ(pi(eq1(), s, {}), GroupPoint::zero(eq1().field(), 1));
  EXPECT_THROW(pi(eq1(), s, {0, 0, 0, 0}), std::invalid_argument);
  const auto i0 = pi(eq1(), s, {0, 0}), i1 = pi(eq1(), s, {1, 1}), i2 = pi(eq1(), s, {2, 2});
  EXPECT_TRUE(eq1().satisfies(0, i0, i1, i2));
}

TEST(Embedding, HomomorphismEquilateral) {
  const auto s = build_embedding(eq1(), 4);
  for (std::uint32_t L = 1; L <= 4; ++L)
    for (const auto& r : check_homomorphism(eq1(), s, L)) ASSERT_TRUE(r.ok()) << r.line.to_string();
}

TEST(Embedding, HomomorphismProgressionsAndPlane) {
  const auto ap = presets::ap(1);
  const auto b = base_triple(ap);
  EXPECT_EQ(b[1] + b[1], b[0] + b[2]);
  const auto s = build_embedding(ap, 4);
  EXPECT_FALSE(verify_scheme(ap, s));
  for (const auto& r : check_homomorphism(ap, s, 4)) ASSERT_TRUE(r.ok()) << r.line.to_string();
  const auto eq2 = presets::equilateral(2);
  const auto s2 = build_embedding(eq2, 3, 1);
  EXPECT_FALSE(verify_scheme(eq2, s2));
  for (const auto& r : check_homomorphism(eq2, s2, 3)) ASSERT_TRUE(r.ok()) << r.line.to_string();
}

}  // namespace
}  // namespace lincolor::hj
