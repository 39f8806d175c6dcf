#include <lincolor/hypergraph/closure.hpp>
#include <lincolor/hypergraph/presets.hpp>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace lincolor {
namespace {

using test::pt;
using test::pts;

const FieldPtr Q = Field::rationals();
const FieldPtr K = Field::eisenstein();

LinearHypergraph swap_hypergraph() {
  const ExactMatrix swap(Q, 2, {0, 1, 1, 0});
  const auto two = ExactMatrix::scalar(Q, 2, 2);
  return LinearHypergraph(Q, 2, {SlimComponent(swap, two, -(swap + two))});
}

// Solves a0 x0 + a1 x1 + a2 x2 = 0 for the remaining role, over scalars only.
std::vector<Scalar> scalar_third_points(const std::vector<std::array<Scalar, 3>>& comps, const Scalar& x,
                                        const Scalar& y) {
  std::vector<Scalar> out;
  for (const auto& a : comps)
    for (int rx = 0; rx < 3; ++rx)
      for (int ry = 0; ry < 3; ++ry) {
        if (rx == ry) continue;
        const int rz = 3 - rx - ry;
        const Scalar z = -(a[rx] * x + a[ry] * y) / a[rz];
        if (z == x || z == y) continue;
        if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(z);
      }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(VerifySlim, ArithmeticProgressions) {
  const auto h = presets::ap();
  const auto r = verify_slim(h.component(0));
  EXPECT_TRUE(r.slim());
  EXPECT_TRUE(r.sum_zero);
  // The six 1x1 maps are 1, -2, 1, -1, -1, 2: none vanish.
  const auto maps = h.component(0).slim_maps();
  const long expected[6] = {1, -2, 1, -1, -1, 2};
  for (int i = 0; i < 6; ++i) EXPECT_EQ(maps[i](0, 0), Scalar(expected[i]));
}

TEST(VerifySlim, Equilateral) {
  const auto h = presets::equilateral();
  for (const auto& c : h.components()) {
    const auto r = verify_slim(c);
    EXPECT_TRUE(r.slim());
    EXPECT_TRUE(r.sum_zero);
    for (const auto& m : c.slim_maps()) EXPECT_FALSE(m(0, 0).is_zero());
  }
}

TEST(VerifySlim, DegenerateTripleRejected) {
  const auto c = SlimComponent::scalars(Q, 1, 1, -1, 0);
  const auto r = verify_slim(c);
  EXPECT_FALSE(r.slim());
  EXPECT_FALSE(r.injective[2]);
  EXPECT_FALSE(r.injective[3]);  // g0 + g1 = 0 as well
  EXPECT_THROW(LinearHypergraph(Q, 1, {c}), std::invalid_argument);
}

TEST(VerifySlim, MismatchedMatricesRejected) {
  EXPECT_THROW(SlimComponent(ExactMatrix::identity(Q, 1), ExactMatrix::identity(Q, 2), ExactMatrix::identity(Q, 1)),
               std::invalid_argument);
  EXPECT_THROW(SlimComponent(ExactMatrix::identity(Q, 1), ExactMatrix::identity(K, 1), ExactMatrix::identity(Q, 1)),
               std::invalid_argument);
}

TEST(FindHyperedges, ApOnZeroOneTwo) {
  const auto h = presets::ap();
  const auto edges = find_hyperedges(h, pts({"0", "1", "2"}));
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_EQ(edges[0].points, (std::array{pt("0"), pt("1"), pt("2")}));
  EXPECT_TRUE(h.verify(edges[0]));
  EXPECT_EQ(edges[0].in_role(1), pt("1"));
}

TEST(FindHyperedges, EquilateralTriangle) {
  const auto h = presets::equilateral();
  const Scalar w = Scalar::generator(K);
  const auto edges = find_hyperedges(h, {GroupPoint{Scalar(K, 0)}, GroupPoint{Scalar(K, 1)}, GroupPoint{w}});
  ASSERT_EQ(edges.size(), 1u);
  EXPECT_TRUE(h.verify(edges[0]));
}

TEST(FindHyperedges, TooFewPoints) {
  const auto h = presets::ap();
  EXPECT_TRUE(find_hyperedges(h, {}).empty());
  EXPECT_TRUE(find_hyperedges(h, pts({"0", "1"})).empty());
  EXPECT_TRUE(find_hyperedges(h, pts({"0", "1", "1"})).empty());
}

TEST(FindHyperedges, MatchesTripleScan) {
  std::mt19937_64 rng(11);
  for (const auto& h : {presets::ap(), presets::equilateral()}) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<GroupPoint> s;
      for (int i = 0; i < 9; ++i) s.push_back(test::random_point(rng, h.field(), 1, 2));
      s = canonical_point_set(s);
      std::vector<std::array<GroupPoint, 3>> oracle;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          for (std::size_t k = j + 1; k < s.size(); ++k) {
            bool hit = false;
            for (std::size_t c = 0; c < h.component_count(); ++c)
              for (const auto& p : kPermutations) {
                const std::array<const GroupPoint*, 3> t{&s[i], &s[j], &s[k]};
                hit = hit || h.satisfies(c, *t[p[0]], *t[p[1]], *t[p[2]]);
              }
            if (hit) oracle.push_back({s[i], s[j], s[k]});
          }
      const auto edges = find_hyperedges(h, s);
      ASSERT_EQ(edges.size(), oracle.size());
      for (std::size_t i = 0; i < edges.size(); ++i) {
        EXPECT_EQ(edges[i].points, oracle[i]);
        EXPECT_TRUE(h.verify(edges[i]));
      }
    }
  }
}

TEST(ThirdPoints, ApFromZeroAndTwo) {
  const auto h = presets::ap();
  EXPECT_EQ(third_points(h, pt("0"), pt("2")), pts({"-2", "1", "4"}));
  EXPECT_THROW(third_points(h, pt("0"), pt("0")), std::invalid_argument);
}

TEST(ThirdPoints, EquilateralFromZeroAndOne) {
  const auto h = presets::equilateral();
  const Scalar w = Scalar::generator(K);
  const Scalar one(K, 1), zero(K, 0);
  const auto expected = scalar_third_points({{one - w, w, -one}, {w, one - w, -one}}, zero, one);
  std::vector<GroupPoint> expected_points;
  for (const auto& z : expected) expected_points.push_back(GroupPoint{z});
  const auto got = third_points(h, GroupPoint{zero}, GroupPoint{one});
  EXPECT_EQ(got, expected_points);
  EXPECT_NE(std::find(got.begin(), got.end(), GroupPoint{w}), got.end());
  // The two apexes over the segment [0, 1].
  EXPECT_EQ(got.size(), 2u);
}

TEST(ThirdPoints, DegreeBoundOnRandomPairs) {
  std::mt19937_64 rng(500);
  const auto hs = {presets::ap(2), presets::equilateral(2), swap_hypergraph()};
  int trials = 0;
  for (const auto& h : hs)
    for (int i = 0; i < 200; ++i) {
      const auto x = test::random_point(rng, h.field(), h.dim(), 3);
      const auto y = test::random_point(rng, h.field(), h.dim(), 3);
      if (x == y) continue;
      const auto z = third_points(h, x, y);
      ASSERT_LE(z.size(), h.degree_bound());
      for (const auto& p : z) ASSERT_TRUE(h.hyperedge(x, y, p).has_value());
      ++trials;
    }
  EXPECT_GE(trials, 500);
}

TEST(GammaClosure, EmptySeed) {
  const auto c = gamma_closure(presets::ap(2), {});
  EXPECT_TRUE(c.basis.is_zero());
}

TEST(GammaClosure, ScalarMapsPreserveLines) {
  const auto c = gamma_closure(presets::ap(2), {pt("(1,0)")});
  EXPECT_EQ(c.basis, Basis::span(Q, 2, std::vector{pt("(1,0)")}));
}

TEST(GammaClosure, SwapFillsThePlane) {
  const auto h = swap_hypergraph();
  EXPECT_EQ(h.component(0).g(0) * pt("(1,0)"), pt("(0,1)"));
  const auto c = gamma_closure(h, {pt("(1,0)")});
  EXPECT_TRUE(c.basis.is_full());
  EXPECT_EQ(c.basis.rank(), 2u);
}

TEST(GammaClosure, EisensteinLineIsClosedOverQ) {
  // w-multiples enter through the maps, so the Q-span of 1 closes to all of Q(w).
  const auto c = gamma_closure(presets::equilateral(), {GroupPoint{Scalar(K, 1)}});
  EXPECT_EQ(c.basis.rank(), 2u);
}

TEST(GammaClosure, Properties) {
  std::mt19937_64 rng(77);
  const auto hs = {presets::ap(3), presets::equilateral(2), swap_hypergraph()};
  for (const auto& h : hs)
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<GroupPoint> seed;
      const std::size_t count = rng() % 3;
      for (std::size_t i = 0; i < count; ++i) seed.push_back(test::random_point(rng, h.field(), h.dim(), 3));
      const auto c = gamma_closure(h, seed);
      for (const auto& s : seed) ASSERT_TRUE(c.contains(s));
      // Idempotence.
      ASSERT_EQ(gamma_closure(h, c.basis.vectors()).basis, c.basis);
      ASSERT_NO_THROW(as_closed(h, c.basis));
      // Soundness, checked map by map.
      for (const auto& v : c.basis.vectors()) {
        for (std::size_t i = 0; i < h.component_count(); ++i) {
          const auto& comp = h.component(i);
          for (std::size_t r = 0; r < 3; ++r) {
            ASSERT_TRUE(c.contains(comp.g(r) * v));
            ASSERT_TRUE(c.contains(*solve(comp.g(r), v)));
          }
          for (const auto& [a, b] : {std::pair{0, 1}, {1, 2}, {0, 2}})
            ASSERT_TRUE(c.contains(*solve(comp.g(a) + comp.g(b), v)));
        }
      }
      ASSERT_FALSE(closure_defect(h, c.basis).has_value());
      // Monotonicity.
      auto bigger = seed;
      bigger.push_back(test::random_point(rng, h.field(), h.dim(), 3));
      ASSERT_TRUE(gamma_closure(h, bigger).basis.contains(c.basis));
    }
}

TEST(GammaClosure, NonClosedBasisRejected) {
  const auto h = swap_hypergraph();
  const auto line = Basis::span(Q, 2, std::vector{pt("(1,0)")});
  EXPECT_THROW(as_closed(h, line), std::invalid_argument);
  EXPECT_TRUE(closure_defect(h, line).has_value());
}

TEST(CosetPartition, Examples) {
  const auto line = Basis::span(Q, 2, std::vector{pt("(1,0)")});
  const auto classes = coset_partition(line, pts({"(0,1)", "(5,1)", "(0,2)"}));
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].members, pts({"(0,1)", "(5,1)"}));
  EXPECT_EQ(classes[0].representative, pt("(0,1)"));
  EXPECT_EQ(classes[1].members, pts({"(0,2)"}));

  EXPECT_EQ(coset_partition(Basis::full(Q, 2), pts({"(0,1)", "(5,1)", "(0,2)"})).size(), 1u);
  EXPECT_EQ(coset_partition(Basis(Q, 2), pts({"(0,1)", "(5,1)", "(0,2)", "(7,7)"})).size(), 4u);
}

TEST(CosetPartition, AgreesWithDifferenceTest) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = Basis::span(Q, 2, std::vector{test::random_point(rng, Q, 2, 2)});
    std::vector<GroupPoint> s;
    for (int i = 0; i < 12; ++i) s.push_back(test::random_point(rng, Q, 2, 2));
    const auto classes = coset_partition(a, s);
    std::map<GroupPoint, std::size_t> label;
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (const auto& x : classes[c].members) label[x] = c;
    for (const auto& x : s)
      for (const auto& y : s) ASSERT_EQ(label[x] == label[y], a.contains(x - y));
  }
}

}  // namespace
}  // namespace lincolor
