#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "superkl/errors.hpp"
#include "superkl/weights.hpp"

using namespace superkl;

namespace {

Matrix01 M(const std::string& text, const TypeNC& t) { return parse_matrix(text, t); }

std::vector<std::string> rows0(const Matrix01& m, const Interval& I) {
  auto [lo, hi] = display_window(m, I);
  return m.render_rows(lo, hi);
}

}  // namespace

TEST(Interval, Basics) {
  auto I = Interval::finite(0, 1);
  EXPECT_EQ(I.plus_size(), 3);
  EXPECT_TRUE(I.contains_plus(2));
  EXPECT_FALSE(I.contains(2));
  EXPECT_THROW(Interval::finite(2, 1), Error);
  EXPECT_EQ(Interval::parse("z").kind(), Interval::Kind::AllZ);
  EXPECT_EQ(Interval::parse("geq:0"), Interval::half_up(0));
  EXPECT_EQ(Interval::parse("leq:5"), Interval::half_down(5));
  EXPECT_EQ(Interval::parse("-2:3"), Interval::finite(-2, 3));
  EXPECT_THROW(Interval::parse("a:b"), Error);
  EXPECT_THROW(Interval::parse("z").size(), Error);
}

TEST(Matrix01, WindowNormalization) {
  TypeNC t{{1, 2}, {0, 1}};
  Matrix01 a = M("@0:100/101", t);
  Matrix01 b = M("@-3:000100/111101", t);
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_text(a, Interval::finite(0, 1)), "@0:100/101");
  EXPECT_EQ(a.deviations(1), std::vector<int>{1});
  EXPECT_EQ(a.entry(1, 57), 1);
  EXPECT_EQ(a.entry(0, -9), 0);
  Matrix01 s = a.swapped(0, 0);
  EXPECT_EQ(to_text(s, Interval::finite(0, 1)), "@0:010/101");
  EXPECT_EQ(s.swapped(0, 0), a);
  EXPECT_EQ(a.row(1).with_row_appended(a.row(0)).rows_reversed(), a);
  EXPECT_EQ(a.without_last_row(), a.row(0));
  EXPECT_THROW(M("@0:10/10/10", t), Error);
  EXPECT_THROW(M("@0:12/10", t), Error);
}

TEST(Weights, EnumerateExamples) {
  TypeNC t1{{1}, {0}};
  auto w = enumerate_weights(Interval::finite(0, 0), t1);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(rows0(w[0], Interval::finite(0, 0)), std::vector<std::string>{"10"});
  EXPECT_EQ(rows0(w[1], Interval::finite(0, 0)), std::vector<std::string>{"01"});

  TypeNC t2{{1, 1}, {0, 1}};
  EXPECT_EQ(enumerate_weights(Interval::finite(0, 0), t2).size(), 4u);

  auto one = enumerate_weights(Interval::finite(0, 1), TypeNC{{3}, {0}});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(rows0(one[0], Interval::finite(0, 1)), std::vector<std::string>{"111"});

  EXPECT_THROW(enumerate_weights(Interval::all(), t1), Error);
  EXPECT_TRUE(enumerate_weights(Interval::finite(0, 0), TypeNC{{3}, {0}}).empty());
  EXPECT_EQ(enumerate_weights(Interval::finite(0, 3), TypeNC{}).size(), 1u);
}

TEST(Weights, EnumerateMatchesBruteForce) {
  std::vector<TypeNC> types = {{{1, 1}, {0, 1}}, {{2, 1, 0}, {0, 1, 1}}, {{1, 2}, {1, 0}}, {{3, 1}, {1, 1}}};
  for (int hi = 0; hi <= 2; ++hi) {
    Interval I = Interval::finite(0, hi);
    for (const auto& t : types) {
      auto fast = enumerate_weights(I, t);
      auto slow = oracle::brute_weights(I, t);
      EXPECT_EQ(fast.size(), weight_count(I, t));
      std::sort(fast.begin(), fast.end());
      std::sort(slow.begin(), slow.end());
      EXPECT_EQ(fast, slow);
    }
  }
}

TEST(Weights, EnumerationOrderIsDescendingLex) {
  Interval I = Interval::finite(0, 2);
  TypeNC t{{2, 1}, {0, 1}};
  auto w = enumerate_weights(I, t);
  for (std::size_t k = 1; k < w.size(); ++k) EXPECT_GT(rows0(w[k - 1], I), rows0(w[k], I));
}

TEST(Weights, KappaExamples) {
  EXPECT_EQ(rows0(kappa(Interval::finite(0, 1), TypeNC{{2}, {0}}), Interval::finite(0, 1)),
            std::vector<std::string>{"110"});
  EXPECT_EQ(rows0(kappa(Interval::finite(0, 1), TypeNC{{1}, {1}}), Interval::finite(0, 1)),
            std::vector<std::string>{"110"});
  EXPECT_EQ(rows0(kappa(Interval::finite(0, 0), TypeNC{{1, 1}, {0, 1}}), Interval::finite(0, 0)),
            (std::vector<std::string>{"10", "10"}));
  try {
    kappa(Interval::finite(0, 0), TypeNC{{3}, {0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyWeightSet);
  }
}

TEST(Weights, WeightOfExamples) {
  Interval I = Interval::finite(0, 1);
  EXPECT_EQ(weight_of(M("@0:110", TypeNC{{2}, {0}}), I), (WeightPI{{1, 1}}));
  EXPECT_TRUE(weight_of(kappa(I, TypeNC{{0}, {0}}), I).empty());
  // c = 1 row over Z with a single 0 at column 3: -eps_3 = varpi_2 - varpi_3.
  TypeNC t{{1}, {1}};
  Matrix01 m = M("@3:0", t);
  EXPECT_EQ(weight_of(m, Interval::all()), (WeightPI{{2, 1}, {3, -1}}));
  // Window-growth oracle: over finite windows [a, b] containing column 3, the restriction is the same.
  for (int a = -2; a <= 2; ++a)
    for (int b = 3; b <= 6; ++b) {
      WeightPI w = weight_of(m, Interval::finite(a, b));
      WeightPI expected;
      if (a <= 2) expected[2] = 1;
      if (b >= 3) expected[3] = -1;
      EXPECT_EQ(w, expected);
    }
}

TEST(Weights, DominanceExamples) {
  Interval I = Interval::finite(0, 1);
  EpsWeight beta{{0, 1}, {1, 1}}, gamma{{0, 1}, {2, 1}};
  EXPECT_TRUE(dominance_leq(beta, beta, I));
  EXPECT_TRUE(dominance_leq(gamma, beta, I));
  EXPECT_FALSE(dominance_leq(beta, gamma, I));
  EXPECT_THROW(dominance_leq(beta, EpsWeight{{0, 1}}, I), Error);
  // Incomparable pair: eps_0 + eps_2 vs 2 eps_1 over I = [0,1]... prefix sums (1,1) vs (0,2).
  EpsWeight a{{0, 1}, {2, 1}}, b{{1, 2}};
  EXPECT_FALSE(dominance_leq(a, b, I));
  EXPECT_FALSE(dominance_leq(b, a, I));
}

TEST(Weights, DominanceMatchesRootOracle) {
  Interval I = Interval::finite(0, 2);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> col(0, 3), cnt(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    EpsWeight a, b;
    for (int k = 0; k < 3; ++k) {
      a[col(rng)] += 1;
      b[col(rng)] += 1;
    }
    auto coords = oracle::root_coordinates(b, a, I);
    const bool expected = coords && std::all_of(coords->begin(), coords->end(), [](long long x) { return x >= 0; });
    EXPECT_EQ(dominance_leq(a, b, I), expected);
  }
}

TEST(Weights, OrderExamples) {
  Interval I = Interval::finite(0, 0);
  TypeNC t{{1}, {0}};
  Matrix01 a = M("@0:01", t), b = M("@0:10", t);
  EXPECT_TRUE(order_leq(a, a, I));
  // Different sl_I weights: incomparable (equality at k = l fails).
  EXPECT_FALSE(order_leq(a, b, I));
  EXPECT_FALSE(order_leq(b, a, I));
  TypeNC t2{{1, 1}, {0, 0}};
  Matrix01 lo = M("@0:10/01", t2), hi = M("@0:01/10", t2);
  EXPECT_TRUE(order_leq(lo, hi, I));
  EXPECT_FALSE(order_leq(hi, lo, I));
  EXPECT_THROW(order_leq(a, lo, I), Error);
}

TEST(Weights, OrderMatchesTP1Oracle) {
  // lambda <= mu iff |lambda_1| + ... + |lambda_k| >= |mu_1| + ... + |mu_k| for all k, equal at k = l.
  std::vector<std::pair<Interval, TypeNC>> cases = {
      {Interval::finite(0, 1), {{1, 1}, {0, 0}}},
      {Interval::finite(0, 1), {{1, 2}, {0, 1}}},
      {Interval::finite(-1, 1), {{2, 1, 1}, {0, 1, 0}}},
  };
  for (const auto& [I, t] : cases) {
    auto ws = enumerate_weights(I, t);
    for (const auto& x : ws)
      for (const auto& y : ws) {
        bool expected = true;
        for (int k = 1; k <= t.level() && expected; ++k) {
          EpsWeight sx, sy;
          for (int i = 0; i < k; ++i) {
            for (const auto& [j, v] : eps_weight(x.row(i))) sx[j] += v;
            for (const auto& [j, v] : eps_weight(y.row(i))) sy[j] += v;
          }
          std::erase_if(sx, [](auto& kv) { return kv.second == 0; });
          std::erase_if(sy, [](auto& kv) { return kv.second == 0; });
          auto coords = oracle::root_coordinates(sx, sy, I);
          expected = coords && std::all_of(coords->begin(), coords->end(), [](long long v) { return v >= 0; });
          if (k == t.level()) expected = expected && sx == sy;
        }
        EXPECT_EQ(order_leq(x, y, I), expected) << to_text(x, I) << " vs " << to_text(y, I);
      }
  }
}

TEST(Weights, OrderIsPartialOrder) {
  std::vector<std::pair<Interval, TypeNC>> cases = {
      {Interval::finite(0, 1), {{1, 1, 1}, {0, 0, 0}}},
      {Interval::finite(0, 2), {{2, 1}, {0, 1}}},
      {Interval::finite(0, 1), {{1, 2, 1}, {1, 0, 1}}},
  };
  for (const auto& [I, t] : cases) {
    auto ws = enumerate_weights(I, t);
    ASSERT_LE(ws.size(), 200u);
    for (const auto& a : ws) {
      EXPECT_TRUE(order_leq(a, a, I));
      for (const auto& b : ws) {
        const bool ab = order_leq(a, b, I);
        if (ab && order_leq(b, a, I)) EXPECT_EQ(a, b);
        if (!ab) continue;
        for (const auto& c : ws)
          if (order_leq(b, c, I)) EXPECT_TRUE(order_leq(a, c, I));
      }
    }
  }
}

TEST(Weights, KappaIsTopOfItsWeightSpace) {
  std::vector<std::pair<Interval, TypeNC>> cases = {
      {Interval::finite(0, 1), {{1, 1}, {0, 1}}},
      {Interval::finite(0, 2), {{2, 1, 1}, {0, 1, 0}}},
  };
  for (const auto& [I, t] : cases) {
    Matrix01 k = kappa(I, t);
    for (const auto& m : enumerate_weights(I, t)) {
      if (eps_weight(m) == eps_weight(k)) {
        EXPECT_TRUE(order_leq(m, k, I));
      }
      EXPECT_TRUE(dominance_leq(eps_weight(m), eps_weight(k), I));
    }
  }
}

TEST(Weights, DefectExamples) {
  Interval I = Interval::finite(0, 1);
  TypeNC t{{1, 1}, {0, 0}};
  EXPECT_EQ(defect(kappa(I, t), I, t), 0);
  EXPECT_EQ(defect(M("@0:010/100", t), I, t), 1);
  for (const auto& m : enumerate_weights(Interval::finite(0, 2), TypeNC{{2, 1, 1}, {0, 1, 0}}))
    EXPECT_GE(defect(m, Interval::finite(0, 2), TypeNC{{2, 1, 1}, {0, 1, 0}}), 0);
}

TEST(Weights, DefectWindowIndependence) {
  TypeNC t{{2, 1}, {0, 1}};
  Matrix01 m = M("@0:1010/0111", t);
  const int d0 = defect(m, Interval::all(), t);
  for (int a = -3; a <= 0; ++a)
    for (int b = 3; b <= 6; ++b) EXPECT_EQ(defect_at(m, Interval::finite(a, b), t), d0);
}

TEST(Weights, WindowMembership) {
  Interval I = Interval::finite(0, 3);
  TypeNC t{{1, 1}, {0, 1}};
  Matrix01 inside = M("@0:01000/10111", t);
  EXPECT_TRUE(in_Lambda_J(inside, Interval::finite(0, 1)));
  Matrix01 k = kappa(I, t);  // row 2 deviation at column 4
  Interval J = Interval::finite(1, 2);
  EXPECT_FALSE(in_Lambda_J(k, J));
  // Defect-free kappa of the larger window: inequalities hold, some strict.
  EXPECT_TRUE(in_leq_J(k, J, I));
  EXPECT_THROW(truncate(k, J), Error);
  EXPECT_EQ(truncate(inside, Interval::finite(0, 1)), inside);

  for (const auto& [II, tt] : std::vector<std::pair<Interval, TypeNC>>{{Interval::finite(0, 3), {{1, 1}, {0, 1}}},
                                                                       {Interval::finite(0, 3), {{2, 1}, {0, 0}}},
                                                                       {Interval::finite(-1, 2), {{1, 2, 1}, {1, 0, 1}}}}) {
    for (int a = *II.lo(); a <= *II.hi(); ++a)
      for (int b = a; b <= *II.hi(); ++b) {
        Interval JJ = Interval::finite(a, b);
        for (const auto& m : enumerate_weights(II, tt))
          EXPECT_EQ(in_Lambda_J(m, JJ), in_leq_J(m, JJ, II) && !in_lt_J(m, JJ, II)) << to_text(m, II) << " J=" << JJ.to_string();
      }
  }
}

TEST(Weights, TruncationPreservesOrder) {
  Interval I = Interval::all();
  TypeNC t{{1, 1, 1}, {0, 1, 0}};
  Interval fin = Interval::finite(-1, 3);
  auto ws = enumerate_weights(fin, t);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
  int comparable = 0;
  for (int trial = 0; trial < 4000 && comparable < 20; ++trial) {
    const auto& a = ws[pick(rng)];
    const auto& b = ws[pick(rng)];
    if (!order_leq(a, b, I) || a == b) continue;
    ++comparable;
    Interval J = minimal_window(std::vector<Matrix01>{a, b}, I, t);
    EXPECT_TRUE(order_leq(truncate(a, J), truncate(b, J), J));
    EXPECT_FALSE(order_leq(truncate(b, J), truncate(a, J), J));
  }
  EXPECT_EQ(comparable, 20);
}

TEST(Weights, EquivalentTypes) {
  Interval I = Interval::finite(0, 0);
  TypeNC t{{1}, {0}};
  EXPECT_EQ(equivalent_type(t, I, {}), t);
  TypeNC f = equivalent_type(t, I, {0});
  EXPECT_EQ(f, (TypeNC{{1}, {1}}));
  EXPECT_EQ(equivalent_type(f, I, {0}), t);
  EXPECT_THROW(equivalent_type(t, Interval::all(), {0}), Error);
  auto a = enumerate_weights(I, t);
  auto b = enumerate_weights(I, f);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(rows0(a[k], I), rows0(b[k], I));
  for (const auto& m : a) EXPECT_EQ(reexpress(reexpress(m, I, f), I, t), m);
}
