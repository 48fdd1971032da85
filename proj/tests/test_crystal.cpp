#include <gtest/gtest.h>

#include "superkl/crystal.hpp"
#include "superkl/errors.hpp"

using namespace superkl;

namespace {

const std::vector<std::pair<Interval, TypeNC>>& finite_cases() {
  static const std::vector<std::pair<Interval, TypeNC>> c = {
      {Interval::finite(0, 1), {{1}, {0}}},
      {Interval::finite(0, 1), {{1, 1}, {0, 0}}},
      {Interval::finite(0, 2), {{1, 2}, {0, 1}}},
      {Interval::finite(-1, 1), {{2, 1, 1}, {0, 1, 0}}},
      {Interval::finite(0, 2), {{2, 2}, {1, 0}}},
  };
  return c;
}

const std::vector<TypeNC>& infinite_types() {
  static const std::vector<TypeNC> t = {
      {{1}, {0}}, {{1, 1}, {0, 0}}, {{1, 1}, {0, 1}}, {{2, 1}, {0, 1}}, {{1, 2, 1}, {1, 0, 0}},
  };
  return t;
}

}  // namespace

TEST(Crystal, SignatureCancellation) {
  TypeNC t{{1, 1}, {0, 0}};
  Interval I = Interval::finite(0, 0);
  Matrix01 plus_minus = parse_matrix("@0:01/10", t);
  EXPECT_EQ(signature(plus_minus, 0), "+-");
  EXPECT_FALSE(crystal_f(plus_minus, 0, I));
  EXPECT_FALSE(crystal_e(plus_minus, 0, I));
  Matrix01 minus_plus = parse_matrix("@0:10/01", t);
  EXPECT_EQ(signature(minus_plus, 0), "-+");
  EXPECT_EQ(*crystal_f(minus_plus, 0, I), parse_matrix("@0:01/01", t));
  EXPECT_EQ(*crystal_e(minus_plus, 0, I), parse_matrix("@0:10/10", t));
  EXPECT_THROW(crystal_f(minus_plus, 3, I), Error);

  TypeNC t3{{1, 1, 1}, {0, 0, 0}};
  Matrix01 m = parse_matrix("@0:10/01/10", t3);
  EXPECT_EQ(signature(m, 0), "-+-");
  EXPECT_EQ(*crystal_f(m, 0, I), parse_matrix("@0:01/01/10", t3));
  EXPECT_FALSE(crystal_e(m, 0, I));
}

TEST(Crystal, GraphInvariants) {
  for (const auto& [I, t] : finite_cases()) {
    CrystalGraph g = crystal_graph(I, t);
    std::map<std::pair<Matrix01, int>, int> indegree;
    for (const auto& [key, target] : g.edges) {
      const auto& [src, i] = key;
      EXPECT_EQ(*crystal_e(target, i, I), src);
      EXPECT_EQ(weight_of(target, I), weight_of(src, I) - alpha(i, I));
      EXPECT_FALSE(same_block(src, target));
      ++indegree[{target, i}];
    }
    for (const auto& [key, d] : indegree) EXPECT_EQ(d, 1);
    for (const auto& v : g.vertices)
      for (int i = *I.lo(); i <= *I.hi(); ++i)
        if (auto w = crystal_e(v, i, I)) EXPECT_EQ(*crystal_f(*w, i, I), v);
  }
}

TEST(Crystal, SameBlockRejectsMixedTypes) {
  TypeNC a{{1, 1}, {0, 0}}, b{{1, 1}, {0, 1}};
  EXPECT_THROW(same_block(parse_matrix("@0:10/10", a), parse_matrix("@0:10/10", b)), Error);
}

TEST(Crystal, LevelOneComponentIsEverything) {
  for (int hi = 0; hi <= 3; ++hi)
    for (int c = 0; c <= 1; ++c)
      for (int n = 0; n <= hi + 2; ++n) {
        Interval I = Interval::finite(0, hi);
        TypeNC t{{n}, {c}};
        auto all = enumerate_weights(I, t);
        EXPECT_EQ(lambda_circ(I, t), std::set<Matrix01>(all.begin(), all.end()));
      }
}

TEST(Crystal, LevelTwoComponentIsProper) {
  Interval I = Interval::finite(0, 1);
  TypeNC t{{1, 1}, {0, 0}};
  auto comp = lambda_circ(I, t);
  auto all = enumerate_weights(I, t);
  EXPECT_LT(comp.size(), all.size());
  EXPECT_TRUE(comp.count(kappa(I, t)));
  EXPECT_FALSE(comp.count(parse_matrix("@0:010/100", t)));
  EXPECT_THROW(lambda_circ(Interval::all(), t), Error);
}

TEST(Windows, Schedules) {
  TypeNC t{{2, 1}, {0, 1}};
  auto w = nested_windows(Interval::all(), t, 4);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0], Interval::finite(0, 2));
  EXPECT_EQ(w[1], Interval::finite(-1, 2));
  EXPECT_EQ(w[2], Interval::finite(-1, 3));
  EXPECT_EQ(w[3], Interval::finite(-2, 3));
  auto up = nested_windows(Interval::half_up(5), t, 3);
  EXPECT_EQ(up[0], Interval::finite(5, 7));
  EXPECT_EQ(up[2], Interval::finite(5, 9));
  auto down = nested_windows(Interval::half_down(5), t, 3);
  EXPECT_EQ(down[0], Interval::finite(3, 5));
  EXPECT_EQ(down[2], Interval::finite(1, 5));
  EXPECT_THROW(nested_windows(Interval::half_up(0), t, 3, Growth::Left), Error);
  EXPECT_THROW(nested_windows(Interval::finite(0, 3), t, 3), Error);
  for (std::size_t r = 0; r + 1 < w.size(); ++r) {
    EXPECT_TRUE(w[r + 1].contains(w[r]));
    EXPECT_EQ(w[r + 1].size(), w[r].size() + 1);
  }
}

TEST(Windows, ComponentsNestAndContainPreviousKappa) {
  for (const auto& t : infinite_types())
    for (Growth g : {Growth::Alternate, Growth::Left, Growth::Right}) {
      auto w = nested_windows(Interval::all(), t, 4, g);
      std::set<Matrix01> prev;
      for (std::size_t r = 0; r < w.size(); ++r) {
        auto comp = lambda_circ(w[r], t);
        for (const auto& m : prev) EXPECT_TRUE(comp.count(m)) << to_text(m, w[r]);
        if (r > 0) EXPECT_TRUE(comp.count(kappa(w[r - 1], t)));
        prev = std::move(comp);
      }
    }
}

TEST(Tower, StepData) {
  TypeNC t{{2, 1, 3}, {0, 0, 1}};
  TowerStep left = tower_step(Interval::finite(0, 4), Interval::finite(-1, 4), t);
  EXPECT_EQ(left.epsilon, 1);
  EXPECT_EQ(left.s, -2);
  EXPECT_EQ(left.a, 2);
  EXPECT_EQ(left.p, (std::vector<int>{2, 1}));
  EXPECT_EQ(left.word, (std::vector<int>{0, -1, -1}));
  EXPECT_EQ(left.d, 3);
  EXPECT_EQ(left.sigma, Rational(3, 2));
  TowerStep right = tower_step(Interval::finite(0, 4), Interval::finite(0, 5), t);
  EXPECT_EQ(right.epsilon, -1);
  EXPECT_EQ(right.s, 6);
  EXPECT_EQ(right.a, 3);
  EXPECT_EQ(right.p, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(right.word, (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(right.d, 3);
  EXPECT_EQ(right.sigma, Rational(3, 2));
  EXPECT_THROW(tower_step(Interval::finite(0, 4), Interval::finite(-1, 5), t), Error);

  auto w = nested_windows(Interval::all(), t, 4);
  Rational expect = 0;
  for (int r = 1; r <= 4; ++r) {
    EXPECT_EQ(sigma_total(w, t, r), expect);
    if (r < 4) expect += tower_step(w[static_cast<std::size_t>(r - 1)], w[static_cast<std::size_t>(r)], t).sigma;
  }
}

TEST(Tower, DividedPowerChainReachesPreviousKappa) {
  for (const auto& t : infinite_types())
    for (Growth g : {Growth::Left, Growth::Right}) {
      auto w = nested_windows(Interval::all(), t, 3, g);
      for (std::size_t r = 0; r + 1 < w.size(); ++r) {
        TowerStep step = tower_step(w[r], w[r + 1], t);
        const ModuleVec got = apply_tower_step(step, t);
        EXPECT_EQ(got, ModuleVec::basis(Context{w[r + 1], t}, kappa(w[r], t)))
            << to_text(kappa(w[r], t), w[r + 1]);
      }
    }
}

TEST(Prinjective, RanksAndBudget) {
  TypeNC t{{1, 1}, {0, 0}};
  Interval Z = Interval::all();
  auto w = nested_windows(Z, t, 3);
  auto res = is_prinjective(kappa(w[0], t), Z, t, 3);
  ASSERT_TRUE(res.rank);
  EXPECT_EQ(*res.rank, 1);
  auto later = is_prinjective(kappa(w[1], t), Z, t, 3);
  ASSERT_TRUE(later.rank);
  EXPECT_EQ(*later.rank, 2);
  EXPECT_FALSE(is_prinjective(kappa(w[1], t), Z, t, 1).rank);
  // Deviations far outside every window of the budget.
  Matrix01 far = parse_matrix("@40:10/01", t);
  EXPECT_FALSE(is_prinjective(far, Z, t, 3).rank);
}
