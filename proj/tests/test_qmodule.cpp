#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "superkl/errors.hpp"
#include "superkl/qmodule.hpp"

using namespace superkl;

namespace {

struct Case {
  Interval I;
  TypeNC t;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> c = {
      {Interval::finite(0, 0), {{1, 1}, {0, 0}}},
      {Interval::finite(0, 1), {{1, 2}, {0, 1}}},
      {Interval::finite(-1, 1), {{2, 1, 1}, {0, 1, 0}}},
      {Interval::finite(0, 2), {{1, 3}, {1, 0}}},
      {Interval::finite(0, 1), {{1, 1, 1}, {0, 0, 0}}},
  };
  return c;
}

ModuleVec V(const Context& ctx, const std::string& text) { return ModuleVec::basis(ctx, parse_matrix(text, ctx.t)); }

}  // namespace

TEST(QModule, ActionExamples) {
  Context c1{Interval::finite(0, 0), {{1}, {0}}};
  EXPECT_EQ(act_f(0, V(c1, "@0:10")), V(c1, "@0:01"));
  EXPECT_TRUE(act_f(0, V(c1, "@0:01")).is_zero());
  EXPECT_EQ(act_e(0, V(c1, "@0:01")), V(c1, "@0:10"));
  EXPECT_TRUE(act_e(0, V(c1, "@0:10")).is_zero());
  EXPECT_EQ(act_k(0, 1, V(c1, "@0:10")), LaurentInt::q_power(1) * V(c1, "@0:10"));

  Context c2{Interval::finite(0, 0), {{1, 1}, {0, 0}}};
  EXPECT_EQ(act_f(0, V(c2, "@0:10/10")), LaurentInt::q_power(1) * V(c2, "@0:01/10") + V(c2, "@0:10/01"));
  // Mirror: e on ([01],[01]) gives v_([10],[01]) + q v_([01],[10]).
  EXPECT_EQ(act_e(0, V(c2, "@0:01/01")), V(c2, "@0:10/01") + LaurentInt::q_power(1) * V(c2, "@0:01/10"));
  EXPECT_EQ(act_k(0, 1, V(c2, "@0:10/01")), V(c2, "@0:10/01"));
  EXPECT_THROW(act_f(1, V(c2, "@0:10/01")), Error);
  EXPECT_TRUE(act_f(0, ModuleVec(c2)).is_zero());
}

TEST(QModule, StarredActionsAtLevelOne) {
  for (int hi = 0; hi <= 2; ++hi)
    for (int c = 0; c <= 1; ++c)
      for (int n = 0; n <= hi + 2; ++n) {
        Context ctx{Interval::finite(0, hi), {{n}, {c}}};
        for (const auto& m : enumerate_weights(ctx.I, ctx.t))
          for (int j = 0; j <= hi; ++j) {
            auto v = ModuleVec::basis(ctx, m);
            EXPECT_EQ(act_f_star(j, v), act_e(j, v));
            EXPECT_EQ(act_e_star(j, v), act_f(j, v));
          }
      }
}

TEST(QModule, Sl2RelationSerreAndK) {
  for (const auto& [I, t] : cases()) {
    Context ctx{I, t};
    for (const auto& m : enumerate_weights(I, t)) {
      auto v = ModuleVec::basis(ctx, m);
      for (int j = *I.lo(); j <= *I.hi(); ++j) {
        auto lhs = act_e(j, act_f(j, v)) - act_f(j, act_e(j, v));
        EXPECT_EQ(lhs, qint(alpha_pairing(m, j)) * v) << to_text(m, I);
        auto conj = act_k(j, 1, act_f(j, act_k(j, -1, v)));
        EXPECT_EQ(conj, LaurentInt::q_power(-2) * act_f(j, v));
        EXPECT_EQ(act_k(j, 1, act_k(j, -1, v)), v);
        for (int i : {j - 1, j + 1}) {
          if (!I.contains(i)) continue;
          auto s = act_f(j, act_f(j, act_f(i, v))) - qint(2) * act_f(j, act_f(i, act_f(j, v))) +
                   act_f(i, act_f(j, act_f(j, v)));
          EXPECT_TRUE(s.is_zero());
          auto se = act_e(j, act_e(j, act_e(i, v))) - qint(2) * act_e(j, act_e(i, act_e(j, v))) +
                    act_e(i, act_e(j, act_e(j, v)));
          EXPECT_TRUE(se.is_zero());
        }
        // Different colours commute up to the standard relation e_i f_j = f_j e_i.
        for (int i = *I.lo(); i <= *I.hi(); ++i)
          if (i != j) EXPECT_EQ(act_e(i, act_f(j, v)), act_f(j, act_e(i, v)));
        // Deviation counts per row are preserved.
        const auto fv = act_f(j, v);
        for (const auto& [w, c] : fv.terms()) check_member(w, I, t);
      }
    }
  }
}

TEST(QModule, FormAdjointness) {
  std::mt19937 rng(17);
  for (const auto& [I, t] : cases()) {
    Context ctx{I, t};
    auto ws = enumerate_weights(I, t);
    for (int trial = 0; trial < 40; ++trial) {
      auto v = oracle::random_vector(ctx, ws, rng);
      auto w = oracle::random_vector(ctx, ws, rng);
      for (int j = *I.lo(); j <= *I.hi(); ++j) {
        EXPECT_EQ(form(act_f(j, v), w), form(v, act_f_star(j, w)));
        EXPECT_EQ(form(act_e(j, v), w), form(v, act_e_star(j, w)));
        EXPECT_EQ(form(act_k(j, 1, v), w), form(v, act_k(j, 1, w)));
      }
    }
  }
  Context ctx{Interval::finite(0, 0), {{1}, {0}}};
  EXPECT_EQ(form(V(ctx, "@0:10"), V(ctx, "@0:10")), LaurentInt(1));
  EXPECT_TRUE(form(V(ctx, "@0:10"), V(ctx, "@0:01")).is_zero());
  Context other{Interval::finite(0, 1), {{1}, {0}}};
  EXPECT_THROW(form(V(ctx, "@0:10"), V(other, "@0:100")), Error);
}

TEST(QModule, DividedPowers) {
  Context ctx{Interval::finite(0, 1), {{1, 1, 1}, {0, 0, 0}}};
  auto v = V(ctx, "@0:100/100/100");
  EXPECT_EQ(divided_power_f(0, 0, v), v);
  EXPECT_EQ(divided_power_f(0, 1, v), act_f(0, v));
  auto f3 = divided_power_f(0, 3, v);
  EXPECT_EQ(f3, V(ctx, "@0:010/010/010"));
  auto f2 = divided_power_f(0, 2, v);
  EXPECT_EQ(act_f(0, act_f(0, v)), qint(2) * f2);
  EXPECT_EQ(divided_power_e(0, 2, V(ctx, "@0:010/010/100")).coeff(parse_matrix("@0:100/100/100", ctx.t)),
            LaurentInt(1));
}
