#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "superkl/errors.hpp"
#include "superkl/superweights.hpp"

using namespace superkl;

namespace {

const std::vector<TypeNC>& small_types() {
  static const std::vector<TypeNC> t = {
      {{1, 1}, {0, 1}}, {{2, 1}, {0, 1}}, {{1, 2}, {0, 1}}, {{1, 1, 1}, {0, 1, 0}}, {{1, 1, 1}, {1, 0, 0}},
  };
  return t;
}

void for_box(const TypeNC& t, int bound, const std::function<void(const SuperWeight&)>& fn) {
  const std::size_t size = parities(t).size();
  std::vector<long long> c(size, -bound);
  while (true) {
    fn(SuperWeight(t, c));
    std::size_t k = 0;
    while (k < size && c[k] == bound) c[k++] = -bound;
    if (k == size) return;
    ++c[k];
  }
}

std::multiset<long long> shifted_multiset(const SuperWeight& w) {
  auto a = shifted_pairings(w);
  return {a.begin(), a.end()};
}

}  // namespace

TEST(SuperWeights, Rho) {
  EXPECT_EQ(rho({{1, 1}, {0, 1}}).coords, (std::vector<long long>{0, 0}));
  EXPECT_EQ(rho({{2}, {0}}).coords, (std::vector<long long>{0, -1}));
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    TypeNC t;
    const int l = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < l; ++i) {
      t.n.push_back(static_cast<int>(rng() % 3));
      t.c.push_back(static_cast<int>(rng() % 2));
    }
    const auto p = parities(t);
    const auto r = rho(t).coords;
    if (p.empty()) continue;
    EXPECT_EQ(super_form(r, std::vector<long long>(p.size(), 0), p), 0);
    std::vector<long long> d1(p.size(), 0);
    d1[0] = 1;
    EXPECT_EQ(super_form(r, d1, p), p[0] ? 1 : 0);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      std::vector<long long> root(p.size(), 0);
      root[i] = 1;
      root[i + 1] = -1;
      EXPECT_EQ(super_form(r, root, p), p[i] == p[i + 1] ? (p[i] ? -1 : 1) : 0);
    }
  }
}

TEST(SuperWeights, Dictionary) {
  TypeNC t{{1, 1}, {0, 1}};
  SuperWeight zero(t, {0, 0});
  Matrix01 m = to_matrix01(zero);
  EXPECT_EQ(m.deviations(0), std::vector<int>{0});
  EXPECT_EQ(m.deviations(1), std::vector<int>{0});
  EXPECT_EQ(m.baseline(1), 1);
  EXPECT_EQ(from_matrix01(m, t), zero);

  TypeNC t2{{2, 1}, {0, 1}};
  EXPECT_THROW(to_matrix01(SuperWeight(t2, {0, 1, 0})), Error);
  try {
    to_matrix01(SuperWeight(t2, {-1, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateCoordinate);
  }
  try {
    to_matrix01(SuperWeight(t2, {-2, 0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDominant);
  }
  EXPECT_THROW(SuperWeight(t2, {0, 0}), Error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (const auto& ty : small_types()) {
    const std::size_t size = parities(ty).size();
    int done = 0;
    for (int tries = 0; done < 100 && tries < 10000; ++tries) {
      std::vector<long long> c(size);
      for (auto& x : c) x = coord(rng);
      SuperWeight w(ty, c);
      if (!is_dominant(w)) continue;
      Matrix01 mm = to_matrix01(w);
      for (int row = 0; row < ty.level(); ++row) EXPECT_EQ(mm.deviation_count(row), ty.n[static_cast<std::size_t>(row)]);
      EXPECT_EQ(from_matrix01(mm, ty), w);
      ++done;
    }
    EXPECT_EQ(done, 100);
  }
}

TEST(SuperWeights, Parity) {
  TypeNC t{{1, 2}, {0, 1}};
  EXPECT_EQ(SuperWeight(t, {5, 1, 2}).parity(), 1);
  EXPECT_EQ(SuperWeight(t, {5, 1, 3}).parity(), 0);
}

TEST(SuperWeights, Dominance) {
  TypeNC t{{2, 1}, {0, 1}};
  SuperWeight a(t, {1, 0, 0}), b(t, {0, 1, 0});
  EXPECT_TRUE(dominance_super(a, a));
  EXPECT_TRUE(dominance_super(a, b));
  EXPECT_FALSE(dominance_super(b, a));
  EXPECT_FALSE(dominance_super(a, SuperWeight(t, {0, 0, 0})));
  EXPECT_THROW(dominance_super(a, SuperWeight({{1, 2}, {0, 1}}, {1, 0, 0})), Error);
}

TEST(SuperWeights, BruhatEvenCase) {
  TypeNC t{{2}, {0}};
  for_box(t, 3, [&](const SuperWeight& x) {
    EXPECT_TRUE(bruhat_leq(x, x));
    for_box(t, 3, [&](const SuperWeight& y) {
      const bool oracle = shifted_multiset(x) == shifted_multiset(y) && dominance_super(y, x);
      EXPECT_EQ(bruhat_leq(x, y), oracle);
    });
  });
}

TEST(SuperWeights, LinkageExamples) {
  TypeNC t{{1, 1}, {0, 1}};
  SuperWeight null(t, {2, -2});
  ASSERT_EQ(shifted_pairings(null)[0], shifted_pairings(null)[1]);
  EXPECT_EQ(linkage_up(null), (std::vector<SuperWeight>{SuperWeight(t, {1, -1})}));
  EXPECT_TRUE(linkage_up(SuperWeight(t, {2, -1})).empty());

  TypeNC even{{2}, {0}};
  SuperWeight lam(even, {1, 1});
  ASSERT_EQ(shifted_pairings(lam), (std::vector<long long>{1, 0}));
  EXPECT_EQ(linkage_up(lam), (std::vector<SuperWeight>{SuperWeight(even, {0, 2})}));
  EXPECT_TRUE(linkage_up(SuperWeight(even, {0, 2})).empty());
}

TEST(SuperWeights, LinkageRefinesBruhatRefinesDominance) {
  for (const auto& t : {TypeNC{{1, 1}, {0, 1}}, TypeNC{{2, 1}, {0, 1}}, TypeNC{{1, 2}, {0, 1}}}) {
    for_box(t, 3, [&](const SuperWeight& lam) {
      std::vector<SuperWeight> frontier{lam};
      for (int depth = 0; depth < 3; ++depth) {
        std::vector<SuperWeight> next;
        for (const auto& nu : frontier)
          for (const auto& mu : linkage_up(nu)) {
            EXPECT_TRUE(bruhat_leq(mu, nu));
            EXPECT_TRUE(bruhat_leq(mu, lam));
            EXPECT_TRUE(dominance_super(lam, mu));
            next.push_back(mu);
          }
        frontier = std::move(next);
      }
      for_box(t, 3, [&](const SuperWeight& mu) {
        if (bruhat_leq(mu, lam)) EXPECT_TRUE(dominance_super(lam, mu));
      });
    });
  }
}

TEST(SuperWeights, BruhatMatchesMatrixOrder) {
  for (const auto& t : small_types()) {
    std::vector<SuperWeight> dom;
    for_box(t, 3, [&](const SuperWeight& w) {
      if (is_dominant(w)) dom.push_back(w);
    });
    ASSERT_FALSE(dom.empty());
    for (const auto& x : dom) {
      const Matrix01 mx = to_matrix01(x);
      for (const auto& y : dom) EXPECT_EQ(bruhat_leq(x, y), order_leq(mx, to_matrix01(y), Interval::all()));
    }
  }
}
