#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

#include "superkl/errors.hpp"
#include "superkl/klr.hpp"

namespace superkl {

using Rational = boost::multiprecision::cpp_rational;

NilHeckePoly nh_monomial(const std::vector<int>& exps, const Integer& c) {
  NilHeckePoly p;
  if (c != 0) p[exps] = c;
  return p;
}

NilHeckePoly nh_add(NilHeckePoly a, const NilHeckePoly& b, const Integer& scale) {
  for (const auto& [e, c] : b) {
    Integer& slot = a[e];
    slot += scale * c;
    if (slot == 0) a.erase(e);
  }
  return a;
}

NilHeckePoly nilhecke_xi(int k, const NilHeckePoly& p) {
  NilHeckePoly out;
  for (const auto& [e, c] : p) {
    auto f = e;
    ++f[static_cast<std::size_t>(k - 1)];
    out[f] = c;
  }
  return out;
}

NilHeckePoly nilhecke_tau(int j, const NilHeckePoly& p) {
  NilHeckePoly out;
  const auto a_idx = static_cast<std::size_t>(j - 1), b_idx = static_cast<std::size_t>(j);
  for (const auto& [e, c] : p) {
    const int a = e[a_idx], b = e[b_idx];
    if (a == b) continue;
    const int lo = std::min(a, b), gap = std::abs(a - b);
    const Integer sign = a > b ? -1 : 1;
    for (int i = 0; i < gap; ++i) {
      auto f = e;
      f[a_idx] = lo + i;
      f[b_idx] = lo + gap - 1 - i;
      out = nh_add(std::move(out), nh_monomial(f, sign * c));
    }
  }
  return out;
}

namespace {

void require_single_colour(const KLRElem& x, std::size_t vars) {
  if (x.context().I.size() != 1 || static_cast<std::size_t>(x.context().d) != vars)
    throw Error(ErrorKind::ContextMismatch, "polynomial representation needs one colour and matching rank");
}

}  // namespace

NilHeckePoly nilhecke_act(const KLRElem& x, const NilHeckePoly& p) {
  NilHeckePoly out;
  for (const auto& [t, c] : x.terms()) {
    require_single_colour(x, t.exps.size());
    NilHeckePoly v = p;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) v = nilhecke_tau(*it, v);
    for (std::size_t k = 0; k < t.exps.size(); ++k)
      for (int r = 0; r < t.exps[k]; ++r) v = nilhecke_xi(static_cast<int>(k + 1), v);
    out = nh_add(std::move(out), v, c);
  }
  return out;
}

NilHeckePoly nilhecke_act_right(const KLRElem& x, const NilHeckePoly& p) {
  NilHeckePoly out;
  for (const auto& [t, c] : x.terms()) {
    require_single_colour(x, t.exps.size());
    NilHeckePoly v = p;
    for (std::size_t k = 0; k < t.exps.size(); ++k)
      for (int r = 0; r < t.exps[k]; ++r) v = nilhecke_xi(static_cast<int>(k + 1), v);
    for (int j : t.word) v = nilhecke_tau(j, v);
    out = nh_add(std::move(out), v, c);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> monomials_of_degree(int m, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == m - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, deg);
  return out;
}

long long rank_of(std::vector<std::vector<Rational>> rows) {
  long long rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<long long>(rows.size()); ++c) {
    auto r0 = static_cast<std::size_t>(rank);
    std::size_t piv = r0;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r0]);
    for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[r0][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[r0][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

GradedRankReport nilhecke_graded_rank_check(int m, int degree_cap) {
  if (m < 1 || m > 4 || degree_cap < 0 || degree_cap > 24)
    throw Error(ErrorKind::BudgetExceeded, "graded rank check limited to m <= 4 and cap <= 24");
  const KLRElem b = b_idempotent(m);
  GradedRankReport rep;
  rep.m = m;
  rep.cap = degree_cap;
  rep.exact_through = degree_cap - m * (m - 1);
  rep.image_dims.assign(static_cast<std::size_t>(degree_cap + 1), 0);
  rep.total_dims.assign(static_cast<std::size_t>(degree_cap + 1), 0);
  for (int k = 0; 2 * k <= degree_cap; ++k) {
    const auto basis = monomials_of_degree(m, k);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<std::vector<Rational>> rows;
    for (const auto& mono : basis) {
      std::vector<Rational> row(basis.size(), 0);
      for (const auto& [e, c] : nilhecke_act_right(b, nh_monomial(mono))) row.at(index.at(e)) = Rational(c);
      rows.push_back(std::move(row));
    }
    rep.total_dims[static_cast<std::size_t>(2 * k)] = static_cast<long long>(basis.size());
    rep.image_dims[static_cast<std::size_t>(2 * k)] = rank_of(std::move(rows));
  }
  // Predicted image series q^{m(m-1)/2} T(q) / [m]!, with [m]! = q^{-m(m-1)/2} F(q) and F(0) = 1.
  LaurentInt F = qfact(m).shifted(m * (m - 1) / 2);
  std::vector<Integer> numer(static_cast<std::size_t>(degree_cap + 1), 0);
  for (int e = 0; e <= degree_cap; ++e) {
    const int src = e - m * (m - 1);
    if (src >= 0) numer[static_cast<std::size_t>(e)] = rep.total_dims[static_cast<std::size_t>(src)];
  }
  std::vector<Integer> quot(static_cast<std::size_t>(degree_cap + 1), 0);
  for (int e = 0; e <= degree_cap; ++e) {
    Integer v = numer[static_cast<std::size_t>(e)];
    for (int k = 1; k <= e; ++k) v -= F.coeff(k) * quot[static_cast<std::size_t>(e - k)];
    quot[static_cast<std::size_t>(e)] = v;
  }
  rep.predicted_dims.assign(quot.size(), 0);
  rep.matches = true;
  for (int e = 0; e <= degree_cap; ++e) {
    rep.predicted_dims[static_cast<std::size_t>(e)] = static_cast<long long>(quot[static_cast<std::size_t>(e)]);
    if (e <= rep.exact_through && quot[static_cast<std::size_t>(e)] != rep.image_dims[static_cast<std::size_t>(e)])
      rep.matches = false;
  }
  return rep;
}

}  // namespace superkl
