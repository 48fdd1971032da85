#include <numeric>

#include "superkl/errors.hpp"
#include "superkl/klr.hpp"

namespace superkl {

namespace {

constexpr int kMaxAhaDegree = 5;

std::vector<int> identity_perm(int d) {
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Reduced word of a permutation by bubble sort, leftmost letter first.
std::vector<int> word_of(std::vector<int> p) {
  std::vector<int> rev;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        rev.push_back(static_cast<int>(i + 1));
        swapped = true;
      }
  }
  return {rev.rbegin(), rev.rend()};
}

// (s_j f - f) / (x_j - x_{j+1}) on a monomial.
std::map<std::vector<int>, Integer> delta(int j, const std::vector<int>& e) {
  std::map<std::vector<int>, Integer> out;
  const auto a_idx = static_cast<std::size_t>(j - 1), b_idx = static_cast<std::size_t>(j);
  const int a = e[a_idx], b = e[b_idx];
  if (a == b) return out;
  const int lo = std::min(a, b), gap = std::abs(a - b);
  const Integer sign = a > b ? -1 : 1;
  for (int i = 0; i < gap; ++i) {
    auto f = e;
    f[a_idx] = lo + i;
    f[b_idx] = lo + gap - 1 - i;
    out[f] += sign;
  }
  return out;
}

}  // namespace

AHAElem::AHAElem(int d) : d_(d) {
  if (d < 1 || d > kMaxAhaDegree) throw Error(ErrorKind::BudgetExceeded, "affine Hecke computations limited to d <= 5");
}

AHAElem AHAElem::one(int d) {
  AHAElem e(d);
  e.add_term({std::vector<int>(static_cast<std::size_t>(d), 0), identity_perm(d)}, 1);
  return e;
}

AHAElem AHAElem::x(int d, int k) {
  AHAElem e(d);
  if (k < 1 || k > d) throw Error(ErrorKind::InvalidArgument, "x index out of range");
  std::vector<int> exps(static_cast<std::size_t>(d), 0);
  exps[static_cast<std::size_t>(k - 1)] = 1;
  e.add_term({exps, identity_perm(d)}, 1);
  return e;
}

AHAElem AHAElem::t(int d, int j) {
  AHAElem e(d);
  if (j < 1 || j >= d) throw Error(ErrorKind::InvalidArgument, "t index out of range");
  auto p = identity_perm(d);
  std::swap(p[static_cast<std::size_t>(j - 1)], p[static_cast<std::size_t>(j)]);
  e.add_term({std::vector<int>(static_cast<std::size_t>(d), 0), p}, 1);
  return e;
}

void AHAElem::add_term(const AHATerm& t, const Integer& c) {
  if (c == 0) return;
  Integer& slot = terms_[t];
  slot += c;
  if (slot == 0) terms_.erase(t);
}

AHAElem& AHAElem::operator+=(const AHAElem& o) {
  if (o.d_ != d_) throw Error(ErrorKind::ContextMismatch, "affine Hecke elements of different rank");
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

AHAElem& AHAElem::operator-=(const AHAElem& o) {
  if (o.d_ != d_) throw Error(ErrorKind::ContextMismatch, "affine Hecke elements of different rank");
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

AHAElem aha_mul(const AHAElem& x, const AHAElem& y) {
  if (x.d() != y.d()) throw Error(ErrorKind::ContextMismatch, "affine Hecke elements of different rank");
  const int d = x.d();
  AHAElem out(d);
  for (const auto& [a, ca] : x.terms()) {
    const auto word = word_of(a.perm);
    for (const auto& [b, cb] : y.terms()) {
      // w x^b as a combination of x^c u, letters of w applied from the right.
      std::map<AHATerm, Integer> cur{{{b.exps, identity_perm(d)}, 1}};
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int j = *it;
        std::map<AHATerm, Integer> next;
        for (const auto& [t, c] : cur) {
          AHATerm moved = t;
          std::swap(moved.exps[static_cast<std::size_t>(j - 1)], moved.exps[static_cast<std::size_t>(j)]);
          // t_j u as a permutation: compose on the left.
          for (auto& v : moved.perm)
            if (v == j - 1) v = j;
            else if (v == j) v = j - 1;
          next[moved] += c;
          for (const auto& [e, dc] : delta(j, t.exps)) next[{e, t.perm}] += c * dc;
        }
        cur = std::move(next);
      }
      for (const auto& [t, c] : cur) {
        if (c == 0) continue;
        AHATerm r;
        r.exps = t.exps;
        for (std::size_t k = 0; k < r.exps.size(); ++k) r.exps[k] += a.exps[k];
        r.perm.resize(static_cast<std::size_t>(d));
        for (std::size_t k = 0; k < r.perm.size(); ++k) r.perm[k] = t.perm[static_cast<std::size_t>(b.perm[k])];
        out.add_term(r, ca * cb * c);
      }
    }
  }
  return out;
}

RelationReport verify_aha_relations(int d) {
  if (d < 1 || d > 4) throw Error(ErrorKind::BudgetExceeded, "relation sweep limited to d <= 4");
  RelationReport rep;
  auto check = [&](const std::string& name, const AHAElem& l, const AHAElem& r) {
    ++rep.checked;
    if (!(l == r)) rep.failures.push_back(name);
  };
  const AHAElem one = AHAElem::one(d);
  for (int j = 1; j < d; ++j) {
    const AHAElem tj = AHAElem::t(d, j);
    check("t^2 " + std::to_string(j), aha_mul(tj, tj), one);
    for (int k = 1; k <= d; ++k) {
      const int tk = k == j ? j + 1 : k == j + 1 ? j : k;
      AHAElem rhs(d);
      if (k == j + 1) rhs = one;
      if (k == j) rhs -= one;
      check("AH " + std::to_string(j) + " " + std::to_string(k),
            aha_mul(tj, AHAElem::x(d, k)) - aha_mul(AHAElem::x(d, tk), tj), rhs);
    }
    for (int k = 1; k < d; ++k) {
      const AHAElem tk = AHAElem::t(d, k);
      if (std::abs(j - k) > 1) check("commute " + std::to_string(j) + " " + std::to_string(k), aha_mul(tj, tk), aha_mul(tk, tj));
      if (k == j + 1)
        check("braid " + std::to_string(j), aha_mul(aha_mul(tj, tk), tj), aha_mul(aha_mul(tk, tj), tk));
    }
  }
  for (int k = 1; k <= d; ++k)
    for (int m = 1; m <= d; ++m)
      check("x commute", aha_mul(AHAElem::x(d, k), AHAElem::x(d, m)), aha_mul(AHAElem::x(d, m), AHAElem::x(d, k)));
  return rep;
}

}  // namespace superkl
