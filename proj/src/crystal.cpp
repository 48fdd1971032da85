#include "superkl/crystal.hpp"

#include <deque>

#include "superkl/errors.hpp"

namespace superkl {

std::string signature(const Matrix01& m, int i) {
  std::string sig;
  for (int r = 0; r < m.level(); ++r) {
    const int p = m.entry(r, i) - m.entry(r, i + 1);
    sig += p == 1 ? '-' : p == -1 ? '+' : '.';
  }
  return sig;
}

namespace {

// Surviving labels after cancelling every '+' above a '-'.
void reduce(const std::string& sig, std::vector<int>& minus, std::vector<int>& plus) {
  for (int r = 0; r < static_cast<int>(sig.size()); ++r) {
    if (sig[static_cast<std::size_t>(r)] == '+') {
      plus.push_back(r);
    } else if (sig[static_cast<std::size_t>(r)] == '-') {
      if (plus.empty()) minus.push_back(r);
      else plus.pop_back();
    }
  }
}

void require_color(int i, const Interval& I) {
  if (!I.contains(i)) throw Error(ErrorKind::ColorOutsideInterval, "colour " + std::to_string(i) + " not in I");
}

}  // namespace

std::optional<Matrix01> crystal_f(const Matrix01& m, int i, const Interval& I) {
  require_color(i, I);
  std::vector<int> minus, plus;
  reduce(signature(m, i), minus, plus);
  if (minus.empty()) return std::nullopt;
  return m.swapped(minus.back(), i);
}

std::optional<Matrix01> crystal_e(const Matrix01& m, int i, const Interval& I) {
  require_color(i, I);
  std::vector<int> minus, plus;
  reduce(signature(m, i), minus, plus);
  if (plus.empty()) return std::nullopt;
  return m.swapped(plus.front(), i);
}

bool same_block(const Matrix01& a, const Matrix01& b) {
  if (a.level() != b.level() || a.baselines() != b.baselines())
    throw Error(ErrorKind::ContextMismatch, "weights of different types");
  return eps_weight(a) == eps_weight(b);
}

CrystalGraph crystal_graph(const Interval& I, const TypeNC& t) {
  CrystalGraph g;
  g.vertices = enumerate_weights(I, t);
  for (const auto& v : g.vertices)
    for (int i = *I.lo(); i <= *I.hi(); ++i)
      if (auto w = crystal_f(v, i, I)) g.edges.emplace(std::make_pair(v, i), *w);
  return g;
}

std::set<Matrix01> lambda_circ(const Interval& I, const TypeNC& t) {
  if (!I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "lambda_circ needs a finite interval");
  std::set<Matrix01> seen{kappa(I, t)};
  std::deque<Matrix01> queue{*seen.begin()};
  while (!queue.empty()) {
    Matrix01 v = queue.front();
    queue.pop_front();
    for (int i = *I.lo(); i <= *I.hi(); ++i) {
      for (auto w : {crystal_f(v, i, I), crystal_e(v, i, I)})
        if (w && seen.insert(*w).second) queue.push_back(*w);
    }
  }
  return seen;
}

std::vector<Interval> nested_windows(const Interval& I, const TypeNC& t, int count, Growth growth) {
  if (I.is_finite()) throw Error(ErrorKind::InvalidArgument, "nested windows live in an infinite interval");
  const int width = std::max(1, 2 * t.max_n() - 1);
  int lo, hi;
  switch (I.kind()) {
    case Interval::Kind::HalfUp: lo = *I.lo(); hi = lo + width - 1; break;
    case Interval::Kind::HalfDown: hi = *I.hi(); lo = hi - width + 1; break;
    default: lo = 0; hi = width - 1; break;
  }
  if (growth == Growth::Default)
    growth = I.kind() == Interval::Kind::HalfUp ? Growth::Right
             : I.kind() == Interval::Kind::HalfDown ? Growth::Left
                                                    : Growth::Alternate;
  if ((growth == Growth::Left && I.lo()) || (growth == Growth::Right && I.hi()) ||
      (growth == Growth::Alternate && (I.lo() || I.hi())))
    throw Error(ErrorKind::InvalidArgument, "growth direction runs into the end of the interval");
  std::vector<Interval> out;
  for (int r = 1; r <= count; ++r) {
    out.push_back(Interval::finite(lo, hi));
    const bool left = growth == Growth::Left || (growth == Growth::Alternate && r % 2 == 1);
    if (left) --lo;
    else ++hi;
  }
  return out;
}

PrinjectiveResult is_prinjective(const Matrix01& m, const Interval& I, const TypeNC& t, int r_max, Growth growth) {
  check_member(m, I, t);
  PrinjectiveResult res;
  res.windows = nested_windows(I, t, r_max, growth);
  for (int r = 1; r <= r_max; ++r) {
    const Interval& Ir = res.windows[static_cast<std::size_t>(r - 1)];
    if (lambda_circ(Ir, t).count(m)) {
      res.rank = r;
      break;
    }
  }
  return res;
}

TowerStep tower_step(const Interval& from, const Interval& to, const TypeNC& t) {
  if (!from.is_finite() || !to.is_finite() || to.size() != from.size() + 1 || !to.contains(from))
    throw Error(ErrorKind::InvalidArgument, "tower step needs I_r inside I_{r+1} with one more column");
  TowerStep step{.from = from, .to = to};
  const bool max_fixed = *from.hi() == *to.hi();
  step.epsilon = max_fixed ? 1 : -1;
  step.s = max_fixed ? *to.lo() - 1 : *to.hi() + 1;
  const int side = max_fixed ? 0 : 1;
  for (int i = 0; i < t.level(); ++i)
    if (t.c[static_cast<std::size_t>(i)] == side) {
      step.a = std::max(step.a, t.n[static_cast<std::size_t>(i)]);
      step.d += t.n[static_cast<std::size_t>(i)];
    }
  int total = 0;
  for (int j = 1; j <= step.a; ++j) {
    int pj = 0;
    for (int i = 0; i < t.level(); ++i)
      if (t.c[static_cast<std::size_t>(i)] == side && t.n[static_cast<std::size_t>(i)] >= j) ++pj;
    step.p.push_back(pj);
    total += pj;
  }
  for (int j = step.a; j >= 1; --j)
    for (int k = 0; k < step.p[static_cast<std::size_t>(j - 1)]; ++k) step.word.push_back(step.s + step.epsilon * j);
  step.sigma = Rational(total, 2);
  return step;
}

ModuleVec apply_tower_step(const TowerStep& step, const TypeNC& t) {
  const Context ctx{step.to, t};
  ModuleVec v = ModuleVec::basis(ctx, kappa(step.to, t));
  for (int j = step.a; j >= 1; --j) v = divided_power_f(step.s + step.epsilon * j, step.p[static_cast<std::size_t>(j - 1)], v);
  return v;
}

Rational sigma_total(const std::vector<Interval>& windows, const TypeNC& t, int r) {
  Rational s = 0;
  for (int k = 1; k < r; ++k)
    s += tower_step(windows.at(static_cast<std::size_t>(k - 1)), windows.at(static_cast<std::size_t>(k)), t).sigma;
  return s;
}

}  // namespace superkl
