#include "superkl/canonical.hpp"

#include <algorithm>
#include <functional>

#include "superkl/errors.hpp"

namespace superkl {

BarInvolution::BarInvolution(Context ctx) : ctx_(std::move(ctx)) {
  if (!ctx_.I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "psi needs a finite interval; truncate first");
  ctx_.t.validate();
  const int l = ctx_.t.level();
  if (l >= 2) prefix_ = std::make_unique<BarInvolution>(Context{ctx_.I, ctx_.t.without_last()});
  if (l >= 1) {
    TypeNC last{{ctx_.t.n.back()}, {ctx_.t.c.back()}};
    if (last.n[0] <= ctx_.I.plus_size()) last_kappa_ = kappa(ctx_.I, last);
  }
}

BarInvolution::~BarInvolution() = default;

const ModuleVec& BarInvolution::on_basis(const Matrix01& m) {
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
  }
  check_member(m, ctx_.I, ctx_.t);
  ModuleVec image = compute(m);
  std::lock_guard lock(mutex_);
  return memo_.emplace(m, std::move(image)).first->second;
}

ModuleVec BarInvolution::compute(const Matrix01& m) {
  const int l = m.level();
  if (l <= 1) return ModuleVec::basis(ctx_, m);
  const Matrix01 head = m.without_last_row();
  const Matrix01 w = m.row(l - 1);
  ModuleVec out(ctx_);
  if (w == last_kappa_) {
    for (const auto& [h, c] : prefix_->on_basis(head).terms()) out.add_term(h.with_row_appended(w), c);
    return out;
  }
  int j = *ctx_.I.lo();
  while (!(w.entry(0, j) == 0 && w.entry(0, j + 1) == 1)) ++j;
  const Matrix01 v = w.swapped(0, j);
  const LaurentInt scale = -LaurentInt::q_power(-alpha_pairing(v, j));
  out = act_f(j, on_basis(head.with_row_appended(v)));
  const ModuleVec fhead = act_f(j, ModuleVec::basis(prefix_->context(), head));
  for (const auto& [h, c] : fhead.terms()) {
    const LaurentInt k = scale * c.bar();
    for (const auto& [x, y] : on_basis(h.with_row_appended(v)).terms()) out.add_term(x, k * y);
  }
  return out;
}

ModuleVec BarInvolution::apply(const ModuleVec& v) {
  if (!(v.context() == ctx_)) throw Error(ErrorKind::ContextMismatch, "psi applied to a vector of another module");
  ModuleVec out(ctx_);
  for (const auto& [m, c] : v.terms()) {
    const LaurentInt cb = c.bar();
    for (const auto& [x, y] : on_basis(m).terms()) out.add_term(x, cb * y);
  }
  return out;
}

std::vector<std::pair<Matrix01, ModuleVec>> BarInvolution::snapshot() const {
  std::lock_guard lock(mutex_);
  return {memo_.begin(), memo_.end()};
}

void BarInvolution::preload(const Matrix01& m, const ModuleVec& image) {
  if (!(image.context() == ctx_)) throw Error(ErrorKind::ContextMismatch, "preloaded image of another module");
  std::lock_guard lock(mutex_);
  memo_.emplace(m, image);
}

// ---------------------------------------------------------------------------

std::vector<Matrix01> block_members(const Matrix01& m, const Interval& I, const TypeNC& t) {
  if (!I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "blocks are enumerated over finite intervals");
  check_member(m, I, t);
  const int lo = *I.lo();
  const int N = I.plus_size();
  std::vector<int> residual(static_cast<std::size_t>(N), 0);
  for (const auto& [j, v] : eps_weight(m)) residual[static_cast<std::size_t>(j - lo)] = static_cast<int>(v);
  const int l = t.level();
  std::vector<int> c0_after(static_cast<std::size_t>(l) + 1, 0), c1_after(static_cast<std::size_t>(l) + 1, 0);
  for (int i = l - 1; i >= 0; --i) {
    c0_after[static_cast<std::size_t>(i)] = c0_after[static_cast<std::size_t>(i) + 1] + (t.c[static_cast<std::size_t>(i)] == 0);
    c1_after[static_cast<std::size_t>(i)] = c1_after[static_cast<std::size_t>(i) + 1] + (t.c[static_cast<std::size_t>(i)] == 1);
  }
  std::vector<Matrix01> out;
  Matrix01 current(std::vector<std::uint8_t>(t.c.begin(), t.c.end()));
  std::function<void(int)> row = [&](int i) {
    if (i == l) {
      out.push_back(current);
      return;
    }
    const int sign = t.c[static_cast<std::size_t>(i)] ? -1 : 1;
    const int n = t.n[static_cast<std::size_t>(i)];
    std::vector<int> chosen;
    std::function<void(int, int)> pick = [&](int start, int left) {
      if (left == 0) {
        for (int k = 0; k < N; ++k) {
          const int r = residual[static_cast<std::size_t>(k)];
          if (r > c0_after[static_cast<std::size_t>(i) + 1] || r < -c1_after[static_cast<std::size_t>(i) + 1]) return;
        }
        for (int col : chosen) current.set_deviation(i, col, true);
        row(i + 1);
        for (int col : chosen) current.set_deviation(i, col, false);
        return;
      }
      for (int k = start; k <= N - left; ++k) {
        residual[static_cast<std::size_t>(k)] -= sign;
        chosen.push_back(lo + k);
        pick(k + 1, left - 1);
        chosen.pop_back();
        residual[static_cast<std::size_t>(k)] += sign;
      }
    };
    pick(0, n);
  };
  row(0);
  return out;
}

void sort_top_down(std::vector<Matrix01>& ms, const Interval& I) {
  if (!I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "sorting needs a finite interval");
  const int lo = *I.lo(), hi = *I.hi();
  auto score = [&](const Matrix01& m) {
    long long s = 0;
    const int l = m.level();
    for (int i = 0; i < l; ++i) {
      const int sign = m.baseline(i) ? -1 : 1;
      for (int j : m.deviations(i)) s += static_cast<long long>(l - i) * sign * std::max(0, hi - std::max(j, lo) + 1);
    }
    return s;
  };
  std::vector<std::pair<long long, Matrix01>> keyed;
  for (auto& m : ms) keyed.emplace_back(score(m), std::move(m));
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t k = 0; k < keyed.size(); ++k) ms[k] = std::move(keyed[k].second);
}

CanonicalSolver::CanonicalSolver(Context ctx) : ctx_(ctx), psi_(std::move(ctx)) {}

Block CanonicalSolver::build(const Matrix01& m) {
  Block blk;
  blk.weight = eps_weight(m);
  blk.members = block_members(m, ctx_.I, ctx_.t);
  sort_top_down(blk.members, ctx_.I);
  const int B = static_cast<int>(blk.members.size());
  for (int a = 0; a < B; ++a) blk.index.emplace(blk.members[static_cast<std::size_t>(a)], a);

  auto non_triangular = [&](int a, int b) {
    return Error(ErrorKind::NonTriangularBar,
                 "psi(v_" + to_text(blk.members[static_cast<std::size_t>(a)], ctx_.I) + ") involves v_" +
                     to_text(blk.members[static_cast<std::size_t>(b)], ctx_.I) + " outside the upper triangle");
  };
  std::vector<std::vector<LaurentInt>> r(static_cast<std::size_t>(B), std::vector<LaurentInt>(static_cast<std::size_t>(B)));
  for (int a = 0; a < B; ++a) {
    const Matrix01& lam = blk.members[static_cast<std::size_t>(a)];
    for (const auto& [nu, c] : psi_.on_basis(lam).terms()) {
      auto it = blk.index.find(nu);
      if (it == blk.index.end())
        throw Error(ErrorKind::NonTriangularBar, "psi does not preserve the weight space of " + to_text(lam, ctx_.I));
      const int b = it->second;
      if (b == a ? !(c == LaurentInt(1)) : !order_leq(lam, nu, ctx_.I)) throw non_triangular(a, b);
      r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
    }
    if (r[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)].is_zero()) throw non_triangular(a, a);
  }

  auto& d = blk.d;
  d.assign(static_cast<std::size_t>(B), std::vector<LaurentInt>(static_cast<std::size_t>(B)));
  for (int a = 0; a < B; ++a) {
    auto& row = d[static_cast<std::size_t>(a)];
    row[static_cast<std::size_t>(a)] = 1;
    for (int b = a - 1; b >= 0; --b) {
      LaurentInt s;
      for (int c = b + 1; c <= a; ++c) {
        const auto& x = row[static_cast<std::size_t>(c)];
        const auto& y = r[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)];
        if (!x.is_zero() && !y.is_zero()) s += x.bar() * y;
      }
      if (!(s.bar() == -s)) throw non_triangular(a, b);
      row[static_cast<std::size_t>(b)] = s.positive_part();
      if (!row[static_cast<std::size_t>(b)].is_zero() &&
          !order_leq(blk.members[static_cast<std::size_t>(a)], blk.members[static_cast<std::size_t>(b)], ctx_.I))
        throw non_triangular(a, b);
    }
  }

  auto& e = blk.e;
  e.assign(static_cast<std::size_t>(B), std::vector<LaurentInt>(static_cast<std::size_t>(B)));
  for (int a = 0; a < B; ++a) {
    auto& row = e[static_cast<std::size_t>(a)];
    row[static_cast<std::size_t>(a)] = 1;
    for (int b = a - 1; b >= 0; --b) {
      LaurentInt s;
      for (int c = b + 1; c <= a; ++c) {
        const auto& x = row[static_cast<std::size_t>(c)];
        const auto& y = d[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)];
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
      row[static_cast<std::size_t>(b)] = -s;
    }
  }
  return blk;
}

const Block& CanonicalSolver::block_of(const Matrix01& m) {
  const EpsWeight w = eps_weight(m);
  {
    std::lock_guard lock(mutex_);
    auto it = blocks_.find(w);
    if (it != blocks_.end()) return *it->second;
  }
  auto blk = std::make_unique<Block>(build(m));
  std::lock_guard lock(mutex_);
  return *blocks_.emplace(w, std::move(blk)).first->second;
}

ModuleVec CanonicalSolver::canonical(const Matrix01& lambda) {
  const Block& blk = block_of(lambda);
  const auto& row = blk.d[static_cast<std::size_t>(blk.index.at(lambda))];
  ModuleVec out(ctx_);
  for (std::size_t b = 0; b < row.size(); ++b) out.add_term(blk.members[b], row[b]);
  return out;
}

ModuleVec CanonicalSolver::dual_canonical(const Matrix01& mu) {
  const Block& blk = block_of(mu);
  const auto col = static_cast<std::size_t>(blk.index.at(mu));
  ModuleVec out(ctx_);
  for (std::size_t a = 0; a < blk.members.size(); ++a) out.add_term(blk.members[a], blk.e[a][col]);
  return out;
}

LaurentInt CanonicalSolver::kl_d(const Matrix01& lambda, const Matrix01& mu) {
  check_member(mu, ctx_.I, ctx_.t);
  const Block& blk = block_of(lambda);
  auto it = blk.index.find(mu);
  if (it == blk.index.end()) return {};
  return blk.d[static_cast<std::size_t>(blk.index.at(lambda))][static_cast<std::size_t>(it->second)];
}

LaurentInt CanonicalSolver::kl_p(const Matrix01& lambda, const Matrix01& mu) {
  check_member(mu, ctx_.I, ctx_.t);
  const Block& blk = block_of(lambda);
  auto it = blk.index.find(mu);
  if (it == blk.index.end()) return {};
  return blk.e[static_cast<std::size_t>(blk.index.at(lambda))][static_cast<std::size_t>(it->second)].at_negative_q();
}

// ---------------------------------------------------------------------------

ModuleVec bar_psi(const ModuleVec& v) { return BarInvolution(v.context()).apply(v); }

ModuleVec canonical_basis(const Context& ctx, const Matrix01& lambda) {
  return CanonicalSolver(ctx).canonical(lambda);
}

ModuleVec dual_canonical(const Context& ctx, const Matrix01& mu) { return CanonicalSolver(ctx).dual_canonical(mu); }

LaurentInt kl_d(const Context& ctx, const Matrix01& lambda, const Matrix01& mu) {
  return CanonicalSolver(ctx).kl_d(lambda, mu);
}

LaurentInt kl_p(const Context& ctx, const Matrix01& lambda, const Matrix01& mu) {
  return CanonicalSolver(ctx).kl_p(lambda, mu);
}

ModuleVec twisted_canonical(CanonicalSolver& reversed, const Context& ctx, const Matrix01& lambda) {
  if (!(reversed.context().t == ctx.t.reversed()) || !(reversed.context().I == ctx.I))
    throw Error(ErrorKind::ContextMismatch, "twisted basis needs the row-reversed module");
  check_member(lambda, ctx.I, ctx.t);
  const Block& blk = reversed.block_of(lambda.rows_reversed());
  const auto& row = blk.d[static_cast<std::size_t>(blk.index.at(lambda.rows_reversed()))];
  ModuleVec out(ctx);
  for (std::size_t b = 0; b < row.size(); ++b) out.add_term(blk.members[b].rows_reversed(), row[b].bar());
  return out;
}

ModuleVec twisted_canonical(const Context& ctx, const Matrix01& lambda) {
  CanonicalSolver reversed(Context{ctx.I, ctx.t.reversed()});
  return twisted_canonical(reversed, ctx, lambda);
}

LaurentInt young_word_dim(CanonicalSolver& solver, const Matrix01& lambda, const std::vector<int>& word) {
  ModuleVec v = solver.canonical(lambda);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = act_e(*it, v);
  return v.coeff(kappa(solver.context().I, solver.context().t));
}

LaurentInt kl_d_at(const Matrix01& lambda, const Matrix01& mu, const Interval& J, const TypeNC& t) {
  CanonicalSolver solver(Context{J, t});
  return solver.kl_d(truncate(lambda, J), truncate(mu, J));
}

StableResult kl_d_stable(const Matrix01& lambda, const Matrix01& mu, const Interval& I, const TypeNC& t) {
  if (I.is_finite()) throw Error(ErrorKind::InvalidArgument, "kl_d_stable is for infinite intervals");
  check_member(lambda, I, t);
  check_member(mu, I, t);
  const Interval J = minimal_window(std::vector<Matrix01>{lambda, mu}, I, t);
  int lo = *J.lo(), hi = *J.hi();
  if (!I.lo() || lo > *I.lo()) --lo;
  if (!I.hi() || hi < *I.hi()) ++hi;
  const Interval J2 = Interval::finite(lo, hi);
  if (!(eps_weight(lambda) == eps_weight(mu))) return {LaurentInt(), J, J2};
  const LaurentInt a = kl_d_at(lambda, mu, J, t);
  const LaurentInt b = kl_d_at(lambda, mu, J2, t);
  if (!(a == b))
    throw Error(ErrorKind::StabilityViolation, "d changed from " + a.to_string() + " at " + J.to_string() + " to " +
                                                   b.to_string() + " at " + J2.to_string());
  return {a, J, J2};
}

}  // namespace superkl
