#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "superkl/qmodule.hpp"

namespace superkl {

/// The bar involution psi on a finite-interval module, memoised on monomials.
class BarInvolution {
 public:
  explicit BarInvolution(Context ctx);
  ~BarInvolution();

  const Context& context() const { return ctx_; }
  /// psi(v_m).
  const ModuleVec& on_basis(const Matrix01& m);
  ModuleVec apply(const ModuleVec& v);

  std::vector<std::pair<Matrix01, ModuleVec>> snapshot() const;
  void preload(const Matrix01& m, const ModuleVec& image);

 private:
  ModuleVec compute(const Matrix01& m);

  Context ctx_;
  std::unique_ptr<BarInvolution> prefix_;
  Matrix01 last_kappa_;
  mutable std::mutex mutex_;
  std::map<Matrix01, ModuleVec> memo_;
};

/// Weight space of a finite module, members in top-down order together
/// with the decomposition matrix D and its inverse.
struct Block {
  EpsWeight weight;
  std::vector<Matrix01> members;
  std::map<Matrix01, int> index;
  /// d[a][b] = d_{members[a], members[b]}; nonzero only for b <= a.
  std::vector<std::vector<LaurentInt>> d;
  /// e = d^{-1}; p_{lambda,mu}(q) = e(-q).
  std::vector<std::vector<LaurentInt>> e;
};

std::vector<Matrix01> block_members(const Matrix01& m, const Interval& I, const TypeNC& t);
/// Sorts so that mu precedes lambda whenever lambda < mu.
void sort_top_down(std::vector<Matrix01>& ms, const Interval& I);

class CanonicalSolver {
 public:
  explicit CanonicalSolver(Context ctx);

  const Context& context() const { return ctx_; }
  BarInvolution& psi() { return psi_; }

  const Block& block_of(const Matrix01& m);
  ModuleVec canonical(const Matrix01& lambda);
  ModuleVec dual_canonical(const Matrix01& mu);
  LaurentInt kl_d(const Matrix01& lambda, const Matrix01& mu);
  LaurentInt kl_p(const Matrix01& lambda, const Matrix01& mu);

 private:
  Block build(const Matrix01& m);

  Context ctx_;
  BarInvolution psi_;
  std::mutex mutex_;
  std::map<EpsWeight, std::unique_ptr<Block>> blocks_;
};

ModuleVec bar_psi(const ModuleVec& v);
ModuleVec canonical_basis(const Context& ctx, const Matrix01& lambda);
ModuleVec dual_canonical(const Context& ctx, const Matrix01& mu);
ModuleVec twisted_canonical(const Context& ctx, const Matrix01& lambda);
ModuleVec twisted_canonical(CanonicalSolver& reversed, const Context& ctx, const Matrix01& lambda);
LaurentInt kl_d(const Context& ctx, const Matrix01& lambda, const Matrix01& mu);
LaurentInt kl_p(const Context& ctx, const Matrix01& lambda, const Matrix01& mu);

/// (v_kappa, e_{i_1} ... e_{i_d} b_lambda), with e_{i_d} applied first.
LaurentInt young_word_dim(CanonicalSolver& solver, const Matrix01& lambda, const std::vector<int>& word);

/// d_{lambda,mu} over an infinite interval, evaluated at a finite window J.
LaurentInt kl_d_at(const Matrix01& lambda, const Matrix01& mu, const Interval& J, const TypeNC& t);

struct StableResult {
  LaurentInt value;
  Interval window;
  Interval check_window;
};

StableResult kl_d_stable(const Matrix01& lambda, const Matrix01& mu, const Interval& I, const TypeNC& t);

}  // namespace superkl
