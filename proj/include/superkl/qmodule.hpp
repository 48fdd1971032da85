#pragma once

#include <map>
#include <vector>

#include "superkl/laurent.hpp"
#include "superkl/weights.hpp"

namespace superkl {

struct Context {
  Interval I;
  TypeNC t;

  friend bool operator==(const Context&, const Context&) = default;
};

/// Finitely supported combination of monomials v_lambda.
class ModuleVec {
 public:
  using Terms = std::map<Matrix01, LaurentInt>;

  explicit ModuleVec(Context ctx) : ctx_(std::move(ctx)) {}
  static ModuleVec basis(const Context& ctx, const Matrix01& m);

  const Context& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentInt coeff(const Matrix01& m) const;

  void add_term(const Matrix01& m, const LaurentInt& c);
  ModuleVec& operator+=(const ModuleVec& other);
  ModuleVec& operator-=(const ModuleVec& other);
  ModuleVec& operator*=(const LaurentInt& c);

  friend ModuleVec operator+(ModuleVec a, const ModuleVec& b) { return a += b; }
  friend ModuleVec operator-(ModuleVec a, const ModuleVec& b) { return a -= b; }
  friend ModuleVec operator*(const LaurentInt& c, ModuleVec v) { return v *= c; }
  friend bool operator==(const ModuleVec& a, const ModuleVec& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

 private:
  void require_same(const ModuleVec& other) const;

  Context ctx_;
  Terms terms_;
};

ModuleVec act_f(int j, const ModuleVec& v);
ModuleVec act_e(int j, const ModuleVec& v);
ModuleVec act_k(int j, int sign, const ModuleVec& v);
ModuleVec act_f_star(int j, const ModuleVec& v);
ModuleVec act_e_star(int j, const ModuleVec& v);
ModuleVec divided_power_f(int j, int r, const ModuleVec& v);
ModuleVec divided_power_e(int j, int r, const ModuleVec& v);
LaurentInt form(const ModuleVec& v, const ModuleVec& w);

}  // namespace superkl
