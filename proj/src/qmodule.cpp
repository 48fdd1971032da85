#include "superkl/qmodule.hpp"

#include "superkl/errors.hpp"

namespace superkl {

ModuleVec ModuleVec::basis(const Context& ctx, const Matrix01& m) {
  ModuleVec v(ctx);
  v.add_term(m, 1);
  return v;
}

LaurentInt ModuleVec::coeff(const Matrix01& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentInt() : it->second;
}

void ModuleVec::add_term(const Matrix01& m, const LaurentInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void ModuleVec::require_same(const ModuleVec& other) const {
  if (!(ctx_ == other.ctx_)) throw Error(ErrorKind::ContextMismatch, "vectors live in different modules");
}

ModuleVec& ModuleVec::operator+=(const ModuleVec& other) {
  require_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ModuleVec& ModuleVec::operator-=(const ModuleVec& other) {
  require_same(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ModuleVec& ModuleVec::operator*=(const LaurentInt& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

namespace {

void require_color(int j, const Context& ctx) {
  if (!ctx.I.contains(j))
    throw Error(ErrorKind::ColorOutsideInterval, "colour " + std::to_string(j) + " not in " + ctx.I.to_string());
}

// Contribution of row r to the pairing with alpha_j.
int row_pairing(const Matrix01& m, int r, int j) { return m.entry(r, j) - m.entry(r, j + 1); }

}  // namespace

ModuleVec act_f(int j, const ModuleVec& v) {
  require_color(j, v.context());
  ModuleVec out(v.context());
  for (const auto& [m, c] : v.terms()) {
    int below = 0;
    for (int i = m.level() - 1; i >= 0; --i) {
      const int p = row_pairing(m, i, j);
      if (p == 1) out.add_term(m.swapped(i, j), c.shifted(below));
      below += p;
    }
  }
  return out;
}

ModuleVec act_e(int j, const ModuleVec& v) {
  require_color(j, v.context());
  ModuleVec out(v.context());
  for (const auto& [m, c] : v.terms()) {
    int above = 0;
    for (int i = 0; i < m.level(); ++i) {
      const int p = row_pairing(m, i, j);
      if (p == -1) out.add_term(m.swapped(i, j), c.shifted(-above));
      above += p;
    }
  }
  return out;
}

ModuleVec act_k(int j, int sign, const ModuleVec& v) {
  require_color(j, v.context());
  ModuleVec out(v.context());
  for (const auto& [m, c] : v.terms()) out.add_term(m, c.shifted(sign * alpha_pairing(m, j)));
  return out;
}

ModuleVec act_f_star(int j, const ModuleVec& v) {
  ModuleVec r = act_e(j, act_k(j, 1, v));
  return r *= LaurentInt::q_power(1);
}

ModuleVec act_e_star(int j, const ModuleVec& v) {
  ModuleVec r = act_f(j, act_k(j, -1, v));
  return r *= LaurentInt::q_power(1);
}

namespace {

template <class Act>
ModuleVec divided_power(int j, int r, const ModuleVec& v, Act act) {
  if (r < 0) throw Error(ErrorKind::InvalidArgument, "negative divided power");
  ModuleVec w = v;
  for (int k = 0; k < r; ++k) w = act(j, w);
  const LaurentInt f = qfact(r);
  ModuleVec out(v.context());
  for (const auto& [m, c] : w.terms()) out.add_term(m, div_exact(c, f));
  return out;
}

}  // namespace

ModuleVec divided_power_f(int j, int r, const ModuleVec& v) { return divided_power(j, r, v, act_f); }
ModuleVec divided_power_e(int j, int r, const ModuleVec& v) { return divided_power(j, r, v, act_e); }

LaurentInt form(const ModuleVec& v, const ModuleVec& w) {
  if (!(v.context() == w.context())) throw Error(ErrorKind::ContextMismatch, "form of vectors in different modules");
  LaurentInt s;
  for (const auto& [m, c] : v.terms()) {
    auto it = w.terms().find(m);
    if (it != w.terms().end()) s += c * it->second;
  }
  return s;
}

}  // namespace superkl
