#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superkl/laurent.hpp"
#include "superkl/weights.hpp"

namespace superkl {

struct KLRContext {
  Interval I;
  int d = 1;

  friend bool operator==(const KLRContext&, const KLRContext&) = default;
};

/// 1_i xi^a tau_w with w stored as its lexicographically smallest reduced word (letters 1..d-1).
struct KLRTerm {
  std::vector<int> idem;
  std::vector<int> exps;
  std::vector<int> word;

  friend auto operator<=>(const KLRTerm&, const KLRTerm&) = default;
};

class KLRElem {
 public:
  using Terms = std::map<KLRTerm, Integer>;

  explicit KLRElem(KLRContext ctx);

  static KLRElem idempotent(const KLRContext& ctx, const std::vector<int>& i);
  static KLRElem identity(const KLRContext& ctx);
  /// xi_k 1_i, k in 1..d.
  static KLRElem xi(const KLRContext& ctx, int k, const std::vector<int>& i);
  /// tau_j 1_i, j in 1..d-1.
  static KLRElem tau(const KLRContext& ctx, int j, const std::vector<int>& i);
  /// Sums over all idempotents.
  static KLRElem xi(const KLRContext& ctx, int k);
  static KLRElem tau(const KLRContext& ctx, int j);
  /// Adds an already normal term.
  void add_term(const KLRTerm& t, const Integer& c);

  const KLRContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string to_string() const;

  KLRElem& operator+=(const KLRElem& o);
  KLRElem& operator-=(const KLRElem& o);
  KLRElem& operator*=(const Integer& c);
  friend KLRElem operator+(KLRElem a, const KLRElem& b) { return a += b; }
  friend KLRElem operator-(KLRElem a, const KLRElem& b) { return a -= b; }
  friend bool operator==(const KLRElem& a, const KLRElem& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

 private:
  void require_same(const KLRElem& o) const;

  KLRContext ctx_;
  Terms terms_;
};

KLRElem klr_mul(const KLRElem& x, const KLRElem& y);
KLRElem operator*(const KLRElem& x, const KLRElem& y);
std::optional<int> klr_degree(const KLRElem& x);
/// Idempotent at the right end of a term.
std::vector<int> right_idempotent(const KLRTerm& t);
/// Lexicographically smallest reduced word of the permutation of a word, or nullopt if not reduced.
std::optional<std::vector<int>> canonical_word(const std::vector<int>& word, int d);
std::vector<int> longest_word(int d);
/// All words of I^d.
std::vector<std::vector<int>> idempotent_words(const Interval& I, int d);

struct RelationReport {
  long checked = 0;
  std::vector<std::string> failures;
};

RelationReport verify_relations(const Interval& I, int d);

/// tau_{w0} xi_1^{m-1} ... xi_{m-1} in the single-colour algebra.
KLRElem b_idempotent(int m, int colour = 0);

/// Integer polynomial in x_1..x_m keyed by exponent vectors.
using NilHeckePoly = std::map<std::vector<int>, Integer>;

NilHeckePoly nh_monomial(const std::vector<int>& exps, const Integer& c = 1);
NilHeckePoly nh_add(NilHeckePoly a, const NilHeckePoly& b, const Integer& scale = 1);
NilHeckePoly nilhecke_xi(int k, const NilHeckePoly& p);
/// (p - s_j p) / (x_{j+1} - x_j).
NilHeckePoly nilhecke_tau(int j, const NilHeckePoly& p);
/// Left action of a single-colour element.
NilHeckePoly nilhecke_act(const KLRElem& x, const NilHeckePoly& p);
/// Right action p.x through the anti-involution fixing the generators.
NilHeckePoly nilhecke_act_right(const KLRElem& x, const NilHeckePoly& p);

struct GradedRankReport {
  int m = 0;
  int cap = 0;
  /// Comparison holds on q-degrees up to this value.
  int exact_through = 0;
  /// Indexed by q-degree.
  std::vector<long long> image_dims;
  std::vector<long long> total_dims;
  std::vector<long long> predicted_dims;
  bool matches = false;
};

GradedRankReport nilhecke_graded_rank_check(int m, int degree_cap);

/// x^a w in the degenerate affine Hecke algebra; w in one-line notation on 0..d-1.
struct AHATerm {
  std::vector<int> exps;
  std::vector<int> perm;

  friend auto operator<=>(const AHATerm&, const AHATerm&) = default;
};

class AHAElem {
 public:
  using Terms = std::map<AHATerm, Integer>;

  explicit AHAElem(int d);
  static AHAElem one(int d);
  static AHAElem x(int d, int k);
  static AHAElem t(int d, int j);

  int d() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const AHATerm& t, const Integer& c);

  AHAElem& operator+=(const AHAElem& o);
  AHAElem& operator-=(const AHAElem& o);
  friend AHAElem operator+(AHAElem a, const AHAElem& b) { return a += b; }
  friend AHAElem operator-(AHAElem a, const AHAElem& b) { return a -= b; }
  friend bool operator==(const AHAElem&, const AHAElem&) = default;

 private:
  int d_;
  Terms terms_;
};

AHAElem aha_mul(const AHAElem& x, const AHAElem& y);
RelationReport verify_aha_relations(int d);

}  // namespace superkl
