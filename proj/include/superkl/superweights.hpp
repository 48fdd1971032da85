#pragma once

#include <vector>

#include "superkl/weights.hpp"

namespace superkl {

/// Integral weight of gl(m|n) in the delta basis; parities follow the blocks of the type.
struct SuperWeight {
  TypeNC type;
  std::vector<long long> coords;

  /// Throws TypeMismatch unless there is one coordinate per type slot.
  SuperWeight(TypeNC t, std::vector<long long> c);

  std::vector<int> parities() const;
  /// Sum of the odd coordinates mod 2.
  int parity() const;

  friend bool operator==(const SuperWeight&, const SuperWeight&) = default;
  friend auto operator<=>(const SuperWeight& a, const SuperWeight& b) { return a.coords <=> b.coords; }
};

std::vector<int> parities(const TypeNC& t);
SuperWeight rho(const TypeNC& t);
/// (delta_i, delta_j) = (-1)^{p_i} delta_ij extended bilinearly.
long long super_form(const std::vector<long long>& x, const std::vector<long long>& y, const std::vector<int>& p);
/// (lambda + rho, delta_i) for every i.
std::vector<long long> shifted_pairings(const SuperWeight& lambda);
bool is_dominant(const SuperWeight& lambda);

Matrix01 to_matrix01(const SuperWeight& lambda);
SuperWeight from_matrix01(const Matrix01& m, const TypeNC& t);

bool bruhat_leq(const SuperWeight& lambda, const SuperWeight& mu);
/// lambda - mu is a sum of positive roots.
bool dominance_super(const SuperWeight& lambda, const SuperWeight& mu);
/// All mu with mu linked up to lambda by a single even reflection or odd root.
std::vector<SuperWeight> linkage_up(const SuperWeight& lambda);

}  // namespace superkl
