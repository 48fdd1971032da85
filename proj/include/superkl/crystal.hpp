#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "superkl/qmodule.hpp"

namespace superkl {

using Rational = boost::multiprecision::cpp_rational;

/// Row labels for colour i: '-' for (1,0) at (i,i+1), '+' for (0,1), '.' otherwise.
std::string signature(const Matrix01& m, int i);
std::optional<Matrix01> crystal_f(const Matrix01& m, int i, const Interval& I);
std::optional<Matrix01> crystal_e(const Matrix01& m, int i, const Interval& I);

bool same_block(const Matrix01& a, const Matrix01& b);

struct CrystalGraph {
  std::vector<Matrix01> vertices;
  /// f-edges keyed by (source, colour).
  std::map<std::pair<Matrix01, int>, Matrix01> edges;
};

CrystalGraph crystal_graph(const Interval& I, const TypeNC& t);
/// Connected component of kappa under crystal operators of every colour in I.
std::set<Matrix01> lambda_circ(const Interval& I, const TypeNC& t);

enum class Growth { Default, Alternate, Left, Right };

/// Windows I_1 subset I_2 subset ... inside an infinite interval, each one column larger.
std::vector<Interval> nested_windows(const Interval& I, const TypeNC& t, int count, Growth growth = Growth::Default);

struct PrinjectiveResult {
  /// Smallest r with lambda in the kappa^r component, if found within the budget.
  std::optional<int> rank;
  std::vector<Interval> windows;
};

PrinjectiveResult is_prinjective(const Matrix01& m, const Interval& I, const TypeNC& t, int r_max,
                                 Growth growth = Growth::Default);

/// Bookkeeping for one step I_r -> I_{r+1} of a window tower.
struct TowerStep {
  Interval from;
  Interval to;
  int epsilon = 1;
  int s = 0;
  int a = 0;
  /// p[j-1] = p_j.
  std::vector<int> p{};
  /// (s + eps a)^{p_a} ... (s + eps)^{p_1}.
  std::vector<int> word{};
  int d = 0;
  Rational sigma{};
};

TowerStep tower_step(const Interval& from, const Interval& to, const TypeNC& t);
/// f_{s+eps}^{(p_1)} ... f_{s+eps a}^{(p_a)} v_{kappa^{r+1}}, computed in the module over `to`.
ModuleVec apply_tower_step(const TowerStep& step, const TypeNC& t);
/// Sigma_r = sigma_1 + ... + sigma_{r-1} along a window tower.
Rational sigma_total(const std::vector<Interval>& windows, const TypeNC& t, int r);

}  // namespace superkl
