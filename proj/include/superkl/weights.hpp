#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace superkl {

/// Contiguous subset of Z; an absent bound means unbounded on that side.
class Interval {
 public:
  enum class Kind { Finite, HalfUp, HalfDown, AllZ };

  static Interval finite(int lo, int hi);
  static Interval half_up(int lo);
  static Interval half_down(int hi);
  static Interval all();

  Kind kind() const;
  bool is_finite() const { return lo_ && hi_; }
  std::optional<int> lo() const { return lo_; }
  std::optional<int> hi() const { return hi_; }
  bool contains(int j) const { return (!lo_ || j >= *lo_) && (!hi_ || j <= *hi_); }
  /// Membership in I_+ = I u (I+1).
  bool contains_plus(int j) const { return (!lo_ || j >= *lo_) && (!hi_ || j <= *hi_ + 1); }
  bool contains(const Interval& other) const;
  /// |I|, finite intervals only.
  int size() const;
  /// |I_+|, finite intervals only.
  int plus_size() const { return size() + 1; }

  std::string to_string() const;
  static Interval parse(const std::string& text);

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  std::optional<int> lo_;
  std::optional<int> hi_;
};

/// Type (n, c): row i carries n_i deviations from the baseline value c_i.
struct TypeNC {
  std::vector<int> n;
  std::vector<int> c;

  int level() const { return static_cast<int>(n.size()); }
  int max_n() const;
  void validate() const;
  TypeNC reversed() const;
  TypeNC without_last() const;

  friend bool operator==(const TypeNC&, const TypeNC&) = default;
};

/// An l-row 01-matrix equal to its row baseline outside finitely many columns.
/// Stored as a bitmask of deviations relative to a canonical window start.
class Matrix01 {
 public:
  static constexpr int kMaxWidth = 64;

  Matrix01() = default;
  explicit Matrix01(std::vector<std::uint8_t> baselines);

  int level() const { return static_cast<int>(base_.size()); }
  int baseline(int row) const { return base_[static_cast<std::size_t>(row)]; }
  const std::vector<std::uint8_t>& baselines() const { return base_; }
  bool deviates(int row, int col) const;
  int entry(int row, int col) const { return baseline(row) ^ static_cast<int>(deviates(row, col)); }
  void set_entry(int row, int col, int value) { set_deviation(row, col, value != baseline(row)); }
  void set_deviation(int row, int col, bool on);
  std::vector<int> deviations(int row) const;
  int deviation_count(int row) const;
  /// Smallest and largest deviating column over all rows.
  std::optional<std::pair<int, int>> deviation_span() const;

  /// t_{ij}: swap the entries of row i in columns j and j+1.
  Matrix01 swapped(int row, int col) const;
  Matrix01 without_last_row() const;
  Matrix01 with_row_appended(const Matrix01& row) const;
  Matrix01 row(int i) const;
  Matrix01 rows_reversed() const;

  /// Row strings over columns [lo, hi].
  std::vector<std::string> render_rows(int lo, int hi) const;

  friend auto operator<=>(const Matrix01&, const Matrix01&) = default;
  friend bool operator==(const Matrix01&, const Matrix01&) = default;

 private:
  void normalize();

  int start_ = 0;
  std::vector<std::uint8_t> base_;
  std::vector<std::uint64_t> dev_;
};

/// Coefficients on the fundamental weights, zero entries omitted.
using WeightPI = std::map<int, long long>;
/// Coefficients on epsilon_j, zero entries omitted.
using EpsWeight = std::map<int, long long>;

/// Columns used to display a matrix: I_+ for finite I, otherwise the deviation span.
std::pair<int, int> display_window(const Matrix01& m, const Interval& I);
std::string to_text(const Matrix01& m, const Interval& I);
std::string to_text(const Matrix01& m, int lo, int hi);
/// Parses `@s:rows`; entries outside the given window take the baseline.
Matrix01 parse_matrix(const std::string& text, const TypeNC& t);
Matrix01 matrix_from_rows(int window_start, const std::vector<std::string>& rows, const TypeNC& t);

std::vector<Matrix01> enumerate_weights(const Interval& I, const TypeNC& t);
std::size_t weight_count(const Interval& I, const TypeNC& t);
Matrix01 kappa(const Interval& I, const TypeNC& t);
/// Checks that m belongs to Lambda_{I;n,c}; throws TypeMismatch or DeviationOutsideWindow.
void check_member(const Matrix01& m, const Interval& I, const TypeNC& t);

EpsWeight eps_weight(const Matrix01& m);
WeightPI weight_of(const Matrix01& m, const Interval& I);
WeightPI alpha(int i, const Interval& I);
WeightPI operator-(const WeightPI& a, const WeightPI& b);
/// <wt(m), alpha_j> = sum over rows of m_{rj} - m_{r,j+1}.
int alpha_pairing(const Matrix01& m, int j);
/// True iff lower <= upper in dominance order (prefix-sum criterion over h in I).
bool dominance_leq(const EpsWeight& lower, const EpsWeight& upper, const Interval& I);
bool order_leq(const Matrix01& lambda, const Matrix01& mu, const Interval& I);

int defect_at(const Matrix01& m, const Interval& J, const TypeNC& t);
/// Minimal window J inside I with all deviations in J_+ and |J_+| >= 2 max(n).
Interval minimal_window(const Matrix01& m, const Interval& I, const TypeNC& t);
Interval minimal_window(const std::vector<Matrix01>& ms, const Interval& I, const TypeNC& t);
int defect(const Matrix01& m, const Interval& I, const TypeNC& t);

bool in_Lambda_J(const Matrix01& m, const Interval& J);
bool in_leq_J(const Matrix01& m, const Interval& J, const Interval& I);
bool in_lt_J(const Matrix01& m, const Interval& J, const Interval& I);
Matrix01 truncate(const Matrix01& m, const Interval& J);

TypeNC equivalent_type(const TypeNC& t, const Interval& I, const std::set<int>& flips);
/// Re-expresses m relative to the baselines of an equivalent type over finite I.
Matrix01 reexpress(const Matrix01& m, const Interval& I, const TypeNC& target);

}  // namespace superkl
