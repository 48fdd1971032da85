#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace superkl {

using Integer = boost::multiprecision::cpp_int;

/// Element of Z[q, q^-1], stored densely from the lowest nonzero exponent.
class LaurentInt {
 public:
  LaurentInt() = default;
  LaurentInt(long long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentInt(const Integer& constant);

  static LaurentInt monomial(const Integer& coeff, int exponent);
  static LaurentInt q_power(int exponent) { return monomial(1, exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Only meaningful when nonzero.
  int min_degree() const { return low_; }
  int max_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int exponent) const;
  std::size_t term_count() const;

  LaurentInt& operator+=(const LaurentInt& other);
  LaurentInt& operator-=(const LaurentInt& other);
  LaurentInt& operator*=(const LaurentInt& other);
  LaurentInt operator-() const;

  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  friend bool operator==(const LaurentInt& a, const LaurentInt& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiply by q^k.
  LaurentInt shifted(int k) const;
  /// f(q) -> f(q^-1).
  LaurentInt bar() const;
  /// f(q) -> f(-q).
  LaurentInt at_negative_q() const;
  /// Terms of strictly positive degree.
  LaurentInt positive_part() const;
  bool is_bar_invariant() const { return bar() == *this; }
  bool has_nonnegative_coefficients() const;

  std::string to_string() const;
  static LaurentInt parse(std::string_view text);

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

inline LaurentInt bar(const LaurentInt& p) { return p.bar(); }
LaurentInt qint(int m);
LaurentInt qfact(int m);
/// Quotient a / b; throws NotDivisible unless b divides a.
LaurentInt div_exact(const LaurentInt& a, const LaurentInt& b);

std::ostream& operator<<(std::ostream& os, const LaurentInt& p);

}  // namespace superkl
