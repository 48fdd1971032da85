#include "superkl/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "superkl/errors.hpp"

namespace superkl {

LaurentInt::LaurentInt(long long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

LaurentInt::LaurentInt(const Integer& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentInt LaurentInt::monomial(const Integer& coeff, int exponent) {
  LaurentInt p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

Integer LaurentInt::coeff(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > max_degree()) return 0;
  return coeffs_[exponent - low_];
}

std::size_t LaurentInt::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

void LaurentInt::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
  low_ += static_cast<int>(first);
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(max_degree(), other.max_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - low_ + 1));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(other.low_ - low_) + k] += other.coeffs_[k];
  trim();
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& other) { return *this += -other; }

LaurentInt LaurentInt::operator-() const {
  LaurentInt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  LaurentInt r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& other) { return *this = *this * other; }

LaurentInt LaurentInt::shifted(int k) const {
  LaurentInt r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentInt LaurentInt::bar() const {
  LaurentInt r;
  if (is_zero()) return r;
  r.low_ = -max_degree();
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return r;
}

LaurentInt LaurentInt::at_negative_q() const {
  LaurentInt r = *this;
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
    if ((r.low_ + static_cast<int>(k)) % 2 != 0) r.coeffs_[k] = -r.coeffs_[k];
  }
  return r;
}

LaurentInt LaurentInt::positive_part() const {
  LaurentInt r;
  for (int e = std::max(1, low_); !is_zero() && e <= max_degree(); ++e) r += monomial(coeff(e), e);
  return r;
}

bool LaurentInt::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

std::string LaurentInt::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = max_degree(); e >= low_; --e) {
    Integer c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += c.str();
      continue;
    }
    if (c != 1) out += c.str() + "*";
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

struct TermParser {
  std::string_view s;
  std::size_t pos = 0;

  [[noreturn]] void fail() const {
    throw Error(ErrorKind::ParseError, "cannot parse Laurent polynomial '" + std::string(s) + "'");
  }
  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_space();
    return pos < s.size() && s[pos] == c;
  }
  std::string digits() {
    skip_space();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return std::string(s.substr(start, pos - start));
  }
  int exponent() {
    if (!peek('^')) return 1;
    ++pos;
    bool neg = false;
    if (peek('-')) {
      neg = true;
      ++pos;
    }
    std::string d = digits();
    if (d.empty()) fail();
    int e = std::stoi(d);
    return neg ? -e : e;
  }
};

}  // namespace

LaurentInt LaurentInt::parse(std::string_view text) {
  TermParser p{text};
  LaurentInt result;
  p.skip_space();
  if (p.pos == text.size()) p.fail();
  bool first = true;
  while (true) {
    p.skip_space();
    if (p.pos == text.size()) break;
    int sign = 1;
    if (p.peek('+') || p.peek('-')) {
      sign = text[p.pos] == '-' ? -1 : 1;
      ++p.pos;
    } else if (!first) {
      p.fail();
    }
    first = false;
    std::string d = p.digits();
    Integer c = d.empty() ? Integer(1) : Integer(d);
    int e = 0;
    if (p.peek('*')) {
      if (d.empty()) p.fail();
      ++p.pos;
      if (!p.peek('q')) p.fail();
    } else if (!d.empty() && p.peek('q')) {
      p.fail();
    }
    if (p.peek('q')) {
      ++p.pos;
      e = p.exponent();
    } else if (d.empty()) {
      p.fail();
    }
    result += monomial(sign * c, e);
  }
  return result;
}

LaurentInt qint(int m) {
  if (m < 0) return -qint(-m);
  LaurentInt r;
  for (int k = 0; k < m; ++k) r += LaurentInt::q_power(m - 1 - 2 * k);
  return r;
}

LaurentInt qfact(int m) {
  LaurentInt r = 1;
  for (int k = 2; k <= m; ++k) r *= qint(k);
  return r;
}

LaurentInt div_exact(const LaurentInt& a, const LaurentInt& b) {
  if (b.is_zero()) throw Error(ErrorKind::NotDivisible, "division by zero");
  if (a.is_zero()) return {};
  LaurentInt rem = a;
  LaurentInt quot;
  const int bt = b.max_degree();
  const Integer blead = b.coeff(bt);
  const int span_b = b.max_degree() - b.min_degree();
  while (!rem.is_zero()) {
    if (rem.max_degree() - rem.min_degree() < span_b) {
      throw Error(ErrorKind::NotDivisible, a.to_string() + " is not divisible by " + b.to_string());
    }
    const Integer lead = rem.coeff(rem.max_degree());
    if (lead % blead != 0) {
      throw Error(ErrorKind::NotDivisible, a.to_string() + " is not divisible by " + b.to_string());
    }
    LaurentInt term = LaurentInt::monomial(lead / blead, rem.max_degree() - bt);
    quot += term;
    rem -= term * b;
  }
  return quot;
}

std::ostream& operator<<(std::ostream& os, const LaurentInt& p) { return os << p.to_string(); }

}  // namespace superkl
