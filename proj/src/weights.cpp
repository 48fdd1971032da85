#include "superkl/weights.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "superkl/errors.hpp"

namespace superkl {

Interval Interval::finite(int lo, int hi) {
  if (lo > hi) throw Error(ErrorKind::InvalidArgument, "interval with lo > hi");
  Interval I;
  I.lo_ = lo;
  I.hi_ = hi;
  return I;
}

Interval Interval::half_up(int lo) {
  Interval I;
  I.lo_ = lo;
  return I;
}

Interval Interval::half_down(int hi) {
  Interval I;
  I.hi_ = hi;
  return I;
}

Interval Interval::all() { return {}; }

Interval::Kind Interval::kind() const {
  if (lo_ && hi_) return Kind::Finite;
  if (lo_) return Kind::HalfUp;
  if (hi_) return Kind::HalfDown;
  return Kind::AllZ;
}

bool Interval::contains(const Interval& other) const {
  if (lo_ && (!other.lo_ || *other.lo_ < *lo_)) return false;
  if (hi_ && (!other.hi_ || *other.hi_ > *hi_)) return false;
  return true;
}

int Interval::size() const {
  if (!is_finite()) throw Error(ErrorKind::IntervalInfinite, "size of an infinite interval");
  return *hi_ - *lo_ + 1;
}

std::string Interval::to_string() const {
  switch (kind()) {
    case Kind::Finite: return std::to_string(*lo_) + ":" + std::to_string(*hi_);
    case Kind::HalfUp: return "geq:" + std::to_string(*lo_);
    case Kind::HalfDown: return "leq:" + std::to_string(*hi_);
    case Kind::AllZ: return "z";
  }
  return "z";
}

Interval Interval::parse(const std::string& text) {
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "cannot parse interval '" + text + "'");
    }
  };
  if (text == "z" || text == "Z") return all();
  if (text.rfind("geq:", 0) == 0) return half_up(number(text.substr(4)));
  if (text.rfind("leq:", 0) == 0) return half_down(number(text.substr(4)));
  const auto colon = text.find(':', 1);
  if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "cannot parse interval '" + text + "'");
  return finite(number(text.substr(0, colon)), number(text.substr(colon + 1)));
}

int TypeNC::max_n() const {
  int m = 0;
  for (int x : n) m = std::max(m, x);
  return m;
}

void TypeNC::validate() const {
  if (n.size() != c.size()) throw Error(ErrorKind::InvalidArgument, "type has |n| != |c|");
  for (int x : n)
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative n_i");
  for (int x : c)
    if (x != 0 && x != 1) throw Error(ErrorKind::InvalidArgument, "c_i must be 0 or 1");
}

TypeNC TypeNC::reversed() const {
  return {std::vector<int>(n.rbegin(), n.rend()), std::vector<int>(c.rbegin(), c.rend())};
}

TypeNC TypeNC::without_last() const {
  TypeNC t = *this;
  t.n.pop_back();
  t.c.pop_back();
  return t;
}

// ---------------------------------------------------------------------------

Matrix01::Matrix01(std::vector<std::uint8_t> baselines)
    : base_(std::move(baselines)), dev_(base_.size(), 0) {}

bool Matrix01::deviates(int row, int col) const {
  const int k = col - start_;
  if (k < 0 || k >= kMaxWidth) return false;
  return (dev_[static_cast<std::size_t>(row)] >> k) & 1U;
}

void Matrix01::set_deviation(int row, int col, bool on) {
  auto& mask = dev_[static_cast<std::size_t>(row)];
  if (!on) {
    const int k = col - start_;
    if (k < 0 || k >= kMaxWidth) return;
    mask &= ~(std::uint64_t{1} << k);
    normalize();
    return;
  }
  auto span = deviation_span();
  if (!span) {
    start_ = col;
    mask |= 1;
    return;
  }
  const int lo = std::min(span->first, col);
  const int hi = std::max(span->second, col);
  if (hi - lo + 1 > kMaxWidth)
    throw Error(ErrorKind::InvalidArgument, "matrix deviations span more than 64 columns");
  if (lo < start_) {
    const int shift = start_ - lo;
    for (auto& m : dev_) m <<= shift;
    start_ = lo;
  }
  mask |= std::uint64_t{1} << (col - start_);
}

void Matrix01::normalize() {
  int low = kMaxWidth;
  for (auto m : dev_)
    if (m) low = std::min(low, std::countr_zero(m));
  if (low == kMaxWidth) {
    start_ = 0;
    return;
  }
  if (low > 0) {
    for (auto& m : dev_) m >>= low;
    start_ += low;
  }
}

std::vector<int> Matrix01::deviations(int row) const {
  std::vector<int> out;
  std::uint64_t m = dev_[static_cast<std::size_t>(row)];
  while (m) {
    const int k = std::countr_zero(m);
    out.push_back(start_ + k);
    m &= m - 1;
  }
  return out;
}

int Matrix01::deviation_count(int row) const {
  return std::popcount(dev_[static_cast<std::size_t>(row)]);
}

std::optional<std::pair<int, int>> Matrix01::deviation_span() const {
  std::uint64_t all = 0;
  for (auto m : dev_) all |= m;
  if (!all) return std::nullopt;
  return std::make_pair(start_ + std::countr_zero(all), start_ + 63 - std::countl_zero(all));
}

Matrix01 Matrix01::swapped(int row, int col) const {
  const bool a = deviates(row, col);
  const bool b = deviates(row, col + 1);
  if (a == b) return *this;
  Matrix01 r = *this;
  r.set_deviation(row, col, b);
  r.set_deviation(row, col + 1, a);
  return r;
}

Matrix01 Matrix01::without_last_row() const {
  Matrix01 r = *this;
  r.base_.pop_back();
  r.dev_.pop_back();
  r.normalize();
  return r;
}

Matrix01 Matrix01::with_row_appended(const Matrix01& row) const {
  Matrix01 r = *this;
  r.base_.push_back(row.base_.at(0));
  r.dev_.push_back(0);
  for (int col : row.deviations(0)) r.set_deviation(r.level() - 1, col, true);
  return r;
}

Matrix01 Matrix01::row(int i) const {
  Matrix01 r({base_[static_cast<std::size_t>(i)]});
  r.dev_[0] = dev_[static_cast<std::size_t>(i)];
  r.start_ = start_;
  r.normalize();
  return r;
}

Matrix01 Matrix01::rows_reversed() const {
  Matrix01 r = *this;
  std::reverse(r.base_.begin(), r.base_.end());
  std::reverse(r.dev_.begin(), r.dev_.end());
  return r;
}

std::vector<std::string> Matrix01::render_rows(int lo, int hi) const {
  std::vector<std::string> rows;
  for (int i = 0; i < level(); ++i) {
    std::string s;
    for (int j = lo; j <= hi; ++j) s += static_cast<char>('0' + entry(i, j));
    rows.push_back(std::move(s));
  }
  return rows;
}

// ---------------------------------------------------------------------------

std::pair<int, int> display_window(const Matrix01& m, const Interval& I) {
  if (I.is_finite()) return {*I.lo(), *I.hi() + 1};
  if (auto span = m.deviation_span()) return *span;
  int anchor = 0;
  if (I.lo() && anchor < *I.lo()) anchor = *I.lo();
  if (I.hi() && anchor > *I.hi() + 1) anchor = *I.hi() + 1;
  return {anchor, anchor};
}

std::string to_text(const Matrix01& m, int lo, int hi) {
  std::string out = "@" + std::to_string(lo) + ":";
  auto rows = m.render_rows(lo, hi);
  for (std::size_t i = 0; i < rows.size(); ++i) out += (i ? "/" : "") + rows[i];
  return out;
}

std::string to_text(const Matrix01& m, const Interval& I) {
  auto [lo, hi] = display_window(m, I);
  return to_text(m, lo, hi);
}

static std::vector<std::uint8_t> baselines_of(const TypeNC& t) {
  std::vector<std::uint8_t> b;
  for (int c : t.c) b.push_back(static_cast<std::uint8_t>(c));
  return b;
}

Matrix01 matrix_from_rows(int window_start, const std::vector<std::string>& rows, const TypeNC& t) {
  if (static_cast<int>(rows.size()) != t.level())
    throw Error(ErrorKind::TypeMismatch, "matrix has " + std::to_string(rows.size()) + " rows, type has level " +
                                             std::to_string(t.level()));
  Matrix01 m(baselines_of(t));
  for (int i = 0; i < t.level(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (row.size() != rows[0].size()) throw Error(ErrorKind::ParseError, "matrix rows of unequal length");
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] != '0' && row[k] != '1') throw Error(ErrorKind::ParseError, "matrix entries must be 0 or 1");
      m.set_entry(i, window_start + static_cast<int>(k), row[k] - '0');
    }
  }
  return m;
}

Matrix01 parse_matrix(const std::string& text, const TypeNC& t) {
  std::size_t colon = text.find(':');
  int start = 0;
  std::string body = text;
  if (!text.empty() && text[0] == '@') {
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "matrix text needs '@start:'");
    try {
      start = std::stoi(text.substr(1, colon - 1));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad window start in '" + text + "'");
    }
    body = text.substr(colon + 1);
  }
  std::vector<std::string> rows;
  if (t.level() > 0 || !body.empty()) {
    std::stringstream ss(body);
    std::string row;
    while (std::getline(ss, row, '/')) rows.push_back(row);
    if (!body.empty() && body.back() == '/') rows.emplace_back();
  }
  return matrix_from_rows(start, rows, t);
}

// ---------------------------------------------------------------------------

static std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

std::size_t weight_count(const Interval& I, const TypeNC& t) {
  if (!I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "weight set of an infinite interval");
  std::size_t total = 1;
  for (int x : t.n) total *= binomial(I.plus_size(), x);
  return total;
}

std::vector<Matrix01> enumerate_weights(const Interval& I, const TypeNC& t) {
  if (!I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "enumeration requires a finite interval");
  t.validate();
  const int N = I.plus_size();
  const int lo = *I.lo();
  std::vector<std::vector<std::string>> choices;
  for (int i = 0; i < t.level(); ++i) {
    std::vector<std::string> strings;
    const int k = t.n[static_cast<std::size_t>(i)];
    if (k > N) return {};
    std::string mask(static_cast<std::size_t>(N), '0');
    std::fill(mask.begin(), mask.begin() + k, '1');
    do {
      std::string row = mask;
      if (t.c[static_cast<std::size_t>(i)] == 1)
        for (auto& ch : row) ch = ch == '1' ? '0' : '1';
      strings.push_back(row);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    std::sort(strings.begin(), strings.end(), std::greater<>());
    choices.push_back(std::move(strings));
  }
  std::vector<Matrix01> out;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < choices.size(); ++i) rows.push_back(choices[i][idx[i]]);
    out.push_back(matrix_from_rows(lo, rows, t));
    std::size_t pos = choices.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < choices[pos].size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (choices.empty()) return out;
  }
}

Matrix01 kappa(const Interval& I, const TypeNC& t) {
  if (!I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "kappa requires a finite interval");
  t.validate();
  const int N = I.plus_size();
  const int lo = *I.lo();
  Matrix01 m(baselines_of(t));
  for (int i = 0; i < t.level(); ++i) {
    const int k = t.n[static_cast<std::size_t>(i)];
    if (k > N) throw Error(ErrorKind::EmptyWeightSet, "n_i exceeds |I_+|");
    if (t.c[static_cast<std::size_t>(i)] == 0) {
      for (int j = 0; j < k; ++j) m.set_deviation(i, lo + j, true);
    } else {
      for (int j = N - k; j < N; ++j) m.set_deviation(i, lo + j, true);
    }
  }
  return m;
}

void check_member(const Matrix01& m, const Interval& I, const TypeNC& t) {
  if (m.level() != t.level()) throw Error(ErrorKind::TypeMismatch, "matrix level differs from type");
  for (int i = 0; i < t.level(); ++i) {
    if (m.baseline(i) != t.c[static_cast<std::size_t>(i)])
      throw Error(ErrorKind::TypeMismatch, "matrix baseline differs from type");
    if (m.deviation_count(i) != t.n[static_cast<std::size_t>(i)])
      throw Error(ErrorKind::TypeMismatch, "row " + std::to_string(i + 1) + " has " +
                                               std::to_string(m.deviation_count(i)) + " deviations, expected " +
                                               std::to_string(t.n[static_cast<std::size_t>(i)]));
  }
  if (auto span = m.deviation_span()) {
    if (!I.contains_plus(span->first) || !I.contains_plus(span->second))
      throw Error(ErrorKind::DeviationOutsideWindow, "matrix deviates outside I_+");
  }
}

// ---------------------------------------------------------------------------

EpsWeight eps_weight(const Matrix01& m) {
  EpsWeight w;
  for (int i = 0; i < m.level(); ++i) {
    const int sign = m.baseline(i) ? -1 : 1;
    for (int j : m.deviations(i)) w[j] += sign;
  }
  std::erase_if(w, [](const auto& kv) { return kv.second == 0; });
  return w;
}

WeightPI weight_of(const Matrix01& m, const Interval& I) {
  const EpsWeight w = eps_weight(m);
  auto at = [&](int j) {
    auto it = w.find(j);
    return it == w.end() ? 0LL : it->second;
  };
  WeightPI out;
  for (const auto& [j, v] : w) {
    for (int i : {j - 1, j}) {
      if (!I.contains(i)) continue;
      const long long c = at(i) - at(i + 1);
      if (c != 0) out[i] = c;
    }
  }
  return out;
}

WeightPI alpha(int i, const Interval& I) {
  if (!I.contains(i)) throw Error(ErrorKind::ColorOutsideInterval, "colour " + std::to_string(i) + " not in I");
  WeightPI a{{i, 2}};
  if (I.contains(i - 1)) a[i - 1] = -1;
  if (I.contains(i + 1)) a[i + 1] = -1;
  return a;
}

WeightPI operator-(const WeightPI& a, const WeightPI& b) {
  WeightPI r = a;
  for (const auto& [k, v] : b) r[k] -= v;
  std::erase_if(r, [](const auto& kv) { return kv.second == 0; });
  return r;
}

int alpha_pairing(const Matrix01& m, int j) {
  int s = 0;
  for (int r = 0; r < m.level(); ++r) s += m.entry(r, j) - m.entry(r, j + 1);
  return s;
}

bool dominance_leq(const EpsWeight& lower, const EpsWeight& upper, const Interval& I) {
  long long tl = 0, tu = 0;
  for (const auto& [j, v] : lower) tl += v;
  for (const auto& [j, v] : upper) tu += v;
  if (tl != tu) throw Error(ErrorKind::DegreeMismatch, "weights of different total degree");
  std::set<int> cuts;
  for (const auto& [j, v] : lower) cuts.insert(j);
  for (const auto& [j, v] : upper) cuts.insert(j);
  if (I.lo()) cuts.insert(*I.lo());
  if (I.hi()) cuts.insert(*I.hi());
  for (int h : cuts) {
    if (!I.contains(h)) continue;
    long long sl = 0, su = 0;
    for (const auto& [j, v] : lower)
      if (j <= h) sl += v;
    for (const auto& [j, v] : upper)
      if (j <= h) su += v;
    if (su < sl) return false;
  }
  return true;
}

namespace {

void require_same_shape(const Matrix01& a, const Matrix01& b) {
  if (a.level() != b.level() || a.baselines() != b.baselines())
    throw Error(ErrorKind::TypeMismatch, "matrices of different types");
  for (int i = 0; i < a.level(); ++i)
    if (a.deviation_count(i) != b.deviation_count(i))
      throw Error(ErrorKind::TypeMismatch, "matrices of different types");
}

// Signed deviation count of rows [0, k) in columns <= h.
long long lower_sum(const Matrix01& m, int k, int h) {
  long long s = 0;
  for (int i = 0; i < k; ++i) {
    const int sign = m.baseline(i) ? -1 : 1;
    for (int j : m.deviations(i))
      if (j <= h) s += sign;
  }
  return s;
}

long long upper_sum(const Matrix01& m, int k, int h) {
  long long s = 0;
  for (int i = 0; i < k; ++i) {
    const int sign = m.baseline(i) ? -1 : 1;
    for (int j : m.deviations(i))
      if (j > h) s += sign;
  }
  return s;
}

}  // namespace

bool order_leq(const Matrix01& lambda, const Matrix01& mu, const Interval& I) {
  require_same_shape(lambda, mu);
  std::set<int> cuts;
  for (const Matrix01* m : {&lambda, &mu})
    for (int i = 0; i < m->level(); ++i)
      for (int j : m->deviations(i)) cuts.insert(j);
  if (I.lo()) cuts.insert(*I.lo());
  const int l = lambda.level();
  for (int h : cuts) {
    if (!I.contains(h)) continue;
    for (int k = 1; k <= l; ++k) {
      const long long a = lower_sum(lambda, k, h);
      const long long b = lower_sum(mu, k, h);
      if (a < b) return false;
      if (k == l && a != b) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

int defect_at(const Matrix01& m, const Interval& J, const TypeNC& t) {
  if (!in_Lambda_J(m, J)) throw Error(ErrorKind::DeviationOutsideWindow, "matrix deviates outside J_+");
  const Matrix01 k = kappa(J, t);
  long long twice = 0;
  for (int j = *J.lo(); j <= *J.hi() + 1; ++j) {
    long long kj = 0, lj = 0;
    for (int i = 0; i < m.level(); ++i) {
      kj += k.entry(i, j);
      lj += m.entry(i, j);
    }
    twice += kj * kj - lj * lj;
  }
  return static_cast<int>(twice / 2);
}

Interval minimal_window(const std::vector<Matrix01>& ms, const Interval& I, const TypeNC& t) {
  std::optional<std::pair<int, int>> span;
  for (const auto& m : ms) {
    if (auto s = m.deviation_span()) {
      if (!span) span = s;
      else span = std::make_pair(std::min(span->first, s->first), std::max(span->second, s->second));
    }
  }
  int lo, hi;
  if (!span) {
    lo = 0;
    if (I.lo() && lo < *I.lo()) lo = *I.lo();
    if (I.hi() && lo > *I.hi()) lo = *I.hi();
    hi = lo;
  } else {
    lo = span->first;
    hi = std::max(span->first, span->second - 1);
    if (I.hi() && hi > *I.hi()) {
      hi = *I.hi();
      lo = std::min(lo, hi);
    }
  }
  const int need = 2 * t.max_n();
  bool right = true;
  while (hi - lo + 2 < need) {
    const bool can_right = !I.hi() || hi < *I.hi();
    const bool can_left = !I.lo() || lo > *I.lo();
    if (!can_right && !can_left) break;
    if ((right && can_right) || !can_left) ++hi;
    else --lo;
    right = !right;
  }
  return Interval::finite(lo, hi);
}

Interval minimal_window(const Matrix01& m, const Interval& I, const TypeNC& t) {
  return minimal_window(std::vector<Matrix01>{m}, I, t);
}

int defect(const Matrix01& m, const Interval& I, const TypeNC& t) {
  if (I.is_finite()) return defect_at(m, I, t);
  return defect_at(m, minimal_window(m, I, t), t);
}

bool in_Lambda_J(const Matrix01& m, const Interval& J) {
  auto span = m.deviation_span();
  return !span || (J.contains_plus(span->first) && J.contains_plus(span->second));
}

namespace {

// Evaluates every instance of the two inequality families; returns {all hold, some strict}.
std::pair<bool, bool> window_inequalities(const Matrix01& m, const Interval& J, const Interval& I) {
  bool holds = true, strict = false;
  std::set<int> below, above;
  for (int i = 0; i < m.level(); ++i) {
    for (int d : m.deviations(i)) {
      if (d < *J.lo() && I.contains(d)) below.insert(d);
      if (d - 1 > *J.hi() && I.contains(d - 1)) above.insert(d - 1);
    }
  }
  for (int k = 1; k <= m.level(); ++k) {
    for (int h : below) {
      const long long s = lower_sum(m, k, h);
      if (s < 0) holds = false;
      if (s > 0) strict = true;
    }
    for (int h : above) {
      const long long s = upper_sum(m, k, h);
      if (s > 0) holds = false;
      if (s < 0) strict = true;
    }
  }
  return {holds, strict};
}

}  // namespace

bool in_leq_J(const Matrix01& m, const Interval& J, const Interval& I) {
  return window_inequalities(m, J, I).first;
}

bool in_lt_J(const Matrix01& m, const Interval& J, const Interval& I) {
  auto [holds, strict] = window_inequalities(m, J, I);
  return holds && strict;
}

Matrix01 truncate(const Matrix01& m, const Interval& J) {
  if (!J.is_finite()) throw Error(ErrorKind::IntervalInfinite, "truncation window must be finite");
  if (!in_Lambda_J(m, J)) throw Error(ErrorKind::DeviationOutsideWindow, "matrix deviates outside J_+");
  return m;
}

TypeNC equivalent_type(const TypeNC& t, const Interval& I, const std::set<int>& flips) {
  if (flips.empty()) return t;
  if (!I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "row flips need a finite interval");
  TypeNC r = t;
  for (int i : flips) {
    if (i < 0 || i >= t.level()) throw Error(ErrorKind::InvalidArgument, "flip index out of range");
    auto& n = r.n[static_cast<std::size_t>(i)];
    auto& c = r.c[static_cast<std::size_t>(i)];
    n = I.plus_size() - n;
    c = 1 - c;
  }
  return r;
}

Matrix01 reexpress(const Matrix01& m, const Interval& I, const TypeNC& target) {
  if (!I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "re-expression needs a finite interval");
  Matrix01 r(baselines_of(target));
  for (int i = 0; i < m.level(); ++i)
    for (int j = *I.lo(); j <= *I.hi() + 1; ++j) r.set_entry(i, j, m.entry(i, j));
  return r;
}

}  // namespace superkl
