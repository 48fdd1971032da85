#include "superkl/superweights.hpp"

#include <algorithm>
#include <set>

#include "superkl/errors.hpp"

namespace superkl {

namespace {

void require_same_type(const SuperWeight& a, const SuperWeight& b) {
  if (!(a.type == b.type)) throw Error(ErrorKind::TypeMismatch, "super weights of different types");
}

std::vector<long long> unit(std::size_t size, std::size_t i) {
  std::vector<long long> v(size, 0);
  v[i] = 1;
  return v;
}

}  // namespace

std::vector<int> parities(const TypeNC& t) {
  std::vector<int> p;
  for (int i = 0; i < t.level(); ++i)
    p.insert(p.end(), static_cast<std::size_t>(t.n[static_cast<std::size_t>(i)]), t.c[static_cast<std::size_t>(i)]);
  return p;
}

SuperWeight::SuperWeight(TypeNC t, std::vector<long long> c) : type(std::move(t)), coords(std::move(c)) {
  type.validate();
  if (coords.size() != superkl::parities(type).size())
    throw Error(ErrorKind::TypeMismatch, "expected " + std::to_string(superkl::parities(type).size()) + " coordinates");
}

std::vector<int> SuperWeight::parities() const { return superkl::parities(type); }

int SuperWeight::parity() const {
  const auto p = parities();
  long long s = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i]) s += coords[i];
  return static_cast<int>(((s % 2) + 2) % 2);
}

long long super_form(const std::vector<long long>& x, const std::vector<long long>& y, const std::vector<int>& p) {
  long long s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] ? -1 : 1) * x[i] * y[i];
  return s;
}

SuperWeight rho(const TypeNC& t) {
  const auto p = parities(t);
  std::vector<long long> r(p.size(), 0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) r[j] -= (p[i] + p[j]) % 2 == 0 ? 1 : -1;
    if (p[j]) r[j] -= 1;
  }
  return SuperWeight(t, r);
}

std::vector<long long> shifted_pairings(const SuperWeight& lambda) {
  const auto p = lambda.parities();
  const auto r = rho(lambda.type).coords;
  std::vector<long long> shifted(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) shifted[i] = lambda.coords[i] + r[i];
  std::vector<long long> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = super_form(shifted, unit(p.size(), i), p);
  return out;
}

namespace {

// Throws unless the shifted pairings are strictly monotone inside every block.
void check_dominant(const SuperWeight& lambda, const std::vector<long long>& a) {
  std::size_t start = 0;
  for (int k = 0; k < lambda.type.level(); ++k) {
    const auto len = static_cast<std::size_t>(lambda.type.n[static_cast<std::size_t>(k)]);
    const int sign = lambda.type.c[static_cast<std::size_t>(k)] ? -1 : 1;
    std::set<long long> seen(a.begin() + static_cast<std::ptrdiff_t>(start),
                             a.begin() + static_cast<std::ptrdiff_t>(start + len));
    if (seen.size() != len) throw Error(ErrorKind::DuplicateCoordinate, "repeated shifted coordinate in block " + std::to_string(k + 1));
    for (std::size_t i = start; i + 1 < start + len; ++i)
      if (sign * (a[i] - a[i + 1]) <= 0) throw Error(ErrorKind::NotDominant, "weight is not dominant in block " + std::to_string(k + 1));
    start += len;
  }
}

}  // namespace

bool is_dominant(const SuperWeight& lambda) {
  try {
    check_dominant(lambda, shifted_pairings(lambda));
    return true;
  } catch (const Error&) {
    return false;
  }
}

Matrix01 to_matrix01(const SuperWeight& lambda) {
  const auto a = shifted_pairings(lambda);
  check_dominant(lambda, a);
  const TypeNC& t = lambda.type;
  Matrix01 m(std::vector<std::uint8_t>(t.c.begin(), t.c.end()));
  std::size_t i = 0;
  for (int row = 0; row < t.level(); ++row)
    for (int k = 0; k < t.n[static_cast<std::size_t>(row)]; ++k) m.set_deviation(row, static_cast<int>(a[i++]), true);
  return m;
}

SuperWeight from_matrix01(const Matrix01& m, const TypeNC& t) {
  check_member(m, Interval::all(), t);
  const auto p = parities(t);
  const auto r = rho(t).coords;
  std::vector<long long> coords;
  for (int row = 0; row < t.level(); ++row) {
    auto cols = m.deviations(row);
    if (!t.c[static_cast<std::size_t>(row)]) std::reverse(cols.begin(), cols.end());
    for (int col : cols) {
      const std::size_t i = coords.size();
      coords.push_back((p[i] ? -col : col) - r[i]);
    }
  }
  return SuperWeight(t, coords);
}

bool bruhat_leq(const SuperWeight& lambda, const SuperWeight& mu) {
  require_same_type(lambda, mu);
  const auto p = lambda.parities();
  const auto a = shifted_pairings(lambda), b = shifted_pairings(mu);
  std::set<long long> hs(a.begin(), a.end());
  hs.insert(b.begin(), b.end());
  if (!hs.empty()) hs.insert(*hs.begin() - 1);
  for (long long h : hs) {
    long long sa = 0, sb = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      const int sign = p[j] ? -1 : 1;
      if (a[j] <= h) sa += sign;
      if (b[j] <= h) sb += sign;
      if (sa < sb) return false;
    }
    if (sa != sb) return false;
  }
  return true;
}

bool dominance_super(const SuperWeight& lambda, const SuperWeight& mu) {
  require_same_type(lambda, mu);
  long long prefix = 0;
  for (std::size_t i = 0; i < lambda.coords.size(); ++i) {
    prefix += lambda.coords[i] - mu.coords[i];
    if (prefix < 0) return false;
  }
  return prefix == 0;
}

std::vector<SuperWeight> linkage_up(const SuperWeight& lambda) {
  const auto p = lambda.parities();
  const auto a = shifted_pairings(lambda);
  std::set<SuperWeight> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      SuperWeight mu = lambda;
      if (p[i] == p[j]) {
        const long long k = (p[i] ? -1 : 1) * (a[i] - a[j]);
        if (k <= 0) continue;
        mu.coords[i] -= k;
        mu.coords[j] += k;
      } else {
        if (a[i] != a[j]) continue;
        mu.coords[i] -= 1;
        mu.coords[j] += 1;
      }
      out.insert(mu);
    }
  return {out.begin(), out.end()};
}

}  // namespace superkl
