#include "superkl/klr.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "superkl/errors.hpp"

namespace superkl {

namespace {

constexpr int kMaxDegree = 5;

using Perm = std::vector<int>;
using Word = std::vector<int>;

Perm perm_of(const Word& w, int d) {
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  for (int j : w) std::swap(p[static_cast<std::size_t>(j - 1)], p[static_cast<std::size_t>(j)]);
  return p;
}

int inversions(const Perm& p) {
  int n = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++n;
  return n;
}

struct SymmetricGroup {
  std::map<Perm, std::vector<Word>> reduced;  // sorted words
};

const SymmetricGroup& symmetric_group(int d) {
  static std::mutex mu;
  static std::map<int, SymmetricGroup> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  SymmetricGroup g;
  std::vector<Word> layer{{}};
  g.reduced[perm_of({}, d)].push_back({});
  while (!layer.empty()) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int j = 1; j < d; ++j) {
        Word v = w;
        v.push_back(j);
        Perm p = perm_of(v, d);
        if (inversions(p) == static_cast<int>(v.size())) {
          g.reduced[p].push_back(v);
          next.push_back(v);
        }
      }
    layer = std::move(next);
  }
  for (auto& [p, ws] : g.reduced) std::sort(ws.begin(), ws.end());
  return cache.emplace(d, std::move(g)).first->second;
}

bool is_reduced(const Word& w, int d) { return inversions(perm_of(w, d)) == static_cast<int>(w.size()); }

const Word& canonical_of(const Perm& p, int d) { return symmetric_group(d).reduced.at(p).front(); }

enum class MoveKind { Commute, Braid };
struct Move {
  MoveKind kind;
  int pos;
};

Word apply_move(Word w, const Move& m) {
  if (m.kind == MoveKind::Commute) {
    std::swap(w[static_cast<std::size_t>(m.pos)], w[static_cast<std::size_t>(m.pos + 1)]);
  } else {
    const int a = w[static_cast<std::size_t>(m.pos)], b = w[static_cast<std::size_t>(m.pos + 1)];
    w[static_cast<std::size_t>(m.pos)] = b;
    w[static_cast<std::size_t>(m.pos + 1)] = a;
    w[static_cast<std::size_t>(m.pos + 2)] = b;
  }
  return w;
}

std::vector<Move> moves(const Word& w) {
  std::vector<Move> out;
  for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) {
    const int a = w[static_cast<std::size_t>(i)], b = w[static_cast<std::size_t>(i + 1)];
    if (std::abs(a - b) > 1) out.push_back({MoveKind::Commute, i});
    if (i + 2 < static_cast<int>(w.size()) && std::abs(a - b) == 1 && w[static_cast<std::size_t>(i + 2)] == a)
      out.push_back({MoveKind::Braid, i});
  }
  return out;
}

// First move on a shortest path of braid and commutation moves from `from` to `to`.
Move first_move(const Word& from, const Word& to) {
  std::map<Word, Move> first;
  std::deque<Word> queue{from};
  std::set<Word> seen{from};
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    for (const auto& m : moves(w)) {
      Word v = apply_move(w, m);
      if (!seen.insert(v).second) continue;
      first[v] = w == from ? m : first.at(w);
      if (v == to) return first.at(v);
      queue.push_back(v);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "reduced words are not connected");
}

int cartan(int a, int b) {
  if (a == b) return 2;
  return std::abs(a - b) == 1 ? -1 : 0;
}

struct Gen {
  bool tau;
  int idx;
};

struct Work {
  Integer coef;
  std::vector<int> idem;
  std::vector<int> exps;
  std::vector<Gen> gens;
};

// Idempotent immediately to the right of gens[p].
std::vector<int> idem_after(const Work& w, int p) {
  std::vector<int> i = w.idem;
  for (int k = 0; k <= p; ++k) {
    const Gen& g = w.gens[static_cast<std::size_t>(k)];
    if (g.tau) std::swap(i[static_cast<std::size_t>(g.idx - 1)], i[static_cast<std::size_t>(g.idx)]);
  }
  return i;
}

// Replaces gens[pos, pos+len) by `with`.
Work splice(const Work& w, int pos, int len, const std::vector<Gen>& with, const Integer& coef) {
  Work out{coef, w.idem, w.exps, {}};
  out.gens.assign(w.gens.begin(), w.gens.begin() + pos);
  out.gens.insert(out.gens.end(), with.begin(), with.end());
  out.gens.insert(out.gens.end(), w.gens.begin() + pos + len, w.gens.end());
  return out;
}

void normalize(Work start, int d, KLRElem::Terms& out) {
  std::vector<Work> stack{std::move(start)};
  while (!stack.empty()) {
    Work cur = std::move(stack.back());
    stack.pop_back();
    if (cur.coef == 0) continue;
    std::size_t lead = 0;
    while (lead < cur.gens.size() && !cur.gens[lead].tau) ++cur.exps[static_cast<std::size_t>(cur.gens[lead++].idx - 1)];
    cur.gens.erase(cur.gens.begin(), cur.gens.begin() + static_cast<std::ptrdiff_t>(lead));

    auto first_xi = std::find_if(cur.gens.begin(), cur.gens.end(), [](const Gen& g) { return !g.tau; });
    if (first_xi != cur.gens.end()) {
      const int q = static_cast<int>(first_xi - cur.gens.begin());
      const int p = q - 1;
      const int j = cur.gens[static_cast<std::size_t>(p)].idx, k = first_xi->idx;
      const int tk = k == j ? j + 1 : k == j + 1 ? j : k;
      const auto i = idem_after(cur, p);
      stack.push_back(splice(cur, p, 2, {{false, tk}, {true, j}}, cur.coef));
      if (i[static_cast<std::size_t>(j - 1)] == i[static_cast<std::size_t>(j)] && (k == j || k == j + 1))
        stack.push_back(splice(cur, p, 2, {}, k == j + 1 ? cur.coef : Integer(-cur.coef)));
      continue;
    }

    Word word;
    for (const auto& g : cur.gens) word.push_back(g.idx);
    int bad = -1;
    for (int k = 0; k < static_cast<int>(word.size()); ++k) {
      Word prefix(word.begin(), word.begin() + k + 1);
      if (!is_reduced(prefix, d) || canonical_of(perm_of(prefix, d), d) != prefix) {
        bad = k;
        break;
      }
    }
    if (bad < 0) {
      KLRTerm key{cur.idem, cur.exps, word};
      Integer& slot = out[key];
      slot += cur.coef;
      if (slot == 0) out.erase(key);
      continue;
    }
    const Word u(word.begin(), word.begin() + bad);
    const int j = word[static_cast<std::size_t>(bad)];
    Word uj = u;
    uj.push_back(j);

    // Walks cur along braid and commutation moves until its first from.size() letters read `to`.
    auto walk = [&](Word from, const Word& to) {
      Work main = cur;
      while (from != to) {
        const Move m = first_move(from, to);
        if (m.kind == MoveKind::Braid) {
          const int a = from[static_cast<std::size_t>(m.pos)], b = from[static_cast<std::size_t>(m.pos + 1)];
          const int low = std::min(a, b);
          const auto i = idem_after(main, m.pos + 2);
          const int x = i[static_cast<std::size_t>(low - 1)], y = i[static_cast<std::size_t>(low)], z = i[static_cast<std::size_t>(low + 1)];
          int c = 0;
          if (x == z && x == y - 1) c = 1;
          if (x == z && x == y + 1) c = -1;
          // tau_{a+1} tau_a tau_{a+1} = tau_a tau_{a+1} tau_a + c.
          if (c != 0) stack.push_back(splice(main, m.pos, 3, {}, a == low + 1 ? Integer(c * main.coef) : Integer(-c * main.coef)));
          main = splice(main, m.pos, 3, {{true, b}, {true, a}, {true, b}}, main.coef);
        } else {
          std::swap(main.gens[static_cast<std::size_t>(m.pos)], main.gens[static_cast<std::size_t>(m.pos + 1)]);
        }
        from = apply_move(from, m);
      }
      return main;
    };

    if (is_reduced(uj, d)) {
      stack.push_back(walk(uj, canonical_of(perm_of(uj, d), d)));
      continue;
    }
    const auto& candidates = symmetric_group(d).reduced.at(perm_of(u, d));
    auto target = std::find_if(candidates.begin(), candidates.end(), [&](const Word& w) { return !w.empty() && w.back() == j; });
    const Work main = walk(u, *target);
    const auto i = idem_after(main, bad);
    const int x = i[static_cast<std::size_t>(j - 1)], y = i[static_cast<std::size_t>(j)];
    if (x == y) continue;
    if (x == y - 1) {
      stack.push_back(splice(main, bad - 1, 2, {{false, j}}, main.coef));
      stack.push_back(splice(main, bad - 1, 2, {{false, j + 1}}, -main.coef));
    } else if (x == y + 1) {
      stack.push_back(splice(main, bad - 1, 2, {{false, j + 1}}, main.coef));
      stack.push_back(splice(main, bad - 1, 2, {{false, j}}, -main.coef));
    } else {
      stack.push_back(splice(main, bad - 1, 2, {}, main.coef));
    }
  }
}

void check_context(const KLRContext& ctx) {
  if (!ctx.I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "quiver Hecke algebras need a finite colour set");
  if (ctx.d < 1 || ctx.d > kMaxDegree) throw Error(ErrorKind::BudgetExceeded, "d must lie in 1.." + std::to_string(kMaxDegree));
}

void check_idem(const KLRContext& ctx, const std::vector<int>& i) {
  if (static_cast<int>(i.size()) != ctx.d) throw Error(ErrorKind::InvalidArgument, "idempotent word has the wrong length");
  for (int c : i)
    if (!ctx.I.contains(c)) throw Error(ErrorKind::ColorOutsideInterval, "colour " + std::to_string(c) + " not in I");
}

}  // namespace

std::optional<Word> canonical_word(const Word& word, int d) {
  if (!is_reduced(word, d)) return std::nullopt;
  return canonical_of(perm_of(word, d), d);
}

Word longest_word(int d) {
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.rbegin(), p.rend(), 0);
  return canonical_of(p, d);
}

std::vector<std::vector<int>> idempotent_words(const Interval& I, int d) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < d; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out)
      for (int c = *I.lo(); c <= *I.hi(); ++c) {
        auto v = w;
        v.push_back(c);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<int> right_idempotent(const KLRTerm& t) {
  std::vector<int> i = t.idem;
  for (int j : t.word) std::swap(i[static_cast<std::size_t>(j - 1)], i[static_cast<std::size_t>(j)]);
  return i;
}

KLRElem::KLRElem(KLRContext ctx) : ctx_(std::move(ctx)) { check_context(ctx_); }

KLRElem KLRElem::idempotent(const KLRContext& ctx, const std::vector<int>& i) {
  KLRElem e(ctx);
  check_idem(ctx, i);
  e.terms_[{i, std::vector<int>(static_cast<std::size_t>(ctx.d), 0), {}}] = 1;
  return e;
}

KLRElem KLRElem::identity(const KLRContext& ctx) {
  KLRElem e(ctx);
  for (const auto& i : idempotent_words(ctx.I, ctx.d)) e += idempotent(ctx, i);
  return e;
}

KLRElem KLRElem::xi(const KLRContext& ctx, int k, const std::vector<int>& i) {
  if (k < 1 || k > ctx.d) throw Error(ErrorKind::InvalidArgument, "xi index out of range");
  KLRElem e = idempotent(ctx, i);
  KLRTerm t = e.terms_.begin()->first;
  ++t.exps[static_cast<std::size_t>(k - 1)];
  e.terms_.clear();
  e.terms_[t] = 1;
  return e;
}

KLRElem KLRElem::tau(const KLRContext& ctx, int j, const std::vector<int>& i) {
  if (j < 1 || j >= ctx.d) throw Error(ErrorKind::InvalidArgument, "tau index out of range");
  check_idem(ctx, i);
  KLRElem e(ctx);
  std::vector<int> left = i;
  std::swap(left[static_cast<std::size_t>(j - 1)], left[static_cast<std::size_t>(j)]);
  e.terms_[{left, std::vector<int>(static_cast<std::size_t>(ctx.d), 0), {j}}] = 1;
  return e;
}

KLRElem KLRElem::xi(const KLRContext& ctx, int k) {
  KLRElem e(ctx);
  for (const auto& i : idempotent_words(ctx.I, ctx.d)) e += xi(ctx, k, i);
  return e;
}

KLRElem KLRElem::tau(const KLRContext& ctx, int j) {
  KLRElem e(ctx);
  for (const auto& i : idempotent_words(ctx.I, ctx.d)) e += tau(ctx, j, i);
  return e;
}

void KLRElem::add_term(const KLRTerm& t, const Integer& c) {
  if (c == 0) return;
  Integer& slot = terms_[t];
  slot += c;
  if (slot == 0) terms_.erase(t);
}

void KLRElem::require_same(const KLRElem& o) const {
  if (!(ctx_ == o.ctx_)) throw Error(ErrorKind::ContextMismatch, "elements of different quiver Hecke algebras");
}

KLRElem& KLRElem::operator+=(const KLRElem& o) {
  require_same(o);
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

KLRElem& KLRElem::operator-=(const KLRElem& o) {
  require_same(o);
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

KLRElem& KLRElem::operator*=(const Integer& c) {
  if (c == 0) terms_.clear();
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

std::string KLRElem::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << " * e(";
    for (std::size_t k = 0; k < t.idem.size(); ++k) os << (k ? "," : "") << t.idem[k];
    os << ")";
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (t.exps[k] == 0) continue;
      os << " xi" << k + 1;
      if (t.exps[k] != 1) os << "^" << t.exps[k];
    }
    if (!t.word.empty()) {
      os << " tau[";
      for (std::size_t k = 0; k < t.word.size(); ++k) os << (k ? "," : "") << t.word[k];
      os << "]";
    }
  }
  return os.str();
}

KLRElem klr_mul(const KLRElem& x, const KLRElem& y) {
  if (!(x.context() == y.context())) throw Error(ErrorKind::ContextMismatch, "elements of different quiver Hecke algebras");
  const int d = x.context().d;
  KLRElem::Terms out;
  for (const auto& [a, ca] : x.terms()) {
    const auto mid = right_idempotent(a);
    for (const auto& [b, cb] : y.terms()) {
      if (b.idem != mid) continue;
      Work w{ca * cb, a.idem, a.exps, {}};
      for (int j : a.word) w.gens.push_back({true, j});
      for (int k = 0; k < d; ++k)
        for (int r = 0; r < b.exps[static_cast<std::size_t>(k)]; ++r) w.gens.push_back({false, k + 1});
      for (int j : b.word) w.gens.push_back({true, j});
      normalize(std::move(w), d, out);
    }
  }
  KLRElem r(x.context());
  for (const auto& [t, c] : out) r.add_term(t, c);
  return r;
}

KLRElem operator*(const KLRElem& x, const KLRElem& y) { return klr_mul(x, y); }

std::optional<int> klr_degree(const KLRElem& x) {
  std::optional<int> deg;
  for (const auto& [t, c] : x.terms()) {
    int g = 2 * std::accumulate(t.exps.begin(), t.exps.end(), 0);
    std::vector<int> i = t.idem;
    for (int j : t.word) {
      std::swap(i[static_cast<std::size_t>(j - 1)], i[static_cast<std::size_t>(j)]);
      g -= cartan(i[static_cast<std::size_t>(j - 1)], i[static_cast<std::size_t>(j)]);
    }
    if (deg && *deg != g) return std::nullopt;
    deg = g;
  }
  return deg ? deg : std::optional<int>(0);
}

RelationReport verify_relations(const Interval& I, int d) {
  if (!I.is_finite() || I.size() > 4 || d > 3 || d < 1)
    throw Error(ErrorKind::BudgetExceeded, "relation sweep limited to |I| <= 4 and d <= 3");
  const KLRContext ctx{I, d};
  RelationReport rep;
  auto check = [&](const std::string& name, const KLRElem& lhs, const KLRElem& rhs) {
    ++rep.checked;
    if (!(lhs == rhs)) rep.failures.push_back(name + ": " + (lhs - rhs).to_string());
  };
  auto label = [](const std::string& rel, const std::vector<int>& i, std::initializer_list<int> idx) {
    std::string s = rel + " e(";
    for (std::size_t k = 0; k < i.size(); ++k) s += (k ? "," : "") + std::to_string(i[k]);
    s += ")";
    for (int v : idx) s += " " + std::to_string(v);
    return s;
  };
  std::vector<KLRElem> X, T;
  for (int k = 1; k <= d; ++k) X.push_back(KLRElem::xi(ctx, k));
  for (int j = 1; j < d; ++j) T.push_back(KLRElem::tau(ctx, j));
  const KLRElem one = KLRElem::identity(ctx);
  auto Xk = [&](int k) -> const KLRElem& { return X[static_cast<std::size_t>(k - 1)]; };
  auto Tj = [&](int j) -> const KLRElem& { return T[static_cast<std::size_t>(j - 1)]; };
  const auto words = idempotent_words(I, d);

  for (const auto& g : X) check("unit", one * g, g), check("unit", g * one, g);
  for (const auto& g : T) check("unit", one * g, g), check("unit", g * one, g);

  for (const auto& i : words) {
    const KLRElem e = KLRElem::idempotent(ctx, i);
    const KLRElem zero(ctx);
    for (int k = 1; k <= d; ++k) {
      check(label("xi commute", i, {k}), Xk(k) * e, e * Xk(k));
      for (int m = 1; m <= d; ++m) check(label("xi commute", i, {k, m}), Xk(k) * Xk(m) * e, Xk(m) * Xk(k) * e);
    }
    for (const auto& j : words) check(label("idempotents", i, {}), e * KLRElem::idempotent(ctx, j), i == j ? e : zero);
    for (int j = 1; j < d; ++j) {
      std::vector<int> ti = i;
      std::swap(ti[static_cast<std::size_t>(j - 1)], ti[static_cast<std::size_t>(j)]);
      const int a = i[static_cast<std::size_t>(j - 1)], b = i[static_cast<std::size_t>(j)];
      check(label("tau idempotent", i, {j}), Tj(j) * e, KLRElem::idempotent(ctx, ti) * Tj(j));
      for (int k = 1; k <= d; ++k) {
        const int tk = k == j ? j + 1 : k == j + 1 ? j : k;
        KLRElem rhs(ctx);
        if (a == b && k == j + 1) rhs = e;
        if (a == b && k == j) rhs -= e;
        check(label("tau xi", i, {j, k}), Tj(j) * Xk(k) * e - Xk(tk) * Tj(j) * e, rhs);
      }
      for (int k = 1; k < d; ++k)
        if (std::abs(j - k) > 1) check(label("tau commute", i, {j, k}), Tj(j) * Tj(k) * e, Tj(k) * Tj(j) * e);
      KLRElem sq(ctx);
      if (a == b - 1) sq = Xk(j) * e - Xk(j + 1) * e;
      else if (a == b + 1) sq = Xk(j + 1) * e - Xk(j) * e;
      else if (a != b) sq = e;
      check(label("tau square", i, {j}), Tj(j) * Tj(j) * e, sq);
      if (j + 1 < d) {
        const int c = i[static_cast<std::size_t>(j + 1)];
        KLRElem rhs(ctx);
        if (a == b - 1 && c == a) rhs = e;
        if (a == b + 1 && c == a) rhs -= e;
        check(label("braid", i, {j}), Tj(j + 1) * Tj(j) * Tj(j + 1) * e - Tj(j) * Tj(j + 1) * Tj(j) * e, rhs);
      }
    }
  }
  return rep;
}

KLRElem b_idempotent(int m, int colour) {
  if (m < 1 || m > 4) throw Error(ErrorKind::BudgetExceeded, "b_m is limited to m <= 4");
  const KLRContext ctx{Interval::finite(colour, colour), m};
  const std::vector<int> i(static_cast<std::size_t>(m), colour);
  KLRElem tw(ctx);
  tw.add_term({i, std::vector<int>(static_cast<std::size_t>(m), 0), longest_word(m)}, 1);
  KLRElem x(ctx);
  std::vector<int> delta;
  for (int k = 1; k <= m; ++k) delta.push_back(m - k);
  x.add_term({i, delta, {}}, 1);
  return klr_mul(tw, x);
}

}  // namespace superkl
