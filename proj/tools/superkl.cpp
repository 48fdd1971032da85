// superkl: command-line front end to the superkl library.
#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "superkl/canonical.hpp"
#include "superkl/crystal.hpp"
#include "superkl/errors.hpp"
#include "superkl/klr.hpp"
#include "superkl/superweights.hpp"

using json = nlohmann::ordered_json;
using namespace superkl;

namespace {

constexpr std::size_t kMaxPosetWeights = 2000;
constexpr std::size_t kMaxModuleWeights = 20000;

struct Options {
  std::string interval = "0:1";
  std::string n = "1";
  std::string c = "0";
  std::string format = "json";
  std::string out;
  int threads = 0;
  int max_r = 6;
  std::string lambda, mu, word, coords, other, growth = "default";
  int d = 2, m = 2, cap = 12;
};

/// What a command produced; empty members mean the format is not offered.
struct Output {
  json data;
  std::optional<std::string> text, tsv, dot;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "cannot parse integer list '" + s + "'");
    }
  }
  return out;
}

std::vector<long long> parse_coords(const std::string& s) {
  std::vector<long long> out;
  for (int v : parse_ints(s)) out.push_back(v);
  return out;
}

TypeNC type_of(const Options& o) {
  TypeNC t{parse_ints(o.n), parse_ints(o.c)};
  t.validate();
  return t;
}

json type_json(const TypeNC& t) { return {{"n", t.n}, {"c", t.c}}; }

json matrix_json(const Matrix01& m, const Interval& I) {
  auto [lo, hi] = display_window(m, I);
  json rows = json::array();
  for (const auto& r : m.render_rows(lo, hi)) rows.push_back(r);
  return {{"window_start", lo}, {"rows", rows}};
}

json eps_json(const EpsWeight& w) {
  json out = json::array();
  for (const auto& [j, v] : w) out.push_back({j, v});
  return out;
}

json vec_json(const ModuleVec& v, const Interval& I) {
  json terms = json::array();
  for (const auto& [m, c] : v.terms()) terms.push_back({{"mu", matrix_json(m, I)}, {"coeff", c.to_string()}});
  return terms;
}

std::string vec_text(const ModuleVec& v, const Interval& I) {
  if (v.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : v.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ") v" + to_text(m, I);
  }
  return s;
}

json header(const std::string& command, const Interval& I, const TypeNC& t) {
  return {{"command", command}, {"interval", I.to_string()}, {"type", type_json(t)}};
}

Matrix01 member(const std::string& text, const std::string& flag, const Interval& I, const TypeNC& t) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, flag + " is required");
  Matrix01 m = parse_matrix(text, t);
  check_member(m, I, t);
  return m;
}

void require_finite(const Interval& I) {
  if (!I.is_finite()) throw Error(ErrorKind::IntervalInfinite, "this command needs a finite interval");
}

unsigned thread_count(const Options& o) {
  if (o.threads > 0) return static_cast<unsigned>(o.threads);
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex mu;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

// Optional on-disk memo of psi images, one JSON file per module.
class PsiCache {
 public:
  explicit PsiCache(const Context& ctx) {
    const char* dir = std::getenv("SUPERKL_CACHE_DIR");
    if (!dir || !*dir) return;
    std::string name = "psi_" + ctx.I.to_string() + "_n";
    for (int x : ctx.t.n) name += "-" + std::to_string(x);
    name += "_c";
    for (int x : ctx.t.c) name += "-" + std::to_string(x);
    std::replace(name.begin(), name.end(), ':', '_');
    path_ = std::filesystem::path(dir) / (name + ".json");
  }

  void load(BarInvolution& psi) const {
    if (path_.empty() || !std::filesystem::exists(path_)) return;
    std::ifstream in(path_);
    const json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return;
    const Context& ctx = psi.context();
    for (const auto& [key, terms] : j.items()) {
      ModuleVec v(ctx);
      for (const auto& [m, c] : terms.items()) v.add_term(parse_matrix(m, ctx.t), LaurentInt::parse(c.get<std::string>()));
      psi.preload(parse_matrix(key, ctx.t), v);
    }
  }

  void save(const BarInvolution& psi) const {
    if (path_.empty()) return;
    const Context& ctx = psi.context();
    json j = json::object();
    for (const auto& [m, v] : psi.snapshot()) {
      json terms = json::object();
      for (const auto& [mu, c] : v.terms()) terms[to_text(mu, ctx.I)] = c.to_string();
      j[to_text(m, ctx.I)] = terms;
    }
    std::filesystem::create_directories(path_.parent_path());
    const auto tmp = path_.string() + ".tmp";
    std::ofstream(tmp) << j.dump() << "\n";
    std::filesystem::rename(tmp, path_);
  }

 private:
  std::filesystem::path path_;
};

// A solver over a finite context, backed by the optional psi cache.
struct Solver {
  explicit Solver(const Context& ctx) : cache(ctx), solver(ctx) { cache.load(solver.psi()); }
  ~Solver() {
    try {
      cache.save(solver.psi());
    } catch (...) {
    }
  }
  PsiCache cache;
  CanonicalSolver solver;
};

// Finite window on which a weight over I is computed; I itself when finite.
Interval working_window(const std::vector<Matrix01>& ms, const Interval& I, const TypeNC& t) {
  return I.is_finite() ? I : minimal_window(ms, I, t);
}

// ---------------------------------------------------------------------------

Output cmd_poset(const Options& o) {
  const Interval I = Interval::parse(o.interval);
  const TypeNC t = type_of(o);
  require_finite(I);
  if (weight_count(I, t) > kMaxPosetWeights)
    throw Error(ErrorKind::BudgetExceeded, "poset output limited to " + std::to_string(kMaxPosetWeights) + " weights");
  const auto ws = enumerate_weights(I, t);
  const std::size_t n = ws.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) lt[a][b] = a != b && order_leq(ws[a], ws[b], I);
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!lt[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c) cover = !(lt[a][c] && lt[c][b]);
      if (cover) covers.emplace_back(a, b);
    }
  Output out;
  out.data = header("poset", I, t);
  json weights = json::array(), cj = json::array();
  for (const auto& m : ws) weights.push_back(matrix_json(m, I));
  for (auto [a, b] : covers) cj.push_back({{"lower", a}, {"upper", b}});
  out.data["weights"] = weights;
  out.data["covers"] = cj;
  std::ostringstream text, tsv;
  text << n << " weights, " << covers.size() << " cover relations\n";
  for (std::size_t a = 0; a < n; ++a) text << a << "\t" << to_text(ws[a], I) << "\n";
  for (auto [a, b] : covers) text << to_text(ws[a], I) << " < " << to_text(ws[b], I) << "\n";
  tsv << "lower\tupper\n";
  for (auto [a, b] : covers) tsv << to_text(ws[a], I) << "\t" << to_text(ws[b], I) << "\n";
  out.text = text.str();
  out.tsv = tsv.str();
  return out;
}

enum class Basis { Canonical, Dual, Twisted };

Output basis_command(const Options& o, Basis kind) {
  static const char* names[] = {"canonical", "dualbasis", "twisted"};
  const std::string name = names[static_cast<int>(kind)];
  const Interval I = Interval::parse(o.interval);
  const TypeNC t = type_of(o);
  std::vector<Matrix01> targets;
  Interval J = I;
  const std::string& flag_value = kind == Basis::Dual ? o.mu : o.lambda;
  const std::string flag = kind == Basis::Dual ? "--mu" : "--lambda";
  if (!flag_value.empty()) {
    const Matrix01 m = member(flag_value, flag, I, t);
    J = working_window({m}, I, t);
    targets.push_back(truncate(m, J));
  } else {
    if (!I.is_finite()) throw Error(ErrorKind::IntervalInfinite, name + " over an infinite interval needs " + flag);
    if (weight_count(I, t) > kMaxModuleWeights) throw Error(ErrorKind::BudgetExceeded, "module too large to list every basis vector");
    targets = enumerate_weights(I, t);
  }
  const Context ctx{J, t};
  Solver s(ctx);
  std::unique_ptr<CanonicalSolver> reversed;
  if (kind == Basis::Twisted) {
    TypeNC rt{{t.n.rbegin(), t.n.rend()}, {t.c.rbegin(), t.c.rend()}};
    reversed = std::make_unique<CanonicalSolver>(Context{J, rt});
  }
  // Warm the blocks concurrently, then read results in a fixed order.
  std::map<EpsWeight, Matrix01> reps;
  for (const auto& m : targets) reps.emplace(eps_weight(m), m);
  std::vector<Matrix01> rep_list;
  for (const auto& [w, m] : reps) rep_list.push_back(m);
  if (kind != Basis::Twisted) parallel_for(rep_list.size(), thread_count(o), [&](std::size_t i) { s.solver.block_of(rep_list[i]); });

  Output out;
  out.data = header(name, I, t);
  out.data["window"] = J.to_string();
  json vectors = json::array();
  std::ostringstream text, tsv;
  tsv << (kind == Basis::Dual ? "mu" : "lambda") << "\tnu\tcoeff\n";
  for (const auto& m : targets) {
    ModuleVec v = kind == Basis::Canonical ? s.solver.canonical(m)
                  : kind == Basis::Dual    ? s.solver.dual_canonical(m)
                                           : twisted_canonical(*reversed, ctx, m);
    vectors.push_back({{kind == Basis::Dual ? "mu" : "lambda", matrix_json(m, J)}, {"terms", vec_json(v, J)}});
    text << (kind == Basis::Dual ? "b*" : kind == Basis::Twisted ? "b~" : "b") << to_text(m, J) << " = " << vec_text(v, J) << "\n";
    for (const auto& [nu, c] : v.terms()) tsv << to_text(m, J) << "\t" << to_text(nu, J) << "\t" << c.to_string() << "\n";
  }
  out.data["vectors"] = vectors;
  out.text = text.str();
  out.tsv = tsv.str();
  return out;
}

Output cmd_klpoly(const Options& o) {
  const Interval I = Interval::parse(o.interval);
  const TypeNC t = type_of(o);
  const Matrix01 lam = member(o.lambda, "--lambda", I, t), mu = member(o.mu, "--mu", I, t);
  LaurentInt d, p;
  Interval J = I;
  std::optional<Interval> check;
  if (I.is_finite()) {
    Solver s({I, t});
    d = s.solver.kl_d(lam, mu);
    p = s.solver.kl_p(lam, mu);
  } else {
    const StableResult r = kl_d_stable(lam, mu, I, t);
    d = r.value;
    J = r.window;
    check = r.check_window;
    Solver s({J, t});
    p = s.solver.kl_p(truncate(lam, J), truncate(mu, J));
  }
  Output out;
  out.data = header("klpoly", I, t);
  out.data["lambda"] = matrix_json(lam, I);
  out.data["mu"] = matrix_json(mu, I);
  out.data["d"] = d.to_string();
  out.data["p"] = p.to_string();
  out.data["window"] = J.to_string();
  if (check) out.data["check_window"] = check->to_string();
  out.text = "d = " + d.to_string() + "\np = " + p.to_string() + "\n";
  out.tsv = "lambda\tmu\td\tp\n" + to_text(lam, I) + "\t" + to_text(mu, I) + "\t" + d.to_string() + "\t" + p.to_string() + "\n";
  return out;
}

Output cmd_crystal(const Options& o) {
  const Interval I = Interval::parse(o.interval);
  const TypeNC t = type_of(o);
  require_finite(I);
  if (weight_count(I, t) > kMaxModuleWeights) throw Error(ErrorKind::BudgetExceeded, "crystal graph too large");
  const CrystalGraph g = crystal_graph(I, t);
  Output out;
  out.data = header("crystal", I, t);
  json vs = json::array(), es = json::array();
  std::map<Matrix01, std::size_t> index;
  for (const auto& v : g.vertices) {
    index.emplace(v, vs.size());
    vs.push_back(matrix_json(v, I));
  }
  std::ostringstream dot, tsv, text;
  dot << "digraph crystal {\n";
  for (const auto& v : g.vertices) dot << "  \"" << to_text(v, I) << "\";\n";
  tsv << "source\tcolour\ttarget\n";
  text << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
  for (const auto& [key, target] : g.edges) {
    const auto& [src, i] = key;
    es.push_back({{"source", index.at(src)}, {"target", index.at(target)}, {"colour", i}});
    dot << "  \"" << to_text(src, I) << "\" -> \"" << to_text(target, I) << "\" [label=\"" << i << "\"];\n";
    tsv << to_text(src, I) << "\t" << i << "\t" << to_text(target, I) << "\n";
    text << "f" << i << " " << to_text(src, I) << " = " << to_text(target, I) << "\n";
  }
  dot << "}\n";
  out.data["vertices"] = vs;
  out.data["edges"] = es;
  out.dot = dot.str();
  out.tsv = tsv.str();
  out.text = text.str();
  return out;
}

Output cmd_blocks(const Options& o) {
  const Interval I = Interval::parse(o.interval);
  const TypeNC t = type_of(o);
  require_finite(I);
  if (weight_count(I, t) > kMaxModuleWeights) throw Error(ErrorKind::BudgetExceeded, "module too large");
  std::map<EpsWeight, std::vector<Matrix01>> blocks;
  for (const auto& m : enumerate_weights(I, t)) blocks[eps_weight(m)].push_back(m);
  Output out;
  out.data = header("blocks", I, t);
  json bj = json::array();
  std::ostringstream text, tsv;
  tsv << "block\tmember\n";
  std::size_t k = 0;
  for (auto& [w, ms] : blocks) {
    sort_top_down(ms, I);
    json members = json::array();
    text << "block " << k << " (" << ms.size() << "):";
    for (const auto& m : ms) {
      members.push_back(matrix_json(m, I));
      text << " " << to_text(m, I);
      tsv << k << "\t" << to_text(m, I) << "\n";
    }
    text << "\n";
    bj.push_back({{"weight", eps_json(w)}, {"size", ms.size()}, {"members", members}});
    ++k;
  }
  out.data["blocks"] = bj;
  out.text = text.str();
  out.tsv = tsv.str();
  return out;
}

Growth growth_of(const std::string& s) {
  if (s == "default") return Growth::Default;
  if (s == "alternate") return Growth::Alternate;
  if (s == "left") return Growth::Left;
  if (s == "right") return Growth::Right;
  throw Error(ErrorKind::InvalidArgument, "unknown growth '" + s + "'");
}

Output cmd_prinjective(const Options& o) {
  const Interval I = Interval::parse(o.interval);
  const TypeNC t = type_of(o);
  const Matrix01 lam = member(o.lambda, "--lambda", I, t);
  if (o.max_r < 1) throw Error(ErrorKind::InvalidArgument, "--max-r must be positive");
  const PrinjectiveResult r = is_prinjective(lam, I, t, o.max_r, growth_of(o.growth));
  if (!r.rank) throw Error(ErrorKind::BudgetExceeded, "no kappa^r component up to r = " + std::to_string(o.max_r) + " contains the weight");
  Output out;
  out.data = header("prinjective", I, t);
  out.data["lambda"] = matrix_json(lam, I);
  out.data["rank"] = *r.rank;
  json ws = json::array();
  for (const auto& w : r.windows) ws.push_back(w.to_string());
  out.data["windows"] = ws;
  out.text = "prinjective at r = " + std::to_string(*r.rank) + " (window " + r.windows.at(static_cast<std::size_t>(*r.rank - 1)).to_string() + ")\n";
  return out;
}

Output cmd_defect(const Options& o) {
  const Interval I = Interval::parse(o.interval);
  const TypeNC t = type_of(o);
  const Matrix01 lam = member(o.lambda, "--lambda", I, t);
  const Interval J = working_window({lam}, I, t);
  const int def = defect(lam, I, t);
  Output out;
  out.data = header("defect", I, t);
  out.data["lambda"] = matrix_json(lam, I);
  out.data["defect"] = def;
  out.data["window"] = J.to_string();
  out.text = "defect = " + std::to_string(def) + "\n";
  out.tsv = "lambda\tdefect\twindow\n" + to_text(lam, I) + "\t" + std::to_string(def) + "\t" + J.to_string() + "\n";
  return out;
}

SuperWeight super_of(const Options& o, const std::string& coords) {
  if (coords.empty()) throw Error(ErrorKind::InvalidArgument, "--coords is required");
  return SuperWeight(type_of(o), parse_coords(coords));
}

json super_json(const SuperWeight& w) { return {{"coords", w.coords}, {"type", type_json(w.type)}}; }

Output cmd_superweight(const Options& o) {
  const TypeNC t = type_of(o);
  const SuperWeight w = !o.lambda.empty() ? from_matrix01(member(o.lambda, "--lambda", Interval::all(), t), t) : super_of(o, o.coords);
  Output out;
  out.data = {{"command", "superweight"}, {"weight", super_json(w)}};
  out.data["parities"] = parities(t);
  out.data["rho"] = rho(t).coords;
  out.data["shifted"] = shifted_pairings(w);
  const bool dom = is_dominant(w);
  out.data["dominant"] = dom;
  std::ostringstream text;
  text << "dominant = " << (dom ? "true" : "false") << "\n";
  if (dom) {
    const Matrix01 m = to_matrix01(w);
    out.data["matrix"] = matrix_json(m, Interval::all());
    text << "matrix = " << to_text(m, Interval::all()) << "\n";
  }
  out.text = text.str();
  return out;
}

Output cmd_bruhat(const Options& o) {
  const SuperWeight a = super_of(o, o.coords);
  if (o.other.empty()) throw Error(ErrorKind::InvalidArgument, "--other is required");
  const SuperWeight b = super_of(o, o.other);
  Output out;
  out.data = {{"command", "bruhat"}, {"lambda", super_json(a)}, {"mu", super_json(b)}};
  out.data["lambda_leq_mu"] = bruhat_leq(a, b);
  out.data["mu_leq_lambda"] = bruhat_leq(b, a);
  out.data["dominance_mu_leq_lambda"] = dominance_super(a, b);
  out.text = std::string("lambda <= mu: ") + (bruhat_leq(a, b) ? "true" : "false") + "\nmu <= lambda: " + (bruhat_leq(b, a) ? "true" : "false") + "\n";
  return out;
}

Output cmd_linkage(const Options& o) {
  const SuperWeight w = super_of(o, o.coords);
  Output out;
  out.data = {{"command", "linkage"}, {"weight", super_json(w)}};
  json links = json::array();
  std::ostringstream text, tsv;
  tsv << "coords\n";
  for (const auto& mu : linkage_up(w)) {
    links.push_back(mu.coords);
    std::string row;
    for (std::size_t i = 0; i < mu.coords.size(); ++i) row += (i ? "," : "") + std::to_string(mu.coords[i]);
    text << row << "\n";
    tsv << row << "\n";
  }
  out.data["links"] = links;
  out.text = text.str();
  out.tsv = tsv.str();
  return out;
}

Output cmd_youngdim(const Options& o) {
  const Interval I = Interval::parse(o.interval);
  const TypeNC t = type_of(o);
  require_finite(I);
  const Matrix01 lam = member(o.lambda, "--lambda", I, t);
  const std::vector<int> word = parse_ints(o.word);
  for (int i : word)
    if (!I.contains(i)) throw Error(ErrorKind::ColorOutsideInterval, "colour " + std::to_string(i) + " not in I");
  Solver s({I, t});
  const LaurentInt y = young_word_dim(s.solver, lam, word);
  const int def = defect(lam, I, t);
  Output out;
  out.data = header("youngdim", I, t);
  out.data["lambda"] = matrix_json(lam, I);
  out.data["word"] = word;
  out.data["value"] = y.to_string();
  out.data["defect"] = def;
  out.data["shifted"] = y.shifted(-def).to_string();
  out.text = "(v_kappa, e_word b_lambda) = " + y.to_string() + "\ndefect = " + std::to_string(def) + "\n";
  return out;
}

Output cmd_klr_verify(const Options& o) {
  const Interval I = Interval::parse(o.interval);
  require_finite(I);
  const RelationReport rep = verify_relations(I, o.d);
  Output out;
  out.data = {{"command", "klr-verify"}, {"interval", I.to_string()}, {"d", o.d}, {"checked", rep.checked}, {"failures", rep.failures}};
  out.data["status"] = rep.failures.empty() ? "all relations hold" : "relations fail";
  std::ostringstream text;
  if (rep.failures.empty()) text << "all relations hold (" << rep.checked << " instances)\n";
  for (const auto& f : rep.failures) text << "FAIL " << f << "\n";
  out.text = text.str();
  return out;
}

Output cmd_nilhecke_rank(const Options& o) {
  const GradedRankReport r = nilhecke_graded_rank_check(o.m, o.cap);
  Output out;
  out.data = {{"command", "nilhecke-rank"}, {"m", r.m},          {"cap", r.cap},
              {"exact_through", r.exact_through},   {"image_dims", r.image_dims}, {"total_dims", r.total_dims},
              {"predicted_dims", r.predicted_dims}, {"matches", r.matches}};
  std::ostringstream text, tsv;
  tsv << "degree\timage\ttotal\tpredicted\n";
  for (std::size_t e = 0; e < r.image_dims.size(); ++e)
    tsv << e << "\t" << r.image_dims[e] << "\t" << r.total_dims[e] << "\t" << r.predicted_dims[e] << "\n";
  text << (r.matches ? "graded rank matches" : "graded rank mismatch") << " through degree " << r.exact_through << "\n";
  out.text = text.str();
  out.tsv = tsv.str();
  return out;
}

int fail(ErrorKind kind, const std::string& message) {
  const json err = {{"error", error_name(kind)}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return kind == ErrorKind::BudgetExceeded ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical bases, decomposition numbers and crystals for tensor products of gl(n|m) modules"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--interval", o.interval, "a:b, z, geq:a or leq:b");
    sub->add_option("--n", o.n, "comma-separated n_i");
    sub->add_option("--c", o.c, "comma-separated c_i in {0,1}");
    sub->add_option("--format", o.format, "json, tsv, dot or text");
    sub->add_option("--out", o.out, "write output to a file");
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  };
  std::map<std::string, std::function<Output(const Options&)>> commands = {
      {"poset", cmd_poset},
      {"canonical", [](const Options& x) { return basis_command(x, Basis::Canonical); }},
      {"klpoly", cmd_klpoly},
      {"dualbasis", [](const Options& x) { return basis_command(x, Basis::Dual); }},
      {"twisted", [](const Options& x) { return basis_command(x, Basis::Twisted); }},
      {"crystal", cmd_crystal},
      {"blocks", cmd_blocks},
      {"prinjective", cmd_prinjective},
      {"defect", cmd_defect},
      {"superweight", cmd_superweight},
      {"bruhat", cmd_bruhat},
      {"linkage", cmd_linkage},
      {"youngdim", cmd_youngdim},
      {"klr-verify", cmd_klr_verify},
      {"nilhecke-rank", cmd_nilhecke_rank},
  };
  for (const auto& [name, fn] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    common(sub);
    sub->add_option("--lambda", o.lambda, "weight, e.g. @0:10/01");
    sub->add_option("--mu", o.mu, "second weight");
    sub->add_option("--word", o.word, "comma-separated colours");
    sub->add_option("--coords", o.coords, "comma-separated super weight coordinates");
    sub->add_option("--other", o.other, "second super weight");
    sub->add_option("--max-r", o.max_r, "largest window index searched");
    sub->add_option("--growth", o.growth, "default, alternate, left or right");
    sub->add_option("--d", o.d, "number of strands");
    sub->add_option("--m", o.m, "nil-Hecke rank");
    sub->add_option("--cap", o.cap, "polynomial degree cap");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const json err = {{"error", "UsageError"}, {"message", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (o.threads < 0) throw Error(ErrorKind::InvalidArgument, "--threads must be non-negative");
    const Output out = commands.at(name)(o);
    std::optional<std::string> body;
    if (o.format == "json") body = out.data.dump(2) + "\n";
    else if (o.format == "text") body = out.text;
    else if (o.format == "tsv") body = out.tsv;
    else if (o.format == "dot") body = out.dot;
    else throw Error(ErrorKind::InvalidArgument, "unknown format '" + o.format + "'");
    if (!body) throw Error(ErrorKind::InvalidArgument, name + " has no " + o.format + " output");
    if (o.out.empty()) {
      std::cout << *body;
    } else {
      std::ofstream f(o.out);
      if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.out);
      f << *body;
    }
    return 0;
  } catch (const Error& e) {
    return fail(e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail(ErrorKind::InvalidArgument, e.what());
  }
}
