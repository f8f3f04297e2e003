// Command-line front end for the explicit-formula toolkit: test functions
// and their transforms, archimedean terms, prime sums, Dirichlet character
// tables, desk-scale zero finding, and the named bound evaluators.
//
// Exit codes: 0 success, 2 domain error, 3 capacity/precision error.
// Output: stdout carries data (text, json, or csv); stderr carries logs.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lowzero/archimedean.hpp"
#include "lowzero/bounds.hpp"
#include "lowzero/characters.hpp"
#include "lowzero/errors.hpp"
#include "lowzero/explicit_formula.hpp"
#include "lowzero/primes.hpp"
#include "lowzero/specfun.hpp"
#include "lowzero/table_io.hpp"
#include "lowzero/testfuncs.hpp"
#include "lowzero/zerofinder.hpp"

using namespace lowzero;
using nlohmann::json;

namespace {

struct Common {
  std::string format = "text";
  unsigned long seed = 0;
  int threads = 1;
};

// Ordered key/value list so the parameter echo is deterministic.
using Params = std::vector<std::pair<std::string, std::string>>;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void emit_scalars(const Common& c, const Params& params,
                  const std::vector<std::pair<std::string, double>>& values) {
  if (c.format == "json") {
    json jp = json::object(), jv = json::object();
    for (const auto& [k, v] : params) jp[k] = v;
    for (const auto& [k, v] : values) jv[k] = v;
    std::printf("%s\n", json{{"params", jp}, {"results", jv}}.dump(1).c_str());
    return;
  }
  if (c.format == "csv") {
    std::string head = "#";
    for (const auto& [k, v] : params) head += " " + k + "=" + v;
    std::printf("%s\nname,value\n", head.c_str());
    for (const auto& [k, v] : values)
      std::printf("%s,%s\n", k.c_str(), fmt_double(v).c_str());
    return;
  }
  for (const auto& [k, v] : params)
    std::printf("# %s = %s\n", k.c_str(), v.c_str());
  for (const auto& [k, v] : values)
    std::printf("%s = %s\n", k.c_str(), fmt_double(v).c_str());
}

void emit_table(const Common& c, const Params& params, const Table& t) {
  if (c.format == "json") {
    json jp = json::object();
    for (const auto& [k, v] : params) jp[k] = v;
    std::printf("%s\n%s",
                json{{"params", jp}}.dump(1).c_str(), to_json(t).c_str());
    return;
  }
  std::string head = "#";
  for (const auto& [k, v] : params) head += " " + k + "=" + v;
  std::printf("%s\n%s", head.c_str(), to_csv(t).c_str());
}

// Range flag syntax lo:hi:step (inclusive endpoints within 1e-12); a bare
// number is a single-point range.
std::vector<double> parse_range(const std::string& spec) {
  std::vector<double> out;
  double lo = 0, hi = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) == 3) {
    if (!(step > 0.0)) throw domain_error("range step must be positive");
    for (double x = lo; x <= hi + 1e-12; x += step) out.push_back(x);
    return out;
  }
  char trailing = 0;
  if (std::sscanf(spec.c_str(), "%lf%c", &lo, &trailing) == 1) {
    out.push_back(lo);
    return out;
  }
  throw domain_error("cannot parse range '" + spec + "' (want lo:hi:step)");
}

TestFunction make_tf(const std::string& family, double param) {
  if (family == "falpha") return TestFunction::falpha(param);
  if (family == "triangle") return TestFunction::triangle();
  if (family == "galpha") return TestFunction::galpha(param);
  if (family == "kernel") return TestFunction::kernel();
  if (family == "ltheta") return TestFunction::ltheta(param);
  if (family == "jbeta") return TestFunction::jbeta(param);
  if (family == "gbeta") return TestFunction::gbeta_minorant(static_cast<int>(param));
  throw domain_error("unknown family '" + family +
                     "' (falpha|triangle|galpha|kernel|ltheta|jbeta|gbeta)");
}

Params tf_params(const Common& c, const std::string& family, double param) {
  Params p{{"family", family}, {"param", fmt_double(param)},
           {"format", c.format}, {"seed", std::to_string(c.seed)},
           {"threads", std::to_string(c.threads)}};
  return p;
}

std::size_t resolve_index(const CharacterTable& table, long long index) {
  if (index >= 0) return static_cast<std::size_t>(index);
  const auto prim = table.primitive_indices();
  if (prim.empty()) throw domain_error("modulus has no primitive characters");
  return prim.front();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lowzero: positivity-technique toolkit for low-lying zeros of "
      "Dirichlet L-functions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Common common;
  app.add_option("--format", common.format, "output format: text|json|csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", common.seed, "seed for any randomized sampling")
      ->capture_default_str();
  app.add_option("--threads", common.threads, "worker-thread cap")
      ->capture_default_str();

  std::string family = "triangle", which = "fig1", twist = "none",
              range_spec = "1", cache_path;
  double param = 0, xval = 0, tval = 0, Tdil = 2, shift = 0, t0 = 1.0,
         alpha = 2.6, height = 30, beta = 1.0, aexp = 1.0, grid_step = 1e-3,
         Cconst = 3.0, qreal = 0, logq = 0;
  std::uint64_t q = 4, limit = 1000000, Njut = 100, Djut = 100;
  long long dfund = 5;
  long long index = -1;

  // ---- tf: test-function evaluation (families behind Theorems 1-12) ----
  auto* tf = app.add_subcommand("tf", "test functions and transforms");
  tf->require_subcommand(1);
  auto add_tf_common = [&](CLI::App* s) {
    s->add_option("--family,--tf", family, "falpha|triangle|galpha|kernel|ltheta|jbeta|gbeta");
    s->add_option("--param", param, "family parameter (alpha/theta/beta)");
  };
  auto* tf_eval = tf->add_subcommand("eval", "evaluate F(x)");
  add_tf_common(tf_eval);
  tf_eval->add_option("--x", range_spec, "x or lo:hi:step");
  auto* tf_fourier = tf->add_subcommand("fourier", "closed-form transform and sign threshold");
  add_tf_common(tf_fourier);
  tf_fourier->add_option("--t", range_spec, "t or lo:hi:step");
  auto* tf_sigma = tf->add_subcommand("sigma", "weighted second moment sigma(F)");
  add_tf_common(tf_sigma);

  // ---- arch: archimedean term of the explicit formula ----
  auto* arch = app.add_subcommand("arch", "archimedean integral I(F_T)");
  add_tf_common(arch);
  arch->add_option("--T", Tdil, "dilation")->required();
  arch->add_option("--shift", shift, "parity delta (0/1) or Re(mu)");

  // ---- primes ----
  auto* primes = app.add_subcommand("primes", "sieve-backed prime sums");
  primes->require_subcommand(1);
  auto* primes_psi = primes->add_subcommand("psi", "Chebyshev psi(x)");
  primes_psi->add_option("--x", xval, "argument")->required();
  primes_psi->add_option("--limit", limit, "sieve limit");
  primes_psi->add_option("--cache", cache_path, "binary prime cache path");
  auto* primes_sum = primes->add_subcommand("sum", "weighted prime-power sum");
  add_tf_common(primes_sum);
  primes_sum->add_option("--T", Tdil, "dilation")->required();
  primes_sum->add_option("--limit", limit, "sieve limit");
  primes_sum->add_option("--cache", cache_path, "binary prime cache path");
  primes_sum->add_option("--twist", twist, "none|char|kronecker");
  primes_sum->add_option("--q", q, "character modulus (twist=char)");
  primes_sum->add_option("--index", index, "character index (twist=char)");
  primes_sum->add_option("--d", dfund, "discriminant (twist=kronecker)");

  // ---- chars ----
  auto* chars = app.add_subcommand("chars", "Dirichlet character tables");
  chars->require_subcommand(1);
  auto* chars_build = chars->add_subcommand("build", "list characters mod q");
  chars_build->add_option("--q", q, "modulus")->required();
  auto* chars_cond = chars->add_subcommand("conductor", "average-conductor identity");
  chars_cond->add_option("--q", q, "modulus")->required();
  auto* chars_ortho = chars->add_subcommand("ortho", "orthogonality check");
  chars_ortho->add_option("--q", q, "modulus")->required();
  auto* chars_jutila = chars->add_subcommand("jutila", "mean-square character-sum monitor");
  chars_jutila->add_option("--N", Njut, "prime cutoff");
  chars_jutila->add_option("--D", Djut, "discriminant cutoff");

  // ---- weil ----
  auto* weil = app.add_subcommand("weil", "explicit-formula assembly");
  weil->require_subcommand(1);
  auto* weil_rhs_cmd = weil->add_subcommand("rhs", "log(q/pi) - I - prime sum");
  weil_rhs_cmd->add_option("--q", q, "modulus")->required();
  weil_rhs_cmd->add_option("--index", index, "character index (default: first primitive)");
  add_tf_common(weil_rhs_cmd);
  weil_rhs_cmd->add_option("--T", Tdil, "dilation")->required();
  weil_rhs_cmd->add_option("--limit", limit, "sieve limit");
  auto* weil_balance = weil->add_subcommand("balance", "rhs vs zero side with tail bound");
  weil_balance->add_option("--q", q, "modulus")->required();
  add_tf_common(weil_balance);
  weil_balance->add_option("--T", Tdil, "dilation")->required();
  weil_balance->add_option("--height", height, "zero-scan height");
  weil_balance->add_option("--limit", limit, "sieve limit");

  // ---- zeros ----
  auto* zeros = app.add_subcommand("zeros", "critical-line zero scan");
  zeros->require_subcommand(1);
  auto* zeros_find = zeros->add_subcommand("find", "list zeros up to a height");
  zeros_find->add_option("--q", q, "modulus")->required();
  zeros_find->add_option("--index", index, "character index (default: first primitive)");
  zeros_find->add_option("--height", height, "scan height");
  auto* zeros_stats = zeros->add_subcommand("stats", "lowest-zero statistics");
  zeros_stats->add_option("--q", q, "modulus")->required();
  zeros_stats->add_option("--index", index, "character index (default: first primitive)");
  zeros_stats->add_option("--height", height, "scan height");

  // ---- bounds ----
  auto* bounds = app.add_subcommand("bounds", "theorem bound evaluators");
  bounds->require_subcommand(1);
  std::map<std::string, int> thm_map{{"thm1", 1}, {"thm2", 2}, {"thm3", 3},
                                     {"thm4", 4}, {"thm5", 5}, {"thm6", 6},
                                     {"thm14", 14}};
  for (const auto& [name, id] : thm_map) {
    const char* blurb =
        id == 1    ? "lowest-zero height bound (single character)"
        : id == 2  ? "central-order bound (single character)"
        : id == 3  ? "lowest non-real zero bound (single character)"
        : id == 4  ? "family average order of vanishing"
        : id == 5  ? "family minimum normalized lowest zero"
        : id == 6  ? "family maximum normalized lowest zero"
                   : "effective lowest-zero bound for q >= 1e24";
    auto* s = bounds->add_subcommand(name, blurb);
    s->add_option("--q", qreal, "conductor");
    s->add_option("--logq", logq, "log of the conductor (for huge q)");
    if (id == 1) s->add_option("--count-C", Cconst, "also report the zero-count bound");
  }
  auto* bounds_prop = bounds->add_subcommand("proportions", "low-lying proportion curves");
  bounds_prop->add_option("--which", which, "hr|thm7|generalq|ltheta|quadratic")->required();
  bounds_prop->add_option("--beta", range_spec, "beta or lo:hi:step")->required();
  auto* bounds_fig = bounds->add_subcommand("figure", "figure tables");
  bounds_fig->add_option("--which", which, "fig1|fig2")->required();
  bounds_fig->add_option("--beta", range_spec, "lo:hi:step")->required();

  // ---- effective ----
  auto* effective = app.add_subcommand("effective", "explicit conductor thresholds");
  effective->require_subcommand(1);
  auto* eff_q0 = effective->add_subcommand("q0", "least conductor forcing gamma1 <= t0");
  eff_q0->add_option("--t0", t0, "target zero height")->required();
  eff_q0->add_option("--alpha", alpha, "test-function parameter")->required();
  eff_q0->add_option("--grid-step", grid_step, "T-grid step");
  auto* eff_thm14 = effective->add_subcommand("thm14", "verify the effective constant chain");

  // ---- optimize ----
  auto* optimize = app.add_subcommand("optimize", "named optimizations");
  optimize->require_subcommand(1);
  auto* opt_falpha = optimize->add_subcommand("falpha", "minimize f(alpha)");
  auto* opt_s5 = optimize->add_subcommand("section5", "quadratic-family search");
  opt_s5->add_option("--beta", beta, "also report the interval exponent lambda(beta)");
  opt_s5->add_option("--lambda-beta", aexp, "unused compatibility flag")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: usage: %s\n", e.what());
    return 2;
  }

  try {
    if (tf_eval->parsed() || tf_fourier->parsed() || tf_sigma->parsed()) {
      const TestFunction f = make_tf(family, param);
      Params p = tf_params(common, family, param);
      if (tf_sigma->parsed()) {
        emit_scalars(common, p, {{"sigma", sigma_weight(f)}});
      } else if (tf_eval->parsed()) {
        const auto xs = parse_range(range_spec);
        Table t;
        t.columns = {"x", "value"};
        for (double x : xs) t.rows.push_back({x, eval(f, x)});
        if (xs.size() == 1 && common.format == "text")
          emit_scalars(common, p, {{"value", t.rows[0][1]}});
        else
          emit_table(common, p, t);
      } else {
        const auto ts = parse_range(range_spec);
        Table t;
        t.columns = {"t", "fourier", "fourier_numeric"};
        for (double x : ts)
          t.rows.push_back({x, fourier(f, x), fourier_numeric(f, x, 1e-10)});
        p.emplace_back("sign_threshold", fmt_double(sign_threshold(f)));
        if (ts.size() == 1 && common.format == "text")
          emit_scalars(common, p,
                       {{"fourier", t.rows[0][1]},
                        {"fourier_numeric", t.rows[0][2]},
                        {"sign_threshold", sign_threshold(f)}});
        else
          emit_table(common, p, t);
      }
    } else if (arch->parsed()) {
      const TestFunction f = make_tf(family, param);
      Params p = tf_params(common, family, param);
      p.emplace_back("T", fmt_double(Tdil));
      p.emplace_back("shift", fmt_double(shift));
      emit_scalars(common, p, {{"i_arch", i_arch(f, Tdil, shift)}});
    } else if (primes_psi->parsed()) {
      PrimeTable table;
      if (!cache_path.empty()) table = load_table(cache_path, limit);
      if (table.limit == 0) {
        table = build_table(limit);
        if (!cache_path.empty()) save_table(table, cache_path);
      }
      Params p{{"x", fmt_double(xval)}, {"limit", std::to_string(limit)}};
      emit_scalars(common, p, {{"psi", chebyshev_psi(xval, table)}});
    } else if (primes_sum->parsed()) {
      const TestFunction f = make_tf(family, param);
      PrimeTable table;
      if (!cache_path.empty()) table = load_table(cache_path, limit);
      if (table.limit == 0) {
        table = build_table(limit);
        if (!cache_path.empty()) save_table(table, cache_path);
      }
      WeightTwist w = WeightTwist::none();
      CharacterTable* owned = nullptr;
      CharacterTable tab(2);
      if (twist == "char") {
        tab = build_characters(q);
        owned = &tab;
        const std::size_t idx = resolve_index(tab, index);
        w = WeightTwist::custom(WeightTwist::Kind::Character,
                                [owned, idx](std::uint64_t n) {
                                  return owned->chi_re(idx, n);
                                });
      } else if (twist == "kronecker") {
        const long long d = dfund;
        w = WeightTwist::custom(WeightTwist::Kind::Kronecker,
                                [d](std::uint64_t n) {
                                  return static_cast<double>(
                                      kronecker(d, static_cast<long long>(n)));
                                });
      } else if (twist != "none") {
        throw domain_error("twist must be none|char|kronecker");
      }
      Params p = tf_params(common, family, param);
      p.emplace_back("T", fmt_double(Tdil));
      p.emplace_back("twist", twist);
      emit_scalars(common, p, {{"weighted_sum", weighted_sum(f, Tdil, w, table)}});
    } else if (chars_build->parsed()) {
      const CharacterTable tab = build_characters(q);
      Params p{{"q", std::to_string(q)}, {"phi", std::to_string(tab.phi())}};
      Table t;
      t.columns = {"index", "order", "conductor", "parity", "primitive"};
      for (std::size_t i = 0; i < tab.size(); ++i) {
        const Character& c = tab.character(i);
        t.rows.push_back({double(i), double(c.order), double(c.conductor),
                          double(c.parity), double(c.primitive)});
      }
      emit_table(common, p, t);
    } else if (chars_cond->parsed()) {
      const auto [lhs, rhs] = conductor_average(q);
      Params p{{"q", std::to_string(q)}};
      emit_scalars(common, p,
                   {{"lhs", lhs}, {"rhs", rhs}, {"gap", std::fabs(lhs - rhs)}});
    } else if (chars_ortho->parsed()) {
      const CharacterTable tab = build_characters(q);
      Params p{{"q", std::to_string(q)}};
      emit_scalars(common, p, {{"orthogonal", tab.orthogonality_check() ? 1.0 : 0.0}});
    } else if (chars_jutila->parsed()) {
      Params p{{"N", std::to_string(Njut)}, {"D", std::to_string(Djut)}};
      emit_scalars(common, p, {{"ratio", jutila_ratio(Njut, Djut)}});
    } else if (weil_rhs_cmd->parsed()) {
      const CharacterTable tab = build_characters(q);
      const std::size_t idx = resolve_index(tab, index);
      const PrimeTable table = build_table(limit);
      const auto w = weil_rhs(tab, idx, make_tf(family, param), Tdil, table);
      Params p = tf_params(common, family, param);
      p.emplace_back("q", std::to_string(q));
      p.emplace_back("index", std::to_string(idx));
      p.emplace_back("T", fmt_double(Tdil));
      emit_scalars(common, p,
                   {{"log_term", w.log_term},
                    {"arch_term", w.arch_term},
                    {"prime_term", w.prime_term},
                    {"rhs", w.rhs}});
    } else if (weil_balance->parsed()) {
      const CharacterTable tab = build_characters(q);
      const TestFunction f = make_tf(family, param);
      const PrimeTable table = build_table(limit);
      const auto prim = tab.primitive_indices();
      if (prim.empty()) throw domain_error("modulus has no primitive characters");
      const auto lists = scan_characters(tab, prim, height, common.threads);
      auto find_list = [&](std::size_t idx) -> const ZeroList& {
        for (const auto& zl : lists)
          if (zl.char_index == idx) return zl;
        throw capacity_error("zero list missing");
      };
      Table t;
      t.columns = {"index", "rhs", "zero_side", "residual", "tail", "within_tail"};
      for (std::size_t idx : prim) {
        const auto w = weil_rhs(tab, idx, f, Tdil, table);
        const double zs = two_sided_zero_sum(
            find_list(idx), find_list(tab.conjugate_index(idx)), f, Tdil);
        const double tail = zero_tail_bound(double(q), f, Tdil, height);
        const double resid = std::fabs(w.rhs - zs);
        t.rows.push_back({double(idx), w.rhs, zs, resid, tail,
                          resid <= tail + 1e-6 ? 1.0 : 0.0});
      }
      Params p = tf_params(common, family, param);
      p.emplace_back("q", std::to_string(q));
      p.emplace_back("T", fmt_double(Tdil));
      p.emplace_back("height", fmt_double(height));
      emit_table(common, p, t);
    } else if (zeros_find->parsed()) {
      const CharacterTable tab = build_characters(q);
      const std::size_t idx = resolve_index(tab, index);
      const auto lists = scan_characters(tab, {idx}, height, common.threads);
      ZeroList zl;
      for (const auto& l : lists)
        if (l.char_index == idx) zl = l;
      Params p{{"q", std::to_string(q)},
               {"index", std::to_string(idx)},
               {"height", fmt_double(height)},
               {"complete", zl.complete ? "1" : "0"}};
      Table t;
      t.columns = {"q", "char_index", "gamma", "refined_residual"};
      for (std::size_t i = 0; i < zl.ordinates.size(); ++i)
        t.rows.push_back({double(q), double(idx), zl.ordinates[i], zl.residuals[i]});
      emit_table(common, p, t);
    } else if (zeros_stats->parsed()) {
      const CharacterTable tab = build_characters(q);
      const std::size_t idx = resolve_index(tab, index);
      const GammaStats st = gamma_stats(tab, idx, height);
      Params p{{"q", std::to_string(q)},
               {"index", std::to_string(idx)},
               {"height", fmt_double(height)}};
      emit_scalars(common, p,
                   {{"gamma1", st.gamma1},
                    {"gamma1_nonreal", st.gamma1_nonreal},
                    {"n_central", double(st.n_central)},
                    {"possible_central_zero", st.possible_central_zero ? 1.0 : 0.0},
                    {"complete", st.complete ? 1.0 : 0.0}});
    } else if (bounds->parsed() &&
               (bounds_prop->parsed() || bounds_fig->parsed())) {
      if (bounds_fig->parsed()) {
        const auto grid = parse_range(range_spec);
        if (grid.size() < 2) throw domain_error("figure needs a lo:hi:step grid");
        const Figure fig = which == "fig1" ? Figure::Fig1 : Figure::Fig2;
        if (which != "fig1" && which != "fig2")
          throw domain_error("figure --which must be fig1|fig2");
        const Table t = figure_data(fig, grid.front(), grid.back(),
                                    grid[1] - grid[0]);
        Params p{{"which", which}, {"beta", range_spec}};
        emit_table(common, p, t);
      } else {
        const auto grid = parse_range(range_spec);
        Table t;
        t.columns = {"beta", which};
        for (double b : grid) {
          double v = 0;
          if (which == "hr") v = hr_proportion(b);
          else if (which == "thm7") v = thm7_proportion(b);
          else if (which == "generalq") v = remark_general_q_proportion(b);
          else if (which == "ltheta") v = ltheta_proportion(b);
          else if (which == "quadratic") v = quadratic_proportion(b);
          else throw domain_error("unknown proportion curve '" + which + "'");
          t.rows.push_back({b, v});
        }
        Params p{{"which", which}, {"beta", range_spec}};
        if (grid.size() == 1 && common.format == "text")
          emit_scalars(common, p, {{which, t.rows[0][1]}});
        else
          emit_table(common, p, t);
      }
    } else if (bounds->parsed()) {
      BoundReport r;
      const bool use_logq = logq > 0.0;
      for (const auto& [name, id] : thm_map) {
        if (!bounds->get_subcommand(name)->parsed()) continue;
        switch (id) {
          case 1: r = use_logq ? thm1_gamma_bound_logq(logq) : thm1_gamma_bound(qreal); break;
          case 2: r = use_logq ? thm2_n_bound_logq(logq) : thm2_n_bound(qreal); break;
          case 3: r = use_logq ? thm3_tilde_bound_logq(logq) : thm3_tilde_bound(qreal); break;
          case 4: r = thm4_average_vanishing(qreal); break;
          case 5: r = thm5_min_gamma(qreal); break;
          case 6: r = thm6_max_gamma(qreal); break;
          case 14: r = thm14_bound(qreal); break;
        }
      }
      Params p{{"theorem", r.theorem_id}};
      for (const auto& [k, v] : r.input) p.emplace_back(k, fmt_double(v));
      std::vector<std::pair<std::string, double>> vals{{"value", r.value},
                                                       {"valid", r.valid ? 1.0 : 0.0}};
      for (const auto& [k, v] : r.terms) vals.emplace_back("term_" + k, v);
      if (bounds->get_subcommand("thm1")->parsed() &&
          bounds->get_subcommand("thm1")->count("--count-C")) {
        const BoundReport zc = use_logq ? thm1_zero_count_logq(logq, Cconst)
                                        : thm1_zero_count(qreal, Cconst);
        vals.emplace_back("zero_count_bound", zc.value);
        vals.emplace_back("zero_count_coefficient", zc.terms.at("coefficient"));
      }
      emit_scalars(common, p, vals);
    } else if (eff_q0->parsed()) {
      const double Tmax = std::sqrt((alpha + 1.0) / (alpha - 1.0)) * kPi / t0;
      const PrimeTable table =
          build_table(static_cast<std::uint64_t>(std::exp(Tmax)) + 2);
      const EffectiveQ0 r = effective_q0(t0, alpha, table, grid_step);
      Params p{{"t0", fmt_double(t0)},
               {"alpha", fmt_double(alpha)},
               {"grid_step", fmt_double(grid_step)}};
      emit_scalars(common, p,
                   {{"C", r.C},
                    {"q0", r.q0},
                    {"argmax_T", r.argmax_T},
                    {"interior", r.interior ? 1.0 : 0.0}});
    } else if (eff_thm14->parsed()) {
      const Thm14Verification v = thm14_verify();
      Params p{};
      emit_scalars(common, p,
                   {{"kernel_max", v.kernel_max},
                    {"kernel_integral", v.kernel_integral},
                    {"digamma_const", v.digamma_const},
                    {"psi_slope_2x", v.psi_slope_2x},
                    {"psi_slope_4x", v.psi_slope_4x},
                    {"chain_ok", v.chain_ok ? 1.0 : 0.0},
                    {"ok", v.ok ? 1.0 : 0.0}});
    } else if (opt_falpha->parsed()) {
      const auto& opt = falpha_optimum();
      emit_scalars(common, {},
                   {{"alpha0", opt.alpha0}, {"f_min", opt.f0}, {"beta0", opt.beta0}});
    } else if (opt_s5->parsed()) {
      const Section5Max m = section5_beta_max();
      std::vector<std::pair<std::string, double>> vals{{"beta_max", m.beta},
                                                       {"t_coef", m.t_coef}};
      if (opt_s5->count("--beta"))
        vals.emplace_back("lambda", section5_lambda(beta));
      emit_scalars(common, {{"beta", fmt_double(beta)}}, vals);
    }
  } catch (const domain_error& e) {
    std::fprintf(stderr, "error: domain: %s\n", e.what());
    return 2;
  } catch (const precision_error& e) {
    std::fprintf(stderr, "error: precision: %s\n", e.what());
    return 3;
  } catch (const capacity_error& e) {
    std::fprintf(stderr, "error: capacity: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
