#include "sumdens/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumdens/constructions.hpp"
#include "sumdens/equidistribution.hpp"
#include "sumdens/quadrature.hpp"
#include "sumdens/random_sets.hpp"
#include "sumdens/set_io.hpp"
#include "sumdens/special_functions.hpp"
#include "sumdens/sumset_kernels.hpp"

namespace sumdens {

namespace {

using nlohmann::json;

// 12 significant digits
json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string num_text(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

json rat(const Rational& q) { return to_string(q); }

json rats(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(rat(q));
  return a;
}

json torus_json(const TorusSet& s) { return json::parse(torus_to_json(s)); }

json recipe_json(const WitnessRecipe& recipe) {
  json j{{"kind", recipe_kind(recipe)}};
  if (auto* r = std::get_if<IntervalUnionRecipe>(&recipe)) {
    j["set"] = torus_json(r->set);
  } else if (auto* r = std::get_if<APThickeningRecipe>(&recipe)) {
    j["k"] = r->k;
    j["x"] = rat(r->x);
    j["eps"] = rat(r->eps);
  } else if (auto* r = std::get_if<CantorHybridRecipe>(&recipe)) {
    j["a"] = rat(r->a);
    j["beta"] = rat(r->beta);
    j["depth"] = r->depth;
  } else if (auto* r = std::get_if<RationalResidueRecipe>(&recipe)) {
    j["g"] = r->g;
    j["r"] = r->r;
    j["gamma"] = rat(r->gamma);
    j["seed"] = r->seed;
    j["horizon"] = r->horizon;
  } else if (auto* r = std::get_if<PseudoPowerRecipe>(&recipe)) {
    j["k"] = r->k;
    j["c"] = num(r->c);
    j["theta"] = r->theta;
    j["seed"] = r->seed;
    j["horizon"] = r->horizon;
  }
  return j;
}

json certificate_json(const KneserCertificate& c) {
  json j{{"feasible", c.feasible}, {"reason", to_string(c.reason)}};
  j["g0"] = c.g0 ? json(*c.g0) : json(nullptr);
  j["r"] = c.r ? json(*c.r) : json(nullptr);
  return j;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string csv() const {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
      }
      out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
  }
};

struct Result {
  ExitCode code = ExitCode::Ok;
  json payload;
  std::optional<Table> table;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::pair<std::string, std::string> split_colon(const std::string& s, const std::string& what) {
  auto c = s.find(':');
  if (c == std::string::npos) throw UsageError(what + " expects 'a:b', got '" + s + "'");
  return {s.substr(0, c), s.substr(c + 1)};
}

std::uint64_t to_u64(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size() || s.front() == '-') throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError(what + ": bad integer '" + s + "'");
  }
}

bool looks_like_integer_set(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  while (in >> word) {
    if (word.front() == '#') {
      std::getline(in, word);
      continue;
    }
    return word == "horizon" || word == "bitmap";
  }
  return false;
}

json integer_summary(const FiniteIntegerSet& a) {
  const std::uint64_t n = a.horizon();
  json j{{"type", "integer"}, {"horizon", n}, {"size", a.size()}};
  if (n >= 2) {
    j["window"] = {n / 2, n};
    j["tail_density"] = rat(tail_density(a, n / 2, n));
  }
  return j;
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumset density toolkit: witnesses, feasibility, f_k/F_k and simulations", "sumdens"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_target;
  std::string format = "json";
  std::uint64_t seed = 0;
  int threads = 0;
  app.add_option("--out", out_target, "output file, or 'json'/'csv' to pick the stdout format");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "seed for every random draw");
  app.add_option("--threads", threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

  Result result;
  std::function<void()> action;

  std::string alpha_s, beta_s, gamma_s, set_path, save_set, theta_s = "sqrt2", grid, n_range, eta_s;
  std::uint64_t horizon = 100000, n_value = 1000000, offset = 0;
  int k = 2, kmax = 3, denominator = 3, trials = 1, samples = 50, depth = 0, ratio_denom = 3;
  double c = 1.0, tol = 1e-10, alpha_f = 0.5, beta_f = 0.5, min_f = 0.1;
  std::uint64_t m_terms = 10;
  bool bitmap = false;

  // witness
  auto* witness = app.add_subcommand("witness", "construct a set with a prescribed profile");
  witness->require_subcommand(1);
  auto* w_pair = witness->add_subcommand("pair", "A on the circle with (mu(A), mu(2A)) = (alpha, beta)");
  w_pair->add_option("--alpha", alpha_s)->required();
  w_pair->add_option("--beta", beta_s)->required();
  w_pair->add_option("--save-set", save_set, "also write the set file (JSON intervals)");
  w_pair->callback([&] {
    action = [&] {
      Rational a = parse_rational(alpha_s), b = parse_rational(beta_s);
      auto w = pair_witness(a, b);
      auto profile = sumset_profile(w.set, 2);
      if (!save_set.empty()) write_text_file(save_set, torus_to_json(w.set));
      result.payload = {{"recipe", recipe_json(w.recipe)},
                        {"set", torus_json(w.set)},
                        {"profile", rats(profile)},
                        {"verified", profile == std::vector<Rational>{a, b}}};
    };
  });

  auto* w_triplet = witness->add_subcommand("triplet", "A = [0,x] u [y,z] with profile (alpha, beta, gamma)");
  w_triplet->add_option("--alpha", alpha_s)->required();
  w_triplet->add_option("--beta", beta_s)->required();
  w_triplet->add_option("--gamma", gamma_s)->required();
  w_triplet->add_option("--save-set", save_set);
  w_triplet->callback([&] {
    action = [&] {
      Rational a = parse_rational(alpha_s), b = parse_rational(beta_s), g = parse_rational(gamma_s);
      try {
        auto w = triplet_witness(a, b, g);
        auto profile = sumset_profile(w.set, 3);
        if (!save_set.empty()) write_text_file(save_set, torus_to_json(w.set));
        result.payload = {{"recipe", {{"kind", "TwoInterval"}, {"branch", w.branch}, {"x", rat(w.x)},
                                      {"y", rat(w.y)}, {"z", rat(w.z)}}},
                          {"set", torus_json(w.set)},
                          {"profile", rats(profile)},
                          {"verified", profile == std::vector<Rational>{a, b, g}}};
      } catch (const NoTwoIntervalWitness& e) {
        result.code = ExitCode::Infeasible;
        result.payload = {{"reason", "NoTwoIntervalWitness"},
                          {"in_region", triplet_region_contains(a, b, g)},
                          {"message", e.what()}};
      }
    };
  });

  auto* w_rational = witness->add_subcommand("rational", "integer set R + g0 B with d(A) = alpha, d(2A) = beta");
  w_rational->add_option("--alpha", alpha_s)->required();
  w_rational->add_option("--beta", beta_s)->required();
  w_rational->add_option("--horizon", horizon)->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 36));
  w_rational->add_option("--save-set", save_set, "also write the integer-set file");
  w_rational->add_flag("--bitmap", bitmap, "write the set file in bitmap form");
  w_rational->callback([&] {
    action = [&] {
      Rational a = parse_rational(alpha_s), b = parse_rational(beta_s);
      try {
        auto w = rational_witness(a, b, horizon, seed);
        if (!save_set.empty()) {
          write_text_file(save_set, bitmap ? integer_to_bitmap(w.set) : integer_to_text(w.set));
        }
        FiniteIntegerSet two = sumset(w.set, w.set);
        const std::uint64_t n = w.set.horizon();
        result.payload = {{"certificate", certificate_json(w.certificate)},
                          {"recipe", recipe_json(w.recipe)},
                          {"horizon", n},
                          {"size", w.set.size()},
                          {"window", {n / 2, n}},
                          {"density_A", rat(tail_density(w.set, n / 2, n))},
                          {"density_2A", rat(tail_density(two, n / 2, n))}};
      } catch (const Infeasible& e) {
        result.code = ExitCode::Infeasible;
        result.payload = certificate_json(e.certificate);
      }
    };
  });

  auto* feasible = app.add_subcommand("feasible", "is (alpha, beta) a pair (d(A), d(2A))?");
  feasible->add_option("--alpha", alpha_s)->required();
  feasible->add_option("--beta", beta_s)->required();
  feasible->callback([&] {
    action = [&] {
      Rational a = parse_rational(alpha_s), b = parse_rational(beta_s);
      if (a < 0 || a > 1 || b < 0 || b > 1) throw InvalidInput("alpha and beta must lie in [0, 1]");
      json j{{"alpha", rat(a)}, {"beta", rat(b)}};
      if (b >= 2 * a) {
        j.update({{"feasible", true}, {"reason", "Feasible"}, {"route", "circle"}, {"g0", nullptr}, {"r", nullptr}});
      } else {
        auto cert = kneser_feasibility(a, b);
        j.update(certificate_json(cert));
        j["route"] = "kneser";
        if (!cert.feasible) result.code = ExitCode::Infeasible;
      }
      result.payload = j;
    };
  });

  auto* measure = app.add_subcommand("measure", "measure of a circle set or window density of an integer set");
  measure->add_option("--set", set_path)->required();
  measure->callback([&] {
    action = [&] {
      std::string text = read_text_file(set_path);
      if (looks_like_integer_set(text)) {
        result.payload = integer_summary(parse_integer_set(text));
        return;
      }
      TorusSet s = parse_torus_set(text);
      result.payload = {{"type", "torus"},
                        {"measure", rat(s.measure())},
                        {"components", s.component_count()},
                        {"intervals", s.intervals().size()}};
    };
  });

  auto* profile = app.add_subcommand("profile", "measures of jA for j = 1..k");
  profile->add_option("--set", set_path)->required();
  profile->add_option("--k", kmax)->check(CLI::Range(1, 64));
  profile->callback([&] {
    action = [&] {
      std::string text = read_text_file(set_path);
      if (looks_like_integer_set(text)) {
        FiniteIntegerSet a = parse_integer_set(text);
        const std::uint64_t n = a.horizon();
        if (n < 2) throw InvalidInput("integer profile needs horizon >= 2");
        std::vector<Rational> dens;
        FiniteIntegerSet cur = a;
        for (int j = 1; j <= kmax; ++j) {
          if (j > 1) cur = sumset(cur, a);
          dens.push_back(tail_density(cur, n / 2, n));
        }
        result.payload = {{"type", "integer"}, {"window", {n / 2, n}}, {"profile", rats(dens)}};
        return;
      }
      TorusSet s = parse_torus_set(text);
      result.payload = {{"type", "torus"}, {"profile", rats(sumset_profile(s, kmax))}};
    };
  });

  auto* region = app.add_subcommand("region", "two-interval triplet region");
  region->require_subcommand(1);
  auto* scan = region->add_subcommand("scan", "all [0,x] u [y,z] on the grid (1/D)Z");
  scan->add_option("--denominator", denominator)->required()->check(CLI::Range(3, 240));
  scan->add_option("--kmax", kmax)->check(CLI::Range(3, 8));
  scan->callback([&] {
    action = [&] {
      Table t;
      t.header = {"x", "y", "z"};
      for (int j = 1; j <= kmax; ++j) t.header.push_back("mu" + std::to_string(j));
      t.header.push_back("in_region");
      json rows = json::array();
      for (const auto& r : region_scan(denominator, kmax)) {
        std::vector<std::string> cells{to_string(r.x), to_string(r.y), to_string(r.z)};
        for (const auto& q : r.profile) cells.push_back(to_string(q));
        cells.push_back(r.in_region ? "true" : "false");
        rows.push_back({{"x", rat(r.x)}, {"y", rat(r.y)}, {"z", rat(r.z)},
                        {"profile", rats(r.profile)}, {"in_region", r.in_region}});
        t.rows.push_back(std::move(cells));
      }
      result.payload = {{"denominator", denominator}, {"rows", rows}};
      result.table = std::move(t);
    };
  });

  auto* fk = app.add_subcommand("fk", "lambda_k, F_k(c) and the predicted density of kA");
  fk->add_option("--k", k)->check(CLI::Range(1, 12));
  fk->add_option("--c", c)->check(CLI::NonNegativeNumber);
  fk->add_option("--tol", tol)->check(CLI::PositiveNumber);
  auto* fk_table = fk->add_subcommand("table", "F_k over a grid of c");
  fk_table->add_option("--k", k)->check(CLI::Range(1, 12));
  fk_table->add_option("--grid", grid, "c0:c1:n")->required();
  fk_table->add_option("--tol", tol)->check(CLI::PositiveNumber);
  fk->callback([&] {
    if (!fk->got_subcommand(fk_table)) {
      action = [&] {
        DensityDeficit f(k);
        double value = f(c, tol);
        result.payload = {{"k", k},
                          {"c", num(c)},
                          {"lambda_k", num(f.lambda().value)},
                          {"F_k", num(value)},
                          {"predicted_density", num(static_cast<double>(k) / (k + 1) - value)}};
      };
    }
  });
  fk_table->callback([&] {
    action = [&] {
      auto first = grid.find(':'), last = grid.rfind(':');
      if (first == std::string::npos || first == last) throw UsageError("--grid expects c0:c1:n");
      double c0 = std::stod(grid.substr(0, first));
      double c1 = std::stod(grid.substr(first + 1, last - first - 1));
      std::uint64_t n = to_u64(grid.substr(last + 1), "--grid");
      if (n < 1 || c0 < 0 || c1 < c0) throw InvalidInput("--grid needs 0 <= c0 <= c1 and n >= 1");
      DensityDeficit f(k);
      Table t;
      t.header = {"c", "F_k", "predicted_density"};
      json rows = json::array();
      for (std::uint64_t i = 0; i < n; ++i) {
        double ci = n == 1 ? c0 : c0 + (c1 - c0) * static_cast<double>(i) / static_cast<double>(n - 1);
        double value = f(ci, tol);
        double pred = static_cast<double>(k) / (k + 1) - value;
        t.rows.push_back({num_text(ci), num_text(value), num_text(pred)});
        rows.push_back({{"c", num(ci)}, {"F_k", num(value)}, {"predicted_density", num(pred)}});
      }
      result.payload = {{"k", k}, {"lambda_k", num(f.lambda().value)}, {"rows", rows}};
      result.table = std::move(t);
    };
  });

  auto* simulate = app.add_subcommand("simulate", "pseudo k-th powers restricted to T_{k,theta}");
  simulate->add_option("--k", k)->check(CLI::Range(1, 4));
  simulate->add_option("--c", c)->check(CLI::NonNegativeNumber);
  simulate->add_option("--theta", theta_s);
  simulate->add_option("--horizon", horizon);
  simulate->add_option("--trials", trials, "seeds seed, seed+1, ...")->check(CLI::Range(1, 1000));
  simulate->callback([&] {
    action = [&] {
      SamplerConfig cfg;
      cfg.k = k;
      cfg.c = c;
      cfg.theta = FixedPointReal::parse(theta_s);
      cfg.horizon = horizon;
      json runs = json::array();
      for (int t = 0; t < trials; ++t) {
        cfg.seed = seed + static_cast<std::uint64_t>(t);
        SimulationReport r = density_report(cfg);
        json sums = json::array();
        for (const auto& d : r.sumsets) {
          sums.push_back({{"j", d.j}, {"density", num(d.density)}, {"predicted", num(d.predicted)},
                          {"deviation", num(d.deviation)}});
        }
        runs.push_back({{"seed", cfg.seed},
                        {"sample_size", r.sample_size},
                        {"sumsets", sums},
                        {"translated_counts", r.translated_counts},
                        {"translated_monotone", r.translated_monotone},
                        {"runtime_seconds", num(r.runtime_seconds)}});
        if (t == 0) {
          result.payload = {{"schema", "sumdens.simulate"},
                            {"schema_version", 1},
                            {"config",
                             {{"k", k}, {"c", num(c)}, {"theta", cfg.theta.label()}, {"horizon", horizon},
                              {"seed", seed}, {"trials", trials}}},
                            {"window", {r.window_lo, r.window_hi}},
                            {"lambda_k", num(r.lambda)},
                            {"F_k", num(r.big_f)},
                            {"predicted_kA_density", num(r.sumsets[k - 1].predicted)},
                            {"beta_inside_kT", num(r.beta_inside_kT)}};
        }
      }
      result.payload["trials"] = runs;
    };
  });

  auto* sk = app.add_subcommand("sk", "S_k(n) by brute force against lambda_k f_k({theta n})");
  sk->add_option("--k", k)->check(CLI::Range(2, 3));
  sk->add_option("--theta", theta_s);
  sk->add_option("--n-range", n_range, "lo:hi")->required();
  sk->add_option("--samples", samples)->check(CLI::Range(1, 100000));
  sk->add_option("--min-f", min_f, "rows with f_k below this are left out of the median");
  sk->callback([&] {
    action = [&] {
      auto [lo_s, hi_s] = split_colon(n_range, "--n-range");
      std::uint64_t lo = to_u64(lo_s, "--n-range"), hi = to_u64(hi_s, "--n-range");
      if (lo < 2 || hi <= lo) throw InvalidInput("--n-range needs 2 <= lo < hi");
      FixedPointReal theta = FixedPointReal::parse(theta_s);
      DensityDeficit f(k);
      FiniteIntegerSet t = beatty_T(k, theta, hi + 1);
      Table tab;
      tab.header = {"n", "frac", "f_k", "predicted", "S_k", "rel_error"};
      json rows = json::array();
      std::vector<double> errs;
      for (auto n : sample_integers(lo, hi + 1, static_cast<std::size_t>(samples), seed)) {
        double fr = theta.frac(n);
        double fv = f.fk_at(fr);
        double pred = f.lambda().value * fv;
        double s = s_k_bruteforce(k, t, n);
        double rel = pred > 0 ? std::abs(s / pred - 1.0) : std::nan("");
        if (fv >= min_f) errs.push_back(rel);
        rows.push_back({{"n", n}, {"frac", num(fr)}, {"f_k", num(fv)}, {"predicted", num(pred)},
                        {"S_k", num(s)}, {"rel_error", num(rel)}});
        tab.rows.push_back({std::to_string(n), num_text(fr), num_text(fv), num_text(pred), num_text(s),
                            pred > 0 ? num_text(rel) : ""});
      }
      result.payload = {{"k", k},
                        {"theta", theta.label()},
                        {"lambda_k", num(f.lambda().value)},
                        {"rows", rows},
                        {"counted", errs.size()},
                        {"median_rel_error", num(median(errs))}};
      result.table = std::move(tab);
    };
  });

  auto* jsum = app.add_subcommand("jsum", "J_N(alpha, beta) against its asymptotic form");
  jsum->add_option("--alpha", alpha_f)->required();
  jsum->add_option("--beta", beta_f)->required();
  jsum->add_option("--n", n_value);
  jsum->callback([&] {
    action = [&] {
      double jv = j_sum(alpha_f, beta_f, n_value);
      double asym = j_asymptote(alpha_f, beta_f, n_value);
      result.payload = {{"alpha", num(alpha_f)}, {"beta", num(beta_f)}, {"n", n_value},
                        {"J", num(jv)}, {"asymptote", num(asym)}, {"ratio", num(jv / asym)}};
    };
  });

  auto* disc = app.add_subcommand("discrepancy", "both sides of the Erdos-Turan inequality");
  disc->add_option("--theta", theta_s);
  disc->add_option("--interval", n_range, "lo:hi as rationals")->required();
  disc->add_option("--n", n_value);
  disc->add_option("--m", m_terms);
  disc->add_option("--offset", offset);
  disc->callback([&] {
    action = [&] {
      auto [lo_s, hi_s] = split_colon(n_range, "--interval");
      TorusInterval iv{parse_rational(lo_s), parse_rational(hi_s)};
      if (iv.lo < 0 || iv.hi > 1 || iv.lo > iv.hi) throw InvalidInput("--interval needs 0 <= lo <= hi <= 1");
      FixedPointReal theta = FixedPointReal::parse(theta_s);
      auto p = discrepancy_check(theta, iv, n_value, m_terms, offset);
      result.payload = {{"theta", theta.label()}, {"interval", {rat(iv.lo), rat(iv.hi)}},
                        {"n", p.n}, {"m", p.m}, {"offset", p.offset},
                        {"lhs", num(p.lhs)}, {"bound", num(p.bound)}, {"holds", p.lhs <= p.bound}};
    };
  });

  auto* cantor = app.add_subcommand("cantor", "finite-depth Cantor approximants");
  cantor->add_option("--depth", depth)->required()->check(CLI::Range(0, 20));
  cantor->add_option("--ratio-denom", ratio_denom, "k + 1 >= 3")->check(CLI::Range(3, 1000));
  auto* cantor_beta = cantor->add_option("--beta", beta_s, "emit (beta/2) C_3(depth) on the circle");
  cantor->add_option("--k", kmax, "sumset profile length")->check(CLI::Range(1, 8));
  cantor->callback([&] {
    action = [&] {
      if (cantor_beta->count() > 0) {
        TorusSet s = cantor_pair_witness(parse_rational(beta_s), depth);
        result.payload = {{"set", torus_json(s)}, {"profile", rats(sumset_profile(s, kmax))}};
        return;
      }
      RawIntervalList raw = cantor_approx(ratio_denom, depth);
      json ivs = json::array();
      Rational total(0);
      for (const auto& iv : raw) {
        ivs.push_back({rat(iv.lo), rat(iv.hi)});
        total += iv.hi - iv.lo;
      }
      result.payload = {{"ratio_denom", ratio_denom}, {"depth", depth}, {"intervals", ivs}, {"measure", rat(total)}};
    };
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(ExitCode::Ok);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return static_cast<int>(ExitCode::Ok);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Error);
  }

  std::string out_path;
  if (out_target == "json" || out_target == "csv") {
    format = out_target;
  } else if (!out_target.empty()) {
    out_path = out_target;
    auto dot = out_path.rfind('.');
    if (dot != std::string::npos && out_path.substr(dot) == ".csv") format = "csv";
  }
  if (threads > 0) kernels::set_threads(threads);

  try {
    if (!action) throw UsageError("no command given");
    action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Error);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Error);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Error);
  }

  std::string text;
  if (format == "csv") {
    if (!result.table) {
      err << "error: this command has no tabular output; use --format json\n";
      return static_cast<int>(ExitCode::Error);
    }
    text = result.table->csv();
  } else {
    json envelope{{"status", result.code == ExitCode::Ok ? "ok" : "infeasible"},
                  {"payload", result.payload},
                  {"diagnostics", json::array()}};
    text = envelope.dump(2) + "\n";
  }
  if (out_path.empty()) {
    out << text;
  } else {
    try {
      write_text_file(out_path, text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return static_cast<int>(ExitCode::Error);
    }
  }
  return static_cast<int>(result.code);
}

}  // namespace sumdens
