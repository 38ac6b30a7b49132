#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "peeltri/code.hpp"
#include "peeltri/coeffs.hpp"
#include "peeltri/enumerator.hpp"
#include "peeltri/mapops.hpp"
#include "peeltri/mixture.hpp"
#include "peeltri/patchjson.hpp"
#include "peeltri/sampler.hpp"
#include "peeltri/series.hpp"

using nlohmann::json;
using namespace peeltri;

namespace {

constexpr const char* kVersion = "0.1.0";

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

/// Gathers the primary output; on flush, the run manifest (subcommand, exact
/// parameter strings, seed, versions, output digest) goes with it: next to the
/// output file, or to stderr when printing to stdout. Re-running with the
/// manifest's parameters reproduces the digest byte for byte.
struct Run {
  std::string subcommand;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  std::string output_path;
  std::string text;

  void line(const std::string& s) {
    text += s;
    text += '\n';
  }

  json manifest() const {
    json m;
    m["subcommand"] = subcommand;
    m["params"] = params;
    m["seed"] = seed;
    m["versions"] = {{"peeltri", kVersion}};
    m["output_digest"] = fnv1a_hex(text);
    return m;
  }

  int flush(int code) {
    if (output_path.empty()) {
      std::fputs(text.c_str(), stdout);
      std::fprintf(stderr, "%s\n", manifest().dump().c_str());
    } else {
      std::ofstream out(output_path, std::ios::binary);
      out << text;
      std::ofstream man(output_path + ".manifest.json");
      man << manifest().dump(2) << "\n";
    }
    return code;
  }
};

Rat arg_rat(const std::string& s) {
  Rat r = parse_rat(s);
  if (r < 0 || r > 1) throw OutOfRange("parameter out of [0, 1]: " + s);
  return r;
}

json num_json(const QuadNum& v) { return {{"value", v.exact_str()}, {"decimal", v.decimal_str(50)}}; }
json num_json(const SurdSum& v) { return {{"value", v.exact_str()}, {"decimal", v.decimal_str(50)}}; }
json num_json(const Rat& v) { return num_json(QuadNum::rational(v, 0)); }

const std::vector<std::string> kGridH = {"0", "1/16", "1/8", "3/16", "1/4"};
const std::vector<std::string> kGridG = {"0", "1/4", "1/2", "3/4", "1"};

/// Non-decreasing perimeter tuples with k parts, each in 1..pmax.
std::vector<std::vector<int>> perimeter_tuples(int kmax, int pmax) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int first) -> void {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == kmax) return;
    for (int p = first; p <= pmax; ++p) {
      cur.push_back(p);
      self(self, p);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

/// Runs f(i) for i in 0..n-1 on `jobs` threads; results keep index order, so
/// the output is identical for every jobs value.
template <class F>
std::vector<std::string> run_trials(long n, int jobs, F f) {
  std::vector<std::string> out(static_cast<size_t>(n));
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long i; (i = next.fetch_add(1)) < n;) out[static_cast<size_t>(i)] = f(i);
  };
  if (jobs < 1) jobs = 1;
  std::vector<std::thread> pool;
  for (int j = 0; j + 1 < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

void emit_counts(Run& run, const std::string& format, const std::vector<std::string>& codes,
                 const json& extra) {
  std::map<std::string, long> counts;
  for (const auto& c : codes) ++counts[c];
  if (format == "csv") {
    run.line("code,count");
    for (const auto& [c, k] : counts) run.line(c + "," + std::to_string(k));
  } else {
    json j = extra;
    j["samples"] = static_cast<long>(codes.size());
    j["counts"] = counts;
    run.line(j.dump(2));
  }
}

int cmd_verify_recursion(Run& run, const std::string& format) {
  bool ok = true;
  std::vector<std::string> rows;
  for (const auto& hs : kGridH)
    for (const auto& gs : kGridG) {
      Rat h = parse_rat(hs), g = parse_rat(gs);
      coeffs::CoeffVector rec = coeffs::c_recursive(h, g, 24);
      coeffs::CoeffVector gen = coeffs::c_genfun(h, g, 24);
      bool eq = rec.c == gen.c;
      if (eq && g == 0)
        for (int p = 1; p <= 24; ++p) eq = eq && rec.C(p) == coeffs::c_psht(p, h);
      ok = ok && eq;
      rows.push_back("h=" + hs + " gamma=" + gs + (eq ? " equal" : " MISMATCH"));
    }
  if (format == "csv") {
    run.line("point,result");
    for (auto& r : rows) run.line(r);
  } else {
    run.line(json{{"check", "recursion"}, {"pmax", 24}, {"points", rows}, {"pass", ok}}.dump(2));
  }
  return ok ? 0 : 1;
}

int cmd_verify_peeling(Run& run, const std::string& format) {
  auto tuples = perimeter_tuples(3, 4);
  bool ok = true;
  long checks = 0;
  std::vector<std::string> bad;
  for (const auto& hs : kGridH)
    for (const auto& gs : kGridG) {
      mixture::Mixture m = {{false, parse_rat(hs), parse_rat(gs), 1}};
      for (const auto& perims : tuples)
        for (int v = 0; v <= 3; ++v) {
          ++checks;
          if (!mixture::verify_peeling_identity(m, v, perims).is_zero()) {
            ok = false;
            std::string t = "h=" + hs + " gamma=" + gs + " v=" + std::to_string(v) + " p=";
            for (int p : perims) t += std::to_string(p) + ".";
            bad.push_back(t);
          }
        }
    }
  if (format == "csv") {
    run.line("checks,failures");
    run.line(std::to_string(checks) + "," + std::to_string(bad.size()));
  } else {
    run.line(json{{"check", "peeling"}, {"residuals", checks}, {"failures", bad}, {"pass", ok}}
                 .dump(2));
  }
  return ok ? 0 : 1;
}

int cmd_verify_monotone(Run& run, const std::string& format) {
  std::vector<std::pair<std::string, mixture::Mixture>> cases;
  for (const auto& hs : kGridH)
    for (const auto& gs : kGridG)
      cases.emplace_back("h=" + hs + " gamma=" + gs,
                         mixture::Mixture{{false, parse_rat(hs), parse_rat(gs), 1}});
  cases.emplace_back("mix (1/8,0)+star", mixture::Mixture{{false, Rat(1, 8), 0, Rat(1, 2)},
                                                          {true, 0, 0, Rat(1, 2)}});
  bool ok = true;
  std::vector<std::string> rows;
  for (auto& [name, m] : cases) {
    mixture::CoeffTable t = mixture::ones_table(m, 6, 7);
    bool good = true;
    for (int dm = 0; dm <= 6; ++dm)
      for (int dn = 0; dm + dn <= 6; ++dn)
        good = good && mixture::all_nonnegative(mixture::delta_ops(t, dm, dn));
    ok = ok && good;
    rows.push_back(name + (good ? " nonnegative" : " NEGATIVE"));
  }
  if (format == "csv") {
    run.line("case,result");
    for (auto& r : rows) run.line(r);
  } else {
    run.line(json{{"check", "monotone"}, {"order", 6}, {"cases", rows}, {"pass", ok}}.dump(2));
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of Markovian planar triangulations"};
  app.require_subcommand(1);
  // -h is taken by the volume parameter; help is --help only, everywhere.
  app.set_help_flag("--help", "Print help and exit");

  Run run;
  std::string format = "json";
  int jobs = 1;
  std::uint64_t seed = 0;
  if (const char* env = std::getenv("PEELTRI_SEED")) seed = std::strtoull(env, nullptr, 10);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", jobs, "Worker threads (output is identical for any value)");
  app.add_option("-o,--output", run.output_path,
                 "Write output to this file (manifest goes to <file>.manifest.json)");
  auto sub_of = [](CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->set_help_flag("--help", "Print help and exit");
    s->fallthrough();  // app-level options (--format, --jobs, -o) may follow the subcommand
    return s;
  };

  // series
  auto* series_cmd = sub_of(&app, "series", "Generating-function coefficients");
  std::vector<int> tau_args;
  std::vector<std::string> zp_args;
  int order = 0;
  series_cmd->add_option("--tau", tau_args, "Triangulations of the p-gon with volume n: n p")
      ->expected(2);
  series_cmd->add_option("--zp", zp_args, "Disk function Z_p at h: h_num/h_den p")->expected(2);
  series_cmd->add_option("--order", order, "Expand lambda(h) and h(lambda) to this order");

  // coeffs
  auto* coeffs_cmd = sub_of(&app, "coeffs", "One-hole coefficients C_1..C_P");
  std::string h_str = "0", g_str = "0";
  int pmax = 10, cap = 200;
  bool closed_form = false;
  coeffs_cmd->add_option("--h", h_str, "Volume parameter h (rational a/b in [0, 1/4])");
  coeffs_cmd->add_option("--gamma", g_str, "Branching parameter gamma (rational in [0, 1])");
  coeffs_cmd->add_option("--pmax", pmax, "Largest perimeter");
  coeffs_cmd->add_flag("--closed-form", closed_form,
                       "Use the generating-function closed form instead of the recursion");

  // verify
  auto* verify_cmd = sub_of(&app, "verify", "Exact identity suites (exit 1 on failure)");
  std::string what, grid = "default";
  verify_cmd->add_option("what", what, "Which suite")
      ->required()
      ->check(CLI::IsMember({"peeling", "monotone", "recursion"}));
  verify_cmd->add_option("--grid", grid, "Parameter grid")->check(CLI::IsMember({"default"}));

  // negativity
  auto* neg_cmd = sub_of(&app, "negativity", "Least p with C_p < 0");
  neg_cmd->add_option("--h", h_str, "Volume parameter h");
  neg_cmd->add_option("--gamma", g_str, "Branching parameter gamma");
  neg_cmd->add_option("--cap", cap, "Search cap");

  // sample
  auto* sample_cmd = sub_of(&app, "sample", "Random generation");
  sample_cmd->require_subcommand(1);
  int radius = 1, p_arg = 2;
  long n_samples = 1;
  std::string policy = "bfs", emit;
  auto* psht = sub_of(sample_cmd, "psht", "Dual balls of the (h, 0) law");
  psht->add_option("--h", h_str, "Volume parameter h");
  psht->add_option("--radius", radius, "Dual-graph radius");
  psht->add_option("--n", n_samples, "Number of samples");
  psht->add_option("--seed", seed, "RNG seed");
  psht->add_option("--policy", policy, "Peel order")->check(CLI::IsMember({"bfs", "fifo"}));
  psht->add_option("--emit", emit, "jsonl: stream one patch object per sample")
      ->check(CLI::IsMember({"jsonl"}));
  auto* polygon = sub_of(sample_cmd, "polygon", "Boltzmann p-gon triangulations");
  polygon->add_option("--p", p_arg, "Boundary perimeter");
  polygon->add_option("--h", h_str, "Volume parameter h (> 0)");
  polygon->add_option("--n", n_samples, "Number of samples");
  polygon->add_option("--seed", seed, "RNG seed");
  polygon->add_option("--emit", emit, "jsonl: stream one patch object per sample")
      ->check(CLI::IsMember({"jsonl"}));

  // build
  auto* build_cmd = sub_of(&app, "build", "Deterministic degenerate balls");
  std::string target;
  build_cmd->add_option("target", target, "Which ball")
      ->required()
      ->check(CLI::IsMember({"t0", "tstar"}));
  build_cmd->add_option("--radius", radius, "Dual-graph radius");

  // enumerate
  auto* enum_cmd = sub_of(&app, "enumerate", "All rooted sphere triangulations, 2n faces");
  int n_arg = 2, max_n = 6;
  std::string strategy = "b";
  enum_cmd->add_option("--n", n_arg, "Half the face count")->required();
  enum_cmd->add_option("--strategy", strategy, "a: side pairing, b: peeling codes")
      ->check(CLI::IsMember({"a", "b"}));
  enum_cmd->add_option("--emit", emit, "jsonl: stream patch objects in canonical order")
      ->check(CLI::IsMember({"jsonl"}));
  enum_cmd->add_option("--max-n", max_n, "Budget ceiling");

  // occ
  auto* occ_cmd = sub_of(&app, "occ", "Occurrence-count histogram of a pattern");
  std::string pattern_path;
  occ_cmd->add_option("--pattern", pattern_path, "Patch-format JSON file")->required();
  occ_cmd->add_option("--n", n_arg, "Half the face count")->required();
  occ_cmd->add_option("--max-n", max_n, "Budget ceiling");

  // degree
  auto* degree_cmd = sub_of(&app, "degree", "Mean inverse root degree");
  degree_cmd->add_option("--n", n_arg, "Half the face count")->required();
  degree_cmd->add_option("--max-n", max_n, "Budget ceiling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  run.seed = seed;
  for (CLI::App* s = &app; s != nullptr;
       s = s->get_subcommands().empty() ? nullptr : s->get_subcommands().front()) {
    if (s != &app) run.subcommand += (run.subcommand.empty() ? "" : " ") + s->get_name();
    for (const CLI::Option* o : s->get_options())
      if (o->count() && !o->get_lnames().empty())
        run.params[o->get_lnames().front()] = o->as<std::string>();
    for (const CLI::Option* o : s->get_options())
      if (o->count() && o->get_lnames().empty() && o->get_positional())
        run.params[o->get_name(true)] = o->as<std::string>();
  }
  run.params["format"] = format;

  try {
    if (sub == series_cmd) {
      json out;
      if (!tau_args.empty()) {
        Int t = series::tau(tau_args[0], tau_args[1]);
        out = {{"tau", {{"n", tau_args[0]}, {"p", tau_args[1]}}},
               {"value", t.get_str()},
               {"decimal", t.get_str()}};
      } else if (!zp_args.empty()) {
        Rat h = arg_rat(zp_args[0]);
        int p = std::stoi(zp_args[1]);
        out = num_json(series::Z_p_at(h, p));
        out["zp"] = {{"h", zp_args[0]}, {"p", p}};
        out["lambda"] = num_json(series::lambda_of_h(h));
      } else if (order > 0) {
        json lam = json::array(), hs = json::array();
        PowerSeries<Rat> ls = series::lambda_series(order);
        PowerSeries<Rat> hl = series::h_series_of_lambda(order);
        for (int k = 0; k <= order; ++k) {
          lam.push_back(rat_str(ls[k]));
          hs.push_back(rat_str(hl[k]));
        }
        out = {{"order", order}, {"lambda_of_h", lam}, {"h_of_lambda", hs}};
      } else {
        std::fprintf(stderr, "series: one of --tau, --zp, --order is required\n");
        return 2;
      }
      run.line(out.dump(2));
      return run.flush(0);
    }

    if (sub == coeffs_cmd) {
      Rat h = arg_rat(h_str), g = arg_rat(g_str);
      coeffs::CoeffVector cv =
          closed_form ? coeffs::c_genfun(h, g, pmax) : coeffs::c_recursive(h, g, pmax);
      if (format == "csv") {
        run.line("p,value,decimal");
        for (int p = 1; p <= pmax; ++p)
          run.line(std::to_string(p) + "," + cv.C(p).exact_str() + "," + cv.C(p).decimal_str(50));
      } else {
        json arr = json::array();
        for (int p = 1; p <= pmax; ++p) {
          json e = num_json(cv.C(p));
          e["p"] = p;
          arr.push_back(e);
        }
        run.line(json{{"h", h_str},
                      {"gamma", g_str},
                      {"lambda", num_json(series::lambda_of_h(h))},
                      {"coefficients", arr}}
                     .dump(2));
      }
      return run.flush(0);
    }

    if (sub == verify_cmd) {
      int rc = what == "recursion"  ? cmd_verify_recursion(run, format)
               : what == "peeling"  ? cmd_verify_peeling(run, format)
                                    : cmd_verify_monotone(run, format);
      return run.flush(rc);
    }

    if (sub == neg_cmd) {
      Rat h = arg_rat(h_str), g = arg_rat(g_str);
      std::optional<int> p = coeffs::find_negative_p(h, g, cap);
      json out = {{"h", h_str}, {"gamma", g_str}, {"cap", cap}};
      out["negative_p"] = p ? json(*p) : json(nullptr);
      if (p) out["value"] = num_json(coeffs::c_recursive(h, g, *p).C(*p));
      run.line(format == "csv" ? (p ? "p=" + std::to_string(*p) : std::string("none"))
                               : out.dump(2));
      return run.flush(0);
    }

    if (sub == sample_cmd) {
      CLI::App* which = sample_cmd->get_subcommands().front();
      Rat h = arg_rat(h_str);
      sampler::PeelPolicy pol =
          policy == "fifo" ? sampler::PeelPolicy::Fifo : sampler::PeelPolicy::BfsOrder;
      auto one = [&](long i) {
        rng::Seed s{seed, static_cast<std::uint64_t>(i)};
        map::TriComplex t = which == psht ? sampler::sample_dual_ball(h, radius, s, pol)
                                          : sampler::sample_boltzmann_polygon(p_arg, h, s);
        return emit == "jsonl" ? map::to_patch_json(t).dump() : map::canonical_code(t);
      };
      std::vector<std::string> rows = run_trials(n_samples, jobs, one);
      if (emit == "jsonl") {
        for (auto& r : rows) run.line(r);
      } else {
        json extra = {{"h", h_str}, {"seed", seed}};
        if (which == psht)
          extra["radius"] = radius;
        else
          extra["p"] = p_arg;
        emit_counts(run, format, rows, extra);
      }
      return run.flush(0);
    }

    if (sub == build_cmd) {
      map::TriComplex t = target == "tstar" ? sampler::build_Tstar_dual_ball(radius)
                                            : sampler::build_T0_dual_ball(radius);
      run.line(map::to_patch_json(t).dump(2));
      return run.flush(0);
    }

    if (sub == enum_cmd) {
      enumerator::Strategy st = strategy == "a" ? enumerator::Strategy::GluingSearch
                                                : enumerator::Strategy::PeelingCodes;
      if (emit == "jsonl") {
        std::vector<std::string> codes;
        enumerator::enumerate_sphere(
            n_arg, st, [&](const map::TriComplex& t) { codes.push_back(map::canonical_code(t)); },
            max_n);
        std::sort(codes.begin(), codes.end());
        for (const auto& c : codes) run.line(map::to_patch_json(map::decode_code(c)).dump());
      } else {
        enumerator::GenerationRun g = enumerator::generation_run(n_arg, st, max_n);
        if (format == "csv") {
          run.line("n,strategy,count,digest");
          run.line(std::to_string(g.n) + "," + strategy + "," + std::to_string(g.count) + "," +
                   g.digest);
        } else {
          run.line(json{{"n", g.n}, {"strategy", strategy}, {"count", g.count}, {"digest", g.digest}}
                       .dump(2));
        }
      }
      return run.flush(0);
    }

    if (sub == occ_cmd) {
      std::ifstream in(pattern_path);
      if (!in) {
        std::fprintf(stderr, "occ: cannot read %s\n", pattern_path.c_str());
        return 2;
      }
      map::TriComplex pattern = map::from_patch_json(json::parse(in));
      std::map<int, long> hist = enumerator::occ_distribution(pattern, n_arg, max_n);
      if (format == "csv") {
        run.line("occ,count");
        for (auto [k, v] : hist) run.line(std::to_string(k) + "," + std::to_string(v));
      } else {
        json h = json::object();
        for (auto [k, v] : hist) h[std::to_string(k)] = v;
        json out = {{"n", n_arg}, {"histogram", h}};
        out["mean_occ_ratio"] = num_json(enumerator::mean_occ_ratio(pattern, n_arg, max_n));
        run.line(out.dump(2));
      }
      return run.flush(0);
    }

    if (sub == degree_cmd) {
      Rat got = enumerator::mean_inverse_degree(n_arg, max_n);
      Rat want(n_arg + 2, 6 * n_arg);
      want.canonicalize();
      bool match = got == want;
      if (format == "csv") {
        run.line("n,value,expected,match");
        run.line(std::to_string(n_arg) + "," + rat_str(got) + "," + rat_str(want) + "," +
                 (match ? "yes" : "no"));
      } else {
        json out = {{"n", n_arg}, {"formula", "(n+2)/(6n)"}, {"match", match}};
        out["mean_inverse_degree"] = num_json(got);
        run.line(out.dump(2));
      }
      return run.flush(match ? 0 : 1);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s: %s\n", run.subcommand.c_str(), e.what());
    return 2;
  }
  return 2;
}
