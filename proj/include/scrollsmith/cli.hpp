#pragma once

// Command-line front end. run() parses argv, validates everything, computes,
// and only then writes to `out`, so invalid input never leaves partial data on
// stdout. Diagnostics go to `err`.

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scrollsmith/contracted_lines.hpp"
#include "scrollsmith/criterion.hpp"
#include "scrollsmith/enumerator.hpp"
#include "scrollsmith/field.hpp"
#include "scrollsmith/oracle.hpp"
#include "scrollsmith/scroll.hpp"

namespace scrollsmith::cli {

enum Exit : int { kOk = 0, kUsage = 1, kDisagreement = 2, kNonGeneric = 3 };

inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr std::uint32_t kDefaultPrime = 10007;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline long long parse_int(const std::string& s, const std::string& what) {
  long long v = 0;
  const auto* b = s.data();
  const auto* e = s.data() + s.size();
  const auto r = std::from_chars(b, e, v);
  if (s.empty() || r.ec != std::errc() || r.ptr != e) throw UsageError(what + ": '" + s + "' is not an integer");
  return v;
}

inline std::vector<int> parse_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::string cell;
  std::istringstream is(s);
  while (std::getline(is, cell, ',')) {
    const auto v = parse_int(cell, what);
    if (v < -1000000 || v > 1000000) throw UsageError(what + ": value " + cell + " out of range");
    out.push_back(static_cast<int>(v));
  }
  if (!s.empty() && s.back() == ',') throw UsageError(what + ": trailing comma");
  return out;
}

struct RawParams {
  std::array<int, 5> d{};
  int b1 = 0, b2 = 0;
};

inline RawParams parse_params(const std::string& d, const std::string& b) {
  const auto dv = parse_list(d, "--d");
  const auto bv = parse_list(b, "--b");
  if (dv.size() != 4 && dv.size() != 5) throw UsageError("--d expects 4 or 5 comma-separated integers");
  if (bv.size() != 2) throw UsageError("--b expects 2 comma-separated integers");
  RawParams r;
  for (std::size_t i = 0; i < dv.size(); ++i) r.d[i] = dv[i];
  r.b1 = bv[0];
  r.b2 = bv[1];
  return r;
}

inline CanonicalForm canonical(const RawParams& r) {
  try {
    return canonicalize_with_trace(r.d, r.b1, r.b2);
  } catch (const ParamError& e) {
    throw UsageError(e.what());
  }
}

inline std::string describe_transformation(const CanonicalForm& c) {
  std::vector<std::string> steps;
  if (c.sorted) steps.push_back("sorted d in decreasing order");
  if (c.twist != 0) {
    steps.push_back("subtracted " + std::to_string(c.twist) + " from every d_i and added " +
                    std::to_string(2 * c.twist) + " to each b_j");
  }
  if (c.swapped) steps.push_back("swapped b1 and b2");
  if (steps.empty()) return "none (input is canonical)";
  std::string s;
  for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? "; " : "") + steps[i];
  return s;
}

inline std::string raw_string(const RawParams& r) {
  std::ostringstream os;
  os << "d=(" << r.d[0] << "," << r.d[1] << "," << r.d[2] << "," << r.d[3] << "," << r.d[4] << ") b=(" << r.b1
     << "," << r.b2 << ")";
  return os.str();
}

inline ojson params_json(const ScrollParams& p) {
  ojson j;
  j["d"] = p.d();
  j["b1"] = p.b1();
  j["b2"] = p.b2();
  return j;
}

inline ojson canonical_json(const RawParams& r, const CanonicalForm& c) {
  ojson j;
  j["input"] = {{"d", r.d}, {"b", {r.b1, r.b2}}};
  j["canonical"] = params_json(c.params);
  j["transformation"] = {{"twist", c.twist}, {"sorted", c.sorted}, {"swapped", c.swapped}};
  return j;
}

inline std::uint64_t resolve_seed(const std::optional<std::string>& flag, const char* env) {
  auto parse = [](const std::string& s, const std::string& src) {
    std::uint64_t v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size()) {
      throw UsageError(src + ": '" + s + "' is not an unsigned 64-bit integer");
    }
    return v;
  };
  if (flag) return parse(*flag, "--seed");
  if (env != nullptr) return parse(env, "SCROLLSMITH_SEED");
  return kDefaultSeed;
}

inline PrimeField make_field(long long p) {
  if (p < 3 || p > 65521) throw UsageError("--prime must be an odd prime in [3, 65521]");
  try {
    return PrimeField(static_cast<std::uint32_t>(p));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--prime: ") + e.what());
  }
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string format_ext(const ExtensionField::Elem& x) {
  const auto a = x.size() > 0 ? x[0] : 0u;
  const auto b = x.size() > 1 ? x[1] : 0u;
  if (b == 0) return std::to_string(a);
  return std::to_string(a) + "+" + std::to_string(b) + "*u";
}

// ---- subcommands ---------------------------------------------------------

inline int do_classify(const RawParams& raw, bool strict, bool json, std::ostream& out) {
  const auto c = canonical(raw);
  const auto& p = c.params;
  const auto v = classify(p, CriterionOptions{strict});
  const int chi = euler_characteristic(p);
  if (json) {
    auto j = canonical_json(raw, c);
    j["smooth"] = v.smooth();
    j["case"] = v.smooth() ? ojson(std::string(to_string(v.case_id()))) : ojson(nullptr);
    j["reason"] = v.smooth() ? ojson(nullptr) : ojson(std::string(to_string(v.reason())));
    j["chi"] = chi;
    j["standard"] = v.smooth() ? ojson(is_standard(p)) : ojson(nullptr);
    j["rational"] =
        v.smooth() ? ojson(rationality_verdict(p).verdict == Rationality::Rational) : ojson(nullptr);
    j["strict_3j"] = strict;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "input: " << raw_string(raw) << "\n";
  out << "canonical: " << p << "\n";
  out << "transformation: " << describe_transformation(c) << "\n";
  if (v.smooth()) {
    out << "verdict: smooth\n";
    out << "case: " << to_string(v.case_id()) << "\n";
  } else {
    out << "verdict: singular\n";
    out << "reason: " << to_string(v.reason()) << "\n";
  }
  out << "chi: " << chi << "\n";
  if (v.smooth()) {
    out << "standard: " << yes_no(is_standard(p)) << "\n";
    out << "rationality: " << to_string(rationality_verdict(p).verdict) << "\n";
  } else {
    out << "standard: n/a\n";
    out << "rationality: n/a\n";
  }
  return kOk;
}

inline int do_euler(const RawParams& raw, bool json, std::ostream& out, std::ostream& err) {
  const auto c = canonical(raw);
  const int chi = euler_characteristic(c.params);
  if (json) {
    auto j = canonical_json(raw, c);
    j["chi"] = chi;
    out << j.dump(2) << "\n";
    return kOk;
  }
  if (c.sorted || c.twist != 0 || c.swapped) {
    err << "canonicalized " << raw_string(raw) << " to " << c.params << ": " << describe_transformation(c) << "\n";
  }
  out << chi << "\n";
  return kOk;
}

inline int do_enumerate(int chi, int d1_max, bool standard, const std::string& format, std::ostream& out,
                        std::ostream& err) {
  const auto fmt = parse_atlas_format(format);
  if (!fmt) throw UsageError("--format must be json or csv");
  if (d1_max < 0 || d1_max > 256) throw UsageError("--d1-max must be in [0, 256]");
  auto res = enumerate_by_chi(chi, SearchBounds::with_d1_max(d1_max));
  if (standard) res.records = standard_only(std::move(res.records));
  for (const auto& t : res.truncation) err << "warning: " << t << "\n";
  out << export_atlas(res.records, *fmt);
  return kOk;
}

inline int do_cases(bool realize, int d1_max, bool json, std::ostream& out) {
  if (!realize) {
    if (json) {
      ojson j = ojson::array();
      for (auto c : kAllCases) j.push_back(std::string(to_string(c)));
      out << j.dump(2) << "\n";
    } else {
      for (auto c : kAllCases) out << to_string(c) << "\n";
    }
    return kOk;
  }
  if (d1_max < 0 || d1_max > 64) throw UsageError("--d1-max must be in [0, 64]");
  const auto found = realizability_sweep(SearchBounds::with_d1_max(d1_max));
  std::size_t n = 0;
  for (const auto& [c, p] : found) n += p.has_value();
  if (json) {
    ojson j;
    ojson cases;
    for (const auto& [c, p] : found) cases[std::string(to_string(c))] = p ? params_json(*p) : ojson(nullptr);
    j["d1_max"] = d1_max;
    j["realized"] = n;
    j["total"] = kAllCases.size();
    j["cases"] = cases;
    out << j.dump(2) << "\n";
    return kOk;
  }
  for (const auto& [c, p] : found) {
    out << to_string(c) << " " << (p ? p->to_string() : std::string("not found")) << "\n";
  }
  out << "realized " << n << " of " << kAllCases.size() << " cases with d1 <= " << d1_max << "\n";
  return kOk;
}

inline ojson verdict_json(const OracleVerdict& v) {
  ojson j;
  j["smooth_capable"] = v.smooth_capable();
  j["star_ok"] = v.star_ok;
  j["dstar_ok"] = v.dstar_ok;
  j["confidence"] = v.confidence.to_string();
  j["trials_run"] = v.trials_run;
  j["resamples"] = v.resamples;
  j["passing_seed"] = v.passing_seed ? ojson(*v.passing_seed) : ojson(nullptr);
  ojson w = ojson::array();
  for (const auto& x : v.witnesses) w.push_back(x.to_string());
  j["witnesses"] = w;
  return j;
}

inline int do_verify(const RawParams& raw, int trials, const PrimeField& f, std::uint64_t seed, bool json,
                     std::ostream& out, std::ostream& err) {
  if (trials < 1 || trials > 10000) throw UsageError("--trials must be in [1, 10000]");
  const auto c = canonical(raw);
  const auto& p = c.params;
  OracleVerdict v;
  try {
    v = oracle_smooth(p, trials, f, seed);
  } catch (const NonGenericExhaustion& e) {
    err << "error: " << e.what() << "\n";
    return kNonGeneric;
  }
  const auto cls = classify(p);
  if (json) {
    auto j = canonical_json(raw, c);
    j["prime"] = f.characteristic();
    j["seed"] = seed;
    j["oracle"] = verdict_json(v);
    j["criterion"] = cls.to_string();
    j["agree"] = cls.smooth() == v.smooth_capable();
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "input: " << raw_string(raw) << "\n";
  out << "canonical: " << p << "\n";
  out << "transformation: " << describe_transformation(c) << "\n";
  out << "prime: " << f.characteristic() << "\n";
  out << "seed: " << seed << "\n";
  out << "oracle: " << (v.smooth_capable() ? "smooth" : "singular") << "\n";
  out << "(*): " << (v.star_ok ? "holds" : "fails") << "\n";
  out << "(**): " << (v.dstar_ok ? "holds" : "fails") << "\n";
  out << "confidence: " << v.confidence.to_string() << "\n";
  out << "trials run: " << v.trials_run << "\n";
  out << "resamples: " << v.resamples << "\n";
  if (v.passing_seed) out << "passing instance seed: " << *v.passing_seed << "\n";
  for (const auto& w : v.witnesses) out << "witness: " << w.to_string() << "\n";
  out << "criterion: " << cls.to_string() << "\n";
  out << "agreement: " << yes_no(cls.smooth() == v.smooth_capable()) << "\n";
  return kOk;
}

struct CrossRow {
  ScrollParams params;
  bool exhausted = false;
  bool criterion_smooth = false;
  std::string criterion;
  OracleVerdict oracle;
};

inline int do_crosscheck(int d1_max, int trials, const PrimeField& f, std::uint64_t seed, int b_min, int b_max,
                         bool strict, unsigned threads, bool json, std::ostream& out, std::ostream& err) {
  if (d1_max < 0 || d1_max > 16) throw UsageError("--d1-max must be in [0, 16]");
  if (trials < 1 || trials > 1000) throw UsageError("--trials must be in [1, 1000]");
  if (b_min > b_max) throw UsageError("--b-min must not exceed --b-max");
  std::vector<ScrollParams> tuples;
  for_each_d(d1_max, [&](const std::array<int, 4>& d) {
    for (int b1 = std::max(b_min, -2 * d[0]); b1 <= b_max; ++b1) {
      for (int b2 = b1; b2 <= b_max; ++b2) tuples.emplace_back(d, b1, b2);
    }
  });
  std::vector<CrossRow> rows;
  rows.reserve(tuples.size());
  for (const auto& p : tuples) rows.push_back(CrossRow{p, false, false, {}, {}});
  // Each tuple gets its own derived seed, so the result is independent of the
  // thread count and scheduling.
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      auto& r = rows[i];
      const auto cls = classify(r.params, CriterionOptions{strict});
      r.criterion_smooth = cls.smooth();
      r.criterion = cls.to_string();
      try {
        r.oracle = oracle_smooth(r.params, trials, f, derive_seed(seed, i));
      } catch (const NonGenericExhaustion&) {
        r.exhausted = true;
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, 64);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::size_t disagreements = 0, exhausted = 0;
  ojson dis = ojson::array();
  std::ostringstream human;
  for (const auto& r : rows) {
    if (r.exhausted) {
      ++exhausted;
      err << "non-generic: resampling exhausted for " << r.params << "\n";
      continue;
    }
    if (r.criterion_smooth == r.oracle.smooth_capable()) continue;
    ++disagreements;
    if (json) {
      auto j = params_json(r.params);
      j["criterion"] = r.criterion;
      j["oracle"] = verdict_json(r.oracle);
      dis.push_back(j);
    } else {
      human << "disagree " << r.params << " criterion=" << r.criterion
            << " oracle=" << (r.oracle.smooth_capable() ? "smooth" : "singular");
      if (r.oracle.passing_seed) human << " passing-seed=" << *r.oracle.passing_seed;
      if (!r.oracle.witnesses.empty()) human << " first-witness=\"" << r.oracle.witnesses.front().to_string() << "\"";
      human << "\n";
    }
  }
  const double rate = rows.empty() ? 0.0 : static_cast<double>(exhausted) / static_cast<double>(rows.size());
  if (json) {
    ojson j;
    j["tuples"] = rows.size();
    j["disagreements"] = disagreements;
    j["exhausted"] = exhausted;
    j["prime"] = f.characteristic();
    j["trials"] = trials;
    j["seed"] = seed;
    j["strict_3j"] = strict;
    j["disagreeing"] = dis;
    out << j.dump(2) << "\n";
  } else {
    out << human.str();
    out << "tuples " << rows.size() << ", disagreements " << disagreements << ", non-generic " << exhausted
        << ", prime " << f.characteristic() << ", trials " << trials << ", seed " << seed << "\n";
  }
  if (disagreements > 0) return kDisagreement;
  // The sweep tolerates non-generic exhaustion on under 0.1% of the tuples.
  if (rate >= 0.001) return kNonGeneric;
  return kOk;
}

inline int do_x2_lines(const PrimeField& f, std::uint64_t seed, int runs, bool json, std::ostream& out,
                       std::ostream& err) {
  if (runs < 1 || runs > 100000) throw UsageError("--runs must be in [1, 100000]");
  int generic_runs = 0;
  ojson arr = ojson::array();
  std::ostringstream human;
  for (int r = 0; r < runs; ++r) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(r);
    const auto inst = sample_instance(x2_params(), f, s);
    ContractedLines cl{false, "a coefficient form vanishes identically", ExtensionField::quadratic(f), {}};
    if (!accidentally_degenerate(inst)) cl = contracted_lines_x2(inst);
    generic_runs += cl.generic;
    if (json) {
      ojson j;
      j["seed"] = s;
      j["generic"] = cl.generic;
      if (!cl.generic) j["reason"] = cl.reason;
      j["count"] = cl.count();
      ojson lines = ojson::array();
      for (const auto& l : cl.lines) {
        ojson lj;
        lj["v"] = {format_ext(l.v[0]), format_ext(l.v[1]), format_ext(l.v[2])};
        lj["t"] = {format_ext(l.t0), format_ext(l.t1)};
        lj["rational"] = l.rational;
        lines.push_back(lj);
      }
      j["lines"] = lines;
      arr.push_back(j);
      continue;
    }
    if (!cl.generic) {
      human << "seed " << s << ": non-generic (" << cl.reason << ")\n";
      continue;
    }
    std::size_t rational = 0;
    for (const auto& l : cl.lines) rational += l.rational;
    human << "seed " << s << ": count " << cl.count() << " (" << rational << " over F_" << f.characteristic()
          << ", " << cl.count() - rational << " conjugate over F_" << f.characteristic() << "^2)\n";
    for (const auto& l : cl.lines) {
      human << "  line v=(" << format_ext(l.v[0]) << "," << format_ext(l.v[1]) << "," << format_ext(l.v[2])
            << ") t=(" << format_ext(l.t0) << ":" << format_ext(l.t1) << ")\n";
    }
  }
  if (json) {
    ojson j;
    j["prime"] = f.characteristic();
    j["extension"] = "u^2 = " + std::to_string(f.neg(ExtensionField::quadratic(f).modulus()[0]));
    j["runs"] = arr;
    out << j.dump(2) << "\n";
  } else {
    out << human.str();
  }
  if (generic_runs == 0) {
    err << "error: every sampled instance was non-generic\n";
    return kNonGeneric;
  }
  return kOk;
}

}  // namespace detail

// env_seed: value of SCROLLSMITH_SEED, or nullptr.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* env_seed) {
  CLI::App app{"scrollsmith: smoothness, Euler characteristic and enumeration of del Pezzo fibrations of degree 4 "
               "embedded in rank-5 scrolls"};
  app.name("scrollsmith");
  app.require_subcommand(1);

  std::string d, b, format = "json";
  std::optional<std::string> seed_flag;
  long long prime = kDefaultPrime;
  int chi = 0, enum_d1_max = 16, cases_d1_max = 12, cross_d1_max = 4, trials = 5, runs = 1, b_min = -8, b_max = 4;
  unsigned threads = 0;
  bool strict = false, standard = false, realize = false, json = false;

  auto add_params = [&](CLI::App* s) {
    s->add_option("--d", d, "twisting degrees d1,d2,d3,d4[,d5]")->required();
    s->add_option("--b", b, "twists b1,b2")->required();
  };
  auto add_oracle = [&](CLI::App* s, int default_trials) {
    s->add_option("--trials", trials, "instances per tuple")->default_val(default_trials);
    s->add_option("--prime", prime, "characteristic of the coefficient field")->default_val(kDefaultPrime);
    s->add_option("--seed", seed_flag, "RNG seed (fallback: SCROLLSMITH_SEED)");
  };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", json, "machine-readable output"); };

  auto* classify_cmd = app.add_subcommand("classify", "smoothness verdict, case, chi, standardness, rationality");
  add_params(classify_cmd);
  classify_cmd->add_flag("--strict-3j", strict, "read the last two atoms of case 3j as a conjunction");
  add_json(classify_cmd);

  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic");
  add_params(euler_cmd);
  add_json(euler_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "smooth families with a given Euler characteristic");
  enum_cmd->add_option("--chi", chi, "Euler characteristic")->required();
  enum_cmd->add_option("--d1-max", enum_d1_max, "largest d1 searched")->default_val(16);
  enum_cmd->add_flag("--standard-only", standard, "drop families with Y4 in the base locus of |D2|");
  enum_cmd->add_option("--format", format, "json or csv")->default_val("json");

  auto* cases_cmd = app.add_subcommand("cases", "list the cases, or find a tuple realizing each");
  cases_cmd->add_flag("--realize", realize, "search for a witness tuple per case");
  cases_cmd->add_option("--d1-max", cases_d1_max, "largest d1 searched")->default_val(12);
  add_json(cases_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "randomized smoothness oracle for one tuple");
  add_params(verify_cmd);
  add_oracle(verify_cmd, 5);
  add_json(verify_cmd);

  auto* cross_cmd = app.add_subcommand("crosscheck", "criterion against oracle over a box of tuples");
  cross_cmd->add_option("--d1-max", cross_d1_max, "largest d1 swept")->default_val(4);
  cross_cmd->add_option("--b-min", b_min, "smallest b swept")->default_val(-8);
  cross_cmd->add_option("--b-max", b_max, "largest b swept")->default_val(4);
  cross_cmd->add_flag("--strict-3j", strict, "read the last two atoms of case 3j as a conjunction");
  cross_cmd->add_option("--threads", threads, "worker threads (0: hardware concurrency)")->default_val(0);
  add_oracle(cross_cmd, 5);
  add_json(cross_cmd);

  auto* x2_cmd = app.add_subcommand("x2-lines", "lines contracted by the projection from Y5 on (2,1,1,1;-2,-1)");
  x2_cmd->add_option("--prime", prime, "characteristic of the coefficient field")->default_val(kDefaultPrime);
  x2_cmd->add_option("--seed", seed_flag, "RNG seed of the first run (fallback: SCROLLSMITH_SEED)");
  x2_cmd->add_option("--runs", runs, "number of runs with consecutive seeds")->default_val(1);
  add_json(x2_cmd);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kUsage;
  }

  std::ostringstream buf;
  int code = kOk;
  try {
    if (*classify_cmd) {
      code = detail::do_classify(detail::parse_params(d, b), strict, json, buf);
    } else if (*euler_cmd) {
      code = detail::do_euler(detail::parse_params(d, b), json, buf, err);
    } else if (*enum_cmd) {
      code = detail::do_enumerate(chi, enum_d1_max, standard, format, buf, err);
    } else if (*cases_cmd) {
      code = detail::do_cases(realize, cases_d1_max, json, buf);
    } else if (*verify_cmd) {
      const auto raw = detail::parse_params(d, b);
      const auto f = detail::make_field(prime);
      code = detail::do_verify(raw, trials, f, detail::resolve_seed(seed_flag, env_seed), json, buf, err);
    } else if (*cross_cmd) {
      const auto f = detail::make_field(prime);
      code = detail::do_crosscheck(cross_d1_max, trials, f, detail::resolve_seed(seed_flag, env_seed), b_min, b_max,
                                   strict, threads, json, buf, err);
    } else if (*x2_cmd) {
      const auto f = detail::make_field(prime);
      code = detail::do_x2_lines(f, detail::resolve_seed(seed_flag, env_seed), runs, json, buf, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  out << buf.str();
  return code;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err, std::getenv("SCROLLSMITH_SEED"));
}

}  // namespace scrollsmith::cli
