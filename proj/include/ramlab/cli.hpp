#pragma once

// Command-line front end: argument parsing into a RunConfig and command dispatch.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "ramlab/report_json.hpp"

namespace ramlab::cli {

enum ExitCode { exit_ok = 0, exit_claim_failure = 1, exit_usage = 2, exit_resource_cap = 3 };

enum class Format { json, text };

struct RunConfig {
  std::string subcommand;
  std::string group;
  std::string cover;
  std::vector<std::uint64_t> orders;
  std::vector<std::size_t> classes;
  std::string type;
  std::uint64_t d = 0;
  std::vector<std::string> at;
  std::string a;
  std::vector<std::string> as;
  std::vector<std::string> avoid;
  std::size_t count = 5;
  Tier tier = Tier::fast;
  Format format = Format::json;
  std::uint64_t seed = 0x5eed;
  unsigned jobs = 1;
};

struct UsageError : std::runtime_error {
  int code;
  UsageError(const std::string& msg, int c) : std::runtime_error(msg), code(c) {}
};

inline bool looks_like_builtin(const std::string& spec) {
  static const std::regex call(R"(^[A-Za-z]+\(\s*\d+\s*(,\s*\d+\s*)?\)$)");
  return bundled_group_files().count(spec) > 0 || std::regex_match(spec, call);
}

/// Parses argv; throws UsageError (code 0 for --help, 2 otherwise).
inline RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"ramlab: generator exponents, rigidity and ramification in specializations", "ramlab"};
  app.require_subcommand(1, 1);
  RunConfig cfg;
  std::string format = "json", tier = "default";
  bool slow = false, nightly = false;
  app.add_option("--format", format, "output format (default json)")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tier", tier, "claim tier")->check(CLI::IsMember({"default", "slow", "nightly"}));
  app.add_flag("--slow", slow, "same as --tier slow");
  app.add_flag("--nightly", nightly, "same as --tier nightly");
  app.add_option("--seed", cfg.seed, "seed for randomized strategies");
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.fallthrough();

  auto group_check = CLI::Validator(
      [](std::string& s) -> std::string {
        if (looks_like_builtin(s) || std::filesystem::exists(s)) return {};
        return "not a builtin group or existing file: " + s;
      },
      "GROUP");
  auto add_group = [&](CLI::App* sub) { sub->add_option("--group", cfg.group, "builtin name or generator file")->required()->check(group_check); };
  auto add_cover = [&](CLI::App* sub) { sub->add_option("--cover", cfg.cover, "cover file")->required()->check(CLI::ExistingFile); };

  auto* classes = app.add_subcommand("classes", "list conjugacy classes");
  add_group(classes);
  auto* gexp_cmd = app.add_subcommand("gexp", "generator exponent");
  add_group(gexp_cmd);
  auto* rigid = app.add_subcommand("rigid", "generating-triple count and rigidity");
  add_group(rigid);
  auto* ro = rigid->add_option("--orders", cfg.orders, "element orders of the three classes")->delimiter(',')->expected(3);
  auto* rc = rigid->add_option("--classes", cfg.classes, "class indices")->delimiter(',')->expected(3);
  ro->excludes(rc);
  auto* crit = app.add_subcommand("coprime-criterion", "coprime-inertia criterion for a class tuple");
  add_group(crit);
  auto* ct = crit->add_option("--type", cfg.orders, "element orders of the tuple")->delimiter(',');
  auto* cc = crit->add_option("--classes", cfg.classes, "class indices")->delimiter(',');
  ct->excludes(cc);
  auto* branch = app.add_subcommand("branch", "branch points of a cover");
  add_cover(branch);
  auto* ramtype = app.add_subcommand("ramtype", "ramification type of a cover");
  add_cover(ramtype);
  auto* pull = app.add_subcommand("pullback", "ramification type after a cyclic pullback");
  pull->add_option("--type", cfg.type, "type such as 2,2,3@inf,5@0")->required();
  pull->add_option("--d", cfg.d, "degree of the pullback")->required()->check(CLI::Range(2, 1 << 30));
  pull->add_option("--at", cfg.at, "the two totally ramified points")->delimiter(',')->expected(2)->required();
  auto* predict = app.add_subcommand("predict", "inertia prediction for t = a");
  add_cover(predict);
  predict->add_option("--a", cfg.a, "specialization value p/q")->required();
  auto* udisc = app.add_subcommand("udisc", "bound on universally ramified primes");
  add_cover(udisc);
  udisc->add_option("--as", cfg.as, "specialization values")->delimiter(',')->required();
  auto* spec = app.add_subcommand("specialize", "search specializations unramified at given primes");
  add_cover(spec);
  spec->add_option("--avoid", cfg.avoid, "primes that must stay unramified")->delimiter(',');
  spec->add_option("--count", cfg.count, "number of values")->check(CLI::PositiveNumber);
  app.add_subcommand("suite", "run the claim suite");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(app.help(), exit_ok);
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError(app.help("", CLI::AppFormatMode::All), exit_ok);
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (msg.empty()) msg = e.get_name();
    throw UsageError(msg + "\n" + app.help(), exit_usage);
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::json : Format::text;
  cfg.tier = parse_tier(tier);
  if (slow) cfg.tier = std::max(cfg.tier, Tier::slow);
  if (nightly) cfg.tier = Tier::nightly;
  if (cfg.subcommand == "rigid" && cfg.orders.empty() && cfg.classes.empty())
    throw UsageError("rigid: one of --orders or --classes is required", exit_usage);
  if (cfg.subcommand == "coprime-criterion" && cfg.orders.empty() && cfg.classes.empty())
    throw UsageError("coprime-criterion: one of --type or --classes is required", exit_usage);
  try {
    if (!cfg.a.empty()) parse_rational(cfg.a);
    for (const auto& v : cfg.as) parse_rational(v);
    for (const auto& v : cfg.avoid) (void)BigInt(v);
    if (!cfg.type.empty()) parse_type(cfg.type);
  } catch (const std::exception& e) {
    throw UsageError(std::string("invalid value: ") + e.what(), exit_usage);
  }
  if (cfg.subcommand == "udisc" && cfg.as.size() < 2) throw UsageError("udisc: --as needs at least two values", exit_usage);
  return cfg;
}

namespace detail {

using report::json;

struct Output {
  json doc;
  std::string text;
  int code = exit_ok;
};

inline std::string class_line(std::size_t i, const ConjClass& c) {
  std::ostringstream os;
  os << std::setw(4) << i << std::setw(8) << c.elt_order << std::setw(14) << c.size << std::setw(14)
     << c.centralizer_order << std::setw(6) << (c.rational ? "yes" : "no") << "  " << c.rep.to_cycle_string();
  return os.str();
}

inline std::string class_header() { return "   #   order          size   centralizer  rat.  representative\n"; }

/// Class indices for the requested element orders; ambiguity is a usage error listing the candidates.
inline std::vector<std::size_t> select_by_orders(const PermGroup& G, const std::vector<std::uint64_t>& orders) {
  std::vector<std::size_t> out;
  std::ostringstream err;
  const auto& cls = conjugacy_classes(G);
  for (auto o : orders) {
    const auto idx = classes_of_order(G, o);
    if (idx.size() == 1) {
      out.push_back(idx.front());
      continue;
    }
    if (idx.empty()) {
      err << "no class of elements of order " << o << "\n";
    } else {
      err << "order " << o << " is ambiguous; candidates (select with --classes):\n" << class_header();
      for (auto i : idx) err << class_line(i, cls[i]) << "\n";
    }
  }
  if (!err.str().empty()) throw UsageError(err.str(), exit_usage);
  return out;
}

inline ClassOptions class_options(const RunConfig& cfg) {
  ClassOptions o;
  o.seed = cfg.seed;
  return o;
}

inline Output run_classes(const RunConfig& cfg) {
  const PermGroup G = group_from_spec(cfg.group);
  Output out;
  out.doc = report::classes_json(G);
  std::ostringstream os;
  os << G.name() << ": order " << G.order() << ", degree " << G.degree() << "\n" << class_header();
  const auto& cls = conjugacy_classes(G, class_options(cfg));
  for (std::size_t i = 0; i < cls.size(); ++i) os << class_line(i, cls[i]) << "\n";
  out.text = os.str();
  return out;
}

inline Output run_gexp(const RunConfig& cfg) {
  const PermGroup G = group_from_spec(cfg.group);
  const auto r = gexp(G, class_options(cfg));
  const auto e = exponent(G, class_options(cfg));
  Output out;
  out.doc = report::gexp_json(G, r, e);
  std::ostringstream os;
  os << G.name() << ": order " << G.order() << ", exp " << e << ", gexp " << r.value << "\ncertificate:";
  for (const auto& x : r.certificate) os << "\n  " << x.to_cycle_string() << "  (order " << x.order() << ")";
  out.text = os.str() + "\n";
  return out;
}

inline Output run_rigid(const RunConfig& cfg) {
  const PermGroup G = group_from_spec(cfg.group);
  std::vector<std::size_t> idx = cfg.classes.empty() ? select_by_orders(G, cfg.orders) : cfg.classes;
  const auto& cls = conjugacy_classes(G, class_options(cfg));
  for (auto i : idx)
    if (i >= cls.size()) throw UsageError("class index " + std::to_string(i) + " out of range", exit_usage);
  TripleCountOptions opt;
  opt.jobs = cfg.jobs;
  opt.seed = cfg.seed;
  opt.classes = class_options(cfg);
  const auto r = rigidity_report(G, {idx[0], idx[1], idx[2]}, opt);
  Output out;
  out.doc = report::rigidity_json(r);
  out.doc["group"] = report::group_header(G);
  std::ostringstream os;
  os << G.name() << " classes (" << idx[0] << "," << idx[1] << "," << idx[2] << "), orders (" << cls[idx[0]].elt_order << ","
     << cls[idx[1]].elt_order << "," << cls[idx[2]].elt_order << ")\n"
     << "generating triples: " << r.count << " (|G|/|Z| = " << r.expected << ")\n"
     << "rigid: " << (r.rigid ? "yes" : "no") << ", rational classes: " << (r.rational ? "yes" : "no")
     << ", rationally rigid: " << (r.rationally_rigid() ? "yes" : "no") << "\n";
  out.text = os.str();
  return out;
}

inline Output run_criterion(const RunConfig& cfg) {
  const PermGroup G = group_from_spec(cfg.group);
  std::vector<std::size_t> idx = cfg.classes;
  const auto& cls = conjugacy_classes(G, class_options(cfg));
  if (idx.empty()) {
    // repeated orders map to the same class; distinct orders must be unambiguous
    std::vector<std::uint64_t> distinct = cfg.orders;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const auto sel = select_by_orders(G, distinct);
    for (auto o : cfg.orders) idx.push_back(sel[std::lower_bound(distinct.begin(), distinct.end(), o) - distinct.begin()]);
  }
  for (auto i : idx)
    if (i >= cls.size()) throw UsageError("class index " + std::to_string(i) + " out of range", exit_usage);
  const auto r = coprime_criterion_check(G, idx, class_options(cfg));
  Output out;
  out.doc = report::criterion_json(idx, r);
  out.doc["group"] = report::group_header(G);
  std::ostringstream os;
  os << G.name() << ": gexp " << r.gexp_value << "\n   #   order   centralizer  large  self-centralizing\n";
  for (const auto& f : r.details)
    os << std::setw(4) << f.index << std::setw(8) << f.order << std::setw(14) << f.centralizer_order << std::setw(7)
       << (f.large ? "yes" : "no") << "  " << (f.self_centralizing ? "yes" : "no") << "\n";
  os << (r.passes ? "criterion holds" : "criterion fails: " + to_string(r.offending)) << "\n";
  out.text = os.str();
  return out;
}

inline Output run_branch(const RunConfig& cfg) {
  const Cover c = load_cover(cfg.cover);
  const auto bps = branch_points(c);
  Output out;
  out.doc = report::branch_points_json(bps);
  std::ostringstream os;
  for (const auto& b : bps) os << b.label() << (b.certified ? "" : "  (unresolved)") << "\n";
  out.text = os.str();
  return out;
}

inline Output run_ramtype(const RunConfig& cfg) {
  const Cover c = load_cover(cfg.cover);
  const auto rt = ramification_indices(c);
  Output out;
  out.doc = report::ramtype_json(rt);
  std::ostringstream os;
  os << "degree " << rt.degree << "\n";
  for (const auto& en : rt.entries) {
    os << "  " << en.point.label() << ":";
    for (int i : en.indices) os << " " << i;
    os << "  (e = " << en.e << ")\n";
  }
  os << "Riemann-Hurwitz sum " << rt.riemann_hurwitz_sum() << " over " << rt.geometric_branch_point_count()
     << " branch points\n";
  out.text = os.str();
  return out;
}

inline Output run_pullback(const RunConfig& cfg) {
  const auto t = pullback_type(parse_type(cfg.type), cfg.d, {cfg.at[0], cfg.at[1]});
  Output out;
  out.doc = report::type_json(t);
  out.text = format_type(t) + "\n";
  return out;
}

inline Output run_predict(const RunConfig& cfg) {
  const Cover c = load_cover(cfg.cover);
  FactorOptions fo;
  fo.seed = cfg.seed;
  const auto r = predict_inertia(c, parse_rational(cfg.a), fo);
  Output out;
  out.doc = report::specialization_json(r);
  std::ostringstream os;
  os << "a = " << to_string(r.a) << "\nbad primes:";
  for (const auto& p : r.bad.primes) os << " " << p;
  os << (r.bad.complete ? "" : " (incomplete)") << "\n";
  os << "       prime    nu   e  predicted  mod-p-squarefree  local         branch point\n";
  for (const auto& [p, pp] : r.per_prime) {
    const auto& ev = r.evidence.at(p);
    os << std::setw(12) << p << std::setw(6) << pp.nu << std::setw(4) << pp.e << std::setw(11)
       << (pp.predicted_order ? std::to_string(*pp.predicted_order) : "bad") << std::setw(18)
       << (ev.squarefree_mod_p ? "yes" : "no") << "  " << std::left << std::setw(14) << to_string(ev.verdict)
       << std::right << pp.branch.label() << "\n";
  }
  for (const auto& p : r.conflicts) os << "conflict: " << p << " meets several branch points\n";
  out.text = os.str();
  return out;
}

inline Output run_udisc(const RunConfig& cfg) {
  const Cover c = load_cover(cfg.cover);
  std::vector<BigRat> as;
  for (const auto& v : cfg.as) as.push_back(parse_rational(v));
  FactorOptions fo;
  fo.seed = cfg.seed;
  const auto r = universally_ramified_bound(c, as, fo);
  Output out;
  out.doc = report::udisc_json(as, r);
  std::ostringstream os;
  os << "gcd of specialization discriminants: " << r.discriminant_gcd << "\n";
  for (const auto& [p, a] : r.cleared_by) os << "  " << p << " unramified at a = " << to_string(a) << "\n";
  os << "possibly universally ramified: {";
  bool first = true;
  for (const auto& p : r.remaining.primes) {
    os << (first ? "" : ", ") << p;
    first = false;
  }
  os << "}" << (r.remaining.complete ? "" : " (over the recovered factorization)") << "\n";
  out.text = os.str();
  return out;
}

inline Output run_specialize(const RunConfig& cfg) {
  const Cover c = load_cover(cfg.cover);
  std::set<BigInt> S;
  for (const auto& v : cfg.avoid) S.insert(BigInt(v));
  const auto r = specialize_search(c, S, cfg.count);
  Output out;
  out.doc = report::search_json(r);
  std::ostringstream os;
  for (const auto& [p, l] : r.locks) os << "p = " << p << ": a = " << l.first << " mod " << l.second << "\n";
  os << "values:";
  for (const auto& v : r.values) os << " " << to_string(v);
  os << (r.exhausted ? "  (search budget exhausted)" : "") << "\n";
  out.text = os.str();
  return out;
}

inline Output run_suite_cmd(const RunConfig& cfg, std::ostream& live) {
  SuiteContext ctx;
  ctx.seed = cfg.seed;
  ctx.jobs = cfg.jobs;
  Output out;
  const bool text = cfg.format == Format::text;
  const auto recs = run_suite(cfg.tier, ctx, [&](const ClaimRecord& r) {
    if (!text) return;
    live << std::left << std::setw(8) << report::status_name(r.status) << std::setw(28) << r.claim_id << std::right
         << r.detail << "\n";
  });
  json arr = json::array();
  int failed = 0, passed = 0, skipped = 0;
  for (const auto& r : recs) {
    arr.push_back(report::claim_json(r));
    if (r.status == ClaimStatus::fail) ++failed;
    if (r.status == ClaimStatus::pass) ++passed;
    if (r.status == ClaimStatus::skipped) ++skipped;
  }
  out.doc = {{"tier", to_string(cfg.tier)}, {"records", arr}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}};
  out.text = std::to_string(passed) + " passed, " + std::to_string(failed) + " failed, " + std::to_string(skipped) +
             " skipped\n";
  out.code = failed ? exit_claim_failure : exit_ok;
  return out;
}

}  // namespace detail

/// Executes a parsed command, writing the report to `out` and diagnostics to `err`.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  detail::Output o;
  int code = exit_ok;
  std::string message;
  try {
    const auto& s = cfg.subcommand;
    if (s == "classes") o = detail::run_classes(cfg);
    else if (s == "gexp") o = detail::run_gexp(cfg);
    else if (s == "rigid") o = detail::run_rigid(cfg);
    else if (s == "coprime-criterion") o = detail::run_criterion(cfg);
    else if (s == "branch") o = detail::run_branch(cfg);
    else if (s == "ramtype") o = detail::run_ramtype(cfg);
    else if (s == "pullback") o = detail::run_pullback(cfg);
    else if (s == "predict") o = detail::run_predict(cfg);
    else if (s == "udisc") o = detail::run_udisc(cfg);
    else if (s == "specialize") o = detail::run_specialize(cfg);
    else if (s == "suite") o = detail::run_suite_cmd(cfg, out);
    else throw UsageError("unknown subcommand " + s, exit_usage);
    code = o.code;
  } catch (const UsageError& e) {
    code = e.code;
    message = e.what();
  } catch (const ResourceCapError& e) {
    code = exit_resource_cap;
    message = e.what();
  } catch (const std::invalid_argument& e) {
    code = exit_usage;
    message = e.what();
  } catch (const std::domain_error& e) {
    code = exit_usage;
    message = e.what();
  } catch (const std::out_of_range& e) {
    code = exit_usage;
    message = e.what();
  } catch (const std::exception& e) {
    code = exit_claim_failure;
    message = e.what();
  }
  if (!message.empty()) {
    if (cfg.format == Format::json) out << report::error_envelope(cfg.subcommand, code, message).dump(2) << "\n";
    err << "ramlab " << cfg.subcommand << ": " << message << (message.back() == '\n' ? "" : "\n");
    return code;
  }
  if (cfg.format == Format::json)
    out << report::envelope(cfg.subcommand, code == exit_ok, o.doc).dump(2) << "\n";
  else
    out << o.text;
  return code;
}

inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  RunConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const UsageError& e) {
    (e.code == exit_ok ? out : err) << e.what() << "\n";
    return e.code;
  }
  return run(cfg, out, err);
}

}  // namespace ramlab::cli
