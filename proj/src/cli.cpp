#include "cgt/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <thread>

#include "cgt/backtrack.hpp"
#include "cgt/carter.hpp"
#include "cgt/example_check.hpp"
#include "cgt/groupspec.hpp"
#include "cgt/quotient.hpp"
#include "cgt/report.hpp"
#include "cgt/subgroup.hpp"

namespace cgt {

namespace {

struct CommonOpts {
  std::string spec_file;
  std::string expr;
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::string series_hints;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input) {
  if (needs_input) {
    cmd->add_option("--spec", opts.spec_file, "construction file (one expression)");
    cmd->add_option("--expr", opts.expr, "construction expression");
  }
  cmd->add_flag("--json", opts.json, "emit the report as a single JSON document");
  cmd->add_option("--seed", opts.seed, "seed for sampled verification steps")->default_val(0);
  cmd->add_option("--budget", opts.budget, "enumeration budget override");
  cmd->add_option("--series-hints", opts.series_hints, "comma-separated named subgroups to seed the chief series");
  cmd->add_option("--threads", opts.threads, "worker threads for independent criterion cells");
}

Engine make_engine(const CommonOpts& opts) {
  Engine eng;
  eng.seed = opts.seed;
  if (opts.budget > 0) {
    eng.limits.enum_order_fingerprint = opts.budget;
    eng.limits.enum_order = std::min<std::uint64_t>(eng.limits.enum_order, opts.budget);
  }
  eng.threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
  if (eng.threads < 1) eng.threads = 1;
  return eng;
}

BuiltGroup load_group(const CommonOpts& opts, const Engine& eng) {
  std::string text;
  if (!opts.expr.empty()) {
    text = opts.expr;
  } else if (!opts.spec_file.empty()) {
    std::ifstream in(opts.spec_file);
    if (!in) throw group_error("parse", "cannot open spec file " + opts.spec_file);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    throw group_error("usage", "one of --expr or --spec is required");
  }
  return build_group(parse_spec(text), eng);
}

GroupHints resolve_hints(const BuiltGroup& built, const CommonOpts& opts) {
  if (opts.series_hints.empty()) return built.hints;
  GroupHints hints;
  std::string rest = opts.series_hints;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string name = rest.substr(0, comma);
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    const PermGroup* sub = built.named(name);
    if (!sub) throw group_error("usage", "no named subgroup '" + name + "' in this construction");
    hints.normal_subgroups.push_back(*sub);
  }
  hints.socle_factors = built.hints.socle_factors;
  return hints;
}

std::string describe_input(const CommonOpts& opts, const BuiltGroup& built) {
  if (!opts.expr.empty()) return opts.expr;
  if (!opts.spec_file.empty()) return render_spec(built.provenance);
  return "(paper_example)";
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

Json base_report(const std::string& command, const std::string& input, const CommonOpts& opts, const Engine& eng) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["input"] = input;
  j["seed"] = opts.seed;
  Json limits;
  limits["max_order"] = eng.limits.max_order;
  limits["backtrack_nodes"] = eng.limits.backtrack_nodes;
  limits["enum_order"] = eng.limits.enum_order;
  limits["enum_order_fingerprint"] = eng.limits.enum_order_fingerprint;
  j["limits"] = limits;
  // a run that returns a definite answer stayed inside every limit; budget
  // overruns abort with exit code 2 instead
  j["limits_hit"] = Json::array();
  return j;
}

void emit(const Json& report, bool as_json, std::ostream& out, const std::vector<std::string>& human_lines) {
  if (as_json) {
    out << report.dump(2) << "\n";
  } else {
    for (const auto& line : human_lines) out << line << "\n";
  }
}

int run_carter(const CommonOpts& opts, bool existence_only, std::ostream& out) {
  Engine eng = make_engine(opts);
  Stopwatch watch;
  BuiltGroup built = load_group(opts, eng);
  std::int64_t build_ms = watch.ms();
  CarterOutcome outcome = carter_find(built.group, eng, resolve_hints(built, opts));
  Json j = base_report(existence_only ? "exists" : "carter", describe_input(opts, built), opts, eng);
  Json jo = json_outcome(outcome);
  if (existence_only) {
    jo.erase("subgroup");
    if (outcome.subgroup) jo["subgroup_order"] = outcome.subgroup->order();
  }
  j["group"] = json_group(built.group);
  if (existence_only) j["group"].erase("generators");
  j["outcome"] = jo;
  Json t;
  t["build_ms"] = build_ms;
  t["compute_ms"] = watch.ms() - build_ms;
  t["total_ms"] = watch.ms();
  j["timings"] = t;

  std::vector<std::string> lines;
  lines.push_back("group of order " + std::to_string(built.group.order()) + " on " +
                  std::to_string(built.group.degree()) + " points");
  if (outcome.exists) {
    lines.push_back("carter subgroup exists; order " + std::to_string(outcome.subgroup->order()));
    if (!existence_only)
      for (const auto& g : outcome.subgroup->generators()) lines.push_back("  generator " + g.to_cycle_string());
  } else {
    lines.push_back("no carter subgroup; witness " + outcome.witness->label + " at " + outcome.witness->where);
  }
  for (const auto& f : outcome.flags) lines.push_back("flag: " + f);
  emit(j, opts.json, out, lines);
  return 0;
}

int run_brute(const CommonOpts& opts, std::ostream& out) {
  Engine eng = make_engine(opts);
  Stopwatch watch;
  BuiltGroup built = load_group(opts, eng);
  std::vector<std::string> flags;
  auto classes = brute_force_carter(built.group, eng, &flags);
  Json j = base_report("brute", describe_input(opts, built), opts, eng);
  j["group"] = json_group(built.group);
  Json jc = Json::array();
  for (const auto& c : classes) jc.push_back(json_group(c));
  j["carter_classes"] = jc;
  j["class_count"] = classes.size();
  j["flags"] = flags;
  Json t;
  t["total_ms"] = watch.ms();
  j["timings"] = t;

  std::vector<std::string> lines;
  lines.push_back("group of order " + std::to_string(built.group.order()) + ": " + std::to_string(classes.size()) +
                  " carter class(es)");
  for (const auto& c : classes) lines.push_back("  class of order " + std::to_string(c.order()));
  for (const auto& f : flags) lines.push_back("flag: " + f);
  emit(j, opts.json, out, lines);
  return 0;
}

int run_chief(const CommonOpts& opts, bool with_condition_e, std::ostream& out) {
  Engine eng = make_engine(opts);
  Stopwatch watch;
  BuiltGroup built = load_group(opts, eng);
  ChiefSeriesData series = chief_series(built.group, eng, resolve_hints(built, opts));
  verify_chief_series(built.group, series, eng);
  Json j = base_report(with_condition_e ? "condition-e" : "chief-series", describe_input(opts, built), opts, eng);
  j["group"] = json_group(built.group);
  j["group"].erase("generators");
  j["chief_series"] = json_chief_series(series);
  std::vector<std::string> lines;
  lines.push_back("chief series with " + std::to_string(series.factors.size()) + " factor(s):");
  for (std::size_t i = 0; i < series.factors.size(); ++i)
    lines.push_back("  level " + std::to_string(i) + ": order " + std::to_string(series.factors[i].order) + " = (" +
                    series.factors[i].label.to_string() + ")^" + std::to_string(series.factors[i].multiplicity));
  if (with_condition_e) {
    ConditionEReport rep = check_condition_E(built.group, series, eng);
    j["condition_e"] = json_condition_e(rep);
    lines.push_back(rep.satisfied ? "criterion satisfied: a carter subgroup exists"
                                  : "criterion fails: no carter subgroup");
    for (const auto& c : rep.cells)
      lines.push_back("  cell (" + std::to_string(c.level) + "," + std::to_string(c.factor) + "): aut order " +
                      std::to_string(c.aut_order) + ", " + c.method + ", " + (c.exists ? "exists" : "missing"));
    if (rep.witness) lines.push_back("witness: " + rep.witness->label + " at " + rep.witness->where);
  }
  Json t;
  t["total_ms"] = watch.ms();
  j["timings"] = t;
  emit(j, opts.json, out, lines);
  return 0;
}

int run_verify_example(const CommonOpts& opts, std::ostream& out) {
  Engine eng = make_engine(opts);
  Stopwatch watch;
  ExampleReport rep = verify_example(eng);
  Json j = base_report("verify-paper-example", "(paper_example)", opts, eng);
  j["report"] = json_example(rep);
  Json t;
  t["total_ms"] = watch.ms();
  j["timings"] = t;

  std::vector<std::string> lines;
  lines.push_back("group of order " + std::to_string(rep.group_order) + " on " + std::to_string(rep.group_degree) +
                  " points");
  for (const auto& st : rep.statements) {
    lines.push_back(std::string(st.pass ? "PASS" : "FAIL") + " statement " + std::to_string(st.number) + ": " +
                    st.claim);
    for (const auto& d : st.details) lines.push_back("    " + d);
  }
  lines.push_back(std::string("outcome: ") + (rep.outcome.exists ? "exists" : "not_exists"));
  emit(j, opts.json, out, lines);
  if (!rep.all_pass) {
    std::string failed;
    for (const auto& st : rep.statements)
      if (!st.pass) failed += (failed.empty() ? "" : ", ") + std::to_string(st.number);
    throw group_error("verify", "statement " + failed + " failed");
  }
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite permutation-group engine for carter subgroups"};
  app.require_subcommand(1);

  CommonOpts carter_opts, exists_opts, brute_opts, chief_opts, cond_opts, verify_opts;
  auto* cmd_carter = app.add_subcommand("carter", "decide existence and construct a carter subgroup");
  add_common(cmd_carter, carter_opts, true);
  auto* cmd_exists = app.add_subcommand("exists", "existence decision only");
  add_common(cmd_exists, exists_opts, true);
  auto* cmd_brute = app.add_subcommand("brute", "enumerate nilpotent self-normalizing subgroups");
  add_common(cmd_brute, brute_opts, true);
  auto* cmd_chief = app.add_subcommand("chief-series", "compute and verify a chief series");
  add_common(cmd_chief, chief_opts, true);
  auto* cmd_cond = app.add_subcommand("condition-e", "evaluate the normal-series existence criterion");
  add_common(cmd_cond, cond_opts, true);
  auto* cmd_verify = app.add_subcommand("verify-paper-example", "verify the packaged counterexample end to end");
  add_common(cmd_verify, verify_opts, false);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage: " << e.what() << "\n";
    return 1;
  }

  try {
    if (cmd_carter->parsed()) return run_carter(carter_opts, false, out);
    if (cmd_exists->parsed()) return run_carter(exists_opts, true, out);
    if (cmd_brute->parsed()) return run_brute(brute_opts, out);
    if (cmd_chief->parsed()) return run_chief(chief_opts, false, out);
    if (cmd_cond->parsed()) return run_chief(cond_opts, true, out);
    if (cmd_verify->parsed()) return run_verify_example(verify_opts, out);
    err << "usage: no subcommand\n";
    return 1;
  } catch (const capacity_error& e) {
    err << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const group_error& e) {
    if (e.phase() == "parse" || e.phase() == "validate" || e.phase() == "usage" || e.phase() == "build") {
      err << "error: " << e.what() << "\n";
      return 1;
    }
    err << "engine error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace cgt
