#include "vnr/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <set>

#include "CLI11.hpp"
#include "json.hpp"
#include "vnr/aggregate.hpp"
#include "vnr/baselines.hpp"
#include "vnr/cw_weights.hpp"
#include "vnr/errors.hpp"
#include "vnr/experiments.hpp"
#include "vnr/io/csv.hpp"
#include "vnr/io/report.hpp"
#include "vnr/majority.hpp"
#include "vnr/metrics.hpp"

namespace vnr::cli {
namespace {

using nlohmann::json;

struct InputFlags {
  std::string input;
  std::string groups;
  std::string weights;
  std::vector<std::string> minimize;
  bool normalize = false;
  std::string mode = "basic";
  double gamma = kDefaultGamma;
  std::string format = "table";
  std::optional<std::uint64_t> seed;
  std::string seed_text;
};

void add_input_flags(CLI::App* app, InputFlags& f, bool with_mode = true) {
  app->add_option("-i,--input", f.input, "leaderboard CSV")->required()->check(CLI::ExistingFile);
  app->add_option("--groups", f.groups, "JSON object task -> group name")->check(CLI::ExistingFile);
  app->add_option("--weights", f.weights, "JSON object task -> weight")->check(CLI::ExistingFile);
  app->add_option("--minimize", f.minimize, "tasks where lower scores are better")->delimiter(',');
  app->add_flag("--normalize", f.normalize, "divide every score by 100");
  if (with_mode) app->add_option("--mode", f.mode, "basic, weighted or two_step")->capture_default_str();
  app->add_option("--gamma", f.gamma, "target score of og rules without an explicit og:<gamma>")->capture_default_str();
  app->add_option("--format", f.format, "table or json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  app->add_option("--seed", f.seed_text, "random seed (falls back to VNR_SEED)");
}

std::optional<std::uint64_t> parse_seed(std::string_view text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::ParseError, "seed '" + std::string(text) + "' is not an unsigned 64-bit integer");
  }
  return v;
}

void resolve_seed(InputFlags& f) {
  if (!f.seed_text.empty()) {
    f.seed = parse_seed(f.seed_text);
  } else if (const char* env = std::getenv("VNR_SEED"); env && *env) {
    f.seed = parse_seed(env);
  }
}

Leaderboard load(InputFlags& f) {
  resolve_seed(f);
  Leaderboard lb = io::read_leaderboard(f.input);
  if (!f.groups.empty()) lb = io::apply_groups(lb, io::read_json_file(f.groups));
  if (!f.weights.empty()) lb = io::apply_weights(lb, io::read_json_file(f.weights));
  if (!f.minimize.empty()) lb = io::apply_minimize(lb, f.minimize);
  if (f.normalize) lb = normalized(lb, 100.0);
  return lb;
}

Rule rule_from(const std::string& id, const InputFlags& f) {
  Rule r = parse_rule(id);
  if (r.kind == RuleKind::OptimalityGap && id.find(':') == std::string::npos) r.gamma = f.gamma;
  return r;
}

std::vector<Rule> rules_from(const std::vector<std::string>& ids, const InputFlags& f) {
  std::vector<Rule> out;
  for (const auto& id : ids) out.push_back(rule_from(id, f));
  return out;
}

json seed_json(const std::optional<std::uint64_t>& seed) { return seed ? json(*seed) : json(nullptr); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// Pads every column of `rows` to its widest cell.
std::string columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

// "--lower 0.1" applies to every task; "--lower 0,0.2,none" is per task.
std::vector<std::optional<Rational>> parse_bounds(const std::string& text, std::size_t tasks) {
  if (text.empty()) return {};
  std::vector<std::optional<Rational>> out;
  std::string_view rest = text;
  for (;;) {
    const auto comma = rest.find(',');
    const std::string tok(rest.substr(0, comma));
    if (tok == "none" || tok == "inf" || tok == "-inf") {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(parse_rational(tok));
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (out.size() == 1) out.assign(tasks, out.front());
  if (out.size() != tasks) throw Error(ErrorCode::VectorLengthMismatch, "bounds need 1 or " + std::to_string(tasks) + " entries");
  return out;
}

// Either one coefficient per task or a list of task names to minimize the total weight of.
std::vector<Rational> parse_objective(const std::string& text, const Leaderboard& lb) {
  if (text.empty()) return {};
  std::vector<std::string> tokens;
  std::string_view rest = text;
  for (;;) {
    const auto comma = rest.find(',');
    tokens.emplace_back(rest.substr(0, comma));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  std::vector<Rational> coef;
  try {
    for (const auto& t : tokens) coef.push_back(parse_rational(t));
    if (coef.size() != lb.num_tasks()) throw Error(ErrorCode::VectorLengthMismatch, "objective needs one coefficient per task");
    return coef;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
  }
  coef.assign(lb.num_tasks(), Rational(0));
  for (const auto& t : tokens) coef[lb.task_index(t)] += 1;
  return coef;
}

std::pair<std::size_t, std::size_t> parse_omit(const std::string& text) {
  auto num = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw Error(ErrorCode::ParseError, "bad --omit value '" + text + "'");
    return v;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const auto n = num(text);
    return {n, n};
  }
  const auto a = num(std::string_view(text).substr(0, colon));
  const auto b = num(std::string_view(text).substr(colon + 1));
  if (a > b) throw Error(ErrorCode::ParseError, "--omit range must be ascending");
  return {a, b};
}

// ---- commands ----

int cmd_rank(InputFlags& f, const std::string& rule_id_text, const std::string& baseline_id, std::ostream& out) {
  const Leaderboard lb = load(f);
  const RuleOutcome res = aggregate(lb, rule_from(rule_id_text, f), parse_mode(f.mode));
  std::optional<RuleOutcome> base;
  if (!baseline_id.empty()) base = aggregate(lb, rule_from(baseline_id, f), AggregationMode::Basic);

  if (f.format == "json") {
    json j = io::to_json(res, f.seed);
    if (base) {
      const auto now = competition_ranks(res);
      const auto before = competition_ranks(*base);
      json changes = json::object();
      for (const auto& [s, r] : now) {
        changes[s] = static_cast<long long>(before.at(s)) - static_cast<long long>(r);
      }
      j["baseline"] = {{"rule", base->rule_id}, {"changes", changes}};
    }
    out << io::dump(j);
  } else {
    out << io::to_table(res, base ? &*base : nullptr);
  }
  return kExitOk;
}

int cmd_winner(InputFlags& f, const std::string& rule_id_text, std::ostream& out) {
  const Leaderboard lb = load(f);
  const RuleOutcome res = aggregate(lb, rule_from(rule_id_text, f), parse_mode(f.mode));
  const auto winners = res.winners();
  if (f.format == "json") {
    out << io::dump({{"rule", res.rule_id}, {"mode", std::string(to_string(res.mode))}, {"winners", winners},
                     {"seed", seed_json(f.seed)}});
  } else {
    out << (winners.empty() ? "no winner" : "{" + join(winners, ", ") + "}") << "\n";
    for (const auto& d : res.diagnostics) out << "# " << d << "\n";
  }
  return kExitOk;
}

int cmd_cw(InputFlags& f, const std::string& system, const std::string& epsilon, const std::string& lower,
           const std::string& upper, const std::string& objective, std::ostream& out) {
  const Leaderboard lb = load(f);
  const DominanceMatrix g = build_dominance_matrix(lb, system);
  FeasibilityOptions opts;
  opts.strict_margin = parse_rational(epsilon);
  opts.lower = parse_bounds(lower, lb.num_tasks());
  opts.upper = parse_bounds(upper, lb.num_tasks());
  opts.objective = parse_objective(objective, lb);
  const FeasibilityResult res = find_cw_weights(g, opts);
  const bool verified = res.witness && satisfies(g, opts, *res.witness);

  std::vector<std::string> active;
  for (std::size_t i : res.active_constraints) active.push_back(g.rivals[i]);

  if (f.format == "json") {
    json j;
    j["system"] = system;
    j["status"] = res.prospective() ? "prospective" : "non_prospective";
    j["witness"] = nullptr;
    if (res.witness) {
      j["witness"] = json::array();
      for (std::size_t t = 0; t < g.cols(); ++t) {
        j["witness"].push_back({{"task", g.tasks[t]}, {"weight", (*res.witness)[t].get_str()}, {"value", to_double((*res.witness)[t])}});
      }
    }
    j["active_constraints"] = active;
    j["verified"] = verified;
    j["objective_value"] = res.objective_value ? json(res.objective_value->get_str()) : json(nullptr);
    j["objective_unbounded"] = res.objective_unbounded;
    out << io::dump(j);
    return kExitOk;
  }

  out << system << ": " << (res.prospective() ? "prospective" : "non-prospective") << "\n";
  if (res.witness) {
    std::vector<std::vector<std::string>> rows{{"task", "weight", "value"}};
    for (std::size_t t = 0; t < g.cols(); ++t) {
      rows.push_back({g.tasks[t], (*res.witness)[t].get_str(), io::format_short(to_double((*res.witness)[t]))});
    }
    out << columns(rows);
    out << "verified: " << (verified ? "yes" : "no") << "\n";
    out << "active constraints: " << (active.empty() ? "none" : join(active, ", ")) << "\n";
    if (res.objective_value) out << "objective: " << res.objective_value->get_str() << "\n";
    if (res.objective_unbounded) out << "objective: unbounded below\n";
  }
  return kExitOk;
}

int cmd_compare(InputFlags& f, const std::vector<std::string>& rule_ids, const std::string& baseline_id,
                std::size_t top_k, std::ostream& out) {
  const Leaderboard lb = load(f);
  const AggregationMode mode = parse_mode(f.mode);
  const RuleOutcome base = aggregate(lb, rule_from(baseline_id, f), AggregationMode::Basic);
  const std::size_t k = top_k == 0 ? std::min<std::size_t>(3, lb.num_systems()) : top_k;

  json rows = json::array();
  std::vector<std::vector<std::string>> table{{"rule", "AR top-" + std::to_string(k), "AR least-" + std::to_string(k), "tau", "rho", "DP"}};
  auto add = [&](const RuleOutcome& r) {
    const double top = agreement_rate(r, base, k, End::Top);
    const double least = agreement_rate(r, base, k, End::Least);
    const double tau = kendall_tau(r, base);
    const double rho = spearman_rho(r, base);
    const std::size_t dp = discriminative_power(r);
    rows.push_back({{"rule", r.rule_id}, {"ar_top", top}, {"ar_least", least}, {"kendall_tau", tau}, {"spearman_rho", rho}, {"dp", dp}});
    table.push_back({r.rule_id, io::format_short(top), io::format_short(least), io::format_short(tau), io::format_short(rho),
                     std::to_string(dp)});
  };
  add(base);
  for (const auto& id : rule_ids) add(aggregate(lb, rule_from(id, f), mode));

  if (f.format == "json") {
    out << io::dump({{"baseline", base.rule_id}, {"top_k", k}, {"mode", f.mode}, {"rows", rows}, {"seed", seed_json(f.seed)}});
  } else {
    out << "baseline: " << base.rule_id << "\n" << columns(table);
  }
  return kExitOk;
}

json report_json(const ExperimentReport& r) {
  return {{"rule", r.rule}, {"omit", r.omit}, {"mean", r.mean}, {"sd", r.sd}, {"values", r.values}};
}

int cmd_iia(InputFlags& f, const std::vector<std::string>& rule_ids, std::size_t trials, unsigned threads, std::ostream& out) {
  const Leaderboard lb = load(f);
  ExperimentConfig cfg;
  cfg.seed = f.seed.value_or(0);
  cfg.trials = trials;
  cfg.threads = threads;
  cfg.mode = parse_mode(f.mode);
  json reports = json::array();
  std::vector<std::vector<std::string>> table{{"rule", "mean", "sd"}};
  for (const auto& rule : rules_from(rule_ids, f)) {
    const auto r = iia_experiment(lb, rule, cfg);
    json j = report_json(r);
    j.erase("omit");
    reports.push_back(std::move(j));
    table.push_back({r.rule, io::format_short(r.mean), io::format_short(r.sd)});
  }
  if (f.format == "json") {
    out << io::dump({{"experiment", "iia"}, {"seed", cfg.seed}, {"trials", trials}, {"mode", f.mode}, {"reports", reports}});
  } else {
    out << "iia: " << trials << " trials, seed " << cfg.seed << "\n" << columns(table);
  }
  return kExitOk;
}

int cmd_robustness(InputFlags& f, const std::vector<std::string>& rule_ids, const std::string& omit, std::size_t trials,
                   std::size_t top_k, unsigned threads, std::ostream& out) {
  const Leaderboard lb = load(f);
  const auto [first, last] = parse_omit(omit);
  const auto rules = rules_from(rule_ids, f);
  ExperimentConfig cfg;
  cfg.seed = f.seed.value_or(0);
  cfg.trials = trials;
  cfg.threads = threads;
  cfg.top_k = top_k;
  cfg.mode = parse_mode(f.mode);
  json reports = json::array();
  std::vector<std::vector<std::string>> table{{"omit", "rule", "mean rho", "sd"}};
  std::size_t k = 0;
  for (std::size_t n = first; n <= last; ++n) {
    cfg.omit = n;
    for (const auto& r : robustness_experiment(lb, rules, cfg)) {
      k = r.top_k;
      reports.push_back(report_json(r));
      table.push_back({std::to_string(n), r.rule, io::format_short(r.mean), io::format_short(r.sd)});
    }
  }
  if (f.format == "json") {
    out << io::dump({{"experiment", "robustness"}, {"seed", cfg.seed}, {"trials", trials}, {"top_k", k}, {"mode", f.mode},
                     {"reports", reports}});
  } else {
    out << "robustness: " << trials << " trials, top-" << k << ", seed " << cfg.seed << "\n" << columns(table);
  }
  return kExitOk;
}

int cmd_graph(InputFlags& f, std::ostream& out) {
  const Leaderboard lb = load(f);
  const MajorityGraph g = build_majority_graph(lb, effective_weights(lb, parse_mode(f.mode)));
  if (f.format == "json") {
    json edges = json::array();
    for (const auto& e : g.edges()) {
      edges.push_back({{"from", g.systems()[e.from]}, {"to", g.systems()[e.to]}, {"margin", e.margin}, {"support", e.support}});
    }
    out << io::dump({{"systems", g.systems()}, {"edges", edges}});
  } else {
    out << to_dot(g);
  }
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidLeaderboard:
    case ErrorCode::UnknownRule:
      return kExitParse;
    default:
      return kExitDomain;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank systems on multi-task leaderboards with voting rules", "vnr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "vnr 0.1.0");

  InputFlags f;
  std::string rule = "borda";
  std::string baseline;
  std::vector<std::string> rules;
  std::size_t top_k = 0;
  std::size_t trials = 0;
  unsigned threads = 1;
  std::string omit = "0";
  std::string system, epsilon = "0", lower, upper, objective;

  auto* rank = app.add_subcommand("rank", "rank all systems with one rule");
  add_input_flags(rank, f);
  rank->add_option("-r,--rule", rule, "rule id")->capture_default_str();
  rank->add_option("--baseline", baseline, "rule whose ranking the arrows compare against (basic mode)");

  auto* winner = app.add_subcommand("winner", "print the winning set of one rule");
  add_input_flags(winner, f);
  winner->add_option("-r,--rule", rule, "rule id")->capture_default_str();

  auto* cw = app.add_subcommand("cw-weights", "find task weights under which a system beats every rival");
  add_input_flags(cw, f, false);
  cw->add_option("-s,--system", system, "system to make the Condorcet winner")->required();
  cw->add_option("--epsilon", epsilon, "required margin against each rival (exact decimal or p/q)")->capture_default_str();
  cw->add_option("--lower", lower, "lower weight bound: one value or one per task; 'none' for unbounded");
  cw->add_option("--upper", upper, "upper weight bound: one value or one per task; 'none' for unbounded");
  cw->add_option("--objective", objective, "minimize: coefficients per task, or task names");

  auto* compare = app.add_subcommand("compare", "agreement, correlation and DP of rules against a baseline");
  add_input_flags(compare, f);
  compare->add_option("--rules", rules, "rule ids")->delimiter(',')->required();
  compare->add_option("--baseline", baseline, "reference rule (basic mode)")->default_str("am");
  compare->add_option("-k,--top-k", top_k, "size of the top/least sets (default 3)");

  auto* experiment = app.add_subcommand("experiment", "seeded experiments");
  experiment->require_subcommand(1);
  auto* iia = experiment->add_subcommand("iia", "rank changes among present systems as systems are added");
  add_input_flags(iia, f);
  iia->add_option("--rules,--rule", rules, "rule ids")->delimiter(',')->required();
  iia->add_option("--trials", trials, "number of shuffles (default 50)");
  iia->add_option("--threads", threads, "worker threads")->capture_default_str();

  auto* robust = experiment->add_subcommand("robustness", "ranking stability when scores are deleted");
  add_input_flags(robust, f);
  robust->add_option("--rules,--rule", rules, "rule ids")->delimiter(',')->required();
  robust->add_option("--omit", omit, "cells deleted per trial: N or a range a:b")->capture_default_str();
  robust->add_option("--trials", trials, "trials per N (default 100)");
  robust->add_option("-k,--top-k", top_k, "compare over the reference top-k (default all)");
  robust->add_option("--threads", threads, "worker threads")->capture_default_str();

  auto* graph = app.add_subcommand("graph", "majority graph as DOT or JSON");
  add_input_flags(graph, f);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (rank->parsed()) return cmd_rank(f, rule, baseline, out);
    if (winner->parsed()) return cmd_winner(f, rule, out);
    if (cw->parsed()) return cmd_cw(f, system, epsilon, lower, upper, objective, out);
    if (compare->parsed()) return cmd_compare(f, rules, baseline.empty() ? "am" : baseline, top_k, out);
    if (iia->parsed()) return cmd_iia(f, rules, trials ? trials : 50, threads, out);
    if (robust->parsed()) return cmd_robustness(f, rules, omit, trials ? trials : 100, top_k, threads, out);
    if (graph->parsed()) return cmd_graph(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace vnr::cli
