#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liftprop/dsl.hpp"
#include "liftprop/enumeration.hpp"
#include "liftprop/interval.hpp"
#include "liftprop/lifting.hpp"
#include "liftprop/separation.hpp"
#include "liftprop/urysohn.hpp"

namespace liftprop::cli {
namespace {

using nlohmann::json;

// Input problems that end the run with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

dsl::TopoFile load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return dsl::parse_file(text);
  } catch (const SyntaxError& e) {
    throw UsageError(path + ":" + e.what());
  } catch (const Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

SpacePtr load_space(const std::string& path) {
  auto file = load(path);
  if (file.spaces.empty()) throw UsageError(path + ": no space statement");
  return file.spaces.front().space;
}

CMap load_map(const std::string& spec) {
  constexpr std::string_view kEmpty = "empty:";
  if (spec.rfind(kEmpty, 0) == 0) return empty_map(load_space(spec.substr(kEmpty.size())));
  auto file = load(spec);
  if (file.maps.empty()) throw UsageError(spec + ": no map statement");
  return file.maps.front().map;
}

json names_of(const FinSpace& x, PointSet s) {
  json out = json::array();
  for (PointId p : s.members()) out.push_back(x.name(p));
  return out;
}

PointSet set_from_names(const FinSpace& x, const std::vector<std::string>& names) {
  try {
    return x.set_of(names);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

double millis(std::chrono::nanoseconds ns) {
  return std::chrono::duration<double, std::milli>(ns).count();
}

// Collects the pieces of one report and prints them in the chosen format.
struct Report {
  std::string command;
  json inputs = json::object();
  bool verdict = true;
  json witness;
  json data;
  json stats;
  std::vector<std::string> text;

  void emit(std::ostream& out, OutputFormat format) const {
    if (format == OutputFormat::kJson) {
      json j = {{"command", command}, {"inputs", inputs}, {"verdict", verdict}};
      if (!witness.is_null()) j["witness"] = witness;
      if (!data.is_null()) j["data"] = data;
      if (!stats.is_null()) j["stats"] = stats;
      out << j.dump(2) << "\n";
      return;
    }
    for (const auto& line : text) out << line << "\n";
  }
};

void reject_dot(const RunConfig& c) {
  if (c.format == OutputFormat::kDot) {
    throw UsageError("dot output is only available for parse and catalog");
  }
}

int cmd_parse(const RunConfig& c, std::ostream& out) {
  auto file = load(c.input);
  Report r{"parse"};
  r.inputs = {{"input", c.input}};
  r.data = {{"statements", json::array()}};
  std::size_t si = 0;
  std::size_t mi = 0;
  std::ostringstream dot;
  for (const auto& [name, is_map] : file.order) {
    if (is_map) {
      const CMap& f = file.maps[mi++].map;
      r.text.push_back("map " + name + " = " + dsl::render(f, dsl::Format::kText));
      r.data["statements"].push_back({{"name", name}, {"kind", "map"}, {"value", dsl::to_data(f)}});
      dot << "// map " << name << "\n" << dsl::render(f, dsl::Format::kDot);
    } else {
      const FinSpace& x = *file.spaces[si++].space;
      r.text.push_back("space " + name + " = " + dsl::render(x, dsl::Format::kText));
      r.data["statements"].push_back({{"name", name}, {"kind", "space"}, {"value", dsl::to_data(x)}});
      dot << "// space " << name << "\n" << dsl::render(x, dsl::Format::kDot);
    }
  }
  if (c.format == OutputFormat::kDot) {
    out << dot.str();
  } else {
    r.emit(out, c.format);
  }
  return kOk;
}

// First open subspace that is not normal, with its separation witness.
std::optional<std::pair<PointSet, SeparationInstance>> hereditary_witness(const FinSpace& x) {
  for (PointSet o : open_sets(x)) {
    const FinSpace sub = subspace(x, o);
    if (auto w = separation_witness(sub)) {
      // Map the witness back to ids of x.
      const auto ids = o.members();
      SeparationInstance lifted;
      for_each_member(w->s, [&](PointId p) { lifted.s.insert(ids[p]); });
      for_each_member(w->t, [&](PointId p) { lifted.t.insert(ids[p]); });
      return std::make_pair(o, lifted);
    }
  }
  return std::nullopt;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
  reject_dot(c);
  const SpacePtr x = load_space(c.space);
  Report r{"check"};
  r.inputs = {{"space", c.space}, {"axiom", c.axiom}, {"method", c.method}};
  r.text.push_back("space: " + dsl::render(*x, dsl::Format::kText));
  r.text.push_back("axiom: " + c.axiom);

  std::vector<std::string> methods;
  const bool normal = c.axiom == "normal";
  if (!normal && c.axiom != "hereditarilyNormal") throw UsageError("unknown axiom " + c.axiom);
  if (c.method == "both") {
    methods = {normal ? "brute" : "openSubspaces", "lifting"};
  } else if (c.method == "all") {
    if (normal) {
      for (auto m : kAllNormalMethods) methods.emplace_back(to_string(m));
    } else {
      for (auto m : kAllHereditaryMethods) methods.emplace_back(to_string(m));
    }
  } else {
    methods = {c.method};
  }

  json verdicts = json::object();
  std::optional<bool> agreed;
  bool disagree = false;
  for (const auto& m : methods) {
    bool v = false;
    if (normal) {
      auto nm = parse_normal_method(m);
      if (!nm) throw UsageError("unknown method " + m + " for axiom normal");
      v = is_normal(*x, *nm);
    } else {
      auto hm = parse_hereditary_method(m);
      if (!hm) throw UsageError("unknown method " + m + " for axiom hereditarilyNormal");
      v = is_hereditarily_normal(*x, *hm);
    }
    verdicts[m] = v;
    r.text.push_back("  " + m + ": " + yes_no(v));
    if (agreed && *agreed != v) disagree = true;
    agreed = v;
  }
  r.data = {{"methods", verdicts}};
  if (disagree) {
    r.verdict = false;
    r.text.push_back("verdict: methods disagree");
    r.emit(out, c.format);
    return kUsage;
  }
  r.verdict = agreed.value_or(true);
  const std::string label = normal ? "normal" : "hereditarily normal";
  r.text.push_back(std::string("verdict: ") + (r.verdict ? "" : "not ") + label);
  if (!r.verdict) {
    const CMap& right = normal ? catalog().pi_fin : catalog().pi_her;
    const auto lift = decide_lift({empty_map(x), right});
    if (normal) {
      const auto w = separation_witness(*x);
      r.witness = {{"s", names_of(*x, w->s)}, {"t", names_of(*x, w->t)}};
      r.text.push_back("witness: s = " + format_set(*x, w->s) + ", t = " + format_set(*x, w->t));
    } else {
      const auto w = hereditary_witness(*x);
      r.witness = {{"subspace", names_of(*x, w->first)},
                   {"s", names_of(*x, w->second.s)},
                   {"t", names_of(*x, w->second.t)}};
      r.text.push_back("witness: open subspace " + format_set(*x, w->first) + " with s = " +
                       format_set(*x, w->second.s) + ", t = " + format_set(*x, w->second.t));
    }
    if (lift.witness) {
      const std::string chi = dsl::render(lift.witness->phi, dsl::Format::kText);
      r.witness["chi"] = chi;
      r.text.push_back("square without lift: chi = " + chi);
    }
  }
  r.emit(out, c.format);
  return r.verdict ? kOk : kFails;
}

int cmd_lift(const RunConfig& c, std::ostream& out) {
  reject_dot(c);
  const CMap left = load_map(c.left);
  const CMap right = load_map(c.right);
  Report r{"lift"};
  r.inputs = {{"left", c.left}, {"right", c.right}, {"witness", c.witness}, {"stats", c.stats}};
  r.text.push_back("left: " + dsl::render(left, dsl::Format::kText));
  r.text.push_back("right: " + dsl::render(right, dsl::Format::kText));
  const LiftReport report = decide_lift({left, right});
  r.verdict = report.holds;
  r.text.push_back(std::string("verdict: ") + (report.holds ? "holds" : "fails"));
  if (c.witness) {
    if (report.witness) {
      r.witness = {{"psi", dsl::render(report.witness->psi, dsl::Format::kText)},
                   {"phi", dsl::render(report.witness->phi, dsl::Format::kText)}};
      r.text.push_back("witness psi: " + r.witness["psi"].get<std::string>());
      r.text.push_back("witness phi: " + r.witness["phi"].get<std::string>());
    } else if (report.sample_lift) {
      r.data = {{"lift", dsl::render(*report.sample_lift, dsl::Format::kText)}};
      r.text.push_back("lift: " + r.data["lift"].get<std::string>());
    }
  }
  if (c.stats) {
    r.stats = {{"squares", report.stats.squares},
               {"candidates", report.stats.candidates},
               {"elapsed_ms", millis(report.stats.elapsed)}};
    r.text.push_back("stats: squares = " + std::to_string(report.stats.squares) +
                     ", candidates = " + std::to_string(report.stats.candidates) +
                     ", elapsed_ms = " + std::to_string(millis(report.stats.elapsed)));
  }
  r.emit(out, c.format);
  return report.holds ? kOk : kFails;
}

int cmd_urysohn(const RunConfig& c, std::ostream& out) {
  reject_dot(c);
  const SpacePtr x = load_space(c.space);
  const PointSet s = set_from_names(*x, c.s);
  const PointSet t = set_from_names(*x, c.t);
  Report r{"urysohn"};
  r.inputs = {{"space", c.space}, {"s", c.s}, {"t", c.t}};
  r.text.push_back("space: " + dsl::render(*x, dsl::Format::kText));
  r.text.push_back("s = " + format_set(*x, s) + ", t = " + format_set(*x, t));

  ChainOutcome outcome;
  try {
    outcome = urysohn_chain(*x, s, t);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  if (!outcome.ok()) {
    r.verdict = false;
    r.witness = {{"hull_of", names_of(*x, outcome.failure->hull_of)},
                 {"bound", names_of(*x, outcome.failure->bound)}};
    r.text.push_back("verdict: chain fails, component hull of " +
                     format_set(*x, outcome.failure->hull_of) + " leaves " +
                     format_set(*x, outcome.failure->bound));
    r.emit(out, c.format);
    return kFails;
  }
  const auto f = urysohn_function(*x, *outcome.chain);
  const UrysohnResult res = build_lambda(x, s, t, *outcome.chain, f);
  r.verdict = res.checks.all();

  json chain = json::array();
  r.text.push_back("chain:");
  for (const auto& [level, set] : res.chain) {
    chain.push_back({{"level", level.to_string()}, {"set", names_of(*x, set)}});
    r.text.push_back("  U_" + level.to_string() + " = " + format_set(*x, set));
  }
  json f_table = json::object();
  json lambda_table = json::object();
  r.text.push_back("point  f  lambda");
  for (PointId p = 0; p < x->size(); ++p) {
    f_table[x->name(p)] = res.f[p].to_string();
    lambda_table[x->name(p)] = res.lambda[p].to_string();
    r.text.push_back("  " + x->name(p) + "  " + res.f[p].to_string() + "  " +
                     res.lambda[p].to_string());
  }
  const json checks = {{"fContinuous", res.checks.f_continuous},
                       {"lambdaContinuous", res.checks.lambda_continuous},
                       {"piTriangle", res.checks.pi_triangle},
                       {"iotaTriangle", res.checks.iota_triangle}};
  for (const auto& [k, v] : checks.items()) r.text.push_back(k + ": " + yes_no(v.get<bool>()));
  r.text.push_back("chi: " + dsl::render(res.chi, dsl::Format::kText));
  r.data = {{"chain", chain}, {"f", f_table}, {"lambda", lambda_table}, {"checks", checks},
            {"chi", dsl::render(res.chi, dsl::Format::kText)}};
  r.emit(out, c.format);
  return r.verdict ? kOk : kFails;
}

int cmd_interval(const RunConfig& c, std::ostream& out) {
  reject_dot(c);
  Variant v;
  if (c.variant == "corrected") {
    v = Variant::kCorrected;
  } else if (c.variant == "indistinguishable") {
    v = Variant::kIndistinguishable;
  } else {
    throw UsageError("unknown variant " + c.variant);
  }
  Report r{"interval"};
  r.inputs = {{"variant", c.variant}, {"probe", c.probe}};
  std::string answer;
  if (c.probe == "unit-interval-open") {
    r.verdict = is_open_set(IntervalSet::unit_interval(), v);
    answer = r.verdict ? "open" : "not open";
    r.data = {{"set", IntervalSet::unit_interval().to_string()}};
  } else if (c.probe == "pi-continuity" || c.probe == "iota-continuity" ||
             c.probe == "pi-tilde-continuity") {
    const CanonicalMaps maps = canonical_maps(v);
    if (c.probe == "pi-continuity") {
      r.verdict = maps.pi_continuous;
    } else if (c.probe == "iota-continuity") {
      r.verdict = maps.iota_continuous;
    } else {
      if (!maps.pi_tilde_continuous) {
        throw UsageError("pi-tilde is defined for the indistinguishable variant only");
      }
      r.verdict = *maps.pi_tilde_continuous;
    }
    answer = r.verdict ? "continuous" : "discontinuous";
  } else if (c.probe == "fibers") {
    const FiberComparison cmp = fiber_comparison(v);
    r.verdict = cmp.zero_side == FiberRelation::kStrict && cmp.one_side == FiberRelation::kStrict;
    r.data = {{"zeroSide", to_string(cmp.zero_side)}, {"oneSide", to_string(cmp.one_side)}};
    answer = "0 side " + to_string(cmp.zero_side) + ", 1 side " + to_string(cmp.one_side);
  } else {
    throw UsageError("unknown probe " + c.probe);
  }
  r.text.push_back("variant: " + c.variant);
  r.text.push_back("probe: " + c.probe);
  r.text.push_back("verdict: " + answer);
  r.emit(out, c.format);
  return r.verdict ? kOk : kFails;
}

int cmd_enumerate(const RunConfig& c, std::ostream& out) {
  reject_dot(c);
  if (c.points < 0 || static_cast<std::size_t>(c.points) > kMaxEnumerationPoints) {
    throw UsageError("--points must be between 0 and " + std::to_string(kMaxEnumerationPoints));
  }
  const auto n = static_cast<std::size_t>(c.points);
  Report r{"enumerate"};
  r.inputs = {{"points", c.points}, {"dedupe", c.dedupe}, {"crossValidate", c.cross_validate},
              {"jobs", c.jobs}};
  const auto start = std::chrono::steady_clock::now();
  if (c.cross_validate.empty()) {
    const std::size_t labeled = all_spaces(n, false).size();
    r.data = {{"totalLabeled", labeled}};
    r.text.push_back("points: " + std::to_string(n));
    r.text.push_back("labeled: " + std::to_string(labeled));
    if (c.dedupe) {
      const std::size_t unlabeled = all_spaces(n, true).size();
      r.data["totalUnlabeled"] = unlabeled;
      r.text.push_back("unlabeled: " + std::to_string(unlabeled));
    }
  } else {
    if (n > 5) throw UsageError("--cross-validate supports at most 5 points");
    std::vector<Axiom> axioms;
    try {
      for (const auto& a : c.cross_validate) axioms.push_back(parse_axiom(a));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    const CorpusReport report = cross_validate(n, axioms, {c.dedupe, c.jobs});
    r.verdict = report.mismatches.empty();
    json mismatches = json::array();
    for (const auto& m : report.mismatches) {
      mismatches.push_back({{"index", m.index},
                            {"space", dsl::render(m.space, dsl::Format::kText)},
                            {"axiom", to_string(m.axiom)},
                            {"verdicts", m.verdicts}});
    }
    r.data = {{"totalLabeled", report.total_labeled},
              {"perAxiom", report.per_axiom},
              {"mismatches", mismatches}};
    r.text.push_back("points: " + std::to_string(n));
    r.text.push_back("labeled: " + std::to_string(report.total_labeled));
    if (c.dedupe) {
      r.data["totalUnlabeled"] = report.total_unlabeled;
      r.text.push_back("unlabeled: " + std::to_string(report.total_unlabeled));
    }
    for (const auto& [axiom, counts] : report.per_axiom) {
      for (const auto& [method, count] : counts) {
        r.text.push_back(axiom + " " + method + ": " + std::to_string(count));
      }
    }
    r.text.push_back("mismatches: " + std::to_string(report.mismatches.size()));
    for (const auto& m : mismatches) r.text.push_back("  " + m.dump());
  }
  if (c.stats) {
    r.stats = {{"elapsed_ms", millis(std::chrono::steady_clock::now() - start)}};
    r.text.push_back("elapsed_ms: " + r.stats["elapsed_ms"].dump());
  }
  r.emit(out, c.format);
  return r.verdict ? kOk : kFails;
}

int cmd_catalog(const RunConfig& c, std::ostream& out) {
  const TestCatalog& cat = catalog();
  const std::vector<std::pair<std::string, SpacePtr>> spaces = {
      {"tau", cat.tau}, {"tau_dag", cat.tau_dag}, {"B3", cat.b3},
      {"T5", cat.t5},   {"T6", cat.t6},           {"B4", cat.b4}};
  const std::vector<std::pair<std::string, const CMap*>> maps = {
      {"tau_map", &cat.tau_map}, {"pi_fin", &cat.pi_fin}, {"pi_her", &cat.pi_her}};
  if (c.format == OutputFormat::kDot) {
    for (const auto& [name, x] : spaces) out << "// space " << name << "\n" << dsl::render(*x, dsl::Format::kDot);
    for (const auto& [name, f] : maps) out << "// map " << name << "\n" << dsl::render(*f, dsl::Format::kDot);
    return kOk;
  }
  Report r{"catalog"};
  r.data = {{"spaces", json::object()}, {"maps", json::object()}};
  for (const auto& [name, x] : spaces) {
    r.data["spaces"][name] = dsl::to_data(*x);
    r.text.push_back("space " + name + " = " + dsl::render(*x, dsl::Format::kText));
  }
  for (const auto& [name, f] : maps) {
    r.data["maps"][name] = dsl::to_data(*f);
    r.text.push_back("map " + name + " = " + dsl::render(*f, dsl::Format::kText));
  }
  r.emit(out, c.format);
  return kOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "parse") return cmd_parse(config, out);
    if (config.command == "check") return cmd_check(config, out);
    if (config.command == "lift") return cmd_lift(config, out);
    if (config.command == "urysohn") return cmd_urysohn(config, out);
    if (config.command == "interval") return cmd_interval(config, out);
    if (config.command == "enumerate") return cmd_enumerate(config, out);
    if (config.command == "catalog") return cmd_catalog(config, out);
    err << "error: unknown command " << config.command << "\n";
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite topological spaces, lifting properties and separation axioms", "liftprop"};
  app.require_subcommand(1);
  RunConfig c;
  const std::map<std::string, OutputFormat> formats = {
      {"text", OutputFormat::kText}, {"json", OutputFormat::kJson}, {"dot", OutputFormat::kDot}};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format,--emit", c.format, "Output format: text, json or dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* parse = app.add_subcommand("parse", "Parse a .topo file and print it back");
  parse->add_option("--input", c.input, "Input file")->required();
  add_format(parse);

  auto* check = app.add_subcommand("check", "Decide a separation axiom for a space");
  check->add_option("--space", c.space, "File with a space statement")->required();
  check->add_option("--axiom", c.axiom, "normal or hereditarilyNormal")->required();
  check->add_option("--method", c.method, "A method name, both, or all");
  add_format(check);

  auto* lift = app.add_subcommand("lift", "Decide the lifting property left ⧄ right");
  lift->add_option("--left", c.left, "File with a map statement, or empty:F for the map from the empty space")
      ->required();
  lift->add_option("--right", c.right, "File with a map statement")->required();
  lift->add_flag("--witness", c.witness, "Print a square without lift, or a sample lift");
  lift->add_flag("--stats", c.stats, "Print search statistics");
  add_format(lift);

  auto* ury = app.add_subcommand("urysohn", "Build a Urysohn function and its interval lift");
  ury->add_option("--space", c.space, "File with a space statement")->required();
  ury->add_option("--s", c.s, "Points of the first closed set")->delimiter(',');
  ury->add_option("--t", c.t, "Points of the second closed set")->delimiter(',');
  add_format(ury);

  auto* interval = app.add_subcommand("interval", "Probe the doubled-endpoint interval");
  interval->add_option("--variant", c.variant, "corrected or indistinguishable")->required();
  interval->add_option("--probe", c.probe,
                       "unit-interval-open, pi-continuity, iota-continuity, "
                       "pi-tilde-continuity or fibers")
      ->required();
  add_format(interval);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate finite topologies");
  enumerate->add_option("--points", c.points, "Number of points")->required();
  enumerate->add_flag("--dedupe", c.dedupe, "Keep one space per homeomorphism class");
  enumerate->add_option("--cross-validate", c.cross_validate, "normal,hereditarilyNormal")
      ->delimiter(',');
  enumerate->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--stats", c.stats, "Print elapsed time");
  add_format(enumerate);

  auto* cat = app.add_subcommand("catalog", "Print the built-in spaces and maps");
  add_format(cat);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  return run(c, out, err);
}

}  // namespace liftprop::cli
