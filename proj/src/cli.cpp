#include "argstr/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "argstr/dsl.hpp"
#include "argstr/io.hpp"
#include "argstr/principles.hpp"
#include "argstr/semantics.hpp"
#include "argstr/strength.hpp"

namespace argstr {

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kDomain = 1, kInput = 2 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string hex64(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Report envelope shared by every --json output.
json envelope(const std::string& command, const std::string& digest_input, std::optional<std::uint64_t> seed,
              json results) {
  json j{{"command", command},
         {"engine_version", kEngineVersion},
         {"inputs_digest", hex64(fnv1a(digest_input))},
         {"results", std::move(results)}};
  j["seed"] = seed ? json(*seed) : json(nullptr);
  return j;
}

std::string fixed6(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

WeightedTheory load_theory(const std::string& path, const std::string& text, std::ostream& err) {
  auto parsed = parse_theory(text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) err << path << ":" << d.str() << "\n";
    throw InputError("");
  }
  return to_theory(*parsed.document);
}

void require_valid(const WeightedTheory& t, const std::string& path, std::ostream& err) {
  auto report = validate_theory(t);
  if (report.ok()) return;
  for (const auto& i : report.issues) err << path << ": " << to_string(i.code) << ": " << i.message << "\n";
  throw InputError("");
}

StrengthMethod load_method(const std::string& name) {
  auto m = find_method(name);
  if (!m) {
    std::string known;
    for (const auto& n : registered_method_names()) known += " " + n;
    throw InputError("unknown method '" + name + "' (known:" + known + ", or <f>:<g>)");
  }
  return *m;
}

std::string basis_text(const BasisMultiset& b) {
  std::string s = "[";
  bool first = true;
  for (const auto& [el, k] : b.entries()) {
    if (!first) s += ", ";
    s += el.name;
    if (k > 1) s += "^" + std::to_string(k);
    first = false;
  }
  return s + "]";
}

std::string dot_escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '"' || c == '\\') o += '\\';
    o += c;
  }
  return o;
}

// Draws one inference tree; returns the node name of its root.
std::string dot_tree(const Argument& a, const std::string& prefix, std::size_t& counter, std::ostream& os) {
  const std::string name = prefix + "_" + std::to_string(counter++);
  if (a.is_premise()) {
    os << "    " << name << " [label=\"" << dot_escape(a.conclusion().str()) << "\\n" << format_weight(a.weight())
       << "\", shape=" << (a.is_axiom_premise() ? "box, peripheries=2" : "box") << "];\n";
    return name;
  }
  const InferenceRule& r = *a.top_rule();
  os << "    " << name << " [label=\"" << dot_escape(a.conclusion().str()) << "\", shape=ellipse];\n";
  for (const auto& x : a.antecedents()) {
    auto child = dot_tree(x, prefix, counter, os);
    os << "    " << child << " -> " << name << " [label=\"" << dot_escape(r.id) << " " << format_weight(a.weight())
       << "\"" << (r.is_strict() ? "" : ", style=dashed") << "];\n";
  }
  if (a.antecedents().empty())
    os << "    " << name << " [xlabel=\"" << dot_escape(r.id) << " " << format_weight(a.weight()) << "\"];\n";
  return name;
}

int cmd_check(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  const auto text = read_file(path);
  auto parsed = parse_theory(text);
  if (!parsed.ok()) {
    for (const auto& d : parsed.diagnostics) err << path << ":" << d.str() << "\n";
    return kInput;
  }
  const auto t = to_theory(*parsed.document);
  const auto report = validate_theory(t);
  if (as_json) {
    json issues = json::array();
    for (const auto& i : report.issues) issues.push_back({{"code", to_string(i.code)}, {"message", i.message}});
    out << envelope("check", text, std::nullopt,
                    {{"valid", report.ok()},
                     {"statements", parsed.document->statements.size()},
                     {"issues", issues}})
               .dump(2)
        << "\n";
  } else {
    for (const auto& i : report.issues) err << path << ": " << to_string(i.code) << ": " << i.message << "\n";
    if (report.ok())
      out << path << ": ok (" << t.rules.size() << " rules, " << t.kb.axioms.size() << " axioms, "
          << t.kb.ordinary.size() << " ordinary premises)\n";
  }
  return report.ok() ? kOk : kDomain;
}

struct EnumerateOptions {
  std::string path;
  std::size_t budget = 8;
  std::string method = "sp";
  bool json = false;
  bool dot = false;
  bool wag = false;
  std::string attacks;
};

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err) {
  const auto text = read_file(o.path);
  const auto t = load_theory(o.path, text, err);
  require_valid(t, o.path, err);
  const auto m = load_method(o.method);

  if (o.wag) {
    std::vector<ArgumentAttack> atts;
    if (!o.attacks.empty()) atts = parse_attacks_json(read_file(o.attacks));
    out << wag_to_json(seed_graph_from_theory(t, atts, m, o.budget)).dump(2) << "\n";
    return kOk;
  }

  const auto args = enumerate_arguments(t, o.budget);
  const auto labels = label_arguments(args);

  if (o.dot) {
    out << "digraph arguments {\n  rankdir=BT;\n  node [fontname=\"Helvetica\"];\n";
    for (std::size_t i = 0; i < args.size(); ++i) {
      out << "  subgraph cluster_" << labels[i].alias << " {\n    label=\"" << labels[i].alias << "  "
          << method_name(m) << " " << format_weight(evaluate(m, args[i])) << "\";\n";
      std::size_t counter = 0;
      dot_tree(args[i], labels[i].alias, counter, out);
      out << "  }\n";
    }
    out << "}\n";
    return kOk;
  }

  if (o.json) {
    json list = json::array();
    for (std::size_t i = 0; i < args.size(); ++i) {
      const auto& a = args[i];
      list.push_back({{"alias", labels[i].alias},
                      {"id", labels[i].id},
                      {"expression", a.key()},
                      {"conclusion", a.conclusion().str()},
                      {"strict", a.is_strict()},
                      {"basis", basis_text(a.basis())},
                      {"strength", evaluate(m, a)}});
    }
    out << envelope("enumerate", text + "\n" + std::to_string(o.budget) + "\n" + o.method, std::nullopt,
                    {{"method", method_name(m)}, {"budget", o.budget}, {"arguments", list}})
               .dump(2)
        << "\n";
    return kOk;
  }

  out << std::left << std::setw(6) << "alias" << std::setw(14) << "id" << std::setw(12) << "strength"
      << "argument\n";
  for (std::size_t i = 0; i < args.size(); ++i) {
    out << std::setw(6) << labels[i].alias << std::setw(14) << labels[i].id << std::setw(12)
        << fixed6(evaluate(m, args[i])) << args[i].key() << "  basis " << basis_text(args[i].basis()) << "\n";
  }
  out << args.size() << " arguments (budget " << o.budget << ", method " << method_name(m) << ")\n";
  return kOk;
}

int cmd_eval(const std::string& path, const std::vector<std::string>& exprs, const std::string& method, bool as_json,
             std::ostream& out, std::ostream& err) {
  const auto text = read_file(path);
  const auto t = load_theory(path, text, err);
  require_valid(t, path, err);
  const auto m = load_method(method);
  json list = json::array();
  for (const auto& e : exprs) {
    Argument a = [&] {
      try {
        return parse_argument(t, e);
      } catch (const std::exception& ex) {
        throw InputError("'" + e + "': " + ex.what());
      }
    }();
    const double s = evaluate(m, a);
    if (as_json) list.push_back({{"expression", a.key()}, {"conclusion", a.conclusion().str()}, {"strength", s}});
    else out << a.key() << "\t" << fixed6(s) << "\n";
  }
  if (as_json) {
    std::string digest = text + "\n" + method;
    for (const auto& e : exprs) digest += "\n" + e;
    out << envelope("eval", digest, std::nullopt, {{"method", method_name(m)}, {"arguments", list}}).dump(2) << "\n";
  }
  return kOk;
}

int cmd_degrees(const std::string& path, const std::string& semantics, const IterationOptions& it, bool as_json,
                std::ostream& out, std::ostream& err) {
  const auto text = read_file(path);
  const auto g = parse_wag_json(text);
  const std::string digest = text + "\n" + semantics;

  if (semantics == "grounded") {
    const auto ext = grounded_extension(g);
    json in = json::array(), rest = json::array();
    for (const auto& n : g.nodes()) (ext.contains(n.id) ? in : rest).push_back(n.id);
    if (as_json) {
      out << envelope("grounded", digest, std::nullopt, {{"in", in}, {"out", rest}}).dump(2) << "\n";
    } else {
      for (const auto& n : g.nodes()) out << n.id << "\t" << (ext.contains(n.id) ? "in" : "out") << "\n";
    }
    return kOk;
  }
  if (semantics != "hcat") throw InputError("unknown semantics '" + semantics + "' (hcat or grounded)");

  DegreeAssignment d;
  try {
    d = h_categorizer_degrees(g, it);
  } catch (const NoConvergence& e) {
    err << path << ": " << e.what() << "\n";
    return kDomain;
  } catch (const NonUnitAttackWeight& e) {
    throw InputError(path + ": " + e.what());
  }
  if (as_json) {
    json deg = json::object();
    for (const auto& n : g.nodes()) deg[n.id] = d.degrees.at(n.id);
    out << envelope("degrees", digest, std::nullopt,
                    {{"semantics", "hcat"}, {"degrees", deg}, {"iterations", d.iterations}, {"residual", d.residual}})
               .dump(2)
        << "\n";
  } else {
    for (const auto& n : g.nodes()) out << n.id << "\t" << fixed6(d.degrees.at(n.id)) << "\n";
    out << "converged in " << d.iterations << " iterations (residual " << d.residual << ")\n";
  }
  return kOk;
}

struct PrinciplesOptions {
  std::string method = "sp";
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::size_t budget = 4;
  std::string principle;
  bool expect_paper = false;
  bool json = false;
};

int cmd_principles(const PrinciplesOptions& o, std::ostream& out, std::ostream& err) {
  const auto m = load_method(o.method);
  std::vector<PrincipleId> ps;
  if (o.principle.empty()) {
    ps.assign(all_principles().begin(), all_principles().end());
  } else {
    auto p = principle_from_string(o.principle);
    if (!p) throw InputError("unknown principle '" + o.principle + "'");
    ps.push_back(*p);
  }
  if (o.trials == 0) throw InputError("--trials must be at least 1");

  ProbeConfig cfg;
  cfg.generator.seed = o.seed;
  cfg.trials = o.trials;
  cfg.budget = o.budget;
  const auto verdicts = probe_principles(ps, m, cfg);

  bool agree = true;
  for (const auto& v : verdicts) agree = agree && v.agrees_with_table();

  if (o.json) {
    json list = json::array();
    for (const auto& v : verdicts) list.push_back(to_json(v));
    json results{{"method", method_name(m)}, {"budget", o.budget}, {"verdicts", list}};
    if (o.expect_paper) results["agrees_with_table"] = agree;
    const std::string digest = o.method + "\n" + std::to_string(o.trials) + "\n" + std::to_string(o.budget) + "\n" +
                               o.principle;
    out << envelope("principles", digest, o.seed, results).dump(2) << "\n";
  } else {
    out << std::left << std::setw(30) << "principle" << std::setw(25) << "verdict" << std::setw(16) << "expected"
        << std::setw(11) << "instances"
        << "falsified\n";
    for (const auto& v : verdicts) {
      out << std::setw(30) << to_string(v.principle) << std::setw(25) << to_string(v.kind) << std::setw(16)
          << (v.expected ? std::string(to_string(v.expected->status)) : std::string("-")) << std::setw(11)
          << v.instances << v.falsifications << (v.discrepancy() ? "  DISCREPANCY" : "") << "\n";
      if (v.witness) out << "    witness (" << v.witness->source << "): " << v.witness->detail << "\n";
    }
  }
  if (o.expect_paper && !agree) {
    for (const auto& v : verdicts)
      if (!v.agrees_with_table())
        err << "contradiction: " << to_string(v.principle) << " is " << to_string(v.kind) << " but expected "
            << to_string(v.expected->status) << "\n";
    return kDomain;
  }
  return kOk;
}

int cmd_wellbehaved(const std::string& method, bool as_json, std::ostream& out) {
  const auto m = load_method(method);
  const auto* am = std::get_if<AggregationMethod>(&m);
  if (!am) throw InputError("'" + method + "' is not an aggregation method; try prod-prod or min-min");
  const auto v = check_well_behaved(*am);
  if (as_json) {
    auto results = to_json(v);
    results["method"] = am->name;
    out << envelope("wellbehaved", method, std::nullopt, results).dump(2) << "\n";
    return kOk;
  }
  out << am->name << ": " << to_string(v.overall) << "\n";
  for (const auto& c : v.clauses) {
    out << "  clause " << c.clause << ": " << to_string(c.status);
    if (c.status != ClauseStatus::Certified) out << " (" << c.samples << " samples)";
    if (!c.witness.empty()) out << "  " << c.witness;
    out << "\n";
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structured argumentation with weighted rules and premises"};
  app.name("argstr");
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "Validate a theory file");
  check->add_option("file", file, "Theory file")->required();
  check->add_flag("--json", as_json, "Machine-readable report");

  EnumerateOptions eo;
  auto* enumerate = app.add_subcommand("enumerate", "List arguments with their strengths");
  enumerate->add_option("file", eo.path, "Theory file")->required();
  enumerate->add_option("--budget", eo.budget, "Maximum rule applications per argument")->capture_default_str();
  enumerate->add_option("--method", eo.method, "Strength method")->capture_default_str();
  auto* ej = enumerate->add_flag("--json", eo.json, "Machine-readable report");
  auto* ed = enumerate->add_flag("--dot", eo.dot, "Graphviz drawing of every inference tree");
  auto* ew = enumerate->add_flag("--wag", eo.wag, "Emit a weighted argumentation graph seeded with the strengths");
  enumerate->add_option("--attacks", eo.attacks, "JSON attack list for --wag")->needs(ew);
  ej->excludes(ed)->excludes(ew);
  ed->excludes(ew);

  std::string method = "sp";
  std::vector<std::string> exprs;
  auto* eval = app.add_subcommand("eval", "Strength of argument expressions such as s1[d1[a1],p1]");
  eval->add_option("file", file, "Theory file")->required();
  eval->add_option("expressions", exprs, "Argument expressions")->required();
  eval->add_option("--method", method, "Strength method")->capture_default_str();
  eval->add_flag("--json", as_json, "Machine-readable report");

  std::string semantics = "hcat";
  IterationOptions it;
  auto* degrees = app.add_subcommand("degrees", "Acceptability degrees of a weighted argumentation graph");
  degrees->add_option("file", file, "WAG JSON file")->required();
  degrees->add_option("--semantics", semantics, "hcat or grounded")->capture_default_str();
  degrees->add_option("--eps", it.eps, "Convergence tolerance")->capture_default_str();
  degrees->add_option("--max-iter", it.max_iter, "Iteration limit")->capture_default_str();
  degrees->add_flag("--json", as_json, "Machine-readable report");

  auto* grounded = app.add_subcommand("grounded", "Grounded extension of a weighted argumentation graph");
  grounded->add_option("file", file, "WAG JSON file")->required();
  grounded->add_flag("--json", as_json, "Machine-readable report");

  PrinciplesOptions po;
  auto* principles = app.add_subcommand("principles", "Search for principle violations under a method");
  principles->add_option("--method", po.method, "Strength method")->capture_default_str();
  principles->add_option("--trials", po.trials, "Random theories to draw")->capture_default_str();
  principles->add_option("--seed", po.seed, "Seed (ARGSTR_SEED overrides)")->capture_default_str();
  principles->add_option("--budget", po.budget, "Rule applications per enumerated argument")->capture_default_str();
  principles->add_option("--principle", po.principle, "Only this principle (kebab-case name)");
  principles->add_flag("--expect-paper", po.expect_paper, "Fail on any disagreement with the known results");
  principles->add_flag("--json", po.json, "Machine-readable report");

  auto* wellbehaved = app.add_subcommand("wellbehaved", "Check the well-behavedness clauses of an aggregation method");
  wellbehaved->add_option("--method", method, "Aggregation method")->capture_default_str();
  wellbehaved->add_flag("--json", as_json, "Machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*check) return cmd_check(file, as_json, out, err);
    if (*enumerate) return cmd_enumerate(eo, out, err);
    if (*eval) return cmd_eval(file, exprs, method, as_json, out, err);
    if (*degrees) return cmd_degrees(file, semantics, it, as_json, out, err);
    if (*grounded) return cmd_degrees(file, "grounded", it, as_json, out, err);
    if (*principles) {
      if (const char* env = std::getenv("ARGSTR_SEED")) {
        try {
          po.seed = std::stoull(env);
        } catch (const std::exception&) {
          throw InputError(std::string("ARGSTR_SEED is not an unsigned integer: ") + env);
        }
      }
      return cmd_principles(po, out, err);
    }
    if (*wellbehaved) return cmd_wellbehaved(method, as_json, out);
  } catch (const InputError& e) {
    if (*e.what()) err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}

}  // namespace argstr
