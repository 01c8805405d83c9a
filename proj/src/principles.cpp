#include "argstr/principles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "argstr/dsl.hpp"

namespace argstr {

namespace {

constexpr std::array<std::string_view, kPrincipleCount> kNames{
    "anonymity",
    "premising",
    "strict-argument",
    "resilience",
    "argument-death",
    "antecedent-maximality",
    "antecedent-neutrality",
    "antecedent-weakening",
    "inferential-weakening",
    "inference-weight-sensitivity",
    "proportionality",
    "weakest-link",
    "weakest-link-limiting",
};

std::size_t index_of(PrincipleId p) { return static_cast<std::size_t>(p); }

std::string num(double x) { return format_weight(x); }

double min_basis_weight(const Argument& a) {
  return a.basis().fold(1.0, [](double acc, const BasisElement& b) { return std::min(acc, b.weight); });
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

std::vector<std::string> ant_keys(const Argument& a) {
  std::vector<std::string> keys;
  for (const auto& x : a.antecedents()) keys.push_back(x.key());
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Is there an injective map from `from` into `to` sending each value to one
// that is lower by more than the guard margin? Eligible targets of a larger
// source include those of a smaller one, so matching sources in ascending
// order to the smallest free eligible target is optimal.
bool lower_injection_exists(std::vector<double> from, std::vector<double> to) {
  std::sort(from.begin(), from.end());
  std::sort(to.begin(), to.end());
  std::size_t j = 0;
  for (double x : from) {
    if (j >= to.size() || !(to[j] < x - kGuardMargin)) return false;
    ++j;
  }
  return true;
}

std::vector<double> strengths_of(std::span<const Argument> as, const std::unordered_map<std::string, double>& by_key) {
  std::vector<double> out;
  for (const auto& a : as) out.push_back(by_key.at(a.key()));
  return out;
}

// Evaluates an instance given the strength of every argument and subargument
// it mentions (keyed by structural key).
PrincipleCheck evaluate_core(PrincipleId p, std::span<const Argument> args,
                             const std::unordered_map<std::string, double>& str) {
  PrincipleCheck r;
  r.strengths = strengths_of(args, str);
  const Argument& A = args[0];
  const double sA = r.strengths[0];
  auto fail = [&](std::string why) {
    r.holds = false;
    r.detail = std::move(why);
  };

  switch (p) {
    case PrincipleId::Anonymity: {
      r.applicable = is_isomorphic(A, args[1]);
      if (r.applicable && !near(sA, r.strengths[1], kEqualityTolerance))
        fail("isomorphic arguments with strengths " + num(sA) + " and " + num(r.strengths[1]));
      break;
    }
    case PrincipleId::Premising: {
      r.applicable = A.is_premise();
      if (r.applicable && !near(sA, A.weight(), kEqualityTolerance))
        fail("premise weight " + num(A.weight()) + " but strength " + num(sA));
      break;
    }
    case PrincipleId::StrictArgument: {
      r.applicable = A.def_basis().empty();
      if (r.applicable && !near(sA, 1.0, kEqualityTolerance)) fail("strict argument with strength " + num(sA));
      break;
    }
    case PrincipleId::Resilience: {
      const double m = min_basis_weight(A);
      r.applicable = m > kGuardMargin;
      if (r.applicable && !(sA > 0.0))
        fail("every basis weight is positive (min " + num(m) + ") but strength is " + num(sA));
      break;
    }
    case PrincipleId::ArgumentDeath: {
      r.applicable = min_basis_weight(A) == 0.0;
      if (r.applicable && !near(sA, 0.0, kEqualityTolerance)) fail("basis contains weight 0 but strength is " + num(sA));
      break;
    }
    case PrincipleId::AntecedentMaximality: {
      r.applicable = !A.is_premise() && std::all_of(A.antecedents().begin(), A.antecedents().end(), [&](const Argument& x) {
        return near(str.at(x.key()), 1.0, kGuardMargin);
      });
      if (r.applicable && !near(sA, A.weight(), kEqualityTolerance))
        fail("all antecedents have strength 1, top rule weight " + num(A.weight()) + ", strength " + num(sA));
      break;
    }
    case PrincipleId::AntecedentNeutrality:
    case PrincipleId::AntecedentWeakening: {
      const Argument& A1 = args[1];
      const Argument& A2 = args[2];
      const double sA1 = r.strengths[1], sA2 = r.strengths[2];
      bool shape = !A.is_premise() && !A1.is_premise() && A.weight() == A1.weight();
      if (shape) {
        auto keys = ant_keys(A);
        shape = !std::binary_search(keys.begin(), keys.end(), A2.key());
        keys.push_back(A2.key());
        std::sort(keys.begin(), keys.end());
        shape = shape && keys == ant_keys(A1);
      }
      if (p == PrincipleId::AntecedentNeutrality) {
        r.applicable = shape && near(sA2, 1.0, kGuardMargin);
        if (r.applicable && !near(sA, sA1, kEqualityTolerance))
          fail("adding an antecedent of strength 1 changed the strength from " + num(sA) + " to " + num(sA1));
      } else {
        r.applicable = shape && sA2 < 1.0 - kGuardMargin && sA > kGuardMargin;
        if (r.applicable && !(sA > sA1))
          fail("top rule weight " + num(A.weight()) + ": adding an antecedent of strength " + num(sA2) +
               " left the strength at " + num(sA1) + " (was " + num(sA) + ")");
      }
      break;
    }
    case PrincipleId::InferentialWeakening: {
      const InferenceRule* top = A.top_rule();
      double lowest = 1.0;  // min over no antecedents
      bool positive = true;
      for (const auto& x : A.antecedents()) {
        const double v = str.at(x.key());
        lowest = std::min(lowest, v);
        positive = positive && v > kGuardMargin;
      }
      r.applicable = top && !top->is_strict() && positive;
      if (r.applicable && !(sA < lowest))
        fail("defeasible top rule weight " + num(A.weight()) + ", weakest antecedent " + num(lowest) + ", strength " +
             num(sA));
      break;
    }
    case PrincipleId::InferenceWeightSensitivity: {
      const Argument& A1 = args[1];
      const double sA1 = r.strengths[1];
      r.applicable = !A.is_premise() && !A1.is_premise() && ant_keys(A) == ant_keys(A1) &&
                     A.weight() < A1.weight() - kGuardMargin &&
                     std::all_of(A.antecedents().begin(), A.antecedents().end(),
                                 [&](const Argument& x) { return str.at(x.key()) > kGuardMargin; });
      if (r.applicable && !(sA < sA1))
        fail("top rule weights " + num(A.weight()) + " < " + num(A1.weight()) + " but strengths " + num(sA) +
             " and " + num(sA1));
      break;
    }
    case PrincipleId::Proportionality: {
      const Argument& A1 = args[1];
      const double sA1 = r.strengths[1];
      r.applicable = !A.is_premise() && !A1.is_premise() && A.weight() == A1.weight() && A.weight() > 0.0 &&
                     !A.antecedents().empty() &&
                     lower_injection_exists(strengths_of(A.antecedents(), str), strengths_of(A1.antecedents(), str));
      if (r.applicable && !(sA > sA1))
        fail("top rule weight " + num(A.weight()) + " on both; stronger antecedents give " + num(sA) +
             ", weaker give " + num(sA1));
      break;
    }
    case PrincipleId::WeakestLink: {
      r.applicable = true;
      const double m = min_basis_weight(A);
      if (!near(sA, m, kEqualityTolerance)) fail("weakest basis weight " + num(m) + " but strength " + num(sA));
      break;
    }
    case PrincipleId::WeakestLinkLimiting: {
      r.applicable = true;
      const double m = min_basis_weight(A);
      if (!(sA <= m + kEqualityTolerance)) fail("strength " + num(sA) + " exceeds weakest basis weight " + num(m));
      break;
    }
  }
  return r;
}

void collect_strengths(const StrengthMethod& m, const Argument& a, std::unordered_map<std::string, double>& out) {
  if (out.contains(a.key())) return;
  out.emplace(a.key(), evaluate(m, a));
  for (const auto& x : a.antecedents()) collect_strengths(m, x, out);
}

}  // namespace

const std::array<PrincipleId, kPrincipleCount>& all_principles() {
  static const std::array<PrincipleId, kPrincipleCount> kAll = [] {
    std::array<PrincipleId, kPrincipleCount> a{};
    for (std::size_t i = 0; i < kPrincipleCount; ++i) a[i] = static_cast<PrincipleId>(i);
    return a;
  }();
  return kAll;
}

std::string_view to_string(PrincipleId p) { return kNames[index_of(p)]; }

std::optional<PrincipleId> principle_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kPrincipleCount; ++i)
    if (kNames[i] == name) return static_cast<PrincipleId>(i);
  return std::nullopt;
}

std::size_t instance_arity(PrincipleId p) {
  switch (p) {
    case PrincipleId::Anonymity:
    case PrincipleId::InferenceWeightSensitivity:
    case PrincipleId::Proportionality: return 2;
    case PrincipleId::AntecedentNeutrality:
    case PrincipleId::AntecedentWeakening: return 3;
    default: return 1;
  }
}

PrincipleCheck evaluate_principle(PrincipleId p, const StrengthMethod& m, std::span<const Argument> args) {
  if (args.size() != instance_arity(p))
    throw InstanceShapeError(std::string(to_string(p)) + " takes " + std::to_string(instance_arity(p)) +
                             " argument(s), got " + std::to_string(args.size()));
  std::unordered_map<std::string, double> str;
  for (const auto& a : args) collect_strengths(m, a, str);
  return evaluate_core(p, args, str);
}

bool check_principle(PrincipleId p, const StrengthMethod& m, std::span<const Argument> args) {
  return evaluate_principle(p, m, args).holds;
}

// ---- table ----

std::string_view to_string(TableStatus s) {
  switch (s) {
    case TableStatus::Satisfied: return "satisfied";
    case TableStatus::NotSatisfied: return "not-satisfied";
    case TableStatus::Guaranteed: return "guaranteed";
    case TableStatus::NotGuaranteed: return "not-guaranteed";
  }
  return "unknown";
}

std::string_view table_row(const StrengthMethod& m) {
  if (std::holds_alternative<DirectSP>(m)) return "sp";
  if (std::holds_alternative<DirectWL>(m)) return "wl";
  return std::get<AggregationMethod>(m).certified_well_behaved() ? "well-behaved" : "aggregation";
}

std::optional<TableEntry> theorem_table(std::string_view row, PrincipleId p) {
  using P = PrincipleId;
  if (row == "sp") {
    if (p == P::WeakestLink) return TableEntry{TableStatus::NotSatisfied, "sp-principles"};
    return TableEntry{TableStatus::Satisfied, "sp-principles"};
  }
  if (row == "wl") {
    switch (p) {
      case P::AntecedentWeakening:
      case P::InferentialWeakening:
      case P::InferenceWeightSensitivity:
      case P::Proportionality: return TableEntry{TableStatus::NotSatisfied, "wl-principles"};
      default: return TableEntry{TableStatus::Satisfied, "wl-principles"};
    }
  }
  if (row == "well-behaved") {
    switch (p) {
      case P::Anonymity: return TableEntry{TableStatus::Satisfied, "aggregation-anonymity"};
      case P::Premising:
      case P::StrictArgument:
      case P::ArgumentDeath:
      case P::AntecedentMaximality:
      case P::AntecedentNeutrality:
      case P::WeakestLinkLimiting: return TableEntry{TableStatus::Guaranteed, "well-behaved-guarantees"};
      default: return TableEntry{TableStatus::NotGuaranteed, "well-behaved-guarantees"};
    }
  }
  if (row == "aggregation" && p == P::Anonymity) return TableEntry{TableStatus::Satisfied, "aggregation-anonymity"};
  return std::nullopt;
}

// ---- witnesses ----

namespace {

void restrict_into(const Argument& a, WeightedTheory& out) {
  if (a.is_premise()) {
    if (a.is_axiom_premise()) {
      out.kb.axioms.insert(a.conclusion());
      out.premise_weights[a.conclusion()] = 1.0;
    } else {
      out.kb.ordinary.insert(a.conclusion());
      out.premise_weights[a.conclusion()] = a.weight();
    }
    return;
  }
  const InferenceRule& r = *a.top_rule();
  if (!out.find_rule(r.id)) out.add_rule(r, a.weight());
  for (const auto& x : a.antecedents()) restrict_into(x, out);
}

}  // namespace

Witness make_witness(PrincipleId p, const StrengthMethod& m, std::span<const Argument> args,
                     const PrincipleCheck& check, std::string source) {
  WeightedTheory t;
  for (const auto& a : args) restrict_into(a, t);
  Witness w;
  w.principle = p;
  w.method = method_name(m);
  w.theory = print_theory(from_theory(t));
  for (const auto& a : args) w.arguments.push_back(a.key());
  w.strengths = check.strengths;
  w.detail = check.detail;
  w.source = std::move(source);
  return w;
}

bool replay_witness(const Witness& w, const StrengthMethod& m) {
  auto parsed = parse_theory(w.theory);
  if (!parsed.ok()) throw std::invalid_argument("witness theory: " + parsed.diagnostics.front().str());
  const auto t = to_theory(*parsed.document);
  std::vector<Argument> args;
  for (const auto& e : w.arguments) args.push_back(parse_argument(t, e));
  return check_principle(w.principle, m, args);
}

const std::vector<Counterexample>& registered_counterexamples() {
  static const std::vector<Counterexample> kList{
      {PrincipleId::WeakestLink,
       "premise 1/2 under a defeasible rule 1/4: product 1/8, weakest link 1/4",
       "prem p1: p w=0.5\ndefeas d1: p => q w=0.25\n",
       {"d1[p]"}},
      {PrincipleId::AntecedentWeakening,
       "top rule 0.2 over a strength-1 antecedent; adding an antecedent of strength 0.8",
       "axiom a1: x\nprem p1: y w=0.8\ndefeas d1: x => c w=0.2\ndefeas d2: x, y => c2 w=0.2\n",
       {"d1[x]", "d2[x,y]", "y"}},
      {PrincipleId::InferentialWeakening,
       "top rule 0.8 over a single antecedent of strength 0.2",
       "prem p1: y w=0.2\ndefeas d1: y => c w=0.8\n",
       {"d1[y]"}},
      {PrincipleId::InferenceWeightSensitivity,
       "single antecedent of strength 0.2 under top rules 0.5 and 0.8",
       "prem p1: y w=0.2\ndefeas d1: y => c w=0.5\ndefeas d2: y => c2 w=0.8\n",
       {"d1[y]", "d2[y]"}},
      {PrincipleId::Proportionality,
       "top rules 0.2; antecedent 0.8 against antecedent 0.5",
       "prem p1: y w=0.8\nprem p2: z w=0.5\ndefeas d1: y => c w=0.2\ndefeas d2: z => c2 w=0.2\n",
       {"d1[y]", "d2[z]"}},
      {PrincipleId::Resilience,
       "rule 1/2 over a single antecedent of strength 1/2",
       "prem p1: y w=0.5\ndefeas d1: y => c w=0.5\n",
       {"d1[y]"}},
  };
  return kList;
}

// ---- search ----

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Falsified: return "falsified";
    case VerdictKind::NoCounterexampleFound: return "no-counterexample-found";
    case VerdictKind::KnownByTheorem: return "known-by-theorem";
  }
  return "unknown";
}

bool PrincipleVerdict::discrepancy() const {
  return expected &&
         (expected->status == TableStatus::Satisfied || expected->status == TableStatus::Guaranteed) &&
         falsifications > 0;
}

bool PrincipleVerdict::agrees_with_table() const {
  if (discrepancy()) return false;
  if (expected && expected->status == TableStatus::NotSatisfied) return kind == VerdictKind::Falsified;
  return true;
}

namespace {

// State for one generated theory: the theory, its arguments, and strengths of
// everything evaluated so far under the probed method.
struct Trial {
  WeightedTheory theory;
  std::vector<Argument> args;
  std::unordered_map<std::string, double> str;
  const StrengthMethod* method;
  std::size_t fresh = 0;

  double strength(const Argument& a) {
    if (auto it = str.find(a.key()); it != str.end()) return it->second;
    for (const auto& x : a.antecedents()) strength(x);
    const double v = evaluate(*method, a);
    str.emplace(a.key(), v);
    return v;
  }

  std::string fresh_name(const char* prefix) { return prefix + std::to_string(++fresh); }

  template <typename Pred>
  std::optional<Argument> pick(Rng& rng, Pred pred) {
    std::vector<const Argument*> pool;
    for (const auto& a : args)
      if (pred(a)) pool.push_back(&a);
    if (pool.empty()) return std::nullopt;
    return *pool[rng.below(pool.size())];
  }

  // A rule over `ants` with a fresh consequent, so it cannot interact with the
  // theory's strict closure.
  std::optional<Argument> synthesize(RuleKind kind, double weight, const std::vector<Argument>& ants) {
    InferenceRule r;
    r.id = fresh_name("x");
    r.kind = kind;
    r.consequent = Literal(fresh_name("f"));
    for (const auto& a : ants) r.antecedents.insert(a.conclusion());
    if (r.antecedents.size() != ants.size()) return std::nullopt;
    WeightedTheory ext = theory;
    ext.add_rule(r, kind == RuleKind::Strict ? 1.0 : weight);
    auto res = try_make_inference(ext, r, ants);
    return res.argument;
  }

  std::optional<Argument> clone_renamed(const Argument& a, Rng& rng) {
    std::set<std::string> atoms;
    for (const auto& s : a.sub()) atoms.insert(s.conclusion().atom);
    std::map<std::string, std::string> rename;
    std::set<std::uint64_t> used;
    const auto tag = fresh_name("");
    for (const auto& atom : atoms) {
      std::uint64_t n;
      do {
        n = rng.below(1000000);
      } while (!used.insert(n).second);
      rename[atom] = "m" + tag + "_" + std::to_string(n);
    }
    WeightedTheory ext = theory;
    std::map<std::string, InferenceRule> rules;
    return clone_into(a, rename, ext, rules, tag);
  }

  std::optional<Argument> clone_into(const Argument& a, const std::map<std::string, std::string>& rename,
                                     WeightedTheory& ext, std::map<std::string, InferenceRule>& rules,
                                     const std::string& tag) {
    auto map_lit = [&](const Literal& l) { return Literal(rename.at(l.atom), l.negated); };
    if (a.is_premise()) {
      const auto l = map_lit(a.conclusion());
      if (a.is_axiom_premise()) ext.add_axiom(l);
      else ext.add_ordinary(l, a.weight());
      return make_premise(ext, l);
    }
    std::vector<Argument> ants;
    for (const auto& x : a.antecedents()) {
      auto c = clone_into(x, rename, ext, rules, tag);
      if (!c) return std::nullopt;
      ants.push_back(*c);
    }
    const InferenceRule& top = *a.top_rule();
    auto it = rules.find(top.id);
    if (it == rules.end()) {
      InferenceRule r;
      r.id = "y" + tag + "_" + top.id;
      r.kind = top.kind;
      r.consequent = map_lit(top.consequent);
      for (const auto& l : top.antecedents) r.antecedents.insert(map_lit(l));
      ext.add_rule(r, a.weight());
      it = rules.emplace(top.id, r).first;
    }
    return try_make_inference(ext, it->second, ants).argument;
  }
};

double other_weight(Rng& rng, double w) {
  // 0, 1 (a strict rule) or a grid point, never equal to w.
  for (;;) {
    double v;
    const auto k = rng.below(12);
    if (k == 0) v = 0.0;
    else if (k == 1) v = 1.0;
    else v = static_cast<double>(1 + rng.below(999)) / 1000.0;
    if (v != w) return v;
  }
}

// Builds up to `attempts` instances for a multi-argument principle.
std::vector<std::vector<Argument>> synthesize_instances(PrincipleId p, Trial& tr, Rng& rng, std::size_t attempts) {
  std::vector<std::vector<Argument>> out;
  auto inference = [](const Argument& a) { return !a.is_premise(); };
  for (std::size_t i = 0; i < attempts; ++i) {
    switch (p) {
      case PrincipleId::Anonymity: {
        auto a = tr.pick(rng, [](const Argument&) { return true; });
        if (!a) break;
        if (auto c = tr.clone_renamed(*a, rng)) out.push_back({*a, *c});
        break;
      }
      case PrincipleId::AntecedentNeutrality:
      case PrincipleId::AntecedentWeakening: {
        auto A = tr.pick(rng, inference);
        if (!A) break;
        const bool neutral = p == PrincipleId::AntecedentNeutrality;
        const auto& used = A->top_rule()->antecedents;
        auto A2 = tr.pick(rng, [&](const Argument& x) {
          if (used.contains(x.conclusion())) return false;
          const double s = tr.strength(x);
          return neutral ? near(s, 1.0, kGuardMargin) : s < 1.0 - kGuardMargin;
        });
        if (!A2) break;
        std::vector<Argument> ants(A->antecedents().begin(), A->antecedents().end());
        ants.push_back(*A2);
        if (auto A1 = tr.synthesize(A->top_rule()->kind, A->weight(), ants)) out.push_back({*A, *A1, *A2});
        break;
      }
      case PrincipleId::InferenceWeightSensitivity: {
        auto A = tr.pick(rng, inference);
        if (!A) break;
        const double v = other_weight(rng, A->weight());
        std::vector<Argument> ants(A->antecedents().begin(), A->antecedents().end());
        auto B = tr.synthesize(v == 1.0 ? RuleKind::Strict : RuleKind::Defeasible, v, ants);
        if (!B) break;
        if (v > A->weight()) out.push_back({*A, *B});
        else out.push_back({*B, *A});
        break;
      }
      case PrincipleId::Proportionality: {
        auto A = tr.pick(rng, [](const Argument& a) { return !a.is_premise() && !a.antecedents().empty(); });
        if (!A) break;
        std::vector<Argument> weaker;
        std::set<Literal> concs;
        bool ok = true;
        for (const auto& x : A->antecedents()) {
          const double sx = tr.strength(x);
          auto b = tr.pick(rng, [&](const Argument& y) {
            return !concs.contains(y.conclusion()) && tr.strength(y) < sx - kGuardMargin;
          });
          if (!b) {
            ok = false;
            break;
          }
          concs.insert(b->conclusion());
          weaker.push_back(*b);
        }
        if (!ok) break;
        if (rng.chance(0.5)) {
          if (auto extra = tr.pick(rng, [&](const Argument& y) { return !concs.contains(y.conclusion()); }))
            weaker.push_back(*extra);
        }
        if (auto A1 = tr.synthesize(A->top_rule()->kind, A->weight(), weaker)) out.push_back({*A, *A1});
        break;
      }
      default: break;
    }
  }
  return out;
}

}  // namespace

std::vector<PrincipleVerdict> probe_principles(std::span<const PrincipleId> ps, const StrengthMethod& m,
                                               const ProbeConfig& cfg) {
  std::vector<PrincipleVerdict> out;
  const auto row = table_row(m);
  for (auto p : ps) {
    PrincipleVerdict v;
    v.principle = p;
    v.method = method_name(m);
    v.expected = theorem_table(row, p);
    v.trials = cfg.trials;
    out.push_back(std::move(v));
  }

  auto record = [&](PrincipleVerdict& v, std::span<const Argument> inst, const PrincipleCheck& c, const char* src) {
    if (!c.applicable) return;
    ++v.instances;
    if (c.holds) return;
    ++v.falsifications;
    if (!v.witness) v.witness = make_witness(v.principle, m, inst, c, src);
  };

  if (cfg.use_registered) {
    for (auto& v : out) {
      for (const auto& ce : registered_counterexamples()) {
        if (ce.principle != v.principle) continue;
        const auto t = to_theory(*parse_theory(ce.theory).document);
        std::vector<Argument> inst;
        for (const auto& e : ce.arguments) inst.push_back(parse_argument(t, e));
        record(v, inst, evaluate_principle(v.principle, m, inst), "registered");
      }
    }
  }

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    Trial tr;
    GeneratorConfig g = cfg.generator;
    g.seed = Rng::split(cfg.generator.seed, trial).next();
    tr.theory = generate_theory(g);
    tr.args = enumerate_arguments(tr.theory, cfg.budget);
    tr.method = &m;
    for (const auto& a : tr.args) tr.strength(a);

    for (auto& v : out) {
      const auto p = v.principle;
      if (instance_arity(p) == 1) {
        for (const auto& a : tr.args) {
          std::span<const Argument> inst(&a, 1);
          record(v, inst, evaluate_core(p, inst, tr.str), "search");
        }
        continue;
      }
      Rng rng = Rng::split(cfg.generator.seed, trial, 1 + index_of(p));
      for (const auto& inst : synthesize_instances(p, tr, rng, cfg.pair_attempts)) {
        for (const auto& a : inst) tr.strength(a);
        record(v, inst, evaluate_core(p, inst, tr.str), "search");
      }
    }
  }

  for (auto& v : out) {
    const bool known = v.expected && (v.expected->status == TableStatus::Satisfied ||
                                      v.expected->status == TableStatus::Guaranteed);
    if (known) v.kind = VerdictKind::KnownByTheorem;
    else v.kind = v.falsifications > 0 ? VerdictKind::Falsified : VerdictKind::NoCounterexampleFound;
  }
  return out;
}

PrincipleVerdict probe_principle(PrincipleId p, const StrengthMethod& m, const ProbeConfig& cfg) {
  std::array<PrincipleId, 1> one{p};
  return probe_principles(one, m, cfg).front();
}

}  // namespace argstr
