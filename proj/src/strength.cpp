#include "argstr/strength.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace argstr {

double strength_sp(const Argument& a) {
  return a.basis().fold(1.0, [](double acc, const BasisElement& b) { return acc * b.weight; });
}

double strength_wl(const Argument& a) {
  return a.basis().fold(1.0, [](double acc, const BasisElement& b) { return std::min(acc, b.weight); });
}

double strength_sp_recursive(const Argument& a) {
  double s = a.weight();
  for (const auto& ant : a.antecedents()) s *= strength_sp_recursive(ant);
  return s;
}

double strength_wl_recursive(const Argument& a) {
  double s = a.weight();
  for (const auto& ant : a.antecedents()) s = std::min(s, strength_wl_recursive(ant));
  return s;
}

namespace fns {

double f_prod(double x, double y) { return x * y; }
double f_min(double x, double y) { return std::min(x, y); }

double f_hamacher(double x, double y) {
  if (x == 0.0 && y == 0.0) return 0.0;
  return x * y / (x + y - x * y);
}

double f_lukasiewicz(double x, double y) { return std::max(0.0, x + y - 1.0); }

double g_prod(std::span<const double> xs) {
  double p = 1.0;
  for (double x : xs) p *= x;
  return p;
}

double g_min(std::span<const double> xs) {
  if (xs.empty()) return 1.0;
  return *std::min_element(xs.begin(), xs.end());
}

namespace {
template <typename TNorm>
double fold_tnorm(std::span<const double> xs, TNorm t) {
  if (xs.empty()) return 1.0;
  double acc = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) acc = t(acc, xs[i]);
  return acc;
}
}  // namespace

double g_hamacher(std::span<const double> xs) { return fold_tnorm(xs, f_hamacher); }
double g_lukasiewicz(std::span<const double> xs) { return fold_tnorm(xs, f_lukasiewicz); }

double g_mean(std::span<const double> xs) {
  if (xs.empty()) return 1.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

}  // namespace fns

std::optional<CombineFn> find_combine_fn(std::string_view name) {
  if (name == "prod") return CombineFn{"prod", fns::f_prod, true};
  if (name == "min") return CombineFn{"min", fns::f_min, true};
  if (name == "hamacher") return CombineFn{"hamacher", fns::f_hamacher, true};
  if (name == "lukasiewicz") return CombineFn{"lukasiewicz", fns::f_lukasiewicz, true};
  return std::nullopt;
}

std::optional<AggregateFn> find_aggregate_fn(std::string_view name) {
  if (name == "prod") return AggregateFn{"prod", fns::g_prod, true};
  if (name == "min") return AggregateFn{"min", fns::g_min, true};
  if (name == "hamacher") return AggregateFn{"hamacher", fns::g_hamacher, true};
  if (name == "lukasiewicz") return AggregateFn{"lukasiewicz", fns::g_lukasiewicz, true};
  if (name == "mean") return AggregateFn{"mean", fns::g_mean, false};
  return std::nullopt;
}

std::vector<std::string> combine_fn_names() { return {"prod", "min", "hamacher", "lukasiewicz"}; }
std::vector<std::string> aggregate_fn_names() { return {"prod", "min", "hamacher", "lukasiewicz", "mean"}; }

bool sample_symmetry(const AggregateFn& g, unsigned seed, int trials) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> len(2, 5);
  for (int t = 0; t < trials; ++t) {
    std::vector<double> xs(static_cast<std::size_t>(len(rng)));
    for (auto& x : xs) x = unit(rng);
    const double ref = g(xs);
    std::shuffle(xs.begin(), xs.end(), rng);
    if (std::abs(g(xs) - ref) > 1e-12) return false;
    std::reverse(xs.begin(), xs.end());
    if (std::abs(g(xs) - ref) > 1e-12) return false;
  }
  return true;
}

AggregationMethod make_aggregation_method(std::string name, CombineFn f, AggregateFn g) {
  if (!sample_symmetry(g)) throw std::invalid_argument("aggregate '" + g.name + "' is not symmetric");
  return AggregationMethod{std::move(name), std::move(f), std::move(g)};
}

namespace {

double eval_memo(const AggregationMethod& m, const Argument& a, std::unordered_map<const void*, double>& memo) {
  if (auto it = memo.find(a.node_id()); it != memo.end()) return it->second;
  auto ants = a.antecedents();
  std::vector<std::pair<const std::string*, double>> parts;
  parts.reserve(ants.size());
  for (const auto& ant : ants) parts.emplace_back(&ant.signature(), eval_memo(m, ant, memo));
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    if (*x.first != *y.first) return *x.first < *y.first;
    return x.second < y.second;
  });
  std::vector<double> xs;
  xs.reserve(parts.size());
  for (const auto& [_, v] : parts) xs.push_back(v);
  const double s = m.f(a.weight(), m.g(xs));
  memo.emplace(a.node_id(), s);
  return s;
}

}  // namespace

double eval_aggregation(const AggregationMethod& m, const Argument& a) {
  std::unordered_map<const void*, double> memo;
  return eval_memo(m, a, memo);
}

namespace {

AggregationMethod named_pair(std::string name, std::string_view f, std::string_view g) {
  return AggregationMethod{std::move(name), *find_combine_fn(f), *find_aggregate_fn(g)};
}

}  // namespace

std::optional<StrengthMethod> find_method(std::string_view name) {
  if (name == "sp") return StrengthMethod{DirectSP{}};
  if (name == "wl") return StrengthMethod{DirectWL{}};
  if (name == "prod-prod") return StrengthMethod{named_pair("prod-prod", "prod", "prod")};
  if (name == "min-min") return StrengthMethod{named_pair("min-min", "min", "min")};
  if (name == "prod-min") return StrengthMethod{named_pair("prod-min", "prod", "min")};
  if (name == "hamacher") return StrengthMethod{named_pair("hamacher", "hamacher", "hamacher")};
  if (name == "lukasiewicz") return StrengthMethod{named_pair("lukasiewicz", "lukasiewicz", "lukasiewicz")};
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    auto f = find_combine_fn(name.substr(0, colon));
    auto g = find_aggregate_fn(name.substr(colon + 1));
    if (f && g) return StrengthMethod{AggregationMethod{std::string(name), *f, *g}};
  }
  return std::nullopt;
}

std::vector<std::string> registered_method_names() {
  return {"sp", "wl", "prod-prod", "min-min", "prod-min", "hamacher", "lukasiewicz"};
}

std::string method_name(const StrengthMethod& m) {
  struct Visitor {
    std::string operator()(const DirectSP&) const { return "sp"; }
    std::string operator()(const DirectWL&) const { return "wl"; }
    std::string operator()(const AggregationMethod& am) const { return am.name; }
  };
  return std::visit(Visitor{}, m);
}

double evaluate(const StrengthMethod& m, const Argument& a) {
  struct Visitor {
    const Argument& a;
    double operator()(const DirectSP&) const { return strength_sp(a); }
    double operator()(const DirectWL&) const { return strength_wl(a); }
    double operator()(const AggregationMethod& am) const { return eval_aggregation(am, a); }
  };
  return std::visit(Visitor{a}, m);
}

// ---- well-behavedness ----

std::string_view to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::Certified: return "certified";
    case ClauseStatus::NoViolationFound: return "no-violation-found";
    case ClauseStatus::Falsified: return "falsified";
  }
  return "unknown";
}

std::optional<ClauseVerdict> WellBehavedVerdict::first_falsified() const {
  for (const auto& c : clauses)
    if (c.status == ClauseStatus::Falsified) return c;
  return std::nullopt;
}

GridSpec GridSpec::standard() {
  GridSpec g;
  for (int i = 0; i <= 10; ++i) g.points.push_back(i / 10.0);
  return g;
}

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

std::string call(std::string_view fn, std::span<const double> xs) {
  std::string s = std::string(fn) + "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + num(xs[i]);
  return s + ")";
}

// All ordered tuples over `points` of length 0..max_len, shortest first.
std::vector<std::vector<double>> prefixes(const std::vector<double>& points, std::size_t max_len) {
  std::vector<std::vector<double>> out{{}};
  std::vector<std::vector<double>> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<double>> next;
    for (const auto& p : frontier)
      for (double x : points) {
        auto q = p;
        q.push_back(x);
        next.push_back(q);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

class ClauseRun {
 public:
  explicit ClauseRun(ClauseVerdict& v) : v_(v) {}
  // Returns false once falsified so callers can stop early.
  bool check(bool holds, const std::function<std::string()>& witness) {
    ++v_.samples;
    if (holds) return true;
    v_.status = ClauseStatus::Falsified;
    v_.witness = witness();
    return false;
  }

 private:
  ClauseVerdict& v_;
};

}  // namespace

WellBehavedVerdict check_well_behaved(const AggregationMethod& m, const GridSpec& grid) {
  WellBehavedVerdict out;
  for (int i = 0; i < 8; ++i) out.clauses[static_cast<std::size_t>(i)].clause = i + 1;
  const double tol = grid.tolerance;
  const auto& P = grid.points;
  auto near = [tol](double a, double b) { return std::abs(a - b) <= tol; };
  const auto& f = m.f;
  const auto& g = m.g;
  const std::string fname = "f", gname = "g";

  const bool f_cert = grid.use_certificates && f.certified;
  const bool g_cert = grid.use_certificates && g.certified;
  for (int c = 1; c <= 3; ++c)
    if (f_cert) out.clauses[static_cast<std::size_t>(c - 1)].status = ClauseStatus::Certified;
  for (int c = 4; c <= 8; ++c)
    if (g_cert) out.clauses[static_cast<std::size_t>(c - 1)].status = ClauseStatus::Certified;

  if (!f_cert) {
    // 1. non-decreasing in both variables away from 0
    [&] {
      ClauseRun run(out.clauses[0]);
      for (double x : P) {
        if (x == 0.0) continue;
        for (double y : P)
          for (double z : P) {
            if (y == 0.0 || z == 0.0 || y > z) continue;
            if (!run.check(f(x, y) <= f(x, z) + tol, [&] {
                  return fname + "(" + num(x) + ", " + num(y) + ") = " + num(f(x, y)) + " > " + fname + "(" + num(x) +
                         ", " + num(z) + ") = " + num(f(x, z));
                }))
              return;
            if (!run.check(f(y, x) <= f(z, x) + tol, [&] {
                  return fname + "(" + num(y) + ", " + num(x) + ") = " + num(f(y, x)) + " > " + fname + "(" + num(z) +
                         ", " + num(x) + ") = " + num(f(z, x));
                }))
              return;
          }
      }
    }();
    // 2. zero is null
    [&] {
      ClauseRun run(out.clauses[1]);
      for (double x : P) {
        if (!run.check(near(f(0.0, x), 0.0), [&] { return fname + "(0, " + num(x) + ") = " + num(f(0.0, x)); }))
          return;
        if (!run.check(near(f(x, 0.0), 0.0), [&] { return fname + "(" + num(x) + ", 0) = " + num(f(x, 0.0)); }))
          return;
      }
    }();
    // 3. one is the identity
    [&] {
      ClauseRun run(out.clauses[2]);
      for (double x : P) {
        if (!run.check(near(f(x, 1.0), x), [&] { return fname + "(" + num(x) + ", 1) = " + num(f(x, 1.0)); })) return;
        if (!run.check(near(f(1.0, x), x), [&] { return fname + "(1, " + num(x) + ") = " + num(f(1.0, x)); })) return;
      }
    }();
  }

  if (!g_cert) {
    const auto pre = prefixes(P, grid.max_prefix);
    // 4. g() = 1
    {
      ClauseRun run(out.clauses[3]);
      run.check(near(g({}), 1.0), [&] { return gname + "() = " + num(g({})); });
    }
    // 5. g(x) = x
    [&] {
      ClauseRun run(out.clauses[4]);
      for (double x : P) {
        std::vector<double> xs{x};
        if (!run.check(near(g(xs), x), [&] { return call(gname, xs) + " = " + num(g(xs)); })) return;
      }
    }();
    // 6. a trailing 0 absorbs
    [&] {
      ClauseRun run(out.clauses[5]);
      for (const auto& p : pre) {
        auto xs = p;
        xs.push_back(0.0);
        if (!run.check(near(g(xs), 0.0), [&] { return call(gname, xs) + " = " + num(g(xs)); })) return;
      }
    }();
    // 7. appending 1 is neutral
    [&] {
      ClauseRun run(out.clauses[6]);
      for (const auto& p : pre) {
        auto xs = p;
        xs.push_back(1.0);
        if (!run.check(near(g(p), g(xs)), [&] {
              return call(gname, p) + " = " + num(g(p)) + " but " + call(gname, xs) + " = " + num(g(xs));
            }))
          return;
      }
    }();
    // 8. monotone in the appended argument
    [&] {
      ClauseRun run(out.clauses[7]);
      for (const auto& p : pre)
        for (double y : P)
          for (double z : P) {
            if (y > z) continue;
            auto xy = p, xz = p;
            xy.push_back(y);
            xz.push_back(z);
            if (!run.check(g(xy) <= g(xz) + tol, [&] {
                  return call(gname, xy) + " = " + num(g(xy)) + " > " + call(gname, xz) + " = " + num(g(xz));
                }))
              return;
          }
    }();
  }

  bool all_cert = true, any_false = false;
  for (const auto& c : out.clauses) {
    all_cert = all_cert && c.status == ClauseStatus::Certified;
    any_false = any_false || c.status == ClauseStatus::Falsified;
  }
  out.overall = any_false ? ClauseStatus::Falsified : all_cert ? ClauseStatus::Certified : ClauseStatus::NoViolationFound;
  return out;
}

}  // namespace argstr
