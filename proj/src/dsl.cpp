#include "argstr/dsl.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

namespace argstr {

std::string Diagnostic::str() const {
  return std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message;
}

std::string format_weight(double w) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), w);
  if (ec != std::errc{}) return std::to_string(w);
  return std::string(buf.data(), end);
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct ParseFailure {
  std::size_t column;
  std::size_t length;
  std::string message;
};

// Cursor over one line (or one expression); columns are 1-based.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t column() const { return pos_ + 1; }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view s) {
    skip_space();
    if (!starts_with(s)) return false;
    pos_ += s.size();
    return true;
  }

  void expect(std::string_view s, std::string_view what) {
    if (!accept(s)) fail("expected " + std::string(what));
  }

  [[noreturn]] void fail(std::string message, std::size_t length = 0) const {
    throw ParseFailure{column(), length, std::move(message)};
  }
  [[noreturn]] void fail_at(std::size_t col, std::string message, std::size_t length = 0) const {
    throw ParseFailure{col, length, std::move(message)};
  }

  std::string identifier(std::string_view what) {
    skip_space();
    if (!ident_start(peek())) fail("expected " + std::string(what));
    const auto start = pos_;
    while (!done() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // `~`? ident ( '(' arg {, arg} ')' )?
  Literal literal() {
    skip_space();
    const bool neg = accept("~");
    skip_space();
    std::string atom = identifier("a literal");
    if (peek() == '(') {
      ++pos_;
      atom += '(';
      bool first = true;
      for (;;) {
        skip_space();
        if (!first) {
          if (accept(")")) break;
          expect(",", "',' or ')' in predicate arguments");
          atom += ',';
          skip_space();
        }
        const auto start = pos_;
        while (!done() && ident_char(text_[pos_])) ++pos_;
        if (start == pos_) fail("expected a predicate argument");
        atom += text_.substr(start, pos_ - start);
        first = false;
      }
      atom += ')';
    }
    return Literal(std::move(atom), neg);
  }

  double number() {
    skip_space();
    const auto start = pos_;
    while (!done() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                       text_[pos_] == 'e' || text_[pos_] == 'E' || text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    double v = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [end, ec] = std::from_chars(first, last, v);
    if (start == pos_ || ec != std::errc{} || end != last) fail_at(start + 1, "expected a number", pos_ - start);
    return v;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Statement parse_statement(std::string_view line, std::size_t line_no) {
  Cursor c(line);
  c.skip_space();
  Statement st;
  st.span = {line_no, c.column(), 0};

  const auto kw_col = c.column();
  const std::string kw = c.identifier("a statement keyword");
  if (kw == "axiom") st.kind = Statement::Kind::Axiom;
  else if (kw == "prem") st.kind = Statement::Kind::Premise;
  else if (kw == "strict") st.kind = Statement::Kind::Strict;
  else if (kw == "defeas") st.kind = Statement::Kind::Defeasible;
  else
    c.fail_at(kw_col, "unknown statement '" + kw + "' (expected axiom, prem, strict or defeas)", kw.size());

  st.id = c.identifier("an id");
  c.expect(":", "':' after the id");

  if (st.is_rule()) {
    const std::string_view arrow = st.kind == Statement::Kind::Strict ? "->" : "=>";
    const std::string_view other = st.kind == Statement::Kind::Strict ? "=>" : "->";
    std::set<Literal> seen;
    c.skip_space();
    if (!c.starts_with(arrow)) {
      for (;;) {
        const auto col = c.column();
        auto l = c.literal();
        if (!seen.insert(l).second) c.fail_at(col, "duplicate antecedent '" + l.str() + "'");
        st.antecedents.push_back(std::move(l));
        if (!c.accept(",")) break;
      }
    }
    c.skip_space();
    if (c.starts_with(other))
      c.fail(st.kind == Statement::Kind::Strict ? "strict rules use '->'" : "defeasible rules use '=>'", 2);
    c.expect(arrow, "'" + std::string(arrow) + "'");
    const auto col = c.column();
    st.literal = c.literal();
    if (seen.contains(st.literal)) c.fail_at(col, "consequent also appears as an antecedent");
  } else {
    st.literal = c.literal();
  }

  c.skip_space();
  const auto w_col = c.column();
  const bool has_w = c.accept("w=");
  const bool weighted = st.kind == Statement::Kind::Premise || st.kind == Statement::Kind::Defeasible;
  if (has_w && !weighted)
    c.fail_at(w_col, std::string(st.kind == Statement::Kind::Axiom ? "axiom" : "strict rule") +
                         " weight is fixed at 1; remove w=",
              2);
  if (!has_w && weighted) {
    if (c.done()) c.fail("missing weight w=<float>");
    c.fail("unexpected text; expected w=<float>");
  }
  if (has_w) {
    const auto num_col = c.column() + 1;
    const double w = c.number();
    const char* what = st.kind == Statement::Kind::Premise ? "ordinary premise" : "defeasible rule";
    if (!(w >= 0.0)) c.fail_at(num_col, std::string(what) + " weight must be >= 0");
    if (!(w < 1.0)) c.fail_at(num_col, std::string(what) + " weight must be < 1");
    st.weight = w;
  }
  c.skip_space();
  if (!c.done()) c.fail("unexpected trailing text");
  return st;
}

}  // namespace

ParseResult parse_theory(std::string_view text) {
  ParseResult out;
  TheoryDocument doc;
  std::map<std::string, std::size_t> id_line;
  std::map<Literal, std::size_t> premise_line;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    try {
      auto st = parse_statement(line, line_no);
      if (auto [it, fresh] = id_line.emplace(st.id, line_no); !fresh) {
        out.diagnostics.push_back({{line_no, line.find(st.id) + 1, st.id.size()},
                                   "duplicate id '" + st.id + "' (first defined on line " +
                                       std::to_string(it->second) + ")"});
        continue;
      }
      if (!st.is_rule()) {
        if (auto [it, fresh] = premise_line.emplace(st.literal, line_no); !fresh) {
          out.diagnostics.push_back({{line_no, st.span.column, 0},
                                     "premise '" + st.literal.str() + "' already stated on line " +
                                         std::to_string(it->second)});
          continue;
        }
      }
      doc.statements.push_back(std::move(st));
    } catch (const ParseFailure& f) {
      out.diagnostics.push_back({{line_no, f.column, f.length}, f.message});
    }
    if (nl == text.size()) break;
  }

  if (out.diagnostics.empty() && doc.statements.empty())
    out.diagnostics.push_back({{1, 1, 0}, "empty theory"});
  if (out.diagnostics.empty()) out.document = std::move(doc);
  return out;
}

namespace {

std::string join_literals(const std::vector<Literal>& ls) {
  std::string s;
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? ", " : "") + ls[i].str();
  return s;
}

}  // namespace

std::string print_theory(const TheoryDocument& doc) {
  std::string out;
  for (const auto& st : doc.statements) {
    switch (st.kind) {
      case Statement::Kind::Axiom: out += "axiom " + st.id + ": " + st.literal.str(); break;
      case Statement::Kind::Premise:
        out += "prem " + st.id + ": " + st.literal.str() + " w=" + format_weight(st.weight.value_or(0.0));
        break;
      case Statement::Kind::Strict:
        out += "strict " + st.id + ": " + join_literals(st.antecedents) + (st.antecedents.empty() ? "-> " : " -> ") +
               st.literal.str();
        break;
      case Statement::Kind::Defeasible:
        out += "defeas " + st.id + ": " + join_literals(st.antecedents) + (st.antecedents.empty() ? "=> " : " => ") +
               st.literal.str() + " w=" + format_weight(st.weight.value_or(0.0));
        break;
    }
    out += '\n';
  }
  return out;
}

WeightedTheory to_theory(const TheoryDocument& doc) {
  WeightedTheory t;
  for (const auto& st : doc.statements) {
    switch (st.kind) {
      case Statement::Kind::Axiom: t.add_axiom(st.literal); break;
      case Statement::Kind::Premise: t.add_ordinary(st.literal, st.weight.value_or(0.0)); break;
      case Statement::Kind::Strict:
      case Statement::Kind::Defeasible: {
        InferenceRule r;
        r.id = st.id;
        r.antecedents = LiteralSet(st.antecedents.begin(), st.antecedents.end());
        r.consequent = st.literal;
        r.kind = st.kind == Statement::Kind::Strict ? RuleKind::Strict : RuleKind::Defeasible;
        t.add_rule(std::move(r), st.kind == Statement::Kind::Strict ? 1.0 : st.weight.value_or(0.0));
        break;
      }
    }
  }
  return t;
}

TheoryDocument from_theory(const WeightedTheory& t) {
  TheoryDocument doc;
  std::set<std::string> used;
  for (const auto& r : t.rules) used.insert(r.id);
  auto fresh = [&](char prefix, std::size_t& n) {
    std::string id;
    do {
      id = prefix + std::to_string(++n);
    } while (used.contains(id));
    used.insert(id);
    return id;
  };

  std::size_t na = 0, np = 0;
  for (const auto& l : t.kb.axioms) {
    Statement st;
    st.kind = Statement::Kind::Axiom;
    st.id = fresh('a', na);
    st.literal = l;
    doc.statements.push_back(std::move(st));
  }
  for (const auto& l : t.kb.ordinary) {
    if (t.kb.axioms.contains(l)) continue;
    Statement st;
    st.kind = Statement::Kind::Premise;
    st.id = fresh('p', np);
    st.literal = l;
    st.weight = t.premise_weight(l).value_or(0.0);
    doc.statements.push_back(std::move(st));
  }
  for (const auto& r : t.rules) {
    Statement st;
    st.kind = r.is_strict() ? Statement::Kind::Strict : Statement::Kind::Defeasible;
    st.id = r.id;
    st.antecedents.assign(r.antecedents.begin(), r.antecedents.end());
    st.literal = r.consequent;
    if (!r.is_strict()) st.weight = t.rule_weight(r.id).value_or(0.0);
    doc.statements.push_back(std::move(st));
  }
  return doc;
}

namespace {

Argument parse_argument_expr(const WeightedTheory& t, Cursor& c) {
  c.skip_space();
  const auto col = c.column();
  if (c.peek() != '~') {
    // Rule application when the identifier is followed by '['.
    Cursor probe = c;
    if (ident_start(probe.peek())) {
      auto id = probe.identifier("a rule id");
      probe.skip_space();
      if (probe.peek() == '[') {
        c = probe;
        c.expect("[", "'['");
        const InferenceRule* rule = t.find_rule(id);
        if (!rule) c.fail_at(col, "unknown rule '" + id + "'", id.size());
        std::vector<Argument> ants;
        if (!c.accept("]")) {
          for (;;) {
            ants.push_back(parse_argument_expr(t, c));
            if (c.accept("]")) break;
            c.expect(",", "',' or ']'");
          }
        }
        return make_inference(t, *rule, ants);
      }
    }
  }
  return make_premise(t, c.literal());
}

}  // namespace

Argument parse_argument(const WeightedTheory& t, std::string_view expr) {
  Cursor c(expr);
  try {
    auto a = parse_argument_expr(t, c);
    c.skip_space();
    if (!c.done()) c.fail("unexpected trailing text");
    return a;
  } catch (const ParseFailure& f) {
    throw std::invalid_argument("column " + std::to_string(f.column) + ": " + f.message);
  }
}

}  // namespace argstr
