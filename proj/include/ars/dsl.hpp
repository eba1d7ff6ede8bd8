#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ars/bitvector.hpp"
#include "ars/errors.hpp"
#include "ars/expr.hpp"
#include "ars/genfn.hpp"
#include "ars/rational.hpp"
#include "ars/schedule.hpp"
#include "ars/signal.hpp"
#include "ars/systems.hpp"

namespace ars {

// Named definitions of a workspace file. Names are unique per kind and all
// cross-references resolve at parse time.
struct Workspace {
  std::map<std::string, GeneratorFunction> genfns;
  std::map<std::string, Signal> signals;
  std::map<std::string, Schedule> schedules;
  std::map<std::string, ExplicitSystem> systems;
  std::map<std::string, ComputationFunction> pis;
};

namespace dsl {

struct Token {
  enum class Kind { Ident, Number, Punct, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int col = 1;
};

// Hand-rolled lexer for the workspace grammar. '#' starts a comment that
// runs to the end of the line. Numbers keep their raw text so that bit
// strings with leading zeros survive.
class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  bool at_punct(std::string_view p) const {
    return current_.kind == Token::Kind::Punct && current_.text == p;
  }
  bool at_ident(std::string_view s) const {
    return current_.kind == Token::Kind::Ident && current_.text == s;
  }
  bool at_end() const { return current_.kind == Token::Kind::End; }

  Token expect_punct(std::string_view p) {
    if (!at_punct(p))
      throw SyntaxError("expected '" + std::string(p) + "', found " +
                            describe(current_),
                        current_.line, current_.col);
    return take();
  }
  Token expect_ident() {
    if (current_.kind != Token::Kind::Ident)
      throw SyntaxError("expected a name, found " + describe(current_),
                        current_.line, current_.col);
    return take();
  }
  Token expect_keyword(std::string_view kw) {
    if (!at_ident(kw))
      throw SyntaxError("expected '" + std::string(kw) + "', found " +
                            describe(current_),
                        current_.line, current_.col);
    return take();
  }
  Token expect_number() {
    if (current_.kind != Token::Kind::Number)
      throw SyntaxError("expected a number, found " + describe(current_),
                        current_.line, current_.col);
    return take();
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Token::Kind::End:
        return "end of input";
      case Token::Kind::Ident:
        return "'" + t.text + "'";
      case Token::Kind::Number:
        return "'" + t.text + "'";
      case Token::Kind::Punct:
        return "'" + t.text + "'";
    }
    return "?";
  }

private:
  void advance() {
    skip_space();
    current_ = Token{Token::Kind::End, "", line_, col_};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        bump();
      current_.kind = Token::Kind::Ident;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        bump();
      if (pos_ < text_.size() && text_[pos_] == '.') {
        bump();
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
          bump();
      }
      current_.kind = Token::Kind::Number;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      bump();
      bump();
      current_.kind = Token::Kind::Punct;
      current_.text = "->";
      return;
    }
    static constexpr std::string_view kSingles = "{}[]();:,='!&|^/-";
    if (kSingles.find(c) != std::string_view::npos) {
      bump();
      current_.kind = Token::Kind::Punct;
      current_.text = std::string(1, c);
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", line_,
                      col_);
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

inline std::int64_t parse_int_token(const Token& t) {
  if (t.text.find('.') != std::string::npos)
    throw SyntaxError("expected an integer, found '" + t.text + "'", t.line,
                      t.col);
  std::int64_t v = 0;
  for (char c : t.text) v = v * 10 + (c - '0');
  return v;
}

// Rational literal: [-] NUMBER [ '/' NUMBER ]; the number may be decimal.
inline Rational parse_rational(Lexer& lex) {
  bool neg = false;
  if (lex.at_punct("-")) {
    lex.take();
    neg = true;
  }
  const Token first = lex.expect_number();
  Rational r(0);
  if (lex.at_punct("/")) {
    lex.take();
    const Token second = lex.expect_number();
    r = Rational(parse_int_token(first), parse_int_token(second));
  } else {
    try {
      r = Rational::parse(first.text);
    } catch (const Error& e) {
      throw SyntaxError(e.what(), first.line, first.col);
    }
  }
  return neg ? -r : r;
}

// A bit string: one Number token of 0/1 digits.
inline BitVector parse_bits(Lexer& lex) {
  const Token t = lex.expect_number();
  for (char c : t.text)
    if (c != '0' && c != '1')
      throw SyntaxError("expected a bit string of 0s and 1s, found '" + t.text +
                            "'",
                        t.line, t.col);
  return BitVector::parse(t.text);
}

// --- Boolean expressions ----------------------------------------------------

inline ExprPtr parse_expr(Lexer& lex, int n, int m);

inline ExprPtr parse_expr_primary(Lexer& lex, int n, int m) {
  if (lex.at_punct("(")) {
    lex.take();
    ExprPtr e = parse_expr(lex, n, m);
    lex.expect_punct(")");
    return e;
  }
  if (lex.at_punct("!")) {
    lex.take();
    return Expr::make_not(parse_expr_primary(lex, n, m));
  }
  const Token t = lex.peek();
  if (t.kind == Token::Kind::Number) {
    lex.take();
    if (t.text == "0") return Expr::constant(false);
    if (t.text == "1") return Expr::constant(true);
    throw SyntaxError("expected constant 0 or 1, found '" + t.text + "'",
                      t.line, t.col);
  }
  if (t.kind == Token::Kind::Ident) {
    lex.take();
    const char head = t.text[0];
    if ((head == 'x' || head == 'u') && t.text.size() > 1) {
      bool digits = true;
      for (std::size_t i = 1; i < t.text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) digits = false;
      if (digits) {
        const int index = static_cast<int>(std::stoll(t.text.substr(1)));
        const int limit = head == 'x' ? n : m;
        if (index < 1 || index > limit)
          throw UnknownVariable("variable " + t.text + " out of range (" +
                                    (head == 'x' ? "n=" : "m=") +
                                    std::to_string(limit) + ")",
                                t.line, t.col);
        return head == 'x' ? Expr::state_var(index) : Expr::input_var(index);
      }
    }
    throw UnknownVariable("unknown variable '" + t.text + "'", t.line, t.col);
  }
  throw SyntaxError("expected an expression, found " + Lexer::describe(t),
                    t.line, t.col);
}

inline ExprPtr parse_expr_and(Lexer& lex, int n, int m) {
  ExprPtr e = parse_expr_primary(lex, n, m);
  while (lex.at_punct("&")) {
    lex.take();
    e = Expr::binary(Expr::Kind::And, e, parse_expr_primary(lex, n, m));
  }
  return e;
}

inline ExprPtr parse_expr_xor(Lexer& lex, int n, int m) {
  ExprPtr e = parse_expr_and(lex, n, m);
  while (lex.at_punct("^")) {
    lex.take();
    e = Expr::binary(Expr::Kind::Xor, e, parse_expr_and(lex, n, m));
  }
  return e;
}

inline ExprPtr parse_expr(Lexer& lex, int n, int m) {
  ExprPtr e = parse_expr_xor(lex, n, m);
  while (lex.at_punct("|")) {
    lex.take();
    e = Expr::binary(Expr::Kind::Or, e, parse_expr_xor(lex, n, m));
  }
  return e;
}

// --- Literal bodies ---------------------------------------------------------

// "n=<n> m=<m> ; x<i>' = <expr> ; ..." with one definition per coordinate.
inline GeneratorFunction parse_genfn_body(Lexer& lex) {
  const Token nt = lex.expect_keyword("n");
  lex.expect_punct("=");
  const std::int64_t n = parse_int_token(lex.expect_number());
  lex.expect_keyword("m");
  lex.expect_punct("=");
  const std::int64_t m = parse_int_token(lex.expect_number());
  if (n < 1 || m < 1)
    throw ArityError("widths must be positive", nt.line, nt.col);
  if (n + m > GeneratorFunction::kMaxArity)
    throw ArityCapExceeded("arity n+m = " + std::to_string(n + m) +
                               " exceeds cap " +
                               std::to_string(GeneratorFunction::kMaxArity),
                           nt.line, nt.col);

  std::vector<ExprPtr> exprs(static_cast<std::size_t>(n));
  std::vector<bool> defined(static_cast<std::size_t>(n), false);
  while (lex.at_punct(";")) {
    lex.take();
    const Token var = lex.expect_ident();
    if (var.text.size() < 2 || var.text[0] != 'x')
      throw SyntaxError("expected a coordinate definition like x1' = ...",
                        var.line, var.col);
    int index = 0;
    for (std::size_t i = 1; i < var.text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(var.text[i])))
        throw SyntaxError("expected a coordinate definition like x1' = ...",
                          var.line, var.col);
      index = index * 10 + (var.text[i] - '0');
    }
    if (index < 1 || index > n)
      throw ArityError("coordinate x" + std::to_string(index) +
                           " out of range (n=" + std::to_string(n) + ")",
                       var.line, var.col);
    if (defined[static_cast<std::size_t>(index - 1)])
      throw ArityError("coordinate x" + std::to_string(index) +
                           " defined twice",
                       var.line, var.col);
    lex.expect_punct("'");
    lex.expect_punct("=");
    exprs[static_cast<std::size_t>(index - 1)] =
        parse_expr(lex, static_cast<int>(n), static_cast<int>(m));
    defined[static_cast<std::size_t>(index - 1)] = true;
  }
  for (std::int64_t i = 0; i < n; ++i)
    if (!defined[static_cast<std::size_t>(i)])
      throw ArityError("coordinate x" + std::to_string(i + 1) +
                           " has no definition",
                       lex.peek().line, lex.peek().col);
  return GeneratorFunction::from_exprs(static_cast<int>(n),
                                       static_cast<int>(m), std::move(exprs));
}

// "init <bits> ; <time>:<bits> ; ...".
inline Signal parse_signal_body(Lexer& lex) {
  const Token kw = lex.expect_keyword("init");
  BitVector initial = parse_bits(lex);
  std::vector<Signal::Switch> raw;
  while (lex.at_punct(";")) {
    lex.take();
    const Token at = lex.peek();
    const Rational t = parse_rational(lex);
    lex.expect_punct(":");
    const BitVector v = parse_bits(lex);
    if (v.width() != initial.width())
      throw WidthMismatch("switch value width differs from initial width",
                          at.line, at.col);
    if (!raw.empty() && !(raw.back().first < t))
      throw NonIncreasingTimes("switch times not strictly increasing", at.line,
                               at.col);
    raw.emplace_back(t, v);
  }
  (void)kw;
  return Signal(std::move(initial), raw);
}

inline std::vector<ScheduleEvent> parse_sched_events(Lexer& lex, int n) {
  std::vector<ScheduleEvent> events;
  lex.expect_punct("[");
  while (!lex.at_punct("]")) {
    if (!events.empty()) lex.expect_punct(";");
    const Token at = lex.peek();
    const Rational t = parse_rational(lex);
    lex.expect_punct(":");
    lex.expect_punct("{");
    BitVector fires = BitVector::zeros(n);
    while (!lex.at_punct("}")) {
      if (fires.any()) lex.expect_punct(",");
      const Token it = lex.expect_number();
      const std::int64_t i = parse_int_token(it);
      if (i < 1 || i > n)
        throw BadRange("coordinate " + std::to_string(i) +
                           " out of range (n=" + std::to_string(n) + ")",
                       it.line, it.col);
      fires = fires.with_bit(static_cast<int>(i), true);
    }
    lex.expect_punct("}");
    if (fires.none())
      throw SyntaxError("fire set must be nonempty", at.line, at.col);
    events.push_back({t, fires});
  }
  lex.expect_punct("]");
  return events;
}

// "n=<n> prefix[<t>:{i,..}; ...] tail anchor=<t> period=<p> [...]".
inline Schedule parse_schedule_body(Lexer& lex) {
  const Token nt = lex.expect_keyword("n");
  lex.expect_punct("=");
  const std::int64_t n = parse_int_token(lex.expect_number());
  if (n < 1 || n > BitVector::kMaxWidth)
    throw SyntaxError("schedule width out of range", nt.line, nt.col);
  lex.expect_keyword("prefix");
  std::vector<ScheduleEvent> prefix =
      parse_sched_events(lex, static_cast<int>(n));
  const Token tail = lex.expect_keyword("tail");
  lex.expect_keyword("anchor");
  lex.expect_punct("=");
  const Rational anchor = parse_rational(lex);
  lex.expect_keyword("period");
  lex.expect_punct("=");
  const Rational period = parse_rational(lex);
  std::vector<ScheduleEvent> pattern =
      parse_sched_events(lex, static_cast<int>(n));
  try {
    return Schedule(static_cast<int>(n), std::move(prefix), anchor, period,
                    std::move(pattern));
  } catch (const InvalidSchedule& e) {
    throw InvalidSchedule(e.what(), tail.line, tail.col);
  }
}

}  // namespace dsl

// Parses a generator function literal such as "n=1 m=1 ; x1' = u1".
inline GeneratorFunction parse_genfn(std::string_view text) {
  dsl::Lexer lex(text);
  GeneratorFunction fn = dsl::parse_genfn_body(lex);
  if (!lex.at_end())
    throw SyntaxError("unexpected trailing input", lex.peek().line,
                      lex.peek().col);
  return fn;
}

inline Signal parse_signal(std::string_view text) {
  dsl::Lexer lex(text);
  Signal s = dsl::parse_signal_body(lex);
  if (!lex.at_end())
    throw SyntaxError("unexpected trailing input", lex.peek().line,
                      lex.peek().col);
  return s;
}

inline Schedule parse_schedule(std::string_view text) {
  dsl::Lexer lex(text);
  Schedule r = dsl::parse_schedule_body(lex);
  if (!lex.at_end())
    throw SyntaxError("unexpected trailing input", lex.peek().line,
                      lex.peek().col);
  return r;
}

// Parses a whole workspace file. All references must resolve; names are
// unique per definition kind.
inline Workspace parse_workspace(std::string_view text) {
  dsl::Lexer lex(text);
  Workspace ws;

  auto lookup_signal = [&](const dsl::Token& name) -> const Signal& {
    const auto it = ws.signals.find(name.text);
    if (it == ws.signals.end())
      throw UnresolvedReference("signal '" + name.text + "' is not defined",
                                name.line, name.col);
    return it->second;
  };

  while (!lex.at_end()) {
    const dsl::Token kw = lex.expect_ident();
    const dsl::Token name = lex.expect_ident();
    lex.expect_punct("{");

    if (kw.text == "genfn") {
      if (ws.genfns.count(name.text))
        throw DuplicateName("genfn '" + name.text + "' already defined",
                            name.line, name.col);
      ws.genfns.emplace(name.text, dsl::parse_genfn_body(lex));
    } else if (kw.text == "signal") {
      if (ws.signals.count(name.text))
        throw DuplicateName("signal '" + name.text + "' already defined",
                            name.line, name.col);
      ws.signals.emplace(name.text, dsl::parse_signal_body(lex));
    } else if (kw.text == "sched") {
      if (ws.schedules.count(name.text))
        throw DuplicateName("sched '" + name.text + "' already defined",
                            name.line, name.col);
      ws.schedules.emplace(name.text, dsl::parse_schedule_body(lex));
    } else if (kw.text == "system") {
      if (ws.systems.count(name.text))
        throw DuplicateName("system '" + name.text + "' already defined",
                            name.line, name.col);
      ExplicitSystem::EntryMap entries;
      int input_width = -1, state_width = -1;
      while (!lex.at_punct("}")) {
        if (!entries.empty()) {
          lex.expect_punct(";");
          if (lex.at_punct("}")) break;
        }
        const dsl::Token uname = lex.expect_ident();
        const Signal& u = lookup_signal(uname);
        if (input_width == -1) input_width = u.width();
        if (u.width() != input_width)
          throw WidthMismatch("input '" + uname.text +
                                  "' has width " + std::to_string(u.width()) +
                                  ", expected " + std::to_string(input_width),
                              uname.line, uname.col);
        lex.expect_punct("->");
        lex.expect_punct("{");
        std::set<Signal> states;
        bool first = true;
        while (!lex.at_punct("}")) {
          if (!first) lex.expect_punct(",");
          const dsl::Token xname = lex.expect_ident();
          const Signal& x = lookup_signal(xname);
          if (state_width == -1) state_width = x.width();
          if (x.width() != state_width)
            throw WidthMismatch("state '" + xname.text + "' has width " +
                                    std::to_string(x.width()) + ", expected " +
                                    std::to_string(state_width),
                                xname.line, xname.col);
          states.insert(x);
          first = false;
        }
        lex.expect_punct("}");
        if (states.empty())
          throw SyntaxError("state set must be nonempty", uname.line,
                            uname.col);
        if (!entries.emplace(u, std::move(states)).second)
          throw DuplicateName("input '" + uname.text +
                                  "' listed twice in system '" + name.text +
                                  "'",
                              uname.line, uname.col);
      }
      if (entries.empty())
        throw SyntaxError("system must have at least one entry", kw.line,
                          kw.col);
      ws.systems.emplace(name.text, ExplicitSystem(input_width, state_width,
                                                   std::move(entries)));
    } else if (kw.text == "pi") {
      if (ws.pis.count(name.text))
        throw DuplicateName("pi '" + name.text + "' already defined",
                            name.line, name.col);
      ComputationFunction pi;
      int state_width = -1, input_width = -1;
      bool first_entry = true;
      while (!lex.at_punct("}")) {
        if (!first_entry) {
          lex.expect_punct(";");
          if (lex.at_punct("}")) break;
        }
        const dsl::Token open = lex.expect_punct("(");
        const BitVector mu = dsl::parse_bits(lex);
        if (state_width == -1) state_width = mu.width();
        if (mu.width() != state_width)
          throw WidthMismatch("initial value width differs within pi '" +
                                  name.text + "'",
                              open.line, open.col);
        lex.expect_punct(",");
        const dsl::Token uname = lex.expect_ident();
        const Signal& u = lookup_signal(uname);
        if (input_width == -1) input_width = u.width();
        if (u.width() != input_width)
          throw WidthMismatch("input width differs within pi '" + name.text +
                                  "'",
                              uname.line, uname.col);
        lex.expect_punct(")");
        lex.expect_punct("->");
        lex.expect_punct("{");
        std::set<Schedule> scheds;
        bool first = true;
        while (!lex.at_punct("}")) {
          if (!first) lex.expect_punct(",");
          const dsl::Token rname = lex.expect_ident();
          const auto it = ws.schedules.find(rname.text);
          if (it == ws.schedules.end())
            throw UnresolvedReference("sched '" + rname.text +
                                          "' is not defined",
                                      rname.line, rname.col);
          if (it->second.width() != state_width)
            throw WidthMismatch("schedule '" + rname.text + "' has width " +
                                    std::to_string(it->second.width()) +
                                    ", expected " +
                                    std::to_string(state_width),
                                rname.line, rname.col);
          scheds.insert(it->second);
          first = false;
        }
        lex.expect_punct("}");
        if (scheds.empty())
          throw SyntaxError("schedule set must be nonempty", open.line,
                            open.col);
        if (!pi.entries.emplace(std::make_pair(mu, u), std::move(scheds))
                 .second)
          throw DuplicateName("pi entry listed twice", open.line, open.col);
        first_entry = false;
      }
      if (pi.entries.empty())
        throw SyntaxError("pi must have at least one entry", kw.line, kw.col);
      pi.state_width = state_width;
      pi.input_width = input_width;
      ws.pis.emplace(name.text, std::move(pi));
    } else {
      throw SyntaxError("unknown definition kind '" + kw.text + "'", kw.line,
                        kw.col);
    }
    lex.expect_punct("}");
  }
  return ws;
}

// --- Printing ---------------------------------------------------------------

namespace dsl {

inline std::string minterm_expr(const GeneratorFunction& fn, int coord) {
  const int n = fn.state_width(), m = fn.input_width();
  std::string out;
  const std::size_t cells = std::size_t{1} << (n + m);
  std::size_t count = 0;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const BitVector state(n, cell >> m);
    const BitVector input(m, cell & ((std::uint64_t{1} << m) - 1));
    if (!fn.eval(state, input).bit(coord)) continue;
    ++count;
    if (!out.empty()) out += " | ";
    std::string term;
    for (int i = 1; i <= n; ++i) {
      if (!term.empty()) term += " & ";
      term += (state.bit(i) ? "x" : "!x") + std::to_string(i);
    }
    for (int j = 1; j <= m; ++j) {
      if (!term.empty()) term += " & ";
      term += (input.bit(j) ? "u" : "!u") + std::to_string(j);
    }
    out += term;
  }
  if (count == 0) return "0";
  if (count == cells) return "1";
  return out;
}

}  // namespace dsl

inline std::string to_literal(const GeneratorFunction& fn) {
  std::string out = "n=" + std::to_string(fn.state_width()) +
                    " m=" + std::to_string(fn.input_width());
  for (int i = 1; i <= fn.state_width(); ++i) {
    out += " ; x" + std::to_string(i) + "' = ";
    if (fn.has_source())
      out += print_expr(*fn.source()[static_cast<std::size_t>(i - 1)]);
    else
      out += dsl::minterm_expr(fn, i);
  }
  return out;
}

inline std::string print_workspace(const Workspace& ws) {
  std::ostringstream out;
  for (const auto& [name, fn] : ws.genfns)
    out << "genfn " << name << " { " << to_literal(fn) << " }\n";
  for (const auto& [name, s] : ws.signals)
    out << "signal " << name << " { " << to_literal(s) << " }\n";
  for (const auto& [name, r] : ws.schedules)
    out << "sched " << name << " { " << to_literal(r) << " }\n";

  std::map<Signal, std::string> signal_names;
  for (const auto& [name, s] : ws.signals)
    if (!signal_names.count(s)) signal_names.emplace(s, name);
  std::map<Schedule, std::string> sched_names;
  for (const auto& [name, r] : ws.schedules)
    if (!sched_names.count(r)) sched_names.emplace(r, name);

  auto signal_name = [&](const Signal& s) -> const std::string& {
    const auto it = signal_names.find(s);
    if (it == signal_names.end())
      throw Error("workspace refers to a signal with no name");
    return it->second;
  };

  for (const auto& [name, sys] : ws.systems) {
    out << "system " << name << " {";
    bool first = true;
    for (const auto& [u, states] : sys.entries()) {
      out << (first ? " " : " ; ") << signal_name(u) << " -> { ";
      bool f2 = true;
      for (const auto& x : states) {
        if (!f2) out << ", ";
        out << signal_name(x);
        f2 = false;
      }
      out << " }";
      first = false;
    }
    out << " }\n";
  }

  for (const auto& [name, pi] : ws.pis) {
    out << "pi " << name << " {";
    bool first = true;
    for (const auto& [key, scheds] : pi.entries) {
      out << (first ? " " : " ; ") << "(" << key.first.to_string() << ", "
          << signal_name(key.second) << ") -> { ";
      bool f2 = true;
      for (const auto& r : scheds) {
        const auto it = sched_names.find(r);
        if (it == sched_names.end())
          throw Error("workspace refers to a schedule with no name");
        if (!f2) out << ", ";
        out << it->second;
        f2 = false;
      }
      out << " }";
      first = false;
    }
    out << " }\n";
  }
  return out.str();
}

// Renders a system (and optionally its derived initial-state and
// computation functions) as a self-contained workspace: referenced signals
// and schedules get stable generated names.
inline std::string emit_system_workspace(
    const std::string& name, const ExplicitSystem& sys,
    const InitialStateFunction* ini = nullptr,
    const ComputationFunction* pi = nullptr) {
  Workspace ws;
  std::map<Signal, std::string> signal_names;
  std::map<Schedule, std::string> sched_names;
  int nu = 0, nx = 0, nr = 0;
  auto name_signal = [&](const Signal& s, bool is_input) {
    const auto it = signal_names.find(s);
    if (it != signal_names.end()) return it->second;
    const std::string sn =
        name + (is_input ? "_u" : "_x") +
        std::to_string(is_input ? nu++ : nx++);
    signal_names.emplace(s, sn);
    ws.signals.emplace(sn, s);
    return sn;
  };
  for (const auto& [u, states] : sys.entries()) {
    name_signal(u, true);
    for (const auto& x : states) name_signal(x, false);
  }
  ws.systems.emplace(name, sys);
  if (pi) {
    for (const auto& [key, scheds] : pi->entries) {
      name_signal(key.second, true);
      for (const auto& r : scheds)
        if (!sched_names.count(r)) {
          const std::string rn = name + "_r" + std::to_string(nr++);
          sched_names.emplace(r, rn);
          ws.schedules.emplace(rn, r);
        }
    }
    ws.pis.emplace(name + "_pi", *pi);
  }
  std::string out = print_workspace(ws);
  if (ini) {
    out += "# initial-state function:\n";
    for (const auto& [u, set] : ini->entries) {
      out += "#   i(" + signal_names.at(u) + ") = {";
      bool first = true;
      for (const auto& mu : set) {
        out += (first ? " " : ", ") + mu.to_string();
        first = false;
      }
      out += " }\n";
    }
  }
  return out;
}

}  // namespace ars
