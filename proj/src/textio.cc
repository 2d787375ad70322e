#include "l2i/textio.h"

#include <fmt/core.h>

#include <cctype>
#include <utility>

namespace l2i {

SyntaxError::SyntaxError(const std::string& message, SourceSpan span,
                         std::vector<std::string> expected)
    : Error(fmt::format("{}:{}: {}", span.line + 1, span.column + 1, message)),
      span_(span),
      expected_(std::move(expected)) {}

PolarityError::PolarityError(const std::string& message, SourceSpan span)
    : Error(fmt::format("{}:{}: {}", span.line + 1, span.column + 1, message)),
      span_(span) {}

namespace {

enum class Tok {
  kIdent,
  kMeta,
  kPlus,
  kMinus,
  kArrow,
  kCoArrow,
  kAmp,
  kBar,
  kLParen,
  kRParen,
  kLAngle,
  kRAngle,
  kComma,
  kLBrace,
  kRBrace,
  kDot,
  kBackslash,
  kEnd,
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kMeta: return "metavariable";
    case Tok::kPlus: return "'+'";
    case Tok::kMinus: return "'-'";
    case Tok::kArrow: return "'->'";
    case Tok::kCoArrow: return "'-<'";
    case Tok::kAmp: return "'&'";
    case Tok::kBar: return "'|'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLAngle: return "'<'";
    case Tok::kRAngle: return "'>'";
    case Tok::kComma: return "','";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kDot: return "'.'";
    case Tok::kBackslash: return "'\\'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

struct Token {
  Tok type;
  std::string text;
  SourceSpan span;
};

enum class Mode { kFormula, kTerm };

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  Lexer(std::string_view text, Mode mode) : text_(text), mode_(mode) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const Position start = pos_;
      if (at_end()) {
        out.push_back({Tok::kEnd, "", span_from(start)});
        return out;
      }
      const char c = peek();
      if (ident_start(c)) {
        std::string name;
        while (!at_end() && ident_char(peek())) name += advance();
        out.push_back({Tok::kIdent, std::move(name), span_from(start)});
        continue;
      }
      if (c == '?' && mode_ == Mode::kFormula) {
        advance();
        std::string name;
        while (!at_end() && ident_char(peek())) name += advance();
        if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
          throw SyntaxError("metavariable name expected after '?'", span_from(start),
                            {"metavariable"});
        }
        out.push_back({Tok::kMeta, std::move(name), span_from(start)});
        continue;
      }
      if (c == '-' && mode_ == Mode::kFormula) {
        advance();
        if (!at_end() && peek() == '>') {
          advance();
          out.push_back({Tok::kArrow, "->", span_from(start)});
        } else if (!at_end() && peek() == '<') {
          advance();
          out.push_back({Tok::kCoArrow, "-<", span_from(start)});
        } else {
          throw SyntaxError("'-' must start '->' or '-<'", span_from(start),
                            {"'->'", "'-<'"});
        }
        continue;
      }
      Tok type;
      switch (c) {
        case '+': type = Tok::kPlus; break;
        case '-': type = Tok::kMinus; break;
        case '&': type = Tok::kAmp; break;
        case '|': type = Tok::kBar; break;
        case '(': type = Tok::kLParen; break;
        case ')': type = Tok::kRParen; break;
        case '<': type = Tok::kLAngle; break;
        case '>': type = Tok::kRAngle; break;
        case ',': type = Tok::kComma; break;
        case '{': type = Tok::kLBrace; break;
        case '}': type = Tok::kRBrace; break;
        case '.': type = Tok::kDot; break;
        case '\\': type = Tok::kBackslash; break;
        default: {
          advance_code_point();
          throw SyntaxError("unexpected character", span_from(start), {});
        }
      }
      std::string s(1, advance());
      out.push_back({type, std::move(s), span_from(start)});
    }
  }

 private:
  struct Position {
    std::size_t byte = 0;
    std::size_t offset = 0;
    std::size_t line = 0;
    std::size_t column = 0;
  };

  bool at_end() const { return pos_.byte >= text_.size(); }
  char peek() const { return text_[pos_.byte]; }

  char advance() {
    const char c = text_[pos_.byte++];
    ++pos_.offset;
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 0;
    } else {
      ++pos_.column;
    }
    return c;
  }

  // Consumes one UTF-8 encoded scalar value.
  void advance_code_point() {
    advance();
    while (!at_end() && (static_cast<unsigned char>(peek()) & 0xC0) == 0x80) {
      ++pos_.byte;
    }
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  SourceSpan span_from(const Position& start) const {
    return {start.offset, pos_.offset, start.line, start.column};
  }

  std::string_view text_;
  Mode mode_;
  Position pos_;
};

class Parser {
 public:
  Parser(std::string_view text, Mode mode) : tokens_(Lexer(text, mode).run()) {}

 protected:
  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok t) const { return peek().type == t; }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  const Token& previous() const { return tokens_[pos_ == 0 ? 0 : pos_ - 1]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    const Token& t = peek();
    msg += ", found " + (t.type == Tok::kEnd ? describe(Tok::kEnd) : "'" + t.text + "'");
    throw SyntaxError(msg, t.span, std::move(expected));
  }

  const Token& expect(Tok t) {
    if (!at(t)) fail({describe(t)});
    return advance();
  }

  void expect_end() {
    if (!at(Tok::kEnd)) fail({describe(Tok::kEnd)});
  }

  SourceSpan span_since(const SourceSpan& start) const {
    const SourceSpan& last = previous().span;
    return {start.start, last.end, start.line, start.column};
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

class FormulaParser : Parser {
 public:
  explicit FormulaParser(std::string_view text) : Parser(text, Mode::kFormula) {}

  Formula parse() {
    Formula f = arrows();
    expect_end();
    return f;
  }

 private:
  Formula arrows() {
    Formula first = disjunctions();
    if (!at(Tok::kArrow) && !at(Tok::kCoArrow)) return first;
    const Tok op = peek().type;
    std::vector<Formula> operands{first};
    while (at(Tok::kArrow) || at(Tok::kCoArrow)) {
      if (!at(op)) {
        throw SyntaxError("'->' and '-<' cannot be mixed without parentheses",
                          peek().span, {describe(op)});
      }
      advance();
      operands.push_back(disjunctions());
    }
    if (op == Tok::kArrow) {
      Formula acc = operands.back();
      for (std::size_t i = operands.size() - 1; i-- > 0;) {
        acc = Formula::imp(operands[i], acc);
      }
      return acc;
    }
    Formula acc = operands.front();
    for (std::size_t i = 1; i < operands.size(); ++i) {
      acc = Formula::coimp(acc, operands[i]);
    }
    return acc;
  }

  Formula disjunctions() {
    Formula acc = conjunctions();
    while (at(Tok::kBar)) {
      advance();
      acc = Formula::disj(acc, conjunctions());
    }
    return acc;
  }

  Formula conjunctions() {
    Formula acc = primary();
    while (at(Tok::kAmp)) {
      advance();
      acc = Formula::conj(acc, primary());
    }
    return acc;
  }

  Formula primary() {
    if (at(Tok::kLParen)) {
      advance();
      Formula f = arrows();
      expect(Tok::kRParen);
      return f;
    }
    if (at(Tok::kMeta)) return Formula::meta(advance().text);
    if (at(Tok::kIdent)) {
      const Token& t = peek();
      if (t.text == "bot") {
        advance();
        return Formula::falsum();
      }
      if (t.text == "top") {
        advance();
        return Formula::verum();
      }
      if (!std::islower(static_cast<unsigned char>(t.text[0]))) {
        throw SyntaxError("atoms start with a lowercase letter", t.span, {"atom"});
      }
      return Formula::atom(advance().text);
    }
    fail({"atom", "'bot'", "'top'", "metavariable", "'('"});
  }
};

class TermParser : Parser {
 public:
  explicit TermParser(std::string_view text) : Parser(text, Mode::kTerm) {}

  Term parse() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  Polarity polarity() {
    if (at(Tok::kPlus)) {
      advance();
      return Polarity::kPlus;
    }
    if (at(Tok::kMinus)) {
      advance();
      return Polarity::kMinus;
    }
    fail({"'+'", "'-'"});
  }

  // Prefix forms may repeat their polarity after the closing parenthesis,
  // as in "app+(f+, a+)+"; the repetition must agree.
  void optional_trailing_polarity(Polarity p) {
    if (!at(Tok::kPlus) && !at(Tok::kMinus)) return;
    const Token& t = peek();
    if (polarity() != p) {
      throw PolarityError("trailing polarity disagrees with the constructor's", t.span);
    }
  }

  Variable binder() {
    if (!at(Tok::kIdent)) fail({"variable"});
    const Token& t = peek();
    if (is_reserved_word(t.text)) {
      throw SyntaxError("'" + t.text + "' is reserved", t.span, {"variable"});
    }
    std::string name = advance().text;
    return {std::move(name), polarity()};
  }

  Term checked(Term t, const SourceSpan& start) {
    if (auto v = local_polarity_violation(t)) throw PolarityError(*v, span_since(start));
    return t;
  }

  Term unary(const std::string& keyword, const SourceSpan& start) {
    const Polarity p = polarity();
    expect(Tok::kLParen);
    Term body = term();
    expect(Tok::kRParen);
    optional_trailing_polarity(p);
    Term t = keyword == "abort" ? Term::abort(body, p)
             : keyword == "fst" ? Term::fst(body, p)
             : keyword == "snd" ? Term::snd(body, p)
             : keyword == "inl" ? Term::inl(body, p)
             : keyword == "inr" ? Term::inr(body, p)
             : keyword == "p1"  ? Term::pi1(body, p)
                                : Term::pi2(body, p);
    return checked(t, start);
  }

  Term term() {
    const SourceSpan start = peek().span;
    switch (peek().type) {
      case Tok::kIdent: {
        const std::string word = advance().text;
        if (word == "top" || word == "bot") {
          const Polarity p = polarity();
          const Polarity want = word == "top" ? Polarity::kPlus : Polarity::kMinus;
          if (p != want) {
            throw PolarityError(fmt::format("{} must be written {}{}", word, word,
                                            polarity_char(want)),
                                span_since(start));
          }
          return word == "top" ? Term::top() : Term::bot();
        }
        if (word == "abort" || word == "fst" || word == "snd" || word == "inl" ||
            word == "inr" || word == "p1" || word == "p2") {
          return unary(word, start);
        }
        if (word == "app") {
          const Polarity p = polarity();
          expect(Tok::kLParen);
          Term fun = term();
          expect(Tok::kComma);
          Term arg = term();
          expect(Tok::kRParen);
          optional_trailing_polarity(p);
          return checked(Term::app(fun, arg, p), start);
        }
        if (word == "case") {
          Term scrutinee = term();
          expect(Tok::kLBrace);
          Variable x = binder();
          expect(Tok::kDot);
          Term left = term();
          expect(Tok::kBar);
          Variable y = binder();
          expect(Tok::kDot);
          Term right = term();
          expect(Tok::kRBrace);
          const Polarity p = polarity();
          return checked(Term::case_of(scrutinee, x, left, y, right, p), start);
        }
        return Term::var(word, polarity());
      }
      case Tok::kLParen: {
        advance();
        if (at(Tok::kBackslash)) {
          advance();
          Variable x = binder();
          expect(Tok::kDot);
          Term body = term();
          expect(Tok::kRParen);
          const Polarity p = polarity();
          return checked(Term::lam(x, body, p), start);
        }
        Term inner = term();
        expect(Tok::kRParen);
        return inner;
      }
      case Tok::kLAngle: {
        advance();
        Term l = term();
        expect(Tok::kComma);
        Term r = term();
        expect(Tok::kRAngle);
        const Polarity p = polarity();
        return checked(Term::pair(l, r, p), start);
      }
      case Tok::kLBrace: {
        advance();
        Term pos = term();
        expect(Tok::kComma);
        Term neg = term();
        expect(Tok::kRBrace);
        const Polarity p = polarity();
        return checked(Term::mpair(pos, neg, p), start);
      }
      default:
        fail({"identifier", "'('", "'<'", "'{'"});
    }
  }
};

// Binding strength for printing: higher binds tighter.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAnd: return 3;
    case Formula::Kind::kOr: return 2;
    case Formula::Kind::kImp:
    case Formula::Kind::kCoImp: return 1;
    default: return 4;
  }
}

void print_formula_to(const Formula& f, std::string& out);

void print_operand(const Formula& f, bool parens, std::string& out) {
  if (parens) out += '(';
  print_formula_to(f, out);
  if (parens) out += ')';
}

void print_formula_to(const Formula& f, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kAtom: out += f.name(); return;
    case K::kMeta: out += '?'; out += f.name(); return;
    case K::kFalsum: out += "bot"; return;
    case K::kVerum: out += "top"; return;
    case K::kAnd:
    case K::kOr: {
      const int p = precedence(f);
      print_operand(f.left(), precedence(f.left()) < p, out);
      out += f.is(K::kAnd) ? " & " : " | ";
      print_operand(f.right(), precedence(f.right()) <= p, out);
      return;
    }
    case K::kImp:
      print_operand(f.left(), precedence(f.left()) <= 1, out);
      out += " -> ";
      print_operand(f.right(), f.right().is(K::kCoImp), out);
      return;
    case K::kCoImp:
      print_operand(f.left(), f.left().is(K::kImp), out);
      out += " -< ";
      print_operand(f.right(), precedence(f.right()) <= 1, out);
      return;
  }
}

void print_term_to(const Term& t, std::string& out) {
  using K = Term::Kind;
  const char pol = polarity_char(t.polarity());
  switch (t.kind()) {
    case K::kVar:
      out += t.variable().name;
      out += pol;
      return;
    case K::kTop: out += "top"; out += pol; return;
    case K::kBot: out += "bot"; out += pol; return;
    case K::kAbort:
    case K::kFst:
    case K::kSnd:
    case K::kInl:
    case K::kInr:
    case K::kPi1:
    case K::kPi2:
      out += kind_name(t.kind());
      out += pol;
      out += '(';
      print_term_to(t.child(0), out);
      out += ')';
      return;
    case K::kApp:
      out += "app";
      out += pol;
      out += '(';
      print_term_to(t.child(0), out);
      out += ", ";
      print_term_to(t.child(1), out);
      out += ')';
      return;
    case K::kPair:
    case K::kMPair:
      out += t.is(K::kPair) ? '<' : '{';
      print_term_to(t.child(0), out);
      out += ", ";
      print_term_to(t.child(1), out);
      out += t.is(K::kPair) ? '>' : '}';
      out += pol;
      return;
    case K::kLam:
      out += "(\\";
      out += to_string(t.binder(0));
      out += ". ";
      print_term_to(t.child(0), out);
      out += ')';
      out += pol;
      return;
    case K::kCase:
      out += "case ";
      print_term_to(t.child(0), out);
      out += " {";
      out += to_string(t.binder(0));
      out += ". ";
      print_term_to(t.child(1), out);
      out += " | ";
      out += to_string(t.binder(1));
      out += ". ";
      print_term_to(t.child(2), out);
      out += '}';
      out += pol;
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::string out;
  print_formula_to(f, out);
  return out;
}

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

std::string print_basis_side(const Basis& b, Polarity p) {
  std::string out;
  for (const auto& [name, f] : b.side(p)) {
    if (!out.empty()) out += ", ";
    out += name;
    out += polarity_char(p);
    out += ": ";
    out += print_formula(f);
  }
  return out;
}

std::string print_basis(const Basis& b) {
  std::string delta = print_basis_side(b, Polarity::kMinus);
  return "(" + print_basis_side(b, Polarity::kPlus) + ";" +
         (delta.empty() ? "" : " " + delta) + ")";
}

std::string print_judgment(const Judgment& j) {
  return fmt::format("{} =>{} {} : {}", print_basis(j.basis), polarity_char(j.pol),
                     print_term(j.term), print_formula(j.type));
}

}  // namespace l2i
