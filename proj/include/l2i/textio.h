// Concrete ASCII syntax for formulas, terms, bases and derivation files.
//
// Formulas:  F ::= atom | bot | top | F & F | F | F | F -> F | F -< F | (F)
//   precedence & > | > {->, -<}; & and | associate to the left, -> to the
//   right, -< to the left; -> and -< never mix without parentheses.
//   Metavariables are written ?A, ?B1, ...
// Terms: every constructor carries its polarity, e.g. "(\x+. x+)+",
//   "{top+, bot-}-", "case z- {x-. u- | y-. v-}-", "app+(f+, a+)".

#ifndef L2I_TEXTIO_H_
#define L2I_TEXTIO_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "l2i/derivation.h"
#include "l2i/syntax.h"

namespace l2i {

// Offsets count Unicode scalar values; line and column are 0-based.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 0;
  std::size_t column = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, SourceSpan span,
              std::vector<std::string> expected);

  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::vector<std::string> expected_;
};

class PolarityError : public Error {
 public:
  PolarityError(const std::string& message, SourceSpan span);

  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);

std::string print_formula(const Formula& f);
std::string print_term(const Term& t);

// "x+: a, y+: b -> c" style listing of one side of a basis.
std::string print_basis_side(const Basis& b, Polarity p);
// "(x+: a; y-: b)", "(;)" when empty.
std::string print_basis(const Basis& b);
std::string print_judgment(const Judgment& j);

// Raised for derivation files that are not well-formed JSON or do not follow
// the node schema.
class FormatError : public Error {
 public:
  using Error::Error;
};

Derivation derivation_from_json(std::string_view text);
std::string derivation_to_json(const Derivation& d, int indent = 2);

}  // namespace l2i

#endif  // L2I_TEXTIO_H_
