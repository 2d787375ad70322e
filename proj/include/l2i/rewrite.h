// One-step beta, permutation and simplification conversions under the
// compatible closure, and fuel-bounded normalization.

#ifndef L2I_REWRITE_H_
#define L2I_REWRITE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l2i/syntax.h"

namespace l2i {

enum class RedexKind { kBeta, kPerm, kSimp };

enum class Clause {
  kBetaApp,
  kBetaPi1,
  kBetaPi2,
  kBetaFst,
  kBetaSnd,
  kBetaCaseInl,
  kBetaCaseInr,
  kPermApp,
  kPermPi1,
  kPermPi2,
  kPermFst,
  kPermSnd,
  kPermCasePlus,   // case-of-case, outer case at +
  kPermCaseMinus,  // case-of-case, outer case at -
  kSimpLeft,       // keep the first branch
  kSimpRight,      // keep the second branch
};

inline constexpr std::size_t kClauseCount = 16;

const std::vector<Clause>& all_clauses();
std::string_view redex_kind_name(RedexKind k);
// "beta-App", "perm-case-plus", "simp-left", ...
std::string_view clause_name(Clause c);
RedexKind clause_kind(Clause c);

struct RedexPosition {
  Path path;
  RedexKind kind;
  Clause detail;

  friend bool operator==(const RedexPosition&, const RedexPosition&) = default;
};

class NotARedex : public Error {
 public:
  using Error::Error;
};

// Clauses whose left-hand side matches t at its root, in priority order
// beta, perm, simp-left, simp-right.
std::vector<Clause> root_redexes(const Term& t);
// The contractum of t under clause c at the root, if c applies.
std::optional<Term> contract(const Term& t, Clause c);

// Every redex of t: nodes in pre-order (leftmost-outermost), and at each node
// the clauses in the order of `root_redexes`.
std::vector<RedexPosition> find_redexes(const Term& t);
// The redex the canonical strategy contracts next: the leftmost-outermost beta
// redex, else the leftmost-outermost permutation, else the leftmost-outermost
// simplification.
std::optional<RedexPosition> first_redex(const Term& t);
bool is_normal(const Term& t);

// Contracts the redex at p.path with clause p.detail; throws NotARedex.
Term step(const Term& t, const RedexPosition& p);

struct TraceStep {
  RedexPosition redex;
  Term after;
};

using Trace = std::vector<TraceStep>;

// "<clause>@<path>  <term-after>"
std::string format_step(const TraceStep& s);

inline constexpr std::size_t kDefaultFuel = 10000;

enum class NormalizeStatus { kNormal, kFuelExhausted };

struct NormalizeResult {
  NormalizeStatus status;
  Term term;    // the normal form, or the last term reached
  Trace trace;  // every step taken, when requested
  std::size_t steps = 0;

  bool normal() const { return status == NormalizeStatus::kNormal; }
};

// Contracts `first_redex` until none is left or `fuel` steps were taken.
NormalizeResult normalize(const Term& t, std::size_t fuel = kDefaultFuel,
                          bool keep_trace = true);

}  // namespace l2i

#endif  // L2I_REWRITE_H_
