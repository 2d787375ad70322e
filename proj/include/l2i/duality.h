// The duality function on formulas, terms, bases and derivations.

#ifndef L2I_DUALITY_H_
#define L2I_DUALITY_H_

#include <vector>

#include "l2i/derivation.h"
#include "l2i/rewrite.h"
#include "l2i/syntax.h"

namespace l2i {

// Atoms and metavariables are fixed; top/bot, &/| swap; a -> b becomes
// d(b) -< d(a) and b -< a becomes d(a) -> d(b).
Formula dual_formula(const Formula& a);

// Variable names are kept and every polarity flips; mixed pairs swap their
// components and p1/p2 swap.
Term dual_term(const Term& t);

// (gamma; delta) becomes (d(delta); d(gamma)).
Basis dual_basis(const Basis& b);

// The rule the dual derivation uses at a node concluded by r.
Rule dual_rule(Rule r);

// The clause contracting the dual of a redex of clause c.
Clause dual_clause(Clause c);

// Position in dual_term(t) of the subterm at `path` in t (mixed pairs swap
// their child indices).
Path dual_path(const Term& t, const Path& path);

RedexPosition dual_redex(const Term& t, const RedexPosition& p);

class InvalidDerivation : public Error {
 public:
  InvalidDerivation(const std::string& message, std::vector<DerivationViolation> violations)
      : Error(message), violations_(std::move(violations)) {}

  const std::vector<DerivationViolation>& violations() const { return violations_; }

 private:
  std::vector<DerivationViolation> violations_;
};

// Maps a valid derivation node by node onto the dual rules. Premises of the
// mixed-pair rules swap order; all others keep it. Throws InvalidDerivation
// when d does not validate.
Derivation dual_derivation(const Derivation& d);

}  // namespace l2i

#endif  // L2I_DUALITY_H_
