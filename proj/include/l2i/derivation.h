// Explicit derivation trees of the natural deduction system and their
// rule-by-rule validation.

#ifndef L2I_DERIVATION_H_
#define L2I_DERIVATION_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l2i/syntax.h"

namespace l2i {

// (gamma; delta) =>pol term : type
struct Judgment {
  Basis basis;
  Polarity pol;
  Term term;
  Formula type;
};

// The 26 rules plus the two assumption leaves. `_d` marks dual proof rules.
enum class Rule : std::uint8_t {
  kHypPlus,
  kHypMinus,
  kBotI_d,
  kBotE,
  kTopI,
  kTopE_d,
  kAndI,
  kAndE1,
  kAndE2,
  kAndI_d1,
  kAndI_d2,
  kAndE_d,
  kOrI1,
  kOrI2,
  kOrE,
  kOrI_d,
  kOrE_d1,
  kOrE_d2,
  kImpI,
  kImpE,
  kImpI_d,
  kImpE_d1,
  kImpE_d2,
  kCoImpI,
  kCoImpE1,
  kCoImpE2,
  kCoImpI_d,
  kCoImpE_d,
};

inline constexpr std::size_t kRuleCount = 28;

// Every rule, assumption leaves first, in declaration order.
const std::array<Rule, kRuleCount>& all_rules();
// The 26 inference rules (assumption leaves excluded).
const std::vector<Rule>& inference_rules();

std::string_view rule_name(Rule r);
std::optional<Rule> rule_from_name(std::string_view name);
std::size_t rule_arity(Rule r);
bool is_hypothesis(Rule r);
// Rules whose conclusion polarity is fixed by the rule (everything except
// the abort and case rules, whose conclusion polarity is free).
std::optional<Polarity> rule_polarity(Rule r);

struct Derivation {
  Rule rule;
  Judgment concl;
  std::vector<Derivation> prems;
};

struct DerivationViolation {
  Path path;  // premise indices from the root
  std::string message;
};

// Checks every node against its rule schema. Premise bases may be any
// sub-basis of the conclusion's basis (extended by the discharged assumption
// where the rule discharges one).
std::vector<DerivationViolation> validate(const Derivation& d);

// Assumption leaves have height 0; a rule node is one more than its highest
// premise (so premise-free rules have height 1).
std::size_t height(const Derivation& d);
std::size_t node_count(const Derivation& d);

// Exact structural identity up to alpha-equivalence of the subject terms.
bool alpha_equal(const Derivation& a, const Derivation& b);

}  // namespace l2i

#endif  // L2I_DERIVATION_H_
