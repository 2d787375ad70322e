// Random generation of valid derivations, formulas and bases, and a
// brute-force reduction oracle exploring every redex.

#ifndef L2I_TESTKIT_H_
#define L2I_TESTKIT_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "l2i/derivation.h"
#include "l2i/syntax.h"

namespace l2i {

// Deterministic source of randomness; `split` derives an independent stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::size_t below(std::size_t n);
  // Uniform in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }
  Rng split();

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  std::uint64_t seed = 0;
  std::size_t max_height = 5;
  std::vector<std::string> atom_pool{"a", "b", "c"};
  // Missing rules weigh 1; zero disables a rule.
  std::map<Rule, double> rule_weights;
  // Leaves that cannot be closed by a discharged assumption become free
  // hypotheses of the derivation's basis.
  bool allow_free_hypotheses = true;
  // Probability of closing a goal early with a leaf when one is available.
  double leaf_probability = 0.3;
  // Nesting depth of invented formulas (premise types not fixed by the goal).
  std::size_t invented_depth = 2;
  // Free hypotheses are named <prefix>1, <prefix>2, ...
  std::string hypothesis_prefix = "h";

  double weight(Rule r) const;
  // Throws std::invalid_argument unless atom_pool is non-empty and some
  // premise-free rule has positive weight.
  void check() const;
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

// A derivation that validates, of height at most cfg.max_height; identical
// for identical configurations.
Derivation gen_derivation(const GenConfig& cfg);
// Same, drawing from an existing stream.
Derivation gen_derivation(const GenConfig& cfg, Rng& rng);
// A derivation concluding `goal` at polarity `pol`.
Derivation gen_derivation_for(const GenConfig& cfg, Rng& rng, Polarity pol,
                              const Formula& goal);

Formula gen_formula(Rng& rng, const std::vector<std::string>& atoms, std::size_t max_depth);
Basis gen_basis(Rng& rng, const std::vector<std::string>& atoms, std::size_t max_entries,
                std::size_t max_depth);

struct OracleResult {
  std::vector<Term> reachable;     // alpha-deduplicated, breadth-first order
  std::vector<Term> normal_forms;  // the reachable terms without redexes
  bool complete = true;            // false when the depth or size bound cut the search
};

// Breadth-first closure of t under every one-step conversion at every
// position, up to `max_depth` steps and `max_terms` distinct terms.
OracleResult oracle_reduce_all(const Term& t, std::size_t max_depth,
                               std::size_t max_terms = 20000);

}  // namespace l2i

#endif  // L2I_TESTKIT_H_
