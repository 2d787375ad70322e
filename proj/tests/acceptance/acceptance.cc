// Runs every acceptance criterion and prints one PASS/FAIL line for each.
// Usage: acceptance [criterion-number ...]

#include <fmt/core.h>

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "../support.h"
#include "l2i/cli.h"
#include "l2i/duality.h"
#include "l2i/meaning.h"
#include "l2i/rewrite.h"
#include "l2i/typing.h"

namespace l2i {
namespace {

using testing::F;
using testing::T;

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0: none
  std::function<Verdict()> run;
};

GenConfig config(std::uint64_t seed, std::size_t max_height) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.max_height = max_height;
  return cfg;
}

void collect_rules(const Derivation& d, std::map<Rule, std::size_t>& counts) {
  ++counts[d.rule];
  for (const auto& p : d.prems) collect_rules(p, counts);
}

// 1. Golden pair: check, dualize, compare with the hand-encoded dual.
Verdict golden_pair() {
  Verdict v;
  const Derivation first = testing::load("excluded_proof.json");
  const Derivation second = testing::load("excluded_refutation.json");
  std::ostringstream out, err;
  const int code = cli::run({"check", testing::data_path("excluded_proof.json")}, out, err);
  v.require(code == 0 && validate(first).empty(), "first derivation does not validate");
  const Derivation dual = dual_derivation(first);
  v.require(validate(dual).empty(), "dual does not validate");
  v.require(alpha_equal(dual, second), "dual differs from the second derivation");
  v.require(print_formula(dual.concl.type) == "((b -< a) -> bot) -< (b -> a)",
            "dual formula: " + print_formula(dual.concl.type));
  v.require(print_term(dual.concl.term) == "(\\x-. {{p1+(x-), p2-(x-)}+, bot-}-)-",
            "dual end-term: " + print_term(dual.concl.term));
  v.require(height(first) == 4 && height(second) == 4 && height(dual) == 4, "heights");
  v.require(height(dual) <= height(first), "height bound");
  v.detail = fmt::format("heights {} -> {}", height(first), height(dual));
  return v;
}

// 2. Dualization on 10,000 generated derivations of height at most 8.
Verdict dualization() {
  Verdict v;
  std::map<Rule, std::size_t> rules;
  std::size_t equal_height = 0;
  constexpr std::size_t kCount = 10000;
  for (std::size_t i = 0; i < kCount && v.pass; ++i) {
    const Derivation d = gen_derivation(config(1 + i, 8));
    collect_rules(d, rules);
    const Derivation dual = dual_derivation(d);
    const std::string where = fmt::format("seed {}", 1 + i);
    v.require(validate(dual).empty(), where + ": dual does not validate");
    v.require(dual.concl.pol == flip(d.concl.pol), where + ": polarity");
    v.require(dual.concl.basis.gamma.size() == d.concl.basis.delta.size() &&
                  dual.concl.basis == dual_basis(d.concl.basis),
              where + ": basis");
    v.require(dual.concl.term == dual_term(d.concl.term), where + ": term");
    v.require(dual.concl.type == dual_formula(d.concl.type), where + ": type");
    v.require(height(dual) <= height(d), where + ": height grew");
    if (height(dual) == height(d)) ++equal_height;
  }
  std::size_t reached = 0, rarest = SIZE_MAX;
  for (Rule r : inference_rules()) {
    if (rules[r] > 0) ++reached;
    rarest = std::min(rarest, rules[r]);
  }
  v.require(reached == 26, fmt::format("only {} of 26 rules reached", reached));
  v.require(equal_height == kCount, fmt::format("equal height in {} of {}", equal_height, kCount));
  if (v.pass) {
    v.detail = fmt::format("{} derivations, 26/26 rules (rarest {} uses), equal height {}/{}",
                           kCount, rarest, equal_height, kCount);
  }
  return v;
}

// 3. Subject reduction at every redex of 10,000 generated terms.
Verdict subject_reduction() {
  Verdict v;
  std::map<Clause, std::size_t> uses;
  std::size_t steps = 0;
  for (std::size_t i = 0; i < 10000 && v.pass; ++i) {
    const Derivation d = gen_derivation(config(100001 + i, 8));
    const Judgment& j = d.concl;
    for (const auto& r : find_redexes(j.term)) {
      const Term next = step(j.term, r);
      ++uses[r.detail];
      ++steps;
      try {
        check(j.basis, j.pol, next, j.type);
      } catch (const TypeError& e) {
        v.require(false, fmt::format("{} at {} of {}: {}", clause_name(r.detail),
                                     format_path(r.path), print_term(j.term), e.what()));
      }
    }
  }
  std::size_t least = SIZE_MAX;
  for (Clause c : all_clauses()) {
    if (c == Clause::kSimpLeft || c == Clause::kSimpRight) continue;
    v.require(uses[c] >= 100, fmt::format("{} used {} times", clause_name(c), uses[c]));
    least = std::min(least, uses[c]);
  }
  const std::size_t simp = uses[Clause::kSimpLeft] + uses[Clause::kSimpRight];
  v.require(simp >= 100, fmt::format("simplification used {} times", simp));
  if (v.pass) {
    v.detail = fmt::format("{} reducts re-checked; every beta/perm clause >= {}, simp {}",
                           steps, least, simp);
  }
  return v;
}

// 4. Involution of the duality function; commutation with one-step reduction.
Verdict involution() {
  Verdict v;
  Rng rng(4);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  for (int i = 0; i < 10000; ++i) {
    const Formula f = gen_formula(rng, atoms, 6);
    v.require(dual_formula(dual_formula(f)) == f, "formula: " + print_formula(f));
    const Basis b = gen_basis(rng, atoms, 5, 3);
    v.require(dual_basis(dual_basis(b)) == b, "basis: " + print_basis(b));
  }
  std::size_t sampled = 0;
  for (std::size_t i = 0; i < 10000; ++i) {
    const Term t = gen_derivation(config(200001 + i, 7)).concl.term;
    v.require(alpha_eq(dual_term(dual_term(t)), t) && dual_term(dual_term(t)) == t,
              "term: " + print_term(t));
    if (sampled == 5000) continue;
    const Term dt = dual_term(t);
    const auto dual_steps = find_redexes(dt);
    for (const auto& r : find_redexes(t)) {
      if (sampled == 5000) break;
      ++sampled;
      const Term expected = dual_term(step(t, r));
      bool found = false;
      for (const auto& dr : dual_steps) {
        if (dr.kind == r.kind && alpha_eq(step(dt, dr), expected)) {
          found = true;
          break;
        }
      }
      v.require(found, fmt::format("{} at {} of {}", clause_name(r.detail),
                                   format_path(r.path), print_term(t)));
    }
  }
  v.require(sampled == 5000, fmt::format("only {} reductions sampled", sampled));
  if (v.pass) {
    v.detail = "10000 formulas, bases and terms; 5000 reductions commute";
  }
  return v;
}

// 5. Substitution lemma, for assumption and counterassumption variables.
Verdict substitution_lemma() {
  Verdict v;
  std::map<Polarity, std::size_t> instances;
  Rng rng(5);
  GenConfig other = config(0, 4);
  other.hypothesis_prefix = "k";
  for (std::uint64_t seed = 300001; instances[Polarity::kPlus] < 2000 ||
                                    instances[Polarity::kMinus] < 2000;
       ++seed) {
    const Derivation d = gen_derivation(config(seed, 6));
    const Judgment& j = d.concl;
    std::vector<Variable> candidates;
    for (const auto& x : free_vars(j.term)) {
      if (instances[x.pol] < 2000) candidates.push_back(x);
    }
    if (candidates.empty()) continue;
    const Variable x = candidates[rng.below(candidates.size())];
    const Formula a = *j.basis.lookup(x);
    const Derivation s = gen_derivation_for(other, rng, x.pol, a);
    // Hypotheses of the lemma.
    Basis without = j.basis;
    without.side(x.pol).erase(x.name);
    const Basis with_x = without.with(x, a);
    try {
      check(with_x, j.pol, j.term, j.type);
      check(s.concl.basis, x.pol, s.concl.term, a);
    } catch (const TypeError& e) {
      v.require(false, fmt::format("hypothesis fails: {}", e.what()));
      break;
    }
    Basis joint = without;
    for (const auto& [n, f] : s.concl.basis.gamma) joint.gamma.emplace(n, f);
    for (const auto& [n, f] : s.concl.basis.delta) joint.delta.emplace(n, f);
    const Term substituted = substitute(j.term, x, s.concl.term);
    try {
      check(joint, j.pol, substituted, j.type);
    } catch (const TypeError& e) {
      v.require(false, fmt::format("{}[{}/{}]: {}", print_term(j.term), print_term(s.concl.term),
                                   to_string(x), e.what()));
      break;
    }
    ++instances[x.pol];
  }
  if (v.pass) {
    v.detail = fmt::format("{} assumption and {} counterassumption instances",
                           instances[Polarity::kPlus], instances[Polarity::kMinus]);
  }
  return v;
}

// 6. Meaning of the six identity derivations.
Verdict meaning_matrix() {
  Verdict v;
  const std::vector<std::string> plus{"identity_plus_x_rho.json", "identity_plus_x_sigma.json",
                                      "identity_plus_y_sigma.json"};
  const std::vector<std::string> minus{"identity_minus_x_rho.json",
                                       "identity_minus_x_sigma.json",
                                       "identity_minus_y_sigma.json"};
  auto same_side = [&](const std::vector<std::string>& side) {
    for (const auto& a : side) {
      for (const auto& b : side) {
        const Derivation da = testing::load(a), db = testing::load(b);
        v.require(synonymous(da, db), a + " / " + b + " not synonymous");
        v.require(compare_denotations(da.concl.term, db.concl.term, false) ==
                      Identity::kIdentical,
                  a + " / " + b + " not identical");
      }
    }
  };
  same_side(plus);
  same_side(minus);
  for (const auto& a : plus) {
    for (const auto& b : minus) {
      const Derivation da = testing::load(a), db = testing::load(b);
      v.require(!synonymous(da, db), a + " / " + b + " synonymous");
      v.require(compare_denotations(da.concl.term, db.concl.term, true) ==
                    Identity::kIdenticalModuloDuality,
                a + " / " + b + " not identical modulo duality");
      v.require(compare_denotations(da.concl.term, db.concl.term, false) == Identity::kDistinct,
                a + " / " + b + " not distinct");
    }
  }
  if (v.pass) v.detail = "6x6 matrix reproduced";
  return v;
}

// 7. Principal types.
Verdict principal_types() {
  Verdict v;
  const Principal plus = infer_principal(T("(\\x+. x+)+"));
  v.require(plus.basis.empty() && plus.pol == Polarity::kPlus &&
                scheme_key(plus.type) == scheme_key(F("?A -> ?A")),
            "(\\x+. x+)+ : " + print_formula(plus.type));
  const Principal minus = infer_principal(T("(\\x-. x-)-"));
  v.require(minus.basis.empty() && minus.pol == Polarity::kMinus &&
                scheme_key(minus.type) == scheme_key(F("?A -< ?A")),
            "(\\x-. x-)- : " + print_formula(minus.type));
  try {
    infer_principal(T("app+(x+, x+)"));
    v.require(false, "app+(x+, x+) typed");
  } catch (const TypeError& e) {
    v.require(e.reason() == UnifyFailure::kOccursCheck, "app+(x+, x+) not an occurs-check failure");
  }
  if (v.pass) {
    v.detail = fmt::format("{} ; {} ; occurs check", print_formula(plus.type),
                           print_formula(minus.type));
  }
  return v;
}

// 8. Canonical normal forms against every reduction path on small terms.
Verdict confluence_probe() {
  Verdict v;
  constexpr std::size_t kSamples = 5000;
  constexpr std::size_t kMaxSize = 12;
  std::unordered_set<std::string> seen;
  std::size_t samples = 0, unique = 0, several = 0, incomplete = 0, with_redex = 0;
  std::string example;
  for (std::uint64_t seed = 400001; samples < kSamples && seed < 2000000; ++seed) {
    const Term t = gen_derivation(config(seed, 1 + seed % 5)).concl.term;
    if (t.size() > kMaxSize || !seen.insert(alpha_key(t)).second) continue;
    ++samples;
    if (!is_normal(t)) ++with_redex;
    const NormalizeResult canonical = normalize(t);
    const OracleResult oracle = oracle_reduce_all(t, 64);
    if (!oracle.complete) ++incomplete;
    bool member = false;
    for (const auto& n : oracle.normal_forms) member = member || alpha_eq(n, canonical.term);
    v.require(canonical.normal() && member,
              "canonical normal form not reached by the oracle for " + print_term(t));
    if (oracle.normal_forms.size() == 1) {
      ++unique;
    } else {
      ++several;
      if (example.empty()) {
        example = print_term(t) + " ->";
        for (const auto& n : oracle.normal_forms) example += " " + print_term(n);
      }
    }
  }
  v.require(samples == kSamples, fmt::format("only {} distinct small terms", samples));
  v.detail = fmt::format("{} terms ({} with redexes), canonical form always reached; {} with "
                         "a unique normal form, {} with several, {} searches cut off",
                         samples, with_redex, unique, several, incomplete);
  if (several > 0) v.notes.push_back("finding: several normal forms, e.g. " + example);
  return v;
}

// 9. Fuel adequacy for generated terms of size at most 60.
Verdict fuel_adequacy() {
  Verdict v;
  std::size_t samples = 0, max_steps = 0, redexes = 0;
  for (std::uint64_t seed = 500001; seed < 520001; ++seed) {
    const Term t = gen_derivation(config(seed, 8)).concl.term;
    if (t.size() > 60) continue;
    ++samples;
    const NormalizeResult r = normalize(t, kDefaultFuel, false);
    v.require(r.normal(), "fuel exhausted on " + print_term(t));
    max_steps = std::max(max_steps, r.steps);
    if (r.steps > 0) ++redexes;
  }
  if (v.pass) {
    v.detail = fmt::format("{} terms ({} reducible) normalized, at most {} steps", samples,
                           redexes, max_steps);
  }
  return v;
}

}  // namespace
}  // namespace l2i

int main(int argc, char** argv) {
  using namespace l2i;
  const std::vector<Criterion> criteria = {
      {1, "golden pair: check, dualize, heights", 1, golden_pair},
      {2, "dualization theorem on 10000 derivations", 60, dualization},
      {3, "subject reduction on 10000 terms", 0, subject_reduction},
      {4, "involution and commutation with reduction", 0, involution},
      {5, "substitution lemma, 2000 instances per form", 0, substitution_lemma},
      {6, "meaning matrix of the identity derivations", 0, meaning_matrix},
      {7, "principal types and occurs check", 0, principal_types},
      {8, "confluence probe on terms of size <= 12", 300, confluence_probe},
      {9, "fuel adequacy on terms of size <= 60", 0, fuel_adequacy},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && s > c.time_limit_s) {
      v.pass = false;
      v.detail += fmt::format(" (over the {} s limit)", c.time_limit_s);
    }
    fmt::print("[{}] criterion {}: {} -- {} ({:.2f} s)\n", v.pass ? "PASS" : "FAIL", c.id,
               c.title, v.detail, s);
    for (const auto& n : v.notes) fmt::print("       {}\n", n);
    std::fflush(stdout);
    if (!v.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
