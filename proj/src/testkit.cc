#include "l2i/testkit.h"

#include <fmt/core.h>

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "l2i/rewrite.h"
#include "l2i/textio.h"

namespace l2i {

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Rng Rng::split() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

double GenConfig::weight(Rule r) const {
  auto it = rule_weights.find(r);
  return it == rule_weights.end() ? 1.0 : it->second;
}

void GenConfig::check() const {
  if (atom_pool.empty()) throw std::invalid_argument("atom_pool must not be empty");
  for (const auto& [rule, w] : rule_weights) {
    if (w < 0) throw std::invalid_argument("rule weights must be non-negative");
  }
  const bool leaf = weight(Rule::kTopI) > 0 || weight(Rule::kBotI_d) > 0 ||
                    weight(Rule::kHypPlus) > 0 || weight(Rule::kHypMinus) > 0;
  if (!leaf) throw std::invalid_argument("some premise-free rule needs a positive weight");
  if (hypothesis_prefix.empty() || hypothesis_prefix[0] < 'a' || hypothesis_prefix[0] > 'z') {
    throw std::invalid_argument("hypothesis_prefix must start with a lowercase letter");
  }
}

Formula gen_formula(Rng& rng, const std::vector<std::string>& atoms, std::size_t max_depth) {
  if (max_depth == 0 || rng.chance(0.3)) {
    const double r = rng.unit();
    if (r < 0.1) return Formula::verum();
    if (r < 0.2) return Formula::falsum();
    return Formula::atom(atoms[rng.below(atoms.size())]);
  }
  static constexpr Formula::Kind kinds[] = {Formula::Kind::kAnd, Formula::Kind::kOr,
                                            Formula::Kind::kImp, Formula::Kind::kCoImp};
  const Formula::Kind k = kinds[rng.below(4)];
  Formula l = gen_formula(rng, atoms, max_depth - 1);
  Formula r = gen_formula(rng, atoms, max_depth - 1);
  return Formula::binary(k, std::move(l), std::move(r));
}

Basis gen_basis(Rng& rng, const std::vector<std::string>& atoms, std::size_t max_entries,
                std::size_t max_depth) {
  static const std::vector<std::string> names = {"x", "y", "z", "u", "v", "w"};
  Basis b;
  const std::size_t n = rng.below(max_entries + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const Polarity p = rng.chance(0.5) ? Polarity::kPlus : Polarity::kMinus;
    b.side(p).insert_or_assign(names[rng.below(names.size())],
                               gen_formula(rng, atoms, max_depth));
  }
  return b;
}

namespace {

using FK = Formula::Kind;
constexpr auto kPlus = Polarity::kPlus;
constexpr auto kMinus = Polarity::kMinus;

struct Failed {};

const std::vector<std::string> kBinderNames = {"x", "y", "z", "u", "v", "w"};

class Generator {
 public:
  Generator(const GenConfig& cfg, Rng& rng) : cfg_(cfg), rng_(rng) {}

  Derivation run() {
    const Polarity p = rng_.chance(0.5) ? kPlus : kMinus;
    return run(p, gen_formula(rng_, cfg_.atom_pool, cfg_.invented_depth + 1));
  }

  Derivation run(Polarity p, const Formula& goal) {
    Basis env;
    Derivation d = gen(p, goal, env, cfg_.max_height);
    add_pool(d);
    return d;
  }

 private:
  Formula invent() { return gen_formula(rng_, cfg_.atom_pool, cfg_.invented_depth); }

  Variable binder(Polarity p) { return {kBinderNames[rng_.below(kBinderNames.size())], p}; }

  void add_pool(Derivation& d) const {
    for (const auto& [name, f] : pool_.gamma) d.concl.basis.gamma.emplace(name, f);
    for (const auto& [name, f] : pool_.delta) d.concl.basis.delta.emplace(name, f);
    for (auto& p : d.prems) add_pool(p);
  }

  Derivation leaf(Rule r, Polarity p, const Term& t, const Formula& a, const Basis& env) {
    return Derivation{r, Judgment{env, p, t, a}, {}};
  }

  // Variables of polarity p assumed with type a, from the scope or the pool.
  std::vector<std::string> hypotheses(Polarity p, const Formula& a, const Basis& env) const {
    std::vector<std::string> out;
    for (const auto& [name, f] : env.side(p)) {
      if (f == a) out.push_back(name);
    }
    for (const auto& [name, f] : pool_.side(p)) {
      if (f == a && !env.side(p).contains(name)) out.push_back(name);
    }
    return out;
  }

  Derivation free_hypothesis(Polarity p, const Formula& a, const Basis& env) {
    if (!cfg_.allow_free_hypotheses) throw Failed{};
    std::string name = fmt::format("{}{}", cfg_.hypothesis_prefix, ++hyp_counter_);
    pool_.side(p).emplace(name, a);
    return leaf(p == kPlus ? Rule::kHypPlus : Rule::kHypMinus, p, Term::var(name, p), a, env);
  }

  struct Choice {
    Rule rule;
    double weight;
  };

  Derivation gen(Polarity p, const Formula& a, Basis& env, std::size_t budget) {
    const Rule hyp_rule = p == kPlus ? Rule::kHypPlus : Rule::kHypMinus;
    const auto hyps = hypotheses(p, a, env);

    std::vector<Choice> leaves;
    if (!hyps.empty()) leaves.push_back({hyp_rule, cfg_.weight(hyp_rule)});
    if (budget >= 1) {
      if (p == kPlus && a.is(FK::kVerum)) leaves.push_back({Rule::kTopI, cfg_.weight(Rule::kTopI)});
      if (p == kMinus && a.is(FK::kFalsum)) {
        leaves.push_back({Rule::kBotI_d, cfg_.weight(Rule::kBotI_d)});
      }
    }
    std::vector<Choice> inner;
    if (budget >= 1) inner = rules_for(p, a);

    auto positive = [](std::vector<Choice> v) {
      std::erase_if(v, [](const Choice& c) { return c.weight <= 0; });
      return v;
    };
    const bool want_leaf = budget == 0 || rng_.chance(cfg_.leaf_probability);
    std::vector<Choice> pool;
    if (want_leaf) {
      pool = positive(leaves);
      if (pool.empty() && !cfg_.allow_free_hypotheses) pool = positive(inner);
    } else {
      pool = positive(inner);
      for (const auto& c : positive(leaves)) pool.push_back(c);
    }
    if (pool.empty()) return free_hypothesis(p, a, env);
    double total = 0;
    for (const auto& c : pool) total += c.weight;
    double pick = rng_.unit() * total;
    Rule rule = pool.back().rule;
    for (const auto& c : pool) {
      if (pick < c.weight) {
        rule = c.rule;
        break;
      }
      pick -= c.weight;
    }
    if (rule == hyp_rule) {
      const std::string& name = hyps[rng_.below(hyps.size())];
      return leaf(rule, p, Term::var(name, p), a, env);
    }
    return apply(rule, p, a, env, budget - 1);
  }

  std::vector<Choice> rules_for(Polarity p, const Formula& a) const {
    std::vector<Rule> rules = {Rule::kBotE, Rule::kTopE_d, Rule::kOrE, Rule::kAndE_d};
    if (p == kPlus) {
      rules.insert(rules.end(), {Rule::kAndE1, Rule::kAndE2, Rule::kImpE, Rule::kImpE_d1,
                                 Rule::kCoImpE1});
      switch (a.kind()) {
        case FK::kAnd: rules.push_back(Rule::kAndI); break;
        case FK::kOr: rules.insert(rules.end(), {Rule::kOrI1, Rule::kOrI2}); break;
        case FK::kImp: rules.push_back(Rule::kImpI); break;
        case FK::kCoImp: rules.push_back(Rule::kCoImpI); break;
        default: break;
      }
    } else {
      rules.insert(rules.end(), {Rule::kOrE_d1, Rule::kOrE_d2, Rule::kCoImpE_d,
                                 Rule::kImpE_d2, Rule::kCoImpE2});
      switch (a.kind()) {
        case FK::kOr: rules.push_back(Rule::kOrI_d); break;
        case FK::kAnd: rules.insert(rules.end(), {Rule::kAndI_d1, Rule::kAndI_d2}); break;
        case FK::kImp: rules.push_back(Rule::kImpI_d); break;
        case FK::kCoImp: rules.push_back(Rule::kCoImpI_d); break;
        default: break;
      }
    }
    std::vector<Choice> out;
    for (Rule r : rules) out.push_back({r, cfg_.weight(r)});
    return out;
  }

  // Generates the premise under an extra binding of v to f.
  Derivation under(const Variable& v, const Formula& f, Polarity p, const Formula& a,
                   Basis& env, std::size_t budget) {
    auto& side = env.side(v.pol);
    std::optional<Formula> previous;
    if (auto it = side.find(v.name); it != side.end()) previous = it->second;
    side.insert_or_assign(v.name, f);
    Derivation d = gen(p, a, env, budget);
    if (previous) {
      side.insert_or_assign(v.name, *previous);
    } else {
      side.erase(v.name);
    }
    return d;
  }

  Derivation node(Rule r, Polarity p, Term t, const Formula& a, const Basis& env,
                  std::vector<Derivation> prems) {
    return Derivation{r, Judgment{env, p, std::move(t), a}, std::move(prems)};
  }

  Derivation apply(Rule r, Polarity p, const Formula& a, Basis& env, std::size_t h) {
    auto term = [](const Derivation& d) { return d.concl.term; };
    switch (r) {
      case Rule::kTopI:
        return node(r, p, Term::top(), a, env, {});
      case Rule::kBotI_d:
        return node(r, p, Term::bot(), a, env, {});
      case Rule::kBotE:
      case Rule::kTopE_d: {
        const bool bot = r == Rule::kBotE;
        Derivation d0 = gen(bot ? kPlus : kMinus, bot ? Formula::falsum() : Formula::verum(),
                            env, h);
        Term t = Term::abort(term(d0), p);
        return node(r, p, std::move(t), a, env, {std::move(d0)});
      }
      case Rule::kAndI:
      case Rule::kOrI_d: {
        Derivation d0 = gen(p, a.left(), env, h);
        Derivation d1 = gen(p, a.right(), env, h);
        Term t = Term::pair(term(d0), term(d1), p);
        return node(r, p, std::move(t), a, env, {std::move(d0), std::move(d1)});
      }
      case Rule::kAndE1:
      case Rule::kAndE2:
      case Rule::kOrE_d1:
      case Rule::kOrE_d2: {
        const bool first = r == Rule::kAndE1 || r == Rule::kOrE_d1;
        const Formula x = invent();
        const Formula l = first ? a : x;
        const Formula rr = first ? x : a;
        Derivation d0 =
            gen(p, p == kPlus ? Formula::conj(l, rr) : Formula::disj(l, rr), env, h);
        Term t = first ? Term::fst(term(d0), p) : Term::snd(term(d0), p);
        return node(r, p, std::move(t), a, env, {std::move(d0)});
      }
      case Rule::kOrI1:
      case Rule::kOrI2:
      case Rule::kAndI_d1:
      case Rule::kAndI_d2: {
        const bool left = r == Rule::kOrI1 || r == Rule::kAndI_d1;
        Derivation d0 = gen(p, left ? a.left() : a.right(), env, h);
        Term t = left ? Term::inl(term(d0), p) : Term::inr(term(d0), p);
        return node(r, p, std::move(t), a, env, {std::move(d0)});
      }
      case Rule::kOrE:
      case Rule::kAndE_d: {
        const Polarity q = r == Rule::kOrE ? kPlus : kMinus;
        const Formula x = invent();
        const Formula y = invent();
        Derivation d0 = gen(q, q == kPlus ? Formula::disj(x, y) : Formula::conj(x, y), env, h);
        const Variable bx = binder(q);
        const Variable by = binder(q);
        Derivation d1 = under(bx, x, p, a, env, h);
        Derivation d2 = under(by, y, p, a, env, h);
        Term t = Term::case_of(term(d0), bx, term(d1), by, term(d2), p);
        return node(r, p, std::move(t), a, env, {std::move(d0), std::move(d1), std::move(d2)});
      }
      case Rule::kImpI: {
        const Variable bx = binder(kPlus);
        Derivation d0 = under(bx, a.left(), kPlus, a.right(), env, h);
        Term t = Term::lam(bx, term(d0), p);
        return node(r, p, std::move(t), a, env, {std::move(d0)});
      }
      case Rule::kCoImpI_d: {
        const Variable bx = binder(kMinus);
        Derivation d0 = under(bx, a.right(), kMinus, a.left(), env, h);
        Term t = Term::lam(bx, term(d0), p);
        return node(r, p, std::move(t), a, env, {std::move(d0)});
      }
      case Rule::kImpE:
      case Rule::kCoImpE_d: {
        const Formula x = invent();
        Derivation d0 = gen(p, p == kPlus ? Formula::imp(x, a) : Formula::coimp(a, x), env, h);
        Derivation d1 = gen(p, x, env, h);
        Term t = Term::app(term(d0), term(d1), p);
        return node(r, p, std::move(t), a, env, {std::move(d0), std::move(d1)});
      }
      case Rule::kImpI_d:
      case Rule::kCoImpI: {
        Derivation d0 = gen(kPlus, a.left(), env, h);
        Derivation d1 = gen(kMinus, a.right(), env, h);
        Term t = Term::mpair(term(d0), term(d1), p);
        return node(r, p, std::move(t), a, env, {std::move(d0), std::move(d1)});
      }
      case Rule::kImpE_d1:
      case Rule::kImpE_d2:
      case Rule::kCoImpE1:
      case Rule::kCoImpE2: {
        const bool first = r == Rule::kImpE_d1 || r == Rule::kCoImpE1;
        const bool imp = r == Rule::kImpE_d1 || r == Rule::kImpE_d2;
        const Formula x = invent();
        const Formula l = first ? a : x;
        const Formula rr = first ? x : a;
        Derivation d0 = gen(imp ? kMinus : kPlus,
                            imp ? Formula::imp(l, rr) : Formula::coimp(l, rr), env, h);
        Term t = first ? Term::pi1(term(d0), p) : Term::pi2(term(d0), p);
        return node(r, p, std::move(t), a, env, {std::move(d0)});
      }
      case Rule::kHypPlus:
      case Rule::kHypMinus:
        break;
    }
    throw Error("generator reached an unexpected rule");
  }

  const GenConfig& cfg_;
  Rng& rng_;
  Basis pool_;
  std::size_t hyp_counter_ = 0;
};

constexpr int kAttempts = 64;

}  // namespace

Derivation gen_derivation(const GenConfig& cfg, Rng& rng) {
  cfg.check();
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      return Generator(cfg, rng).run();
    } catch (const Failed&) {
    }
  }
  throw GenerationFailed(fmt::format(
      "could not close every goal within height {} after {} attempts", cfg.max_height,
      kAttempts));
}

Derivation gen_derivation_for(const GenConfig& cfg, Rng& rng, Polarity pol,
                              const Formula& goal) {
  cfg.check();
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    try {
      return Generator(cfg, rng).run(pol, goal);
    } catch (const Failed&) {
    }
  }
  throw GenerationFailed(fmt::format("could not derive {} within height {} after {} attempts",
                                     print_formula(goal), cfg.max_height, kAttempts));
}

Derivation gen_derivation(const GenConfig& cfg) {
  Rng rng(cfg.seed);
  return gen_derivation(cfg, rng);
}

OracleResult oracle_reduce_all(const Term& t, std::size_t max_depth, std::size_t max_terms) {
  OracleResult out;
  std::unordered_set<std::string> seen;
  std::deque<std::pair<Term, std::size_t>> queue;
  seen.insert(alpha_key(t));
  queue.emplace_back(t, 0);
  out.reachable.push_back(t);
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    const auto redexes = find_redexes(cur);
    if (redexes.empty()) {
      out.normal_forms.push_back(cur);
      continue;
    }
    if (depth == max_depth) {
      out.complete = false;
      continue;
    }
    for (const auto& r : redexes) {
      Term next = step(cur, r);
      if (!seen.insert(alpha_key(next)).second) continue;
      if (out.reachable.size() == max_terms) {
        out.complete = false;
        return out;
      }
      out.reachable.push_back(next);
      queue.emplace_back(std::move(next), depth + 1);
    }
  }
  return out;
}

}  // namespace l2i
