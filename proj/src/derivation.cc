#include "l2i/derivation.h"

#include <fmt/core.h>

#include <algorithm>

#include "l2i/textio.h"

namespace l2i {

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  std::size_t arity;
  std::optional<Polarity> pol;
};

constexpr auto kPlus = Polarity::kPlus;
constexpr auto kMinus = Polarity::kMinus;

constexpr std::array<RuleInfo, kRuleCount> kRules = {{
    {Rule::kHypPlus, "Hyp+", 0, kPlus},
    {Rule::kHypMinus, "Hyp-", 0, kMinus},
    {Rule::kBotI_d, "BotI_d", 0, kMinus},
    {Rule::kBotE, "BotE", 1, std::nullopt},
    {Rule::kTopI, "TopI", 0, kPlus},
    {Rule::kTopE_d, "TopE_d", 1, std::nullopt},
    {Rule::kAndI, "AndI", 2, kPlus},
    {Rule::kAndE1, "AndE1", 1, kPlus},
    {Rule::kAndE2, "AndE2", 1, kPlus},
    {Rule::kAndI_d1, "AndI_d1", 1, kMinus},
    {Rule::kAndI_d2, "AndI_d2", 1, kMinus},
    {Rule::kAndE_d, "AndE_d", 3, std::nullopt},
    {Rule::kOrI1, "OrI1", 1, kPlus},
    {Rule::kOrI2, "OrI2", 1, kPlus},
    {Rule::kOrE, "OrE", 3, std::nullopt},
    {Rule::kOrI_d, "OrI_d", 2, kMinus},
    {Rule::kOrE_d1, "OrE_d1", 1, kMinus},
    {Rule::kOrE_d2, "OrE_d2", 1, kMinus},
    {Rule::kImpI, "ImpI", 1, kPlus},
    {Rule::kImpE, "ImpE", 2, kPlus},
    {Rule::kImpI_d, "ImpI_d", 2, kMinus},
    {Rule::kImpE_d1, "ImpE_d1", 1, kPlus},
    {Rule::kImpE_d2, "ImpE_d2", 1, kMinus},
    {Rule::kCoImpI, "CoImpI", 2, kPlus},
    {Rule::kCoImpE1, "CoImpE1", 1, kPlus},
    {Rule::kCoImpE2, "CoImpE2", 1, kMinus},
    {Rule::kCoImpI_d, "CoImpI_d", 1, kMinus},
    {Rule::kCoImpE_d, "CoImpE_d", 2, kMinus},
}};

const RuleInfo& info(Rule r) { return kRules[static_cast<std::size_t>(r)]; }

using TK = Term::Kind;
using FK = Formula::Kind;

class Validator {
 public:
  std::vector<DerivationViolation> run(const Derivation& d) {
    Path path;
    visit(d, path);
    return std::move(out_);
  }

 private:
  void visit(const Derivation& d, Path& path) {
    check_node(d, path);
    for (std::size_t i = 0; i < d.prems.size(); ++i) {
      path.push_back(i);
      visit(d.prems[i], path);
      path.pop_back();
    }
  }

  void report(const Path& path, std::string message) {
    out_.push_back({path, std::move(message)});
  }

  void check_node(const Derivation& d, const Path& path) {
    const RuleInfo& ri = info(d.rule);
    const Judgment& j = d.concl;
    const std::size_t before = out_.size();
    if (j.pol != j.term.polarity()) {
      report(path, "judgment polarity differs from the term's polarity");
    }
    if (auto v = local_polarity_violation(j.term)) report(path, *v);
    if (ri.pol && j.pol != *ri.pol) {
      report(path, fmt::format("{} concludes at polarity {}", ri.name,
                               polarity_char(*ri.pol)));
    }
    if (d.prems.size() != ri.arity) {
      report(path, fmt::format("{} takes {} premise(s), found {}", ri.name, ri.arity,
                               d.prems.size()));
    }
    if (out_.size() != before) return;
    Node n{d, path, ri.name};
    check_schema(n);
  }

  struct Node {
    const Derivation& d;
    const Path& path;
    std::string_view name;

    const Judgment& concl() const { return d.concl; }
    const Judgment& prem(std::size_t i) const { return d.prems[i].concl; }
  };

  bool expect_kind(const Node& n, TK kind) {
    if (n.concl().term.is(kind)) return true;
    report(n.path, fmt::format("{} needs a {} term, found {}", n.name, kind_name(kind),
                               kind_name(n.concl().term.kind())));
    return false;
  }

  bool expect_type(const Node& n, const Formula& f, FK kind, std::string_view what) {
    if (f.is(kind)) return true;
    report(n.path, fmt::format("{}: {} must be {}, found {}", n.name, what,
                               kind == FK::kAnd    ? "a conjunction"
                               : kind == FK::kOr   ? "a disjunction"
                               : kind == FK::kImp  ? "an implication"
                               : kind == FK::kCoImp ? "a co-implication"
                               : kind == FK::kVerum ? "top"
                                                    : "bot",
                               print_formula(f)));
    return false;
  }

  // Premise i must judge `term` at `pol`, with `type` when given, over a
  // sub-basis of `allowed`.
  void expect_premise(const Node& n, std::size_t i, const Term& term, Polarity pol,
                      const std::optional<Formula>& type, const Basis& allowed) {
    const Judgment& p = n.prem(i);
    if (!(p.term == term)) {
      report(n.path, fmt::format("{}: premise {} has term {}, expected {}", n.name, i + 1,
                                 print_term(p.term), print_term(term)));
    }
    if (p.pol != pol) {
      report(n.path, fmt::format("{}: premise {} must have polarity {}", n.name, i + 1,
                                 polarity_char(pol)));
    }
    if (type && !(p.type == *type)) {
      report(n.path, fmt::format("{}: premise {} has type {}, expected {}", n.name, i + 1,
                                 print_formula(p.type), print_formula(*type)));
    }
    if (!is_sub_basis(p.basis, allowed)) {
      report(n.path, fmt::format("{}: premise {} basis {} is not contained in {}", n.name,
                                 i + 1, print_basis(p.basis), print_basis(allowed)));
    }
  }

  void expect_premise(const Node& n, std::size_t i, const Term& term, Polarity pol,
                      const std::optional<Formula>& type) {
    expect_premise(n, i, term, pol, type, n.concl().basis);
  }

  bool expect_child_polarity(const Node& n, Polarity pol) {
    if (n.concl().term.child(0).polarity() == pol) return true;
    report(n.path, fmt::format("{} needs an argument of polarity {}", n.name,
                               polarity_char(pol)));
    return false;
  }

  void check_schema(const Node& n) {
    const Judgment& j = n.concl();
    const Term& t = j.term;
    const Formula& c = j.type;
    switch (n.d.rule) {
      case Rule::kHypPlus:
      case Rule::kHypMinus: {
        if (!expect_kind(n, TK::kVar)) return;
        auto f = j.basis.lookup(t.variable());
        if (!f) {
          report(n.path, fmt::format("{} is not in the basis", to_string(t.variable())));
        } else if (!(*f == c)) {
          report(n.path, fmt::format("{} is assumed as {}, not {}", to_string(t.variable()),
                                     print_formula(*f), print_formula(c)));
        }
        return;
      }
      case Rule::kTopI:
        if (expect_kind(n, TK::kTop)) expect_type(n, c, FK::kVerum, "the type");
        return;
      case Rule::kBotI_d:
        if (expect_kind(n, TK::kBot)) expect_type(n, c, FK::kFalsum, "the type");
        return;
      case Rule::kBotE:
      case Rule::kTopE_d: {
        if (!expect_kind(n, TK::kAbort)) return;
        const bool bot = n.d.rule == Rule::kBotE;
        const Polarity q = bot ? kPlus : kMinus;
        if (!expect_child_polarity(n, q)) return;
        expect_premise(n, 0, t.child(0), q, bot ? Formula::falsum() : Formula::verum());
        return;
      }
      case Rule::kAndI:
      case Rule::kOrI_d: {
        if (!expect_kind(n, TK::kPair)) return;
        const FK k = n.d.rule == Rule::kAndI ? FK::kAnd : FK::kOr;
        if (!expect_type(n, c, k, "the type")) return;
        expect_premise(n, 0, t.child(0), j.pol, c.left());
        expect_premise(n, 1, t.child(1), j.pol, c.right());
        return;
      }
      case Rule::kAndE1:
      case Rule::kAndE2:
      case Rule::kOrE_d1:
      case Rule::kOrE_d2: {
        const bool first = n.d.rule == Rule::kAndE1 || n.d.rule == Rule::kOrE_d1;
        if (!expect_kind(n, first ? TK::kFst : TK::kSnd)) return;
        const FK k = j.pol == kPlus ? FK::kAnd : FK::kOr;
        const Formula& pt = n.prem(0).type;
        expect_premise(n, 0, t.child(0), j.pol, std::nullopt);
        if (!expect_type(n, pt, k, "the premise type")) return;
        if (!((first ? pt.left() : pt.right()) == c)) {
          report(n.path, fmt::format("{}: premise type {} does not project to {}", n.name,
                                     print_formula(pt), print_formula(c)));
        }
        return;
      }
      case Rule::kOrI1:
      case Rule::kOrI2:
      case Rule::kAndI_d1:
      case Rule::kAndI_d2: {
        const bool left = n.d.rule == Rule::kOrI1 || n.d.rule == Rule::kAndI_d1;
        if (!expect_kind(n, left ? TK::kInl : TK::kInr)) return;
        const FK k = j.pol == kPlus ? FK::kOr : FK::kAnd;
        if (!expect_type(n, c, k, "the type")) return;
        expect_premise(n, 0, t.child(0), j.pol, left ? c.left() : c.right());
        return;
      }
      case Rule::kOrE:
      case Rule::kAndE_d: {
        if (!expect_kind(n, TK::kCase)) return;
        const Polarity q = n.d.rule == Rule::kOrE ? kPlus : kMinus;
        if (!expect_child_polarity(n, q)) return;
        const Formula& st = n.prem(0).type;
        expect_premise(n, 0, t.child(0), q, std::nullopt);
        if (!expect_type(n, st, q == kPlus ? FK::kOr : FK::kAnd, "the scrutinee type")) {
          return;
        }
        expect_premise(n, 1, t.child(1), j.pol, c, j.basis.with(t.binder(0), st.left()));
        expect_premise(n, 2, t.child(2), j.pol, c, j.basis.with(t.binder(1), st.right()));
        return;
      }
      case Rule::kImpI: {
        if (!expect_kind(n, TK::kLam) || !expect_type(n, c, FK::kImp, "the type")) return;
        expect_premise(n, 0, t.child(0), kPlus, c.right(),
                       j.basis.with(t.binder(0), c.left()));
        return;
      }
      case Rule::kCoImpI_d: {
        if (!expect_kind(n, TK::kLam) || !expect_type(n, c, FK::kCoImp, "the type")) return;
        expect_premise(n, 0, t.child(0), kMinus, c.left(),
                       j.basis.with(t.binder(0), c.right()));
        return;
      }
      case Rule::kImpE:
      case Rule::kCoImpE_d: {
        if (!expect_kind(n, TK::kApp)) return;
        const bool imp = n.d.rule == Rule::kImpE;
        const Formula& ft = n.prem(0).type;
        expect_premise(n, 0, t.child(0), j.pol, std::nullopt);
        if (!expect_type(n, ft, imp ? FK::kImp : FK::kCoImp, "the function type")) return;
        // A -> B yields B from A; B -< A yields B from A.
        const Formula result = imp ? ft.right() : ft.left();
        const Formula argument = imp ? ft.left() : ft.right();
        if (!(result == c)) {
          report(n.path, fmt::format("{}: function type {} does not yield {}", n.name,
                                     print_formula(ft), print_formula(c)));
        }
        expect_premise(n, 1, t.child(1), j.pol, argument);
        return;
      }
      case Rule::kImpI_d:
      case Rule::kCoImpI: {
        if (!expect_kind(n, TK::kMPair)) return;
        const bool imp = n.d.rule == Rule::kImpI_d;
        if (!expect_type(n, c, imp ? FK::kImp : FK::kCoImp, "the type")) return;
        // {s+, t-}- : A -> B from s+ : A and t- : B;
        // {t+, s-}+ : B -< A from t+ : B and s- : A.
        expect_premise(n, 0, t.child(0), kPlus, c.left());
        expect_premise(n, 1, t.child(1), kMinus, c.right());
        return;
      }
      case Rule::kImpE_d1:
      case Rule::kImpE_d2:
      case Rule::kCoImpE1:
      case Rule::kCoImpE2: {
        const bool first = n.d.rule == Rule::kImpE_d1 || n.d.rule == Rule::kCoImpE1;
        const bool imp = n.d.rule == Rule::kImpE_d1 || n.d.rule == Rule::kImpE_d2;
        if (!expect_kind(n, first ? TK::kPi1 : TK::kPi2)) return;
        const Polarity q = imp ? kMinus : kPlus;
        if (!expect_child_polarity(n, q)) return;
        const Formula& pt = n.prem(0).type;
        expect_premise(n, 0, t.child(0), q, std::nullopt);
        if (!expect_type(n, pt, imp ? FK::kImp : FK::kCoImp, "the premise type")) return;
        if (!((first ? pt.left() : pt.right()) == c)) {
          report(n.path, fmt::format("{}: premise type {} does not project to {}", n.name,
                                     print_formula(pt), print_formula(c)));
        }
        return;
      }
    }
  }

  std::vector<DerivationViolation> out_;
};

}  // namespace

const std::array<Rule, kRuleCount>& all_rules() {
  static const std::array<Rule, kRuleCount> rules = [] {
    std::array<Rule, kRuleCount> out{};
    for (std::size_t i = 0; i < kRuleCount; ++i) out[i] = kRules[i].rule;
    return out;
  }();
  return rules;
}

const std::vector<Rule>& inference_rules() {
  static const std::vector<Rule> rules(all_rules().begin() + 2, all_rules().end());
  return rules;
}

std::string_view rule_name(Rule r) { return info(r).name; }

std::optional<Rule> rule_from_name(std::string_view name) {
  for (const auto& ri : kRules) {
    if (ri.name == name) return ri.rule;
  }
  return std::nullopt;
}

std::size_t rule_arity(Rule r) { return info(r).arity; }

bool is_hypothesis(Rule r) { return r == Rule::kHypPlus || r == Rule::kHypMinus; }

std::optional<Polarity> rule_polarity(Rule r) { return info(r).pol; }

std::vector<DerivationViolation> validate(const Derivation& d) {
  return Validator().run(d);
}

std::size_t height(const Derivation& d) {
  if (is_hypothesis(d.rule)) return 0;
  std::size_t h = 0;
  for (const auto& p : d.prems) h = std::max(h, height(p));
  return h + 1;
}

std::size_t node_count(const Derivation& d) {
  std::size_t n = 1;
  for (const auto& p : d.prems) n += node_count(p);
  return n;
}

bool alpha_equal(const Derivation& a, const Derivation& b) {
  if (a.rule != b.rule || a.prems.size() != b.prems.size()) return false;
  const Judgment& x = a.concl;
  const Judgment& y = b.concl;
  if (x.pol != y.pol || !(x.type == y.type) || !(x.basis == y.basis) ||
      !alpha_eq(x.term, y.term)) {
    return false;
  }
  for (std::size_t i = 0; i < a.prems.size(); ++i) {
    if (!alpha_equal(a.prems[i], b.prems[i])) return false;
  }
  return true;
}

}  // namespace l2i
