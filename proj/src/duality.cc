#include "l2i/duality.h"

#include <fmt/core.h>

#include <utility>

namespace l2i {

namespace {

using FK = Formula::Kind;
using TK = Term::Kind;

constexpr std::pair<Rule, Rule> kRulePairs[] = {
    {Rule::kHypPlus, Rule::kHypMinus},  {Rule::kTopI, Rule::kBotI_d},
    {Rule::kBotE, Rule::kTopE_d},       {Rule::kAndI, Rule::kOrI_d},
    {Rule::kAndE1, Rule::kOrE_d1},      {Rule::kAndE2, Rule::kOrE_d2},
    {Rule::kAndI_d1, Rule::kOrI1},      {Rule::kAndI_d2, Rule::kOrI2},
    {Rule::kAndE_d, Rule::kOrE},        {Rule::kImpI, Rule::kCoImpI_d},
    {Rule::kImpE, Rule::kCoImpE_d},     {Rule::kImpI_d, Rule::kCoImpI},
    {Rule::kImpE_d1, Rule::kCoImpE2},   {Rule::kImpE_d2, Rule::kCoImpE1},
};

constexpr std::pair<Clause, Clause> kClausePairs[] = {
    {Clause::kBetaApp, Clause::kBetaApp},
    {Clause::kBetaPi1, Clause::kBetaPi2},
    {Clause::kBetaFst, Clause::kBetaFst},
    {Clause::kBetaSnd, Clause::kBetaSnd},
    {Clause::kBetaCaseInl, Clause::kBetaCaseInl},
    {Clause::kBetaCaseInr, Clause::kBetaCaseInr},
    {Clause::kPermApp, Clause::kPermApp},
    {Clause::kPermPi1, Clause::kPermPi2},
    {Clause::kPermFst, Clause::kPermFst},
    {Clause::kPermSnd, Clause::kPermSnd},
    {Clause::kPermCasePlus, Clause::kPermCaseMinus},
    {Clause::kSimpLeft, Clause::kSimpLeft},
    {Clause::kSimpRight, Clause::kSimpRight},
};

}  // namespace

Formula dual_formula(const Formula& a) {
  switch (a.kind()) {
    case FK::kAtom:
    case FK::kMeta:
      return a;
    case FK::kFalsum:
      return Formula::verum();
    case FK::kVerum:
      return Formula::falsum();
    case FK::kAnd:
      return Formula::disj(dual_formula(a.left()), dual_formula(a.right()));
    case FK::kOr:
      return Formula::conj(dual_formula(a.left()), dual_formula(a.right()));
    case FK::kImp:
      return Formula::coimp(dual_formula(a.right()), dual_formula(a.left()));
    case FK::kCoImp:
      return Formula::imp(dual_formula(a.right()), dual_formula(a.left()));
  }
  return a;
}

Term dual_term(const Term& t) {
  const Polarity p = flip(t.polarity());
  auto dual_binder = [&](std::size_t i) {
    return Variable{t.binder(i).name, flip(t.binder(i).pol)};
  };
  switch (t.kind()) {
    case TK::kVar:
      return Term::var(t.variable().name, p);
    case TK::kTop:
      return Term::bot();
    case TK::kBot:
      return Term::top();
    case TK::kAbort:
      return Term::abort(dual_term(t.child(0)), p);
    case TK::kPair:
      return Term::pair(dual_term(t.child(0)), dual_term(t.child(1)), p);
    case TK::kFst:
      return Term::fst(dual_term(t.child(0)), p);
    case TK::kSnd:
      return Term::snd(dual_term(t.child(0)), p);
    case TK::kInl:
      return Term::inl(dual_term(t.child(0)), p);
    case TK::kInr:
      return Term::inr(dual_term(t.child(0)), p);
    case TK::kCase:
      return Term::case_of(dual_term(t.child(0)), dual_binder(0), dual_term(t.child(1)),
                           dual_binder(1), dual_term(t.child(2)), p);
    case TK::kLam:
      return Term::lam(dual_binder(0), dual_term(t.child(0)), p);
    case TK::kApp:
      return Term::app(dual_term(t.child(0)), dual_term(t.child(1)), p);
    case TK::kMPair:
      return Term::mpair(dual_term(t.child(1)), dual_term(t.child(0)), p);
    case TK::kPi1:
      return Term::pi2(dual_term(t.child(0)), p);
    case TK::kPi2:
      return Term::pi1(dual_term(t.child(0)), p);
  }
  return t;
}

Basis dual_basis(const Basis& b) {
  Basis out;
  for (const auto& [name, f] : b.delta) out.gamma.emplace(name, dual_formula(f));
  for (const auto& [name, f] : b.gamma) out.delta.emplace(name, dual_formula(f));
  return out;
}

Rule dual_rule(Rule r) {
  for (const auto& [a, b] : kRulePairs) {
    if (a == r) return b;
    if (b == r) return a;
  }
  throw Error("rule without dual");
}

Clause dual_clause(Clause c) {
  for (const auto& [a, b] : kClausePairs) {
    if (a == c) return b;
    if (b == c) return a;
  }
  throw Error("clause without dual");
}

Path dual_path(const Term& t, const Path& path) {
  Path out;
  out.reserve(path.size());
  Term cur = t;
  for (std::size_t i : path) {
    if (i >= cur.arity()) throw std::out_of_range("path leaves the term");
    out.push_back(cur.is(TK::kMPair) ? 1 - i : i);
    cur = cur.child(i);
  }
  return out;
}

RedexPosition dual_redex(const Term& t, const RedexPosition& p) {
  const Clause c = dual_clause(p.detail);
  return {dual_path(t, p.path), clause_kind(c), c};
}

namespace {

Derivation dualize(const Derivation& d) {
  Derivation out{dual_rule(d.rule),
                 Judgment{dual_basis(d.concl.basis), flip(d.concl.pol),
                          dual_term(d.concl.term), dual_formula(d.concl.type)},
                 {}};
  out.prems.reserve(d.prems.size());
  for (const auto& p : d.prems) out.prems.push_back(dualize(p));
  if (d.rule == Rule::kImpI_d || d.rule == Rule::kCoImpI) {
    std::swap(out.prems[0], out.prems[1]);
  }
  return out;
}

}  // namespace

Derivation dual_derivation(const Derivation& d) {
  auto violations = validate(d);
  if (!violations.empty()) {
    const std::string message =
        fmt::format("cannot dualize an invalid derivation ({} violation(s); first at {}: {})",
                    violations.size(), format_path(violations[0].path), violations[0].message);
    throw InvalidDerivation(message, std::move(violations));
  }
  return dualize(d);
}

}  // namespace l2i
