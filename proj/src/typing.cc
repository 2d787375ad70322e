#include "l2i/typing.h"

#include <fmt/core.h>

#include "l2i/textio.h"

namespace l2i {

std::string_view to_string(TypeErrorKind k) {
  switch (k) {
    case TypeErrorKind::kTypeMismatch: return "type mismatch";
    case TypeErrorKind::kUnboundVariable: return "unbound variable";
    case TypeErrorKind::kUntypable: return "untypable";
    case TypeErrorKind::kIllFormed: return "ill-formed";
  }
  return "?";
}

TypeError::TypeError(TypeErrorKind kind, const std::string& message, Path path,
                     std::optional<UnifyFailure> reason)
    : Error(message), kind_(kind), path_(std::move(path)), reason_(reason) {}

namespace {

using TK = Term::Kind;
constexpr auto kPlus = Polarity::kPlus;
constexpr auto kMinus = Polarity::kMinus;

// One pass over the term, applying exactly one inversion clause per node and
// recording the derivation with open metavariables. In inference mode free
// variables receive fresh metavariables; in checking mode they must be in the
// given basis.
class Engine {
 public:
  enum class Mode { kInfer, kCheck };

  Engine(Mode mode, Basis basis) : mode_(mode), scope_(std::move(basis)) {}

  Derivation run(const Term& t) {
    Path path;
    return visit(t, path);
  }

  Substitution& substitution() { return subst_; }
  const Basis& free_assumptions() const { return free_; }

 private:
  Formula fresh() { return Formula::meta(fmt::format("_{}", ++counter_)); }

  void unify_at(const Formula& a, const Formula& b, const Path& path) {
    try {
      unify_into(subst_, a, b);
    } catch (const UnifyError& e) {
      throw TypeError(TypeErrorKind::kUntypable,
                      fmt::format("untypable at {} ({}): {}", format_path(path),
                                  to_string(e.reason()), e.what()),
                      path, e.reason());
    }
  }

  Formula lookup(const Variable& v, const Path& path) {
    if (auto f = scope_.lookup(v)) return *f;
    if (mode_ == Mode::kCheck) {
      throw TypeError(TypeErrorKind::kUnboundVariable,
                      fmt::format("{} is not in the basis", to_string(v)), path);
    }
    Formula f = fresh();
    free_.bind(v, f);
    scope_.bind(v, f);
    return f;
  }

  Derivation child(const Term& t, std::size_t i, Path& path) {
    path.push_back(i);
    Derivation d = visit(t.child(i), path);
    path.pop_back();
    return d;
  }

  // Visits child i with v bound to f, restoring the scope afterwards.
  Derivation child_under(const Term& t, std::size_t i, const Variable& v, const Formula& f,
                         Path& path) {
    auto& side = scope_.side(v.pol);
    auto saved = side.find(v.name);
    std::optional<Formula> previous;
    if (saved != side.end()) previous = saved->second;
    side.insert_or_assign(v.name, f);
    Derivation d = child(t, i, path);
    if (previous) {
      side.insert_or_assign(v.name, *previous);
    } else {
      side.erase(v.name);
    }
    return d;
  }

  Derivation node(Rule r, const Term& t, Formula type, std::vector<Derivation> prems) {
    return Derivation{r, Judgment{scope_, t.polarity(), t, std::move(type)},
                      std::move(prems)};
  }

  Derivation visit(const Term& t, Path& path) {
    const Polarity p = t.polarity();
    switch (t.kind()) {
      case TK::kVar: {
        Formula f = lookup(t.variable(), path);
        return node(p == kPlus ? Rule::kHypPlus : Rule::kHypMinus, t, f, {});
      }
      case TK::kTop:
        return node(Rule::kTopI, t, Formula::verum(), {});
      case TK::kBot:
        return node(Rule::kBotI_d, t, Formula::falsum(), {});
      case TK::kAbort: {
        Derivation d0 = child(t, 0, path);
        const bool plus = t.child(0).polarity() == kPlus;
        unify_at(d0.concl.type, plus ? Formula::falsum() : Formula::verum(), path);
        return node(plus ? Rule::kBotE : Rule::kTopE_d, t, fresh(), {std::move(d0)});
      }
      case TK::kPair: {
        Derivation d0 = child(t, 0, path);
        Derivation d1 = child(t, 1, path);
        Formula f = p == kPlus ? Formula::conj(d0.concl.type, d1.concl.type)
                               : Formula::disj(d0.concl.type, d1.concl.type);
        return node(p == kPlus ? Rule::kAndI : Rule::kOrI_d, t, f,
                    {std::move(d0), std::move(d1)});
      }
      case TK::kFst:
      case TK::kSnd: {
        Derivation d0 = child(t, 0, path);
        Formula a = fresh();
        Formula b = fresh();
        unify_at(d0.concl.type, p == kPlus ? Formula::conj(a, b) : Formula::disj(a, b),
                 path);
        const bool first = t.is(TK::kFst);
        const Rule r = p == kPlus ? (first ? Rule::kAndE1 : Rule::kAndE2)
                                  : (first ? Rule::kOrE_d1 : Rule::kOrE_d2);
        return node(r, t, first ? a : b, {std::move(d0)});
      }
      case TK::kInl:
      case TK::kInr: {
        Derivation d0 = child(t, 0, path);
        const bool left = t.is(TK::kInl);
        Formula other = fresh();
        Formula a = left ? d0.concl.type : other;
        Formula b = left ? other : d0.concl.type;
        const Rule r = p == kPlus ? (left ? Rule::kOrI1 : Rule::kOrI2)
                                  : (left ? Rule::kAndI_d1 : Rule::kAndI_d2);
        return node(r, t, p == kPlus ? Formula::disj(a, b) : Formula::conj(a, b),
                    {std::move(d0)});
      }
      case TK::kCase: {
        Derivation d0 = child(t, 0, path);
        const Polarity q = t.child(0).polarity();
        Formula a = fresh();
        Formula b = fresh();
        unify_at(d0.concl.type, q == kPlus ? Formula::disj(a, b) : Formula::conj(a, b),
                 path);
        Derivation d1 = child_under(t, 1, t.binder(0), a, path);
        Derivation d2 = child_under(t, 2, t.binder(1), b, path);
        unify_at(d1.concl.type, d2.concl.type, path);
        Formula c = d1.concl.type;
        return node(q == kPlus ? Rule::kOrE : Rule::kAndE_d, t, c,
                    {std::move(d0), std::move(d1), std::move(d2)});
      }
      case TK::kLam: {
        Formula a = fresh();
        Derivation d0 = child_under(t, 0, t.binder(0), a, path);
        const Formula b = d0.concl.type;
        if (p == kPlus) return node(Rule::kImpI, t, Formula::imp(a, b), {std::move(d0)});
        return node(Rule::kCoImpI_d, t, Formula::coimp(b, a), {std::move(d0)});
      }
      case TK::kApp: {
        Derivation d0 = child(t, 0, path);
        Derivation d1 = child(t, 1, path);
        Formula r = fresh();
        unify_at(d0.concl.type,
                 p == kPlus ? Formula::imp(d1.concl.type, r) : Formula::coimp(r, d1.concl.type),
                 path);
        return node(p == kPlus ? Rule::kImpE : Rule::kCoImpE_d, t, r,
                    {std::move(d0), std::move(d1)});
      }
      case TK::kMPair: {
        Derivation d0 = child(t, 0, path);
        Derivation d1 = child(t, 1, path);
        const Formula f = p == kMinus ? Formula::imp(d0.concl.type, d1.concl.type)
                                      : Formula::coimp(d0.concl.type, d1.concl.type);
        return node(p == kMinus ? Rule::kImpI_d : Rule::kCoImpI, t, f,
                    {std::move(d0), std::move(d1)});
      }
      case TK::kPi1:
      case TK::kPi2: {
        Derivation d0 = child(t, 0, path);
        const bool imp = t.child(0).polarity() == kMinus;
        Formula a = fresh();
        Formula b = fresh();
        unify_at(d0.concl.type, imp ? Formula::imp(a, b) : Formula::coimp(a, b), path);
        const bool first = t.is(TK::kPi1);
        const Rule r = imp ? (first ? Rule::kImpE_d1 : Rule::kImpE_d2)
                           : (first ? Rule::kCoImpE1 : Rule::kCoImpE2);
        return node(r, t, first ? a : b, {std::move(d0)});
      }
    }
    throw Error("unknown term kind");
  }

  Mode mode_;
  Basis scope_;
  Basis free_;
  Substitution subst_;
  std::size_t counter_ = 0;
};

void require_well_formed(const Term& t) {
  auto violations = check_polarities(t);
  if (violations.empty()) return;
  const auto& v = violations.front();
  throw TypeError(TypeErrorKind::kIllFormed,
                  fmt::format("ill-formed term at {}: {}", format_path(v.path), v.constraint),
                  v.path);
}

Formula ground(const Formula& f) {
  if (f.is_ground()) return f;
  if (f.is(Formula::Kind::kMeta)) return Formula::verum();
  return Formula::binary(f.kind(), ground(f.left()), ground(f.right()));
}

Basis ground(const Basis& b) {
  Basis out;
  for (const auto& [name, f] : b.gamma) out.gamma.emplace(name, ground(f));
  for (const auto& [name, f] : b.delta) out.delta.emplace(name, ground(f));
  return out;
}

void finish(Derivation& d, const Substitution& s) {
  d.concl.type = ground(s.apply(d.concl.type));
  d.concl.basis = ground(s.apply(d.concl.basis));
  for (auto& p : d.prems) finish(p, s);
}

}  // namespace

Principal infer_principal(const Term& t) {
  require_well_formed(t);
  Engine engine(Engine::Mode::kInfer, {});
  Derivation d = engine.run(t);
  const Substitution& s = engine.substitution();
  Basis basis = s.apply(engine.free_assumptions());
  Formula type = s.apply(d.concl.type);

  std::vector<Formula> order;
  for (const auto& [name, f] : basis.gamma) order.push_back(f);
  for (const auto& [name, f] : basis.delta) order.push_back(f);
  order.push_back(type);
  const MetaRenaming renaming = canonical_renaming(order);
  for (auto& [name, f] : basis.gamma) f = rename_metas(f, renaming);
  for (auto& [name, f] : basis.delta) f = rename_metas(f, renaming);
  return Principal{std::move(basis), t.polarity(), rename_metas(type, renaming)};
}

Derivation check(const Basis& basis, Polarity pol, const Term& t, const Formula& a) {
  require_well_formed(t);
  if (!a.is_ground() || !basis.is_ground()) {
    throw TypeError(TypeErrorKind::kIllFormed,
                    "check expects a type and basis without metavariables");
  }
  if (pol != t.polarity()) {
    throw TypeError(TypeErrorKind::kTypeMismatch,
                    fmt::format("{} has polarity {}, not {}", print_term(t),
                                polarity_char(t.polarity()), polarity_char(pol)));
  }
  Engine engine(Engine::Mode::kCheck, basis);
  Derivation d = engine.run(t);
  Substitution& s = engine.substitution();
  try {
    unify_into(s, d.concl.type, a);
  } catch (const UnifyError&) {
    throw TypeError(TypeErrorKind::kTypeMismatch,
                    fmt::format("{} has type {}, which does not match {}", print_term(t),
                                print_formula(s.apply(d.concl.type)), print_formula(a)));
  }
  s.make_idempotent();
  finish(d, s);
  return d;
}

}  // namespace l2i
