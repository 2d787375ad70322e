#include "l2i/rewrite.h"

#include <fmt/core.h>

#include "l2i/textio.h"

namespace l2i {

namespace {

using TK = Term::Kind;

struct ClauseInfo {
  Clause clause;
  std::string_view name;
  RedexKind kind;
};

constexpr ClauseInfo kClauses[kClauseCount] = {
    {Clause::kBetaApp, "beta-App", RedexKind::kBeta},
    {Clause::kBetaPi1, "beta-Pi1", RedexKind::kBeta},
    {Clause::kBetaPi2, "beta-Pi2", RedexKind::kBeta},
    {Clause::kBetaFst, "beta-fst", RedexKind::kBeta},
    {Clause::kBetaSnd, "beta-snd", RedexKind::kBeta},
    {Clause::kBetaCaseInl, "beta-case-inl", RedexKind::kBeta},
    {Clause::kBetaCaseInr, "beta-case-inr", RedexKind::kBeta},
    {Clause::kPermApp, "perm-App", RedexKind::kPerm},
    {Clause::kPermPi1, "perm-Pi1", RedexKind::kPerm},
    {Clause::kPermPi2, "perm-Pi2", RedexKind::kPerm},
    {Clause::kPermFst, "perm-fst", RedexKind::kPerm},
    {Clause::kPermSnd, "perm-snd", RedexKind::kPerm},
    {Clause::kPermCasePlus, "perm-case-plus", RedexKind::kPerm},
    {Clause::kPermCaseMinus, "perm-case-minus", RedexKind::kPerm},
    {Clause::kSimpLeft, "simp-left", RedexKind::kSimp},
    {Clause::kSimpRight, "simp-right", RedexKind::kSimp},
};

const ClauseInfo& info(Clause c) { return kClauses[static_cast<std::size_t>(c)]; }

std::set<std::string> names_of(const std::set<Variable>& vars) {
  std::set<std::string> out;
  for (const auto& v : vars) out.insert(v.name);
  return out;
}

// Renames binder i of the case `c` when it belongs to `captured`, so that
// terms with those free variables can be placed into its branch.
Term avoid_capture(const Term& c, std::size_t i, const std::set<Variable>& captured,
                   const std::set<std::string>& also_avoid) {
  const Variable& x = c.binder(i);
  if (!captured.contains(x)) return c;
  std::set<std::string> avoid = names_of(captured);
  avoid.insert(also_avoid.begin(), also_avoid.end());
  for (const auto& n : all_names(c.child(i + 1))) avoid.insert(n);
  avoid.insert(x.name);
  Variable renamed{fresh_name(x.name, avoid), x.pol};
  Term branch = substitute(c.child(i + 1), x, Term::var(renamed));
  return c.with_binder(i, renamed).with_child(i + 1, branch);
}

// case r {x. s | y. t} with x and y renamed away from `captured`.
Term open_case(Term c, const std::set<Variable>& captured,
               const std::set<std::string>& also_avoid = {}) {
  c = avoid_capture(c, 0, captured, also_avoid);
  return avoid_capture(c, 1, captured, also_avoid);
}

// Rebuilds case r {x. f(s) | y. f(t)} at polarity p.
template <typename Fn>
Term push_into_branches(const Term& c, Polarity p, Fn&& wrap) {
  return Term::case_of(c.child(0), c.binder(0), wrap(c.child(1)), c.binder(1),
                       wrap(c.child(2)), p);
}

bool simp_applies(const Term& t, std::size_t branch) {
  const Term& kept = t.child(branch);
  return !occurs_free(t.binder(0), kept) && !occurs_free(t.binder(1), kept);
}

bool matches(const Term& t, Clause c) {
  switch (c) {
    case Clause::kBetaApp:
      return t.is(TK::kApp) && t.child(0).is(TK::kLam);
    case Clause::kBetaPi1:
      return t.is(TK::kPi1) && t.child(0).is(TK::kMPair);
    case Clause::kBetaPi2:
      return t.is(TK::kPi2) && t.child(0).is(TK::kMPair);
    case Clause::kBetaFst:
      return t.is(TK::kFst) && t.child(0).is(TK::kPair);
    case Clause::kBetaSnd:
      return t.is(TK::kSnd) && t.child(0).is(TK::kPair);
    case Clause::kBetaCaseInl:
      return t.is(TK::kCase) && t.child(0).is(TK::kInl);
    case Clause::kBetaCaseInr:
      return t.is(TK::kCase) && t.child(0).is(TK::kInr);
    case Clause::kPermApp:
      return t.is(TK::kApp) && t.child(0).is(TK::kCase);
    case Clause::kPermPi1:
      return t.is(TK::kPi1) && t.child(0).is(TK::kCase);
    case Clause::kPermPi2:
      return t.is(TK::kPi2) && t.child(0).is(TK::kCase);
    case Clause::kPermFst:
      return t.is(TK::kFst) && t.child(0).is(TK::kCase);
    case Clause::kPermSnd:
      return t.is(TK::kSnd) && t.child(0).is(TK::kCase);
    case Clause::kPermCasePlus:
      return t.is(TK::kCase) && t.child(0).is(TK::kCase) &&
             t.polarity() == Polarity::kPlus;
    case Clause::kPermCaseMinus:
      return t.is(TK::kCase) && t.child(0).is(TK::kCase) &&
             t.polarity() == Polarity::kMinus;
    case Clause::kSimpLeft:
      return t.is(TK::kCase) && simp_applies(t, 1);
    case Clause::kSimpRight:
      return t.is(TK::kCase) && simp_applies(t, 2);
  }
  return false;
}

Term contract_unchecked(const Term& t, Clause c) {
  const Polarity p = t.polarity();
  switch (c) {
    case Clause::kBetaApp: {
      const Term lam = t.child(0);
      return substitute(lam.child(0), lam.binder(0), t.child(1));
    }
    case Clause::kBetaPi1:
    case Clause::kBetaFst:
      return t.child(0).child(0);
    case Clause::kBetaPi2:
    case Clause::kBetaSnd:
      return t.child(0).child(1);
    case Clause::kBetaCaseInl:
      return substitute(t.child(1), t.binder(0), t.child(0).child(0));
    case Clause::kBetaCaseInr:
      return substitute(t.child(2), t.binder(1), t.child(0).child(0));
    case Clause::kPermApp: {
      const Term u = t.child(1);
      const Term inner = open_case(t.child(0), free_vars(u));
      return push_into_branches(inner, p, [&](const Term& s) { return Term::app(s, u, p); });
    }
    case Clause::kPermPi1:
    case Clause::kPermPi2:
    case Clause::kPermFst:
    case Clause::kPermSnd: {
      const Term inner = t.child(0);
      return push_into_branches(inner, p, [&](const Term& s) {
        switch (c) {
          case Clause::kPermPi1: return Term::pi1(s, p);
          case Clause::kPermPi2: return Term::pi2(s, p);
          case Clause::kPermFst: return Term::fst(s, p);
          default: return Term::snd(s, p);
        }
      });
    }
    case Clause::kPermCasePlus:
    case Clause::kPermCaseMinus: {
      // Free variables of the outer branches, seen from outside the case.
      std::set<Variable> moved;
      for (std::size_t i = 0; i < 2; ++i) {
        for (const auto& v : free_vars(t.child(i + 1))) {
          if (v != t.binder(i)) moved.insert(v);
        }
      }
      std::set<std::string> outer_binders{t.binder(0).name, t.binder(1).name};
      const Term inner = open_case(t.child(0), moved, outer_binders);
      return push_into_branches(inner, p, [&](const Term& s) {
        return Term::case_of(s, t.binder(0), t.child(1), t.binder(1), t.child(2), p);
      });
    }
    case Clause::kSimpLeft:
      return t.child(1);
    case Clause::kSimpRight:
      return t.child(2);
  }
  throw NotARedex("unknown clause");
}

void collect(const Term& t, Path& path, std::vector<RedexPosition>& out) {
  for (Clause c : root_redexes(t)) out.push_back({path, clause_kind(c), c});
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(i);
    collect(t.child(i), path, out);
    path.pop_back();
  }
}

std::optional<RedexPosition> first_from(const Term& t, RedexKind kind, Path& path) {
  for (const auto& ci : kClauses) {
    if (ci.kind == kind && matches(t, ci.clause)) return RedexPosition{path, ci.kind, ci.clause};
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(i);
    auto r = first_from(t.child(i), kind, path);
    path.pop_back();
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace

const std::vector<Clause>& all_clauses() {
  static const std::vector<Clause> clauses = [] {
    std::vector<Clause> out;
    for (const auto& ci : kClauses) out.push_back(ci.clause);
    return out;
  }();
  return clauses;
}

std::string_view redex_kind_name(RedexKind k) {
  switch (k) {
    case RedexKind::kBeta: return "beta";
    case RedexKind::kPerm: return "perm";
    case RedexKind::kSimp: return "simp";
  }
  return "?";
}

std::string_view clause_name(Clause c) { return info(c).name; }

RedexKind clause_kind(Clause c) { return info(c).kind; }

std::vector<Clause> root_redexes(const Term& t) {
  std::vector<Clause> out;
  for (const auto& ci : kClauses) {
    if (matches(t, ci.clause)) out.push_back(ci.clause);
  }
  return out;
}

std::optional<Term> contract(const Term& t, Clause c) {
  if (!matches(t, c)) return std::nullopt;
  return contract_unchecked(t, c);
}

std::vector<RedexPosition> find_redexes(const Term& t) {
  std::vector<RedexPosition> out;
  Path path;
  collect(t, path, out);
  return out;
}

std::optional<RedexPosition> first_redex(const Term& t) {
  for (RedexKind kind : {RedexKind::kBeta, RedexKind::kPerm, RedexKind::kSimp}) {
    Path path;
    if (auto r = first_from(t, kind, path)) return r;
  }
  return std::nullopt;
}

bool is_normal(const Term& t) { return !first_redex(t).has_value(); }

Term step(const Term& t, const RedexPosition& p) {
  std::optional<Term> result;
  try {
    result = contract(subterm_at(t, p.path), p.detail);
  } catch (const std::out_of_range&) {
    throw NotARedex(fmt::format("path {} leaves the term", format_path(p.path)));
  }
  if (!result || p.kind != clause_kind(p.detail)) {
    throw NotARedex(fmt::format("no {} redex at {}", clause_name(p.detail),
                                format_path(p.path)));
  }
  return replace_at(t, p.path, *result);
}

std::string format_step(const TraceStep& s) {
  return fmt::format("{}@{}  {}", clause_name(s.redex.detail), format_path(s.redex.path),
                     print_term(s.after));
}

NormalizeResult normalize(const Term& t, std::size_t fuel, bool keep_trace) {
  NormalizeResult result{NormalizeStatus::kNormal, t, {}, 0};
  for (;;) {
    auto redex = first_redex(result.term);
    if (!redex) return result;
    if (result.steps == fuel) {
      result.status = NormalizeStatus::kFuelExhausted;
      return result;
    }
    Term sub = subterm_at(result.term, redex->path);
    result.term = replace_at(result.term, redex->path, contract_unchecked(sub, redex->detail));
    ++result.steps;
    if (keep_trace) result.trace.push_back({*redex, result.term});
  }
}

}  // namespace l2i
