#include <fmt/core.h>

#include <utility>

#include "l2i/syntax.h"

namespace l2i {

std::string to_string(const Variable& v) {
  return v.name + polarity_char(v.pol);
}

std::string format_path(const Path& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

Term Term::make(Node node) {
  node.size = 1;
  for (std::size_t i = 0; i < node.arity; ++i) node.size += node.kids[i]->size;
  return Term(std::make_shared<const Node>(std::move(node)));
}

namespace {

using Kind = Term::Kind;

}  // namespace

Term Term::var(std::string name, Polarity pol) {
  return var(Variable{std::move(name), pol});
}

Term Term::var(Variable v) {
  Node n{Kind::kVar, v.pol, 0, {}, {}, 0};
  n.binders[0] = std::move(v);
  return make(std::move(n));
}

Term Term::top() {
  static const Term t = make(Node{Kind::kTop, Polarity::kPlus, 0, {}, {}, 0});
  return t;
}

Term Term::bot() {
  static const Term t = make(Node{Kind::kBot, Polarity::kMinus, 0, {}, {}, 0});
  return t;
}

#define L2I_UNARY(fn, kind)                                   \
  Term Term::fn(Term body, Polarity pol) {                    \
    Node n{Kind::kind, pol, 1, {}, {}, 0};                    \
    n.kids[0] = std::move(body.node_);                        \
    return make(std::move(n));                                \
  }

L2I_UNARY(abort, kAbort)
L2I_UNARY(fst, kFst)
L2I_UNARY(snd, kSnd)
L2I_UNARY(inl, kInl)
L2I_UNARY(inr, kInr)
L2I_UNARY(pi1, kPi1)
L2I_UNARY(pi2, kPi2)

#undef L2I_UNARY

#define L2I_BINARY(fn, kind)                                  \
  Term Term::fn(Term a, Term b, Polarity pol) {               \
    Node n{Kind::kind, pol, 2, {}, {}, 0};                    \
    n.kids[0] = std::move(a.node_);                           \
    n.kids[1] = std::move(b.node_);                           \
    return make(std::move(n));                                \
  }

L2I_BINARY(pair, kPair)
L2I_BINARY(app, kApp)
L2I_BINARY(mpair, kMPair)

#undef L2I_BINARY

Term Term::case_of(Term scrutinee, Variable x, Term left, Variable y,
                   Term right, Polarity pol) {
  Node n{Kind::kCase, pol, 3, {}, {}, 0};
  n.binders[0] = std::move(x);
  n.binders[1] = std::move(y);
  n.kids[0] = std::move(scrutinee.node_);
  n.kids[1] = std::move(left.node_);
  n.kids[2] = std::move(right.node_);
  return make(std::move(n));
}

Term Term::lam(Variable binder, Term body, Polarity pol) {
  Node n{Kind::kLam, pol, 1, {}, {}, 0};
  n.binders[0] = std::move(binder);
  n.kids[0] = std::move(body.node_);
  return make(std::move(n));
}

std::size_t Term::binder_count() const {
  switch (kind()) {
    case Kind::kLam:
      return 1;
    case Kind::kCase:
      return 2;
    default:
      return 0;
  }
}

Term Term::with_child(std::size_t i, Term c) const {
  if (i >= arity()) throw std::out_of_range("child index out of range");
  if (node_->kids[i] == c.node_) return *this;
  Node n = *node_;
  n.kids[i] = std::move(c.node_);
  return make(std::move(n));
}

Term Term::with_binder(std::size_t i, Variable v) const {
  if (i >= binder_count()) throw std::out_of_range("binder index out of range");
  Node n = *node_;
  n.binders[i] = std::move(v);
  return make(std::move(n));
}

Term Term::with_polarity(Polarity p) const {
  Node n = *node_;
  n.pol = p;
  if (n.kind == Kind::kVar) n.binders[0].pol = p;
  return make(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.pol != y.pol || x.size != y.size) return false;
  for (std::size_t i = 0; i < a.binder_count(); ++i) {
    if (!(x.binders[i] == y.binders[i])) return false;
  }
  if (x.kind == Kind::kVar && !(x.binders[0] == y.binders[0])) return false;
  for (std::size_t i = 0; i < x.arity; ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

std::string_view kind_name(Term::Kind kind) {
  switch (kind) {
    case Kind::kVar: return "var";
    case Kind::kTop: return "top";
    case Kind::kBot: return "bot";
    case Kind::kAbort: return "abort";
    case Kind::kPair: return "pair";
    case Kind::kFst: return "fst";
    case Kind::kSnd: return "snd";
    case Kind::kInl: return "inl";
    case Kind::kInr: return "inr";
    case Kind::kCase: return "case";
    case Kind::kLam: return "lambda";
    case Kind::kApp: return "app";
    case Kind::kMPair: return "mpair";
    case Kind::kPi1: return "p1";
    case Kind::kPi2: return "p2";
  }
  return "?";
}

Term subterm_at(const Term& t, const Path& path) {
  Term cur = t;
  for (std::size_t i : path) {
    if (i >= cur.arity()) throw std::out_of_range("path leaves the term");
    cur = cur.child(i);
  }
  return cur;
}

namespace {

Term replace_from(const Term& t, const Path& path, std::size_t depth,
                  Term replacement) {
  if (depth == path.size()) return replacement;
  const std::size_t i = path[depth];
  if (i >= t.arity()) throw std::out_of_range("path leaves the term");
  return t.with_child(i, replace_from(t.child(i), path, depth + 1,
                                      std::move(replacement)));
}

}  // namespace

Term replace_at(const Term& t, const Path& path, Term replacement) {
  return replace_from(t, path, 0, std::move(replacement));
}

std::optional<std::string> local_polarity_violation(const Term& t) {
  const Polarity p = t.polarity();
  auto pol = [](Polarity q) { return std::string(1, polarity_char(q)); };
  switch (t.kind()) {
    case Kind::kVar:
    case Kind::kAbort:
      return std::nullopt;
    case Kind::kTop:
      if (p != Polarity::kPlus) return "top must have polarity +";
      return std::nullopt;
    case Kind::kBot:
      if (p != Polarity::kMinus) return "bot must have polarity -";
      return std::nullopt;
    case Kind::kPair:
      if (t.child(0).polarity() != p || t.child(1).polarity() != p) {
        return fmt::format(
            "pair components must share the pair's polarity {}", pol(p));
      }
      return std::nullopt;
    case Kind::kFst:
    case Kind::kSnd:
    case Kind::kInl:
    case Kind::kInr:
      if (t.child(0).polarity() != p) {
        return fmt::format("{} argument must have polarity {}",
                           kind_name(t.kind()), pol(p));
      }
      return std::nullopt;
    case Kind::kCase: {
      const Polarity q = t.child(0).polarity();
      if (t.binder(0).pol != q || t.binder(1).pol != q) {
        return fmt::format("case binders must have the scrutinee's polarity {}",
                           pol(q));
      }
      if (t.child(1).polarity() != p || t.child(2).polarity() != p) {
        return fmt::format("case branches must have the case's polarity {}",
                           pol(p));
      }
      return std::nullopt;
    }
    case Kind::kLam:
      if (t.binder(0).pol != p || t.child(0).polarity() != p) {
        return fmt::format(
            "lambda binder and body must have the lambda's polarity {}", pol(p));
      }
      return std::nullopt;
    case Kind::kApp:
      if (t.child(0).polarity() != p || t.child(1).polarity() != p) {
        return fmt::format(
            "app function and argument must have the app's polarity {}", pol(p));
      }
      return std::nullopt;
    case Kind::kMPair:
      if (t.child(0).polarity() != Polarity::kPlus ||
          t.child(1).polarity() != Polarity::kMinus) {
        return "mixed pair needs a + first component and a - second component";
      }
      return std::nullopt;
    case Kind::kPi1:
      if (p != Polarity::kPlus) return "p1 must have polarity +";
      return std::nullopt;
    case Kind::kPi2:
      if (p != Polarity::kMinus) return "p2 must have polarity -";
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

void check_from(const Term& t, Path& path, std::vector<PolarityViolation>& out) {
  if (auto v = local_polarity_violation(t)) out.push_back({path, *v});
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(i);
    check_from(t.child(i), path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<PolarityViolation> check_polarities(const Term& t) {
  std::vector<PolarityViolation> out;
  Path path;
  check_from(t, path, out);
  return out;
}

bool well_formed(const Term& t) {
  if (local_polarity_violation(t)) return false;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (!well_formed(t.child(i))) return false;
  }
  return true;
}

}  // namespace l2i
