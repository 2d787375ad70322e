// Free variables, capture-avoiding substitution and alpha-equivalence.

#include <fmt/core.h>

#include <algorithm>
#include <array>
#include <cctype>

#include "l2i/syntax.h"

namespace l2i {

namespace {

using Kind = Term::Kind;

// Scope of the child at `i`: which binders of t are in scope there.
// Lam binds its body; case binds binder 0 in branch 1 and binder 1 in branch 2.
std::optional<std::size_t> binder_for_child(const Term& t, std::size_t i) {
  if (t.is(Kind::kLam)) return 0;
  if (t.is(Kind::kCase) && i > 0) return i - 1;
  return std::nullopt;
}

void collect_free(const Term& t, std::vector<Variable>& bound,
                  std::set<Variable>& out) {
  if (t.is(Kind::kVar)) {
    const auto& v = t.variable();
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
    return;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    auto b = binder_for_child(t, i);
    if (b) bound.push_back(t.binder(*b));
    collect_free(t.child(i), bound, out);
    if (b) bound.pop_back();
  }
}

bool occurs_free_in(const Variable& x, const Term& t) {
  if (t.is(Kind::kVar)) return t.variable() == x;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    auto b = binder_for_child(t, i);
    if (b && t.binder(*b) == x) continue;
    if (occurs_free_in(x, t.child(i))) return true;
  }
  return false;
}

void collect_names(const Term& t, std::set<std::string>& out) {
  if (t.is(Kind::kVar)) out.insert(t.variable().name);
  for (std::size_t i = 0; i < t.binder_count(); ++i) out.insert(t.binder(i).name);
  for (std::size_t i = 0; i < t.arity(); ++i) collect_names(t.child(i), out);
}

constexpr std::array<std::string_view, 11> kReserved = {
    "top", "bot", "abort", "fst", "snd", "inl", "inr", "case", "app", "p1", "p2"};

class Substituter {
 public:
  Substituter(const Variable& x, const Term& s)
      : x_(x), s_(s), fv_s_(free_vars(s)) {
    for (const auto& v : fv_s_) fv_names_.insert(v.name);
  }

  Term run(const Term& t) const {
    if (t.is(Kind::kVar)) return t.variable() == x_ ? s_ : t;
    Term out = t;
    for (std::size_t i = 0; i < t.arity(); ++i) {
      auto b = binder_for_child(t, i);
      if (!b) {
        out = out.with_child(i, run(t.child(i)));
        continue;
      }
      const Variable& binder = t.binder(*b);
      Term body = t.child(i);
      if (binder == x_ || !occurs_free_in(x_, body)) continue;
      if (fv_s_.contains(binder)) {
        std::set<std::string> avoid = fv_names_;
        collect_names(body, avoid);
        avoid.insert(x_.name);
        Variable renamed{fresh_name(binder.name, avoid), binder.pol};
        body = substitute(body, binder, Term::var(renamed));
        out = out.with_binder(*b, renamed);
      }
      out = out.with_child(i, run(body));
    }
    return out;
  }

 private:
  const Variable& x_;
  const Term& s_;
  std::set<Variable> fv_s_;
  std::set<std::string> fv_names_;
};

}  // namespace

std::set<Variable> free_vars(const Term& t) {
  std::set<Variable> out;
  std::vector<Variable> bound;
  collect_free(t, bound, out);
  return out;
}

bool occurs_free(const Variable& x, const Term& t) { return occurs_free_in(x, t); }

std::set<std::string> all_names(const Term& t) {
  std::set<std::string> out;
  collect_names(t, out);
  return out;
}

bool is_reserved_word(std::string_view name) {
  return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) {
    stem.pop_back();
  }
  if (stem.empty()) stem = "v";
  for (std::size_t n = 1;; ++n) {
    std::string candidate = stem + std::to_string(n);
    if (!avoid.contains(candidate) && !is_reserved_word(candidate)) return candidate;
  }
}

Term substitute(const Term& t, const Variable& x, const Term& s) {
  if (s.polarity() != x.pol) {
    throw PolarityMismatch(fmt::format(
        "cannot substitute a term of polarity {} for {}",
        polarity_char(s.polarity()), to_string(x)));
  }
  return Substituter(x, s).run(t);
}

namespace {

// Index of the innermost binder equal to v, or -1 when v is free.
long binding_index(const std::vector<Variable>& stack, const Variable& v) {
  for (std::size_t i = stack.size(); i-- > 0;) {
    if (stack[i] == v) return static_cast<long>(i);
  }
  return -1;
}

bool alpha_eq_in(const Term& t, const Term& u, std::vector<Variable>& left,
                 std::vector<Variable>& right) {
  if (t.kind() != u.kind() || t.polarity() != u.polarity() ||
      t.size() != u.size()) {
    return false;
  }
  if (t.is(Kind::kVar)) {
    const long i = binding_index(left, t.variable());
    const long j = binding_index(right, u.variable());
    if (i < 0 && j < 0) return t.variable() == u.variable();
    return i == j;
  }
  for (std::size_t b = 0; b < t.binder_count(); ++b) {
    if (t.binder(b).pol != u.binder(b).pol) return false;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) {
    auto b = binder_for_child(t, i);
    if (b) {
      left.push_back(t.binder(*b));
      right.push_back(u.binder(*b));
    }
    const bool same = alpha_eq_in(t.child(i), u.child(i), left, right);
    if (b) {
      left.pop_back();
      right.pop_back();
    }
    if (!same) return false;
  }
  return true;
}

void key_from(const Term& t, std::vector<Variable>& bound,
              const std::map<Variable, std::string>& free_names, std::string& out) {
  const char pol = polarity_char(t.polarity());
  if (t.is(Kind::kVar)) {
    const long i = binding_index(bound, t.variable());
    if (i >= 0) {
      out += '#';
      out += std::to_string(i);
    } else if (auto it = free_names.find(t.variable()); it != free_names.end()) {
      out += it->second;
    } else {
      out += t.variable().name;
    }
    out += pol;
    return;
  }
  out += kind_name(t.kind());
  out += pol;
  for (std::size_t b = 0; b < t.binder_count(); ++b) {
    out += polarity_char(t.binder(b).pol);
  }
  if (t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ',';
    auto b = binder_for_child(t, i);
    if (b) bound.push_back(t.binder(*b));
    key_from(t.child(i), bound, free_names, out);
    if (b) bound.pop_back();
  }
  out += ')';
}

}  // namespace

bool alpha_eq(const Term& t, const Term& u) {
  if (t.same_node(u)) return true;
  std::vector<Variable> left, right;
  return alpha_eq_in(t, u, left, right);
}

std::string alpha_key(const Term& t, const std::map<Variable, std::string>& free_names) {
  std::string out;
  std::vector<Variable> bound;
  key_from(t, bound, free_names, out);
  return out;
}

}  // namespace l2i
