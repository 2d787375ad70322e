// Core syntax of the two-sorted calculus: polarities, formulas (types),
// polarized proof/refutation terms and bases.
//
// Formulas and terms are immutable trees with value semantics; copies share
// structure. Terms are compared up to alpha-equivalence by `alpha_eq`;
// `operator==` is exact structural identity (binder names included).

#ifndef L2I_SYNTAX_H_
#define L2I_SYNTAX_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace l2i {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Polarity : std::uint8_t { kPlus, kMinus };

constexpr Polarity flip(Polarity p) {
  return p == Polarity::kPlus ? Polarity::kMinus : Polarity::kPlus;
}

constexpr char polarity_char(Polarity p) {
  return p == Polarity::kPlus ? '+' : '-';
}

// A polarized term variable. x+ and x- are unrelated variables.
struct Variable {
  std::string name;
  Polarity pol = Polarity::kPlus;

  friend auto operator<=>(const Variable&, const Variable&) = default;
  friend bool operator==(const Variable&, const Variable&) = default;
};

std::string to_string(const Variable& v);

// Child indices from the root of a term (or premise indices from the root of
// a derivation).
using Path = std::vector<std::size_t>;

// "root" for the empty path, otherwise dot-separated indices.
std::string format_path(const Path& path);

class Formula {
 public:
  enum class Kind : std::uint8_t {
    kAtom,
    kMeta,  // formula metavariable, printed ?A
    kFalsum,
    kVerum,
    kAnd,
    kOr,
    kImp,
    kCoImp,  // coimp(B, A) is B -< A: proof of B, refutation of A
  };

  static Formula atom(std::string name);
  static Formula meta(std::string name);
  static Formula falsum();
  static Formula verum();
  static Formula conj(Formula left, Formula right);
  static Formula disj(Formula left, Formula right);
  static Formula imp(Formula antecedent, Formula consequent);
  static Formula coimp(Formula body, Formula subtrahend);
  static Formula binary(Kind kind, Formula left, Formula right);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  bool is_binary() const { return node_->left != nullptr; }
  // Name of an atom or metavariable.
  const std::string& name() const { return node_->name; }
  Formula left() const { return Formula(node_->left); }
  Formula right() const { return Formula(node_->right); }

  bool is_ground() const { return node_->ground; }
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Formula& a, const Formula& b);
  // Total order, used for ordered containers and canonical output.
  static int compare(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    bool ground;
    std::size_t size;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const {
    return Formula::compare(a, b) < 0;
  }
};

// Metavariable names occurring in f, in left-to-right order of first
// occurrence.
std::vector<std::string> metavariables(const Formula& f);

class Term {
 public:
  enum class Kind : std::uint8_t {
    kVar,
    kTop,
    kBot,
    kAbort,
    kPair,
    kFst,
    kSnd,
    kInl,
    kInr,
    kCase,
    kLam,
    kApp,
    kMPair,
    kPi1,
    kPi2,
  };

  // Child layout: abort/fst/snd/inl/inr/pi1/pi2/lam -> [body];
  // pair -> [left, right]; app -> [fun, arg]; mpair -> [pos, neg];
  // case -> [scrutinee, left branch, right branch].
  static Term var(std::string name, Polarity pol);
  static Term var(Variable v);
  static Term top();
  static Term bot();
  static Term abort(Term body, Polarity pol);
  static Term pair(Term left, Term right, Polarity pol);
  static Term fst(Term body, Polarity pol);
  static Term snd(Term body, Polarity pol);
  static Term inl(Term body, Polarity pol);
  static Term inr(Term body, Polarity pol);
  static Term case_of(Term scrutinee, Variable x, Term left, Variable y,
                      Term right, Polarity pol);
  static Term lam(Variable binder, Term body, Polarity pol);
  static Term app(Term fun, Term arg, Polarity pol);
  static Term mpair(Term pos, Term neg, Polarity pol);
  static Term pi1(Term body, Polarity pol);
  static Term pi2(Term body, Polarity pol);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  Polarity polarity() const { return node_->pol; }

  // The variable of a kVar node.
  const Variable& variable() const { return node_->binders[0]; }
  // Binders: index 0 for lam, 0 and 1 for case.
  const Variable& binder(std::size_t i = 0) const { return node_->binders[i]; }
  std::size_t binder_count() const;

  std::size_t arity() const { return node_->arity; }
  Term child(std::size_t i) const { return Term(node_->kids[i]); }
  std::size_t size() const { return node_->size; }

  Term with_child(std::size_t i, Term c) const;
  Term with_binder(std::size_t i, Variable v) const;
  Term with_polarity(Polarity p) const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    Polarity pol;
    std::uint8_t arity;
    Variable binders[2];
    std::shared_ptr<const Node> kids[3];
    std::size_t size;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Node node);

  std::shared_ptr<const Node> node_;
};

std::string_view kind_name(Term::Kind kind);

// Subterm at `path`; throws std::out_of_range when the path leaves the term.
Term subterm_at(const Term& t, const Path& path);
// t with the subterm at `path` replaced.
Term replace_at(const Term& t, const Path& path, Term replacement);

// Variables with a free occurrence in t.
std::set<Variable> free_vars(const Term& t);
bool occurs_free(const Variable& x, const Term& t);
// Every variable name appearing in t, free or bound.
std::set<std::string> all_names(const Term& t);

class PolarityMismatch : public Error {
 public:
  using Error::Error;
};

// Capture-avoiding t[s/x]. Binders that would capture a free variable of s
// are renamed with `fresh_name`. Throws PolarityMismatch if pol(s) != x.pol.
Term substitute(const Term& t, const Variable& x, const Term& s);

// Reserved words of the term syntax; never produced as variable names.
bool is_reserved_word(std::string_view name);

// Deterministic fresh name: strips a trailing numeric suffix from `base` and
// appends the smallest positive number giving a name outside `avoid` that is
// not a reserved word.
std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid);

bool alpha_eq(const Term& t, const Term& u);

// Canonical text of t's alpha-class: bound variables are replaced by their
// binding depth, free variables are printed by name (or by their entry in
// `free_names` when present). alpha_eq(t, u) iff alpha_key(t) == alpha_key(u).
std::string alpha_key(const Term& t,
                      const std::map<Variable, std::string>& free_names = {});

struct PolarityViolation {
  Path path;
  std::string constraint;
};

// The constraint broken at the root node of t, if any (children unchecked).
std::optional<std::string> local_polarity_violation(const Term& t);
// All violations, in pre-order.
std::vector<PolarityViolation> check_polarities(const Term& t);
bool well_formed(const Term& t);

// Assumptions (gamma, positive variables) and counterassumptions (delta,
// negative variables). Keys are variable names; the map determines polarity.
struct Basis {
  using Entries = std::map<std::string, Formula>;

  Entries gamma;
  Entries delta;

  const Entries& side(Polarity p) const {
    return p == Polarity::kPlus ? gamma : delta;
  }
  Entries& side(Polarity p) { return p == Polarity::kPlus ? gamma : delta; }

  std::optional<Formula> lookup(const Variable& v) const;
  // Adds v : f, replacing any entry for v.
  void bind(const Variable& v, Formula f);
  Basis with(const Variable& v, Formula f) const;
  bool empty() const { return gamma.empty() && delta.empty(); }
  bool is_ground() const;

  friend bool operator==(const Basis&, const Basis&) = default;
};

// Every entry of `sub` is present, with the same formula, in `super`.
bool is_sub_basis(const Basis& sub, const Basis& super);

}  // namespace l2i

#endif  // L2I_SYNTAX_H_
