// Curry-style type assignment: unification over formula metavariables,
// principal-type inference and checking against a given basis and type.

#ifndef L2I_TYPING_H_
#define L2I_TYPING_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "l2i/derivation.h"
#include "l2i/syntax.h"

namespace l2i {

// Finite map from metavariable names to formulas. Results of `unify` are
// idempotent; while a unification is in progress bindings may chain.
class Substitution {
 public:
  std::optional<Formula> lookup(const std::string& meta) const;
  void bind(const std::string& meta, Formula f);
  bool empty() const { return map_.empty(); }
  const std::map<std::string, Formula>& entries() const { return map_; }

  // Applies bindings until no bound metavariable remains.
  Formula apply(const Formula& f) const;
  Basis apply(const Basis& b) const;
  // Replaces every binding's formula by its full resolution.
  void make_idempotent();

 private:
  std::map<std::string, Formula> map_;
};

enum class UnifyFailure { kClash, kOccursCheck };

std::string_view to_string(UnifyFailure f);

class UnifyError : public Error {
 public:
  UnifyError(UnifyFailure reason, const std::string& message)
      : Error(message), reason_(reason) {}
  UnifyFailure reason() const { return reason_; }

 private:
  UnifyFailure reason_;
};

// Most general unifier of a and b (with occurs check).
Substitution unify(const Formula& a, const Formula& b);
// Extends s so that s(a) = s(b); s is left partially extended on failure.
void unify_into(Substitution& s, const Formula& a, const Formula& b);

// A type with its metavariables, in order of first occurrence.
struct TypeScheme {
  std::vector<std::string> metavariables;
  Formula body;
};

TypeScheme make_scheme(const Formula& body);
// Text of the scheme after renaming its metavariables ?A, ?B, ... in order of
// first occurrence; equal keys iff the schemes agree up to renaming.
std::string scheme_key(const Formula& body);
bool same_scheme(const TypeScheme& a, const TypeScheme& b);

// Canonical metavariable names (printed with a leading ?): A ... Z, then
// A1 ... Z1, ...
std::string canonical_meta_name(std::size_t index);

using MetaRenaming = std::map<std::string, std::string>;

// Assigns canonical names to the metavariables of `formulas`, in order of
// first occurrence across the list.
MetaRenaming canonical_renaming(const std::vector<Formula>& formulas);
// Renames metavariables; those missing from `renaming` are kept.
Formula rename_metas(const Formula& f, const MetaRenaming& renaming);

// The most general typing (gamma; delta) =>pol t : type. Metavariables are
// renamed canonically in order of first occurrence: assumptions (by name),
// then counterassumptions, then the type.
struct Principal {
  Basis basis;
  Polarity pol;
  Formula type;

  TypeScheme scheme() const { return make_scheme(type); }
};

enum class TypeErrorKind { kTypeMismatch, kUnboundVariable, kUntypable, kIllFormed };

std::string_view to_string(TypeErrorKind k);

class TypeError : public Error {
 public:
  TypeError(TypeErrorKind kind, const std::string& message, Path path = {},
            std::optional<UnifyFailure> reason = std::nullopt);

  TypeErrorKind kind() const { return kind_; }
  const Path& path() const { return path_; }
  std::optional<UnifyFailure> reason() const { return reason_; }

 private:
  TypeErrorKind kind_;
  Path path_;
  std::optional<UnifyFailure> reason_;
};

// Throws TypeError (kUntypable with the failing path, or kIllFormed).
Principal infer_principal(const Term& t);

// Builds the derivation of (basis) =>pol t : a. Every premise receives the
// full basis extended by discharged assumptions; a binder replaces an entry
// of the same polarized name. Type positions left open by the term (abort,
// unused assumptions) are filled with top.
Derivation check(const Basis& basis, Polarity pol, const Term& t, const Formula& a);

// True when `instance` is obtained from `general` by substituting
// metavariables consistently.
bool is_instance(const Formula& general, const Formula& instance);

}  // namespace l2i

#endif  // L2I_TYPING_H_
