// Identity of denotation (normal forms, optionally across the duality
// function) and sense (occurring terms with their principal types).

#ifndef L2I_MEANING_H_
#define L2I_MEANING_H_

#include <set>
#include <string>
#include <string_view>
#include <tuple>

#include "l2i/derivation.h"
#include "l2i/rewrite.h"
#include "l2i/syntax.h"

namespace l2i {

class FuelExhausted : public Error {
 public:
  FuelExhausted(const std::string& message, NormalizeResult partial)
      : Error(message), partial_(std::move(partial)) {}

  const NormalizeResult& partial() const { return partial_; }

 private:
  NormalizeResult partial_;
};

// The normal form reached by the canonical strategy; throws FuelExhausted.
Term denotation(const Term& t, std::size_t fuel = kDefaultFuel);

enum class Identity { kIdentical, kIdenticalModuloDuality, kDistinct };

// "identical", "identical-modulo-duality", "distinct"
std::string_view to_string(Identity i);

Identity compare_denotations(const Term& t, const Term& u, bool modulo_duality,
                             std::size_t fuel = kDefaultFuel);

bool identical(const Term& t, const Term& u, bool modulo_duality,
               std::size_t fuel = kDefaultFuel);

// One element of a sense: the alpha-class of an occurring term, its polarity
// and its principal type scheme. Variables bound by an enclosing binder of
// the derivation's end-term are named by binding depth, so renaming bound
// variables leaves the sense unchanged.
struct SenseEntry {
  std::string term_key;
  Polarity pol;
  std::string scheme_key;
  std::string display;  // the term as printed at its first occurrence

  friend bool operator<(const SenseEntry& a, const SenseEntry& b) {
    return std::tie(a.term_key, a.pol, a.scheme_key) <
           std::tie(b.term_key, b.pol, b.scheme_key);
  }
  friend bool operator==(const SenseEntry& a, const SenseEntry& b) {
    return a.term_key == b.term_key && a.pol == b.pol && a.scheme_key == b.scheme_key;
  }
};

struct SenseDescriptor {
  std::set<SenseEntry> entries;

  friend bool operator==(const SenseDescriptor&, const SenseDescriptor&) = default;
};

// Throws InvalidDerivation when d does not validate.
SenseDescriptor sense(const Derivation& d);
bool synonymous(const Derivation& a, const Derivation& b);

}  // namespace l2i

#endif  // L2I_MEANING_H_
