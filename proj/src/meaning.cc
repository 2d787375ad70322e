#include "l2i/meaning.h"

#include <fmt/core.h>

#include <algorithm>

#include "l2i/duality.h"
#include "l2i/textio.h"
#include "l2i/typing.h"

namespace l2i {

Term denotation(const Term& t, std::size_t fuel) {
  NormalizeResult r = normalize(t, fuel, false);
  if (!r.normal()) {
    // Replay with the trace kept; the strategy is deterministic.
    throw FuelExhausted(fmt::format("no normal form within {} steps", fuel),
                        normalize(t, fuel, true));
  }
  return r.term;
}

std::string_view to_string(Identity i) {
  switch (i) {
    case Identity::kIdentical: return "identical";
    case Identity::kIdenticalModuloDuality: return "identical-modulo-duality";
    case Identity::kDistinct: return "distinct";
  }
  return "?";
}

Identity compare_denotations(const Term& t, const Term& u, bool modulo_duality,
                             std::size_t fuel) {
  const Term nt = denotation(t, fuel);
  const Term nu = denotation(u, fuel);
  if (alpha_eq(nt, nu)) return Identity::kIdentical;
  if (modulo_duality && alpha_eq(nt, dual_term(nu))) {
    return Identity::kIdenticalModuloDuality;
  }
  return Identity::kDistinct;
}

bool identical(const Term& t, const Term& u, bool modulo_duality, std::size_t fuel) {
  return compare_denotations(t, u, modulo_duality, fuel) != Identity::kDistinct;
}

namespace {

class SenseCollector {
 public:
  SenseDescriptor run(const Derivation& d) {
    visit(d);
    return std::move(out_);
  }

 private:
  void visit(const Derivation& d) {
    add(d.concl.term);
    const Term& t = d.concl.term;
    for (std::size_t i = 0; i < d.prems.size(); ++i) {
      std::optional<Variable> bound;
      if ((d.rule == Rule::kImpI || d.rule == Rule::kCoImpI_d) && i == 0) {
        bound = t.binder(0);
      } else if ((d.rule == Rule::kOrE || d.rule == Rule::kAndE_d) && i > 0) {
        bound = t.binder(i - 1);
      }
      if (bound) binders_.push_back(*bound);
      visit(d.prems[i]);
      if (bound) binders_.pop_back();
    }
  }

  void add(const Term& t) {
    std::map<Variable, std::string> names;
    for (const auto& v : free_vars(t)) {
      auto it = std::find(binders_.rbegin(), binders_.rend(), v);
      if (it != binders_.rend()) {
        const auto depth = std::distance(it, binders_.rend()) - 1;
        names.emplace(v, fmt::format("^{}", depth));
      }
    }
    std::string key = alpha_key(t, names);
    if (seen_.contains({key, t.polarity()})) return;
    seen_.insert({key, t.polarity()});
    const Principal p = infer_principal(t);
    out_.entries.insert(SenseEntry{std::move(key), t.polarity(), scheme_key(p.type),
                                   print_term(t)});
  }

  std::vector<Variable> binders_;
  std::set<std::pair<std::string, Polarity>> seen_;
  SenseDescriptor out_;
};

}  // namespace

SenseDescriptor sense(const Derivation& d) {
  auto violations = validate(d);
  if (!violations.empty()) {
    const std::string message =
        fmt::format("sense needs a valid derivation (first violation at {}: {})",
                    format_path(violations[0].path), violations[0].message);
    throw InvalidDerivation(message, std::move(violations));
  }
  return SenseCollector().run(d);
}

bool synonymous(const Derivation& a, const Derivation& b) { return sense(a) == sense(b); }

}  // namespace l2i
