#include <fmt/core.h>

#include "l2i/textio.h"
#include "l2i/typing.h"

namespace l2i {

std::optional<Formula> Substitution::lookup(const std::string& meta) const {
  auto it = map_.find(meta);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void Substitution::bind(const std::string& meta, Formula f) {
  map_.insert_or_assign(meta, std::move(f));
}

Formula Substitution::apply(const Formula& f) const {
  if (f.is_ground() || map_.empty()) return f;
  if (f.is(Formula::Kind::kMeta)) {
    auto it = map_.find(f.name());
    return it == map_.end() ? f : apply(it->second);
  }
  Formula l = apply(f.left());
  Formula r = apply(f.right());
  if (l == f.left() && r == f.right()) return f;
  return Formula::binary(f.kind(), std::move(l), std::move(r));
}

Basis Substitution::apply(const Basis& b) const {
  Basis out;
  for (const auto& [name, f] : b.gamma) out.gamma.emplace(name, apply(f));
  for (const auto& [name, f] : b.delta) out.delta.emplace(name, apply(f));
  return out;
}

void Substitution::make_idempotent() {
  std::map<std::string, Formula> resolved;
  for (const auto& [name, f] : map_) resolved.emplace(name, apply(f));
  map_ = std::move(resolved);
}

std::string_view to_string(UnifyFailure f) {
  return f == UnifyFailure::kClash ? "clash" : "occurs check";
}

namespace {

Formula walk(const Substitution& s, Formula f) {
  while (f.is(Formula::Kind::kMeta)) {
    auto next = s.lookup(f.name());
    if (!next) break;
    f = *next;
  }
  return f;
}

bool occurs(const Substitution& s, const std::string& meta, const Formula& f) {
  if (f.is_ground()) return false;
  const Formula g = walk(s, f);
  if (g.is(Formula::Kind::kMeta)) return g.name() == meta;
  if (!g.is_binary()) return false;
  return occurs(s, meta, g.left()) || occurs(s, meta, g.right());
}

void bind_meta(Substitution& s, const Formula& meta, const Formula& f) {
  if (f.is(Formula::Kind::kMeta) && f.name() == meta.name()) return;
  if (occurs(s, meta.name(), f)) {
    throw UnifyError(UnifyFailure::kOccursCheck,
                     fmt::format("?{} occurs in {}", meta.name(),
                                 print_formula(s.apply(f))));
  }
  s.bind(meta.name(), f);
}

}  // namespace

void unify_into(Substitution& s, const Formula& a, const Formula& b) {
  const Formula x = walk(s, a);
  const Formula y = walk(s, b);
  if (x.is_ground() && y.is_ground()) {
    if (x == y) return;
  }
  if (x.is(Formula::Kind::kMeta)) return bind_meta(s, x, y);
  if (y.is(Formula::Kind::kMeta)) return bind_meta(s, y, x);
  if (x.kind() != y.kind() || (!x.is_binary() && x.name() != y.name())) {
    throw UnifyError(UnifyFailure::kClash,
                     fmt::format("cannot unify {} with {}", print_formula(s.apply(x)),
                                 print_formula(s.apply(y))));
  }
  if (!x.is_binary()) return;
  unify_into(s, x.left(), y.left());
  unify_into(s, x.right(), y.right());
}

Substitution unify(const Formula& a, const Formula& b) {
  Substitution s;
  unify_into(s, a, b);
  s.make_idempotent();
  return s;
}

std::string canonical_meta_name(std::size_t index) {
  std::string name(1, static_cast<char>('A' + index % 26));
  if (index >= 26) name += std::to_string(index / 26);
  return name;
}

namespace {

void collect_metas(const Formula& f, std::vector<std::string>& order,
                   std::map<std::string, std::string>& renaming) {
  for (const auto& m : metavariables(f)) {
    if (renaming.emplace(m, canonical_meta_name(renaming.size())).second) {
      order.push_back(m);
    }
  }
}

bool match(const Formula& general, const Formula& instance,
           std::map<std::string, Formula>& binding) {
  if (general.is(Formula::Kind::kMeta)) {
    auto [it, inserted] = binding.emplace(general.name(), instance);
    return inserted || it->second == instance;
  }
  if (general.kind() != instance.kind()) return false;
  if (!general.is_binary()) return general.name() == instance.name();
  return match(general.left(), instance.left(), binding) &&
         match(general.right(), instance.right(), binding);
}

}  // namespace

MetaRenaming canonical_renaming(const std::vector<Formula>& formulas) {
  std::vector<std::string> order;
  MetaRenaming renaming;
  for (const auto& f : formulas) collect_metas(f, order, renaming);
  return renaming;
}

Formula rename_metas(const Formula& f, const MetaRenaming& renaming) {
  if (f.is_ground()) return f;
  if (f.is(Formula::Kind::kMeta)) {
    auto it = renaming.find(f.name());
    return it == renaming.end() ? f : Formula::meta(it->second);
  }
  return Formula::binary(f.kind(), rename_metas(f.left(), renaming),
                         rename_metas(f.right(), renaming));
}

TypeScheme make_scheme(const Formula& body) {
  std::vector<std::string> order;
  std::map<std::string, std::string> renaming;
  collect_metas(body, order, renaming);
  TypeScheme s{{}, rename_metas(body, renaming)};
  for (const auto& m : order) s.metavariables.push_back(renaming.at(m));
  return s;
}

std::string scheme_key(const Formula& body) { return print_formula(make_scheme(body).body); }

bool same_scheme(const TypeScheme& a, const TypeScheme& b) {
  return make_scheme(a.body).body == make_scheme(b.body).body;
}

bool is_instance(const Formula& general, const Formula& instance) {
  std::map<std::string, Formula> binding;
  return match(general, instance, binding);
}

}  // namespace l2i
