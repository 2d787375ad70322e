#include <algorithm>
#include <utility>

#include "l2i/syntax.h"

namespace l2i {

namespace {

bool binary_kind(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
    case Formula::Kind::kImp:
    case Formula::Kind::kCoImp:
      return true;
    default:
      return false;
  }
}

}  // namespace

Formula Formula::atom(std::string name) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kAtom, std::move(name), nullptr, nullptr, true, 1}));
}

Formula Formula::meta(std::string name) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kMeta, std::move(name), nullptr, nullptr, false, 1}));
}

Formula Formula::falsum() {
  static const Formula f(std::make_shared<const Node>(
      Node{Kind::kFalsum, "", nullptr, nullptr, true, 1}));
  return f;
}

Formula Formula::verum() {
  static const Formula f(std::make_shared<const Node>(
      Node{Kind::kVerum, "", nullptr, nullptr, true, 1}));
  return f;
}

Formula Formula::binary(Kind kind, Formula left, Formula right) {
  if (!binary_kind(kind)) throw std::invalid_argument("not a binary connective");
  const bool ground = left.is_ground() && right.is_ground();
  const std::size_t size = 1 + left.size() + right.size();
  return Formula(std::make_shared<const Node>(Node{kind, "", std::move(left.node_),
                                                   std::move(right.node_), ground,
                                                   size}));
}

Formula Formula::conj(Formula left, Formula right) {
  return binary(Kind::kAnd, std::move(left), std::move(right));
}

Formula Formula::disj(Formula left, Formula right) {
  return binary(Kind::kOr, std::move(left), std::move(right));
}

Formula Formula::imp(Formula antecedent, Formula consequent) {
  return binary(Kind::kImp, std::move(antecedent), std::move(consequent));
}

Formula Formula::coimp(Formula body, Formula subtrahend) {
  return binary(Kind::kCoImp, std::move(body), std::move(subtrahend));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  if (a.is_binary()) return a.left() == b.left() && a.right() == b.right();
  return a.name() == b.name();
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (a.is_binary()) {
    if (int c = compare(a.left(), b.left()); c != 0) return c;
    return compare(a.right(), b.right());
  }
  return a.name().compare(b.name()) < 0 ? -1 : (a.name() == b.name() ? 0 : 1);
}

namespace {

void collect_metas(const Formula& f, std::vector<std::string>& out) {
  if (f.is_ground()) return;
  if (f.is(Formula::Kind::kMeta)) {
    if (std::find(out.begin(), out.end(), f.name()) == out.end()) {
      out.push_back(f.name());
    }
    return;
  }
  if (f.is_binary()) {
    collect_metas(f.left(), out);
    collect_metas(f.right(), out);
  }
}

}  // namespace

std::vector<std::string> metavariables(const Formula& f) {
  std::vector<std::string> out;
  collect_metas(f, out);
  return out;
}

std::optional<Formula> Basis::lookup(const Variable& v) const {
  const auto& entries = side(v.pol);
  if (auto it = entries.find(v.name); it != entries.end()) return it->second;
  return std::nullopt;
}

void Basis::bind(const Variable& v, Formula f) {
  side(v.pol).insert_or_assign(v.name, std::move(f));
}

Basis Basis::with(const Variable& v, Formula f) const {
  Basis b = *this;
  b.bind(v, std::move(f));
  return b;
}

bool Basis::is_ground() const {
  auto ground = [](const Entries& e) {
    return std::all_of(e.begin(), e.end(),
                       [](const auto& kv) { return kv.second.is_ground(); });
  };
  return ground(gamma) && ground(delta);
}

bool is_sub_basis(const Basis& sub, const Basis& super) {
  for (Polarity p : {Polarity::kPlus, Polarity::kMinus}) {
    const auto& big = super.side(p);
    for (const auto& [name, f] : sub.side(p)) {
      auto it = big.find(name);
      if (it == big.end() || !(it->second == f)) return false;
    }
  }
  return true;
}

}  // namespace l2i
