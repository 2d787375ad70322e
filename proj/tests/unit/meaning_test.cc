#include "l2i/meaning.h"

#include <gtest/gtest.h>

#include "../support.h"
#include "l2i/duality.h"
#include "l2i/typing.h"

namespace l2i {
namespace {

using testing::F;
using testing::T;
constexpr auto kPlus = Polarity::kPlus;
constexpr auto kMinus = Polarity::kMinus;

TEST(Denotation, Examples) {
  EXPECT_EQ(denotation(T("app+((\\x+. x+)+, top+)")), Term::top());
  EXPECT_EQ(denotation(T("(\\x+. x+)+")), T("(\\x+. x+)+"));
  EXPECT_EQ(denotation(T("fst+(<top+, top+>+)")), Term::top());
}

TEST(Denotation, FuelExhausted) {
  const Term omega = T("app+((\\x+. app+(x+, x+))+, (\\x+. app+(x+, x+))+)");
  try {
    denotation(omega, 20);
    FAIL() << "normalized";
  } catch (const FuelExhausted& e) {
    EXPECT_EQ(e.partial().steps, 20u);
    EXPECT_EQ(e.partial().trace.size(), 20u);
  }
}

TEST(Identical, Examples) {
  EXPECT_TRUE(identical(T("(\\x+. x+)+"), T("(\\y+. y+)+"), false));
  EXPECT_TRUE(identical(T("(\\x+. x+)+"), T("(\\x-. x-)-"), true));
  EXPECT_FALSE(identical(T("(\\x+. x+)+"), T("(\\x-. x-)-"), false));
  EXPECT_EQ(compare_denotations(T("(\\x+. x+)+"), T("(\\x-. x-)-"), true),
            Identity::kIdenticalModuloDuality);
  EXPECT_EQ(compare_denotations(T("(\\x+. x+)+"), T("app+((\\y+. y+)+, (\\z+. z+)+)"), true),
            Identity::kIdentical);
  EXPECT_EQ(to_string(Identity::kDistinct), "distinct");
  EXPECT_EQ(to_string(Identity::kIdenticalModuloDuality), "identical-modulo-duality");
}

std::set<std::tuple<std::string, Polarity, std::string>> shown(const SenseDescriptor& s) {
  std::set<std::tuple<std::string, Polarity, std::string>> out;
  for (const auto& e : s.entries) out.emplace(e.display, e.pol, e.scheme_key);
  return out;
}

TEST(Sense, PositiveIdentity) {
  const SenseDescriptor s = sense(testing::load("identity_plus_x_rho.json"));
  EXPECT_EQ(shown(s), (std::set<std::tuple<std::string, Polarity, std::string>>{
                          {"x+", kPlus, "?A"}, {"(\\x+. x+)+", kPlus, "?A -> ?A"}}));
}

TEST(Sense, IdentityMatrix) {
  const char* plus[] = {"identity_plus_x_rho.json", "identity_plus_x_sigma.json",
                        "identity_plus_y_sigma.json"};
  const char* minus[] = {"identity_minus_x_rho.json", "identity_minus_x_sigma.json",
                         "identity_minus_y_sigma.json"};
  for (const char* a : plus) {
    for (const char* b : plus) EXPECT_TRUE(synonymous(testing::load(a), testing::load(b)));
    for (const char* b : minus) {
      const SenseDescriptor sa = sense(testing::load(a));
      const SenseDescriptor sb = sense(testing::load(b));
      EXPECT_FALSE(sa == sb);
      // Every entry differs, at least in its polarity.
      for (const auto& e : sa.entries) {
        for (const auto& f : sb.entries) EXPECT_NE(e.pol, f.pol);
      }
    }
  }
  for (const char* a : minus) {
    for (const char* b : minus) EXPECT_TRUE(synonymous(testing::load(a), testing::load(b)));
  }
}

TEST(Sense, ReflexiveAndRequiresValidity) {
  const Derivation d = testing::load("excluded_proof.json");
  EXPECT_TRUE(synonymous(d, d));
  EXPECT_EQ(sense(d).entries.size(), 7u);
  Derivation bad = d;
  bad.concl.type = F("a");
  EXPECT_THROW(sense(bad), InvalidDerivation);
}

TEST(Sense, DeclaredTypesDoNotMatter) {
  // Same terms, different annotations: the schemes come from the terms.
  const Derivation a = check({}, kPlus, T("(\\x+. fst+(x+))+"), F("a & b -> a"));
  const Derivation b = check({}, kPlus, T("(\\x+. fst+(x+))+"), F("(c -> c) & top -> c -> c"));
  EXPECT_TRUE(synonymous(a, b));
}

// Applies a bijective atom renaming to every annotation of d.
Formula rename_atoms(const Formula& f, const std::map<std::string, std::string>& m) {
  if (f.is(Formula::Kind::kAtom)) return Formula::atom(m.at(f.name()));
  if (!f.is_binary()) return f;
  return Formula::binary(f.kind(), rename_atoms(f.left(), m), rename_atoms(f.right(), m));
}

Derivation rename_atoms(Derivation d, const std::map<std::string, std::string>& m) {
  d.concl.type = rename_atoms(d.concl.type, m);
  for (auto& [n, f] : d.concl.basis.gamma) f = rename_atoms(f, m);
  for (auto& [n, f] : d.concl.basis.delta) f = rename_atoms(f, m);
  for (auto& p : d.prems) p = rename_atoms(std::move(p), m);
  return d;
}

class Generated : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { corpus_ = new std::vector<Derivation>(testing::corpus(1000, 6, 20000)); }
  static void TearDownTestSuite() { delete corpus_; }
  static std::vector<Derivation>* corpus_;
};
std::vector<Derivation>* Generated::corpus_ = nullptr;

TEST_F(Generated, AtomRenamingLeavesSenseUnchanged) {
  const std::map<std::string, std::string> m = {{"a", "b"}, {"b", "c"}, {"c", "a"}};
  for (const auto& d : *corpus_) {
    const Derivation r = rename_atoms(d, m);
    ASSERT_TRUE(validate(r).empty());
    EXPECT_TRUE(synonymous(d, r));
  }
}

TEST_F(Generated, SenseIsFinerThanDenotation) {
  // Among the corpus, synonymous pairs (found by bucketing on the sense) must
  // have identical denotations modulo duality.
  std::map<std::set<SenseEntry>, std::vector<const Derivation*>> buckets;
  for (const auto& d : *corpus_) buckets[sense(d).entries].push_back(&d);
  std::size_t pairs = 0;
  for (const auto& [key, ds] : buckets) {
    for (std::size_t i = 1; i < ds.size(); ++i) {
      ++pairs;
      EXPECT_TRUE(identical(ds[0]->concl.term, ds[i]->concl.term, true))
          << print_term(ds[0]->concl.term) << " vs " << print_term(ds[i]->concl.term);
    }
  }
  RecordProperty("synonymous_pairs", static_cast<int>(pairs));
}

TEST_F(Generated, IdentityIsAnEquivalence) {
  for (std::size_t i = 0; i + 2 < corpus_->size(); i += 3) {
    const Term& t = (*corpus_)[i].concl.term;
    const Term& u = (*corpus_)[i + 1].concl.term;
    const Term dt = dual_term(t);
    EXPECT_TRUE(identical(t, t, false));
    EXPECT_EQ(identical(t, u, true), identical(u, t, true));
    EXPECT_TRUE(identical(t, dt, true));
    EXPECT_TRUE(identical(dt, t, true));
    EXPECT_FALSE(identical(t, dt, false));
    const Term n = denotation(t);
    EXPECT_TRUE(identical(t, n, false));
    EXPECT_TRUE(identical(n, t, false));
  }
}

}  // namespace
}  // namespace l2i
