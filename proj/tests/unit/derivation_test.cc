#include "l2i/derivation.h"

#include <gtest/gtest.h>

#include "../support.h"
#include "l2i/typing.h"

namespace l2i {
namespace {

using testing::F;
using testing::T;
constexpr auto kPlus = Polarity::kPlus;
constexpr auto kMinus = Polarity::kMinus;

Derivation leaf(Rule r, Basis b, Polarity p, const char* term, const char* type) {
  return Derivation{r, Judgment{std::move(b), p, T(term), F(type)}, {}};
}

TEST(Rules, NamesRoundTrip) {
  EXPECT_EQ(inference_rules().size(), 26u);
  for (Rule r : all_rules()) EXPECT_EQ(rule_from_name(rule_name(r)), r);
  EXPECT_EQ(rule_name(Rule::kCoImpE_d), "CoImpE_d");
  EXPECT_EQ(rule_name(Rule::kHypMinus), "Hyp-");
  EXPECT_FALSE(rule_from_name("ImpE_d3").has_value());
}

TEST(Rules, Arities) {
  EXPECT_EQ(rule_arity(Rule::kOrE), 3u);
  EXPECT_EQ(rule_arity(Rule::kAndE_d), 3u);
  EXPECT_EQ(rule_arity(Rule::kTopI), 0u);
  EXPECT_EQ(rule_arity(Rule::kBotI_d), 0u);
  EXPECT_EQ(rule_arity(Rule::kHypPlus), 0u);
  EXPECT_EQ(rule_arity(Rule::kImpI_d), 2u);
  EXPECT_EQ(rule_arity(Rule::kCoImpE2), 1u);
  EXPECT_EQ(rule_polarity(Rule::kCoImpE2), kMinus);
  EXPECT_EQ(rule_polarity(Rule::kCoImpE1), kPlus);
  EXPECT_FALSE(rule_polarity(Rule::kOrE).has_value());
}

TEST(Validate, FirstExample) {
  EXPECT_TRUE(validate(testing::load("excluded_proof.json")).empty());
  EXPECT_TRUE(validate(testing::load("excluded_refutation.json")).empty());
}

TEST(Validate, AssumptionMustBeInTheBasis) {
  const auto v = validate(leaf(Rule::kHypPlus, {}, kPlus, "x+", "a"));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_TRUE(v[0].path.empty());
  Basis b;
  b.bind({"x", kPlus}, F("a"));
  EXPECT_TRUE(validate(leaf(Rule::kHypPlus, b, kPlus, "x+", "a")).empty());
  EXPECT_FALSE(validate(leaf(Rule::kHypPlus, b, kPlus, "x+", "b")).empty());
  EXPECT_FALSE(validate(leaf(Rule::kHypMinus, b, kMinus, "x-", "a")).empty());
}

TEST(Validate, ImplicationBodyMustBeThePremise) {
  Derivation d = testing::load("identity_plus_x_rho.json");
  EXPECT_TRUE(validate(d).empty());
  d.prems[0].concl.term = T("y+");
  d.prems[0].concl.basis.gamma = {{"y", F("rho")}};
  EXPECT_FALSE(validate(d).empty());
}

TEST(Validate, PremiseOrderIsFixed) {
  Derivation d = testing::load("excluded_proof.json");
  std::swap(d.prems[0].prems[0], d.prems[0].prems[1]);
  const auto v = validate(d);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].path, (Path{0}));
}

TEST(Validate, WrongArity) {
  Derivation d = testing::load("identity_plus_x_rho.json");
  d.prems.push_back(d.prems[0]);
  EXPECT_FALSE(validate(d).empty());
}

TEST(Validate, VacuousDischargeAndUnusedEntries) {
  // (\y+. top+)+ : a -> top, with an unused assumption z+ : b in the basis.
  Basis b;
  b.bind({"z", kPlus}, F("b"));
  Basis inner = b;
  inner.bind({"y", kPlus}, F("a"));
  Derivation d{Rule::kImpI, Judgment{b, kPlus, T("(\\y+. top+)+"), F("a -> top")},
               {leaf(Rule::kTopI, inner, kPlus, "top+", "top")}};
  EXPECT_TRUE(validate(d).empty());
  // The premise may drop entries, but not invent them.
  d.prems[0].concl.basis.gamma.erase("z");
  EXPECT_TRUE(validate(d).empty());
  d.prems[0].concl.basis.gamma.emplace("q", F("c"));
  EXPECT_FALSE(validate(d).empty());
}

TEST(Validate, WrongPolarity) {
  Derivation d = leaf(Rule::kTopI, {}, kPlus, "top+", "top");
  d.concl.pol = kMinus;
  EXPECT_FALSE(validate(d).empty());
  EXPECT_FALSE(validate(leaf(Rule::kBotI_d, {}, kMinus, "bot-", "top")).empty());
}

TEST(Height, Examples) {
  Basis b;
  b.bind({"x", kPlus}, F("a"));
  EXPECT_EQ(height(leaf(Rule::kHypPlus, b, kPlus, "x+", "a")), 0u);
  EXPECT_EQ(height(leaf(Rule::kTopI, {}, kPlus, "top+", "top")), 1u);
  // Hand count: CoImpE at 1, ImpI_d at 2, CoImpI at 3, ImpI at 4.
  EXPECT_EQ(height(testing::load("excluded_proof.json")), 4u);
  EXPECT_EQ(node_count(testing::load("excluded_proof.json")), 8u);
}

TEST(Generated, RootMutationsAreRejected) {
  Rng rng(99);
  for (const auto& d : testing::corpus(500, 6, 4000)) {
    ASSERT_TRUE(validate(d).empty());
    if (d.rule == Rule::kBotE || d.rule == Rule::kTopE_d) continue;
    Derivation bad = d;
    do {
      bad.concl.type = gen_formula(rng, {"a", "b", "c"}, 3);
    } while (bad.concl.type == d.concl.type);
    EXPECT_FALSE(validate(bad).empty()) << print_judgment(bad.concl);
    Derivation flipped = d;
    flipped.concl.pol = flip(d.concl.pol);
    EXPECT_FALSE(validate(flipped).empty());
  }
}

TEST(AlphaEqual, SubjectsUpToRenamingBasesExactly) {
  const Derivation a = testing::load("identity_plus_x_sigma.json");
  EXPECT_TRUE(alpha_equal(a, a));
  // Same subjects up to renaming, but the leaf bases name different variables.
  EXPECT_FALSE(alpha_equal(a, testing::load("identity_plus_y_sigma.json")));
  Derivation b = a;
  b.concl.term = T("(\\y+. y+)+");
  EXPECT_TRUE(alpha_equal(a, b));
  b.concl.type = F("rho -> rho");
  EXPECT_FALSE(alpha_equal(a, b));
}

}  // namespace
}  // namespace l2i
