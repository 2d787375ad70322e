#include "l2i/cli.h"

#include <gtest/gtest.h>

#include <sstream>

#include "../support.h"
#include "l2i/derivation.h"

namespace l2i {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

TEST(Infer, PrincipalTypes) {
  Outcome o = run({"infer", "-e", "(\\x+. x+)+"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "(;) =>+ : ?A -> ?A\n");
  o = run({"infer", "-e", "(\\x-. x-)-"});
  EXPECT_EQ(o.out, "(;) =>- : ?A -< ?A\n");
  o = run({"infer", "-e", "fst+(x+)"});
  EXPECT_EQ(o.out, "(x+: ?A & ?B;) =>+ : ?A\n");
  o = run({"infer", "-e", "abort+(y-)"});
  EXPECT_EQ(o.out, "(; y-: top) =>+ : ?A\n");
}

TEST(Infer, Failures) {
  Outcome o = run({"infer", "-e", "app+(x+, x+)"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(o.out, "untypable (occurs check) at root\n");
  o = run({"infer", "-e", "inl+(app+(<top+, top+>+, top+))"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(o.out, "untypable (clash) at 0\n");
  o = run({"infer", "-e", "app+(x+"});
  EXPECT_EQ(o.code, 2);
  EXPECT_TRUE(o.out.empty());
  EXPECT_FALSE(o.err.empty());
  EXPECT_EQ(run({"infer", "-e", "<top+, bot->+"}).code, 2);
}

TEST(Dualize, Formula) {
  const Outcome o = run({"dualize", "--formula", "(a -< b) -> (top -< (a -> b))"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "((b -< a) -> bot) -< (b -> a)\n");
}

TEST(Dualize, Term) {
  const Outcome o = run({"dualize", "-e", "(\\x+. {top+, {p1+(x+), p2-(x+)}-}+)+"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "(\\x-. {{p1+(x-), p2-(x-)}+, bot-}-)-\n");
}

TEST(Dualize, DerivationFile) {
  const Outcome o = run({"dualize", testing::data_path("excluded_proof.json")});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.err, "height: original 4, dual 4\n");
  EXPECT_TRUE(alpha_equal(derivation_from_json(o.out), testing::load("excluded_refutation.json")));

  const std::string target = ::testing::TempDir() + "l2i_dual.json";
  const Outcome w = run({"dualize", testing::data_path("excluded_proof.json"), "-o", target});
  EXPECT_EQ(w.code, 0);
  EXPECT_EQ(w.out, "height: original 4, dual 4\n");
  EXPECT_EQ(testing::read_text(target), o.out);
}

TEST(Dualize, Usage) {
  EXPECT_EQ(run({"dualize"}).code, 2);
  EXPECT_EQ(run({"dualize", "-e", "top+", "--formula", "a"}).code, 2);
  EXPECT_EQ(run({"dualize", "/nonexistent/file.json"}).code, 2);
}

TEST(Equal, Verdicts) {
  Outcome o = run({"equal", "-e", "(\\x+. x+)+", "-e", "(\\x-. x-)-"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(o.out, "distinct\n");
  o = run({"equal", "-e", "(\\x+. x+)+", "-e", "(\\x-. x-)-", "--modulo-duality"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "identical-modulo-duality\n");
  o = run({"equal", "-e", "app+((\\y+. y+)+, (\\x+. x+)+)", "-e", "(\\z+. z+)+"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "identical\n");
  EXPECT_EQ(run({"equal", "-e", "top+"}).code, 2);
}

TEST(Equal, FuelExhausted) {
  const Outcome o = run({"equal", "-e", "app+((\\x+. app+(x+, x+))+, (\\x+. app+(x+, x+))+)",
                         "-e", "top+", "--fuel", "10"});
  EXPECT_EQ(o.code, 3);
  EXPECT_EQ(o.out, "fuel-exhausted\n");
}

TEST(Normalize, TraceGolden) {
  const Outcome o = run({"normalize", "-e", "p1+(case z- {x-. {top+, x-}- | y-. {top+, y-}-}-)",
                         "--trace"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out,
            "perm-Pi1@root  case z- {x-. p1+({top+, x-}-) | y-. p1+({top+, y-}-)}+\n"
            "beta-Pi1@1  case z- {x-. top+ | y-. p1+({top+, y-}-)}+\n"
            "beta-Pi1@2  case z- {x-. top+ | y-. top+}+\n"
            "simp-left@root  top+\n"
            "top+\n");
  EXPECT_EQ(run({"normalize", "-e", "app+((\\x+. x+)+, top+)"}).out, "top+\n");
}

TEST(Normalize, Exhaustion) {
  const Outcome o = run({"normalize", "-e",
                         "app+((\\x+. app+(x+, x+))+, (\\x+. app+(x+, x+))+)", "--fuel", "5"});
  EXPECT_EQ(o.code, 3);
  EXPECT_EQ(o.out, "fuel-exhausted\n");
  EXPECT_EQ(run({"normalize", "-e", "top+", "--fuel", "nope"}).code, 2);
}

TEST(Check, Reports) {
  const std::string first = testing::data_path("excluded_proof.json");
  const std::string second = testing::data_path("excluded_refutation.json");
  Outcome o = run({"check", first, second});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, first + ": ok (height 4)\n" + second + ": ok (height 4)\n");

  const std::string bad = ::testing::TempDir() + "l2i_bad.json";
  {
    std::ofstream f(bad);
    f << R"({"rule":"Hyp+","concl":{"gamma":[],"delta":[],"pol":"+","term":"x+","type":"a"},"prems":[]})";
  }
  o = run({"check", first, bad});
  EXPECT_EQ(o.code, 1);
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], first + ": ok (height 4)");
  EXPECT_EQ(ls[1], bad + ": invalid");
  EXPECT_EQ(ls[2].rfind("  at root: ", 0), 0u);

  o = run({"check", bad, "/nonexistent.json"});
  EXPECT_EQ(o.code, 2);
  EXPECT_EQ(lines(o.out).size(), 3u);
}

TEST(Check, BatchOrderIsInputOrder) {
  std::vector<std::string> args{"check"};
  std::string expected;
  for (int i = 0; i < 12; ++i) {
    const std::string f = testing::data_path(i % 2 ? "excluded_refutation.json" : "identity_minus_x_rho.json");
    args.push_back(f);
    expected += f + (i % 2 ? ": ok (height 4)\n" : ": ok (height 1)\n");
  }
  EXPECT_EQ(run(args).out, expected);
}

TEST(Sense, Verdicts) {
  const std::string a = testing::data_path("identity_plus_x_rho.json");
  const std::string b = testing::data_path("identity_plus_y_sigma.json");
  const std::string c = testing::data_path("identity_minus_x_rho.json");
  Outcome o = run({"sense", a, b});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "synonymous\n");
  o = run({"sense", a, c});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(o.out, "non-synonymous\n");
  o = run({"sense", a, c, "--show"});
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[1], a + ":");
  EXPECT_EQ(run({"sense", a}).code, 2);
}

TEST(Gen, JsonLines) {
  const Outcome o = run({"gen", "--seed", "5", "--max-height", "4", "--count", "3"});
  EXPECT_EQ(o.code, 0);
  const auto ls = lines(o.out);
  ASSERT_EQ(ls.size(), 3u);
  for (const auto& l : ls) {
    const Derivation d = derivation_from_json(l);
    EXPECT_TRUE(validate(d).empty());
    EXPECT_LE(height(d), 4u);
  }
  EXPECT_EQ(run({"gen", "--seed", "5", "--max-height", "4", "--count", "3"}).out, o.out);
  EXPECT_EQ(run({"gen", "--seed", "5"}).code, 2);
}

TEST(Usage, Errors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  const Outcome o = run({"infer"});
  EXPECT_EQ(o.code, 2);
  EXPECT_EQ(lines(o.err).size(), 1u);
  EXPECT_EQ(o.err.rfind("usage: l2i", 0), 0u);
}

}  // namespace
}  // namespace l2i
