#include "l2i/cli.h"

#include <fmt/core.h>
#include <fmt/ostream.h>

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "l2i/derivation.h"
#include "l2i/duality.h"
#include "l2i/meaning.h"
#include "l2i/rewrite.h"
#include "l2i/testkit.h"
#include "l2i/textio.h"
#include "l2i/typing.h"

namespace l2i::cli {

namespace {

constexpr const char* kUsageLine =
    "usage: l2i {check|infer|normalize|dualize|equal|sense|gen} ... (see l2i --help)";

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(fmt::format("cannot read {}", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::vector<std::string> files;
  std::vector<std::string> terms;
  std::string formula;
  std::string output;
  std::size_t fuel = kDefaultFuel;
  bool trace = false;
  bool modulo_duality = false;
  bool show = false;
  std::uint64_t seed = 0;
  std::size_t max_height = 5;
  std::size_t count = 1;
};

struct FileReport {
  int code = kOk;
  std::string text;
};

FileReport check_one(const std::string& path) {
  FileReport r;
  try {
    const Derivation d = derivation_from_json(read_file(path));
    const auto violations = validate(d);
    if (violations.empty()) {
      r.text = fmt::format("{}: ok (height {})\n", path, height(d));
      return r;
    }
    r.code = kNegative;
    r.text = fmt::format("{}: invalid\n", path);
    for (const auto& v : violations) {
      r.text += fmt::format("  at {}: {}\n", format_path(v.path), v.message);
    }
  } catch (const Error& e) {
    r.code = kUsage;
    r.text = fmt::format("{}: error: {}\n", path, e.what());
  }
  return r;
}

int cmd_check(const Options& o, std::ostream& out) {
  std::vector<std::future<FileReport>> jobs;
  jobs.reserve(o.files.size());
  for (const auto& f : o.files) jobs.push_back(std::async(std::launch::async, check_one, f));
  int code = kOk;
  for (auto& j : jobs) {
    const FileReport r = j.get();
    out << r.text;
    code = std::max(code, r.code);
  }
  return code;
}

int cmd_infer(const Options& o, std::ostream& out) {
  const Term t = parse_term(o.terms.at(0));
  try {
    const Principal p = infer_principal(t);
    fmt::print(out, "{} =>{} : {}\n", print_basis(p.basis), polarity_char(p.pol),
               print_formula(p.type));
    return kOk;
  } catch (const TypeError& e) {
    if (e.kind() != TypeErrorKind::kUntypable) throw;
    fmt::print(out, "untypable ({}) at {}\n",
               e.reason() ? to_string(*e.reason()) : "error", format_path(e.path()));
    return kNegative;
  }
}

int cmd_normalize(const Options& o, std::ostream& out, std::ostream& err) {
  const Term t = parse_term(o.terms.at(0));
  const NormalizeResult r = normalize(t, o.fuel, o.trace);
  if (o.trace) {
    for (const auto& s : r.trace) out << format_step(s) << '\n';
  }
  if (!r.normal()) {
    out << "fuel-exhausted\n";
    fmt::print(err, "no normal form within {} steps; last term: {}\n", o.fuel,
               print_term(r.term));
    return kExhausted;
  }
  out << print_term(r.term) << '\n';
  return kOk;
}

int cmd_dualize(const Options& o, std::ostream& out, std::ostream& err) {
  const int sources = static_cast<int>(!o.terms.empty()) +
                      static_cast<int>(!o.formula.empty()) +
                      static_cast<int>(!o.files.empty());
  if (sources != 1 || o.files.size() > 1) {
    throw CLI::ValidationError("dualize takes exactly one of -e TERM, --formula F, FILE");
  }
  if (!o.terms.empty()) {
    out << print_term(dual_term(parse_term(o.terms[0]))) << '\n';
    return kOk;
  }
  if (!o.formula.empty()) {
    out << print_formula(dual_formula(parse_formula(o.formula))) << '\n';
    return kOk;
  }
  const Derivation d = derivation_from_json(read_file(o.files[0]));
  Derivation dual = [&] {
    try {
      return dual_derivation(d);
    } catch (const InvalidDerivation& e) {
      for (const auto& v : e.violations()) {
        fmt::print(err, "at {}: {}\n", format_path(v.path), v.message);
      }
      throw;
    }
  }();
  const std::string json = derivation_to_json(dual) + "\n";
  const std::string report =
      fmt::format("height: original {}, dual {}\n", height(d), height(dual));
  if (o.output.empty()) {
    out << json;
    err << report;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) throw InputError(fmt::format("cannot write {}", o.output));
    file << json;
    out << report;
  }
  return kOk;
}

int cmd_equal(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.terms.size() != 2) throw CLI::ValidationError("equal takes exactly two -e TERM");
  const Term t = parse_term(o.terms[0]);
  const Term u = parse_term(o.terms[1]);
  const Identity i = compare_denotations(t, u, o.modulo_duality, o.fuel);
  out << to_string(i) << '\n';
  err << "note: denotations compared by the normal forms of the canonical strategy\n";
  return i == Identity::kDistinct ? kNegative : kOk;
}

void show_sense(const std::string& label, const SenseDescriptor& s, std::ostream& out) {
  fmt::print(out, "{}:\n", label);
  for (const auto& e : s.entries) {
    fmt::print(out, "  {} {} : {}\n", polarity_char(e.pol), e.display, e.scheme_key);
  }
}

int cmd_sense(const Options& o, std::ostream& out) {
  if (o.files.size() != 2) throw CLI::ValidationError("sense takes exactly two files");
  const Derivation a = derivation_from_json(read_file(o.files[0]));
  const Derivation b = derivation_from_json(read_file(o.files[1]));
  const SenseDescriptor sa = sense(a);
  const SenseDescriptor sb = sense(b);
  const bool same = sa == sb;
  out << (same ? "synonymous" : "non-synonymous") << '\n';
  if (o.show) {
    show_sense(o.files[0], sa, out);
    show_sense(o.files[1], sb, out);
  }
  return same ? kOk : kNegative;
}

int cmd_gen(const Options& o, std::ostream& out) {
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.max_height = o.max_height;
  Rng rng(o.seed);
  for (std::size_t i = 0; i < o.count; ++i) {
    out << derivation_to_json(gen_derivation(cfg, rng), -1) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proofs, refutations and their duality in the two-sorted calculus", "l2i"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "validate derivation files");
  check->add_option("files", o.files, "derivation JSON files")->required();

  auto* infer = app.add_subcommand("infer", "principal typing of a term");
  infer->add_option("-e,--expr", o.terms, "term")->required()->expected(1);

  auto* norm = app.add_subcommand("normalize", "normal form by the canonical strategy");
  norm->add_option("-e,--expr", o.terms, "term")->required()->expected(1);
  norm->add_option("--fuel", o.fuel, "maximum number of steps");
  norm->add_flag("--trace", o.trace, "print every step");

  auto* dualize = app.add_subcommand("dualize", "dual of a term, formula or derivation");
  dualize->add_option("-e,--expr", o.terms, "term")->expected(1);
  dualize->add_option("--formula", o.formula, "formula");
  dualize->add_option("file", o.files, "derivation JSON file");
  dualize->add_option("-o,--output", o.output, "write the dual derivation here");

  auto* equal = app.add_subcommand("equal", "identity of denotation");
  equal->add_option("-e,--expr", o.terms, "terms")->required();
  equal->add_flag("--modulo-duality", o.modulo_duality, "also compare with the dual");
  equal->add_option("--fuel", o.fuel, "maximum number of steps per term");

  auto* sense_cmd = app.add_subcommand("sense", "synonymy of two derivations");
  sense_cmd->add_option("files", o.files, "two derivation JSON files")->required();
  sense_cmd->add_flag("--show", o.show, "list both senses");

  auto* gen = app.add_subcommand("gen", "random valid derivations as JSON lines");
  gen->add_option("--seed", o.seed, "seed")->required();
  gen->add_option("--max-height", o.max_height, "maximum height")->required();
  gen->add_option("--count", o.count, "number of derivations")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*check) return cmd_check(o, out);
    if (*infer) return cmd_infer(o, out);
    if (*norm) return cmd_normalize(o, out, err);
    if (*dualize) return cmd_dualize(o, out, err);
    if (*equal) return cmd_equal(o, out, err);
    if (*sense_cmd) return cmd_sense(o, out);
    if (*gen) return cmd_gen(o, out);
    err << kUsageLine << '\n';
    return kUsage;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::Error& e) {
    err << kUsageLine << ": " << e.what() << '\n';
    return kUsage;
  } catch (const FuelExhausted& e) {
    out << "fuel-exhausted\n";
    err << "error: " << e.what() << '\n';
    return kExhausted;
  } catch (const InvalidDerivation& e) {
    out << "invalid\n";
    err << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const TypeError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == TypeErrorKind::kIllFormed ? kUsage : kNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace l2i::cli
