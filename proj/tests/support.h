// Helpers shared by the test binaries.

#ifndef L2I_TESTS_SUPPORT_H_
#define L2I_TESTS_SUPPORT_H_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "l2i/derivation.h"
#include "l2i/syntax.h"
#include "l2i/testkit.h"
#include "l2i/textio.h"

namespace l2i::testing {

inline Term T(std::string_view text) { return parse_term(text); }
inline Formula F(std::string_view text) { return parse_formula(text); }

inline std::string data_path(const std::string& name) {
  return std::string(L2I_TEST_DATA_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Derivation load(const std::string& name) {
  return derivation_from_json(read_text(data_path(name)));
}

// End-terms of `n` generated derivations, seeds first_seed, first_seed+1, ...
inline std::vector<Derivation> corpus(std::size_t n, std::size_t max_height,
                                      std::uint64_t first_seed = 1) {
  std::vector<Derivation> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    GenConfig cfg;
    cfg.seed = first_seed + i;
    cfg.max_height = max_height;
    out.push_back(gen_derivation(cfg));
  }
  return out;
}

}  // namespace l2i::testing

#endif  // L2I_TESTS_SUPPORT_H_
