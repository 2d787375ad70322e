#include <fmt/core.h>

#include <json.hpp>

#include "l2i/textio.h"

namespace l2i {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& message) {
  throw FormatError(fmt::format("derivation node {}: {}", where, message));
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, fmt::format("missing field \"{}\"", key));
  return *it;
}

std::string string_field(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  if (!v.is_string()) fail(where, fmt::format("field \"{}\" must be a string", key));
  return v.get<std::string>();
}

template <typename Fn>
auto parsed(const std::string& where, const char* key, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const SyntaxError& e) {
    fail(where, fmt::format("field \"{}\": {}", key, e.what()));
  } catch (const PolarityError& e) {
    fail(where, fmt::format("field \"{}\": {}", key, e.what()));
  }
}

Basis::Entries read_side(const Json& concl, const char* key, const std::string& where) {
  Basis::Entries out;
  const Json& arr = field(concl, key, where);
  if (!arr.is_array()) fail(where, fmt::format("field \"{}\" must be an array", key));
  for (const Json& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string()) {
      fail(where, fmt::format("entries of \"{}\" must be [name, formula] pairs", key));
    }
    const std::string name = entry[0].get<std::string>();
    const std::string text = entry[1].get<std::string>();
    Formula f = parsed(where, key, [&] { return parse_formula(text); });
    if (!out.emplace(name, f).second) {
      fail(where, fmt::format("variable {} listed twice in \"{}\"", name, key));
    }
  }
  return out;
}

Derivation read_node(const Json& node, const Path& path) {
  const std::string where = format_path(path);
  if (!node.is_object()) fail(where, "expected an object");
  const std::string rule_text = string_field(node, "rule", where);
  auto rule = rule_from_name(rule_text);
  if (!rule) fail(where, fmt::format("unknown rule \"{}\"", rule_text));

  const Json& concl = field(node, "concl", where);
  if (!concl.is_object()) fail(where, "field \"concl\" must be an object");
  Basis basis{read_side(concl, "gamma", where), read_side(concl, "delta", where)};
  const std::string pol_text = string_field(concl, "pol", where);
  if (pol_text != "+" && pol_text != "-") fail(where, "field \"pol\" must be \"+\" or \"-\"");
  const std::string term_text = string_field(concl, "term", where);
  const std::string type_text = string_field(concl, "type", where);
  Term term = parsed(where, "term", [&] { return parse_term(term_text); });
  Formula type = parsed(where, "type", [&] { return parse_formula(type_text); });

  Derivation d{*rule,
               Judgment{std::move(basis),
                        pol_text == "+" ? Polarity::kPlus : Polarity::kMinus,
                        std::move(term), std::move(type)},
               {}};
  auto prems = node.find("prems");
  if (prems != node.end()) {
    if (!prems->is_array()) fail(where, "field \"prems\" must be an array");
    Path child = path;
    for (std::size_t i = 0; i < prems->size(); ++i) {
      child.push_back(i);
      d.prems.push_back(read_node((*prems)[i], child));
      child.pop_back();
    }
  }
  return d;
}

Json side_json(const Basis::Entries& side) {
  Json arr = Json::array();
  for (const auto& [name, f] : side) arr.push_back(Json::array({name, print_formula(f)}));
  return arr;
}

Json write_node(const Derivation& d) {
  Json prems = Json::array();
  for (const auto& p : d.prems) prems.push_back(write_node(p));
  const Judgment& j = d.concl;
  return Json{
      {"rule", std::string(rule_name(d.rule))},
      {"concl",
       Json{{"gamma", side_json(j.basis.gamma)},
            {"delta", side_json(j.basis.delta)},
            {"pol", std::string(1, polarity_char(j.pol))},
            {"term", print_term(j.term)},
            {"type", print_formula(j.type)}}},
      {"prems", std::move(prems)},
  };
}

}  // namespace

Derivation derivation_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(fmt::format("malformed JSON: {}", e.what()));
  }
  return read_node(doc, {});
}

std::string derivation_to_json(const Derivation& d, int indent) {
  return write_node(d).dump(indent);
}

}  // namespace l2i
