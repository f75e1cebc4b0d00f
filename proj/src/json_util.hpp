#pragma once

#include "gaugekit/exact_arith.hpp"
#include "gaugekit/fgab.hpp"

#include <json.hpp>

#include <limits>
#include <string>
#include <vector>

namespace gaugekit::detail {

using json = nlohmann::ordered_json;

// Integers may arrive as JSON numbers or, when too large, as digit strings.
inline Integer json_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw DomainError(what + ": expected an integer, got " + j.dump());
}

inline const json& require(const json& obj, const char* key, const std::string& what) {
  if (!obj.is_object() || !obj.contains(key))
    throw DomainError(what + ": missing field '" + key + "'");
  return obj.at(key);
}

inline long long json_small(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw DomainError(what + ": expected an integer, got " + j.dump());
  return j.get<long long>();
}

inline json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return json(static_cast<long long>(x));
  return json(to_string(x));
}

inline std::vector<Integer> json_integer_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw DomainError(what + ": expected an array, got " + j.dump());
  std::vector<Integer> out;
  for (const auto& x : j) out.push_back(json_integer(x, what));
  return out;
}

inline FgAbGroup json_group(const json& j, const std::string& what) {
  const auto free = json_small(require(j, "free", what), what + ".free");
  if (free < 0) throw DomainError(what + ": negative free rank");
  std::vector<Integer> torsion;
  if (j.contains("torsion")) torsion = json_integer_list(j.at("torsion"), what + ".torsion");
  return FgAbGroup(static_cast<std::size_t>(free), std::move(torsion));
}

inline json group_json(const FgAbGroup& g) {
  json t = json::array();
  for (const auto& s : g.torsion()) t.push_back(integer_json(s));
  return json{{"free", g.free_rank()}, {"torsion", t}, {"text", to_string(g)}};
}

}  // namespace gaugekit::detail
