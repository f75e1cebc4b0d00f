#include "gaugekit/homotopy_tables.hpp"

#include "builtin_tables.hpp"
#include "json_util.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gaugekit {

using detail::json;

namespace {

struct FamilyName {
  LieFamily family;
  const char* name;
  int fixed_rank;  // 0 for the classical families
};

constexpr FamilyName kFamilies[] = {
    {LieFamily::Spin, "Spin", 0}, {LieFamily::SU, "SU", 0}, {LieFamily::Sp, "Sp", 0},
    {LieFamily::G2, "G2", 2},     {LieFamily::F4, "F4", 4}, {LieFamily::E6, "E6", 6},
    {LieFamily::E7, "E7", 7},     {LieFamily::E8, "E8", 8},
};

const FamilyName& family_info(LieFamily f) {
  for (const auto& info : kFamilies)
    if (info.family == f) return info;
  throw DomainError("unknown Lie family");
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

int parse_rank(const std::string& digits, const std::string& text) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw DomainError("cannot parse a rank from '" + text + "'");
  return std::stoi(digits);
}

SpaceId json_lie(const json& j, const std::string& what) {
  const auto& fam = detail::require(j, "family", what);
  if (!fam.is_string()) throw DomainError(what + ": family must be a string");
  const std::string name = fam.get<std::string>();
  for (const auto& info : kFamilies) {
    if (lower(info.name) != lower(name)) continue;
    if (info.fixed_rank) return SpaceId::lie(info.family, info.fixed_rank);
    return SpaceId::lie(info.family,
                        static_cast<int>(detail::json_small(detail::require(j, "rank", what), what)));
  }
  throw DomainError(what + ": unknown Lie family '" + name + "'");
}

SpaceId json_space(const json& j, const std::string& what) {
  if (j.is_object() && j.contains("sphere"))
    return SpaceId::sphere(static_cast<int>(detail::json_small(j.at("sphere"), what)));
  if (j.is_object() && j.contains("lie")) return json_lie(j.at("lie"), what);
  throw DomainError(what + ": space must be {\"sphere\": n} or {\"lie\": {...}}");
}

std::string citation_of(const json& j, const std::string& what) {
  const auto& c = detail::require(j, "citation", what);
  if (!c.is_string() || c.get<std::string>().empty())
    throw DomainError(what + ": citation must be a non-empty string");
  return c.get<std::string>();
}

std::vector<std::vector<Integer>> json_matrix(const json& j, const std::string& what) {
  if (!j.is_array()) throw DomainError(what + ": expected an array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j) {
    if (row.is_array())
      rows.push_back(detail::json_integer_list(row, what));
    else
      rows.push_back({detail::json_integer(row, what)});
  }
  return rows;
}

unsigned json_degree(const json& j, const std::string& what) {
  const auto d = detail::json_small(detail::require(j, "degree", what), what + ".degree");
  if (d < 0) throw DomainError(what + ": negative degree");
  return static_cast<unsigned>(d);
}

const json* section(const json& root, const char* name) {
  if (!root.is_object() || !root.contains(name)) return nullptr;
  if (!root.at(name).is_array()) throw DomainError(std::string("section '") + name + "' must be an array");
  return &root.at(name);
}

std::string key_text(const SpaceId& s, unsigned k) {
  return "pi_" + std::to_string(k) + "(" + to_string(s) + ")";
}

}  // namespace

SpaceId SpaceId::sphere(int n) {
  if (n < 1) throw DomainError("sphere dimension must be >= 1, got " + std::to_string(n));
  return SpaceId(true, LieFamily::SU, n);
}

SpaceId SpaceId::lie(LieFamily family, int rank) {
  const auto& info = family_info(family);
  if (info.fixed_rank && rank != info.fixed_rank)
    throw DomainError(std::string(info.name) + " has rank " + std::to_string(info.fixed_rank));
  if (family == LieFamily::SU && rank < 2)
    throw DomainError("SU(m) needs m >= 2, got " + std::to_string(rank));
  if (family == LieFamily::Sp && rank < 1)
    throw DomainError("Sp(m) needs m >= 1, got " + std::to_string(rank));
  if (family == LieFamily::Spin && rank < 5)
    throw DomainError("Spin(m) is simple and simply connected only for m >= 5 here, got " +
                      std::to_string(rank));
  return SpaceId(false, family, rank);
}

LieFamily SpaceId::family() const {
  if (sphere_) throw DomainError(to_string(*this) + " is not a Lie group");
  return family_;
}

std::string to_string(const SpaceId& s) {
  if (s.is_sphere()) return "S^" + std::to_string(s.dim());
  const auto& info = family_info(s.family());
  if (info.fixed_rank) return info.name;
  return std::string(info.name) + "(" + std::to_string(s.dim()) + ")";
}

SpaceId parse_group(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')' && c != ' ') t += c;
  const std::string lt = lower(t);
  for (const auto& info : kFamilies) {
    const std::string name = lower(info.name);
    if (info.fixed_rank) {
      if (lt == name) return SpaceId::lie(info.family, info.fixed_rank);
      continue;
    }
    if (lt.rfind(name, 0) == 0) return SpaceId::lie(info.family, parse_rank(lt.substr(name.size()), text));
  }
  throw DomainError("unknown group '" + text + "' (expected SU<m>, Sp<m>, Spin<m>, G2, F4, E6, E7, E8)");
}

SpaceId parse_space(const std::string& text) {
  const std::string lt = lower(text);
  if (lt.rfind("sphere:", 0) == 0) return SpaceId::sphere(parse_rank(lt.substr(7), text));
  if (lt.rfind("s^", 0) == 0) return SpaceId::sphere(parse_rank(lt.substr(2), text));
  if (lt.size() > 1 && lt[0] == 's' && std::isdigit(static_cast<unsigned char>(lt[1])))
    return SpaceId::sphere(parse_rank(lt.substr(1), text));
  if (lt.rfind("lie:", 0) == 0) return parse_group(text.substr(4));
  return parse_group(text);
}

TableLayer parse_table_layer(const std::string& json_text, const std::string& source) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DomainError("table " + source + ": " + e.what());
  }

  TableLayer layer;
  layer.source = source;
  const std::string where = "table " + source;

  const json* groups = root.is_array() ? &root : section(root, "homotopy_groups");
  if (groups) {
    std::map<std::pair<SpaceId, unsigned>, bool> seen;
    for (std::size_t i = 0; i < groups->size(); ++i) {
      const auto& e = (*groups)[i];
      const std::string what = where + " entry " + std::to_string(i);
      TableEntry entry{json_space(detail::require(e, "space", what), what), json_degree(e, what),
                       detail::json_group(detail::require(e, "group", what), what + ".group"),
                       citation_of(e, what)};
      if (!seen.emplace(std::pair{entry.space, entry.degree}, true).second)
        throw DomainError(what + ": duplicate key " + key_text(entry.space, entry.degree));
      layer.homotopy_groups.push_back(std::move(entry));
    }
  }

  if (const json* orders = section(root, "connecting_orders")) {
    std::map<std::pair<SpaceId, int>, bool> seen;
    for (std::size_t i = 0; i < orders->size(); ++i) {
      const auto& e = (*orders)[i];
      const std::string what = where + " connecting order " + std::to_string(i);
      ConnectingOrderEntry entry{json_lie(detail::require(e, "lie", what), what),
                                 static_cast<int>(detail::json_small(detail::require(e, "n", what), what)),
                                 detail::json_integer(detail::require(e, "order", what), what),
                                 citation_of(e, what)};
      if (entry.order <= 0) throw DomainError(what + ": order must be positive");
      if (!seen.emplace(std::pair{entry.group, entry.n}, true).second)
        throw DomainError(what + ": duplicate key (" + to_string(entry.group) + ", " +
                          std::to_string(entry.n) + ")");
      layer.connecting_orders.push_back(std::move(entry));
    }
  }

  if (const json* maps = section(root, "characteristic_maps")) {
    std::map<std::pair<int, int>, bool> seen;
    for (std::size_t i = 0; i < maps->size(); ++i) {
      const auto& e = (*maps)[i];
      const std::string what = where + " characteristic map " + std::to_string(i);
      CharacteristicMapEntry entry{
          static_cast<int>(detail::json_small(detail::require(e, "n", what), what)),
          static_cast<int>(detail::json_small(detail::require(e, "q", what), what)),
          detail::json_group(detail::require(e, "xi_group", what), what + ".xi_group"),
          detail::json_group(detail::require(e, "j_target", what), what + ".j_target"),
          json_matrix(detail::require(e, "j_images", what), what + ".j_images"),
          detail::json_group(detail::require(e, "ej_target", what), what + ".ej_target"),
          json_matrix(detail::require(e, "ej_images", what), what + ".ej_images"),
          citation_of(e, what)};
      const auto gens = entry.xi_group.generator_count();
      auto check_shape = [&](const std::vector<std::vector<Integer>>& m, const FgAbGroup& target,
                             const char* name) {
        if (m.size() != gens)
          throw DomainError(what + ": " + name + " needs one row per generator of xi_group");
        for (const auto& row : m)
          if (row.size() != target.generator_count())
            throw DomainError(what + ": " + name + " rows must match the target's generator count");
      };
      check_shape(entry.j_images, entry.j_target, "j_images");
      check_shape(entry.ej_images, entry.ej_target, "ej_images");
      if (!seen.emplace(std::pair{entry.n, entry.q}, true).second)
        throw DomainError(what + ": duplicate key (n=" + std::to_string(entry.n) +
                          ", q=" + std::to_string(entry.q) + ")");
      layer.characteristic_maps.push_back(std::move(entry));
    }
  }

  if (const json* ms = section(root, "mapstar_groups")) {
    std::map<std::tuple<SpaceId, int, int, std::vector<std::vector<Integer>>, unsigned>, bool> seen;
    for (std::size_t i = 0; i < ms->size(); ++i) {
      const auto& e = (*ms)[i];
      const std::string what = where + " mapstar group " + std::to_string(i);
      MapStarEntry entry{json_lie(detail::require(e, "lie", what), what),
                         static_cast<int>(detail::json_small(detail::require(e, "n", what), what)),
                         static_cast<int>(detail::json_small(detail::require(e, "q", what), what)),
                         json_matrix(detail::require(e, "xi", what), what + ".xi"),
                         json_degree(e, what),
                         detail::json_group(detail::require(e, "group", what), what + ".group"),
                         citation_of(e, what)};
      if (!seen.emplace(std::tuple{entry.group, entry.n, entry.q, entry.xi, entry.degree}, true).second)
        throw DomainError(what + ": duplicate key");
      layer.mapstar_groups.push_back(std::move(entry));
    }
  }
  return layer;
}

TableLayer load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open table file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table_layer(ss.str(), path);
}

const HomotopyTables& HomotopyTables::builtin() {
  static const HomotopyTables tables = [] {
    HomotopyTables t;
    t.add_builtin_core();
    return t;
  }();
  return tables;
}

HomotopyTables HomotopyTables::from_sources(const std::vector<std::string>& files) {
  HomotopyTables t;
  for (const auto& f : files) t.add_layer(load_table_file(f));
  if (const char* env = std::getenv("GAUGEKIT_TABLES")) {
    std::stringstream ss(env);
    std::string path;
    while (std::getline(ss, path, ':'))
      if (!path.empty()) t.add_layer(load_table_file(path));
  }
  t.add_builtin_core();
  return t;
}

void HomotopyTables::add_builtin_core() {
  add_layer(detail::builtin_layer());
  with_rules_ = true;
}

void HomotopyTables::add_layer(const TableLayer& layer) {
  for (const auto& e : layer.homotopy_groups) groups_.emplace(std::pair{e.space, e.degree}, e);
  for (const auto& e : layer.connecting_orders) orders_.emplace(std::pair{e.group, e.n}, e);
  for (const auto& e : layer.characteristic_maps) char_maps_.emplace(std::pair{e.n, e.q}, e);
  for (const auto& e : layer.mapstar_groups)
    mapstar_.emplace(MapStarKey{e.group, e.n, e.q, e.xi, e.degree}, e);
}

std::optional<TableEntry> HomotopyTables::lookup(const SpaceId& space, unsigned k) const {
  if (auto it = groups_.find({space, k}); it != groups_.end()) return it->second;
  if (with_rules_) return detail::rule_entry(space, k);
  return std::nullopt;
}

std::optional<FgAbGroup> HomotopyTables::lookup_pi(const SpaceId& space, unsigned k) const {
  if (auto e = lookup(space, k)) return e->group;
  return std::nullopt;
}

std::optional<ConnectingOrderEntry> HomotopyTables::connecting_order(const SpaceId& group,
                                                                     int n) const {
  if (auto it = orders_.find({group, n}); it != orders_.end()) return it->second;
  return std::nullopt;
}

const CharacteristicMapEntry* HomotopyTables::characteristic_map(int n, int q) const {
  auto it = char_maps_.find({n, q});
  return it == char_maps_.end() ? nullptr : &it->second;
}

std::optional<MapStarEntry> HomotopyTables::mapstar_group(
    const SpaceId& group, int n, int q, const std::vector<std::vector<Integer>>& xi,
    unsigned degree) const {
  if (auto it = mapstar_.find(MapStarKey{group, n, q, xi, degree}); it != mapstar_.end())
    return it->second;
  return std::nullopt;
}

std::vector<TableEntry> HomotopyTables::explicit_entries() const {
  std::vector<TableEntry> out;
  for (const auto& [key, e] : groups_) out.push_back(e);
  return out;
}

std::vector<SpaceId> shipped_lie_groups() {
  std::vector<SpaceId> out;
  for (int m = 2; m <= 6; ++m) out.push_back(SpaceId::lie(LieFamily::SU, m));
  for (int m = 1; m <= 3; ++m) out.push_back(SpaceId::lie(LieFamily::Sp, m));
  for (int m = 5; m <= 9; ++m) out.push_back(SpaceId::lie(LieFamily::Spin, m));
  out.push_back(SpaceId::lie(LieFamily::G2, 2));
  out.push_back(SpaceId::lie(LieFamily::F4, 4));
  out.push_back(SpaceId::lie(LieFamily::E6, 6));
  out.push_back(SpaceId::lie(LieFamily::E7, 7));
  out.push_back(SpaceId::lie(LieFamily::E8, 8));
  return out;
}

Integer pi6_order(const SpaceId& g, const HomotopyTables& tables) {
  if (!g.is_lie()) throw DomainError("pi6_order needs a Lie group, got " + to_string(g));
  const auto pi6 = tables.lookup_pi(g, 6);
  if (!pi6) throw DomainError("missing table entry " + key_text(g, 6));
  const auto n = cardinality(*pi6);
  if (n == 0) throw DomainError(key_text(g, 6) + " is infinite");
  return n;
}

bool stable_conditions_hold(const SpaceId& g, int n, int q) {
  if (!g.is_lie()) return false;
  const int m = g.dim();
  if (g.family() == LieFamily::SU) {
    if (n % 2 != 0 || q % 2 != 1) return false;
    const int k = n / 2, kp = (q + 1) / 2;
    return 2 <= kp && kp <= k && k + kp <= m;
  }
  if (g.family() == LieFamily::Sp) {
    if (n % 4 != 0 || (q + 1) % 4 != 0) return false;
    const int k = n / 4, kp = (q + 1) / 4;
    return 1 <= kp && kp <= k && k + kp <= m;
  }
  return false;
}

FgAbGroup stable_pi_rule(const SpaceId& g, int n, int q, int degree) {
  if (!stable_conditions_hold(g, n, q))
    throw DomainError("stable range conditions fail for " + to_string(g) + ", n=" +
                      std::to_string(n) + ", q=" + std::to_string(q));
  if (degree == n - 1) return FgAbGroup::integers();
  if (degree == q - 1 || degree == n + q - 1) return FgAbGroup::trivial();
  throw DomainError("stable rule covers degrees n-1, q-1, n+q-1 only, got " +
                    std::to_string(degree));
}

}  // namespace gaugekit
