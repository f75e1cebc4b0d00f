#pragma once

#include "gaugekit/fgab.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace gaugekit {

enum class LieFamily { SU, Sp, Spin, G2, F4, E6, E7, E8 };

/// A sphere S^n or a simply connected compact simple Lie group.
class SpaceId {
 public:
  static SpaceId sphere(int n);
  static SpaceId lie(LieFamily family, int rank);

  [[nodiscard]] bool is_sphere() const { return sphere_; }
  [[nodiscard]] bool is_lie() const { return !sphere_; }
  /// Sphere dimension, or the rank parameter of the family.
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] LieFamily family() const;

  friend bool operator==(const SpaceId&, const SpaceId&) = default;
  friend bool operator<(const SpaceId& a, const SpaceId& b) {
    return std::tie(a.sphere_, a.family_, a.dim_) < std::tie(b.sphere_, b.family_, b.dim_);
  }

 private:
  SpaceId(bool sphere, LieFamily family, int dim) : sphere_(sphere), family_(family), dim_(dim) {}
  bool sphere_ = true;
  LieFamily family_ = LieFamily::SU;
  int dim_ = 1;
};

/// "S^3", "SU(2)", "Spin(7)", "G2".
std::string to_string(const SpaceId& s);

/// Group names as typed on a command line: SU2, SU(2), Sp3, Spin7, G2, E8.
SpaceId parse_group(const std::string& text);

/// "sphere:3", "S3", or any group name accepted by parse_group.
SpaceId parse_space(const std::string& text);

struct TableEntry {
  SpaceId space;
  unsigned degree;
  FgAbGroup group;
  std::string citation;
};

struct ConnectingOrderEntry {
  SpaceId group;
  int n;
  Integer order;
  std::string citation;
};

/// How characteristic elements xi in pi_{n-1}(SO(q)) enter the attaching map:
/// J sends them to pi_{n+q-1}(S^q), and E∘J to the group used for the rows of
/// the N_F matrix. Images are given per generator of xi_group.
struct CharacteristicMapEntry {
  int n;
  int q;
  FgAbGroup xi_group;
  FgAbGroup j_target;
  std::vector<std::vector<Integer>> j_images;
  FgAbGroup ej_target;
  std::vector<std::vector<Integer>> ej_images;
  std::string citation;
};

/// pi_j(Map_*(Y_F, G)) for a specific manifold, supplied by the user.
struct MapStarEntry {
  SpaceId group;
  int n;
  int q;
  std::vector<std::vector<Integer>> xi;
  unsigned degree;
  FgAbGroup value;
  std::string citation;
};

/// One parsed table file. Duplicate keys inside a file are rejected.
struct TableLayer {
  std::string source;
  std::vector<TableEntry> homotopy_groups;
  std::vector<ConnectingOrderEntry> connecting_orders;
  std::vector<CharacteristicMapEntry> characteristic_maps;
  std::vector<MapStarEntry> mapstar_groups;
};

TableLayer parse_table_layer(const std::string& json_text, const std::string& source);
TableLayer load_table_file(const std::string& path);

/// Layered lookup tables. Layers added earlier take precedence; the built-in
/// core (explicit entries plus range rules) is consulted last.
class HomotopyTables {
 public:
  HomotopyTables() = default;

  /// Built-in core only.
  static const HomotopyTables& builtin();

  /// Flag files first, then files listed in $GAUGEKIT_TABLES (colon
  /// separated), then the built-in core.
  static HomotopyTables from_sources(const std::vector<std::string>& files);

  void add_layer(const TableLayer& layer);
  /// Appends the built-in core and the range rules as the lowest layer.
  void add_builtin_core();

  /// The entry for pi_k(space), or nullopt when nothing is known.
  [[nodiscard]] std::optional<TableEntry> lookup(const SpaceId& space, unsigned k) const;
  [[nodiscard]] std::optional<FgAbGroup> lookup_pi(const SpaceId& space, unsigned k) const;

  [[nodiscard]] std::optional<ConnectingOrderEntry> connecting_order(const SpaceId& group,
                                                                     int n) const;
  [[nodiscard]] const CharacteristicMapEntry* characteristic_map(int n, int q) const;
  [[nodiscard]] std::optional<MapStarEntry> mapstar_group(
      const SpaceId& group, int n, int q, const std::vector<std::vector<Integer>>& xi,
      unsigned degree) const;

  /// Explicit entries of every layer, including the built-in core, in key order.
  [[nodiscard]] std::vector<TableEntry> explicit_entries() const;

 private:
  using MapStarKey = std::tuple<SpaceId, int, int, std::vector<std::vector<Integer>>, unsigned>;
  std::map<std::pair<SpaceId, unsigned>, TableEntry> groups_;
  std::map<std::pair<SpaceId, int>, ConnectingOrderEntry> orders_;
  std::map<std::pair<int, int>, CharacteristicMapEntry> char_maps_;
  std::map<MapStarKey, MapStarEntry> mapstar_;
  bool with_rules_ = false;
};

/// Shipped groups used for Table-style reports: SU(2..6), Sp(1..3),
/// Spin(5..9), G2, F4, E6, E7, E8.
std::vector<SpaceId> shipped_lie_groups();

/// |pi_6(G)|. Throws for spheres or when the table has no entry.
Integer pi6_order(const SpaceId& g, const HomotopyTables& tables = HomotopyTables::builtin());

/// True when (G, n, q) is in the stable range where pi_{q-1}(G) = 0,
/// pi_{n-1}(G) = Z and pi_{n+q-1}(G) = 0:
/// SU(m), n = 2k, q = 2k'-1, 2 <= k' <= k, k + k' <= m, or
/// Sp(m), n = 4k, q = 4k'-1, 1 <= k' <= k, k + k' <= m.
bool stable_conditions_hold(const SpaceId& g, int n, int q);

/// pi_degree(G) from the stable-range rule; degree must be n-1, q-1 or n+q-1.
FgAbGroup stable_pi_rule(const SpaceId& g, int n, int q, int degree);

}  // namespace gaugekit
