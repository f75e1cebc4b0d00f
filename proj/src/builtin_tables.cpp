#include "builtin_tables.hpp"

#include <array>

namespace gaugekit::detail {

namespace {

const char* const kToda = "Toda, Composition Methods in Homotopy Groups of Spheres (1962)";
const char* const kMimura =
    "Mimura, Homotopy theory of Lie groups, Handbook of Algebraic Topology (1995)";

FgAbGroup z() { return FgAbGroup::integers(); }
FgAbGroup zero() { return FgAbGroup::trivial(); }
FgAbGroup zmod(long long n) { return FgAbGroup::cyclic(n); }

SpaceId su(int m) { return SpaceId::lie(LieFamily::SU, m); }
SpaceId sp(int m) { return SpaceId::lie(LieFamily::Sp, m); }
SpaceId spin(int m) { return SpaceId::lie(LieFamily::Spin, m); }

TableLayer make_builtin() {
  TableLayer t;
  t.source = "built-in";
  auto add = [&](SpaceId s, unsigned k, FgAbGroup g, const char* cite) {
    t.homotopy_groups.push_back({s, k, std::move(g), cite});
  };
  const auto s = [](int n) { return SpaceId::sphere(n); };

  add(s(2), 3, z(), "Hopf fibration S^1 -> S^3 -> S^2");
  add(s(3), 4, zmod(2), kToda);
  add(s(3), 5, zmod(2), kToda);
  add(s(3), 6, zmod(12), kToda);
  add(s(4), 5, zmod(2), kToda);
  add(s(4), 6, zmod(2), kToda);
  add(s(4), 7, FgAbGroup(1, {12}), kToda);
  add(s(5), 6, zmod(2), kToda);

  add(su(2), 4, zmod(2), kMimura);
  add(su(2), 5, zmod(2), kMimura);
  add(su(2), 6, zmod(12), kMimura);
  add(su(3), 6, zmod(6), kMimura);
  add(sp(1), 6, zmod(12), kMimura);
  add(spin(5), 4, zmod(2), kMimura);
  add(spin(5), 5, zmod(2), kMimura);
  add(spin(5), 6, zero(), kMimura);
  add(spin(6), 5, z(), kMimura);
  add(spin(6), 6, zero(), kMimura);
  add(spin(7), 6, zero(), kMimura);
  add(SpaceId::lie(LieFamily::G2, 2), 4, zero(), kMimura);
  add(SpaceId::lie(LieFamily::G2, 2), 5, zero(), kMimura);
  add(SpaceId::lie(LieFamily::G2, 2), 6, zmod(3), kMimura);
  for (auto [f, rank] : std::array<std::pair<LieFamily, int>, 4>{
           {{LieFamily::F4, 4}, {LieFamily::E6, 6}, {LieFamily::E7, 7}, {LieFamily::E8, 8}}})
    for (unsigned k = 4; k <= 6; ++k) add(SpaceId::lie(f, rank), k, zero(), kMimura);

  t.connecting_orders.push_back(
      {su(2), 4, 12,
       "Kono, A note on the homotopy type of certain gauge groups, "
       "Proc. Roy. Soc. Edinburgh 117A (1991)"});

  // J : pi_3(SO(3)) = Z -> pi_6(S^3) = Z/12 is onto, and the suspension
  // pi_6(S^3) -> pi_7(S^4) is injective, so E∘J also lands in a Z/12.
  t.characteristic_maps.push_back({4, 3, z(), zmod(12), {{1}}, zmod(12), {{1}},
                                   std::string(kToda) + "; J-homomorphism onto pi_6(S^3)"});
  return t;
}

// pi_k of the stable orthogonal group, k mod 8 starting at 0.
FgAbGroup stable_o(unsigned k) {
  switch (k % 8) {
    case 0:
    case 1:
      return zmod(2);
    case 3:
    case 7:
      return z();
    default:
      return zero();
  }
}

}  // namespace

const TableLayer& builtin_layer() {
  static const TableLayer layer = make_builtin();
  return layer;
}

std::optional<TableEntry> rule_entry(const SpaceId& space, unsigned k) {
  if (space.is_sphere()) {
    const auto n = static_cast<unsigned>(space.dim());
    if (k < n) return TableEntry{space, k, zero(), "cellular approximation: pi_k(S^n) = 0 for k < n"};
    if (k == n) return TableEntry{space, k, z(), "Hurewicz: pi_n(S^n) = Z"};
    return std::nullopt;
  }
  if (k <= 2)
    return TableEntry{space, k, zero(), "simply connected compact Lie group; pi_2 = 0 (Cartan)"};
  if (k == 3) return TableEntry{space, k, z(), "pi_3 of a simple simply connected Lie group is Z (Bott)"};

  const int m = space.dim();
  const char* bott = "Bott periodicity in the stable range";
  switch (space.family()) {
    case LieFamily::SU:
      if (k < 2u * m) return TableEntry{space, k, k % 2 ? z() : zero(), bott};
      break;
    case LieFamily::Sp:
      if (k <= 4u * m + 1) return TableEntry{space, k, stable_o(k + 4), bott};
      break;
    case LieFamily::Spin:
      if (static_cast<int>(k) <= m - 2) return TableEntry{space, k, stable_o(k), bott};
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace gaugekit::detail
