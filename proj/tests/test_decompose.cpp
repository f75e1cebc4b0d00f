#include "doctest.h"

#include "gaugekit/decompose.hpp"

#include <random>
#include <set>

using namespace gaugekit;

namespace {

const SpaceId SU2 = SpaceId::lie(LieFamily::SU, 2);
const SpaceId SU5 = SpaceId::lie(LieFamily::SU, 5);

ConnectedSumSpec spec43(const std::vector<Integer>& xi) { return ConnectedSumSpec::scalar(4, 3, xi); }

std::vector<Residue> mod12(const std::vector<Integer>& k) {
  return make_residues(Modulus(12), k);
}

}  // namespace

TEST_CASE("ell") {
  CHECK(ell(SU2, 4, {2, 6}) == Integer(2));
  CHECK(ell(SU2, 4, {0, 0, 0}) == Integer(12));
  CHECK(ell(SU2, 4, {1, 7}) == Integer(1));
  CHECK_FALSE(ell(SU5, 6, {2, 4}).has_value());
  CHECK_THROWS_AS(ell(SU2, 4, {}), DomainError);
}

TEST_CASE("decompose_unpointed") {
  const auto e = decompose_unpointed(SU2, spec43({1, 0}), {5, 7});
  CHECK(to_pretty(e) == "G^1(S^4) x Omega^4 SU(2) x Omega^3 SU(2) x Map*(Y_F, SU(2))");
  const auto& mapstar = std::get<MapStar>(e.factors().back());
  CHECK(mapstar.yf.tbar == 1);

  const auto sym = decompose_unpointed(SU5, ConnectedSumSpec::scalar(6, 3, {0, 0}), {0, 0});
  CHECK(to_pretty(sym) ==
        "G^o(delta_1)(S^6) x Omega^6 SU(5) x (Omega^3 SU(5))^2 x Map*(Y_F, SU(5))");
  CHECK(to_pretty(decompose_unpointed(SU5, ConnectedSumSpec::scalar(6, 3, {0, 0}), {4, 6})) ==
        "G^gcd(o(delta_1),2)(S^6) x Omega^6 SU(5) x (Omega^3 SU(5))^2 x Map*(Y_F, SU(5))");

  CHECK(decompose_unpointed(SU2, spec43({1, 0}), {1, 0}) ==
        decompose_unpointed(SU2, spec43({1, 0}), {0, 1}));

  CHECK_THROWS_AS(decompose_unpointed(SU2, spec43({2, 2}), {1, 0}), DomainError);
  CHECK_THROWS_AS(decompose_unpointed(SU2, spec43({1, 0}), {1}), DomainError);
  // single summand: wedge semantics on one sphere
  CHECK(decompose_unpointed(SU2, spec43({1}), {4}) == decompose_wedge(SU2, 4, 1, {4}));
}

TEST_CASE("decompose_unpointed depends on K only through ell") {
  const auto s = spec43({1, 0});
  for (long long a = 0; a < 12; ++a)
    for (long long b = 0; b < 12; ++b)
      for (long long c = 0; c < 12; c += 5)
        for (long long d = 0; d < 12; d += 7) {
          const std::vector<Integer> k{a, b}, k2{c, d};
          CHECK((decompose_unpointed(SU2, s, k) == decompose_unpointed(SU2, s, k2)) ==
                (ell(SU2, 4, k) == ell(SU2, 4, k2)));
        }
}

TEST_CASE("decompose_pointed") {
  const auto e = decompose_pointed(SU2, spec43({1, 0}), {5, 7});
  CHECK(to_pretty(e) == "(Omega^4 SU(2))^2 x Omega^3 SU(2) x Map*(Y_F, SU(2))");
  CHECK(decompose_pointed(SU2, spec43({1, 0}), {2, 3}) == e);
  CHECK(decompose_pointed(SU2, spec43({1, 0})) == e);

  const auto sp2 = SpaceId::lie(LieFamily::Sp, 2);
  CHECK(to_pretty(decompose_pointed(sp2, spec43({1, 0}))) ==
        "(Omega^4 Sp(2))^2 x Omega^3 Sp(2) x Map*(Y_F, Sp(2))");
  CHECK(to_pretty(decompose_pointed(sp2, spec43({0, 0, 0}))) ==
        "(Omega^4 Sp(2))^3 x (Omega^3 Sp(2))^3 x Map*(Y_F, Sp(2))");
  CHECK_THROWS_AS(decompose_pointed(SU2, spec43({2, 2})), DomainError);
}

TEST_CASE("decompose_wedge") {
  CHECK(to_pretty(decompose_wedge(SU2, 4, 3, {4, 6, 0})) == "G^2(S^4) x (Omega^4 SU(2))^2");
  CHECK(to_pretty(decompose_wedge(SU2, 4, 1, {9})) == "G^3(S^4)");
  CHECK(to_pretty(decompose_wedge(SU2, 4, 2, {1, 5})) == "G^1(S^4) x Omega^4 SU(2)");
  CHECK_THROWS_AS(decompose_wedge(SU2, 4, 0, {}), DomainError);
}

TEST_CASE("fibre_decompose") {
  CHECK(to_pretty(fibre_decompose(12, 3, {4, 6, 0})) == "F^(2f) x (Omega Y)^2");
  CHECK(to_pretty(fibre_decompose(0, 2, {0, 0})) == "F^(0f) x Omega Y");
  CHECK(to_pretty(fibre_decompose(12, 2, {1, 0})) == "F^f x Omega Y");
  CHECK(fibre_decompose(12, 2, {4, 0}) == fibre_decompose(12, 2, {8, 0}));
  CHECK_THROWS_AS(fibre_decompose(12, 1, {1}), DomainError);
  CHECK_THROWS_AS(fibre_decompose(12, 2, {1}), DomainError);
}

TEST_CASE("equivalent") {
  const auto s = spec43({1, 0});
  CHECK(equivalent(SU2, s, {5, 7}, {1, 0}).verdict == Verdict::Equivalent);
  CHECK(equivalent(SU2, s, {2, 6}, {3, 9}).verdict == Verdict::NotEquivalent);
  const auto six3 = ConnectedSumSpec::scalar(6, 3, {0, 0});
  CHECK(equivalent(SU5, six3, {2, 4}, {3, 5}).verdict == Verdict::Unknown);
  CHECK(equivalent(SU5, six3, {2, 4}, {6, 2}).verdict == Verdict::Equivalent);
  CHECK_THROWS_AS(equivalent(SU2, spec43({2, 2}), {1, 0}, {1, 0}), DomainError);
  CHECK_FALSE(equivalent(SU2, s, {5, 7}, {1, 0}).reason.empty());
}

TEST_CASE("equivalence classes over K in {0..11}^2") {
  const auto s = spec43({1, 0});
  std::vector<std::vector<Integer>> ks;
  for (long long a = 0; a < 12; ++a)
    for (long long b = 0; b < 12; ++b) ks.push_back({a, b});
  std::vector<int> cls(ks.size(), -1);
  int count = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = count;
    for (std::size_t j = i + 1; j < ks.size(); ++j)
      if (equivalent(SU2, s, ks[i], ks[j]).verdict == Verdict::Equivalent) cls[j] = count;
    ++count;
  }
  CHECK(count == 6);
  std::set<Integer> divisors;
  for (const auto& k : ks) divisors.insert(*ell(SU2, 4, k));
  CHECK(divisors == std::set<Integer>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("equivalent agrees with same_orbit mod 12") {
  std::mt19937_64 rng(31);
  const auto s = spec43({5, 0, 12});
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Integer> k(3), k2(3);
    for (auto& x : k) x = static_cast<long long>(rng() % 200) - 100;
    for (auto& x : k2) x = static_cast<long long>(rng() % 200) - 100;
    const bool orbit = same_orbit(Modulus(12), mod12(k), mod12(k2));
    const auto v = equivalent(SU2, s, k, k2).verdict;
    CHECK(v == (orbit ? Verdict::Equivalent : Verdict::NotEquivalent));
  }
}

TEST_CASE("pointed homotopy groups") {
  const auto p = pointed_homotopy_groups(SU2, spec43({1, 0}), 0);
  CHECK(p.complete());
  CHECK(p.known == FgAbGroup(1, {2, 2}));
  CHECK(to_string(p) == "Z (+) Z/2 (+) Z/2");

  const auto su3 = pointed_homotopy_groups(SpaceId::lie(LieFamily::SU, 3), spec43({13, 0, 24}), 0);
  CHECK(su3.complete());
  CHECK(su3.known == FgAbGroup::integers(2));

  const auto generic = pointed_homotopy_groups(SU2, spec43({1, 1}), 0);
  CHECK_FALSE(generic.complete());
  CHECK(generic.known == FgAbGroup(1, {2, 2}));
  CHECK(to_string(generic) == "Z (+) Z/2 (+) Z/2 (+) pi_0(Map*(Y_F, SU(2)))");

  // the Map* term is only known to vanish for j = 0
  CHECK_FALSE(pointed_homotopy_groups(SU2, spec43({1, 0}), 1).complete());

  // tbar = 0: Y_F is S^{n+q}, so the last term is pi_{j+n+q}(G)
  const auto six3 = pointed_homotopy_groups(SU5, ConnectedSumSpec::scalar(6, 3, {0, 0}), 0);
  CHECK(six3.complete());
  CHECK(six3.known == FgAbGroup::integers(3));

  // unknown table entries stay symbolic
  const auto high = pointed_homotopy_groups(SU2, spec43({1, 0}), 5);
  CHECK_FALSE(high.complete());
}

TEST_CASE("user tables resolve the mapping-space term") {
  HomotopyTables t;
  t.add_layer(parse_table_layer(
      R"({"mapstar_groups": [{"lie": {"family": "SU", "rank": 2}, "n": 4, "q": 3, "xi": [1, 1],
           "degree": 0, "group": {"free": 0, "torsion": [3]}, "citation": "test"}]})",
      "inline"));
  t.add_builtin_core();
  const auto p = pointed_homotopy_groups(SU2, spec43({1, 1}), 0, t);
  CHECK(p.complete());
  CHECK(p.known == FgAbGroup(1, {2, 6}));
}

TEST_CASE("pi2_order_sphere_factor") {
  CHECK(pi2_order_sphere_factor(1) == 1);
  CHECK(pi2_order_sphere_factor(12) == 12);
  CHECK(pi2_order_sphere_factor(4) == 4);
  CHECK_THROWS_AS(pi2_order_sphere_factor(0), DomainError);
}
