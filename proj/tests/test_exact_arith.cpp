#include "doctest.h"

#include "gaugekit/exact_arith.hpp"

#include <algorithm>
#include <random>

using namespace gaugekit;

TEST_CASE("bezout") {
  SUBCASE("zero zero") {
    auto r = bezout(0, 0);
    CHECK(r.g == 0);
    CHECK(r.u == 0);
    CHECK(r.v == 0);
  }
  SUBCASE("coprime") {
    auto r = bezout(3, 5);
    CHECK(r.g == 1);
    CHECK(r.u * 3 + r.v * 5 == 1);
  }
  SUBCASE("common factor") {
    auto r = bezout(8, 12);
    CHECK(r.g == 4);
    CHECK(r.u * 8 + r.v * 12 == 4);
  }
  SUBCASE("negative inputs give a non-negative gcd") {
    auto r = bezout(-8, 12);
    CHECK(r.g == 4);
    CHECK(r.u * -8 + r.v * 12 == 4);
    r = bezout(-7, 0);
    CHECK(r.g == 7);
    CHECK(r.u * -7 == 7);
  }
}

TEST_CASE("bezout certificate holds for random 64-bit inputs") {
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 2000; ++i) {
    const Integer a = static_cast<int64_t>(rng());
    const Integer b = static_cast<int64_t>(rng()) >> (i % 60);
    const auto r = bezout(a, b);
    REQUIRE(r.u * a + r.v * b == r.g);
    REQUIRE(r.g >= 0);
    if (!r.g.is_zero()) {
      REQUIRE(a % r.g == 0);
      REQUIRE(b % r.g == 0);
    }
    REQUIRE(r.g == gcd(a, b));
  }
}

TEST_CASE("gcd_m") {
  const Integer xs1[] = {8, 4};
  CHECK(gcd_m(Modulus(12), make_residues(Modulus(12), xs1)) == 4);
  const Integer xs2[] = {6, 4};
  CHECK(gcd_m(Modulus(0), make_residues(Modulus(0), xs2)) == 2);
  const Integer xs3[] = {0, 0};
  CHECK(gcd_m(Modulus(5), make_residues(Modulus(5), xs3)) == 5);
  CHECK(gcd_m(Modulus(0), make_residues(Modulus(0), xs3)) == 0);
}

TEST_CASE("gcd_m rejects mixed moduli") {
  std::vector<Residue> xs{Residue(Modulus(12), 3), Residue(Modulus(6), 3)};
  CHECK_THROWS_AS(gcd_m(Modulus(12), xs), DomainError);
}

TEST_CASE("gcd_m is permutation and representative invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Integer m = static_cast<int64_t>(rng() % 30);
    std::vector<Integer> raw(2 + rng() % 4);
    for (auto& x : raw) x = static_cast<int64_t>(rng() % 200) - 100;
    const Modulus mod(m);
    const auto base = gcd_m(mod, make_residues(mod, raw));
    if (m > 0) CHECK(m % base == 0);

    auto permuted = raw;
    std::shuffle(permuted.begin(), permuted.end(), rng);
    CHECK(gcd_m(mod, make_residues(mod, permuted)) == base);

    if (m > 0) {
      auto shifted = raw;
      shifted[rng() % shifted.size()] += m * static_cast<int64_t>(rng() % 7 + 1);
      // shifting the representative must not change the answer, also when the
      // residues are built from the raw integers
      Integer g = m;
      for (const auto& x : shifted) g = gcd(g, x);
      CHECK(g == base);
      CHECK(gcd_m(mod, make_residues(mod, shifted)) == base);
    }
  }
}

TEST_CASE("residues are canonical") {
  CHECK(Residue(Modulus(12), -1).value() == 11);
  CHECK(Residue(Modulus(12), 25).value() == 1);
  CHECK(Residue(Modulus(0), -25).value() == -25);
  CHECK(Residue(Modulus(12), -1) == Residue(Modulus(12), 23));
  CHECK_THROWS_AS(Modulus(-3), DomainError);
}

TEST_CASE("parse_integer") {
  CHECK(parse_integer("-123456789012345678901234567890") ==
        Integer("-123456789012345678901234567890"));
  CHECK(parse_integer("+5") == 5);
  CHECK_THROWS_AS(parse_integer("12a"), DomainError);
  CHECK_THROWS_AS(parse_integer("-"), DomainError);
}
