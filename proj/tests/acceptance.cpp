// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "gaugekit/classify.hpp"
#include "gaugekit/decompose.hpp"
#include "gaugekit/homotopy_tables.hpp"
#include "gaugekit/manifold.hpp"
#include "gaugekit/matlin.hpp"

#include "oracles.hpp"
#include "random_matrices.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

using namespace gaugekit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s)
    o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  if (!o.ok) ++failures;
  std::printf("%s %2d %-36s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, name, secs,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
}

std::vector<Residue> residues(const Integer& m, const std::vector<Integer>& xs) {
  return make_residues(Modulus(m), xs);
}

oracles::Mat to_mat(const IntMatrix& a) {
  oracles::Mat out(a.rows(), std::vector<int64_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = static_cast<int64_t>(a(i, j));
  return out;
}

// Independent restatement: leading entries move strictly right going down,
// and zero rows sit at the bottom.
bool two_clause_echelon(const MixedMatrix& b) {
  int last_lead = -1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    int lead = -1;
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b.at(i, j).is_zero()) {
        lead = static_cast<int>(j);
        break;
      }
    if (lead < 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || lead <= last_lead) return false;
    last_lead = lead;
  }
  return true;
}

ConnectedSumSpec spec_43(const std::vector<long long>& xi) {
  std::vector<std::vector<Integer>> rows;
  for (auto x : xi) rows.push_back({Integer(x)});
  return ConnectedSumSpec{4, 3, rows};
}

}  // namespace

int main() {
  std::mt19937_64 rng(20260101);

  criterion(1, "orbit oracle equivalence", 10.0, [&](Outcome& o) {
    for (std::size_t r : {2u, 3u}) {
      const auto [q, t] = glr_generators(r);
      const std::vector<oracles::Mat> gens{to_mat(q), to_mat(t), to_mat(unimodular_inverse(q)),
                                           to_mat(unimodular_inverse(t))};
      for (int64_t m = 2; m <= 12; ++m) {
        const auto labels = oracles::orbit_labels(m, r, gens);
        std::map<std::size_t, Integer> orbit_gcd;
        std::map<Integer, std::size_t> gcd_orbit;
        for (std::size_t code = 0; code < labels.size(); ++code) {
          const auto v = oracles::decode(code, m, r);
          std::vector<Integer> xs(v.begin(), v.end());
          const Integer g = gcd_m(Modulus(m), residues(m, xs));
          auto [a, fresh_a] = orbit_gcd.emplace(labels[code], g);
          auto [b, fresh_b] = gcd_orbit.emplace(g, labels[code]);
          if (a->second != g || b->second != labels[code]) {
            o.fail("m=" + std::to_string(m) + " r=" + std::to_string(r) + " partitions differ");
            return;
          }
        }
      }
    }
  });

  criterion(2, "certificate soundness", 5.0, [&](Outcome& o) {
    const std::vector<int64_t> mods{0, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    std::uniform_int_distribution<int64_t> entry(-1000000, 1000000);
    for (int trial = 0; trial < 1000; ++trial) {
      const int64_t m = mods[rng() % mods.size()];
      const std::size_t r = 2 + rng() % 3;
      oracles::Vec x(r);
      for (auto& e : x) e = entry(rng);
      std::vector<Integer> xs(x.begin(), x.end());
      const auto cert = orbit_reduce(Modulus(m), residues(m, xs));
      const Integer det = determinant(cert.transform);
      if (det != 1 && det != -1) return o.fail("det " + to_string(det));
      const int64_t g = oracles::gcd_all(x, m);
      for (std::size_t i = 0; i < r; ++i) {
        Integer acc = 0;
        for (std::size_t j = 0; j < r; ++j) acc += cert.transform(i, j) * xs[j];
        const Integer want = i == 0 ? Integer(g) : Integer(0);
        const Integer diff = acc - want;
        if (m == 0 ? diff != 0 : diff % m != 0)
          return o.fail("transform * x wrong at trial " + std::to_string(trial));
      }
    }
  });

  criterion(3, "echelon soundness", 0, [&](Outcome& o) {
    const std::vector<int64_t> mods{0, 2, 4, 12};
    std::uniform_int_distribution<int64_t> entry(-50, 50);
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
      std::vector<Modulus> moduli;
      for (std::size_t j = 0; j < cols; ++j) moduli.emplace_back(mods[rng() % mods.size()]);
      IntMatrix a(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = entry(rng);
      const MixedMatrix mixed(a, moduli);
      const auto ech = row_echelon_mixed(mixed);
      const Integer det = determinant(ech.transform);
      if (det != 1 && det != -1) return o.fail("det " + to_string(det));
      if (!(mixed.left_multiply(ech.transform) == ech.echelon)) return o.fail("D*A != B");
      if (!two_clause_echelon(ech.echelon) || !is_echelon(ech.echelon))
        return o.fail("not echelon at trial " + std::to_string(trial));
    }
  });

  criterion(4, "matrix map functor law", 0, [&](Outcome& o) {
    std::uniform_int_distribution<int64_t> entry(-1000, 1000);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t r = 1 + rng() % 4;
      const auto a = testing_support::random_unimodular(r, rng);
      const auto b = testing_support::random_unimodular(r, rng);
      for (const Integer d : {Integer(0), Integer(2 + rng() % 11)}) {
        const FgAbGroup grp = d == 0 ? FgAbGroup::integers() : FgAbGroup::cyclic(d);
        std::vector<GroupElement> v;
        for (std::size_t i = 0; i < r; ++i) v.emplace_back(grp, std::vector<Integer>{entry(rng)});
        const auto ab = matrix_map_action(a * b, v);
        if (!(ab == matrix_map_action(a, matrix_map_action(b, v))))
          return o.fail("E_{AB} != E_A E_B at trial " + std::to_string(trial));
        if (!(matrix_map_action(IntMatrix::identity(r), v) == v)) return o.fail("identity");
        if (d != 0) {
          IntMatrix reduced(r, r), shifted(r, r);
          for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
              reduced(i, j) = Modulus(d).reduce(a(i, j));
              shifted(i, j) = a(i, j) + d * (static_cast<int64_t>(rng() % 5) - 2);
            }
          const auto av = matrix_map_action(a, v);
          if (!(matrix_map_action(reduced, v) == av) || !(matrix_map_action(shifted, v) == av))
            return o.fail("action does not factor through Z/" + to_string(d));
        }
      }
    }
  });

  criterion(5, "pi_6 order table", 0, [&](Outcome& o) {
    const std::map<std::string, Integer> special{{"SU(2)", 12}, {"SU(3)", 6}, {"G2", 3}};
    for (const auto& g : shipped_lie_groups()) {
      // Sp(1) is SU(2)
      const std::string name = g == parse_group("Sp1") ? "SU(2)" : to_string(g);
      const auto it = special.find(name);
      const Integer want = it == special.end() ? Integer(1) : it->second;
      const Integer got = pi6_order(g);
      if (got != want) o.fail(to_string(g) + ": " + to_string(got) + " != " + to_string(want));
    }
    for (const auto& [name, order] : special)
      if (pi6_order(parse_group(name)) != order) o.fail(name + " not shipped or wrong");
  });

  criterion(6, "tbar = 1 for (4,3), gcd(12, xi) = 1", 0, [&](Outcome& o) {
    for (std::size_t r = 2; r <= 5; ++r) {
      int checked = 0;
      while (checked < 300) {
        std::vector<long long> xi(r);
        for (auto& x : xi) x = static_cast<long long>(rng() % 2000) - 1000;
        long long g = 12;
        for (auto x : xi) g = std::gcd(g, x);
        if (g != 1) continue;
        ++checked;
        const auto t = tbar(spec_43(xi));
        if (t != 1) return o.fail("r=" + std::to_string(r) + " tbar=" + std::to_string(t));
      }
    }
  });

  criterion(7, "SU(2) class count over K in Z_12^2", 1.0, [&](Outcome& o) {
    const auto g = parse_group("SU2");
    const auto spec = spec_43({1, 0});
    std::vector<std::vector<Integer>> reps;
    std::map<std::size_t, std::set<int64_t>> class_gcds;
    for (int a = 0; a < 12; ++a)
      for (int b = 0; b < 12; ++b) {
        const std::vector<Integer> k{a, b};
        std::size_t cls = reps.size();
        for (std::size_t i = 0; i < reps.size(); ++i) {
          const auto v = equivalent(g, spec, k, reps[i]);
          if (v.verdict == Verdict::Unknown) return o.fail("Unknown verdict: " + v.reason);
          if (v.verdict == Verdict::Equivalent) {
            cls = i;
            break;
          }
        }
        if (cls == reps.size()) reps.push_back(k);
        class_gcds[cls].insert(std::gcd(std::gcd(12, a), b));
      }
    std::set<int64_t> indices;
    for (const auto& [cls, gs] : class_gcds) {
      if (gs.size() != 1) return o.fail("class mixes gcd values");
      indices.insert(*gs.begin());
    }
    if (reps.size() != 6 || indices != std::set<int64_t>{1, 2, 3, 4, 6, 12})
      o.fail(std::to_string(reps.size()) + " classes");
  });

  criterion(8, "pointed pi_0 rows", 0, [&](Outcome& o) {
    const std::vector<std::string> with_z2{"SU2", "Sp2", "Sp3", "Spin5"};
    const std::vector<std::string> free_only{"SU3", "SU4", "SU5",  "SU6", "Spin6", "Spin7", "Spin8",
                                             "Spin9", "G2",  "F4",  "E6",  "E7",    "E8"};
    for (std::size_t r : {2u, 3u}) {
      std::vector<std::vector<long long>> shapes;
      std::vector<long long> base(r, 0);
      base[0] = 1;
      shapes.push_back(base);
      std::vector<long long> lifted(r, 12);
      lifted[0] = 13;
      shapes.push_back(lifted);
      for (const auto& xi : shapes) {
        const auto spec = spec_43(xi);
        auto check = [&](const std::string& name, const FgAbGroup& want) {
          const auto p = pointed_homotopy_groups(parse_group(name), spec, 0);
          if (!p.complete() || !(p.known == want))
            o.fail(name + " r=" + std::to_string(r) + ": " + to_string(p));
        };
        const std::vector<Integer> twos(r, 2);
        for (const auto& name : with_z2)
          check(name, direct_sum(FgAbGroup::integers(r - 1), FgAbGroup::from_cyclic_orders(twos)));
        for (const auto& name : free_only) check(name, FgAbGroup::integers(r - 1));
      }
    }
  });

  criterion(9, "equivalent vs same_orbit mod 12", 0, [&](Outcome& o) {
    const auto g = parse_group("SU2");
    std::uniform_int_distribution<int64_t> entry(-1000, 1000);
    for (int trial = 0; trial < 10000; ++trial) {
      const std::size_t r = 2 + rng() % 3;
      std::vector<long long> xi(r, 0);
      xi[rng() % r] = 1;
      const auto spec = spec_43(xi);
      std::vector<Integer> k(r), k2(r);
      for (std::size_t i = 0; i < r; ++i) {
        // bias towards shared factors so both verdicts occur often
        const int64_t f = std::array<int64_t, 6>{1, 2, 3, 4, 6, 12}[rng() % 6];
        k[i] = entry(rng) * f;
        k2[i] = entry(rng) * f;
      }
      const bool orbit = same_orbit(Modulus(12), residues(12, k), residues(12, k2));
      const auto v = equivalent(g, spec, k, k2);
      if (v.verdict == Verdict::Unknown || (v.verdict == Verdict::Equivalent) != orbit)
        return o.fail("disagree at trial " + std::to_string(trial) + ": " + v.reason);
    }
  });

  criterion(10, "classification dispatch", 0, [&](Outcome& o) {
    const auto z2 = FgAbGroup::integers(2);
    const auto su5 = prin_bundles(parse_group("SU5"), ConnectedSumSpec{6, 3, {{0}, {0}}});
    if (!su5.group || !(*su5.group == z2)) o.fail("SU(5)/(6,3) not Z^2");
    const auto su2 = prin_bundles(parse_group("SU2"), spec_43({1, 0}));
    if (!su2.group || !(*su2.group == z2)) o.fail("SU(2)/(4,3)/(1,0) not Z^2");
    const auto c = classify_conditions(parse_group("SU2"), spec_43({2, 2}));
    if (c.kind != CaseKind::Unsupported) o.fail("SU(2)/(4,3)/(2,2) is " + to_string(c.kind));
  });

  return failures == 0 ? 0 : 1;
}
