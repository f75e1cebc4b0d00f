#include "gaugekit/fgab.hpp"

#include "gaugekit/matlin.hpp"

namespace gaugekit {

FgAbGroup::FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
  for (std::size_t j = 0; j < torsion_.size(); ++j) {
    if (torsion_[j] < 2)
      throw DomainError("torsion coefficient must be >= 2, got " + to_string(torsion_[j]));
    if (j + 1 < torsion_.size() && torsion_[j + 1] % torsion_[j] != 0)
      throw DomainError("torsion coefficients must form a divisibility chain: " +
                        to_string(torsion_[j]) + " does not divide " +
                        to_string(torsion_[j + 1]));
  }
}

FgAbGroup FgAbGroup::cyclic(const Integer& order) {
  const Integer orders[] = {order};
  return from_cyclic_orders(orders);
}

FgAbGroup FgAbGroup::from_cyclic_orders(std::span<const Integer> orders) {
  if (orders.empty()) return {};
  IntMatrix relations(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) relations(i, i) = orders[i];
  auto invariants = smith_invariants(relations);
  std::size_t free = 0;
  std::vector<Integer> torsion;
  for (const auto& d : invariants) {
    if (d.is_zero())
      ++free;
    else if (d > 1)
      torsion.push_back(d);
  }
  return FgAbGroup(free, std::move(torsion));
}

Modulus FgAbGroup::generator_modulus(std::size_t i) const {
  if (i < free_rank_) return Modulus(0);
  if (i >= generator_count()) throw DomainError("generator index out of range");
  return Modulus(torsion_[i - free_rank_]);
}

Integer FgAbGroup::exponent() const {
  if (free_rank_ > 0) return 0;
  return torsion_.empty() ? Integer(1) : torsion_.back();
}

GroupElement::GroupElement(FgAbGroup group, std::vector<Integer> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_.generator_count())
    throw DomainError("element has " + std::to_string(coeffs_.size()) +
                      " coefficients, group " + to_string(group_) + " has " +
                      std::to_string(group_.generator_count()) + " generators");
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] = group_.generator_modulus(i).reduce(coeffs_[i]);
}

GroupElement GroupElement::zero(const FgAbGroup& group) {
  return GroupElement(group, std::vector<Integer>(group.generator_count()));
}

bool GroupElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
  if (a.group_ != b.group_) throw DomainError("adding elements of different groups");
  auto coeffs = a.coeffs_;
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += b.coeffs_[i];
  return GroupElement(a.group_, std::move(coeffs));
}

GroupElement operator*(const Integer& k, const GroupElement& x) {
  auto coeffs = x.coeffs_;
  for (auto& c : coeffs) c *= k;
  return GroupElement(x.group_, std::move(coeffs));
}

FgAbGroup direct_sum(std::span<const FgAbGroup> groups) {
  std::vector<Integer> orders;
  for (const auto& g : groups) {
    for (std::size_t i = 0; i < g.free_rank(); ++i) orders.emplace_back(0);
    for (const auto& s : g.torsion()) orders.push_back(s);
  }
  return FgAbGroup::from_cyclic_orders(orders);
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  const FgAbGroup both[] = {a, b};
  return direct_sum(both);
}

Integer element_order(const GroupElement& x) {
  const auto& g = x.group();
  Integer order = 1;
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const auto& c = x.coeffs()[i];
    if (i < g.free_rank()) {
      if (!c.is_zero()) return 0;
      continue;
    }
    const auto& s = g.torsion()[i - g.free_rank()];
    order = lcm(order, s / gcd(c, s));
  }
  return order;
}

Integer cardinality(const FgAbGroup& g) {
  if (g.free_rank() > 0) return 0;
  Integer n = 1;
  for (const auto& s : g.torsion()) n *= s;
  return n;
}

std::string to_string(const FgAbGroup& g) {
  if (g.is_trivial()) return "0";
  std::string out;
  auto append = [&out](const std::string& term) {
    if (!out.empty()) out += " (+) ";
    out += term;
  };
  if (g.free_rank() == 1)
    append("Z");
  else if (g.free_rank() > 1)
    append("Z^" + std::to_string(g.free_rank()));
  for (const auto& s : g.torsion()) append("Z/" + to_string(s));
  return out;
}

}  // namespace gaugekit
