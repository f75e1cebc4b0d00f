#include "gaugekit/exact_arith.hpp"

#include <utility>

namespace gaugekit {

Modulus::Modulus(Integer m) : m_(std::move(m)) {
  if (m_ < 0) throw DomainError("modulus must be non-negative, got " + to_string(m_));
}

Integer Modulus::reduce(const Integer& x) const {
  if (m_.is_zero()) return x;
  Integer r = x % m_;
  if (r < 0) r += m_;
  return r;
}

BezoutResult bezout(const Integer& a, const Integer& b) {
  if (a.is_zero() && b.is_zero()) return {0, 0, 0};
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::exchange(r, tmp);
    tmp = old_s - q * s;
    old_s = std::exchange(s, tmp);
    tmp = old_t - q * t;
    old_t = std::exchange(t, tmp);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer gcd(std::span<const Integer> xs) {
  Integer g = 0;
  for (const auto& x : xs) g = gcd(g, x);
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  return abs(a / gcd(a, b) * b);
}

Integer gcd_m(const Modulus& modulus, std::span<const Residue> xs) {
  Integer g = modulus.value();
  for (const auto& x : xs) {
    if (x.modulus() != modulus)
      throw DomainError("gcd_m: residue modulo " + to_string(x.modulus().value()) +
                        " in a sequence over modulus " + to_string(modulus.value()));
    g = gcd(g, x.value());
  }
  return g;
}

std::vector<Residue> make_residues(const Modulus& modulus,
                                   std::span<const Integer> values) {
  std::vector<Residue> out;
  out.reserve(values.size());
  for (const auto& v : values) out.emplace_back(modulus, v);
  return out;
}

std::string to_string(const Integer& x) { return x.str(); }

Integer parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw DomainError("not an integer: '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j)
    if (text[j] < '0' || text[j] > '9')
      throw DomainError("not an integer: '" + text + "'");
  return Integer(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace gaugekit
