#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaugekit {

using Integer = boost::multiprecision::cpp_int;

/// Thrown when an operation's precondition is violated by its arguments.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Modulus of a residue ring Z/m. The value 0 stands for the integers.
class Modulus {
 public:
  Modulus() = default;
  explicit Modulus(Integer m);

  [[nodiscard]] const Integer& value() const { return m_; }
  [[nodiscard]] bool is_integers() const { return m_.is_zero(); }

  /// Canonical representative: [0, m) for m > 0, unchanged for m = 0.
  [[nodiscard]] Integer reduce(const Integer& x) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;
  friend bool operator<(const Modulus& a, const Modulus& b) { return a.m_ < b.m_; }

 private:
  Integer m_{0};
};

/// An element of Z/m, stored canonically.
class Residue {
 public:
  Residue() = default;
  Residue(Modulus modulus, const Integer& value)
      : modulus_(std::move(modulus)), value_(modulus_.reduce(value)) {}

  [[nodiscard]] const Modulus& modulus() const { return modulus_; }
  [[nodiscard]] const Integer& value() const { return value_; }
  [[nodiscard]] bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Modulus modulus_;
  Integer value_{0};
};

struct BezoutResult {
  Integer g;
  Integer u;
  Integer v;
};

/// Extended Euclid: u*a + v*b = g with g = gcd(a, b) >= 0, gcd(0, 0) = 0.
BezoutResult bezout(const Integer& a, const Integer& b);

/// Non-negative gcd, gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer gcd(std::span<const Integer> xs);
Integer lcm(const Integer& a, const Integer& b);

/// gcd of the representatives together with m. Mixed moduli are rejected.
Integer gcd_m(const Modulus& modulus, std::span<const Residue> xs);

std::vector<Residue> make_residues(const Modulus& modulus,
                                   std::span<const Integer> values);

std::string to_string(const Integer& x);
Integer parse_integer(const std::string& text);

}  // namespace gaugekit
