// Exact arithmetic over Z, Z[i] and Z[w] (w a primitive cube root of unity).
//
// Every element is a pair of arbitrary-precision coordinates (a, b) read as
// a, a + b*i or a + b*w depending on the ring tag. Z[w] uses the basis
// (1, w) with w^2 = -1 - w.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frieze {

using BigInt = boost::multiprecision::cpp_int;

enum class Ring { Z, Zi, Zw };

std::string_view ring_name(Ring r);
Ring parse_ring(std::string_view name);

class RingElement {
 public:
  RingElement() = default;
  RingElement(Ring ring, BigInt a, BigInt b = 0);

  static RingElement integer(Ring ring, long long v) { return {ring, BigInt(v), BigInt(0)}; }
  static RingElement zero(Ring ring) { return {ring, 0, 0}; }
  static RingElement one(Ring ring) { return {ring, 1, 0}; }

  Ring ring() const { return ring_; }
  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // True for ring elements that are rational integers.
  bool is_rational() const { return b_ == 0; }
  // Only meaningful for rational integers.
  int sign() const { return a_ > 0 ? 1 : (a_ < 0 ? -1 : 0); }

  // |a| for Z, a^2+b^2 for Z[i], a^2-ab+b^2 for Z[w].
  BigInt norm() const;
  // Squared complex modulus; equals norm() except on Z where it is a^2.
  BigInt modulus_squared() const;
  RingElement conjugate() const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& o);
  RingElement& operator-=(const RingElement& o);
  RingElement& operator*=(const RingElement& o);

  friend RingElement operator+(RingElement x, const RingElement& y) { return x += y; }
  friend RingElement operator-(RingElement x, const RingElement& y) { return x -= y; }
  friend RingElement operator*(RingElement x, const RingElement& y) { return x *= y; }

  friend bool operator==(const RingElement& x, const RingElement& y) {
    return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Canonical order: ring tag, then (a, b) lexicographically.
  friend std::strong_ordering operator<=>(const RingElement& x, const RingElement& y);

  std::string to_string() const;

 private:
  Ring ring_ = Ring::Z;
  BigInt a_ = 0;
  BigInt b_ = 0;
};

// q with a = q*b, if one exists in the ring. Throws std::domain_error when b is 0.
std::optional<RingElement> exact_div(const RingElement& a, const RingElement& b);

std::vector<RingElement> units(Ring ring);

// All d with exact_div(x, d) non-empty, in canonical order. x must be non-zero.
std::vector<RingElement> divisors(Ring ring, const RingElement& x);

// Number of positive divisors of m >= 1.
unsigned long long divisor_count(unsigned long long m);

BigInt binomial(unsigned n, unsigned k);
BigInt catalan(unsigned k);

// Every non-zero element of the ring with norm <= bound, canonical order.
std::vector<RingElement> elements_up_to_norm(Ring ring, const BigInt& bound);

// |x| < |y| + |z| as complex moduli, decided exactly.
bool modulus_less_than_sum(const RingElement& x, const RingElement& y, const RingElement& z);

}  // namespace frieze
