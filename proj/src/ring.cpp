#include "frieze/ring.hpp"

#include <stdexcept>

namespace frieze {

std::string_view ring_name(Ring r) {
  switch (r) {
    case Ring::Z:
      return "Z";
    case Ring::Zi:
      return "Zi";
    case Ring::Zw:
      return "Zw";
  }
  return "?";
}

Ring parse_ring(std::string_view name) {
  if (name == "Z") return Ring::Z;
  if (name == "Zi") return Ring::Zi;
  if (name == "Zw") return Ring::Zw;
  throw std::invalid_argument("unknown ring: " + std::string(name));
}

RingElement::RingElement(Ring ring, BigInt a, BigInt b) : ring_(ring), a_(std::move(a)), b_(std::move(b)) {
  if (ring_ == Ring::Z && b_ != 0) throw std::invalid_argument("integer element with imaginary part");
}

BigInt RingElement::norm() const {
  switch (ring_) {
    case Ring::Z:
      return abs(a_);
    case Ring::Zi:
      return a_ * a_ + b_ * b_;
    case Ring::Zw:
      return a_ * a_ - a_ * b_ + b_ * b_;
  }
  return 0;
}

BigInt RingElement::modulus_squared() const {
  if (ring_ == Ring::Z) return a_ * a_;
  return norm();
}

RingElement RingElement::conjugate() const {
  switch (ring_) {
    case Ring::Z:
      return *this;
    case Ring::Zi:
      return {ring_, a_, -b_};
    case Ring::Zw:
      // conj(w) = w^2 = -1 - w
      return {ring_, a_ - b_, -b_};
  }
  return *this;
}

RingElement RingElement::operator-() const { return {ring_, -a_, -b_}; }

static void require_same(const RingElement& x, const RingElement& y) {
  if (x.ring() != y.ring()) throw std::invalid_argument("mixed-ring arithmetic");
}

RingElement& RingElement::operator+=(const RingElement& o) {
  require_same(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
  require_same(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& o) {
  require_same(*this, o);
  switch (ring_) {
    case Ring::Z:
      a_ *= o.a_;
      break;
    case Ring::Zi: {
      BigInt re = a_ * o.a_ - b_ * o.b_;
      BigInt im = a_ * o.b_ + b_ * o.a_;
      a_ = std::move(re);
      b_ = std::move(im);
      break;
    }
    case Ring::Zw: {
      // (a1 + b1 w)(a2 + b2 w) = a1a2 - b1b2 + (a1b2 + a2b1 - b1b2) w
      BigInt bb = b_ * o.b_;
      BigInt re = a_ * o.a_ - bb;
      BigInt im = a_ * o.b_ + b_ * o.a_ - bb;
      a_ = std::move(re);
      b_ = std::move(im);
      break;
    }
  }
  return *this;
}

std::strong_ordering operator<=>(const RingElement& x, const RingElement& y) {
  if (x.ring_ != y.ring_) return x.ring_ <=> y.ring_;
  if (x.a_ != y.a_) return x.a_ < y.a_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (x.b_ != y.b_) return x.b_ < y.b_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RingElement::to_string() const {
  if (ring_ == Ring::Z) return a_.str();
  return "[" + a_.str() + "," + b_.str() + "]";
}

std::optional<RingElement> exact_div(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.ring() == Ring::Z) {
    if (a.a() % b.a() != 0) return std::nullopt;
    return RingElement(Ring::Z, a.a() / b.a());
  }
  // a/b = a * conj(b) / N(b)
  const BigInt n = b.norm();
  const RingElement num = a * b.conjugate();
  if (num.a() % n != 0 || num.b() % n != 0) return std::nullopt;
  return RingElement(a.ring(), num.a() / n, num.b() / n);
}

std::vector<RingElement> units(Ring ring) {
  std::vector<RingElement> out = elements_up_to_norm(ring, 1);
  return out;
}

std::vector<RingElement> elements_up_to_norm(Ring ring, const BigInt& bound) {
  std::vector<RingElement> out;
  if (bound < 1) return out;
  if (ring == Ring::Z) {
    for (BigInt v = -bound; v <= bound; ++v)
      if (v != 0) out.emplace_back(ring, v);
    return out;
  }
  // For Z[w], N >= 3b^2/4 and N >= 3a^2/4, so |a|,|b| <= sqrt(4N/3).
  BigInt r = sqrt(ring == Ring::Zi ? bound : (4 * bound) / 3) + 1;
  for (BigInt a = -r; a <= r; ++a) {
    for (BigInt b = -r; b <= r; ++b) {
      RingElement x(ring, a, b);
      if (!x.is_zero() && x.norm() <= bound) out.push_back(std::move(x));
    }
  }
  return out;
}

std::vector<RingElement> divisors(Ring ring, const RingElement& x) {
  if (x.is_zero()) throw std::domain_error("divisors of zero");
  const BigInt n = x.norm();
  std::vector<RingElement> out;
  for (auto& d : elements_up_to_norm(ring, n)) {
    if (n % d.norm() != 0) continue;
    if (exact_div(x, d)) out.push_back(d);
  }
  return out;
}

unsigned long long divisor_count(unsigned long long m) {
  if (m == 0) throw std::domain_error("divisor_count(0)");
  unsigned long long count = 0;
  for (unsigned long long d = 1; d * d <= m; ++d) {
    if (m % d == 0) count += (d * d == m) ? 1 : 2;
  }
  return count;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt catalan(unsigned k) { return binomial(2 * k, k) / (k + 1); }

bool modulus_less_than_sum(const RingElement& x, const RingElement& y, const RingElement& z) {
  const BigInt X = x.modulus_squared(), Y = y.modulus_squared(), Z = z.modulus_squared();
  const BigInt s = X - Y - Z;
  if (s < 0) return true;
  return s * s < 4 * Y * Z;
}

}  // namespace frieze
