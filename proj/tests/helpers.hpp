#pragma once

#include "frieze/frieze_a.hpp"
#include "frieze/ring.hpp"

#include <initializer_list>
#include <utility>

namespace frieze::testing {

inline RingElement Z(long long v) { return RingElement::integer(Ring::Z, v); }
inline RingElement Zi(long long a, long long b) { return RingElement(Ring::Zi, a, b); }
inline RingElement Zw(long long a, long long b) { return RingElement(Ring::Zw, a, b); }

// Catalan numbers by the convolution recursion, independent of binomials.
inline unsigned long long catalan_by_recursion(unsigned k) {
  std::vector<unsigned long long> c(k + 1, 0);
  c[0] = 1;
  for (unsigned m = 1; m <= k; ++m)
    for (unsigned i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c[k];
}

// The height-3 frieze drawn as a band with quiddity row 4 1 2 2 2 1.
inline AFrieze hexagon_height3() {
  AFrieze f(6, Ring::Z);
  for (int k = 0; k < 6; ++k) f.set_label(boundary_arc(k, 6), Z(1));
  const int quiddity[6] = {4, 1, 2, 2, 2, 1};
  for (int i = 0; i < 6; ++i) f.set_label(make_arc(i, (i + 2) % 6), Z(quiddity[i]));
  const int diam[3] = {3, 1, 3};
  for (int i = 0; i < 3; ++i) f.set_label(make_arc(i, i + 3), Z(diam[i]));
  return f;
}

inline ArcSeed unit_seed(const Triangulation& t, Ring ring = Ring::Z) {
  ArcSeed s;
  for (int k = 0; k < t.n(); ++k) s.emplace(boundary_arc(k, t.n()), RingElement::one(ring));
  for (Arc a : t.internal()) s.emplace(a, RingElement::one(ring));
  return s;
}

}  // namespace frieze::testing
