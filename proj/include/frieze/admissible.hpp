// +-1 labelings of polygon triangulations whose every 4-cycle has sign
// product +1 ("admissible"), and their reconstruction from the boundary.

#pragma once

#include "frieze/polygon.hpp"

#include <cstdint>
#include <vector>

namespace frieze {

// b[k] is the sign on the boundary arc joining vertex k and k+1 (mod n).
using BoundaryState = std::vector<int>;

class SignLabeling {
 public:
  SignLabeling() = default;
  // All arcs of t (boundary included) start at +1.
  explicit SignLabeling(Triangulation t);

  const Triangulation& triangulation() const { return t_; }
  int n() const { return t_.n(); }

  int sign(Arc a) const;
  void set_sign(Arc a, int s);

  BoundaryState boundary_state() const;
  void set_boundary_state(const BoundaryState& b);

  friend auto operator<=>(const SignLabeling&, const SignLabeling&) = default;

 private:
  Triangulation t_;
  std::vector<std::int8_t> signs_;  // by arc_index; 0 for arcs outside t
};

bool is_admissible(const SignLabeling& l);
// Same, with the 4-cycles of l's triangulation supplied by the caller.
bool is_admissible(const SignLabeling& l, const std::vector<FourCycle>& cycles);

// Negates every arc of even span. Throws std::domain_error("parity undefined")
// when n is odd.
SignLabeling negate_even_arcs(const SignLabeling& l);

// All admissible labelings of t restricting to b, built by cutting ears.
// When two exist, the one with +1 on the smallest internal arc comes first.
std::vector<SignLabeling> extend_boundary(const Triangulation& t, const BoundaryState& b);

// Reference enumeration over all 2^(n-3) internal sign choices.
std::vector<SignLabeling> extend_boundary_brute_force(const Triangulation& t, const BoundaryState& b);

// Relabels vertex v as v + shift (mod n) in both triangulation and signs.
SignLabeling rotate(const SignLabeling& l, int shift);

}  // namespace frieze
