// Arcs, triangulations and flips of a convex n-gon with vertices 0..n-1.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace frieze {

struct Arc {
  int from = 0;
  int to = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Normalizes so that from < to. Throws std::invalid_argument on a == b.
Arc make_arc(int a, int b);

bool is_valid_arc(Arc a, int n);
bool is_boundary(Arc a, int n);
// to - from. Its parity describes the arc only when n is even.
int span(Arc a, int n);
// Endpoints strictly interleave around the circle.
bool arcs_cross(Arc a, Arc b);

// Dense index of an arc among the n(n-1)/2 arcs of the n-gon, lexicographic.
std::size_t arc_index(Arc a, int n);
std::size_t arc_count(int n);
// Every arc of the n-gon (boundary and internal), lexicographic.
std::vector<Arc> all_arcs(int n);
std::vector<Arc> boundary_arcs(int n);
// Boundary arc joining vertex k and k+1 (mod n).
Arc boundary_arc(int k, int n);

class Triangulation {
 public:
  Triangulation() = default;
  // Validates the arc set (n-3 pairwise non-crossing internal arcs).
  Triangulation(int n, std::vector<Arc> internal);

  int n() const { return n_; }
  const std::vector<Arc>& internal() const { return internal_; }
  bool contains(Arc a) const;
  // contains(a) or a is a boundary arc.
  bool has_edge(Arc a) const;

  friend auto operator<=>(const Triangulation&, const Triangulation&) = default;

 private:
  int n_ = 0;
  std::vector<Arc> internal_;
};

struct Quadrilateral {
  std::array<int, 4> vertices;  // i < j < k < l
  std::array<Arc, 4> sides;     // (i,j) (j,k) (k,l) (i,l)
  std::array<Arc, 2> diagonals; // (i,k) (j,l)
};

Quadrilateral make_quadrilateral(int i, int j, int k, int l);

// Canonical order, Catalan(n-2) entries. Throws on n < 3.
std::vector<Triangulation> enumerate_triangulations(int n);

// Replaces the internal arc by the other diagonal of its quadrilateral.
// Throws std::invalid_argument("not flippable") if arc is not internal to t.
std::pair<Triangulation, Quadrilateral> flip(const Triangulation& t, Arc arc);

struct FourCycle {
  std::array<int, 4> vertices;  // cyclic order, starting at the smallest vertex
  std::array<Arc, 4> arcs;      // arcs[k] joins vertices[k] and vertices[k+1]
};

// Simple 4-cycles of the graph on the polygon vertices with edges
// boundary + internal arcs.
std::vector<FourCycle> four_cycles(const Triangulation& t);

// Triangles of a triangulation as sorted vertex triples, lexicographic.
std::vector<std::array<int, 3>> triangles(const Triangulation& t);

// The triangulation whose internal arcs all leave vertex 0.
Triangulation fan_triangulation(int n);

}  // namespace frieze
