// Tagged arcs and tagged triangulations of a once-punctured n-gon with
// boundary vertices 0..n-1 in counterclockwise order.
//
// Arcs have dense ids:
//   boundary segment i -> i+1            i
//   plain spoke at i                     n + i
//   tagged spoke at i                    2n + i
//   chord (start s, length L)            3n + s(n-2) + L-2,   2 <= L <= n-1
// A chord leaves s counterclockwise and cuts off the puncture-free region
// bounded by the segments s, s+1, ..., s+L-1.

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace frieze {

struct TaggedArc {
  enum class Kind { Boundary, Spoke, TaggedSpoke, Chord };
  Kind kind = Kind::Boundary;
  int at = 0;      // boundary start, spoke vertex or chord start
  int length = 1;  // segments cut off; 1 except for chords

  friend auto operator<=>(const TaggedArc&, const TaggedArc&) = default;
};

// Boundary included: n^2 + n.
int tagged_arc_count(int n);
int tagged_id(const TaggedArc& a, int n);
TaggedArc tagged_arc(int id, int n);

int boundary_id(int i, int n);
int spoke_id(int v, int n);
int tagged_spoke_id(int v, int n);
int chord_id(int start, int length, int n);
// The boundary segment or chord joining unrolled positions x < y,
// 1 <= y - x <= n-1, cutting off segments x..y-1 (mod n).
int segment_id(int x, int y, int n);

bool is_boundary_id(int id, int n);
bool is_plain_spoke_id(int id, int n);
bool is_tagged_spoke_id(int id, int n);
bool is_spoke_id(int id, int n);
bool is_chord_id(int id, int n);

// Compatibility of two distinct internal tagged arcs.
bool compatible(int a, int b, int n);

// "B3", "P1", "T0", "C2+3" (chord from 2 over 3 segments).
std::string arc_name(int id, int n);

class TaggedTriangulation {
 public:
  TaggedTriangulation() = default;
  // Validates: n internal arcs, pairwise compatible.
  TaggedTriangulation(int n, std::vector<int> arcs);

  int n() const { return n_; }
  const std::vector<int>& arcs() const { return arcs_; }
  bool contains(int id) const;
  std::vector<int> plain_spokes() const;   // vertices
  std::vector<int> tagged_spokes() const;  // vertices

  friend auto operator<=>(const TaggedTriangulation&, const TaggedTriangulation&) = default;

 private:
  int n_ = 0;
  std::vector<int> arcs_;
};

// Every maximal compatible set, canonical order. Throws on n < 2.
std::vector<TaggedTriangulation> enumerate_tagged_triangulations(int n);

// Exchange relation x*y = m1 + m2 of a flip. Monomials are sorted id lists
// and may repeat an id.
struct DRelation {
  // A: ordinary Ptolemy away from the puncture. B: Ptolemy on a
  // quadrilateral with the puncture as a vertex. C: a plain and a tagged
  // spoke at different vertices, e*b = a + d. D: Ptolemy with the loop around
  // a self-folded triangle as a side, whose value is the product of its two
  // spokes.
  enum class Case { A, B, C, D };
  Case kind = Case::A;
  std::array<int, 2> exchanged{};
  std::array<std::vector<int>, 2> terms;

  friend auto operator<=>(const DRelation&, const DRelation&) = default;
};

char case_letter(DRelation::Case c);

// One relation per arc of t, in the order of t.arcs().
std::vector<DRelation> flip_relations(const TaggedTriangulation& t);

// All distinct flip relations of the punctured n-gon, canonical order, plus
// for every arc the relations mentioning it. Computed once per n.
struct DRelationIndex {
  std::vector<DRelation> relations;
  std::vector<std::vector<std::size_t>> by_arc;
};
const DRelationIndex& d_relations(int n);

}  // namespace frieze
