// Type D friezes on the punctured n-gon: a non-zero ring element on every
// tagged arc and boundary segment such that every flip relation holds.
// Boundary labels 1 give a frieze of type D_n; arbitrary boundary labels
// give the frozen-extended FD_n.

#pragma once

#include "frieze/admissible.hpp"
#include "frieze/frieze_a.hpp"
#include "frieze/ring.hpp"
#include "frieze/tagged.hpp"

#include <map>
#include <optional>
#include <string_view>
#include <vector>

namespace frieze {

class DFrieze {
 public:
  DFrieze() = default;
  // All labels start at zero.
  DFrieze(int n, Ring ring);

  int n() const { return n_; }
  Ring ring() const { return ring_; }

  const RingElement& label(int id) const { return labels_.at(id); }
  const RingElement& label(const TaggedArc& a) const { return label(tagged_id(a, n_)); }
  void set_label(int id, RingElement v) { labels_.at(id) = std::move(v); }
  // Indexed by arc id.
  const std::vector<RingElement>& labels() const { return labels_; }

  bool has_unit_boundary() const;
  bool is_positive() const;

  friend auto operator<=>(const DFrieze&, const DFrieze&) = default;

 private:
  int n_ = 0;
  Ring ring_ = Ring::Z;
  std::vector<RingElement> labels_;
};

struct DViolation {
  std::optional<DRelation> relation;
  std::optional<int> zero_arc;
};

// Empty iff f is a frieze.
std::vector<DViolation> exchange_check_d(const DFrieze& f);

using DSeed = std::map<int, RingElement>;

// Seed covers t's arcs and the boundary. Solves flip relations until every
// arc is known, then re-checks all of them. Throws PropagationError.
DFrieze propagate_d(const TaggedTriangulation& t, const DSeed& seed, const PropagateOptions& opts = {});

// Negates every spoke, plain and tagged.
DFrieze sigma1(const DFrieze& f);
// n even. Counting from the anchor: negates plain spokes at odd distance,
// tagged spokes at even distance and chords of even length.
DFrieze sigma2(const DFrieze& f, int anchor = 0);

// Positive friezes from canonical seeds: chords 1 with m >= 2 plain spokes
// labeled d | m, or a self-folded pair labeled 1.
std::vector<DFrieze> enumerate_positive_d(int n, unsigned jobs = 1);
// The positive ones closed under sigma1 (and sigma2 for n even).
std::vector<DFrieze> enumerate_nonzero_d(int n, unsigned jobs = 1);

struct SpokeTriangulation {
  TaggedTriangulation triangulation;
  int spokes = 0;             // untagged spokes; 1 for a self-folded pair
  RingElement spoke_label;    // label of the first untagged spoke
  bool self_folded = false;
};

// Peels ears over +-1 length-two chords. What is left is either a fan of
// untagged spokes with constant |label|, or a punctured digon. Requires
// boundary labels +-1. Throws std::logic_error when the structure is absent.
SpokeTriangulation find_spoke_triangulation(const DFrieze& f);

struct SignConfiguration {
  TaggedTriangulation triangulation;
  std::vector<std::pair<int, int>> signs;  // (arc id, +-1) on the triangulation
  int category = 0;                        // 1..4
  int cut_vertex = 0;                      // untagged spoke cut open
  bool spokes_flipped = false;             // read through sigma1 first
  SignLabeling cut;                        // labeling of the (n+2)-gon
};

// Signs on the spoke triangulation, cut open along its first untagged spoke.
// Throws std::logic_error when the cut labeling is neither all +1 nor the
// even-length negation pattern.
SignConfiguration classify_sign_configuration(const DFrieze& f);

enum class DTag { Identity, Sigma1, Sigma2, Sigma1Sigma2 };
std::string_view tag_name(DTag t);

struct NormalizedD {
  DFrieze positive;
  DTag tag;
};

// sigma2 is taken with anchor 0. Throws std::logic_error if the result is
// not positive.
NormalizedD normalize_d(const DFrieze& f);
DFrieze apply_tag(const DFrieze& f, DTag tag);

// D_3 = A_3: the internal arcs of the punctured triangle map to the
// diagonals of a hexagon. P(v) -> (2v, 2v+2), T(v) -> (2v+3, 2v+5) and the
// chord cutting off vertex u -> (2u+1, 2u+4), all mod 6.
Arc d3_to_a3_arc(int id);
// Requires unit boundary; the hexagon boundary is labeled 1.
AFrieze d3_to_a3(const DFrieze& f);

}  // namespace frieze
