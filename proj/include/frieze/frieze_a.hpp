// Type A friezes on the n-gon: every arc (boundary included) carries a
// non-zero ring element and all Ptolemy relations hold. With all boundary
// labels equal to 1 this is a frieze of type A_{n-3}; with arbitrary
// boundary it is a frieze of the frozen-extended algebra FA_{n-3}.

#pragma once

#include "frieze/admissible.hpp"
#include "frieze/polygon.hpp"
#include "frieze/ring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frieze {

class AFrieze {
 public:
  AFrieze() = default;
  // All labels start at zero.
  AFrieze(int n, Ring ring);

  int n() const { return n_; }
  Ring ring() const { return ring_; }

  const RingElement& label(Arc a) const { return labels_[arc_index(a, n_)]; }
  void set_label(Arc a, RingElement v) { labels_[arc_index(a, n_)] = std::move(v); }
  // Indexed by arc_index.
  const std::vector<RingElement>& labels() const { return labels_; }

  bool has_unit_boundary() const;
  // Every label is a positive rational integer.
  bool is_positive() const;

  friend auto operator<=>(const AFrieze&, const AFrieze&) = default;

 private:
  int n_ = 0;
  Ring ring_ = Ring::Z;
  std::vector<RingElement> labels_;
};

struct PtolemyViolation {
  std::optional<Quadrilateral> quad;  // failed relation
  std::optional<Arc> zero_arc;        // zero label
};

// Empty iff f is a frieze.
std::vector<PtolemyViolation> ptolemy_check(const AFrieze& f);

class PropagationError : public std::runtime_error {
 public:
  enum class Kind { NotIntegral, ZeroLabel, Inconsistent };
  PropagationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view kind_name(PropagationError::Kind k);

using ArcSeed = std::map<Arc, RingElement>;

struct PropagateOptions {
  // Non-zero: visit unknown arcs in a shuffled order drawn from this seed.
  std::uint64_t shuffle_seed = 0;
};

// Extends values on t's internal arcs and the boundary to every arc, one
// flip at a time: an unknown diagonal gets (ac+bd)/e from a quadrilateral
// whose sides and other diagonal are known. Every Ptolemy relation is then
// re-checked. Throws PropagationError.
AFrieze propagate(const Triangulation& t, const ArcSeed& seed, const PropagateOptions& opts = {});

// Negates every even-span label. Throws std::domain_error for odd n.
AFrieze sigma(const AFrieze& f);

// Non-zero integral friezes of type A_{n-3}, canonical order.
std::vector<AFrieze> enumerate_nonzero_a(int n, unsigned jobs = 1);

struct ReductionStep {
  int ear_vertex;
  Arc arc;                               // the length-2 arc cut off with the ear
  RingElement label;
  std::vector<RingElement> boundary;     // current polygon's side labels before the cut
};
using ReductionTrace = std::vector<ReductionStep>;

class NoEarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UnitTriangulation {
  Triangulation triangulation;
  SignLabeling signs;
  ReductionTrace trace;
};

// Peels ears over length-2 arcs with |a| < |b| + |b'| until a triangle is
// left. Requires boundary labels +-1; the cut arcs then carry +-1 too.
UnitTriangulation find_unit_triangulation(const AFrieze& f);

enum class SignTag { Identity, Sigma };

struct NormalizedA {
  AFrieze positive;
  SignTag tag;
};

// The positive member of {f, sigma(f)}. Throws std::logic_error if neither is.
NormalizedA normalize_a(const AFrieze& f);
AFrieze apply_tag(const AFrieze& f, SignTag tag);

}  // namespace frieze
