// Arc symmetries and folding: C_n friezes are the A_{2n-1} friezes invariant
// under the half-turn of the (2n+2)-gon, B_n friezes are the D_{n+1}
// friezes invariant under swapping tags, and G_2 friezes are the D_4
// friezes invariant under triality.

#pragma once

#include "frieze/frieze_a.hpp"
#include "frieze/frieze_d.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace frieze {

enum class Model { Polygon, Punctured };

struct ArcSymmetry {
  Model model = Model::Polygon;
  int n = 0;              // polygon size
  std::vector<int> perm;  // over arc_index (polygon) or tagged arc ids
  int order = 1;

  int operator()(int arc) const { return perm.at(arc); }
  // Orbits of internal arcs, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> orbits() const;
};

// Half-turn of the (2n+2)-gon: (i, j) -> (i+n+1, j+n+1).
ArcSymmetry rotation_action(int n);
// Swaps the plain and tagged spoke at every vertex of the punctured m-gon.
ArcSymmetry tag_swap_action(int m);

struct TrialitySearch {
  // Order-3 automorphisms of the D_4 compatibility graph fixing the boundary
  // with P0 -> T0 -> C1+2 -> P0.
  std::vector<ArcSymmetry> candidates;
  // Those also mapping the D_4 frieze set onto itself.
  std::vector<ArcSymmetry> frieze_preserving;
};
TrialitySearch search_triality();
// The unique frieze-preserving search result. Throws std::logic_error if the
// search does not produce exactly one.
ArcSymmetry triality_action();

// Maps boundary to boundary and compatible pairs to compatible pairs.
bool preserves_compatibility(const ArcSymmetry& s);

AFrieze act(const ArcSymmetry& s, const AFrieze& f);
DFrieze act(const ArcSymmetry& s, const DFrieze& f);

std::vector<AFrieze> invariant_friezes(const std::vector<AFrieze>& friezes, const ArcSymmetry& s);
std::vector<DFrieze> invariant_friezes(const std::vector<DFrieze>& friezes, const ArcSymmetry& s);

enum class FoldedType { B, C, G2 };
std::string_view folded_type_name(FoldedType t);
FoldedType parse_folded_type(std::string_view s);

// 2 binom(2n, n) for C_n, 2 sum_{m^2 <= n+1} binom(2n - m^2 + 1, n) for
// B_n, 9 for G_2 (rank ignored).
BigInt folded_count_formula(FoldedType t, int rank);

struct FoldedOrbit {
  std::vector<int> arcs;
  RingElement value;

  friend auto operator<=>(const FoldedOrbit&, const FoldedOrbit&) = default;
};

struct FoldedFrieze {
  FoldedType type = FoldedType::C;
  int rank = 0;
  std::vector<FoldedOrbit> orbits;  // internal arcs only; boundary is 1

  friend auto operator<=>(const FoldedFrieze&, const FoldedFrieze&) = default;
};

// The symmetry matching a folded type and rank.
ArcSymmetry folding_symmetry(FoldedType t, int rank);

// Throws std::invalid_argument on a non-invariant frieze.
FoldedFrieze fold(const AFrieze& f, const ArcSymmetry& s, FoldedType t, int rank);
FoldedFrieze fold(const DFrieze& f, const ArcSymmetry& s, FoldedType t, int rank);
AFrieze lift_a(const FoldedFrieze& g, const ArcSymmetry& s);
DFrieze lift_d(const FoldedFrieze& g, const ArcSymmetry& s);

// Every non-zero integral frieze of the folded type, via the unfolded
// enumeration. Canonical order.
std::vector<FoldedFrieze> enumerate_folded(FoldedType t, int rank, unsigned jobs = 1);

}  // namespace frieze
