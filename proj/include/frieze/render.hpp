// Frieze bands as text, and triangulated (punctured) polygons as SVG.

#pragma once

#include "frieze/admissible.hpp"
#include "frieze/frieze_a.hpp"
#include "frieze/frieze_d.hpp"

#include <string>
#include <vector>

namespace frieze {

// Row r holds the labels of the arcs (i, i+r+1), r = 0..n-2, so the first
// and last rows are the boundary. Row r starts at i = first[r] and lists
// n consecutive i; it sits half a cell to the right when r is even, which
// puts (i, j) at column 2i + r - 1 up to a shift.
struct FriezeBand {
  int n = 0;
  std::vector<int> first;
  std::vector<std::vector<RingElement>> rows;

  // Label of arc (i, i+r+1), i taken mod n.
  const RingElement& at(int r, int i) const;
};

FriezeBand make_band(const AFrieze& f);
std::string band_text(const FriezeBand& b);

// Diamonds (a above, b left, c right, d below) with bc - ad != 1, as
// (row of b, i of b) pairs. Empty for a frieze with unit boundary.
std::vector<std::pair<int, int>> diamond_violations(const FriezeBand& b);

struct SvgArc {
  int id;           // arc_index for polygons, tagged arc id for punctured ones
  std::string label;
};

std::string polygon_svg(int n, const std::vector<SvgArc>& arcs);
std::string punctured_svg(int n, const std::vector<SvgArc>& arcs);

// The unit triangulation (or the fan when there is none) with its labels.
std::string frieze_svg(const AFrieze& f);
// The spoke triangulation (or the untagged fan) with its labels.
std::string frieze_svg(const DFrieze& f);
// Signed triangulation, boundary included.
std::string labeling_svg(const SignLabeling& l);

}  // namespace frieze
