// JSON forms of the library's objects. Ring values are integers for Z (a
// decimal string once they leave the 64-bit range) and [a, b] pairs for
// Z[i] and Z[w]. Key order is fixed so output is byte-stable.

#pragma once

#include "frieze/admissible.hpp"
#include "frieze/folding.hpp"
#include "frieze/frieze_a.hpp"
#include "frieze/frieze_d.hpp"

#include <json.hpp>

#include <variant>

namespace frieze {

using Json = nlohmann::ordered_json;

Json to_json(const RingElement& v);
RingElement ring_element_from_json(const Json& j, Ring ring);

// {"kind": "boundary"|"chord", "from", "to"}
Json arc_to_json(Arc a, int n);
Arc arc_from_json(const Json& j);

// {"kind": "boundary"|"spoke"|"tagged-spoke", "at"} or
// {"kind": "chord", "from", "to", "side": "ccw"} where the chord cuts off
// the segments from..to-1 going counterclockwise.
Json tagged_arc_to_json(int id, int n);
int tagged_arc_from_json(const Json& j, int n);

// {"n", "arcs"}; "punctured": true for tagged triangulations.
Json to_json(const Triangulation& t);
Json to_json(const TaggedTriangulation& t);

// {"type": "A"|"D", "n", "ring", "labels": [{"arc", "value"}]}
Json to_json(const AFrieze& f);
Json to_json(const DFrieze& f);
using AnyFrieze = std::variant<AFrieze, DFrieze>;
// Throws std::invalid_argument on malformed input; labels not listed stay 0.
AnyFrieze frieze_from_json(const Json& j);

// {"type": "B"|"C"|"G2", "rank", "orbits": [{"arcs", "value"}]}
Json to_json(const FoldedFrieze& g);
FoldedFrieze folded_from_json(const Json& j);

// {"triangulation": {...}, "signs": [{"arc", "sign"}]}
Json to_json(const SignLabeling& l);
SignLabeling sign_labeling_from_json(const Json& j);

}  // namespace frieze
