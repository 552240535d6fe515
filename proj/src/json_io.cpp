#include "frieze/json_io.hpp"

#include <stdexcept>

namespace frieze {

namespace {

Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json to_json(const RingElement& v) {
  if (v.ring() == Ring::Z) return big_to_json(v.a());
  return Json::array({big_to_json(v.a()), big_to_json(v.b())});
}

RingElement ring_element_from_json(const Json& j, Ring ring) {
  if (ring == Ring::Z) {
    if (j.is_array()) bad("integer ring value given as a pair");
    return RingElement(ring, big_from_json(j));
  }
  if (!j.is_array() || j.size() != 2) bad("expected [a, b] for " + std::string(ring_name(ring)));
  return RingElement(ring, big_from_json(j[0]), big_from_json(j[1]));
}

Json arc_to_json(Arc a, int n) {
  Json j;
  j["kind"] = is_boundary(a, n) ? "boundary" : "chord";
  j["from"] = a.from;
  j["to"] = a.to;
  return j;
}

Arc arc_from_json(const Json& j) {
  const std::string kind = string_field(j, "kind");
  if (kind != "chord" && kind != "boundary") bad("polygon arcs are chords or boundary arcs, not '" + kind + "'");
  return make_arc(int_field(j, "from"), int_field(j, "to"));
}

Json tagged_arc_to_json(int id, int n) {
  const TaggedArc a = tagged_arc(id, n);
  Json j;
  switch (a.kind) {
    case TaggedArc::Kind::Boundary:
      j["kind"] = "boundary";
      j["at"] = a.at;
      break;
    case TaggedArc::Kind::Spoke:
      j["kind"] = "spoke";
      j["at"] = a.at;
      break;
    case TaggedArc::Kind::TaggedSpoke:
      j["kind"] = "tagged-spoke";
      j["at"] = a.at;
      break;
    case TaggedArc::Kind::Chord:
      j["kind"] = "chord";
      j["from"] = a.at;
      j["to"] = (a.at + a.length) % n;
      j["side"] = "ccw";
      break;
  }
  return j;
}

int tagged_arc_from_json(const Json& j, int n) {
  const std::string kind = string_field(j, "kind");
  auto vertex = [&](const char* key) {
    const int v = int_field(j, key);
    if (v < 0 || v >= n) bad(std::string("vertex out of range in '") + key + "'");
    return v;
  };
  if (kind == "boundary") return boundary_id(vertex("at"), n);
  if (kind == "spoke") return spoke_id(vertex("at"), n);
  if (kind == "tagged-spoke") return tagged_spoke_id(vertex("at"), n);
  if (kind != "chord") bad("unknown arc kind '" + kind + "'");
  const int from = vertex("from"), to = vertex("to");
  // "cw" names the same chord from its other end.
  const std::string side = j.contains("side") ? string_field(j, "side") : "ccw";
  if (side != "ccw" && side != "cw") bad("chord side must be ccw or cw");
  const int s = side == "ccw" ? from : to;
  const int length = ((side == "ccw" ? to - from : from - to) % n + n) % n;
  if (length < 2 || length > n - 1) bad("chord must cut off 2..n-1 segments");
  return chord_id(s, length, n);
}

Json to_json(const Triangulation& t) {
  Json j;
  j["n"] = t.n();
  Json arcs = Json::array();
  for (Arc a : t.internal()) arcs.push_back(arc_to_json(a, t.n()));
  j["arcs"] = arcs;
  return j;
}

Json to_json(const TaggedTriangulation& t) {
  Json j;
  j["n"] = t.n();
  j["punctured"] = true;
  Json arcs = Json::array();
  for (int a : t.arcs()) arcs.push_back(tagged_arc_to_json(a, t.n()));
  j["arcs"] = arcs;
  return j;
}

Json to_json(const AFrieze& f) {
  Json j;
  j["type"] = "A";
  j["n"] = f.n();
  j["ring"] = std::string(ring_name(f.ring()));
  Json labels = Json::array();
  for (Arc a : all_arcs(f.n())) {
    Json e;
    e["arc"] = arc_to_json(a, f.n());
    e["value"] = to_json(f.label(a));
    labels.push_back(e);
  }
  j["labels"] = labels;
  return j;
}

Json to_json(const DFrieze& f) {
  Json j;
  j["type"] = "D";
  j["n"] = f.n();
  j["ring"] = std::string(ring_name(f.ring()));
  Json labels = Json::array();
  for (int id = 0; id < tagged_arc_count(f.n()); ++id) {
    Json e;
    e["arc"] = tagged_arc_to_json(id, f.n());
    e["value"] = to_json(f.label(id));
    labels.push_back(e);
  }
  j["labels"] = labels;
  return j;
}

AnyFrieze frieze_from_json(const Json& j) {
  const std::string type = string_field(j, "type");
  const int n = int_field(j, "n");
  const Ring ring = j.contains("ring") ? parse_ring(string_field(j, "ring")) : Ring::Z;
  const Json& labels = field(j, "labels");
  if (!labels.is_array()) bad("labels must be an array");
  if (type == "A") {
    if (n < 3) bad("A friezes need n >= 3");
    AFrieze f(n, ring);
    for (const auto& e : labels) {
      const Arc a = arc_from_json(field(e, "arc"));
      if (!is_valid_arc(a, n)) bad("arc out of range");
      f.set_label(a, ring_element_from_json(field(e, "value"), ring));
    }
    return f;
  }
  if (type == "D") {
    if (n < 2) bad("D friezes need n >= 2");
    DFrieze f(n, ring);
    for (const auto& e : labels) f.set_label(tagged_arc_from_json(field(e, "arc"), n), ring_element_from_json(field(e, "value"), ring));
    return f;
  }
  bad("unknown frieze type '" + type + "'");
}

Json to_json(const FoldedFrieze& g) {
  const ArcSymmetry s = folding_symmetry(g.type, g.rank);
  const auto arcs = all_arcs(s.n);
  Json j;
  j["type"] = std::string(folded_type_name(g.type));
  j["rank"] = g.rank;
  Json orbits = Json::array();
  for (const auto& o : g.orbits) {
    Json e;
    Json members = Json::array();
    for (int a : o.arcs) members.push_back(s.model == Model::Polygon ? arc_to_json(arcs.at(a), s.n) : tagged_arc_to_json(a, s.n));
    e["arcs"] = members;
    e["value"] = to_json(o.value);
    orbits.push_back(e);
  }
  j["orbits"] = orbits;
  return j;
}

FoldedFrieze folded_from_json(const Json& j) {
  FoldedFrieze g;
  g.type = parse_folded_type(string_field(j, "type"));
  g.rank = int_field(j, "rank");
  const ArcSymmetry s = folding_symmetry(g.type, g.rank);
  for (const auto& e : field(j, "orbits")) {
    FoldedOrbit o;
    for (const auto& a : field(e, "arcs"))
      o.arcs.push_back(s.model == Model::Polygon ? static_cast<int>(arc_index(arc_from_json(a), s.n)) : tagged_arc_from_json(a, s.n));
    std::sort(o.arcs.begin(), o.arcs.end());
    o.value = ring_element_from_json(field(e, "value"), Ring::Z);
    g.orbits.push_back(std::move(o));
  }
  std::sort(g.orbits.begin(), g.orbits.end(), [](const FoldedOrbit& x, const FoldedOrbit& y) { return x.arcs < y.arcs; });
  return g;
}

Json to_json(const SignLabeling& l) {
  Json j;
  j["triangulation"] = to_json(l.triangulation());
  Json signs = Json::array();
  for (int k = 0; k < l.n(); ++k) {
    Json e;
    e["arc"] = arc_to_json(boundary_arc(k, l.n()), l.n());
    e["sign"] = l.sign(boundary_arc(k, l.n()));
    signs.push_back(e);
  }
  for (Arc a : l.triangulation().internal()) {
    Json e;
    e["arc"] = arc_to_json(a, l.n());
    e["sign"] = l.sign(a);
    signs.push_back(e);
  }
  j["signs"] = signs;
  return j;
}

SignLabeling sign_labeling_from_json(const Json& j) {
  const Json& tj = field(j, "triangulation");
  std::vector<Arc> arcs;
  for (const auto& a : field(tj, "arcs")) arcs.push_back(arc_from_json(a));
  SignLabeling l(Triangulation(int_field(tj, "n"), arcs));
  for (const auto& e : field(j, "signs")) {
    const int s = int_field(e, "sign");
    if (s != 1 && s != -1) bad("signs are +1 or -1");
    l.set_sign(arc_from_json(field(e, "arc")), s);
  }
  return l;
}

}  // namespace frieze
