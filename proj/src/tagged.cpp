#include "frieze/tagged.hpp"

#include "frieze/polygon.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace frieze {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

void check_n(int n) {
  if (n < 2) throw std::invalid_argument("punctured polygon needs n >= 2");
}

}  // namespace

int tagged_arc_count(int n) { return n * n + n; }

int boundary_id(int i, int n) { return mod(i, n); }
int spoke_id(int v, int n) { return n + mod(v, n); }
int tagged_spoke_id(int v, int n) { return 2 * n + mod(v, n); }

int chord_id(int start, int length, int n) {
  if (length < 2 || length > n - 1) throw std::invalid_argument("chord length out of range");
  return 3 * n + mod(start, n) * (n - 2) + (length - 2);
}

int segment_id(int x, int y, int n) {
  const int len = y - x;
  if (len == 1) return boundary_id(x, n);
  return chord_id(x, len, n);
}

bool is_boundary_id(int id, int n) { return id >= 0 && id < n; }
bool is_plain_spoke_id(int id, int n) { return id >= n && id < 2 * n; }
bool is_tagged_spoke_id(int id, int n) { return id >= 2 * n && id < 3 * n; }
bool is_spoke_id(int id, int n) { return id >= n && id < 3 * n; }
bool is_chord_id(int id, int n) { return id >= 3 * n && id < tagged_arc_count(n); }

int tagged_id(const TaggedArc& a, int n) {
  switch (a.kind) {
    case TaggedArc::Kind::Boundary: return boundary_id(a.at, n);
    case TaggedArc::Kind::Spoke: return spoke_id(a.at, n);
    case TaggedArc::Kind::TaggedSpoke: return tagged_spoke_id(a.at, n);
    case TaggedArc::Kind::Chord: return chord_id(a.at, a.length, n);
  }
  throw std::logic_error("bad arc kind");
}

TaggedArc tagged_arc(int id, int n) {
  if (id < 0 || id >= tagged_arc_count(n)) throw std::out_of_range("tagged arc id");
  if (id < n) return {TaggedArc::Kind::Boundary, id, 1};
  if (id < 2 * n) return {TaggedArc::Kind::Spoke, id - n, 1};
  if (id < 3 * n) return {TaggedArc::Kind::TaggedSpoke, id - 2 * n, 1};
  const int c = id - 3 * n;
  return {TaggedArc::Kind::Chord, c / (n - 2), c % (n - 2) + 2};
}

std::string arc_name(int id, int n) {
  const TaggedArc a = tagged_arc(id, n);
  switch (a.kind) {
    case TaggedArc::Kind::Boundary: return "B" + std::to_string(a.at);
    case TaggedArc::Kind::Spoke: return "P" + std::to_string(a.at);
    case TaggedArc::Kind::TaggedSpoke: return "T" + std::to_string(a.at);
    case TaggedArc::Kind::Chord: return "C" + std::to_string(a.at) + "+" + std::to_string(a.length);
  }
  return "?";
}

bool compatible(int a, int b, int n) {
  if (a == b) return true;
  if (is_boundary_id(a, n) || is_boundary_id(b, n)) return true;
  const TaggedArc x = tagged_arc(a, n), y = tagged_arc(b, n);
  using K = TaggedArc::Kind;
  const bool xs = x.kind != K::Chord, ys = y.kind != K::Chord;
  if (xs && ys) return x.kind == y.kind || x.at == y.at;
  if (xs || ys) {
    const TaggedArc& s = xs ? x : y;
    const TaggedArc& c = xs ? y : x;
    const int rel = mod(s.at - c.at, n);
    return rel == 0 || rel >= c.length;
  }
  // Chords: the sets of segments they cut off are nested or disjoint.
  auto inside = [n](const TaggedArc& c, int seg) { return mod(seg - c.at, n) < c.length; };
  bool meet = false, x_in_y = true, y_in_x = true;
  for (int s = 0; s < n; ++s) {
    const bool ix = inside(x, s), iy = inside(y, s);
    meet |= ix && iy;
    if (ix && !iy) x_in_y = false;
    if (iy && !ix) y_in_x = false;
  }
  return !meet || x_in_y || y_in_x;
}

TaggedTriangulation::TaggedTriangulation(int n, std::vector<int> arcs) : n_(n), arcs_(std::move(arcs)) {
  check_n(n);
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
    throw std::invalid_argument("duplicate arc in tagged triangulation");
  if (static_cast<int>(arcs_.size()) != n) throw std::invalid_argument("tagged triangulation needs n arcs");
  for (int a : arcs_)
    if (a < n || a >= tagged_arc_count(n)) throw std::invalid_argument("not an internal tagged arc");
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    for (std::size_t j = i + 1; j < arcs_.size(); ++j)
      if (!compatible(arcs_[i], arcs_[j], n))
        throw std::invalid_argument("incompatible arcs " + arc_name(arcs_[i], n) + ", " + arc_name(arcs_[j], n));
}

bool TaggedTriangulation::contains(int id) const { return std::binary_search(arcs_.begin(), arcs_.end(), id); }

std::vector<int> TaggedTriangulation::plain_spokes() const {
  std::vector<int> out;
  for (int a : arcs_)
    if (is_plain_spoke_id(a, n_)) out.push_back(a - n_);
  return out;
}

std::vector<int> TaggedTriangulation::tagged_spokes() const {
  std::vector<int> out;
  for (int a : arcs_)
    if (is_tagged_spoke_id(a, n_)) out.push_back(a - 2 * n_);
  return out;
}

namespace {

// Bron-Kerbosch with pivoting over the compatibility graph.
void maximal_sets(const std::vector<std::vector<bool>>& adj, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                  std::vector<std::vector<int>>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  int pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (int u : *set) {
      std::size_t c = 0;
      for (int v : p) c += adj[u][v];
      if (c >= best) best = c, pivot = u;
    }
  const std::vector<int> candidates = p;
  for (int v : candidates) {
    if (adj[pivot][v]) continue;
    std::vector<int> p2, x2;
    for (int u : p)
      if (adj[v][u]) p2.push_back(u);
    for (int u : x)
      if (adj[v][u]) x2.push_back(u);
    r.push_back(v);
    maximal_sets(adj, r, p2, x2, out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<TaggedTriangulation> enumerate_tagged_triangulations(int n) {
  check_n(n);
  const int total = tagged_arc_count(n);
  std::vector<std::vector<bool>> adj(total, std::vector<bool>(total, false));
  std::vector<int> internal;
  for (int a = n; a < total; ++a) internal.push_back(a);
  for (int a : internal)
    for (int b : internal) adj[a][b] = a != b && compatible(a, b, n);
  std::vector<std::vector<int>> sets;
  std::vector<int> r;
  maximal_sets(adj, r, internal, {}, sets);
  std::vector<TaggedTriangulation> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.emplace_back(n, std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

char case_letter(DRelation::Case c) { return "ABCD"[static_cast<int>(c)]; }

namespace {

DRelation relation(DRelation::Case kind, int x, int y, std::vector<int> m1, std::vector<int> m2) {
  DRelation r;
  r.kind = kind;
  r.exchanged = {x, y};
  r.terms = {std::move(m1), std::move(m2)};
  return r;
}

DRelation canonical(DRelation r) {
  if (r.exchanged[0] > r.exchanged[1]) std::swap(r.exchanged[0], r.exchanged[1]);
  for (auto& t : r.terms) std::sort(t.begin(), t.end());
  if (r.terms[1] < r.terms[0]) std::swap(r.terms[0], r.terms[1]);
  return r;
}

// The ordinary triangulation of the sub-polygon on unrolled positions
// base..base+len cut out by the chords of t lying inside it. Its boundary
// side (0, len) is the arc closing the region.
Triangulation sub_triangulation(const TaggedTriangulation& t, int base, int len) {
  const int n = t.n();
  std::vector<Arc> arcs;
  for (int a : t.arcs()) {
    if (!is_chord_id(a, n)) continue;
    const TaggedArc c = tagged_arc(a, n);
    const int rel = mod(c.at - base, n);
    if (rel + c.length <= len && c.length < len) arcs.push_back({rel, rel + c.length});
  }
  std::sort(arcs.begin(), arcs.end());
  return Triangulation(len + 1, arcs);
}

// Apex of the triangle on side (0, len) of a sub-polygon triangulation.
int apex(const Triangulation& sub) {
  const int len = sub.n() - 1;
  for (int q = 1; q < len; ++q)
    if (sub.has_edge({0, q}) && sub.has_edge({q, len})) return q;
  throw std::logic_error("no apex on closing side");
}

// Ptolemy relations of the chords inside a sub-polygon. `arc` maps a
// position pair to the monomial it contributes.
template <class ArcFn>
void inner_relations(const Triangulation& sub, ArcFn arc, DRelation::Case plain, DRelation::Case with_loop,
                     int loop_len, std::map<int, DRelation>& out, int base, int n) {
  for (Arc a : sub.internal()) {
    const Quadrilateral q = flip(sub, a).second;
    DRelation r;
    bool loop = false;
    auto mono = [&](Arc x) {
      if (x.from == 0 && x.to == loop_len) loop = true;
      return arc(x);
    };
    const int d0 = segment_id(base + q.diagonals[0].from, base + q.diagonals[0].to, n);
    const int d1 = segment_id(base + q.diagonals[1].from, base + q.diagonals[1].to, n);
    r.exchanged = {d0, d1};
    auto m1 = mono(q.sides[0]);
    auto m2 = mono(q.sides[2]);
    m1.insert(m1.end(), m2.begin(), m2.end());
    auto m3 = mono(q.sides[1]);
    auto m4 = mono(q.sides[3]);
    m3.insert(m3.end(), m4.begin(), m4.end());
    r.terms = {m1, m3};
    r.kind = loop ? with_loop : plain;
    out[segment_id(base + a.from, base + a.to, n)] = r;
  }
}

}  // namespace

std::vector<DRelation> flip_relations(const TaggedTriangulation& t) {
  const int n = t.n();
  std::map<int, DRelation> rel;
  const auto plain = t.plain_spokes();
  const auto tagged = t.tagged_spokes();
  using C = DRelation::Case;

  if (!plain.empty() && !tagged.empty()) {
    // Self-folded pair at v: unroll the boundary to positions 0..n, with the
    // loop around the pair as the closing side (0, n).
    if (plain.size() != 1 || tagged.size() != 1 || plain[0] != tagged[0])
      throw std::logic_error("malformed tagged triangulation");
    const int v = plain[0];
    const Triangulation sub = sub_triangulation(t, v, n);
    const int m = apex(sub);
    const std::vector<int> left{segment_id(v, v + m, n)}, right{segment_id(v + m, v + n, n)};
    rel[spoke_id(v, n)] = relation(C::C, spoke_id(v, n), tagged_spoke_id(v + m, n), left, right);
    rel[tagged_spoke_id(v, n)] = relation(C::C, tagged_spoke_id(v, n), spoke_id(v + m, n), left, right);
    auto arc = [&](Arc x) -> std::vector<int> {
      if (x.from == 0 && x.to == n) return {spoke_id(v, n), tagged_spoke_id(v, n)};
      return {segment_id(v + x.from, v + x.to, n)};
    };
    inner_relations(sub, arc, C::A, C::D, n, rel, v, n);
  } else {
    const bool is_tagged = plain.empty();
    const auto& vs = is_tagged ? tagged : plain;
    if (vs.size() < 2) throw std::logic_error("malformed tagged triangulation");
    auto spoke = [&](int v) { return is_tagged ? tagged_spoke_id(v, n) : spoke_id(v, n); };
    auto other = [&](int v) { return is_tagged ? spoke_id(v, n) : tagged_spoke_id(v, n); };
    const int k = static_cast<int>(vs.size());
    for (int i = 0; i < k; ++i) {
      const int v = vs[i], prev = vs[(i + k - 1) % k], next = vs[(i + 1) % k];
      const int a = v - mod(v - prev, n);  // unrolled position of prev
      const int b = v + mod(next - v, n);        // unrolled position of next
      if (k == 2) {
        // Punctured digon: the spoke flips to the other tag at the far vertex.
        rel[spoke(v)] = relation(C::C, spoke(v), other(next), {segment_id(a, v, n)}, {segment_id(v, b, n)});
      } else {
        rel[spoke(v)] = relation(C::B, spoke(v), segment_id(a, b, n), {segment_id(a, v, n), spoke(next)},
                                 {segment_id(v, b, n), spoke(prev)});
      }
      // The triangle (puncture, v, next) and the gap polygon v..b behind it.
      const int len = b - v;
      if (len < 2) continue;
      const Triangulation sub = sub_triangulation(t, v, len);
      const int q = apex(sub);
      rel[segment_id(v, b, n)] = relation(C::B, segment_id(v, b, n), spoke(v + q), {segment_id(v, v + q, n), spoke(next)},
                                          {segment_id(v + q, b, n), spoke(v)});
      auto arc = [&](Arc x) -> std::vector<int> { return {segment_id(v + x.from, v + x.to, n)}; };
      inner_relations(sub, arc, C::A, C::A, -1, rel, v, n);
    }
  }

  std::vector<DRelation> out;
  for (int a : t.arcs()) {
    auto it = rel.find(a);
    if (it == rel.end()) throw std::logic_error("no flip relation for " + arc_name(a, n));
    out.push_back(canonical(it->second));
  }
  return out;
}

const DRelationIndex& d_relations(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<DRelationIndex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    std::set<DRelation> all;
    for (const auto& t : enumerate_tagged_triangulations(n))
      for (auto& r : flip_relations(t)) all.insert(std::move(r));
    auto idx = std::make_unique<DRelationIndex>();
    idx->relations.assign(all.begin(), all.end());
    idx->by_arc.resize(tagged_arc_count(n));
    for (std::size_t i = 0; i < idx->relations.size(); ++i) {
      const auto& r = idx->relations[i];
      std::set<int> ids(r.exchanged.begin(), r.exchanged.end());
      for (const auto& m : r.terms) ids.insert(m.begin(), m.end());
      for (int id : ids) idx->by_arc[id].push_back(i);
    }
    slot = std::move(idx);
  }
  return *slot;
}

}  // namespace frieze
