#include "frieze/folding.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace frieze {

namespace {

int total_arcs(Model m, int n) { return m == Model::Polygon ? static_cast<int>(arc_count(n)) : tagged_arc_count(n); }

bool is_boundary_arc(Model m, int n, int id) {
  if (m == Model::Punctured) return is_boundary_id(id, n);
  return is_boundary(all_arcs(n)[id], n);
}

int permutation_order(const std::vector<int>& perm) {
  std::vector<int> cur = perm;
  for (int k = 1; k <= static_cast<int>(perm.size()) * 6; ++k) {
    bool id = true;
    for (std::size_t i = 0; i < cur.size(); ++i) id &= cur[i] == static_cast<int>(i);
    if (id) return k;
    std::vector<int> next(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] = perm[cur[i]];
    cur = std::move(next);
  }
  throw std::logic_error("permutation order too large");
}

}  // namespace

std::vector<std::vector<int>> ArcSymmetry::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(perm.size(), 0);
  for (int a = 0; a < static_cast<int>(perm.size()); ++a) {
    if (seen[a] || is_boundary_arc(model, n, a)) continue;
    std::vector<int> orbit;
    for (int x = a; !seen[x]; x = perm[x]) {
      seen[x] = 1;
      orbit.push_back(x);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

ArcSymmetry rotation_action(int n) {
  const int m = 2 * n + 2;
  ArcSymmetry s{Model::Polygon, m, std::vector<int>(arc_count(m)), 2};
  for (Arc a : all_arcs(m))
    s.perm[arc_index(a, m)] = static_cast<int>(arc_index(make_arc((a.from + n + 1) % m, (a.to + n + 1) % m), m));
  return s;
}

ArcSymmetry tag_swap_action(int m) {
  ArcSymmetry s{Model::Punctured, m, std::vector<int>(tagged_arc_count(m)), 2};
  std::iota(s.perm.begin(), s.perm.end(), 0);
  for (int v = 0; v < m; ++v) {
    s.perm[spoke_id(v, m)] = tagged_spoke_id(v, m);
    s.perm[tagged_spoke_id(v, m)] = spoke_id(v, m);
  }
  return s;
}

bool preserves_compatibility(const ArcSymmetry& s) {
  const int total = total_arcs(s.model, s.n);
  if (static_cast<int>(s.perm.size()) != total) return false;
  std::vector<int> sorted = s.perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < total; ++i)
    if (sorted[i] != i) return false;
  for (int a = 0; a < total; ++a)
    if (is_boundary_arc(s.model, s.n, a) != is_boundary_arc(s.model, s.n, s.perm[a])) return false;
  auto compat = [&](int a, int b) {
    if (s.model == Model::Punctured) return compatible(a, b, s.n);
    const auto arcs = all_arcs(s.n);
    return !arcs_cross(arcs[a], arcs[b]);
  };
  for (int a = 0; a < total; ++a)
    for (int b = a + 1; b < total; ++b)
      if (compat(a, b) != compat(s.perm[a], s.perm[b])) return false;
  return true;
}

AFrieze act(const ArcSymmetry& s, const AFrieze& f) {
  if (s.model != Model::Polygon || s.n != f.n()) throw std::invalid_argument("symmetry does not match frieze");
  const auto arcs = all_arcs(f.n());
  AFrieze g(f.n(), f.ring());
  for (std::size_t i = 0; i < arcs.size(); ++i) g.set_label(arcs[s.perm[i]], f.label(arcs[i]));
  return g;
}

DFrieze act(const ArcSymmetry& s, const DFrieze& f) {
  if (s.model != Model::Punctured || s.n != f.n()) throw std::invalid_argument("symmetry does not match frieze");
  DFrieze g(f.n(), f.ring());
  for (int id = 0; id < tagged_arc_count(f.n()); ++id) g.set_label(s.perm[id], f.label(id));
  return g;
}

std::vector<AFrieze> invariant_friezes(const std::vector<AFrieze>& friezes, const ArcSymmetry& s) {
  std::vector<AFrieze> out;
  for (const auto& f : friezes)
    if (act(s, f) == f) out.push_back(f);
  return out;
}

std::vector<DFrieze> invariant_friezes(const std::vector<DFrieze>& friezes, const ArcSymmetry& s) {
  std::vector<DFrieze> out;
  for (const auto& f : friezes)
    if (act(s, f) == f) out.push_back(f);
  return out;
}

TrialitySearch search_triality() {
  constexpr int n = 4;
  const int total = tagged_arc_count(n);
  const int p0 = spoke_id(0, n), t0 = tagged_spoke_id(0, n), c = chord_id(1, 2, n);

  std::vector<int> perm(total, -1), used(total, 0);
  for (int b = 0; b < n; ++b) perm[b] = b, used[b] = 1;
  perm[p0] = t0, perm[t0] = c, perm[c] = p0;
  used[t0] = used[c] = used[p0] = 1;

  std::vector<int> free_arcs;
  for (int a = n; a < total; ++a)
    if (perm[a] < 0) free_arcs.push_back(a);

  auto consistent = [&](int a) {
    for (int b = n; b < total; ++b)
      if (b != a && perm[b] >= 0 && compatible(a, b, n) != compatible(perm[a], perm[b], n)) return false;
    return true;
  };
  for (int a : {p0, t0, c})
    if (!consistent(a)) return {};

  TrialitySearch out;
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == free_arcs.size()) {
      if (permutation_order(perm) == 3) out.candidates.push_back({Model::Punctured, n, perm, 3});
      return;
    }
    const int a = free_arcs[k];
    for (int img = n; img < total; ++img) {
      if (used[img]) continue;
      perm[a] = img;
      used[img] = 1;
      if (consistent(a)) extend(k + 1);
      used[img] = 0;
      perm[a] = -1;
    }
  };
  extend(0);

  const auto friezes = enumerate_nonzero_d(n);
  const std::set<DFrieze> set(friezes.begin(), friezes.end());
  for (const auto& s : out.candidates) {
    bool ok = true;
    for (const auto& f : friezes)
      if (!set.count(act(s, f))) {
        ok = false;
        break;
      }
    if (ok) out.frieze_preserving.push_back(s);
  }
  return out;
}

ArcSymmetry triality_action() {
  static std::once_flag once;
  static ArcSymmetry result;
  static std::string error;
  std::call_once(once, [] {
    const auto search = search_triality();
    if (search.frieze_preserving.size() != 1)
      error = "triality search found " + std::to_string(search.frieze_preserving.size()) + " candidates; review needed";
    else
      result = search.frieze_preserving.front();
  });
  if (!error.empty()) throw std::logic_error(error);
  return result;
}

std::string_view folded_type_name(FoldedType t) {
  switch (t) {
    case FoldedType::B: return "B";
    case FoldedType::C: return "C";
    case FoldedType::G2: return "G2";
  }
  return "?";
}

FoldedType parse_folded_type(std::string_view s) {
  if (s == "B") return FoldedType::B;
  if (s == "C") return FoldedType::C;
  if (s == "G2") return FoldedType::G2;
  throw std::invalid_argument("unknown folded type '" + std::string(s) + "'");
}

BigInt folded_count_formula(FoldedType t, int rank) {
  switch (t) {
    case FoldedType::C:
      if (rank < 2) throw std::invalid_argument("C_n needs n >= 2");
      return 2 * binomial(2 * rank, rank);
    case FoldedType::B: {
      if (rank < 2) throw std::invalid_argument("B_n needs n >= 2");
      BigInt sum = 0;
      for (int m = 1; m * m <= rank + 1; ++m) sum += binomial(2 * rank - m * m + 1, rank);
      return 2 * sum;
    }
    case FoldedType::G2: return 9;
  }
  return 0;
}

ArcSymmetry folding_symmetry(FoldedType t, int rank) {
  switch (t) {
    case FoldedType::C: return rotation_action(rank);
    case FoldedType::B: return tag_swap_action(rank + 1);
    case FoldedType::G2:
      if (rank != 2) throw std::invalid_argument("G2 has rank 2");
      return triality_action();
  }
  throw std::logic_error("bad folded type");
}

namespace {

template <class Label>
FoldedFrieze fold_with(const ArcSymmetry& s, FoldedType t, int rank, Label label) {
  FoldedFrieze g{t, rank, {}};
  for (auto& orbit : s.orbits()) {
    const RingElement v = label(orbit.front());
    for (int a : orbit)
      if (label(a) != v) throw std::invalid_argument("frieze is not invariant");
    g.orbits.push_back({std::move(orbit), v});
  }
  return g;
}

}  // namespace

FoldedFrieze fold(const AFrieze& f, const ArcSymmetry& s, FoldedType t, int rank) {
  if (s.model != Model::Polygon || s.n != f.n()) throw std::invalid_argument("symmetry does not match frieze");
  const auto arcs = all_arcs(f.n());
  return fold_with(s, t, rank, [&](int i) { return f.label(arcs[i]); });
}

FoldedFrieze fold(const DFrieze& f, const ArcSymmetry& s, FoldedType t, int rank) {
  if (s.model != Model::Punctured || s.n != f.n()) throw std::invalid_argument("symmetry does not match frieze");
  return fold_with(s, t, rank, [&](int i) { return f.label(i); });
}

AFrieze lift_a(const FoldedFrieze& g, const ArcSymmetry& s) {
  if (g.orbits.empty()) throw std::invalid_argument("empty folded frieze");
  const Ring ring = g.orbits.front().value.ring();
  const auto arcs = all_arcs(s.n);
  AFrieze f(s.n, ring);
  for (int k = 0; k < s.n; ++k) f.set_label(boundary_arc(k, s.n), RingElement::one(ring));
  for (const auto& o : g.orbits)
    for (int a : o.arcs) f.set_label(arcs.at(a), o.value);
  return f;
}

DFrieze lift_d(const FoldedFrieze& g, const ArcSymmetry& s) {
  if (g.orbits.empty()) throw std::invalid_argument("empty folded frieze");
  const Ring ring = g.orbits.front().value.ring();
  DFrieze f(s.n, ring);
  for (int k = 0; k < s.n; ++k) f.set_label(boundary_id(k, s.n), RingElement::one(ring));
  for (const auto& o : g.orbits)
    for (int a : o.arcs) f.set_label(a, o.value);
  return f;
}

std::vector<FoldedFrieze> enumerate_folded(FoldedType t, int rank, unsigned jobs) {
  const ArcSymmetry s = folding_symmetry(t, rank);
  std::vector<FoldedFrieze> out;
  if (t == FoldedType::C) {
    for (const auto& f : invariant_friezes(enumerate_nonzero_a(s.n, jobs), s)) out.push_back(fold(f, s, t, rank));
  } else {
    for (const auto& f : invariant_friezes(enumerate_nonzero_d(s.n, jobs), s)) out.push_back(fold(f, s, t, rank));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace frieze
