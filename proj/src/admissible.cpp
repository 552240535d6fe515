#include "frieze/admissible.hpp"

#include <algorithm>
#include <stdexcept>

namespace frieze {

SignLabeling::SignLabeling(Triangulation t) : t_(std::move(t)), signs_(arc_count(t_.n()), 0) {
  const int n = t_.n();
  for (int k = 0; k < n; ++k) signs_[arc_index(boundary_arc(k, n), n)] = 1;
  for (Arc a : t_.internal()) signs_[arc_index(a, n)] = 1;
}

int SignLabeling::sign(Arc a) const {
  const int s = signs_.at(arc_index(a, n()));
  if (s == 0) throw std::invalid_argument("arc is not part of the labeled triangulation");
  return s;
}

void SignLabeling::set_sign(Arc a, int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
  auto& slot = signs_.at(arc_index(a, n()));
  if (slot == 0) throw std::invalid_argument("arc is not part of the labeled triangulation");
  slot = static_cast<std::int8_t>(s);
}

BoundaryState SignLabeling::boundary_state() const {
  BoundaryState b(n());
  for (int k = 0; k < n(); ++k) b[k] = sign(boundary_arc(k, n()));
  return b;
}

void SignLabeling::set_boundary_state(const BoundaryState& b) {
  if (b.size() != static_cast<std::size_t>(n())) throw std::invalid_argument("boundary state length mismatch");
  for (int k = 0; k < n(); ++k) set_sign(boundary_arc(k, n()), b[k]);
}

bool is_admissible(const SignLabeling& l, const std::vector<FourCycle>& cycles) {
  for (const auto& c : cycles) {
    int p = 1;
    for (Arc a : c.arcs) p *= l.sign(a);
    if (p != 1) return false;
  }
  return true;
}

bool is_admissible(const SignLabeling& l) { return is_admissible(l, four_cycles(l.triangulation())); }

SignLabeling negate_even_arcs(const SignLabeling& l) {
  const int n = l.n();
  if (n % 2 != 0) throw std::domain_error("parity undefined");
  SignLabeling out = l;
  for (int k = 0; k < n; ++k) {
    Arc b = boundary_arc(k, n);
    if (span(b, n) % 2 == 0) out.set_sign(b, -l.sign(b));
  }
  for (Arc a : l.triangulation().internal())
    if (span(a, n) % 2 == 0) out.set_sign(a, -l.sign(a));
  return out;
}

namespace {

struct EarCutter {
  const Triangulation& t;

  bool edge(int x, int y) const { return t.has_edge(make_arc(x, y)); }

  // Extends the labels of the sub-polygon `poly` (vertices in cyclic order,
  // all sides already labeled) to its internal arcs.
  std::vector<SignLabeling> solve(const std::vector<int>& poly, const SignLabeling& labels) const {
    const std::size_t k = poly.size();
    auto side = [&](std::size_t i) { return make_arc(poly[i % k], poly[(i + 1) % k]); };
    if (k == 3) return {labels};
    if (k == 4) {
      int p = 1;
      for (std::size_t i = 0; i < 4; ++i) p *= labels.sign(side(i));
      if (p != 1) return {};
      const Arc diag = t.contains(make_arc(poly[0], poly[2])) ? make_arc(poly[0], poly[2]) : make_arc(poly[1], poly[3]);
      SignLabeling plus = labels, minus = labels;
      plus.set_sign(diag, 1);
      minus.set_sign(diag, -1);
      return {plus, minus};
    }

    // Lexicographically smallest ear.
    std::size_t ear = k;
    Arc cut{};
    for (std::size_t i = 0; i < k; ++i) {
      const Arc c = make_arc(poly[(i + k - 1) % k], poly[(i + 1) % k]);
      if (!t.contains(c)) continue;
      if (ear == k || c < cut) {
        ear = i;
        cut = c;
      }
    }
    if (ear == k) throw std::logic_error("extend_boundary: polygon without an ear");
    const int prev = poly[(ear + k - 1) % k], next = poly[(ear + 1) % k];
    const int b1b2 = labels.sign(make_arc(prev, poly[ear])) * labels.sign(make_arc(poly[ear], next));

    std::vector<int> sub = poly;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(ear));
    int apex = -1;
    for (int w : sub)
      if (w != prev && w != next && edge(w, prev) && edge(w, next)) apex = w;
    if (apex < 0) throw std::logic_error("extend_boundary: cut arc without a triangle");
    const Arc d = make_arc(prev, apex), e = make_arc(next, apex);

    std::vector<int> candidates{1, -1};
    if (sub.size() % 2 == 0) {
      // An even polygon needs boundary product +1, which fixes the cut arc.
      int p = 1;
      for (std::size_t i = 0; i < sub.size(); ++i) {
        const Arc s = make_arc(sub[i], sub[(i + 1) % sub.size()]);
        if (s != cut) p *= labels.sign(s);
      }
      candidates = {p};
    }
    std::vector<SignLabeling> out;
    for (int c : candidates) {
      SignLabeling with_cut = labels;
      with_cut.set_sign(cut, c);
      for (auto& l : solve(sub, with_cut))
        if (l.sign(d) * l.sign(e) == b1b2) out.push_back(std::move(l));
    }
    return out;
  }
};

void order_extensions(std::vector<SignLabeling>& ls) {
  std::sort(ls.begin(), ls.end(), [](const SignLabeling& x, const SignLabeling& y) {
    for (Arc a : x.triangulation().internal()) {
      if (x.sign(a) != y.sign(a)) return x.sign(a) > y.sign(a);
    }
    return false;
  });
}

}  // namespace

std::vector<SignLabeling> extend_boundary(const Triangulation& t, const BoundaryState& b) {
  if (b.size() != static_cast<std::size_t>(t.n())) throw std::invalid_argument("boundary state length mismatch");
  SignLabeling start(t);
  start.set_boundary_state(b);
  std::vector<int> poly(t.n());
  for (int v = 0; v < t.n(); ++v) poly[v] = v;
  auto out = EarCutter{t}.solve(poly, start);
  order_extensions(out);
  return out;
}

std::vector<SignLabeling> extend_boundary_brute_force(const Triangulation& t, const BoundaryState& b) {
  if (b.size() != static_cast<std::size_t>(t.n())) throw std::invalid_argument("boundary state length mismatch");
  const auto cycles = four_cycles(t);
  const auto& internal = t.internal();
  std::vector<SignLabeling> out;
  SignLabeling l(t);
  l.set_boundary_state(b);
  for (unsigned long mask = 0; mask < (1UL << internal.size()); ++mask) {
    for (std::size_t i = 0; i < internal.size(); ++i) l.set_sign(internal[i], (mask >> i) & 1 ? -1 : 1);
    if (is_admissible(l, cycles)) out.push_back(l);
  }
  order_extensions(out);
  return out;
}

SignLabeling rotate(const SignLabeling& l, int shift) {
  const int n = l.n();
  auto mv = [&](Arc a) { return make_arc(((a.from + shift) % n + n) % n, ((a.to + shift) % n + n) % n); };
  std::vector<Arc> arcs;
  for (Arc a : l.triangulation().internal()) arcs.push_back(mv(a));
  SignLabeling out(Triangulation(n, arcs));
  for (int k = 0; k < n; ++k) out.set_sign(mv(boundary_arc(k, n)), l.sign(boundary_arc(k, n)));
  for (Arc a : l.triangulation().internal()) out.set_sign(mv(a), l.sign(a));
  return out;
}

}  // namespace frieze
