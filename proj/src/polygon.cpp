#include "frieze/polygon.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace frieze {

Arc make_arc(int a, int b) {
  if (a == b) throw std::invalid_argument("degenerate arc");
  return a < b ? Arc{a, b} : Arc{b, a};
}

bool is_valid_arc(Arc a, int n) { return 0 <= a.from && a.from < a.to && a.to < n; }

bool is_boundary(Arc a, int n) { return a.to - a.from == 1 || (a.from == 0 && a.to == n - 1); }

int span(Arc a, int /*n*/) { return a.to - a.from; }

bool arcs_cross(Arc a, Arc b) {
  auto strictly_inside = [](int x, Arc c) { return c.from < x && x < c.to; };
  if (a.from == b.from || a.from == b.to || a.to == b.from || a.to == b.to) return false;
  return strictly_inside(b.from, a) != strictly_inside(b.to, a);
}

std::size_t arc_index(Arc a, int n) {
  const std::size_t i = a.from, j = a.to, nn = n;
  return i * (2 * nn - i - 1) / 2 + (j - i - 1);
}

std::size_t arc_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

std::vector<Arc> all_arcs(int n) {
  std::vector<Arc> out;
  out.reserve(arc_count(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

Arc boundary_arc(int k, int n) { return make_arc(k % n, (k + 1) % n); }

std::vector<Arc> boundary_arcs(int n) {
  std::vector<Arc> out;
  for (int k = 0; k < n; ++k) out.push_back(boundary_arc(k, n));
  std::sort(out.begin(), out.end());
  return out;
}

Triangulation::Triangulation(int n, std::vector<Arc> internal) : n_(n), internal_(std::move(internal)) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  std::sort(internal_.begin(), internal_.end());
  if (std::adjacent_find(internal_.begin(), internal_.end()) != internal_.end())
    throw std::invalid_argument("repeated arc in triangulation");
  if (internal_.size() != static_cast<std::size_t>(n - 3))
    throw std::invalid_argument("triangulation of a " + std::to_string(n) + "-gon needs " +
                                std::to_string(n - 3) + " arcs");
  for (std::size_t x = 0; x < internal_.size(); ++x) {
    if (!is_valid_arc(internal_[x], n) || is_boundary(internal_[x], n))
      throw std::invalid_argument("invalid internal arc");
    for (std::size_t y = x + 1; y < internal_.size(); ++y)
      if (arcs_cross(internal_[x], internal_[y])) throw std::invalid_argument("crossing arcs");
  }
}

bool Triangulation::contains(Arc a) const { return std::binary_search(internal_.begin(), internal_.end(), a); }

bool Triangulation::has_edge(Arc a) const { return is_boundary(a, n_) || contains(a); }

Quadrilateral make_quadrilateral(int i, int j, int k, int l) {
  return Quadrilateral{{i, j, k, l},
                       {Arc{i, j}, Arc{j, k}, Arc{k, l}, Arc{i, l}},
                       {Arc{i, k}, Arc{j, l}}};
}

namespace {

void triangulate_range(int a, int b, std::vector<std::vector<Arc>>& out) {
  // Triangulations of the polygon a, a+1, ..., b with base (a, b).
  if (b - a < 2) {
    out.push_back({});
    return;
  }
  for (int k = a + 1; k < b; ++k) {
    std::vector<std::vector<Arc>> left, right;
    triangulate_range(a, k, left);
    triangulate_range(k, b, right);
    for (const auto& l : left) {
      for (const auto& r : right) {
        std::vector<Arc> arcs = l;
        arcs.insert(arcs.end(), r.begin(), r.end());
        if (k - a >= 2) arcs.push_back({a, k});
        if (b - k >= 2) arcs.push_back({k, b});
        out.push_back(std::move(arcs));
      }
    }
  }
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 3) throw std::invalid_argument("enumerate_triangulations: n must be >= 3");
  std::vector<std::vector<Arc>> raw;
  triangulate_range(0, n - 1, raw);
  std::vector<Triangulation> out;
  out.reserve(raw.size());
  for (auto& arcs : raw) out.emplace_back(n, std::move(arcs));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Triangulation, Quadrilateral> flip(const Triangulation& t, Arc arc) {
  if (!t.contains(arc)) throw std::invalid_argument("not flippable");
  const int n = t.n();
  int inner = -1, outer = -1;
  for (int v = 0; v < n; ++v) {
    if (v == arc.from || v == arc.to) continue;
    if (!t.has_edge(make_arc(v, arc.from)) || !t.has_edge(make_arc(v, arc.to))) continue;
    if (arc.from < v && v < arc.to)
      inner = v;
    else
      outer = v;
  }
  if (inner < 0 || outer < 0) throw std::logic_error("flip: triangulation is not maximal");
  std::array<int, 4> v{arc.from, inner, arc.to, outer};
  std::sort(v.begin(), v.end());
  Quadrilateral q = make_quadrilateral(v[0], v[1], v[2], v[3]);
  const Arc other = q.diagonals[0] == arc ? q.diagonals[1] : q.diagonals[0];
  std::vector<Arc> arcs = t.internal();
  std::replace(arcs.begin(), arcs.end(), arc, other);
  return {Triangulation(n, std::move(arcs)), q};
}

std::vector<FourCycle> four_cycles(const Triangulation& t) {
  const int n = t.n();
  std::vector<FourCycle> out;
  auto edge = [&](int x, int y) { return t.has_edge(make_arc(x, y)); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const std::array<std::array<int, 4>, 3> orders{{{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& o : orders) {
            bool ok = true;
            for (int k = 0; k < 4 && ok; ++k) ok = edge(o[k], o[(k + 1) % 4]);
            if (!ok) continue;
            FourCycle cyc{o, {}};
            for (int k = 0; k < 4; ++k) cyc.arcs[k] = make_arc(o[k], o[(k + 1) % 4]);
            out.push_back(cyc);
          }
        }
  return out;
}

std::vector<std::array<int, 3>> triangles(const Triangulation& t) {
  const int n = t.n();
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!t.has_edge({a, b})) continue;
      for (int c = b + 1; c < n; ++c)
        if (t.has_edge({b, c}) && t.has_edge({a, c})) out.push_back({a, b, c});
    }
  return out;
}

Triangulation fan_triangulation(int n) {
  std::vector<Arc> arcs;
  for (int k = 2; k <= n - 2; ++k) arcs.push_back({0, k});
  return Triangulation(n, std::move(arcs));
}

}  // namespace frieze
