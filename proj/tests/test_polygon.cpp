#include "doctest.h"
#include "helpers.hpp"

#include "frieze/polygon.hpp"

#include <map>
#include <queue>
#include <set>

using namespace frieze;
using namespace frieze::testing;

TEST_CASE("span") {
  CHECK(span({0, 2}, 6) == 2);
  CHECK(span({0, 3}, 6) == 3);
  CHECK(span({1, 4}, 5) == 3);
}

TEST_CASE("arcs_cross") {
  CHECK(arcs_cross({0, 2}, {1, 3}));
  CHECK_FALSE(arcs_cross({0, 2}, {2, 4}));
  CHECK_FALSE(arcs_cross({0, 3}, {1, 2}));
  const auto arcs = all_arcs(7);
  for (Arc a : arcs)
    for (Arc b : arcs) CHECK(arcs_cross(a, b) == arcs_cross(b, a));
}

TEST_CASE("boundary arcs") {
  CHECK(is_boundary({0, 1}, 5));
  CHECK(is_boundary({0, 4}, 5));
  CHECK_FALSE(is_boundary({0, 2}, 5));
  CHECK(boundary_arc(4, 5) == Arc{0, 4});
}

TEST_CASE("triangulation counts follow Catalan") {
  CHECK(enumerate_triangulations(4).size() == 2);
  CHECK(enumerate_triangulations(5).size() == 5);
  CHECK(enumerate_triangulations(6).size() == catalan_by_recursion(4));
  CHECK(catalan_by_recursion(4) == 14);
  for (int n = 3; n <= 12; ++n) {
    const auto ts = enumerate_triangulations(n);
    CHECK(ts.size() == catalan_by_recursion(n - 2));
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
  }
  CHECK_THROWS(enumerate_triangulations(2));
}

TEST_CASE("no triangulation contains a crossing pair") {
  for (const auto& t : enumerate_triangulations(8)) {
    const auto& a = t.internal();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) CHECK_FALSE(arcs_cross(a[i], a[j]));
    CHECK(triangles(t).size() == 6);
  }
}

TEST_CASE("flip") {
  SUBCASE("square") {
    auto [t2, q] = flip(Triangulation(4, {{0, 2}}), {0, 2});
    CHECK(t2.internal() == std::vector<Arc>{{1, 3}});
    CHECK(q.vertices == std::array<int, 4>{0, 1, 2, 3});
  }
  SUBCASE("pentagon fan") {
    auto [t2, q] = flip(Triangulation(5, {{0, 2}, {0, 3}}), {0, 2});
    CHECK(t2.internal() == std::vector<Arc>{{0, 3}, {1, 3}});
    CHECK(q.vertices == std::array<int, 4>{0, 1, 2, 3});
  }
  SUBCASE("boundary arc") {
    CHECK_THROWS_WITH(flip(Triangulation(5, {{0, 2}, {0, 3}}), {0, 1}), "not flippable");
  }
}

TEST_CASE("flip is an involution and the flip graph is connected") {
  for (int n = 4; n <= 10; ++n) {
    const auto ts = enumerate_triangulations(n);
    std::map<Triangulation, bool> seen;
    std::queue<Triangulation> q;
    q.push(ts.front());
    seen[ts.front()] = true;
    while (!q.empty()) {
      const Triangulation t = q.front();
      q.pop();
      for (Arc a : t.internal()) {
        auto [t2, quad] = flip(t, a);
        const Arc back = quad.diagonals[0] == a ? quad.diagonals[1] : quad.diagonals[0];
        if (n <= 7) CHECK(flip(t2, back).first == t);
        if (!seen[t2]) {
          seen[t2] = true;
          q.push(t2);
        }
      }
    }
    CHECK(seen.size() == ts.size());
  }
}

namespace {

// All simple 4-cycles by walking paths of length 4 in the edge graph.
std::set<std::set<int>> four_cycles_by_search(const Triangulation& t) {
  const int n = t.n();
  std::vector<std::vector<int>> adj(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && t.has_edge(make_arc(x, y))) adj[x].push_back(y);
  std::set<std::set<int>> out;
  for (int a = 0; a < n; ++a)
    for (int b : adj[a])
      for (int c : adj[b])
        for (int d : adj[c]) {
          if (c == a || d == a || d == b) continue;
          if (std::find(adj[d].begin(), adj[d].end(), a) != adj[d].end()) out.insert({a, b, c, d});
        }
  return out;
}

}  // namespace

TEST_CASE("four_cycles") {
  const Triangulation hex(6, {{0, 2}, {2, 5}, {3, 5}});
  const auto cycles = four_cycles(hex);
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0].vertices == std::array<int, 4>{0, 1, 2, 5});
  CHECK(cycles[1].vertices == std::array<int, 4>{0, 2, 3, 5});
  CHECK(cycles[2].vertices == std::array<int, 4>{2, 3, 4, 5});
  CHECK(four_cycles_by_search(hex).size() == 3);

  const auto sq = four_cycles(Triangulation(4, {{0, 2}}));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].vertices == std::array<int, 4>{0, 1, 2, 3});
  CHECK(four_cycles(Triangulation(3, {})).empty());

  for (int n = 4; n <= 8; ++n)
    for (const auto& t : enumerate_triangulations(n)) {
      std::set<std::set<int>> mine;
      for (const auto& c : four_cycles(t)) mine.insert(std::set<int>(c.vertices.begin(), c.vertices.end()));
      CHECK(mine == four_cycles_by_search(t));
    }
}
