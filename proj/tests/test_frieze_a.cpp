#include "doctest.h"
#include "helpers.hpp"

#include "frieze/frieze_a.hpp"

#include <set>

using namespace frieze;
using namespace frieze::testing;

TEST_CASE("ptolemy_check") {
  CHECK(ptolemy_check(hexagon_height3()).empty());

  auto broken = hexagon_height3();
  broken.set_label({0, 2}, Z(5));
  CHECK_FALSE(ptolemy_check(broken).empty());

  AFrieze sq(4, Ring::Z);
  for (Arc a : boundary_arcs(4)) sq.set_label(a, Z(1));
  sq.set_label({0, 2}, Z(1));
  sq.set_label({1, 3}, Z(2));
  CHECK(ptolemy_check(sq).empty());

  sq.set_label({1, 3}, Z(0));
  const auto v = ptolemy_check(sq);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().zero_arc == Arc{1, 3});
}

TEST_CASE("propagate") {
  SUBCASE("hexagon unit seed") {
    const Triangulation t(6, {{0, 2}, {2, 5}, {3, 5}});
    const AFrieze f = propagate(t, unit_seed(t));
    CHECK(f.is_positive());
    const int triangles_at[6] = {2, 1, 3, 2, 1, 3};
    int sum = 0;
    for (int i = 0; i < 6; ++i) {
      const auto& q = f.label(make_arc((i + 5) % 6, (i + 1) % 6));
      CHECK(q == Z(triangles_at[i]));
      sum += static_cast<int>(q.a());
    }
    CHECK(sum == 3 * (6 - 2));
  }
  SUBCASE("square") {
    const Triangulation t(4, {{0, 2}});
    CHECK(propagate(t, unit_seed(t)).label({1, 3}) == Z(2));
  }
  SUBCASE("non-integral pentagon seed") {
    const Triangulation t(5, {{0, 2}, {0, 3}});
    auto seed = unit_seed(t);
    seed[{0, 3}] = Z(3);
    try {
      propagate(t, seed);
      FAIL("expected NotIntegral");
    } catch (const PropagationError& e) {
      CHECK(e.kind() == PropagationError::Kind::NotIntegral);
    }
  }
  SUBCASE("zero label") {
    // 1*1 + 1*(-1) = 0 forces the flipped diagonal of the square to vanish.
    const Triangulation t(4, {{0, 2}});
    auto seed = unit_seed(t);
    seed[{0, 3}] = Z(-1);
    try {
      propagate(t, seed);
      FAIL("expected ZeroLabel");
    } catch (const PropagationError& e) {
      CHECK(e.kind() == PropagationError::Kind::ZeroLabel);
    }
  }
  SUBCASE("route independence") {
    for (const auto& t : enumerate_triangulations(8)) {
      const AFrieze base = propagate(t, unit_seed(t));
      for (std::uint64_t s = 1; s <= 3; ++s) CHECK(propagate(t, unit_seed(t), {s}) == base);
    }
  }
  SUBCASE("Gaussian integers") {
    const Triangulation t(4, {{0, 2}});
    auto seed = unit_seed(t, Ring::Zi);
    seed[{0, 2}] = Zi(1, 1);
    CHECK(propagate(t, seed).label({1, 3}) == Zi(1, -1));
  }
}

TEST_CASE("sigma") {
  AFrieze sq(4, Ring::Z);
  for (Arc a : boundary_arcs(4)) sq.set_label(a, Z(1));
  sq.set_label({0, 2}, Z(1));
  sq.set_label({1, 3}, Z(2));
  const AFrieze s = sigma(sq);
  CHECK(s.label({0, 2}) == Z(-1));
  CHECK(s.label({1, 3}) == Z(-2));
  CHECK(ptolemy_check(s).empty());

  const AFrieze h = sigma(hexagon_height3());
  const int quiddity[6] = {4, 1, 2, 2, 2, 1};
  for (int i = 0; i < 6; ++i) CHECK(h.label(make_arc(i, (i + 2) % 6)) == Z(-quiddity[i]));
  CHECK(h.label({0, 3}) == Z(3));
  CHECK(h.label({1, 4}) == Z(1));
  CHECK(h.label({2, 5}) == Z(3));
  CHECK(ptolemy_check(h).empty());
  CHECK(sigma(h) == hexagon_height3());

  CHECK_THROWS_AS(sigma(AFrieze(5, Ring::Z)), std::domain_error);
}

TEST_CASE("enumerate_nonzero_a small cases") {
  const auto five = enumerate_nonzero_a(5);
  CHECK(five.size() == 5);
  for (const auto& f : five) CHECK(f.is_positive());

  const auto six = enumerate_nonzero_a(6);
  CHECK(six.size() == 28);
  CHECK(std::count_if(six.begin(), six.end(), [](const AFrieze& f) { return f.is_positive(); }) == 14);

  // Square: all non-zero integer solutions of e*f = 2.
  std::set<std::pair<int, int>> solutions;
  for (int e = -2; e <= 2; ++e)
    for (int f = -2; f <= 2; ++f)
      if (e != 0 && f != 0 && e * f == 2) solutions.insert({e, f});
  const auto four = enumerate_nonzero_a(4);
  std::set<std::pair<int, int>> got;
  for (const auto& f : four) got.insert({static_cast<int>(f.label({0, 2}).a()), static_cast<int>(f.label({1, 3}).a())});
  CHECK(four.size() == 4);
  CHECK(got == solutions);
}

TEST_CASE("enumerate_nonzero_a structure") {
  for (int n = 4; n <= 9; ++n) {
    const auto all = enumerate_nonzero_a(n);
    const unsigned long long c = catalan_by_recursion(n - 2);
    CHECK(all.size() == (n % 2 == 0 ? 2 * c : c));
    const auto positive = std::count_if(all.begin(), all.end(), [](const AFrieze& f) { return f.is_positive(); });
    CHECK(static_cast<unsigned long long>(positive) == c);
    for (const auto& f : all) {
      CHECK(f.has_unit_boundary());
      // Diamond rule on quadrilaterals (i, i+1, j, j+1).
      for (int i = 0; i < n; ++i)
        for (int d = 2; d <= n - 2; ++d) {
          const int j = i + d;
          auto L = [&](int x, int y) { return f.label(make_arc(x % n, y % n)); };
          CHECK(L(i, j) * L(i + 1, j + 1) == Z(1) + L(i + 1, j) * L(i, j + 1));
        }
      // The extracted +-1 triangulation never shows an obstruction square.
      const auto u = find_unit_triangulation(f);
      CHECK(is_admissible(u.signs));
      if (n % 2 == 0) {
        const AFrieze s = sigma(f);
        CHECK(s != f);
        CHECK(std::binary_search(all.begin(), all.end(), s));
      }
      const auto norm = normalize_a(f);
      CHECK(norm.positive.is_positive());
      CHECK(apply_tag(norm.positive, norm.tag) == f);
    }
  }
}

TEST_CASE("find_unit_triangulation") {
  const auto u = find_unit_triangulation(hexagon_height3());
  CHECK(u.triangulation.internal() == std::vector<Arc>{{1, 3}, {1, 4}, {1, 5}});
  for (Arc a : u.triangulation.internal()) CHECK(u.signs.sign(a) == 1);
  CHECK(u.trace.size() == 3);
  CHECK(u.trace[0].ear_vertex == 0);  // (1,5) cuts off vertex 0 and is labeled 1

  const auto s = find_unit_triangulation(sigma(hexagon_height3()));
  CHECK(s.triangulation == u.triangulation);
  CHECK(s.signs.sign({1, 3}) == -1);
  CHECK(s.signs.sign({1, 4}) == 1);
  CHECK(s.signs.sign({1, 5}) == -1);

  for (const auto& f : enumerate_nonzero_a(7)) {
    std::vector<Arc> ones;
    for (Arc a : all_arcs(7))
      if (!is_boundary(a, 7) && f.label(a) == Z(1)) ones.push_back(a);
    CHECK(find_unit_triangulation(f).triangulation.internal() == ones);
  }

  AFrieze big(4, Ring::Z);
  for (Arc a : boundary_arcs(4)) big.set_label(a, Z(1));
  big.set_label({0, 2}, Z(3));
  big.set_label({1, 3}, Z(3));
  CHECK_THROWS_AS(find_unit_triangulation(big), NoEarError);
}

TEST_CASE("pentagon with a negated boundary edge") {
  // Left: positive pentagon frieze; right: its image with arcs (0,2), (1,3),
  // (2,4) negated. Ptolemy on (0,2,3,4) then forces boundary (0,4) = -1.
  AFrieze f(5, Ring::Z);
  for (int k = 0; k < 4; ++k) f.set_label(boundary_arc(k, 5), Z(1));
  f.set_label({0, 4}, Z(-1));
  f.set_label({0, 2}, Z(-1));
  f.set_label({2, 4}, Z(-2));
  f.set_label({1, 3}, Z(-2));
  f.set_label({0, 3}, Z(1));
  f.set_label({1, 4}, Z(3));
  CHECK(ptolemy_check(f).empty());
  CHECK_FALSE(f.has_unit_boundary());

  const Triangulation t(5, {{0, 2}, {0, 3}});
  ArcSeed seed;
  for (int k = 0; k < 4; ++k) seed.emplace(boundary_arc(k, 5), Z(1));
  seed.emplace(Arc{0, 2}, Z(-1));
  seed.emplace(Arc{0, 3}, Z(1));
  seed.emplace(Arc{0, 4}, Z(-1));
  CHECK(propagate(t, seed) == f);
  CHECK(is_admissible(find_unit_triangulation(f).signs));
}

TEST_CASE("normalize_a") {
  const auto pos = hexagon_height3();
  CHECK(normalize_a(pos).tag == SignTag::Identity);
  const auto n = normalize_a(sigma(pos));
  CHECK(n.tag == SignTag::Sigma);
  CHECK(n.positive == pos);

  auto bad = enumerate_nonzero_a(5).front();
  bad.set_label({0, 2}, -bad.label({0, 2}));
  CHECK_THROWS_AS(normalize_a(bad), std::logic_error);
}
