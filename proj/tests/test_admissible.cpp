#include "doctest.h"
#include "helpers.hpp"

#include "frieze/admissible.hpp"

using namespace frieze;

namespace {

SignLabeling figure_one() {
  SignLabeling l(Triangulation(6, {{0, 2}, {2, 5}, {3, 5}}));
  l.set_boundary_state({-1, 1, 1, -1, 1, 1});
  l.set_sign({0, 2}, 1);
  l.set_sign({2, 5}, -1);
  l.set_sign({3, 5}, 1);
  return l;
}

}  // namespace

TEST_CASE("is_admissible") {
  CHECK(is_admissible(figure_one()));
  for (const auto& t : enumerate_triangulations(7)) CHECK(is_admissible(SignLabeling(t)));
  auto bad = figure_one();
  bad.set_sign({0, 2}, -1);
  CHECK_FALSE(is_admissible(bad));
}

TEST_CASE("negate_even_arcs") {
  const auto l = figure_one();
  const auto m = negate_even_arcs(l);
  CHECK(m.boundary_state() == l.boundary_state());
  CHECK(m.sign({0, 2}) == -1);
  CHECK(m.sign({2, 5}) == -1);
  CHECK(m.sign({3, 5}) == -1);
  CHECK(is_admissible(m));
  CHECK(negate_even_arcs(m) == l);

  const auto fan = negate_even_arcs(SignLabeling(Triangulation(6, {{0, 2}, {0, 3}, {0, 4}})));
  CHECK(fan.sign({0, 2}) == -1);
  CHECK(fan.sign({0, 3}) == 1);
  CHECK(fan.sign({0, 4}) == -1);

  CHECK_THROWS_WITH(negate_even_arcs(SignLabeling(Triangulation(5, {{0, 2}, {0, 3}}))), "parity undefined");
}

TEST_CASE("negate_even_arcs preserves admissibility and has no fixed points") {
  for (const auto& t : enumerate_triangulations(8)) {
    for (unsigned mask = 0; mask < 256; mask += 37) {
      BoundaryState b(8);
      for (int k = 0; k < 8; ++k) b[k] = (mask >> k) & 1 ? -1 : 1;
      for (const auto& l : extend_boundary(t, b)) {
        const auto m = negate_even_arcs(l);
        CHECK(is_admissible(m));
        CHECK(m != l);
      }
    }
  }
}

TEST_CASE("extend_boundary examples") {
  for (const auto& t : enumerate_triangulations(5)) CHECK(extend_boundary(t, {1, -1, -1, 1, -1}).size() == 1);
  const Triangulation hex(6, {{0, 2}, {2, 5}, {3, 5}});
  CHECK(extend_boundary(hex, {-1, 1, 1, 1, 1, 1}).empty());
  const auto two = extend_boundary(hex, BoundaryState(6, 1));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == SignLabeling(hex));
  CHECK(two[1] == negate_even_arcs(SignLabeling(hex)));
  CHECK_THROWS(extend_boundary(hex, {1, 1, 1}));
}

TEST_CASE("extend_boundary matches the brute force for every boundary state") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& t : enumerate_triangulations(n)) {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        BoundaryState b(n);
        int product = 1;
        for (int k = 0; k < n; ++k) {
          b[k] = (mask >> k) & 1 ? -1 : 1;
          product *= b[k];
        }
        const auto fast = extend_boundary(t, b);
        const auto slow = extend_boundary_brute_force(t, b);
        CHECK(fast == slow);
        const std::size_t expected = n % 2 == 1 ? 1 : (product == 1 ? 2 : 0);
        CHECK(fast.size() == expected);
        if (fast.size() == 2) CHECK(fast[1] == negate_even_arcs(fast[0]));
      }
    }
  }
}

TEST_CASE("admissibility is invariant under rotation") {
  for (const auto& t : enumerate_triangulations(7)) {
    for (unsigned mask = 0; mask < 128; mask += 11) {
      SignLabeling l(t);
      BoundaryState b(7);
      for (int k = 0; k < 7; ++k) b[k] = (mask >> k) & 1 ? -1 : 1;
      l.set_boundary_state(b);
      for (std::size_t i = 0; i < t.internal().size(); ++i)
        if ((mask >> i) & 2) l.set_sign(t.internal()[i], -1);
      for (int s = 1; s < 7; ++s) CHECK(is_admissible(rotate(l, s)) == is_admissible(l));
    }
  }
}
