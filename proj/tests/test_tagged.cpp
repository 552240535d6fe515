#include "doctest.h"
#include "helpers.hpp"

#include "frieze/frieze_d.hpp"
#include "frieze/tagged.hpp"

#include <map>
#include <set>

using namespace frieze;
using namespace frieze::testing;

TEST_CASE("tagged arc ids round trip") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(tagged_arc_count(n) - n == n * (n - 2) + 2 * n);
    for (int id = 0; id < tagged_arc_count(n); ++id) CHECK(tagged_id(tagged_arc(id, n), n) == id);
  }
  CHECK(tagged_arc_count(4) - 4 == 16);
  CHECK(segment_id(3, 4, 4) == boundary_id(3, 4));
  CHECK(segment_id(3, 6, 4) == chord_id(3, 3, 4));
  CHECK_THROWS(chord_id(0, 4, 4));
}

TEST_CASE("compatibility") {
  const int n = 4;
  CHECK(compatible(spoke_id(0, n), spoke_id(2, n), n));
  CHECK(compatible(tagged_spoke_id(1, n), tagged_spoke_id(3, n), n));
  CHECK(compatible(spoke_id(1, n), tagged_spoke_id(1, n), n));
  CHECK_FALSE(compatible(spoke_id(1, n), tagged_spoke_id(2, n), n));
  // The chord 0 -> 2 around vertex 1 blocks only the spoke at 1.
  CHECK_FALSE(compatible(chord_id(0, 2, n), spoke_id(1, n), n));
  CHECK(compatible(chord_id(0, 2, n), spoke_id(2, n), n));
  CHECK(compatible(chord_id(0, 2, n), chord_id(2, 2, n), n));
  CHECK(compatible(chord_id(0, 3, n), chord_id(1, 2, n), n));
  CHECK_FALSE(compatible(chord_id(0, 2, n), chord_id(1, 2, n), n));
  for (int a = n; a < tagged_arc_count(n); ++a)
    for (int b = n; b < tagged_arc_count(n); ++b) CHECK(compatible(a, b, n) == compatible(b, a, n));
}

TEST_CASE("tagged triangulation counts") {
  CHECK(enumerate_tagged_triangulations(2).size() == 4);
  CHECK(enumerate_tagged_triangulations(3).size() == catalan_by_recursion(4));
  CHECK(enumerate_tagged_triangulations(4).size() == 50);
  // Cluster count of D_n: (3n-2)/n * binom(2n-2, n-1).
  for (int n = 3; n <= 6; ++n) {
    unsigned long long b = 1;
    for (int i = 0; i < n - 1; ++i) b = b * (2 * n - 2 - i) / (i + 1);
    const auto ts = enumerate_tagged_triangulations(n);
    CHECK(ts.size() == (3 * n - 2) * b / n);
    CHECK(std::is_sorted(ts.begin(), ts.end()));
  }
  CHECK_THROWS(enumerate_tagged_triangulations(1));
}

TEST_CASE("D3 arc dictionary preserves compatibility") {
  std::set<Arc> image;
  for (int a = 3; a < tagged_arc_count(3); ++a) {
    image.insert(d3_to_a3_arc(a));
    for (int b = 3; b < tagged_arc_count(3); ++b)
      if (a != b) CHECK(compatible(a, b, 3) == !arcs_cross(d3_to_a3_arc(a), d3_to_a3_arc(b)));
  }
  CHECK(image.size() == 9);
}

TEST_CASE("flip relations exchange into another triangulation") {
  for (int n = 2; n <= 5; ++n) {
    const auto ts = enumerate_tagged_triangulations(n);
    const std::set<TaggedTriangulation> all(ts.begin(), ts.end());
    for (const auto& t : ts) {
      const auto rels = flip_relations(t);
      REQUIRE(rels.size() == t.arcs().size());
      for (std::size_t i = 0; i < rels.size(); ++i) {
        const int old_arc = t.arcs()[i];
        const auto& ex = rels[i].exchanged;
        REQUIRE((ex[0] == old_arc || ex[1] == old_arc));
        const int new_arc = ex[0] == old_arc ? ex[1] : ex[0];
        CHECK_FALSE(t.contains(new_arc));
        std::vector<int> arcs = t.arcs();
        arcs[i] = new_arc;
        CHECK(all.count(TaggedTriangulation(n, arcs)) == 1);
        // Every factor on the right lies in the cluster or on the boundary.
        for (const auto& m : rels[i].terms)
          for (int id : m) CHECK((t.contains(id) || is_boundary_id(id, n)));
      }
    }
  }
}

TEST_CASE("each exchangeable pair has one relation") {
  for (int n = 2; n <= 6; ++n) {
    std::map<std::array<int, 2>, int> seen;
    for (const auto& r : d_relations(n).relations) ++seen[r.exchanged];
    for (const auto& [pair, count] : seen) CHECK(count == 1);
  }
}

TEST_CASE("relation cases") {
  std::map<DRelation::Case, int> cases;
  for (const auto& r : d_relations(4).relations) ++cases[r.kind];
  CHECK(cases.size() == 4);
  for (const auto& r : d_relations(4).relations) {
    const bool loop = r.terms[0].size() == 3 || r.terms[1].size() == 3;
    CHECK(loop == (r.kind == DRelation::Case::D));
    const bool mixed = is_plain_spoke_id(r.exchanged[0], 4) != is_plain_spoke_id(r.exchanged[1], 4) &&
                       is_spoke_id(r.exchanged[0], 4) && is_spoke_id(r.exchanged[1], 4);
    CHECK(mixed == (r.kind == DRelation::Case::C));
  }
}
