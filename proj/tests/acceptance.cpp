// Acceptance matrix: one PASS/FAIL line per criterion, exit status 1 if any
// fails.

#include "frieze/folding.hpp"
#include "frieze/json_io.hpp"
#include "frieze/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace frieze;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

BigInt label_bound(const std::vector<AFrieze>& fs) {
  BigInt m = 0;
  for (const auto& f : fs)
    for (const auto& v : f.labels()) m = std::max(m, v.norm());
  return m;
}

BigInt folded_bound(FoldedType t, int rank) {
  BigInt m = 0;
  for (const auto& g : enumerate_folded(t, rank))
    for (const auto& o : g.orbits) m = std::max(m, o.value.norm());
  return m;
}

// Catalan numbers by the convolution recursion.
std::vector<std::size_t> catalans(int k) {
  std::vector<std::size_t> c(k + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= k; ++m)
    for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
  return c;
}

void criterion1(Outcome& o) {
  // C(n-2), doubled for even n: 4 5 28 42 264 429 2860 4862.
  const auto c = catalans(9);
  for (int n = 4; n <= 11; ++n) {
    const std::size_t want = c[n - 2] * (n % 2 == 0 ? 2 : 1);
    const auto got = enumerate_nonzero_a(n).size();
    o.expect(got == want, "n=" + std::to_string(n) + " got " + std::to_string(got) + " want " + std::to_string(want));
    o.detail << " " << got;
  }
}

void criterion2(Outcome& o) {
  for (int n = 4; n <= 7; ++n) {
    const auto s = enumerate_nonzero_a(n);
    const BigInt m = max_fan_norm(s);
    const auto r = diff_sets(s, bruteforce_a(n, m));
    o.expect(r.pass(), "n=" + std::to_string(n) + " missing " + std::to_string(r.missing.size()) + " extra " + std::to_string(r.extra.size()));
    o.detail << " n=" << n << ":M=" << m;
  }
}

void criterion3(Outcome& o) {
  std::size_t cases = 0;
  for (int n = 3; n <= 9; ++n)
    for (const auto& t : enumerate_triangulations(n))
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        BoundaryState b(n);
        int product = 1;
        for (int k = 0; k < n; ++k) product *= b[k] = (mask >> k & 1) ? -1 : 1;
        const auto fast = extend_boundary(t, b);
        const auto brute = extend_boundary_brute_force(t, b);
        const std::size_t expected = n % 2 == 1 ? 1 : (product == 1 ? 2 : 0);
        if (fast.size() != expected || brute.size() != expected || fast != brute) {
          o.expect(false, "n=" + std::to_string(n) + " mask " + std::to_string(mask));
          return;
        }
        ++cases;
      }
  o.detail << " " << cases << " cases";
}

void criterion4(Outcome& o) {
  const std::size_t total[] = {16, 28, 204, 374};
  const long positive[] = {4, 14, 51, 187};
  for (int n = 2; n <= 5; ++n) {
    const auto all = enumerate_nonzero_d(n);
    const long pos = std::count_if(all.begin(), all.end(), [](const DFrieze& f) { return f.is_positive(); });
    o.expect(all.size() == total[n - 2], "n=" + std::to_string(n) + " total " + std::to_string(all.size()));
    o.expect(pos == positive[n - 2], "n=" + std::to_string(n) + " positive " + std::to_string(pos));
  }
}

void criterion5(Outcome& o) {
  for (int n = 2; n <= 4; ++n) {
    const auto s = enumerate_nonzero_d(n);
    const BigInt m = max_spoke_norm(s);
    const auto r = diff_sets(s, bruteforce_d(n, m));
    o.expect(r.pass(), "n=" + std::to_string(n) + " missing " + std::to_string(r.missing.size()) + " extra " + std::to_string(r.extra.size()));
    o.detail << " n=" << n << ":M=" << m;
  }
  std::set<AFrieze> image;
  const auto d3 = enumerate_nonzero_d(3);
  for (const auto& f : d3) image.insert(d3_to_a3(f));
  const auto a3 = enumerate_nonzero_a(6);
  o.expect(image.size() == d3.size(), "D3 dictionary not injective");
  o.expect(image == std::set<AFrieze>(a3.begin(), a3.end()), "D3 image differs from A3");
}

void criterion6(Outcome& o) {
  auto count = [&](const std::string& what, std::size_t got, std::size_t want) {
    o.expect(got == want, what + " got " + std::to_string(got));
  };
  count("A3 half-turn", invariant_friezes(enumerate_nonzero_a(6), rotation_action(2)).size(), 12);
  count("A5 half-turn", invariant_friezes(enumerate_nonzero_a(8), rotation_action(3)).size(), 40);
  const auto b2 = invariant_friezes(enumerate_nonzero_d(3), tag_swap_action(3));
  count("D3 tag swap", b2.size(), 12);
  count("D4 tag swap", invariant_friezes(enumerate_nonzero_d(4), tag_swap_action(4)).size(), 42);
  const auto g2 = invariant_friezes(enumerate_nonzero_d(4), triality_action());
  count("D4 triality", g2.size(), 9);
  o.expect(std::all_of(g2.begin(), g2.end(), [](const DFrieze& f) { return f.is_positive(); }), "G2 not all positive");
  count("B2 vs C2", b2.size(), invariant_friezes(enumerate_nonzero_a(6), rotation_action(2)).size());
}

void criterion7(Outcome& o) {
  struct Row {
    const char* type;
    int rank;
    BigInt bound;
    std::size_t want;
  };
  const std::vector<Row> rows{{"A", 1, label_bound(enumerate_nonzero_a(4)), 4},
                              {"A", 2, label_bound(enumerate_nonzero_a(5)), 5},
                              {"B", 2, folded_bound(FoldedType::B, 2), 12},
                              {"C", 2, folded_bound(FoldedType::C, 2), 12},
                              {"G2", 2, folded_bound(FoldedType::G2, 2), 9}};
  for (const auto& r : rows) {
    const auto got = enumerate_by_seeds(r.type, r.rank, r.bound).size();
    o.expect(got == r.want, std::string(r.type) + std::to_string(r.rank) + " got " + std::to_string(got));
    o.detail << " " << r.type << (std::string(r.type) == "G2" ? "" : std::to_string(r.rank)) << ":" << got << "@M=" << r.bound;
  }
}

void criterion8(Outcome& o) {
  const auto fps = enumerate_by_seeds("A", 1, 2, Ring::Zi);
  o.expect(fps.size() == 12, "got " + std::to_string(fps.size()));
  std::set<ClosureFingerprint> set(fps.begin(), fps.end());
  for (const auto& fp : fps)
    for (const auto& u : units(Ring::Zi)) {
      // (x, 2/x) -> (ux, 2/(ux)); the closure orders the two variables itself.
      const RingElement x = u * fp.values[0];
      bool found = false;
      for (const auto& g : fps) found |= g.values[0] == x || g.values[1] == x;
      o.expect(found, "not closed under units");
      if (!found) return;
    }
  for (const auto& fp : fps) o.expect(fp.values[0] * fp.values[1] == RingElement(Ring::Zi, 2, 0), "x x' != 2");
}

void criterion9(Outcome& o) {
  for (int n = 4; n <= 10; ++n) {
    const auto all = enumerate_nonzero_a(n);
    const std::set<AFrieze> set(all.begin(), all.end());
    for (const auto& f : all) {
      if (n % 2 == 0) {
        const AFrieze s = sigma(f);
        if (sigma(s) != f || !ptolemy_check(s).empty() || !set.count(s) || s == f) {
          o.expect(false, "sigma on A n=" + std::to_string(n));
          return;
        }
      }
      const auto norm = normalize_a(f);
      if (!norm.positive.is_positive() || apply_tag(norm.positive, norm.tag) != f) {
        o.expect(false, "normalize_a n=" + std::to_string(n));
        return;
      }
    }
  }
  for (int n = 2; n <= 5; ++n) {
    const auto all = enumerate_nonzero_d(n);
    const std::set<DFrieze> set(all.begin(), all.end());
    for (const auto& f : all) {
      const DFrieze s1 = sigma1(f);
      bool ok = sigma1(s1) == f && exchange_check_d(s1).empty() && set.count(s1) && s1 != f;
      if (n % 2 == 0) {
        const DFrieze s2 = sigma2(f, 0);
        ok &= sigma2(s2, 0) == f && exchange_check_d(s2).empty() && set.count(s2);
      }
      const auto norm = normalize_d(f);
      ok &= norm.positive.is_positive() && apply_tag(norm.positive, norm.tag) == f;
      if (!ok) {
        o.expect(false, "D n=" + std::to_string(n));
        return;
      }
    }
  }
}

void criterion10(Outcome& o) {
  auto bytes_a = [](int n, unsigned jobs) {
    std::string s;
    for (const auto& f : enumerate_nonzero_a(n, jobs)) s += to_json(f).dump();
    return s;
  };
  auto bytes_d = [](int n, unsigned jobs) {
    std::string s;
    for (const auto& f : enumerate_nonzero_d(n, jobs)) s += to_json(f).dump();
    return s;
  };
  const std::string a = bytes_a(9, 1);
  o.expect(a == bytes_a(9, 1), "A9 repeat");
  o.expect(a == bytes_a(9, 2) && a == bytes_a(9, 4), "A9 jobs");
  const std::string d = bytes_d(5, 1);
  o.expect(d == bytes_d(5, 1) && d == bytes_d(5, 3), "D5 jobs");
  const std::string g = [] {
    std::string s;
    for (const auto& f : enumerate_folded(FoldedType::B, 3, 4)) s += to_json(f).dump();
    return s;
  }();
  o.expect(g == [] {
    std::string s;
    for (const auto& f : enumerate_folded(FoldedType::B, 3, 1)) s += to_json(f).dump();
    return s;
  }(), "B3 jobs");
  const auto s1 = enumerate_by_seeds("G2", 2, 14, Ring::Z, 1), s4 = enumerate_by_seeds("G2", 2, 14, Ring::Z, 4);
  o.expect(s1 == s4, "G2 seeds jobs");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"type A counts n=4..11", criterion1},
      {"type A oracle agreement n=4..7", criterion2},
      {"admissible extensions n=3..9", criterion3},
      {"type D counts n=2..5", criterion4},
      {"type D oracle agreement n=2..4, D3 = A3", criterion5},
      {"folding counts C2 C3 B2 B3 G2", criterion6},
      {"exchange-matrix oracle A1 A2 B2 C2 G2", criterion7},
      {"A1 over Z[i]", criterion8},
      {"involutions and normalization", criterion9},
      {"determinism across runs and jobs", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " (" << time << ")" << o.detail.str() << "\n";
    failures += !o.pass;
  }
  std::cout << (failures ? "FAIL" : "PASS") << " acceptance: " << criteria.size() - failures << "/" << criteria.size() << "\n";
  return failures ? 1 : 0;
}
