#include "suites.hpp"

#include "frieze/folding.hpp"
#include "frieze/oracle.hpp"

#include <set>
#include <stdexcept>

namespace frieze::cli {

BigInt a_count_formula(int n) { return catalan(n - 2) * (n % 2 == 0 ? 2 : 1); }

BigInt d_positive_formula(int n) {
  BigInt total = 0;
  for (int m = 1; m <= n; ++m) total += BigInt(divisor_count(m)) * binomial(2 * n - m - 1, n - m);
  return total;
}

BigInt d_count_formula(int n) { return d_positive_formula(n) * (n % 2 == 0 ? 4 : 2); }

namespace {

std::string str(const BigInt& x) { return x.str(); }

CheckResult count_check(const std::string& name, const BigInt& expected, std::size_t got) {
  return {name, expected == got, "expected " + str(expected) + ", got " + std::to_string(got)};
}

std::vector<CheckResult> counts(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  const int max_a = o.max_n ? o.max_n : (o.quick ? 9 : 11);
  for (int n = 4; n <= max_a; ++n)
    out.push_back(count_check("A" + std::to_string(n - 3) + " friezes", a_count_formula(n), enumerate_nonzero_a(n, o.jobs).size()));
  const int max_d = o.quick ? 4 : 6;
  for (int n = 2; n <= max_d; ++n) {
    const auto all = enumerate_nonzero_d(n, o.jobs);
    const auto pos = std::count_if(all.begin(), all.end(), [](const DFrieze& f) { return f.is_positive(); });
    out.push_back(count_check("D" + std::to_string(n) + " friezes", d_count_formula(n), all.size()));
    out.push_back(count_check("D" + std::to_string(n) + " positive friezes", d_positive_formula(n), pos));
  }
  std::vector<std::pair<FoldedType, int>> folded{{FoldedType::C, 2}, {FoldedType::C, 3}, {FoldedType::B, 2}, {FoldedType::B, 3}, {FoldedType::G2, 2}};
  if (!o.quick) folded.push_back({FoldedType::B, 4});
  for (auto [t, r] : folded) {
    const std::string name = t == FoldedType::G2 ? "G2" : std::string(folded_type_name(t)) + std::to_string(r);
    out.push_back(count_check(name + " friezes", folded_count_formula(t, r), enumerate_folded(t, r, o.jobs).size()));
  }
  return out;
}

template <class F>
CheckResult diff_check(const std::string& name, const std::vector<F>& structural, const std::vector<F>& oracle, const BigInt& bound) {
  const auto r = diff_sets(structural, oracle);
  std::string detail = "bound " + str(bound) + ", " + std::to_string(r.missing.size()) + " missing, " + std::to_string(r.extra.size()) + " extra";
  if (r.bound_suspect()) detail += " (bound may be too small)";
  return {name, r.pass(), detail};
}

std::vector<CheckResult> oracle(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  for (int n = 4; n <= (o.quick ? 6 : 7); ++n) {
    const auto s = enumerate_nonzero_a(n, o.jobs);
    const BigInt m = max_fan_norm(s);
    out.push_back(diff_check("A" + std::to_string(n - 3) + " bounded fan search", s, bruteforce_a(n, m, Ring::Z, o.jobs), m));
  }
  for (int n = 2; n <= (o.quick ? 3 : 4); ++n) {
    const auto s = enumerate_nonzero_d(n, o.jobs);
    const BigInt m = max_spoke_norm(s);
    out.push_back(diff_check("D" + std::to_string(n) + " bounded spoke search", s, bruteforce_d(n, m, o.jobs), m));
  }
  {
    std::set<AFrieze> image;
    for (const auto& f : enumerate_nonzero_d(3, o.jobs)) image.insert(d3_to_a3(f));
    const auto hex = enumerate_nonzero_a(6, o.jobs);
    out.push_back({"D3 friezes map onto A3 friezes", image == std::set<AFrieze>(hex.begin(), hex.end()),
                   std::to_string(image.size()) + " images, " + std::to_string(hex.size()) + " A3 friezes"});
  }
  auto label_bound = [](const std::vector<AFrieze>& fs) {
    BigInt m = 0;
    for (const auto& f : fs)
      for (const auto& v : f.labels()) m = std::max(m, v.norm());
    return m;
  };
  auto folded_bound = [&](FoldedType t, int r) {
    BigInt m = 0;
    for (const auto& g : enumerate_folded(t, r, o.jobs))
      for (const auto& orb : g.orbits) m = std::max(m, orb.value.norm());
    return m;
  };
  struct Valued {
    const char* type;
    int rank;
    std::size_t structural;
    BigInt bound;
  };
  std::vector<Valued> valued;
  for (int k = 1; k <= (o.quick ? 2 : 3); ++k) {
    const auto s = enumerate_nonzero_a(k + 3, o.jobs);
    valued.push_back({"A", k, s.size(), label_bound(s)});
  }
  for (auto [t, name] : {std::pair{FoldedType::B, "B"}, std::pair{FoldedType::C, "C"}})
    valued.push_back({name, 2, enumerate_folded(t, 2, o.jobs).size(), folded_bound(t, 2)});
  valued.push_back({"G2", 2, enumerate_folded(FoldedType::G2, 2, o.jobs).size(), folded_bound(FoldedType::G2, 2)});
  for (const auto& v : valued) {
    const std::string name = std::string(v.type) + (std::string(v.type) == "G2" ? "" : std::to_string(v.rank));
    const auto got = enumerate_by_seeds(v.type, v.rank, v.bound, Ring::Z, o.jobs).size();
    out.push_back({name + " exchange-matrix seeds", got == v.structural,
                   "bound " + str(v.bound) + ", structural " + std::to_string(v.structural) + ", oracle " + std::to_string(got)});
  }
  out.push_back(count_check("A1 over Z[i]", 12, enumerate_by_seeds("A", 1, 2, Ring::Zi, o.jobs).size()));
  return out;
}

std::vector<CheckResult> involutions_a(int n, unsigned jobs) {
  const auto all = enumerate_nonzero_a(n, jobs);
  const std::set<AFrieze> set(all.begin(), all.end());
  bool ok = true, fixed_free = true, normal = true;
  for (const auto& f : all) {
    ok &= ptolemy_check(f).empty();
    if (n % 2 == 0) {
      const AFrieze s = sigma(f);
      ok &= sigma(s) == f && ptolemy_check(s).empty() && set.count(s) == 1;
      fixed_free &= s != f;
    }
    const auto norm = normalize_a(f);
    normal &= norm.positive.is_positive() && apply_tag(norm.positive, norm.tag) == f;
  }
  const std::string tag = "A" + std::to_string(n - 3);
  std::vector<CheckResult> out{{tag + " sigma is an involution on friezes", ok, std::to_string(all.size()) + " friezes"},
                               {tag + " normalize round trip", normal, ""}};
  if (n % 2 == 0) out.push_back({tag + " sigma has no fixed points", fixed_free, ""});
  return out;
}

std::vector<CheckResult> involutions_d(int n, unsigned jobs) {
  const auto all = enumerate_nonzero_d(n, jobs);
  const std::set<DFrieze> set(all.begin(), all.end());
  bool s1 = true, s2 = true, fixed_free = true, normal = true;
  for (const auto& f : all) {
    const DFrieze g = sigma1(f);
    s1 &= sigma1(g) == f && exchange_check_d(g).empty() && set.count(g) == 1;
    fixed_free &= g != f;
    if (n % 2 == 0) {
      const DFrieze h = sigma2(f, 0);
      s2 &= sigma2(h, 0) == f && exchange_check_d(h).empty() && set.count(h) == 1;
    }
    const auto norm = normalize_d(f);
    normal &= norm.positive.is_positive() && apply_tag(norm.positive, norm.tag) == f;
  }
  const std::string tag = "D" + std::to_string(n);
  std::vector<CheckResult> out{{tag + " sigma1 is an involution on friezes", s1, std::to_string(all.size()) + " friezes"},
                               {tag + " sigma1 has no fixed points", fixed_free, ""},
                               {tag + " normalize round trip", normal, ""}};
  if (n % 2 == 0) out.push_back({tag + " sigma2 is an involution on friezes", s2, ""});
  return out;
}

std::vector<CheckResult> involutions(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
  if (!o.type.empty()) {
    if (o.type == "A") append(involutions_a(o.rank + 3, o.jobs));
    else if (o.type == "D") append(involutions_d(o.rank, o.jobs));
    else throw std::invalid_argument("involutions are defined for types A and D");
    return out;
  }
  for (int n = 4; n <= (o.max_n ? o.max_n : (o.quick ? 8 : 9)); ++n) append(involutions_a(n, o.jobs));
  for (int n = 2; n <= (o.quick ? 4 : 5); ++n) append(involutions_d(n, o.jobs));
  return out;
}

std::vector<CheckResult> admissible(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  for (int n = 3; n <= (o.max_n ? o.max_n : (o.quick ? 8 : 9)); ++n) {
    bool ok = true;
    std::size_t cases = 0;
    for (const auto& t : enumerate_triangulations(n))
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        BoundaryState b(n);
        int product = 1;
        for (int k = 0; k < n; ++k) product *= b[k] = (mask >> k & 1) ? -1 : 1;
        const auto ext = extend_boundary(t, b);
        const std::size_t expected = n % 2 == 1 ? 1 : (product == 1 ? 2 : 0);
        ok &= ext.size() == expected && ext == extend_boundary_brute_force(t, b);
        for (const auto& l : ext) ok &= is_admissible(l);
        ++cases;
      }
    out.push_back({"extensions of boundary states, n = " + std::to_string(n), ok, std::to_string(cases) + " cases"});
  }
  return out;
}

std::vector<CheckResult> folding(const SuiteOptions& o) {
  std::vector<CheckResult> out;
  out.push_back(count_check("half-turn invariant A3", folded_count_formula(FoldedType::C, 2),
                            invariant_friezes(enumerate_nonzero_a(6, o.jobs), rotation_action(2)).size()));
  out.push_back(count_check("half-turn invariant A5", folded_count_formula(FoldedType::C, 3),
                            invariant_friezes(enumerate_nonzero_a(8, o.jobs), rotation_action(3)).size()));
  out.push_back(count_check("tag-swap invariant D3", folded_count_formula(FoldedType::B, 2),
                            invariant_friezes(enumerate_nonzero_d(3, o.jobs), tag_swap_action(3)).size()));
  out.push_back(count_check("tag-swap invariant D4", folded_count_formula(FoldedType::B, 3),
                            invariant_friezes(enumerate_nonzero_d(4, o.jobs), tag_swap_action(4)).size()));
  const auto search = search_triality();
  out.push_back({"triality is unique", search.frieze_preserving.size() == 1 && search.candidates.size() == 1,
                 std::to_string(search.candidates.size()) + " candidates, " + std::to_string(search.frieze_preserving.size()) + " preserve friezes"});
  const auto g2 = invariant_friezes(enumerate_nonzero_d(4, o.jobs), triality_action());
  const bool positive = std::all_of(g2.begin(), g2.end(), [](const DFrieze& f) { return f.is_positive(); });
  out.push_back({"triality invariant D4", g2.size() == 9 && positive, std::to_string(g2.size()) + " friezes, all positive: " + (positive ? "yes" : "no")});
  out.push_back({"B2 and C2 agree", enumerate_folded(FoldedType::B, 2).size() == enumerate_folded(FoldedType::C, 2).size(), ""});
  return out;
}

std::vector<CheckResult> determinism(const SuiteOptions& o) {
  auto dump_a = [](const std::vector<AFrieze>& fs) {
    std::string s;
    for (const auto& f : fs) s += to_json(f).dump();
    return s;
  };
  auto dump_d = [](const std::vector<DFrieze>& fs) {
    std::string s;
    for (const auto& f : fs) s += to_json(f).dump();
    return s;
  };
  const int n_a = o.quick ? 8 : 9, n_d = 4;
  const std::string a1 = dump_a(enumerate_nonzero_a(n_a, 1)), a2 = dump_a(enumerate_nonzero_a(n_a, 1)), a4 = dump_a(enumerate_nonzero_a(n_a, 4));
  const std::string d1 = dump_d(enumerate_nonzero_d(n_d, 1)), d4 = dump_d(enumerate_nonzero_d(n_d, 4));
  return {{"A" + std::to_string(n_a - 3) + " output identical across runs and jobs", a1 == a2 && a1 == a4, std::to_string(a1.size()) + " bytes"},
          {"D4 output identical across jobs", d1 == d4, std::to_string(d1.size()) + " bytes"}};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"counts", "oracle", "involutions", "admissible", "folding", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& o) {
  if (suite == "counts") return counts(o);
  if (suite == "oracle") return oracle(o);
  if (suite == "involutions") return involutions(o);
  if (suite == "admissible") return admissible(o);
  if (suite == "folding") return folding(o);
  if (suite == "all") {
    std::vector<CheckResult> out;
    SuiteOptions base = o;
    base.max_n = 0;
    base.type.clear();
    for (const char* s : {"counts", "oracle", "admissible", "folding", "involutions"}) {
      auto part = run_suite(s, base);
      for (auto& c : part) c.name = std::string(s) + ": " + c.name;
      out.insert(out.end(), part.begin(), part.end());
    }
    for (auto& c : determinism(o)) out.push_back({"determinism: " + c.name, c.pass, c.detail});
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

Json report_json(const std::string& suite, const std::vector<CheckResult>& checks) {
  Json j;
  j["suite"] = suite;
  bool pass = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    arr.push_back(e);
    pass &= c.pass;
  }
  j["checks"] = arr;
  j["pass"] = pass;
  return j;
}

}  // namespace frieze::cli
