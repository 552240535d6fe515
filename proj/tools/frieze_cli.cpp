#include "suites.hpp"

#include "frieze/folding.hpp"
#include "frieze/json_io.hpp"
#include "frieze/oracle.hpp"
#include "frieze/parallel.hpp"
#include "frieze/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace frieze;
using namespace frieze::cli;

namespace {

// Bad input past argument parsing; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

struct Common {
  std::string type;
  int rank = 0;
  std::string ring = "Z";
  std::string bound;
  std::string output;
  std::string format = "json";
  unsigned jobs = default_jobs();
};

void add_jobs(CLI::App* sub, Common& c) {
  sub->add_option("--jobs,-j", c.jobs, "Worker threads (default: FRIEZE_JOBS or 1)")->check(CLI::PositiveNumber);
}

// The (punctured) polygon size behind a type and rank.
int model_size(const std::string& type, int rank) {
  if (type == "A") return rank + 3;
  if (type == "D") return rank;
  if (type == "C") return 2 * rank + 2;
  if (type == "B") return rank + 1;
  if (type == "G2") return 4;
  throw UsageError("unknown type '" + type + "'");
}

void require_rank(const std::string& type, int rank) {
  const int min = type == "A" ? 1 : 2;
  if (type == "G2" && rank != 2) throw UsageError("G2 has rank 2");
  if (rank < min) throw UsageError("rank too small for type " + type);
}

BigInt parse_bound(const std::string& s) {
  try {
    const BigInt b(s);
    if (b < 1) throw UsageError("bound must be at least 1");
    return b;
  } catch (const std::runtime_error&) {
    throw UsageError("bad bound '" + s + "'");
  }
}

Json friezes_json(const std::vector<AFrieze>& fs) {
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back(to_json(f));
  return arr;
}

Json friezes_json(const std::vector<DFrieze>& fs) {
  Json arr = Json::array();
  for (const auto& f : fs) arr.push_back(to_json(f));
  return arr;
}

int cmd_triangulations(int n, bool punctured, const Common& c) {
  if (punctured ? n < 2 : n < 3) throw UsageError("polygon too small");
  if (c.format == "csv") {
    std::string out = "index,arcs\n";
    auto row = [&](std::size_t i, const std::vector<std::string>& names) {
      std::string s;
      for (const auto& x : names) s += (s.empty() ? "" : " ") + x;
      out += std::to_string(i) + "," + csv_escape(s) + "\n";
    };
    if (punctured) {
      const auto ts = enumerate_tagged_triangulations(n);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        std::vector<std::string> names;
        for (int a : ts[i].arcs()) names.push_back(arc_name(a, n));
        row(i, names);
      }
    } else {
      const auto ts = enumerate_triangulations(n);
      for (std::size_t i = 0; i < ts.size(); ++i) {
        std::vector<std::string> names;
        for (Arc a : ts[i].internal()) names.push_back("(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")");
        row(i, names);
      }
    }
    emit(out, c.output);
    return 0;
  }
  Json j;
  j["n"] = n;
  j["punctured"] = punctured;
  Json arr = Json::array();
  if (punctured)
    for (const auto& t : enumerate_tagged_triangulations(n)) arr.push_back(to_json(t));
  else
    for (const auto& t : enumerate_triangulations(n)) arr.push_back(to_json(t));
  j["count"] = arr.size();
  j["triangulations"] = arr;
  emit(dump(j), c.output);
  return 0;
}

int cmd_enumerate(const Common& c, bool positive_only) {
  require_rank(c.type, c.rank);
  const Ring ring = parse_ring(c.ring);
  Json j;
  j["type"] = c.type;
  j["rank"] = c.rank;
  j["ring"] = c.ring;
  if (ring != Ring::Z) {
    if (c.type != "A") throw UsageError("rings other than Z are supported for type A only");
    if (c.bound.empty()) throw UsageError("--bound is required over " + c.ring);
    const BigInt bound = parse_bound(c.bound);
    auto fs = bruteforce_a(c.rank + 3, bound, ring, c.jobs);
    j["bound"] = bound.str();
    j["complete"] = false;
    j["disclaimer"] = "bounded search: every frieze whose fan arcs at vertex 0 have norm at most the bound; friezes outside it are not listed";
    j["count"] = fs.size();
    j["friezes"] = friezes_json(fs);
  } else if (c.type == "A" || c.type == "D") {
    const int n = model_size(c.type, c.rank);
    if (c.type == "A") {
      auto fs = enumerate_nonzero_a(n, c.jobs);
      if (positive_only) std::erase_if(fs, [](const AFrieze& f) { return !f.is_positive(); });
      j["count"] = fs.size();
      j["friezes"] = friezes_json(fs);
    } else {
      auto fs = positive_only ? enumerate_positive_d(n, c.jobs) : enumerate_nonzero_d(n, c.jobs);
      j["count"] = fs.size();
      j["friezes"] = friezes_json(fs);
    }
  } else {
    auto gs = enumerate_folded(parse_folded_type(c.type), c.rank, c.jobs);
    if (positive_only) std::erase_if(gs, [](const FoldedFrieze& g) {
      return std::any_of(g.orbits.begin(), g.orbits.end(), [](const FoldedOrbit& o) { return o.value.sign() <= 0; });
    });
    Json arr = Json::array();
    for (const auto& g : gs) arr.push_back(to_json(g));
    j["count"] = gs.size();
    j["friezes"] = arr;
  }
  emit(dump(j), c.output);
  return 0;
}

struct CountRow {
  std::string type;
  int rank;
  BigInt formula;
  std::size_t enumerated;
};

int cmd_count(const Common& c, int max_rank) {
  std::vector<std::pair<std::string, int>> wanted;
  const std::vector<std::string> types = c.type.empty() ? std::vector<std::string>{"A", "D", "C", "B", "G2"} : std::vector<std::string>{c.type};
  for (const auto& t : types) {
    if (t == "G2") {
      wanted.push_back({t, 2});
      continue;
    }
    if (c.rank > 0) {
      wanted.push_back({t, c.rank});
      continue;
    }
    const int lo = t == "A" ? 1 : 2;
    const int hi = max_rank > 0 ? max_rank : (t == "A" ? 6 : t == "D" ? 4 : 3);
    for (int r = lo; r <= hi; ++r) wanted.push_back({t, r});
  }
  std::vector<CountRow> rows;
  for (const auto& [t, r] : wanted) {
    require_rank(t, r);
    const int n = model_size(t, r);
    if (t == "A") rows.push_back({t, r, a_count_formula(n), enumerate_nonzero_a(n, c.jobs).size()});
    else if (t == "D") rows.push_back({t, r, d_count_formula(n), enumerate_nonzero_d(n, c.jobs).size()});
    else {
      const FoldedType ft = parse_folded_type(t);
      rows.push_back({t, r, folded_count_formula(ft, r), enumerate_folded(ft, r, c.jobs).size()});
    }
  }
  bool all = true;
  for (const auto& r : rows) all &= r.formula == r.enumerated;
  if (c.format == "csv") {
    std::string out = "type,rank,formula,enumerated,match\n";
    for (const auto& r : rows)
      out += r.type + "," + std::to_string(r.rank) + "," + r.formula.str() + "," + std::to_string(r.enumerated) + "," +
             (r.formula == r.enumerated ? "PASS" : "FAIL") + "\n";
    emit(out, c.output);
  } else {
    Json j;
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json e;
      e["type"] = r.type;
      e["rank"] = r.rank;
      e["formula"] = r.formula.str();
      e["enumerated"] = r.enumerated;
      e["match"] = r.formula == r.enumerated;
      arr.push_back(e);
    }
    j["rows"] = arr;
    j["pass"] = all;
    emit(dump(j), c.output);
  }
  return all ? 0 : 1;
}

int cmd_verify(const std::string& suite, SuiteOptions o, const Common& c) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UsageError("unknown suite '" + suite + "'");
  o.type = c.type;
  o.rank = c.rank;
  o.jobs = c.jobs;
  if (!o.type.empty() && o.rank < 1) throw UsageError("--type needs --rank");
  std::vector<CheckResult> checks;
  try {
    checks = run_suite(suite, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Json j = report_json(suite, checks);
  emit(dump(j), c.output);
  for (const auto& ch : checks) std::cerr << (ch.pass ? "PASS " : "FAIL ") << ch.name << (ch.detail.empty() ? "" : " (" + ch.detail + ")") << "\n";
  return j["pass"].get<bool>() ? 0 : 1;
}

template <class F>
Json diff_json(const std::vector<F>& structural, const std::vector<F>& oracle, const BigInt& bound) {
  const auto r = diff_sets(structural, oracle);
  Json j;
  j["pass"] = r.pass();
  Json missing = Json::array(), extra = Json::array();
  for (const auto& f : r.missing) missing.push_back(to_json(f));
  for (const auto& f : r.extra) extra.push_back(to_json(f));
  j["missing"] = missing;
  j["extra"] = extra;
  j["bound"] = bound.str();
  j["bound_suspect"] = r.bound_suspect();
  j["note"] = "agreement is relative to the bound: friezes whose seed values exceed it are outside the search";
  return j;
}

// Friezes listed in an `enumerate` output, or a bare array of friezes.
template <class F>
std::vector<F> read_friezes(const std::string& path) {
  const Json j = read_json(path);
  const Json& arr = j.is_array() ? j : j.at("friezes");
  std::vector<F> out;
  try {
    for (const auto& e : arr) out.push_back(std::get<F>(frieze_from_json(e)));
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad frieze in ") + path + ": " + e.what());
  }
  return out;
}

int cmd_oracle(const Common& c, const std::string& diff_path) {
  require_rank(c.type, c.rank);
  const Ring ring = parse_ring(c.ring);
  Json j;
  if ((c.type == "A" || c.type == "D") && ring == Ring::Z) {
    const int n = model_size(c.type, c.rank);
    if (c.type == "A") {
      auto s = diff_path.empty() ? enumerate_nonzero_a(n, c.jobs) : read_friezes<AFrieze>(diff_path);
      const BigInt bound = c.bound.empty() ? max_fan_norm(s) : parse_bound(c.bound);
      j = diff_json(s, bruteforce_a(n, bound, ring, c.jobs), bound);
    } else {
      auto s = diff_path.empty() ? enumerate_nonzero_d(n, c.jobs) : read_friezes<DFrieze>(diff_path);
      const BigInt bound = c.bound.empty() ? max_spoke_norm(s) : parse_bound(c.bound);
      j = diff_json(s, bruteforce_d(n, bound, c.jobs), bound);
    }
  } else {
    // Valued types and other rings: compare counts with the exchange-matrix closure.
    if (!diff_path.empty()) throw UsageError("--diff is available for types A and D over Z");
    if (ring != Ring::Z && c.bound.empty()) throw UsageError("--bound is required over " + c.ring);
    std::size_t structural = 0;
    BigInt derived = 0;
    bool have_structural = ring == Ring::Z;
    if (ring == Ring::Z) {
      const auto gs = enumerate_folded(parse_folded_type(c.type), c.rank, c.jobs);
      structural = gs.size();
      for (const auto& g : gs)
        for (const auto& o : g.orbits) derived = std::max(derived, o.value.norm());
    }
    const BigInt bound = c.bound.empty() ? derived : parse_bound(c.bound);
    std::vector<ClosureFingerprint> found;
    try {
      found = enumerate_by_seeds(c.type, c.rank, bound, ring, c.jobs);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    j["type"] = c.type;
    j["rank"] = c.rank;
    j["ring"] = c.ring;
    j["bound"] = bound.str();
    j["oracle_count"] = found.size();
    if (have_structural) j["structural_count"] = structural;
    j["pass"] = !have_structural || found.size() == structural;
    Json fps = Json::array();
    for (const auto& fp : found) {
      Json vals = Json::array();
      for (const auto& v : fp.values) vals.push_back(to_json(v));
      fps.push_back(vals);
    }
    j["cluster_values"] = fps;
    j["note"] = "one entry per frieze: values of all cluster variables, ordered by the exchange graph";
  }
  emit(dump(j), c.output);
  return j["pass"].get<bool>() ? 0 : 1;
}

int cmd_orbit(const std::string& input, const Common& c) {
  const Json in = read_json(input);
  AnyFrieze any;
  try {
    any = frieze_from_json(in);
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed frieze: ") + e.what());
  }
  Json j;
  Json orbit = Json::array();
  if (const auto* f = std::get_if<AFrieze>(&any)) {
    if (!ptolemy_check(*f).empty()) throw UsageError("input is not a frieze");
    NormalizedA norm;
    try {
      norm = normalize_a(*f);
    } catch (const std::exception& e) {
      throw UsageError(std::string("cannot normalize: ") + e.what());
    }
    j["type"] = "A";
    j["n"] = f->n();
    j["tag"] = norm.tag == SignTag::Identity ? "id" : "sigma";
    j["positive"] = to_json(norm.positive);
    auto member = [&](const char* name, const AFrieze& g) {
      Json e;
      e["tag"] = name;
      e["frieze"] = to_json(g);
      orbit.push_back(e);
    };
    member("id", norm.positive);
    if (f->n() % 2 == 0) member("sigma", sigma(norm.positive));
  } else {
    const DFrieze& g = std::get<DFrieze>(any);
    if (!exchange_check_d(g).empty()) throw UsageError("input is not a frieze");
    NormalizedD norm;
    SignConfiguration sc;
    try {
      norm = normalize_d(g);
      sc = classify_sign_configuration(g);
    } catch (const std::exception& e) {
      throw UsageError(std::string("cannot normalize: ") + e.what());
    }
    j["type"] = "D";
    j["n"] = g.n();
    j["category"] = sc.category;
    j["tag"] = std::string(tag_name(norm.tag));
    j["positive"] = to_json(norm.positive);
    std::vector<DTag> tags{DTag::Identity, DTag::Sigma1};
    if (g.n() % 2 == 0) tags.insert(tags.end(), {DTag::Sigma2, DTag::Sigma1Sigma2});
    for (DTag t : tags) {
      Json e;
      e["tag"] = std::string(tag_name(t));
      e["frieze"] = to_json(apply_tag(norm.positive, t));
      orbit.push_back(e);
    }
  }
  j["orbit_size"] = orbit.size();
  j["orbit"] = orbit;
  emit(dump(j), c.output);
  return 0;
}

int cmd_render(const std::string& input, const Common& c) {
  const Json in = read_json(input);
  const bool svg = c.format == "svg";
  if (c.format != "svg" && c.format != "text") throw UsageError("render formats are text and svg");
  try {
    if (in.contains("triangulation") && in.contains("signs")) {
      if (!svg) throw UsageError("sign labelings render as svg only");
      emit(labeling_svg(sign_labeling_from_json(in)), c.output);
      return 0;
    }
    const AnyFrieze any = frieze_from_json(in);
    if (auto* f = std::get_if<AFrieze>(&any)) {
      emit(svg ? frieze_svg(*f) : band_text(make_band(*f)), c.output);
      return 0;
    }
    if (!svg) throw UsageError("type D friezes have no planar band; use --format svg");
    emit(frieze_svg(std::get<DFrieze>(any)), c.output);
    return 0;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed input: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral friezes: enumeration, counting, verification and rendering"};
  app.require_subcommand(1);
  Common c;

  auto* tri = app.add_subcommand("triangulations", "List triangulations of a polygon or punctured polygon");
  int tri_n = 0;
  bool punctured = false;
  tri->add_option("--n", tri_n, "Number of vertices")->required();
  tri->add_flag("--punctured", punctured, "Tagged triangulations of the punctured polygon");
  tri->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  tri->add_option("--output,-o", c.output);

  const std::vector<std::string> types{"A", "B", "C", "D", "G2"};
  auto* en = app.add_subcommand("enumerate", "Emit every non-zero integral frieze of a type as JSON");
  bool positive_only = false;
  en->add_option("--type", c.type)->required()->check(CLI::IsMember(types));
  en->add_option("--rank", c.rank, "Rank (defaults to 2 for G2)");
  en->add_option("--ring", c.ring)->check(CLI::IsMember({"Z", "Zi", "Zw"}));
  en->add_option("--bound", c.bound, "Norm bound for searches over Z[i] and Z[w]");
  en->add_flag("--positive", positive_only, "Positive friezes only");
  en->add_option("--output,-o", c.output);
  add_jobs(en, c);

  auto* cnt = app.add_subcommand("count", "Compare enumerated counts with closed formulas");
  int max_rank = 0;
  cnt->add_option("--type", c.type)->check(CLI::IsMember(types));
  cnt->add_option("--rank", c.rank);
  cnt->add_option("--max-rank", max_rank);
  cnt->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv"}));
  cnt->add_option("--output,-o", c.output);
  add_jobs(cnt, c);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  SuiteOptions so;
  ver->add_option("--suite", suite, "counts, oracle, involutions, admissible, folding or all");
  ver->add_flag("--quick", so.quick, "Smaller instances");
  ver->add_option("--max-n", so.max_n, "Largest polygon for the A and admissible checks");
  ver->add_option("--type", c.type)->check(CLI::IsMember({"A", "D"}));
  ver->add_option("--rank", c.rank);
  ver->add_option("--output,-o", c.output);
  add_jobs(ver, c);

  auto* orc = app.add_subcommand("oracle", "Cross-check a structural enumeration against brute force");
  std::string diff_path;
  orc->add_option("--type", c.type)->required()->check(CLI::IsMember(types));
  orc->add_option("--rank", c.rank);
  orc->add_option("--ring", c.ring)->check(CLI::IsMember({"Z", "Zi", "Zw"}));
  orc->add_option("--bound", c.bound, "Norm bound (default: the largest seed norm in the structural set)");
  orc->add_option("--diff", diff_path, "Structural friezes as JSON (default: enumerate them)");
  orc->add_option("--output,-o", c.output);
  add_jobs(orc, c);

  auto* orb = app.add_subcommand("orbit", "Classify a frieze and list its sign orbit");
  std::string orbit_input;
  orb->add_option("--input,-i", orbit_input, "Frieze JSON file, - for stdin")->required();
  orb->add_option("--output,-o", c.output);

  auto* ren = app.add_subcommand("render", "Draw a frieze band (text) or a labeled triangulation (svg)");
  std::string render_input, render_format = "text";
  ren->add_option("--input,-i", render_input, "Frieze or sign labeling JSON, - for stdin")->required();
  ren->add_option("--format", render_format, "text or svg");
  ren->add_option("--output,-o", c.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (c.type == "G2" && c.rank == 0) c.rank = 2;
  try {
    if (*tri) return cmd_triangulations(tri_n, punctured, c);
    if (*en) return cmd_enumerate(c, positive_only);
    if (*cnt) return cmd_count(c, max_rank);
    if (*ver) return cmd_verify(suite, so, c);
    if (*orc) return cmd_oracle(c, diff_path);
    if (*orb) return cmd_orbit(orbit_input, c);
    if (*ren) {
      c.format = render_format;
      return cmd_render(render_input, c);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
