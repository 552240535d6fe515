#include "frieze/oracle.hpp"

#include "frieze/parallel.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace frieze {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Runs body on every tuple of `width` entries drawn from `choices`, split by
// tuple index across jobs. Results are merged into a sorted set.
template <class F, class Body>
std::vector<F> tuple_search(std::size_t choices, int width, unsigned jobs, Body body) {
  std::size_t total = 1;
  for (int i = 0; i < width; ++i) total *= choices;
  std::mutex mu;
  std::set<F> found;
  const std::size_t chunk = choices;
  const std::size_t chunks = (total + chunk - 1) / chunk;
  parallel_for(chunks, jobs, [&](std::size_t c) {
    std::vector<F> local;
    std::vector<std::size_t> digits(width);
    for (std::size_t idx = c * chunk; idx < std::min(total, (c + 1) * chunk); ++idx) {
      std::size_t r = idx;
      for (int i = 0; i < width; ++i) digits[i] = r % choices, r /= choices;
      if (auto f = body(digits)) local.push_back(std::move(*f));
    }
    std::lock_guard lock(mu);
    found.insert(local.begin(), local.end());
  });
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<AFrieze> bruteforce_a(int n, const BigInt& bound, Ring ring, unsigned jobs) {
  if (n < 3) throw std::invalid_argument("bruteforce_a needs n >= 3");
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  const Triangulation t = fan_triangulation(n);
  const auto values = elements_up_to_norm(ring, bound);
  const int width = static_cast<int>(t.internal().size());
  return tuple_search<AFrieze>(values.size(), width, jobs, [&](const std::vector<std::size_t>& d) -> std::optional<AFrieze> {
    ArcSeed seed;
    for (int k = 0; k < n; ++k) seed.emplace(boundary_arc(k, n), RingElement::one(ring));
    for (int i = 0; i < width; ++i) seed.emplace(t.internal()[i], values[d[i]]);
    try {
      return propagate(t, seed);
    } catch (const PropagationError&) {
      return std::nullopt;
    }
  });
}

std::vector<DFrieze> bruteforce_d(int n, const BigInt& bound, unsigned jobs) {
  if (n < 2) throw std::invalid_argument("bruteforce_d needs n >= 2");
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  std::vector<int> spokes;
  for (int v = 0; v < n; ++v) spokes.push_back(spoke_id(v, n));
  const TaggedTriangulation t(n, spokes);
  const auto values = elements_up_to_norm(Ring::Z, bound);
  return tuple_search<DFrieze>(values.size(), n, jobs, [&](const std::vector<std::size_t>& d) -> std::optional<DFrieze> {
    DSeed seed;
    for (int k = 0; k < n; ++k) seed.emplace(boundary_id(k, n), RingElement::one(Ring::Z));
    for (int v = 0; v < n; ++v) seed.emplace(spokes[v], values[d[v]]);
    try {
      return propagate_d(t, seed);
    } catch (const PropagationError&) {
      return std::nullopt;
    }
  });
}

BigInt max_fan_norm(const std::vector<AFrieze>& friezes) {
  BigInt m = 0;
  for (const auto& f : friezes)
    for (int k = 2; k <= f.n() - 2; ++k) m = std::max(m, f.label(make_arc(0, k)).norm());
  return m;
}

BigInt max_spoke_norm(const std::vector<DFrieze>& friezes) {
  BigInt m = 0;
  for (const auto& f : friezes)
    for (int v = 0; v < f.n(); ++v) m = std::max(m, f.label(spoke_id(v, f.n())).norm());
  return m;
}

namespace {

CatalogEntry make_entry(std::string type, Matrix cartan) {
  const int r = static_cast<int>(cartan.size());
  // Two-colour the Dynkin diagram; sources of the bipartite orientation get +.
  std::vector<int> colour(r, -1);
  for (int s = 0; s < r; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      const int i = q.front();
      q.pop_front();
      for (int j = 0; j < r; ++j)
        if (j != i && cartan[i][j] != 0 && colour[j] < 0) colour[j] = 1 - colour[i], q.push_back(j);
    }
  }
  Matrix b(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j) b[i][j] = (colour[i] == 0 ? -1 : 1) * cartan[i][j];
  return {std::move(type), r, std::move(cartan), std::move(b)};
}

Matrix chain_cartan(int r) {
  Matrix c(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) {
    c[i][i] = 2;
    if (i + 1 < r) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (int r = 1; r <= 4; ++r) out.push_back(make_entry("A", chain_cartan(r)));
  // B_r: the last node is short, a_{r-1, r-2} = -2. C_r is the transpose.
  for (int r = 2; r <= 3; ++r) {
    Matrix c = chain_cartan(r);
    c[r - 1][r - 2] = -2;
    out.push_back(make_entry("B", c));
    std::swap(c[r - 1][r - 2], c[r - 2][r - 1]);
    out.push_back(make_entry("C", c));
  }
  out.push_back(make_entry("D", {{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
  out.push_back(make_entry("G2", {{2, -1}, {-3, 2}}));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build_catalog();
  return c;
}

const CatalogEntry& catalog_entry(std::string_view type, int rank) {
  for (const auto& e : catalog())
    if (e.type == type && e.rank == rank) return e;
  throw std::invalid_argument("no exchange matrix for " + std::string(type) + std::to_string(rank));
}

Matrix mutate(const Matrix& b, int k) {
  const int r = static_cast<int>(b.size());
  Matrix m = b;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == k || j == k)
        m[i][j] = -b[i][j];
      else
        m[i][j] = b[i][j] + (std::abs(b[i][k]) * b[k][j] + b[i][k] * std::abs(b[k][j])) / 2;
    }
  return m;
}

namespace {

// The two monomials of the exchange in direction k, given a value per
// position.
template <class V>
std::pair<V, V> exchange_terms(const Matrix& b, int k, const std::vector<V>& x, V one) {
  V plus = one, minus = one;
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (int e = 0; e < b[i][k]; ++e) plus *= x[i];
    for (int e = 0; e < -b[i][k]; ++e) minus *= x[i];
  }
  return {plus, minus};
}

void check_square(const Matrix& b) {
  for (const auto& row : b)
    if (row.size() != b.size()) throw std::invalid_argument("exchange matrix must be square");
}

}  // namespace

ExchangeGraph exchange_graph(const Matrix& b, std::size_t max_clusters) {
  check_square(b);
  const int r = static_cast<int>(b.size());
  // Distinct large primes make accidental coincidences of cluster variables
  // implausible; small ones do collide ((1 + 3) / 2 = 2).
  std::vector<Rational> generic;
  for (int p = 10007; static_cast<int>(generic.size()) < r; ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d) prime &= p % d != 0;
    if (prime) generic.push_back(Rational(p));
  }

  std::map<Rational, int> var_of;
  std::vector<Rational> var_value;
  auto var_id = [&](const Rational& v) {
    auto [it, inserted] = var_of.emplace(v, static_cast<int>(var_value.size()));
    if (inserted) var_value.push_back(v);
    return it->second;
  };

  struct Node {
    std::vector<int> vars;
    Matrix b;
    std::vector<Rational> values;
    std::vector<int> next;
  };
  std::vector<Node> nodes;
  std::map<std::vector<int>, int> node_of;
  auto add = [&](Node n) {
    std::vector<int> key = n.vars;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = node_of.emplace(key, static_cast<int>(nodes.size()));
    if (inserted) {
      if (nodes.size() >= max_clusters)
        throw ClosureError(ClosureError::Kind::NonFiniteType, "exchange graph exceeds " + std::to_string(max_clusters) + " clusters");
      n.next.assign(r, -1);
      nodes.push_back(std::move(n));
    }
    return it->second;
  };

  Node start{{}, b, generic, {}};
  for (int i = 0; i < r; ++i) start.vars.push_back(var_id(generic[i]));
  add(std::move(start));
  for (std::size_t c = 0; c < nodes.size(); ++c)
    for (int k = 0; k < r; ++k) {
      const auto [plus, minus] = exchange_terms(nodes[c].b, k, nodes[c].values, Rational(1));
      Node m{nodes[c].vars, mutate(nodes[c].b, k), nodes[c].values, {}};
      m.values[k] = (plus + minus) / nodes[c].values[k];
      // Finite types keep generic values small; infinite ones blow up long
      // before the cluster cap is reached.
      if (msb(abs(numerator(m.values[k]))) + msb(denominator(m.values[k])) > 20000)
        throw ClosureError(ClosureError::Kind::NonFiniteType, "cluster variables grow without bound");
      m.vars[k] = var_id(m.values[k]);
      const int target = add(std::move(m));
      nodes[c].next[k] = target;
    }

  // Renumber variables by generic value so ids do not depend on visiting order.
  std::vector<int> order(var_value.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return var_value[x] < var_value[y]; });
  std::vector<int> rank_of(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank_of[order[i]] = static_cast<int>(i);

  ExchangeGraph g;
  g.rank = r;
  g.variable_count = static_cast<int>(var_value.size());
  for (auto& n : nodes) {
    for (int& v : n.vars) v = rank_of[v];
    g.clusters.push_back({std::move(n.vars), std::move(n.b), std::move(n.next)});
  }
  return g;
}

ClosureFingerprint mutation_closure(const ExchangeGraph& g, int start, const std::vector<RingElement>& values) {
  if (static_cast<int>(values.size()) != g.rank) throw std::invalid_argument("value tuple does not match rank");
  if (values.empty()) return {};
  const Ring ring = values.front().ring();
  std::vector<std::optional<RingElement>> known(g.variable_count);
  for (int k = 0; k < g.rank; ++k) {
    if (values[k].is_zero()) throw ClosureError(ClosureError::Kind::ZeroValue, "zero initial value");
    known[g.clusters.at(start).vars[k]] = values[k];
  }
  std::vector<char> seen(g.clusters.size(), 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    const auto& c = g.clusters[queue.front()];
    queue.pop_front();
    std::vector<RingElement> x;
    for (int v : c.vars) x.push_back(*known[v]);
    for (int k = 0; k < g.rank; ++k) {
      const int target = c.next[k];
      const auto [plus, minus] = exchange_terms(c.b, k, x, RingElement::one(ring));
      const RingElement num = plus + minus;
      if (num.is_zero()) throw ClosureError(ClosureError::Kind::ZeroValue, "exchange gives zero");
      auto q = exact_div(num, x[k]);
      if (!q) throw ClosureError(ClosureError::Kind::NonIntegral, num.to_string() + " / " + x[k].to_string() + " leaves the ring");
      // The target keeps its own variable order; the new variable is the one
      // missing from c.
      for (int v : g.clusters[target].vars)
        if (std::find(c.vars.begin(), c.vars.end(), v) == c.vars.end() && !known[v]) known[v] = *q;
      if (!seen[target]) seen[target] = 1, queue.push_back(target);
    }
  }
  ClosureFingerprint fp;
  for (auto& v : known) fp.values.push_back(std::move(*v));
  return fp;
}

ClosureFingerprint mutation_closure(const ExchangeSeed& s) {
  return mutation_closure(exchange_graph(s.b), 0, s.values);
}

std::vector<ClosureFingerprint> enumerate_by_seeds(std::string_view type, int rank, const BigInt& bound, Ring ring, unsigned jobs) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  const auto& entry = catalog_entry(type, rank);
  const ExchangeGraph g = exchange_graph(entry.exchange);
  const auto values = elements_up_to_norm(ring, bound);
  std::set<ClosureFingerprint> found;
  for (int c = 0; c < static_cast<int>(g.clusters.size()); ++c) {
    auto part = tuple_search<ClosureFingerprint>(values.size(), rank, jobs, [&](const std::vector<std::size_t>& d) -> std::optional<ClosureFingerprint> {
      std::vector<RingElement> x;
      for (auto i : d) x.push_back(values[i]);
      try {
        return mutation_closure(g, c, x);
      } catch (const ClosureError&) {
        return std::nullopt;
      }
    });
    found.insert(part.begin(), part.end());
  }
  return {found.begin(), found.end()};
}

BigInt max_norm(const std::vector<ClosureFingerprint>& fps) {
  BigInt m = 0;
  for (const auto& f : fps)
    for (const auto& v : f.values) m = std::max(m, v.norm());
  return m;
}

}  // namespace frieze
