// Independent enumerators used to cross-check the structural ones: bounded
// search over fan seeds, and friezes as integral evaluations of a cluster
// algebra given by an exchange matrix, explored by seed mutation.

#pragma once

#include "frieze/frieze_a.hpp"
#include "frieze/frieze_d.hpp"
#include "frieze/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frieze {

// Friezes of the n-gon whose fan arcs (0, 2) .. (0, n-2) have norm <= bound.
std::vector<AFrieze> bruteforce_a(int n, const BigInt& bound, Ring ring = Ring::Z, unsigned jobs = 1);
// Friezes of the punctured n-gon whose plain spokes have norm <= bound.
std::vector<DFrieze> bruteforce_d(int n, const BigInt& bound, unsigned jobs = 1);

// Largest norm on the fan arcs (0, j), resp. on the plain spokes.
BigInt max_fan_norm(const std::vector<AFrieze>& friezes);
BigInt max_spoke_norm(const std::vector<DFrieze>& friezes);

using Matrix = std::vector<std::vector<int>>;

struct CatalogEntry {
  std::string type;  // "A", "B", "C", "D", "G2"
  int rank;
  Matrix cartan;
  Matrix exchange;   // bipartite orientation of the Cartan matrix
};

// A1..A4, B2, B3, C2, C3, D4, G2. Throws std::invalid_argument otherwise.
const CatalogEntry& catalog_entry(std::string_view type, int rank);
const std::vector<CatalogEntry>& catalog();

// b'_ij = -b_ij if k in {i, j}, else b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.
Matrix mutate(const Matrix& b, int k);

// Exchange graph of the cluster algebra of b. Cluster variables are told
// apart by evaluating them at a generic rational point; ids follow the
// order of those values.
struct ExchangeGraph {
  struct Cluster {
    std::vector<int> vars;  // position k holds the variable of direction k
    Matrix b;
    std::vector<int> next;  // cluster reached by mutating direction k
  };
  int rank = 0;
  int variable_count = 0;
  std::vector<Cluster> clusters;  // clusters[0] is the initial one
};

class ClosureError : public std::runtime_error {
 public:
  enum class Kind { NonIntegral, ZeroValue, NonFiniteType };
  ClosureError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Throws ClosureError(NonFiniteType) past max_clusters.
ExchangeGraph exchange_graph(const Matrix& b, std::size_t max_clusters = 20000);

struct ExchangeSeed {
  Matrix b;
  std::vector<RingElement> values;
};

// One value per cluster variable, indexed by the exchange graph's ids.
struct ClosureFingerprint {
  std::vector<RingElement> values;
  friend auto operator<=>(const ClosureFingerprint&, const ClosureFingerprint&) = default;
};

// Mutates in every direction from the seed until all cluster variables are
// valued. Throws ClosureError when a value is not in the ring or is zero.
ClosureFingerprint mutation_closure(const ExchangeSeed& s);
// Same on a prebuilt graph, starting at cluster `start` with values in
// that cluster's variable order.
ClosureFingerprint mutation_closure(const ExchangeGraph& g, int start, const std::vector<RingElement>& values);

// Distinct friezes having some cluster whose values all have norm <= bound.
std::vector<ClosureFingerprint> enumerate_by_seeds(std::string_view type, int rank, const BigInt& bound,
                                                   Ring ring = Ring::Z, unsigned jobs = 1);

BigInt max_norm(const std::vector<ClosureFingerprint>& fps);

template <class F>
struct DiffReport {
  std::vector<F> missing;  // structural only
  std::vector<F> extra;    // oracle only
  bool pass() const { return missing.empty() && extra.empty(); }
  // Structural friezes beyond the oracle's reach suggest a bound too small.
  bool bound_suspect() const { return !missing.empty(); }
};

template <class F>
DiffReport<F> diff_sets(std::vector<F> structural, std::vector<F> oracle) {
  std::sort(structural.begin(), structural.end());
  structural.erase(std::unique(structural.begin(), structural.end()), structural.end());
  std::sort(oracle.begin(), oracle.end());
  oracle.erase(std::unique(oracle.begin(), oracle.end()), oracle.end());
  DiffReport<F> r;
  std::set_difference(structural.begin(), structural.end(), oracle.begin(), oracle.end(), std::back_inserter(r.missing));
  std::set_difference(oracle.begin(), oracle.end(), structural.begin(), structural.end(), std::back_inserter(r.extra));
  return r;
}

}  // namespace frieze
