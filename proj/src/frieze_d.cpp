#include "frieze/frieze_d.hpp"

#include "frieze/parallel.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace frieze {

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

RingElement product(const DFrieze& f, const std::vector<int>& ids) {
  RingElement p = RingElement::one(f.ring());
  for (int id : ids) p *= f.label(id);
  return p;
}

bool holds(const DFrieze& f, const DRelation& r) {
  return f.label(r.exchanged[0]) * f.label(r.exchanged[1]) == product(f, r.terms[0]) + product(f, r.terms[1]);
}

}  // namespace

DFrieze::DFrieze(int n, Ring ring) : n_(n), ring_(ring), labels_(tagged_arc_count(n), RingElement::zero(ring)) {
  if (n < 2) throw std::invalid_argument("punctured polygon needs n >= 2");
}

bool DFrieze::has_unit_boundary() const {
  const auto one = RingElement::one(ring_);
  for (int i = 0; i < n_; ++i)
    if (labels_[i] != one) return false;
  return true;
}

bool DFrieze::is_positive() const {
  return std::all_of(labels_.begin(), labels_.end(), [](const RingElement& x) { return x.is_rational() && x.sign() > 0; });
}

std::vector<DViolation> exchange_check_d(const DFrieze& f) {
  std::vector<DViolation> out;
  for (int id = 0; id < tagged_arc_count(f.n()); ++id)
    if (f.label(id).is_zero()) out.push_back({std::nullopt, id});
  for (const auto& r : d_relations(f.n()).relations)
    if (!holds(f, r)) out.push_back({r, std::nullopt});
  return out;
}

DFrieze propagate_d(const TaggedTriangulation& t, const DSeed& seed, const PropagateOptions& opts) {
  const int n = t.n();
  if (seed.empty()) throw std::invalid_argument("empty seed");
  DFrieze f(n, seed.begin()->second.ring());
  std::vector<char> known(tagged_arc_count(n), 0);
  auto require_seed = [&](int id) {
    auto it = seed.find(id);
    if (it == seed.end()) throw std::invalid_argument("seed misses arc " + arc_name(id, n));
    if (it->second.is_zero()) throw PropagationError(PropagationError::Kind::ZeroLabel, "zero seed value");
    f.set_label(id, it->second);
    known[id] = 1;
  };
  for (int i = 0; i < n; ++i) require_seed(boundary_id(i, n));
  for (int a : t.arcs()) require_seed(a);

  const DRelationIndex& idx = d_relations(n);
  std::vector<std::size_t> order(idx.relations.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (opts.shuffle_seed != 0) {
    std::mt19937_64 rng(opts.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::deque<std::size_t> queue(order.begin(), order.end());
  std::size_t unknown = std::count(known.begin(), known.end(), 0);

  auto all_known = [&](const std::vector<int>& ids) {
    return std::all_of(ids.begin(), ids.end(), [&](int id) { return known[id] != 0; });
  };
  while (!queue.empty() && unknown > 0) {
    const DRelation& r = idx.relations[queue.front()];
    queue.pop_front();
    const bool k0 = known[r.exchanged[0]], k1 = known[r.exchanged[1]];
    if (k0 == k1 || !all_known(r.terms[0]) || !all_known(r.terms[1])) continue;
    const int target = k0 ? r.exchanged[1] : r.exchanged[0];
    const int other = k0 ? r.exchanged[0] : r.exchanged[1];
    const RingElement num = product(f, r.terms[0]) + product(f, r.terms[1]);
    auto q = exact_div(num, f.label(other));
    if (!q)
      throw PropagationError(PropagationError::Kind::NotIntegral,
                             arc_name(target, n) + " requires " + num.to_string() + "/" + f.label(other).to_string());
    if (q->is_zero()) throw PropagationError(PropagationError::Kind::ZeroLabel, arc_name(target, n) + " evaluates to 0");
    f.set_label(target, std::move(*q));
    known[target] = 1;
    --unknown;
    for (std::size_t j : idx.by_arc[target]) queue.push_back(j);
  }
  if (unknown > 0) throw std::logic_error("propagate_d: flip closure stalled");
  for (const auto& r : idx.relations)
    if (!holds(f, r)) throw PropagationError(PropagationError::Kind::Inconsistent, "two flip routes disagree");
  return f;
}

DFrieze sigma1(const DFrieze& f) {
  DFrieze g = f;
  for (int id = f.n(); id < 3 * f.n(); ++id) g.set_label(id, -f.label(id));
  return g;
}

DFrieze sigma2(const DFrieze& f, int anchor) {
  const int n = f.n();
  if (n % 2 != 0) throw std::domain_error("sigma2 needs n even");
  DFrieze g = f;
  for (int v = 0; v < n; ++v) {
    const bool odd = mod(v - anchor, n) % 2 == 1;
    const int negated = odd ? spoke_id(v, n) : tagged_spoke_id(v, n);
    g.set_label(negated, -f.label(negated));
  }
  for (int id = 3 * n; id < tagged_arc_count(n); ++id)
    if (tagged_arc(id, n).length % 2 == 0) g.set_label(id, -f.label(id));
  return g;
}

std::vector<DFrieze> enumerate_positive_d(int n, unsigned jobs) {
  const auto ts = enumerate_tagged_triangulations(n);
  std::vector<std::vector<DFrieze>> found(ts.size());
  parallel_for(ts.size(), jobs, [&](std::size_t i) {
    const auto& t = ts[i];
    const auto plain = t.plain_spokes();
    const auto tagged = t.tagged_spokes();
    if (plain.empty()) return;
    const bool self_folded = !tagged.empty();
    const long long m = static_cast<long long>(plain.size());
    for (long long d = 1; d <= m; ++d) {
      if (m % d != 0 || (self_folded && d != 1)) continue;
      DSeed seed;
      for (int b = 0; b < n; ++b) seed.emplace(boundary_id(b, n), RingElement::one(Ring::Z));
      for (int a : t.arcs()) {
        const bool plain_spoke = is_plain_spoke_id(a, n) && !self_folded;
        seed.emplace(a, RingElement::integer(Ring::Z, plain_spoke ? d : 1));
      }
      DFrieze f;
      try {
        f = propagate_d(t, seed);
      } catch (const PropagationError& e) {
        throw std::logic_error(std::string("canonical seed failed to propagate: ") + e.what());
      }
      if (!f.is_positive()) throw std::logic_error("canonical seed gave a non-positive frieze");
      found[i].push_back(std::move(f));
    }
  });
  std::vector<DFrieze> out;
  for (auto& v : found)
    for (auto& f : v) out.push_back(std::move(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<DFrieze> enumerate_nonzero_d(int n, unsigned jobs) {
  const auto positive = enumerate_positive_d(n, jobs);
  std::vector<DFrieze> out;
  for (const auto& f : positive) {
    out.push_back(f);
    out.push_back(sigma1(f));
    if (n % 2 == 0) {
      out.push_back(sigma2(f, 0));
      out.push_back(sigma1(sigma2(f, 0)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SpokeTriangulation find_spoke_triangulation(const DFrieze& f) {
  const int n = f.n();
  for (int i = 0; i < n; ++i)
    if (f.label(boundary_id(i, n)).norm() != 1) throw std::invalid_argument("boundary labels must be +-1");

  std::vector<int> u(n);  // current polygon, increasing vertices
  for (int i = 0; i < n; ++i) u[i] = i;
  std::vector<int> arcs;
  auto dist = [n](int a, int b) { return mod(b - a, n); };
  while (u.size() >= 3) {
    const std::size_t k = u.size();
    bool cut = false;
    for (std::size_t i = 0; i < k && !cut; ++i) {
      const int prev = u[(i + k - 1) % k], next = u[(i + 1) % k];
      const int c = chord_id(prev, dist(prev, next), n);
      if (f.label(c).norm() == 1) {
        arcs.push_back(c);
        u.erase(u.begin() + static_cast<std::ptrdiff_t>(i));
        cut = true;
      }
    }
    if (!cut) break;
  }

  SpokeTriangulation out;
  if (u.size() >= 3) {
    const auto d = f.label(spoke_id(u[0], n)).norm();
    for (int v : u) {
      if (f.label(spoke_id(v, n)).norm() != d) throw std::logic_error("irreducible frieze without a constant spoke fan");
      arcs.push_back(spoke_id(v, n));
    }
    out.spokes = static_cast<int>(u.size());
  } else {
    const int v = u[0], w = u[1];
    const auto pv = f.label(spoke_id(v, n)).norm(), pw = f.label(spoke_id(w, n)).norm();
    if (pv == pw) {
      arcs.push_back(spoke_id(v, n));
      arcs.push_back(spoke_id(w, n));
      out.spokes = 2;
    } else {
      // The tagged spoke opposite the larger plain spoke is +-1; read it as
      // the loop around a self-folded triangle at the other vertex.
      const int x = pv == 1 ? v : (pw == 1 ? w : -1);
      if (x < 0 || f.label(tagged_spoke_id(x, n)).norm() != 1) throw std::logic_error("punctured digon without a unit spoke");
      arcs.push_back(spoke_id(x, n));
      arcs.push_back(tagged_spoke_id(x, n));
      out.spokes = 1;
      out.self_folded = true;
    }
  }
  out.triangulation = TaggedTriangulation(n, arcs);
  out.spoke_label = f.label(spoke_id(out.triangulation.plain_spokes().front(), n));
  return out;
}

SignConfiguration classify_sign_configuration(const DFrieze& f) {
  const int n = f.n();
  if (f.ring() != Ring::Z) throw std::invalid_argument("sign configurations need integer labels");
  const SpokeTriangulation st = find_spoke_triangulation(f);
  SignConfiguration out;
  out.triangulation = st.triangulation;
  out.cut_vertex = st.triangulation.plain_spokes().front();
  out.spokes_flipped = f.label(spoke_id(out.cut_vertex, n)).sign() < 0;
  const DFrieze g = out.spokes_flipped ? sigma1(f) : f;
  for (int a : st.triangulation.arcs()) out.signs.push_back({a, f.label(a).sign()});

  // Cut along the spoke at v0: boundary positions 0..n (both ends v0) and
  // the puncture at n+1.
  const int v0 = out.cut_vertex;
  const int N = n + 2;
  std::vector<std::pair<Arc, int>> internal;
  for (int a : st.triangulation.arcs()) {
    const int s = g.label(a).sign();
    if (a == spoke_id(v0, n)) continue;
    if (is_plain_spoke_id(a, n)) {
      internal.push_back({{mod(a - n - v0, n), n + 1}, s});
    } else if (is_tagged_spoke_id(a, n)) {
      // The loop around the self-folded pair; its value is P*T.
      internal.push_back({{0, n}, s * g.label(spoke_id(v0, n)).sign()});
    } else {
      const TaggedArc c = tagged_arc(a, n);
      const int x = mod(c.at - v0, n);
      internal.push_back({{x, x + c.length}, s});
    }
  }
  std::vector<Arc> arcs;
  for (const auto& [a, s] : internal) arcs.push_back(a);
  std::sort(arcs.begin(), arcs.end());
  SignLabeling cut{Triangulation(N, arcs)};
  BoundaryState b(N);
  for (int k = 0; k < n; ++k) b[k] = g.label(boundary_id(v0 + k, n)).sign();
  b[n] = b[n + 1] = g.label(spoke_id(v0, n)).sign();
  cut.set_boundary_state(b);
  for (const auto& [a, s] : internal) cut.set_sign(a, s);
  out.cut = cut;

  if (!is_admissible(cut)) throw std::logic_error("sign configuration is not admissible");
  const SignLabeling plus{cut.triangulation()};
  if (cut == plus) {
    out.category = out.spokes_flipped ? 2 : 1;
  } else if (N % 2 == 0 && cut == negate_even_arcs(plus)) {
    out.category = out.spokes_flipped ? 4 : 3;
  } else {
    throw std::logic_error("unclassifiable sign configuration");
  }
  return out;
}

std::string_view tag_name(DTag t) {
  switch (t) {
    case DTag::Identity: return "id";
    case DTag::Sigma1: return "sigma1";
    case DTag::Sigma2: return "sigma2";
    case DTag::Sigma1Sigma2: return "sigma1sigma2";
  }
  return "?";
}

DFrieze apply_tag(const DFrieze& f, DTag tag) {
  switch (tag) {
    case DTag::Identity: return f;
    case DTag::Sigma1: return sigma1(f);
    case DTag::Sigma2: return sigma2(f, 0);
    case DTag::Sigma1Sigma2: return sigma1(sigma2(f, 0));
  }
  return f;
}

NormalizedD normalize_d(const DFrieze& f) {
  const SignConfiguration sc = classify_sign_configuration(f);
  // sigma2 anchored at v0 equals sigma1 * sigma2(anchor 0) when v0 is odd.
  const bool s2 = sc.category >= 3;
  const bool s1 = sc.spokes_flipped != (s2 && sc.cut_vertex % 2 == 1);
  const DTag tag = s2 ? (s1 ? DTag::Sigma1Sigma2 : DTag::Sigma2) : (s1 ? DTag::Sigma1 : DTag::Identity);
  NormalizedD out{apply_tag(f, tag), tag};
  if (!out.positive.is_positive()) throw std::logic_error("normalization did not reach a positive frieze");
  return out;
}

Arc d3_to_a3_arc(int id) {
  constexpr int n = 3;
  if (is_plain_spoke_id(id, n)) {
    const int v = id - n;
    return make_arc(2 * v, (2 * v + 2) % 6);
  }
  if (is_tagged_spoke_id(id, n)) {
    const int v = id - 2 * n;
    return make_arc((2 * v + 3) % 6, (2 * v + 5) % 6);
  }
  if (is_chord_id(id, n)) {
    const int u = (tagged_arc(id, n).at + 1) % 3;
    return make_arc(2 * u + 1, (2 * u + 4) % 6);
  }
  throw std::invalid_argument("boundary segments have no hexagon diagonal");
}

AFrieze d3_to_a3(const DFrieze& f) {
  if (f.n() != 3 || !f.has_unit_boundary()) throw std::invalid_argument("d3_to_a3 needs a D_3 frieze with unit boundary");
  AFrieze a(6, f.ring());
  for (int k = 0; k < 6; ++k) a.set_label(boundary_arc(k, 6), RingElement::one(f.ring()));
  for (int id = 3; id < tagged_arc_count(3); ++id) a.set_label(d3_to_a3_arc(id), f.label(id));
  return a;
}

}  // namespace frieze
