#include "frieze/frieze_a.hpp"

#include "frieze/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace frieze {

AFrieze::AFrieze(int n, Ring ring) : n_(n), ring_(ring), labels_(arc_count(n), RingElement::zero(ring)) {
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
}

bool AFrieze::has_unit_boundary() const {
  const auto one = RingElement::one(ring_);
  for (int k = 0; k < n_; ++k)
    if (label(boundary_arc(k, n_)) != one) return false;
  return true;
}

bool AFrieze::is_positive() const {
  return std::all_of(labels_.begin(), labels_.end(), [](const RingElement& x) { return x.is_rational() && x.sign() > 0; });
}

std::vector<PtolemyViolation> ptolemy_check(const AFrieze& f) {
  const int n = f.n();
  std::vector<PtolemyViolation> out;
  for (Arc a : all_arcs(n))
    if (f.label(a).is_zero()) out.push_back({std::nullopt, a});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const Quadrilateral q = make_quadrilateral(i, j, k, l);
          const auto lhs = f.label(q.diagonals[0]) * f.label(q.diagonals[1]);
          const auto rhs = f.label(q.sides[0]) * f.label(q.sides[2]) + f.label(q.sides[1]) * f.label(q.sides[3]);
          if (lhs != rhs) out.push_back({q, std::nullopt});
        }
  return out;
}

std::string_view kind_name(PropagationError::Kind k) {
  switch (k) {
    case PropagationError::Kind::NotIntegral:
      return "NotIntegral";
    case PropagationError::Kind::ZeroLabel:
      return "ZeroLabel";
    case PropagationError::Kind::Inconsistent:
      return "Inconsistent";
  }
  return "?";
}

AFrieze propagate(const Triangulation& t, const ArcSeed& seed, const PropagateOptions& opts) {
  const int n = t.n();
  if (seed.empty()) throw std::invalid_argument("empty seed");
  const Ring ring = seed.begin()->second.ring();
  AFrieze f(n, ring);
  std::vector<char> known(arc_count(n), 0);

  auto require_seed = [&](Arc a) {
    auto it = seed.find(a);
    if (it == seed.end()) throw std::invalid_argument("seed misses arc (" + std::to_string(a.from) + "," + std::to_string(a.to) + ")");
    if (it->second.is_zero()) throw PropagationError(PropagationError::Kind::ZeroLabel, "zero seed value");
    f.set_label(a, it->second);
    known[arc_index(a, n)] = 1;
  };
  for (int k = 0; k < n; ++k) require_seed(boundary_arc(k, n));
  for (Arc a : t.internal()) require_seed(a);

  std::vector<Arc> pending;
  for (Arc a : all_arcs(n))
    if (!known[arc_index(a, n)]) pending.push_back(a);
  if (opts.shuffle_seed != 0) {
    std::mt19937_64 rng(opts.shuffle_seed);
    std::shuffle(pending.begin(), pending.end(), rng);
  }
  auto is_known = [&](int x, int y) { return known[arc_index(make_arc(x, y), n)] != 0; };
  auto val = [&](int x, int y) -> const RingElement& { return f.label(make_arc(x, y)); };

  while (!pending.empty()) {
    bool progress = false;
    for (auto it = pending.begin(); it != pending.end();) {
      const int i = it->from, k = it->to;
      bool done = false;
      // Flip (j,l) -> (i,k) inside the quadrilateral i < j < k, l outside.
      for (int j = i + 1; j < k && !done; ++j) {
        if (!is_known(i, j) || !is_known(j, k)) continue;
        for (int l = 0; l < n && !done; ++l) {
          if (l >= i && l <= k) continue;
          if (!is_known(j, l) || !is_known(k, l) || !is_known(i, l)) continue;
          const RingElement num = val(i, j) * val(k, l) + val(j, k) * val(i, l);
          auto q = exact_div(num, val(j, l));
          if (!q)
            throw PropagationError(PropagationError::Kind::NotIntegral,
                                   "arc (" + std::to_string(i) + "," + std::to_string(k) + ") requires " + num.to_string() +
                                       "/" + val(j, l).to_string());
          if (q->is_zero())
            throw PropagationError(PropagationError::Kind::ZeroLabel,
                                   "arc (" + std::to_string(i) + "," + std::to_string(k) + ") evaluates to 0");
          f.set_label(*it, std::move(*q));
          known[arc_index(*it, n)] = 1;
          done = true;
        }
      }
      if (done) {
        it = pending.erase(it);
        progress = true;
      } else {
        ++it;
      }
    }
    if (!progress) throw std::logic_error("propagate: flip closure stalled");
  }
  if (!ptolemy_check(f).empty())
    throw PropagationError(PropagationError::Kind::Inconsistent, "two flip routes disagree");
  return f;
}

AFrieze sigma(const AFrieze& f) {
  const int n = f.n();
  if (n % 2 != 0) throw std::domain_error("sigma needs an even polygon");
  AFrieze out = f;
  for (Arc a : all_arcs(n))
    if (span(a, n) % 2 == 0) out.set_label(a, -f.label(a));
  return out;
}

std::vector<AFrieze> enumerate_nonzero_a(int n, unsigned jobs) {
  if (n < 4) throw std::invalid_argument("enumerate_nonzero_a: n must be >= 4");
  const auto ts = enumerate_triangulations(n);
  const BoundaryState unit(n, 1);
  std::vector<std::vector<AFrieze>> per(ts.size());
  parallel_for(ts.size(), jobs, [&](std::size_t idx) {
    const auto& t = ts[idx];
    for (const auto& l : extend_boundary(t, unit)) {
      ArcSeed seed;
      for (int k = 0; k < n; ++k) seed.emplace(boundary_arc(k, n), RingElement::one(Ring::Z));
      for (Arc a : t.internal()) seed.emplace(a, RingElement::integer(Ring::Z, l.sign(a)));
      AFrieze f;
      try {
        f = propagate(t, seed);
      } catch (const PropagationError& e) {
        throw std::logic_error(std::string("admissible unit seed failed to propagate: ") + e.what());
      }
      if (!ptolemy_check(f).empty()) throw std::logic_error("enumerated frieze violates Ptolemy");
      per[idx].push_back(std::move(f));
    }
  });
  std::vector<AFrieze> out;
  for (auto& v : per)
    for (auto& f : v) out.push_back(std::move(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UnitTriangulation find_unit_triangulation(const AFrieze& f) {
  const int n = f.n();
  for (int k = 0; k < n; ++k) {
    const auto& b = f.label(boundary_arc(k, n));
    if (!b.is_rational() || abs(b.a()) != 1) throw std::invalid_argument("find_unit_triangulation needs a +-1 boundary");
  }
  std::vector<int> poly(n);
  std::iota(poly.begin(), poly.end(), 0);
  ReductionTrace trace;
  std::vector<Arc> cut;
  while (poly.size() > 3) {
    const std::size_t k = poly.size();
    std::vector<RingElement> sides;
    for (std::size_t i = 0; i < k; ++i) sides.push_back(f.label(make_arc(poly[i], poly[(i + 1) % k])));
    bool found = false;
    for (std::size_t i = 0; i < k && !found; ++i) {
      const int prev = poly[(i + k - 1) % k], next = poly[(i + 1) % k];
      const Arc a = make_arc(prev, next);
      const auto& la = f.label(a);
      if (!modulus_less_than_sum(la, f.label(make_arc(prev, poly[i])), f.label(make_arc(poly[i], next)))) continue;
      trace.push_back({poly[i], a, la, sides});
      cut.push_back(a);
      poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
      found = true;
    }
    if (!found) throw NoEarError("no length-2 arc satisfies the ear bound");
  }
  Triangulation t(n, cut);
  SignLabeling signs(t);
  auto sign_of = [&](Arc a) {
    const auto& v = f.label(a);
    if (!v.is_rational() || abs(v.a()) != 1) throw std::logic_error("peeled arc is not labeled +-1");
    return v.sign();
  };
  for (int k = 0; k < n; ++k) signs.set_sign(boundary_arc(k, n), sign_of(boundary_arc(k, n)));
  for (Arc a : t.internal()) signs.set_sign(a, sign_of(a));
  if (!is_admissible(signs)) throw std::logic_error("unit triangulation carries an inadmissible labeling");
  return {std::move(t), std::move(signs), std::move(trace)};
}

AFrieze apply_tag(const AFrieze& f, SignTag tag) { return tag == SignTag::Sigma ? sigma(f) : f; }

NormalizedA normalize_a(const AFrieze& f) {
  if (f.ring() != Ring::Z) throw std::invalid_argument("normalize_a works over Z");
  if (f.is_positive()) return {f, SignTag::Identity};
  if (f.n() % 2 == 0) {
    AFrieze s = sigma(f);
    if (s.is_positive()) return {std::move(s), SignTag::Sigma};
  }
  throw std::logic_error("frieze cannot be brought to a positive one");
}

}  // namespace frieze
