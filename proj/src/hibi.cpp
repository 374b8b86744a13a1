#include "mcy/hibi.hpp"

#include <algorithm>
#include <bit>

namespace mcy {

Int lattice_points(const Poset& p, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (k == 0) return 1;
  auto L = DistributiveLattice::order_ideals(p);
  size_t m = L.size();
  // weak chains I_1 <= ... <= I_k in J(P)
  std::vector<Int> v(m, 1);
  for (int step = 1; step < k; ++step) {
    std::vector<Int> nv(m, 0);
    for (size_t j = 0; j < m; ++j) {
      Int s = 0;
      for (size_t i = 0; i < m; ++i)
        if (L.leq(i, j)) s += v[i];
      nv[j] = s;
    }
    v = std::move(nv);
  }
  Int tot = 0;
  for (auto& x : v) tot += x;
  return tot;
}

Poset contraction_interior_poset(const BoundedPoset& bp, const Contraction& c) {
  // full quotient poset on fibers, then restrict to interior fibers
  std::vector<std::string> ids;
  for (int f = 0; f < c.num_fibers; ++f) ids.push_back("f" + std::to_string(f));
  std::vector<std::pair<std::string, std::string>> cov;
  for (auto& [u, v] : c.quotient_covers) cov.emplace_back(ids[u], ids[v]);
  Poset q = Poset::build(ids, cov);
  uint64_t mask = 0;
  for (int f : c.interior) mask |= uint64_t(1) << f;
  return q.induced(mask);
}

Int strict_maps(const Poset& p, int k) {
  if (k < 0) return 0;
  int n = p.size();
  if (n == 0) return 1;
  auto L = DistributiveLattice::order_ideals(p);
  size_t m = L.size();
  // antichain-step transfer: I -> J allowed iff I <= J and J \ I an antichain
  auto antichain = [&](uint64_t d) {
    for (int a = 0; a < n; ++a)
      if ((d >> a) & 1)
        if (p.strictly_below(a) & d) return false;
    return true;
  };
  // v_c[J] = #strict maps of the subposet J onto values <= c
  std::vector<Int> v(m, 0);
  v[0] = 1;  // empty ideal
  for (int c = 1; c <= k; ++c) {
    std::vector<Int> nv(m, 0);
    for (size_t j = 0; j < m; ++j) {
      Int s = 0;
      for (size_t i = 0; i < m; ++i) {
        if (!L.leq(i, j)) continue;
        uint64_t d = L.ideal(j) & ~L.ideal(i);
        if (antichain(d)) s += v[i];
      }
      nv[j] = s;
    }
    v = std::move(nv);
  }
  return v[m - 1];
}

Int interior_points_face(const BoundedPoset& bp, const Contraction& c, int k) {
  if (k <= 0) return 0;
  Poset pr = contraction_interior_poset(bp, c);
  return strict_maps(pr, k - 1);
}

Int hibi_degree(const Poset& p) {
  return count_maximal_chains(DistributiveLattice::order_ideals(p));
}

std::vector<HibiSingularComponent> singular_components(const Poset& p) {
  BoundedPoset bp(p);
  std::vector<HibiSingularComponent> out;
  for (auto& c : minimal_convex_cycles(bp)) {
    HibiSingularComponent sc;
    Poset pr = contraction_interior_poset(bp, c);
    sc.codim = p.size() - pr.size();
    sc.degree = hibi_degree(pr);
    sc.contraction = c;
    out.push_back(std::move(sc));
  }
  return out;
}

GorensteinInfo gorenstein_terminal(const Poset& p) {
  auto hf = heights(p);
  return {hf.pure, hf.pure ? hf.h_poset : 0};
}

std::vector<HibiBinomial> hibi_ideal_generators(const DistributiveLattice& L) {
  std::vector<HibiBinomial> out;
  for (size_t a = 0; a < L.size(); ++a)
    for (size_t b = a + 1; b < L.size(); ++b) {
      if (L.leq(a, b) || L.leq(b, a)) continue;
      out.push_back({a, b, L.meet(a, b), L.join(a, b)});
    }
  return out;
}

std::vector<Rat> ehrhart_polynomial(const Poset& p) {
  int n = p.size();
  std::vector<Rat> values;
  for (int k = 0; k <= n; ++k) values.emplace_back(lattice_points(p, k));
  // Lagrange interpolation on nodes 0..n
  std::vector<Rat> poly(n + 1, Rat(0));
  for (int i = 0; i <= n; ++i) {
    // basis polynomial prod_{j != i} (x - j)/(i - j)
    std::vector<Rat> basis = {Rat(1)};
    Rat denom(1);
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis.push_back(Rat(0));
      for (int d = (int)basis.size() - 1; d >= 1; --d)
        basis[d] = basis[d - 1] - Rat(j) * basis[d];
      basis[0] = -Rat(j) * basis[0];
      denom *= Rat(i - j);
    }
    for (size_t d = 0; d < basis.size(); ++d) poly[d] += values[i] * basis[d] / denom;
  }
  return poly;
}

NefPartition nef_partition(const Poset& p, const std::vector<int>& degrees) {
  auto hf = heights(p);
  if (!hf.pure) throw std::invalid_argument("nef partition requires a pure poset");
  int h = hf.h_poset;
  int sum = 0;
  for (int d : degrees) sum += d;
  if (sum != h) throw std::invalid_argument("degree sum must equal the poset height");
  BoundedPoset bp(p);
  NefPartition np;
  np.degrees = degrees;
  np.bands.assign(h, {});
  auto hofs = [&](int v) {
    if (v == bp.top) return h;
    if (v == bp.bot) return 0;
    return hf.h[v];
  };
  for (size_t e = 0; e < bp.edges.size(); ++e) {
    int k = hofs(bp.edges[e].s);
    if (k < 1 || k > h) throw std::runtime_error("band index out of range");
    np.bands[k - 1].push_back((int)e);
  }
  for (auto& band : np.bands)
    if (band.empty()) throw std::runtime_error("empty band in a pure poset");
  int at = 0;
  for (int d : degrees) {
    std::vector<int> part;
    for (int k = at; k < at + d; ++k)
      part.insert(part.end(), np.bands[k].begin(), np.bands[k].end());
    np.parts.push_back(std::move(part));
    at += d;
  }
  return np;
}

DeltaMap dual_data(const Poset& p) {
  BoundedPoset bp(p);
  DeltaMap dm;
  for (auto& e : bp.edges) {
    std::vector<int> v(p.size(), 0);
    if (e.t < p.size()) v[e.t] += 1;
    if (e.s < p.size()) v[e.s] -= 1;
    dm.delta.push_back(std::move(v));
  }
  // injectivity on E (vertices of the dual polytope)
  auto sorted = dm.delta;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::runtime_error("delta map not injective on edges");
  return dm;
}

}  // namespace mcy
