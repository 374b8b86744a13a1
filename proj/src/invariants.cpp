#include "mcy/invariants.hpp"

#include <algorithm>
#include <map>

#include "mcy/hibi.hpp"

namespace mcy {

CicyInstance CicyInstance::make(Poset p, std::vector<int> degrees) {
  auto hf = heights(p);
  if (!hf.pure) throw std::invalid_argument("ambient poset must be pure (Gorenstein)");
  int sum = 0;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("degrees must be positive");
    sum += d;
  }
  if (sum != hf.h_poset)
    throw std::invalid_argument("degree sum must equal h_P (Calabi-Yau condition)");
  if (p.size() - (int)degrees.size() != 3)
    throw std::invalid_argument("not a 3-fold: need |P| - r = 3");
  CicyInstance inst;
  inst.poset = std::move(p);
  inst.degrees = std::move(degrees);
  return inst;
}

Int degree_ci(const CicyInstance& inst) {
  Int d = hibi_degree(inst.poset);
  for (int dj : inst.degrees) d *= dj;
  return d;
}

Int chi_o1(const CicyInstance& inst) {
  // coefficient of t in the Hilbert series sum_m l(m Delta) t^m times
  // prod_j (1 - t^{d_j})
  Int c = lattice_points(inst.poset, 1);
  for (int dj : inst.degrees)
    if (dj == 1) c -= 1;
  return c;
}

Int c2h(const CicyInstance& inst) {
  Int c = 12 * chi_o1(inst) - 2 * degree_ci(inst);
  return c;
}

StringyH1 stringy_h1(const CicyInstance& inst) {
  const Poset& p = inst.poset;
  BoundedPoset bp(p);
  int r = inst.r();
  const auto& deg = inst.degrees;
  StringyH1 out;
  out.h11 = Int((long)bp.edges.size() - p.size());
  out.middle_zero = true;

  // first term: sum_i sum_{J subset I, d_J <= d_i} (-1)^{|J|} l((d_i-d_J) Delta)
  std::vector<Int> lcache(heights(p).h_poset + 1, Int(-1));
  auto lat = [&](int k) {
    if (lcache[k] < 0) lcache[k] = lattice_points(p, k);
    return lcache[k];
  };
  Int term1 = 0;
  for (int i = 0; i < r; ++i) {
    for (uint32_t J = 0; J < (uint32_t(1) << r); ++J) {
      int dJ = 0, bits = 0;
      for (int j = 0; j < r; ++j)
        if ((J >> j) & 1) dJ += deg[j], ++bits;
      if (dJ > deg[i]) continue;
      Int v = lat(deg[i] - dJ);
      term1 += (bits % 2 ? -v : v);
    }
  }
  // second term: sum_J (-1)^{r-|J|} sum_e l*(d_J theta_e)
  // l* vanishes unless d_J is large; cache per k
  std::map<int, Int> face_sum;
  auto facesum = [&](int k) {
    auto it = face_sum.find(k);
    if (it != face_sum.end()) return it->second;
    Int s = 0;
    for (size_t e = 0; e < bp.edges.size(); ++e)
      s += interior_points_face(bp, facet_contraction(bp, (int)e), k);
    face_sum[k] = s;
    return s;
  };
  int h = heights(p).h_poset;
  Int term2 = 0;
  for (uint32_t J = 0; J < (uint32_t(1) << r); ++J) {
    int dJ = 0, bits = 0;
    for (int j = 0; j < r; ++j)
      if ((J >> j) & 1) dJ += deg[j], ++bits;
    if (dJ < h - 1) continue;  // faces have no interior points below h_{P'}
    Int v = facesum(dJ);
    term2 += ((r - bits) % 2 ? -v : v);
  }
  out.h1_last = term1 - term2 - p.size();
  return out;
}

Int node_count(const CicyInstance& inst) {
  Int prod = 1;
  for (int dj : inst.degrees) prod *= dj;
  Int s = 0;
  for (auto& sc : singular_components(inst.poset))
    if (sc.codim == 3) s += sc.degree;
  return prod * s;
}

Int euler_number(const CicyInstance& inst) {
  auto st = stringy_h1(inst);
  return 2 * (st.h11 - st.h1_last) - 2 * node_count(inst);
}

InvariantReport invariant_report(const CicyInstance& inst) {
  InvariantReport rep;
  rep.deg = degree_ci(inst);
  rep.chi_o1 = chi_o1(inst);
  rep.c2_h = c2h(inst);
  auto st = stringy_h1(inst);
  rep.h11_y = st.h11;
  rep.h21_y = st.h1_last;
  rep.chi_y = 2 * (st.h11 - st.h1_last);
  rep.nodes = node_count(inst);
  rep.chi_x = rep.chi_y - 2 * rep.nodes;
  rep.h21_x = rep.h21_y + rep.nodes - (rep.h11_y - 1);
  return rep;
}

}  // namespace mcy
