#include "mcy/mirror.hpp"

#include <stdexcept>

#include "mcy/riemann.hpp"

namespace mcy {

MirrorMap mirror_map(const FrobeniusBasis& fb, int terms) {
  size_t n = terms + 1;
  Series w0 = fb.wreg[0].truncated(n);
  Series w1 = fb.wreg[1].truncated(n);
  Series ratio = w1 * w0.inverse();
  Series e = ratio.exp();
  std::vector<Rat> q(n, Rat(0));
  for (size_t i = 0; i + 1 < n; ++i) q[i + 1] = e[i];
  MirrorMap mm;
  mm.q_of_x = Series(std::move(q));
  mm.x_of_q = mm.q_of_x.reversion();
  return mm;
}

Series yukawa(const ThetaOperator& op, const Int& deg, const FrobeniusBasis& fb, int terms) {
  if (op.order() != 4) throw std::invalid_argument("yukawa needs a 4th-order operator");
  size_t n = terms + 1;
  auto dform = dform_reduced(op);
  // C3/C4 = dform[3]/(x dform[4]);  G = (dform3/dform4 - 6)/x is regular
  auto lift = [&](const std::vector<Int>& p) {
    std::vector<Rat> c(n, Rat(0));
    for (size_t i = 0; i < p.size() && i < n; ++i) c[i] = Rat(p[i]);
    return Series(std::move(c));
  };
  Series ratio = lift(dform[3]) * lift(dform[4]).inverse();
  if (ratio[0] != 6) throw std::runtime_error("unexpected sub-leading structure at the MUM point");
  std::vector<Rat> g(n, Rat(0));
  for (size_t i = 1; i < n; ++i) g[i - 1] = ratio[i];
  Series G(std::move(g));
  Series integrand = G.integral().truncated(n);
  integrand *= Rat(-1, 2);
  Series wt = integrand.exp();
  wt *= Rat(deg);

  MirrorMap mm = mirror_map(fb, terms);
  Series w0q = fb.wreg[0].truncated(n).compose(mm.x_of_q);
  Series wq = wt.compose(mm.x_of_q);
  // (q dx / x dq)^3 = (dx/dq * q/x(q))^3
  Series dxdq = mm.x_of_q.derivative().truncated(n);
  std::vector<Rat> xq_over_q(n, Rat(0));
  for (size_t i = 1; i < n; ++i) xq_over_q[i - 1] = mm.x_of_q[i];
  Series fac = dxdq * Series(std::move(xq_over_q)).inverse();
  Series fac3 = fac * fac * fac;
  Series K = wq * fac3 * (w0q * w0q).inverse();
  return K;
}

std::vector<Int> bps_genus0(const Series& k_ttt, const Int& deg, int dmax) {
  if ((int)k_ttt.length() <= dmax) throw std::invalid_argument("series too short for dmax");
  if (k_ttt[0] != Rat(deg)) throw std::runtime_error("Yukawa normalization mismatch");
  std::vector<Int> n0(dmax + 1, Int(0));
  for (int d = 1; d <= dmax; ++d) {
    Rat s = k_ttt[d];
    for (int e = 1; e < d; ++e)
      if (d % e == 0) s -= Rat(n0[e]) * Rat(pow_int(Int(e), 3));
    Rat v = s / Rat(pow_int(Int(d), 3));
    v.canonicalize();
    if (v.get_den() != 1)
      throw std::runtime_error("non-integer BPS number at degree " + std::to_string(d));
    n0[d] = Int(v.get_num());
  }
  return std::vector<Int>(n0.begin() + 1, n0.end());
}

std::vector<Int> bps_from_operator(const ThetaOperator& op, const Int& deg, int dmax) {
  int terms = dmax + 3;
  FrobeniusBasis fb = frobenius_basis(op, terms);
  Series K = yukawa(op, deg, fb, terms);
  return bps_genus0(K, deg, dmax);
}

}  // namespace mcy
