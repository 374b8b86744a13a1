#include "mcy/riemann.hpp"

#include <algorithm>
#include <cmath>

namespace mcy {

namespace {

// Stirling numbers of the second kind up to n.
std::vector<std::vector<Int>> stirling2(int n) {
  std::vector<std::vector<Int>> S(n + 1, std::vector<Int>(n + 1, Int(0)));
  S[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) S[i][k] = S[i - 1][k - 1] + Int(k) * S[i - 1][k];
  return S;
}

using Poly = std::vector<Rat>;  // coefficients low-to-high

Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat((long)i) * p[i]);
  return d;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// division with remainder (b monic-izable)
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    a = trim(a);
    if (a.size() < b.size()) break;
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    q[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = trim(a);
    if (a.empty()) break;
  }
  return {trim(q), trim(a)};
}

Poly poly_gcd(Poly a, Poly b) {
  a = trim(a);
  b = trim(b);
  while (!b.empty()) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& v : a) v /= lead;
  }
  return a;
}

// Elements of Q[x]/(f): vectors of length deg f.
struct QuotRing {
  Poly f;  // monic
  int deg() const { return (int)f.size() - 1; }

  std::vector<Rat> reduce(Poly p) const {
    auto [q, r] = divmod(std::move(p), f);
    std::vector<Rat> out(deg(), Rat(0));
    for (size_t i = 0; i < r.size(); ++i) out[i] = r[i];
    return out;
  }
  std::vector<Rat> mulr(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
    return reduce(mul(Poly(a.begin(), a.end()), Poly(b.begin(), b.end())));
  }
  std::vector<Rat> add(std::vector<Rat> a, const std::vector<Rat>& b) const {
    for (int i = 0; i < deg(); ++i) a[i] += b[i];
    return a;
  }
  std::vector<Rat> scale(std::vector<Rat> a, const Rat& c) const {
    for (auto& v : a) v *= c;
    return a;
  }
  bool is_zero(const std::vector<Rat>& a) const {
    for (auto& v : a)
      if (v != 0) return false;
    return true;
  }
  std::vector<Rat> from_rat(const Rat& c) const {
    std::vector<Rat> out(deg(), Rat(0));
    out[0] = c;
    return out;
  }
  // the class of x itself
  std::vector<Rat> gen() const {
    std::vector<Rat> out(deg(), Rat(0));
    if (deg() >= 2)
      out[1] = 1;
    else
      out[0] = -f[0];  // x = root for linear f (monic: x + f0)
    return out;
  }
};

// Ring-coefficient polynomial in s.
using RPoly = std::vector<std::vector<Rat>>;

}  // namespace

std::vector<std::vector<Int>> dform_reduced(const ThetaOperator& op) {
  int r = op.order(), D = op.degree();
  auto S = stirling2(r);
  // C_k(x)/x^k = sum_{j>=k} S[j][k] p_j(x)
  std::vector<std::vector<Int>> out(r + 1);
  for (int k = 0; k <= r; ++k) {
    std::vector<Int> poly(D + 1, Int(0));
    for (int j = k; j <= r; ++j)
      for (int i = 0; i <= D; ++i) poly[i] += S[j][k] * op.coeff(i, j);
    out[k] = std::move(poly);
  }
  return out;
}

std::vector<Rat> indicial_at_zero(const ThetaOperator& op) {
  int r = op.order();
  std::vector<Rat> p(r + 1);
  for (int j = 0; j <= r; ++j) p[j] = Rat(op.coeff(0, j));
  return p;
}

bool is_mum_point_at_zero(const ThetaOperator& op) {
  auto p = indicial_at_zero(op);
  for (size_t j = 0; j + 1 < p.size(); ++j)
    if (p[j] != 0) return false;
  return p.back() != 0;
}

namespace {

// rational roots of an integer polynomial with multiplicities removed
std::vector<Rat> rational_roots(std::vector<Int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  std::vector<Rat> roots;
  if (p.empty()) return roots;
  // strip x^k
  size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  if (k > 0) p.erase(p.begin(), p.begin() + k);
  if (p.size() <= 1) return roots;
  Int a0 = abs(p.front()), an = abs(p.back());
  auto divisors = [](const Int& v) {
    std::vector<Int> out;
    for (Int d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        out.push_back(d);
        out.push_back(v / d);
      }
    return out;
  };
  auto eval = [&](const Rat& x) {
    Rat acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
  };
  for (const Int& num : divisors(a0))
    for (const Int& den : divisors(an))
      for (int s : {1, -1}) {
        Rat cand(s * num, den);
        cand.canonicalize();
        if (eval(cand) == 0 &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  return roots;
}

std::vector<Rat> ring_rational_roots(const QuotRing& ring, RPoly I, int order) {
  // find rational roots of a ring-coefficient polynomial by exact synthetic
  // division over small-denominator candidates
  std::vector<Rat> roots;
  auto eval = [&](const Rat& s) {
    std::vector<Rat> acc = ring.from_rat(0);
    std::vector<Rat> sr = ring.from_rat(s);
    for (auto it = I.rbegin(); it != I.rend(); ++it) acc = ring.add(ring.mulr(acc, sr), *it);
    return acc;
  };
  // candidates p/q, |p/q| <= order + 3, q <= 60
  for (;;) {
    while (!I.empty() && ring.is_zero(I.back())) I.pop_back();
    if (I.size() <= 1) break;
    bool found = false;
    for (long q = 1; q <= 60 && !found; ++q)
      for (long pnum = -(long)(order + 3) * q; pnum <= (long)(order + 3) * q && !found; ++pnum) {
        Rat cand(pnum, q);
        cand.canonicalize();
        if (cand.get_den() != q) continue;  // avoid duplicates
        if (!ring.is_zero(eval(cand))) continue;
        roots.push_back(cand);
        // synthetic division by (s - cand): Q[i-1] = I[i] + cand*Q[i]
        size_t n = I.size() - 1;
        RPoly Q(n, ring.from_rat(0));
        Q[n - 1] = I[n];
        for (size_t i = n - 1; i >= 1; --i) Q[i - 1] = ring.add(I[i], ring.scale(Q[i], cand));
        I = std::move(Q);
        found = true;
      }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

double approx_root_near(const std::vector<Int>& poly, double seed) {
  // Newton refinement in double precision
  auto ev = [&](double x, double& d) {
    double acc = 0, dacc = 0;
    for (size_t i = poly.size(); i-- > 0;) {
      dacc = dacc * x + acc;
      acc = acc * x + poly[i].get_d();
    }
    d = dacc;
    return acc;
  };
  double x = seed;
  for (int it = 0; it < 80; ++it) {
    double d, v = ev(x, d);
    if (d == 0) break;
    double nx = x - v / d;
    if (std::abs(nx - x) < 1e-14 * (1 + std::abs(x))) return nx;
    x = nx;
  }
  return x;
}

std::vector<double> real_roots_double(const std::vector<Int>& poly) {
  // crude but adequate: sample sign changes on a log-ish grid, refine
  std::vector<double> out;
  auto ev = [&](double x) {
    double acc = 0;
    for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i].get_d();
    return acc;
  };
  std::vector<double> grid;
  for (double t = -9; t <= 9; t += 0.002) grid.push_back(std::copysign(std::exp(std::abs(t)) - 1, t));
  std::sort(grid.begin(), grid.end());
  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    double a = grid[i], b = grid[i + 1];
    if (ev(a) == 0) out.push_back(a);
    if (ev(a) * ev(b) < 0) {
      for (int it = 0; it < 200; ++it) {
        double m = (a + b) / 2;
        if (ev(a) * ev(m) <= 0)
          b = m;
        else
          a = m;
      }
      out.push_back(approx_root_near(poly, (a + b) / 2));
    }
  }
  return out;
}

}  // namespace

RiemannScheme riemann_scheme(const ThetaOperator& op) {
  int r = op.order();
  auto dform = dform_reduced(op);
  const auto& lead = dform[r];  // p_r(x)

  RiemannScheme scheme;

  // ---- x = 0 ----
  {
    SchemePoint pt;
    pt.value = Rat(0);
    pt.approx = 0;
    auto ind = indicial_at_zero(op);
    QuotRing ring;
    ring.f = {Rat(0), Rat(1)};  // x
    RPoly I;
    for (auto& c : ind) I.push_back(ring.from_rat(c));
    pt.exponents = ring_rational_roots(ring, I, r);
    pt.regular = (int)pt.exponents.size() == r;
    scheme.points.push_back(std::move(pt));
  }

  // ---- finite nonzero points: factor the leading polynomial ----
  Poly leadp;
  for (auto& v : lead) leadp.push_back(Rat(v));
  leadp = trim(leadp);
  // strip x^k factors (x = 0 already handled)
  size_t xord = 0;
  while (xord < leadp.size() && leadp[xord] == 0) ++xord;
  leadp.erase(leadp.begin(), leadp.begin() + xord);

  // rational roots first
  std::vector<Int> ip;
  {
    Int den = 1;
    for (auto& v : leadp) den = lcm(den, Int(v.get_den()));
    for (auto& v : leadp) {
      Rat w = v * Rat(den);
      w.canonicalize();
      ip.push_back(Int(w.get_num()));
    }
  }
  auto build_point_exponents = [&](const QuotRing& ring) {
    // A_k(x0+u): m_k = valuation, lead_k = first coefficient; all in the ring
    int R = r;
    std::vector<int> mval(R + 1, 1 << 30);
    std::vector<std::vector<Rat>> leadc(R + 1);
    for (int k = 0; k <= R; ++k) {
      // C_k = x^k * dform[k]; expand around x0: poly in u with ring coeffs
      // first express C_k as plain poly
      Poly ck(dform[k].size() + k, Rat(0));
      for (size_t i = 0; i < dform[k].size(); ++i) ck[i + k] = Rat(dform[k][i]);
      ck = trim(ck);
      // Taylor coefficients: t_l = C_k^{(l)}(x0)/l!
      Poly cur = ck;
      Rat fact(1);
      for (int l = 0; (size_t)l <= ck.size(); ++l) {
        std::vector<Rat> val = ring.reduce(cur);
        // evaluate at generator: reduce() gives the class of cur mod f — the
        // value of cur at the root
        if (!ring.is_zero(val)) {
          if (l < mval[k]) {
            mval[k] = l;
            leadc[k] = ring.scale(val, 1 / fact);
          }
          break;
        }
        cur = derivative(cur);
        fact *= Rat(l + 1);
        if (cur.empty()) break;
      }
      // note: loop breaks at the first nonzero derivative; mval large if C_k=0
    }
    int rho = -(1 << 30);
    for (int k = 0; k <= R; ++k)
      if (mval[k] < (1 << 29)) rho = std::max(rho, k - mval[k]);
    bool regular = (r - mval[r] == rho);
    // indicial: sum over k with k - m_k = rho of lead_k * s(s-1)..(s-k+1)
    RPoly I(R + 1, std::vector<Rat>());
    QuotRing const& rg = ring;
    for (auto& c : I) c = rg.from_rat(0);
    for (int k = 0; k <= R; ++k) {
      if (mval[k] > (1 << 29) || k - mval[k] != rho) continue;
      // falling factorial poly in s
      Poly ff = {Rat(1)};
      for (int t = 0; t < k; ++t) ff = mul(ff, Poly{Rat(-t), Rat(1)});
      for (size_t d = 0; d < ff.size(); ++d)
        I[d] = rg.add(I[d], rg.scale(leadc[k], ff[d]));
    }
    auto ex = ring_rational_roots(rg, I, r);
    return std::make_pair(ex, regular);
  };

  std::vector<Rat> rroots = rational_roots(ip);
  Poly rem = leadp;
  for (auto& rt : rroots) {
    // divide out all powers of (x - rt)
    Poly lin = {-rt, Rat(1)};
    for (;;) {
      auto [q, rr] = divmod(rem, lin);
      if (!rr.empty()) break;
      rem = q;
      if (rem.size() <= 1) break;
    }
    if (rt == 0) continue;
    SchemePoint pt;
    pt.value = rt;
    pt.approx = rt.get_d();
    QuotRing ring;
    ring.f = {-rt, Rat(1)};
    auto [ex, reg] = build_point_exponents(ring);
    pt.exponents = ex;
    pt.regular = reg;
    scheme.points.push_back(std::move(pt));
  }
  // remaining factor: use squarefree part as one conjugacy class
  rem = trim(rem);
  if (rem.size() > 1) {
    Poly sf = rem;
    Poly g = poly_gcd(rem, derivative(rem));
    if (g.size() > 1) sf = divmod(rem, g).first;
    Rat leadc = sf.back();
    for (auto& v : sf) v /= leadc;
    QuotRing ring;
    ring.f = sf;
    auto [ex, reg] = build_point_exponents(ring);
    // one SchemePoint per real root
    std::vector<Int> isf;
    Int den = 1;
    for (auto& v : sf) den = lcm(den, Int(v.get_den()));
    for (auto& v : sf) {
      Rat w = v * Rat(den);
      w.canonicalize();
      isf.push_back(Int(w.get_num()));
    }
    for (double rt : real_roots_double(isf)) {
      SchemePoint pt;
      pt.min_poly = isf;
      pt.approx = rt;
      pt.exponents = ex;
      pt.regular = reg;
      scheme.points.push_back(pt);
    }
  }

  // ---- infinity ----
  {
    SchemePoint pt;
    pt.at_infinity = true;
    int D = op.degree();
    QuotRing ring;
    ring.f = {Rat(0), Rat(1)};
    RPoly I(r + 1, ring.from_rat(0));
    for (int j = 0; j <= r; ++j) {
      Rat v = Rat(op.coeff(D, j));
      if (j % 2) v = -v;
      I[j] = ring.from_rat(v);
    }
    pt.exponents = ring_rational_roots(ring, I, r);
    pt.regular = (int)pt.exponents.size() == r;
    pt.approx = 1e300;
    scheme.points.push_back(std::move(pt));
  }

  std::sort(scheme.points.begin(), scheme.points.end(),
            [](const SchemePoint& a, const SchemePoint& b) { return a.approx < b.approx; });
  return scheme;
}

}  // namespace mcy
