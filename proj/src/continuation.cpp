#include "mcy/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mcy/riemann.hpp"

namespace mcy {

std::string Real::str(size_t digits) const {
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
  std::string out(s);
  mpfr_free_str(s);
  bool neg = !out.empty() && out[0] == '-';
  std::string mant = neg ? out.substr(1) : out;
  std::string res = (neg ? "-" : "") + ("0." + mant) + "e" + std::to_string((long)e);
  return res;
}

Real zeta3(mpfr_prec_t prec) {
  // zeta(3) = 5/2 sum_{n>=1} (-1)^{n-1} / (n^3 binomial(2n,n)), error ~ 4^-n
  static std::map<mpfr_prec_t, Real> cache;
  auto it = cache.find(prec);
  if (it != cache.end()) return it->second;
  long terms = (long)(prec * 0.5) + 40;  // 4^-n ~ 2^-2n
  Rat s(0);
  for (long n = 1; n <= terms; ++n) {
    Rat t = Rat(1) / (Rat(n) * n * n * Rat(binomial(2 * n, n)));
    if (n % 2 == 0) t = -t;
    s += t;
  }
  s *= Rat(5, 2);
  Real v(s, prec);
  cache.emplace(prec, v);
  return v;
}

CMatrix CMatrix::identity(int n, mpfr_prec_t prec) {
  CMatrix m(n, prec);
  for (int i = 0; i < n; ++i) m.at(i, i) = Complex(Real(1.0, prec), Real(0.0, prec));
  return m;
}

CMatrix operator*(const CMatrix& x, const CMatrix& y) {
  mpfr_prec_t prec = x.a.empty() ? 64 : x.a[0].re.prec();
  CMatrix r(x.n, prec);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k)
      for (int j = 0; j < x.n; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
  return r;
}

CMatrix CMatrix::transpose() const {
  mpfr_prec_t prec = a.empty() ? 64 : a[0].re.prec();
  CMatrix r(n, prec);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = at(j, i);
  return r;
}

CMatrix CMatrix::inverse() const {
  mpfr_prec_t prec = a.empty() ? 64 : a[0].re.prec();
  CMatrix m = *this;
  CMatrix inv = identity(n, prec);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    Real best(prec);
    for (int i = col; i < n; ++i) {
      Real mag = abs(m.at(i, col));
      if (piv < 0 || best < mag) {
        piv = i;
        best = mag;
      }
    }
    if (best.is_zero()) throw std::runtime_error("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(m.at(piv, j), m.at(col, j));
      std::swap(inv.at(piv, j), inv.at(col, j));
    }
    Complex p = m.at(col, col);
    for (int j = 0; j < n; ++j) {
      m.at(col, j) = m.at(col, j) / p;
      inv.at(col, j) = inv.at(col, j) / p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Complex f = m.at(i, col);
      if (f.re.is_zero() && f.im.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(col, j);
      }
    }
  }
  return inv;
}

namespace {

// roots of an integer polynomial by Durand-Kerner at working precision
std::vector<Complex> poly_roots(const std::vector<Int>& poly, mpfr_prec_t prec) {
  std::vector<Int> p = poly;
  while (!p.empty() && p.back() == 0) p.pop_back();
  size_t deg = p.empty() ? 0 : p.size() - 1;
  std::vector<Complex> roots;
  if (deg == 0) return roots;
  // scale-free double seeds on a circle, then Durand-Kerner in mpfr
  std::vector<Complex> z;
  double radius = 1.0 + std::abs(p[0].get_d() / p.back().get_d());
  for (size_t k = 0; k < deg; ++k) {
    double th = 2 * M_PI * (double)k / (double)deg + 0.4;
    z.push_back(Complex::of(radius * std::cos(th), radius * std::sin(th), prec));
  }
  auto eval = [&](const Complex& x) {
    Complex acc(prec);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + Complex(Real(p[i], prec), Real(0.0, prec));
    return acc;
  };
  Complex lead(Real(p.back(), prec), Real(0.0, prec));
  for (int it = 0; it < 4000; ++it) {
    Real worst(prec);
    for (size_t k = 0; k < deg; ++k) {
      Complex num = eval(z[k]) / lead;
      Complex den(Real(1.0, prec), Real(0.0, prec));
      for (size_t j = 0; j < deg; ++j)
        if (j != k) den = den * (z[k] - z[j]);
      Complex corr = num / den;
      z[k] = z[k] - corr;
      Real mag = abs(corr);
      if (worst < mag) worst = mag;
    }
    if (worst < Real(1e-40, prec) * (Real(1.0, prec) + abs(z[0]))) {
      // refine further with Newton for full precision
      break;
    }
  }
  // Newton polish
  auto evald = [&](const Complex& x, Complex& d) {
    Complex acc(prec), dacc(prec);
    for (size_t i = p.size(); i-- > 0;) {
      dacc = dacc * x + acc;
      acc = acc * x + Complex(Real(p[i], prec), Real(0.0, prec));
    }
    d = dacc;
    return acc;
  };
  for (auto& root : z)
    for (int it = 0; it < 200; ++it) {
      Complex d(prec);
      Complex v = evald(root, d);
      if (abs(d).is_zero()) break;
      Complex nr = root - v / d;
      Real delta = abs(nr - root);
      root = nr;
      Real tol = Real(0.5, prec);
      mpfr_mul_2si(tol.get(), tol.get(), -(long)(prec - 16), MPFR_RNDN);
      if (delta < tol * (Real(1.0, prec) + abs(root))) break;
    }
  return z;
}

}  // namespace

Transporter::Transporter(const ThetaOperator& op, mpfr_prec_t prec) : prec_(prec) {
  r_ = op.order();
  dform_ = dform_reduced(op);
  ck_.resize(r_ + 1);
  for (int k = 0; k <= r_; ++k) {
    ck_[k].assign(dform_[k].size() + k, Int(0));
    for (size_t i = 0; i < dform_[k].size(); ++i) ck_[k][i + k] = dform_[k][i];
  }
  // singular points: x = 0 plus distinct roots of the leading polynomial
  // (via its squarefree integer part handled by the root finder; duplicates
  // collapse within tolerance).
  std::vector<Int> lead = dform_[r_];
  auto roots = poly_roots(lead, prec);
  sing_.push_back(Complex(Real(0.0, prec), Real(0.0, prec)));
  for (auto& z : roots) {
    bool dup = false;
    for (auto& s : sing_)
      if (abs(z - s).to_double() < 1e-18) dup = true;
    if (!dup) sing_.push_back(z);
  }
}

std::vector<double> Transporter::real_singular_points() const {
  std::vector<double> out;
  for (auto& s : sing_)
    if (std::abs(s.im.to_double()) < 1e-25) out.push_back(s.re.to_double());
  std::sort(out.begin(), out.end());
  return out;
}

Real Transporter::dist_to_singular(const Complex& x) const {
  Real best = abs(x - sing_[0]);
  for (size_t i = 1; i < sing_.size(); ++i) {
    Real d = abs(x - sing_[i]);
    if (d < best) best = d;
  }
  return best;
}

CMatrix Transporter::step(const Complex& x0, const CMatrix& Y, const Complex& x1,
                          int terms) const {
  int r = r_;
  Complex t = x1 - x0;
  // shift C_k to x0: coefficients of C_k(x0 + u) up to degree needed
  std::vector<std::vector<Complex>> cs(r + 1);
  for (int k = 0; k <= r; ++k) {
    int d = (int)ck_[k].size() - 1;
    cs[k].assign(d + 1, Complex(prec_));
    // Taylor shift via Horner on each coefficient: cs[l] = sum_{m>=l} c_m C(m,l) x0^{m-l}
    for (int l = 0; l <= d; ++l) {
      Complex acc(prec_);
      for (int m = d; m >= l; --m) {
        acc = acc * x0;
        Complex add(Real(Int(ck_[k][m] * binomial(m, l)), prec_), Real(0.0, prec_));
        acc += add;
      }
      cs[k][l] = acc;
    }
  }
  CMatrix out(r, prec_);
  std::vector<Real> ff(terms + r + 1, Real(prec_));  // falling factorial workspace
  for (int col = 0; col < r; ++col) {
    std::vector<Complex> a;
    a.reserve(terms + r + 1);
    Rat fact(1);
    for (int k = 0; k < r; ++k) {
      if (k) fact *= Rat((long)k);
      a.push_back(Real(Rat(1) / fact, prec_) * Y.at(k, col));
    }
    // recurrence: coefficient of u^n of sum_k C_k(x0+u) y^(k) = 0
    // sum_k sum_l cs[k][l] * a_{n-l+k} * (n-l+k)!/(n-l)! = 0 -> solve a_{n+r}
    for (int n = 0; (int)a.size() < terms; ++n) {
      Complex s(prec_);
      for (int k = 0; k <= r; ++k) {
        for (int l = 0; l < (int)cs[k].size(); ++l) {
          int idx = n - l + k;
          if (idx < 0 || idx >= (int)a.size()) continue;
          if (k == r && l == 0) continue;  // the unknown term
          // multiply by falling factorial idx*(idx-1)*..*(idx-k+1)
          Int fall = 1;
          for (int q2 = 0; q2 < k; ++q2) fall *= (idx - q2);
          if (fall == 0) continue;
          s += Real(fall, prec_) * (cs[k][l] * a[idx]);
        }
      }
      Int falln = 1;
      for (int q2 = 0; q2 < r; ++q2) falln *= (n + r - q2);
      Complex leadc = Real(falln, prec_) * cs[r][0];
      a.push_back(-(s / leadc));
    }
    // evaluate derivatives at u = t
    for (int k = 0; k < r; ++k) {
      Complex v(prec_);
      for (int n = (int)a.size() - 1; n >= k; --n) {
        Int fall = 1;
        for (int q2 = 0; q2 < k; ++q2) fall *= (n - q2);
        v = v * t + Real(fall, prec_) * a[n];
      }
      out.at(k, col) = v;
    }
  }
  return out;
}

CMatrix Transporter::transport(CMatrix Y, const std::vector<Complex>& path) const {
  double digits = prec_ * 0.30103;
  for (size_t leg = 0; leg + 1 < path.size(); ++leg) {
    Complex x0 = path[leg];
    Complex x1 = path[leg + 1];
    for (;;) {
      Real seg = abs(x1 - x0);
      if (seg.to_double() < 1e-300) break;
      Real d = dist_to_singular(x0);
      double dd = d.to_double();
      double h = 0.4 * dd;
      Complex next = x1;
      double segd = seg.to_double();
      bool final_step = segd <= h;
      if (!final_step) {
        Real scale = Real(h / segd, prec_);
        next = x0 + Complex(scale * (x1 - x0).re, scale * (x1 - x0).im);
      }
      double rho = std::min(abs(next - x0).to_double() / dd, 0.9);
      int terms =
          rho <= 0 ? 32 : (int)(digits * std::log(10.0) / -std::log(rho)) + 16;
      terms = std::max(terms, 24);
      Y = step(x0, Y, next, terms + r_);
      x0 = next;
      if (final_step) break;
    }
  }
  return Y;
}

namespace {

// (d/dx)^d of log(x)^p at real x > 0, for d < n
std::vector<Real> logpow_derivs(int p, const Real& x, int n, mpfr_prec_t prec) {
  Real lx = log(x);
  std::map<std::pair<int, int>, Rat> terms;  // (q, m) -> coef: coef*log^q/x^m
  terms[{p, 0}] = 1;
  std::vector<Real> out;
  for (int d = 0; d < n; ++d) {
    Real v(prec);
    for (auto& [qm, co] : terms) {
      auto [q, m] = qm;
      Real t(co, prec);
      for (int i = 0; i < q; ++i) t *= lx;
      Real xi(1.0, prec);
      for (int i = 0; i < m; ++i) xi *= x;
      v += t / xi;
    }
    out.push_back(v);
    std::map<std::pair<int, int>, Rat> next;
    for (auto& [qm, co] : terms) {
      auto [q, m] = qm;
      if (q > 0) next[{q - 1, m + 1}] += co * q;
      next[{q, m + 1}] -= co * m;
    }
    terms = std::move(next);
  }
  return out;
}

}  // namespace

CMatrix Transporter::frobenius_values(const FrobeniusBasis& fb, const Real& x) const {
  int r = r_;
  // series values and derivatives of each wreg
  size_t N = fb.wreg[0].length();
  std::vector<std::vector<Real>> vals(r, std::vector<Real>(r, Real(prec_)));
  for (int j = 0; j < r; ++j)
    for (int d = 0; d < r; ++d) {
      // Horner over n from the top: sum_n a_n * n!/(n-d)! x^{n-d}
      Real acc(0.0, prec_);
      for (size_t n = N; n-- > (size_t)d;) {
        Int fall = 1;
        for (int q2 = 0; q2 < d; ++q2) fall *= (long)(n - q2);
        acc = acc * x + Real(fb.wreg[j][n] * Rat(fall), prec_);
      }
      vals[j][d] = acc;
    }
  CMatrix Y(r, prec_);
  for (int k = 0; k < r; ++k) {
    for (int j = 0; j <= k; ++j) {
      Int ckj = binomial(k, j);
      int p = k - j;
      auto Ld = logpow_derivs(p, x, r, prec_);
      for (int d = 0; d < r; ++d) {
        Real s(prec_);
        for (int t = 0; t <= d; ++t) s += Real(Int(binomial(d, t) * ckj), prec_) * vals[j][t] * Ld[d - t];
        Y.at(d, k) += Complex(s, Real(0.0, prec_));
      }
    }
  }
  return Y;
}

std::vector<Complex> Transporter::loop(const Real& base, const Complex& p,
                                       double radius_frac) const {
  double pb = base.to_double();
  double px = p.re.to_double(), py = p.im.to_double();
  double dmin = 1e300;
  for (auto& s : sing_) {
    double d = std::hypot(s.re.to_double() - px, s.im.to_double() - py);
    if (d > 1e-18 && d < dmin) dmin = d;
  }
  double R = radius_frac * dmin;
  double H = std::max(0.3 * std::abs(px - pb), 0.05);
  auto C = [&](double re, double im) { return Complex::of(re, im, prec_); };
  std::vector<Complex> pts = {C(pb, 0), C(pb, H), C(px, H), C(px, py + R)};
  int M = 12;
  for (int k = 1; k <= M; ++k) {
    double th = M_PI / 2 + 2 * M_PI * k / M;
    pts.push_back(C(px + R * std::cos(th), py + R * std::sin(th)));
  }
  pts.push_back(C(px, H));
  pts.push_back(C(pb, H));
  pts.push_back(C(pb, 0));
  return pts;
}

std::vector<Complex> Transporter::outer_loop(const Real& base) const {
  double R = 0;
  for (auto& s : sing_) R = std::max(R, abs(s).to_double());
  R *= 2.0;
  double pb = base.to_double();
  auto C = [&](double re, double im) { return Complex::of(re, im, prec_); };
  // rise vertically, then a full counterclockwise circle, then descend
  std::vector<Complex> pts = {C(pb, 0), C(pb, R)};
  int M = 24;
  for (int k = 0; k <= M; ++k) {
    double th = M_PI / 2 + 2 * M_PI * k / M;
    pts.push_back(C(R * std::cos(th), R * std::sin(th)));
  }
  pts.push_back(C(pb, R));
  pts.push_back(C(pb, 0));
  return pts;
}

std::vector<Complex> Transporter::path_to(const Real& base, const Complex& target) const {
  // rise above the singularities, cross at a safe height, descend
  double H = 0;
  for (auto& s : sing_) H = std::max(H, std::abs(s.re.to_double()) * 0.4);
  H = std::max(H, 1.0);
  auto C = [&](double re, double im) { return Complex::of(re, im, prec_); };
  double pb = base.to_double();
  double tx = target.re.to_double(), ty = target.im.to_double();
  return {C(pb, 0), C(pb, H), C(tx, H), C(tx, ty)};
}

}  // namespace mcy
