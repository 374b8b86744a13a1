#include "mcy/monodromy.hpp"

#include <algorithm>
#include <cmath>

#include "mcy/frobenius.hpp"
#include "mcy/riemann.hpp"

namespace mcy {

namespace {

// T(kappa, beta, gamma, a) acting on the 1/(2 pi i)^k-scaled Frobenius basis.
CMatrix normalization_matrix(const Int& deg, const Int& c2h, const Int& chi, const Rat& a,
                             mpfr_prec_t prec) {
  Real pi = Real::pi(prec);
  Real z3 = zeta3(prec);
  // kappa = -deg, beta = -c2h, gamma = -n3 zeta3 chi with n3 = 1/(2 pi i)^3.
  // (2 pi i)^3 = -8 pi^3 i, so n3 = i/(8 pi^3) and gamma is purely imaginary:
  // gamma = -i * zeta3 * chi / (8 pi^3).
  Real kappa = Real(Int(-deg), prec);
  Real beta = Real(Int(-c2h), prec);
  Real gamma_im = -(z3 * Real(chi, prec)) / (Real(8.0, prec) * pi * pi * pi);
  CMatrix T(4, prec);
  auto R = [&](double v) { return Real(v, prec); };
  auto set = [&](int i, int j, Real re, Real im) { T.at(i, j) = Complex(re, im); };
  set(0, 0, R(1), R(0));
  set(1, 1, R(1), R(0));
  set(2, 0, beta / R(24), R(0));
  set(2, 1, Real(a, prec), R(0));
  set(2, 2, -kappa / R(2), R(0));
  set(3, 0, R(0), gamma_im);
  set(3, 1, beta / R(24), R(0));
  set(3, 3, kappa / R(6), R(0));
  return T;
}

CMatrix scale_to_u_basis(mpfr_prec_t prec) {
  // diag(1/(2 pi i)^k): (2 pi i)^k cycles 1, 2pi i, -4pi^2, -8pi^3 i
  Real pi = Real::pi(prec);
  Real tp = Real(2.0, prec) * pi;
  CMatrix N(4, prec);
  auto R = [&](double v) { return Real(v, prec); };
  N.at(0, 0) = Complex(R(1), R(0));
  N.at(1, 1) = Complex(R(0), R(-1) / tp);               // 1/(2pi i)
  N.at(2, 2) = Complex(R(-1) / (tp * tp), R(0));        // 1/(2pi i)^2
  N.at(3, 3) = Complex(R(0), R(1) / (tp * tp * tp));    // 1/(2pi i)^3
  return N;
}

double integrality_error(const CMatrix& m, IMatrix* rounded) {
  double worst = 0;
  if (rounded) rounded->assign(m.n, std::vector<Int>(m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) {
      Int z = m.at(i, j).re.to_int_rounded();
      Real dre = m.at(i, j).re - Real(z, m.at(i, j).re.prec());
      double err = std::max(std::abs(dre.to_double()), std::abs(m.at(i, j).im.to_double()));
      worst = std::max(worst, err);
      if (rounded) (*rounded)[i][j] = z;
    }
  return worst;
}

IMatrix imat_mul(const IMatrix& a, const IMatrix& b) {
  size_t n = a.size();
  IMatrix c(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool imat_is_identity(const IMatrix& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != Int(i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace

IMatrix mum_monodromy_formula(const Int& deg, const Int& c2h, const Rat& a) {
  // T L T^{-1} for the Pascal matrix L in the scaled Frobenius basis:
  // entries below require a - kappa/2 and beta/12 + kappa/6 integral.
  Rat kappa = Rat(-deg), beta = Rat(-c2h);
  auto as_int = [](const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() != 1) throw std::runtime_error("MUM formula entry not integral");
    return Int(c.get_num());
  };
  IMatrix m(4, std::vector<Int>(4, Int(0)));
  for (int i = 0; i < 4; ++i) m[i][i] = 1;
  m[1][0] = 1;
  m[2][0] = as_int(a - kappa / 2);
  m[2][1] = as_int(-kappa);
  m[3][0] = as_int(beta / 12 + kappa / 6);
  m[3][1] = as_int(kappa / 2 + a);
  m[3][2] = -1;
  return m;
}

FrobeniusMonodromy monodromy_in_frobenius_basis(const ThetaOperator& op, int digits,
                                                int series_terms) {
  if (op.order() != 4) throw std::invalid_argument("expected a 4th-order operator");
  if (!is_mum_point_at_zero(op)) throw std::invalid_argument("x = 0 must be a MUM point");
  mpfr_prec_t prec = (mpfr_prec_t)(digits * 3.33) + 64;
  FrobeniusMonodromy fm;
  fm.prec = prec;
  Transporter tr(op, prec);
  auto reals = tr.real_singular_points();
  double smallest_pos = 0;
  for (double s : reals)
    if (s > 1e-300 && (smallest_pos == 0 || s < smallest_pos)) smallest_pos = s;
  if (smallest_pos == 0) throw std::runtime_error("no positive singular point for the base");
  fm.base = Real(smallest_pos / 2, prec);

  if (series_terms == 0) series_terms = (int)(digits * 3.4) + 80;
  FrobeniusBasis fb = frobenius_basis(op, series_terms);
  CMatrix Y0 = tr.frobenius_values(fb, fm.base);

  for (double p : reals) {
    fm.points.push_back(p);
    auto path = tr.loop(fm.base, Complex::of(p, 0, prec), 0.25);
    CMatrix Y = tr.transport(Y0, path);
    fm.loops.push_back((Y0.inverse() * Y).transpose());
  }
  CMatrix Yo = tr.transport(Y0, tr.outer_loop(fm.base));
  fm.outer = (Y0.inverse() * Yo).transpose();
  return fm;
}

MonodromyReport integral_monodromy(const FrobeniusMonodromy& fm, const Int& deg,
                                   const Int& c2h, const Int& chi, const Rat& a) {
  mpfr_prec_t prec = fm.prec;
  CMatrix T = normalization_matrix(deg, c2h, chi, a, prec);
  CMatrix N = scale_to_u_basis(prec);
  CMatrix G = T * N;
  CMatrix Gi = G.inverse();
  MonodromyReport rep;
  rep.norm = {deg, c2h, chi, a};
  rep.points = fm.points;
  rep.max_int_error = 0;
  for (auto& M : fm.loops) {
    IMatrix zi;
    double err = integrality_error(G * M * Gi, &zi);
    rep.max_int_error = std::max(rep.max_int_error, err);
    rep.matrices.push_back(std::move(zi));
  }
  {
    IMatrix zi;
    // outer ccw loop equals the left-to-right product of the finite loops;
    // the loop at infinity is its inverse.
    double err = integrality_error((G * fm.outer * Gi).inverse(), &zi);
    rep.max_int_error = std::max(rep.max_int_error, err);
    rep.outer = std::move(zi);
  }
  // product identity: finite loops left to right, then the loop at infinity
  IMatrix prod = rep.matrices.empty() ? IMatrix() : rep.matrices[0];
  for (size_t i = 1; i < rep.matrices.size(); ++i) prod = imat_mul(prod, rep.matrices[i]);
  prod = imat_mul(prod, rep.outer);
  rep.product_identity = imat_is_identity(prod);
  // MUM unipotency at the loop around 0
  rep.mum_maximally_unipotent = false;
  for (size_t i = 0; i < rep.points.size(); ++i) {
    if (std::abs(rep.points[i]) > 1e-300) continue;
    IMatrix m = rep.matrices[i];
    for (int d = 0; d < 4; ++d) m[d][d] -= 1;
    IMatrix m2 = imat_mul(m, m);
    IMatrix m3 = imat_mul(m2, m);
    IMatrix m4 = imat_mul(m3, m2.size() ? m : m);
    bool z3 = true, z4 = true;
    for (auto& row : m3)
      for (auto& v : row)
        if (v != 0) z3 = false;
    for (auto& row : m4)
      for (auto& v : row)
        if (v != 0) z4 = false;
    rep.mum_maximally_unipotent = z4 && !z3;
  }
  // invariant antisymmetric form: solve S with M^T S M = S for all M
  {
    // unknowns: s01 s02 s03 s12 s13 s23
    std::vector<std::vector<Rat>> rows;
    auto idx = [](int i, int j) {
      static const int map[4][4] = {{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {}};
      return map[i][j];
    };
    auto add_constraints = [&](const IMatrix& M) {
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b = a2 + 1; b < 4; ++b) {
          std::vector<Rat> row(6, Rat(0));
          // (M^T S M)_{a b} - S_{a b} = 0
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
              if (i == j) continue;
              int k = i < j ? idx(i, j) : idx(j, i);
              Rat sign = i < j ? Rat(1) : Rat(-1);
              row[k] += sign * Rat(M[i][a2] * M[j][b]);
            }
          int k0 = idx(a2, b);
          row[k0] -= 1;
          rows.push_back(std::move(row));
        }
    };
    for (auto& M : rep.matrices) add_constraints(M);
    auto ker = rational_nullspace(rows, 6);
    if (ker.size() >= 1) {
      // scale to integers; prefer a unimodular representative when available
      auto v = ker[0];
      Int den = 1;
      for (auto& x : v) den = lcm(den, Int(x.get_den()));
      Int g = 0;
      std::vector<Int> iv;
      for (auto& x : v) {
        Rat w = x * Rat(den);
        w.canonicalize();
        iv.push_back(Int(w.get_num()));
        g = gcd(g, iv.back());
      }
      if (g != 0)
        for (auto& x : iv) x /= g;
      IMatrix S(4, std::vector<Int>(4, Int(0)));
      int pos = 0;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          S[i][j] = iv[pos];
          S[j][i] = -iv[pos];
          ++pos;
        }
      rep.invariant_symplectic_form = S;
    }
  }
  return rep;
}

std::optional<MonodromyReport> integral_basis_search(const FrobeniusMonodromy& fm,
                                                     const Int& deg, const Int& c2h,
                                                     const Int& chi, double tol, int a_range) {
  // candidates a in deg/2 + Z ordered by |a|, negative first on ties
  std::vector<Rat> cands;
  for (int t = -a_range; t <= a_range; ++t) cands.push_back(Rat(deg, 2) + t);
  std::sort(cands.begin(), cands.end(), [](const Rat& x, const Rat& y) {
    Rat ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
    if (ax != ay) return ax < ay;
    return x < y;
  });
  for (auto& a : cands) {
    auto rep = integral_monodromy(fm, deg, c2h, chi, a);
    if (rep.max_int_error < tol) return rep;
  }
  return std::nullopt;
}

std::vector<MonodromyReport> partner_invariant_scan(const FrobeniusMonodromy& fm, int deg_max,
                                                    double tol) {
  mpfr_prec_t prec = fm.prec;
  // vanishing direction at the conifold nearest to the MUM point: smallest
  // positive singular point
  int nearest = -1;
  for (size_t i = 0; i < fm.points.size(); ++i)
    if (fm.points[i] > 1e-300 && (nearest < 0 || fm.points[i] < fm.points[nearest]))
      nearest = (int)i;
  if (nearest < 0) throw std::runtime_error("no conifold right of the MUM point");
  // rank-one part of M - I in the scaled (u) basis: w column spans the image
  CMatrix N = scale_to_u_basis(prec);
  CMatrix M = N * fm.loops[nearest] * N.inverse();
  // find the largest column of M - I
  CMatrix R(4, prec);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      R.at(i, j) = M.at(i, j);
      if (i == j) R.at(i, j) = R.at(i, j) - Complex(Real(1.0, prec), Real(0.0, prec));
    }
  int bc = 0;
  double best = -1;
  for (int j = 0; j < 4; ++j) {
    double s = 0;
    for (int i = 0; i < 4; ++i) s += std::abs(R.at(i, j).re.to_double()) +
                                     std::abs(R.at(i, j).im.to_double());
    if (s > best) best = s, bc = j;
  }
  std::vector<Complex> w;
  for (int i = 0; i < 4; ++i) w.push_back(R.at(i, bc));
  // normalize w0 = 1
  for (int i = 3; i >= 0; --i) w[i] = w[i] / w[0];
  Real pi = Real::pi(prec);
  Real z3v = zeta3(prec);

  std::vector<MonodromyReport> hits;
  for (int deg = 1; deg <= deg_max; ++deg) {
    // beta = 12 kappa w3... with w = (1, 0, w2, w3): beta/24 - kappa/2 w2 = 0,
    // gamma + kappa/6 w3 = 0
    Real kappa = Real(Int(-deg), prec);
    Real beta = Real(12.0, prec) * kappa * w[2].re;
    Real c2h_r = -beta;
    Int c2h = c2h_r.to_int_rounded();
    if (std::abs((c2h_r - Real(c2h, prec)).to_double()) > 1e-6) continue;
    // gamma = -kappa w3 / 6, purely imaginary; chi = gamma / (-n3 zeta3):
    // gamma_im = -zeta3 chi/(8 pi^3) => chi = -8 pi^3 gamma_im / zeta3
    Real gamma_im = -(kappa * w[3].im) / Real(6.0, prec);
    Real chi_r = -(Real(8.0, prec) * pi * pi * pi * gamma_im) / z3v;
    Int chi = chi_r.to_int_rounded();
    if (std::abs((chi_r - Real(chi, prec)).to_double()) > 1e-6) continue;
    auto rep = integral_basis_search(fm, Int(deg), c2h, chi, tol, 25);
    if (rep) hits.push_back(*rep);
  }
  return hits;
}

ConnectionResult connection_matrix(const ThetaOperator& op_x, const ThetaOperator& op_z,
                                   const SymplecticNormalization& nx,
                                   const SymplecticNormalization& nz, const Rat& c,
                                   int digits) {
  mpfr_prec_t prec = (mpfr_prec_t)(digits * 3.33) + 64;
  int terms = (int)(digits * 3.4) + 80;
  Transporter trx(op_x, prec);
  Transporter trz(op_z, prec);
  auto rx = trx.real_singular_points();
  auto rz = trz.real_singular_points();
  double sp_x = 0, sp_z = 0;
  for (double s : rx)
    if (s > 1e-300 && (sp_x == 0 || s < sp_x)) sp_x = s;
  for (double s : rz)
    if (s > 1e-300 && (sp_z == 0 || s < sp_z)) sp_z = s;
  Real xb(sp_x / 2, prec);
  Real zb(sp_z / 2, prec);

  FrobeniusBasis fbx = frobenius_basis(op_x, terms);
  FrobeniusBasis fbz = frobenius_basis(op_z, terms);
  CMatrix Y0X = trx.frobenius_values(fbx, xb);
  CMatrix YZ = trz.frobenius_values(fbz, zb);

  // x* = c / z_b on the far real axis; continue the X fundamental system
  Real xstar_r = Real(c, prec) / zb;
  Complex xstar(xstar_r, Real(0.0, prec));
  CMatrix YX = trx.transport(Y0X, trx.path_to(xb, xstar));

  // Pi^X rows: G_X = T_X N; values and x-derivatives of Pi^X_i at x*
  CMatrix GX = normalization_matrix(nx.deg, nx.c2h, nx.chi, nx.a, prec) * scale_to_u_basis(prec);
  CMatrix GZ = normalization_matrix(nz.deg, nz.c2h, nz.chi, nz.a, prec) * scale_to_u_basis(prec);
  // PX[i][t] = d^t/dx^t Pi^X_i = sum_k GX[i][k] * YX[t][k]
  CMatrix PX(4, prec);
  for (int i = 0; i < 4; ++i)
    for (int t = 0; t < 4; ++t) {
      Complex s(prec);
      for (int k = 0; k < 4; ++k) s += GX.at(i, k) * YX.at(t, k);
      PX.at(i, t) = s;
    }
  // g_j = z * Pi^Z_j: z-derivatives at zb, then chain rule to x with z = c/x
  CMatrix PZ(4, prec);
  for (int j = 0; j < 4; ++j)
    for (int t = 0; t < 4; ++t) {
      Complex s(prec);
      for (int k = 0; k < 4; ++k) s += GZ.at(j, k) * YZ.at(t, k);
      PZ.at(j, t) = s;
    }
  CMatrix G(4, prec);  // G[j][t] = d^t/dz^t (z Pi^Z_j)
  Complex zbc(zb, Real(0.0, prec));
  for (int j = 0; j < 4; ++j) {
    G.at(j, 0) = zbc * PZ.at(j, 0);
    for (int t = 1; t < 4; ++t)
      G.at(j, t) = zbc * PZ.at(j, t) + Real((double)t, prec) * PZ.at(j, t - 1);
  }
  // z = c/x: z' = -c/x^2, z'' = 2c/x^3, z''' = -6c/x^4
  Complex cx(Real(c, prec), Real(0.0, prec));
  Complex x1 = cx / (xstar * xstar);
  x1 = -x1;
  Complex x2 = Real(2.0, prec) * (cx / (xstar * xstar * xstar));
  Complex x3 = -(Real(6.0, prec) * (cx / (xstar * xstar * xstar * xstar)));
  CMatrix GXZ(4, prec);  // x-derivatives of g_j at x*
  for (int j = 0; j < 4; ++j) {
    Complex g1 = G.at(j, 1), g2 = G.at(j, 2), g3 = G.at(j, 3);
    GXZ.at(j, 0) = G.at(j, 0);
    GXZ.at(j, 1) = g1 * x1;
    GXZ.at(j, 2) = g2 * x1 * x1 + g1 * x2;
    GXZ.at(j, 3) = g3 * x1 * x1 * x1 + Real(3.0, prec) * (g2 * x1 * x2) + g1 * x3;
  }
  // PX = N_z * S * GXZ (as functions of x): solve S' = PX * GXZ^{-1}
  CMatrix S = PX * GXZ.inverse();
  ConnectionResult out;
  IMatrix zi;
  double e1 = integrality_error(S, &zi);
  // allow N_z = -1
  CMatrix Sm(4, prec);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) Sm.at(i, j) = -S.at(i, j);
  IMatrix zim;
  double e2 = integrality_error(Sm, &zim);
  if (e2 < e1) {
    out.n_z = -1;
    out.s_xz = zim;
    out.max_int_error = e2;
  } else {
    out.n_z = 1;
    out.s_xz = zi;
    out.max_int_error = e1;
  }
  // determinant +-1
  {
    // 4x4 integer determinant by expansion
    auto det4 = [&](const IMatrix& A) {
      Int d = 0;
      int perm[4] = {0, 1, 2, 3};
      std::vector<int> p = {0, 1, 2, 3};
      std::sort(p.begin(), p.end());
      do {
        int inv = 0;
        for (int i = 0; i < 4; ++i)
          for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
        Int t = 1;
        for (int i = 0; i < 4; ++i) t *= A[i][p[i]];
        d += (inv % 2 ? -t : t);
      } while (std::next_permutation(p.begin(), p.end()));
      (void)perm;
      return d;
    };
    Int d = det4(out.s_xz);
    out.unimodular = (d == 1 || d == -1);
  }
  return out;
}

}  // namespace mcy
