#include "mcy/frobenius.hpp"

#include <stdexcept>

#include "mcy/riemann.hpp"

namespace mcy {

namespace {

// truncated jets in eps of length r
using Jet = std::vector<Rat>;

Jet jet_mul(const Jet& a, const Jet& b) {
  size_t r = a.size();
  Jet c(r, Rat(0));
  for (size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < r; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Jet jet_inv(const Jet& b) {
  size_t r = b.size();
  if (b[0] == 0) throw std::runtime_error("jet not invertible");
  Jet inv(r, Rat(0));
  inv[0] = 1 / b[0];
  for (size_t k = 1; k < r; ++k) {
    Rat s(0);
    for (size_t i = 1; i <= k; ++i) s += b[i] * inv[k - i];
    inv[k] = -s / b[0];
  }
  return inv;
}

}  // namespace

FrobeniusBasis frobenius_basis(const ThetaOperator& op, int terms) {
  if (!is_mum_point_at_zero(op))
    throw std::invalid_argument("x = 0 is not a MUM point of the operator");
  int r = op.order();
  int D = op.degree();
  // A_m(eps) as jets; A_0 = 1
  std::vector<Jet> A;
  A.push_back(Jet(r, Rat(0)));
  A[0][0] = 1;
  auto Pi_jet = [&](int i, long m) {
    // P_i(m + eps) as a jet: Horner over theta powers
    Jet acc(r, Rat(0));
    Jet s(r, Rat(0));
    s[0] = Rat(m);
    if (r >= 2) s[1] = 1;
    for (int j = op.order(); j >= 0; --j) {
      acc = jet_mul(acc, s);
      acc[0] += Rat(op.coeff(i, j));
    }
    return acc;
  };
  for (int m = 1; m <= terms; ++m) {
    Jet s(r, Rat(0));
    for (int i = 1; i <= std::min(m, D); ++i) {
      Jet t = jet_mul(Pi_jet(i, m - i), A[m - i]);
      for (int k = 0; k < r; ++k) s[k] += t[k];
    }
    Jet den = Pi_jet(0, m);
    Jet Am = jet_mul(s, jet_inv(den));
    for (auto& v : Am) v = -v;
    A.push_back(std::move(Am));
  }
  FrobeniusBasis fb;
  Rat kfact(1);
  for (int k = 0; k < r; ++k) {
    if (k) kfact *= Rat(k);
    std::vector<Rat> c(terms + 1);
    for (int m = 0; m <= terms; ++m) c[m] = kfact * A[m][k];
    fb.wreg.emplace_back(std::move(c));
  }
  return fb;
}

}  // namespace mcy
