#pragma once

#include <vector>

#include "mcy/frobenius.hpp"
#include "mcy/operator.hpp"
#include "mcy/real.hpp"

namespace mcy {

// Taylor transport for the fundamental system of a regular-singular operator
// along polygonal paths, with recentering steps bounded by the distance to
// the nearest singularity.
class Transporter {
 public:
  Transporter(const ThetaOperator& op, mpfr_prec_t prec);

  const std::vector<Complex>& singular_points() const { return sing_; }
  std::vector<double> real_singular_points() const;

  // columns = solutions, rows = derivatives y^(k); transports along the path.
  CMatrix transport(CMatrix Y, const std::vector<Complex>& path) const;

  // Fundamental matrix at a real base point from the Frobenius basis:
  // column k carries omega_k and its derivatives.
  CMatrix frobenius_values(const FrobeniusBasis& fb, const Real& x) const;

  // Counterclockwise loop from the base point around p in the upper half
  // plane; radius defaults to a fraction of the nearest-singularity distance.
  std::vector<Complex> loop(const Real& base, const Complex& p, double radius_frac = 0.25) const;

  // Big counterclockwise circle enclosing all finite singular points.
  std::vector<Complex> outer_loop(const Real& base) const;

  // Polyline from the base point to an endpoint through the upper half plane,
  // clearing all singularities.
  std::vector<Complex> path_to(const Real& base, const Complex& target) const;

  int order() const { return r_; }
  mpfr_prec_t prec() const { return prec_; }

 private:
  Real dist_to_singular(const Complex& x) const;
  CMatrix step(const Complex& x0, const CMatrix& Y, const Complex& x1, int terms) const;

  int r_;
  mpfr_prec_t prec_;
  std::vector<std::vector<Int>> dform_;  // C_k(x)/x^k integer polynomials
  std::vector<std::vector<Int>> ck_;     // C_k(x) full polynomials
  std::vector<Complex> sing_;
};

}  // namespace mcy
