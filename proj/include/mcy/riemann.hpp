#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcy/operator.hpp"

namespace mcy {

// One singular point of the scheme. Rational points carry `value`; conjugate
// algebraic points share `min_poly` (coefficients low-to-high) and are
// distinguished by the real approximation.
struct SchemePoint {
  bool at_infinity = false;
  std::optional<Rat> value;
  std::vector<Int> min_poly;
  double approx = 0.0;
  std::vector<Rat> exponents;  // sorted, with multiplicity
  bool regular = true;
};

struct RiemannScheme {
  std::vector<SchemePoint> points;  // finite points sorted by approx, then infinity
};

RiemannScheme riemann_scheme(const ThetaOperator& op);

// d-form coefficients: D = sum_k C_k(x) (d/dx)^k with C_k = x^k * (integer
// polynomial); returns those integer polynomials (coefficient lists).
std::vector<std::vector<Int>> dform_reduced(const ThetaOperator& op);

// Indicial polynomial at x = 0 (coefficients of s^0..s^r).
std::vector<Rat> indicial_at_zero(const ThetaOperator& op);

bool is_mum_point_at_zero(const ThetaOperator& op);

}  // namespace mcy
