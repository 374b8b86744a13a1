#pragma once

#include <string>
#include <vector>

#include "mcy/numbers.hpp"
#include "mcy/series.hpp"

namespace mcy {

// Differential operator sum_{i,j} c[i][j] x^i theta^j with theta = x d/dx,
// integer coefficients, content 1, trailing zero rows/columns trimmed.
class ThetaOperator {
 public:
  ThetaOperator() = default;
  explicit ThetaOperator(std::vector<std::vector<Int>> c) { assign(std::move(c)); }

  int degree() const { return (int)c_.size() - 1; }   // max power of x
  int order() const { return c_.empty() ? -1 : (int)c_[0].size() - 1; }
  const Int& coeff(int i, int j) const { return c_[i][j]; }
  const std::vector<std::vector<Int>>& table() const { return c_; }

  // P_i(s) = sum_j c[i][j] s^j evaluated exactly.
  Rat theta_poly_at(int i, const Rat& s) const;

  Series apply(const Series& s) const;

  ThetaOperator operator+(const ThetaOperator& o) const;
  ThetaOperator operator*(const ThetaOperator& o) const;  // composition
  ThetaOperator scaled(const Int& k) const;

  // substitution x = c/z followed by the gauge shift theta -> theta + 1
  // (moves exponents (1,1,1,1) at infinity to a MUM point at z = 0).
  ThetaOperator invert_and_conjugate(const Rat& c) const;

  // x -> c*x rescaling.
  ThetaOperator rescale(const Rat& c) const;

  // content 1, first nonzero coefficient positive (scanning x^0 upward,
  // highest theta power first).
  ThetaOperator canonical() const;

  bool operator==(const ThetaOperator& o) const { return c_ == o.c_; }

  std::string to_json() const;
  static ThetaOperator from_json(const std::string& text);

  static ThetaOperator theta_power(int j);
  // (a*theta + b) as a factor
  static ThetaOperator affine(const Int& a, const Int& b);
  static ThetaOperator x_power(int i);

 private:
  void assign(std::vector<std::vector<Int>> c);
  void normalize();
  std::vector<std::vector<Int>> c_;
};

// Minimal-order-then-degree exact annihilator of a rational series, found by
// fraction-free nullspace over the ansatz grid; requires a one-dimensional
// nullspace at the winning grid size.
struct FitResult {
  ThetaOperator op;
  int order, degree;
};
FitResult fit_operator(const Series& s, int max_order, int max_degree);

// Exact rational nullspace of the matrix (rows of Rat); basis vectors.
std::vector<std::vector<Rat>> rational_nullspace(const std::vector<std::vector<Rat>>& rows,
                                                 size_t ncols);

}  // namespace mcy
