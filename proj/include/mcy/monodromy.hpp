#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcy/continuation.hpp"
#include "mcy/operator.hpp"

namespace mcy {

using IMatrix = std::vector<std::vector<Int>>;

// Monodromy matrices of a rank-4 MUM operator in the Frobenius basis, one
// counterclockwise loop per finite singular point (ordered along the real
// line) plus the outer loop.
struct FrobeniusMonodromy {
  std::vector<double> points;       // finite singular points, ascending
  std::vector<CMatrix> loops;       // same order
  CMatrix outer;                    // big counterclockwise circle
  Real base = Real(64);             // base point
  mpfr_prec_t prec;
};

FrobeniusMonodromy monodromy_in_frobenius_basis(const ThetaOperator& op, int digits,
                                                int series_terms = 0);

struct SymplecticNormalization {
  Int deg, c2h, chi;
  Rat a;
};

struct MonodromyReport {
  SymplecticNormalization norm;
  std::vector<double> points;
  std::vector<IMatrix> matrices;  // integral monodromies, same order as points
  IMatrix outer;                  // at infinity
  double max_int_error;           // worst distance to an integer entry
  bool product_identity;          // left-to-right product times outer == id
  bool mum_maximally_unipotent;   // (M0 - 1)^4 = 0, (M0 - 1)^3 != 0
  std::optional<IMatrix> invariant_symplectic_form;
};

// Conjugates the Frobenius monodromies into the would-be integral symplectic
// basis for the given invariants; returns matrices and the error.
MonodromyReport integral_monodromy(const FrobeniusMonodromy& fm, const Int& deg,
                                   const Int& c2h, const Int& chi, const Rat& a);

// Scans a over deg/2 + Z (ordered by |a|, negative first) for full
// integrality of all loops at the stated tolerance.
std::optional<MonodromyReport> integral_basis_search(const FrobeniusMonodromy& fm,
                                                     const Int& deg, const Int& c2h,
                                                     const Int& chi, double tol = 1e-20,
                                                     int a_range = 30);

// Scan deg in [1..deg_max]: c2h and chi candidates are read off the vanishing
// direction of the conifold point nearest to the MUM point, then verified by
// full integrality. Returns all successful normalizations.
std::vector<MonodromyReport> partner_invariant_scan(const FrobeniusMonodromy& fm, int deg_max,
                                                    double tol = 1e-20);

struct ConnectionResult {
  IMatrix s_xz;
  int n_z;  // the sign/normalizer making the matrix integral
  double max_int_error;
  bool unimodular;
};

// Connection matrix between the integral bases at the two MUM points of the
// operator pair (op at x=0, its inversion-conjugate at z=0), along an
// upper-half-plane path.
ConnectionResult connection_matrix(const ThetaOperator& op_x, const ThetaOperator& op_z,
                                   const SymplecticNormalization& nx,
                                   const SymplecticNormalization& nz, const Rat& c,
                                   int digits);

// Helper: the exact MUM monodromy prediction in the integral basis.
IMatrix mum_monodromy_formula(const Int& deg, const Int& c2h, const Rat& a);

}  // namespace mcy
