#pragma once

#include <vector>

#include "mcy/poset.hpp"

namespace mcy {

// l(k Delta(P)): number of order-preserving maps P -> {0..k}.
Int lattice_points(const Poset& p, int k);

// Interior poset P' of a contraction (fibers avoiding the bounds, induced
// order); the face theta_f is the order polytope of P'.
Poset contraction_interior_poset(const BoundedPoset& bp, const Contraction& c);

// l*(k theta_f): maps Phat' -> {0..k} with x(0hat)=0, x(1hat)=k, strictly
// increasing along Hasse edges of Phat'.
Int interior_points_face(const BoundedPoset& bp, const Contraction& c, int k);

// Strict order-preserving maps of p into {1..k} (empty poset counts 1).
Int strict_maps(const Poset& p, int k);

Int hibi_degree(const Poset& p);

struct HibiSingularComponent {
  Contraction contraction;
  int codim;
  Int degree;
};
std::vector<HibiSingularComponent> singular_components(const Poset& p);

struct GorensteinInfo {
  bool gorenstein;
  int fano_index;  // h_P when Gorenstein
};
GorensteinInfo gorenstein_terminal(const Poset& p);

// One binomial generator p_tau p_phi - p_meet p_join per incomparable pair.
struct HibiBinomial {
  size_t tau, phi, meet, join;  // lattice indices
};
std::vector<HibiBinomial> hibi_ideal_generators(const DistributiveLattice& L);

// Exact Ehrhart polynomial of Delta(P) by Lagrange interpolation on 0..|P|;
// coefficients of k^0..k^|P|.
std::vector<Rat> ehrhart_polynomial(const Poset& p);

struct NefPartition {
  std::vector<std::vector<int>> bands;  // E^k, k = 1..h_P (edge indices)
  std::vector<std::vector<int>> parts;  // E_j, j = 1..r
  std::vector<int> degrees;
};
NefPartition nef_partition(const Poset& p, const std::vector<int>& degrees);

struct DeltaMap {
  // per edge of Phat: vector in Z^P (+1 at t(e), -1 at s(e), bounds dropped)
  std::vector<std::vector<int>> delta;
};
DeltaMap dual_data(const Poset& p);

}  // namespace mcy
