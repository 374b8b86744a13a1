#pragma once

#include <vector>

#include "mcy/operator.hpp"
#include "mcy/rootsystem.hpp"

namespace mcy {

// Quantum multiplication by the hyperplane class on the Schubert basis of a
// minuscule W^Q: M(q) = A + q B with A the Chevalley cover matrix and B the
// quantum corrections. The q-entries connect w to the element obtained by the
// unique color-preserving translation of the poset complement; each entry
// drops the length grading by h_P - 1, so deg q = h_P exactly.
struct QuantumConnection {
  const WQLattice* lattice;
  std::vector<std::pair<int, int>> classical;  // (v, w): w covers v
  std::vector<std::pair<int, int>> quantum;    // (w, v): q-term from w to v
};

QuantumConnection quantum_chevalley(const WQLattice& L);

// Fundamental-class component of the flat sections of theta S = M(q)^T S.
Series flat_section_component(const QuantumConnection& qc, int terms);

// Scalar quantum operator annihilating that component.
FitResult scalar_reduction(const QuantumConnection& qc, int max_order, int max_degree);

}  // namespace mcy
