#pragma once

#include <vector>

#include "mcy/operator.hpp"
#include "mcy/series.hpp"

namespace mcy {

// Frobenius solutions at a MUM point x = 0:
//   omega_k = sum_{j<=k} C(k,j) wreg[j] (log x)^{k-j},   wreg[0] = omega_0,
// with wreg[k] having zero constant term for k >= 1.
struct FrobeniusBasis {
  std::vector<Series> wreg;  // length = order of the operator
  int order() const { return (int)wreg.size(); }
};

FrobeniusBasis frobenius_basis(const ThetaOperator& op, int terms);

}  // namespace mcy
