#pragma once

#include <vector>

#include "mcy/frobenius.hpp"
#include "mcy/operator.hpp"
#include "mcy/series.hpp"

namespace mcy {

struct MirrorMap {
  Series q_of_x;  // q(x) = x exp(w1reg/w0)
  Series x_of_q;  // compositional inverse
};

MirrorMap mirror_map(const FrobeniusBasis& fb, int terms);

// Normalized Yukawa coupling K_ttt(q) for a 4th-order MUM operator with the
// given degree normalization.
Series yukawa(const ThetaOperator& op, const Int& deg, const FrobeniusBasis& fb, int terms);

// Genus-0 BPS numbers from the Lambert expansion
// K = deg + sum_d n0(d) d^3 q^d/(1-q^d); throws if any n0 is not an integer.
std::vector<Int> bps_genus0(const Series& k_ttt, const Int& deg, int dmax);

// Full pipeline: operator + degree -> n0(1..dmax).
std::vector<Int> bps_from_operator(const ThetaOperator& op, const Int& deg, int dmax);

}  // namespace mcy
