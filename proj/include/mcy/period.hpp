#pragma once

#include <vector>

#include "mcy/poset.hpp"
#include "mcy/series.hpp"

namespace mcy {

// Fundamental period series of the conjectural mirror family for a degree
// (d_1..d_r) complete intersection: coefficient of x^m is
// prod_j (d_j m)! / m!^{h_P} times the conserved-flow count N(m).

// N(m): band-respecting labeled flow count on the Hasse diagram of Phat.
Int flow_count(const Poset& p, int m);

Series period_flow(const Poset& p, const std::vector<int>& degrees, int terms);

// Planar dual graph of the Hasse diagram of Phat drawn with the bounds at
// +-i*infinity; built from the stored left-to-right children orders.
struct DualGraph {
  int num_faces;
  int b_left, b_right;
  // per Hasse edge of Phat: faces west and east of the edge
  std::vector<std::pair<int, int>> face_lr;  // (west, east)
  std::vector<BoundedPoset::Edge> edges;
};

DualGraph dual_graph(const Poset& p);

Series period_binomial(const Poset& p, const std::vector<int>& degrees, int terms);

// The four-variable binomial sum for the sigma poset printed in the source
// family's literature; used as the production evaluator for that poset.
Int sigma_flow_count(int m);

}  // namespace mcy
