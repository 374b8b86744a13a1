#pragma once

#include <vector>

#include "mcy/poset.hpp"

namespace mcy {

// Complete intersection of degrees (d_1..d_r) in the Hibi/Schubert variety of
// a pure poset P, with sum d_j = h_P and r = |P| - 3 for 3-folds.
struct CicyInstance {
  Poset poset;
  std::vector<int> degrees;

  static CicyInstance make(Poset p, std::vector<int> degrees);
  int r() const { return (int)degrees.size(); }
};

struct InvariantReport {
  Int deg;
  Int chi_o1;   // chi(O_X(1))
  Int c2_h;
  Int h11_y;
  Int h21_y;
  Int chi_y;
  Int nodes;    // p
  Int chi_x;
  Int h21_x;    // conifold bookkeeping, Picard-rank-one cases
};

Int degree_ci(const CicyInstance& inst);
Int chi_o1(const CicyInstance& inst);
Int c2h(const CicyInstance& inst);

struct StringyH1 {
  Int h11;
  Int h1_last;        // h^{1,|P|-r-1}
  bool middle_zero;   // h^{1,k} = 0 for 1 < k < |P|-r-1
};
StringyH1 stringy_h1(const CicyInstance& inst);

Int node_count(const CicyInstance& inst);
Int euler_number(const CicyInstance& inst);

InvariantReport invariant_report(const CicyInstance& inst);

}  // namespace mcy
