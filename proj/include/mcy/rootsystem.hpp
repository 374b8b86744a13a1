#pragma once

#include <string>
#include <vector>

#include "mcy/poset.hpp"

namespace mcy {

// Simply laced root systems in the fundamental-weight basis: a weight is the
// vector of pairings (alpha_i^vee, mu), and s_i subtracts mu_i times the i-th
// column of the Cartan matrix.
struct RootSystem {
  char family;  // 'A', 'D', 'E'
  int rank;
  std::vector<std::vector<int>> cartan;

  static RootSystem make(char family, int rank);
  bool is_minuscule_node(int node) const;  // Bourbaki labels, 1-based
  int pairing(int i, int j) const { return cartan[i - 1][j - 1]; }  // (a_i^vee, a_j)
};

// Bruhat lattice of W^Q for a minuscule node: elements tagged by weights,
// index 0 = identity coset (highest weight); covers go up in length.
struct WQLattice {
  RootSystem rs;
  int node;
  std::vector<std::vector<int>> weights;          // per element
  std::vector<int> length;                        // l(w)
  std::vector<std::tuple<int, int, int>> covers;  // (upper, lower, simple root)
  // join-irreducible data
  std::vector<int> ji;                     // element indices, sorted
  std::vector<int> color_of_ji;            // simple root per ji element
  std::vector<uint64_t> ideal;             // per element: mask over ji positions
  Poset ji_poset;                          // minuscule poset P_Q (ids "u<k>")
  std::vector<int> ji_color;               // color per ji_poset index

  size_t size() const { return weights.size(); }
  int top() const;  // longest element
  bool leq(int a, int b) const { return (ideal[a] & ~ideal[b]) == 0; }

  // The element reached by applying the word (digits, applied right to left)
  // to the highest weight; throws if the result leaves the orbit.
  int element_of_word(const std::string& digits) const;

  // Order ideal poset P_w for an element, with colors; ids match ji_poset.
  Poset minuscule_poset(int w) const;
  std::vector<int> poset_colors(int w) const;  // per index of minuscule_poset(w)
};

WQLattice generate_wq(const RootSystem& rs, int node);

// Sampled distributivity check (join/meet on ideals); throws on failure.
void check_distributive(const WQLattice& L);

}  // namespace mcy
