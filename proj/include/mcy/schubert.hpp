#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcy/poset.hpp"
#include "mcy/rootsystem.hpp"

namespace mcy {

// Minuscule poset with its coloration by simple roots.
struct ColoredMinusculePoset {
  Poset poset;
  std::vector<int> color;  // per poset index, Bourbaki label
  RootSystem rs;
};

struct PeaksHoles {
  std::vector<int> peaks;
  std::vector<int> holes;
  std::vector<int> essential_holes;
};

PeaksHoles peaks_holes(const ColoredMinusculePoset& cp);

// The order ideal P^u = {v : v not >= u} for a hole u.
uint64_t complement_ideal(const Poset& p, int u);

struct SingularComponent {
  uint64_t ideal_mask;  // P^u as mask
  int dimension;
  Int degree;
  int hole;  // index of the essential hole
};

struct SchubertReport {
  int dimension;
  std::vector<std::string> peaks;
  std::vector<std::string> holes;
  std::vector<std::string> essential_holes;
  std::vector<int> hole_colors;  // colors of essential holes
  bool gorenstein;
  int fano_index;         // h_P when Gorenstein
  bool locally_factorial;  // unique peak
  Int degree;             // maximal chains in J(P_w)
  std::vector<SingularComponent> singular_components;
  int singular_codim;  // min codim over components; -1 if smooth
};

SchubertReport schubert_report(const ColoredMinusculePoset& cp);

ColoredMinusculePoset colored_poset_of(const WQLattice& L, int w);

// One deformation class of a smooth complete-intersection Calabi-Yau 3-fold.
struct CicyClass {
  std::string ambient;       // display name, e.g. "G(2,5)", "P4", "Sigma"
  Poset poset;               // core poset after extension reduction
  std::vector<int> degrees;  // sorted ascending
  SchubertReport report;
};

struct ClassifyOptions {
  int max_rank_a = 12;
  int max_rank_d = 8;
};

// Enumerates all deformation classes of smooth CICY 3-folds in minuscule
// Schubert varieties (Gorenstein ambients, |P| within [h-1, h+3]).
std::vector<CicyClass> classify_cicy3(const ClassifyOptions& opt = {});

}  // namespace mcy
