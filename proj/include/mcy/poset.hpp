#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcy/numbers.hpp"

namespace mcy {

// Finite poset on at most 64 elements. Ideals and up/down sets are bitmasks
// over the element indices, covers are stored as (upper, lower) index pairs
// forming the transitive reduction.
class Poset {
 public:
  Poset() = default;

  // covers given as (upper, lower) id pairs. Throws on cycles, duplicate ids,
  // redundant cover pairs, or an embedding inconsistent with the covers.
  static Poset build(std::vector<std::string> ids,
                     const std::vector<std::pair<std::string, std::string>>& covers,
                     const std::map<std::string, std::vector<std::string>>& embedding = {});

  int size() const { return n_; }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int v) const { return ids_[v]; }
  int index(const std::string& id) const;
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  bool less(int a, int b) const { return (below_[b] >> a) & 1; }  // a < b
  bool leq(int a, int b) const { return a == b || less(a, b); }
  uint64_t strictly_below(int a) const { return below_[a]; }
  uint64_t down_set(int a) const { return below_[a] | (uint64_t(1) << a); }
  uint64_t up_set(int a) const;

  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

  // children[u] = elements covered by u, in embedding order when present.
  const std::vector<std::vector<int>>& children() const { return children_; }
  const std::vector<std::vector<int>>& parents() const { return parents_; }
  bool has_embedding() const { return has_embedding_; }

  bool is_ideal(uint64_t mask) const;
  Poset induced(uint64_t mask) const;  // full subposet, covers recomputed
  Poset dual() const;

  bool isomorphic_to(const Poset& other) const;

 private:
  friend struct BoundedPoset;
  int n_ = 0;
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<uint64_t> below_;  // below_[a] = mask of x < a
  std::vector<std::vector<int>> children_, parents_;
  bool has_embedding_ = false;
};

// P together with synthetic bounds; Hasse edges of Phat carry stable indices.
struct BoundedPoset {
  const Poset* base;
  int bot;  // index n
  int top;  // index n + 1
  struct Edge {
    int s;  // upper end
    int t;  // lower end
  };
  std::vector<Edge> edges;

  explicit BoundedPoset(const Poset& p);
  int vertex_count() const { return base->size() + 2; }
  bool is_bound(int v) const { return v == bot || v == top; }
};

struct HeightFunction {
  std::vector<int> h;  // per element of P, minimal element has h = 1
  int h_poset;         // h(1hat)
  bool pure;
};

HeightFunction heights(const Poset& p);

class DistributiveLattice {
 public:
  // All order ideals of p, sorted by (popcount, mask). Guard: at most `guard`
  // ideals (default 10^7).
  static DistributiveLattice order_ideals(const Poset& p, size_t guard = 10000000);

  size_t size() const { return ideals_.size(); }
  uint64_t ideal(size_t i) const { return ideals_[i]; }
  const std::vector<uint64_t>& ideals() const { return ideals_; }
  size_t index_of(uint64_t mask) const;
  const Poset& base() const { return *base_; }

  bool leq(size_t a, size_t b) const {  // ideal containment
    return (ideals_[a] & ~ideals_[b]) == 0;
  }
  size_t join(size_t a, size_t b) const { return index_of(ideals_[a] | ideals_[b]); }
  size_t meet(size_t a, size_t b) const { return index_of(ideals_[a] & ideals_[b]); }

  // covers (upper, lower): J = I + one element
  std::vector<std::pair<size_t, size_t>> cover_pairs() const;

 private:
  const Poset* base_ = nullptr;
  std::vector<uint64_t> ideals_;
  std::map<uint64_t, size_t> pos_;
};

// Join-irreducible elements of J(P) with the induced order; Birkhoff inverse.
Poset join_irreducibles(const DistributiveLattice& L);

Int count_maximal_chains(const DistributiveLattice& L);

// c_0 = 1, c_i = number of chains of i+1 strictly increasing lattice elements.
std::vector<Int> chain_length_counts(const DistributiveLattice& L);

// Contraction of Phat: partition into connected tight fibers; the quotient
// order is kept explicitly.
struct Contraction {
  std::vector<int> fiber;      // fiber id per vertex of Phat (0..n+1)
  int num_fibers;
  int bot_fiber, top_fiber;
  std::vector<int> interior;   // fiber ids avoiding bot and top
  int codim;                   // |P| - #interior

  // Quotient as a bounded-poset Hasse structure: vertices = fibers,
  // edges (s,t) with s covering t.
  std::vector<std::pair<int, int>> quotient_covers;
};

Contraction identity_contraction(const BoundedPoset& bp);

// All contractions of the given codimension (Definition 2.9 validation).
std::vector<Contraction> enumerate_contractions(const BoundedPoset& bp, int codim);

// Contractions where exactly one fiber is a minimal convex cycle and all other
// fibers are singletons. A minimal convex cycle is a convex full subposet
// whose Hasse diagram is a single simple cycle, containing no smaller one.
std::vector<Contraction> minimal_convex_cycles(const BoundedPoset& bp);

// Builds the contraction collapsing exactly the given vertex set of Phat
// (must be valid), all other fibers singletons.
Contraction contraction_from_block(const BoundedPoset& bp, uint64_t block);

// Contract one Hasse edge of Phat (facet contraction).
Contraction facet_contraction(const BoundedPoset& bp, int edge_index);

enum class Direction { Top, Bottom };
Poset extend(const Poset& p, Direction d);

// Strips iterated global maxima/minima; returns the core and the strip count.
std::pair<Poset, int> reduce_extensions(const Poset& p);

}  // namespace mcy
