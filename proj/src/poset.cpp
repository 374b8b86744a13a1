#include "mcy/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace mcy {

std::string to_string(const Int& v) { return v.get_str(); }
std::string to_string(const Rat& v) { return v.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

Poset Poset::build(std::vector<std::string> ids,
                   const std::vector<std::pair<std::string, std::string>>& covers,
                   const std::map<std::string, std::vector<std::string>>& embedding) {
  Poset p;
  p.n_ = static_cast<int>(ids.size());
  if (p.n_ > 64) throw std::invalid_argument("poset too large (max 64 elements)");
  p.ids_ = std::move(ids);
  for (int i = 0; i < p.n_; ++i) {
    if (!p.index_.emplace(p.ids_[i], i).second)
      throw std::invalid_argument("duplicate id: " + p.ids_[i]);
  }
  std::vector<std::pair<int, int>> cov;
  for (auto& [u, v] : covers) cov.emplace_back(p.index(u), p.index(v));

  // transitive closure from the raw pairs; cycle check via Kahn
  std::vector<uint64_t> below(p.n_, 0);
  {
    std::vector<std::vector<int>> lower(p.n_);
    std::vector<int> indeg(p.n_, 0);
    for (auto& [u, v] : cov) lower[u].push_back(v), ++indeg[v];
    // Kahn on the reversed relation (edges u->v mean v < u)
    std::vector<int> order, q;
    std::vector<int> deg(p.n_);
    std::vector<std::vector<int>> upper(p.n_);
    for (auto& [u, v] : cov) upper[v].push_back(u);
    for (int i = 0; i < p.n_; ++i) {
      deg[i] = 0;
    }
    for (auto& [u, v] : cov) ++deg[u];
    for (int i = 0; i < p.n_; ++i)
      if (deg[i] == 0) q.push_back(i);
    while (!q.empty()) {
      int x = q.back();
      q.pop_back();
      order.push_back(x);
      for (int y : upper[x])
        if (--deg[y] == 0) q.push_back(y);
    }
    if ((int)order.size() != p.n_) throw std::invalid_argument("cycle detected in covers");
    for (int x : order)
      for (int yv : lower[x]) below[x] |= below[yv] | (uint64_t(1) << yv);
  }
  p.below_ = below;

  // transitive reduction check: a cover (u,v) is redundant iff some w has
  // v < w < u.
  for (auto& [u, v] : cov) {
    uint64_t between = below[u] & ~below[v] & ~(uint64_t(1) << v);
    for (int w = 0; w < p.n_; ++w)
      if ((between >> w) & 1)
        if (p.less(v, w))
          throw std::invalid_argument("redundant cover pair: " + p.ids_[u] + " > " + p.ids_[v]);
  }
  p.covers_ = std::move(cov);

  p.children_.assign(p.n_, {});
  p.parents_.assign(p.n_, {});
  if (!embedding.empty()) {
    p.has_embedding_ = true;
    std::vector<std::vector<int>> want(p.n_);
    for (auto& [u, v] : p.covers_) want[u].push_back(v);
    for (int u = 0; u < p.n_; ++u) {
      auto it = embedding.find(p.ids_[u]);
      std::vector<int> given;
      if (it != embedding.end())
        for (auto& s : it->second) given.push_back(p.index(s));
      auto sorted_want = want[u];
      auto sorted_given = given;
      std::sort(sorted_want.begin(), sorted_want.end());
      std::sort(sorted_given.begin(), sorted_given.end());
      if (sorted_want != sorted_given)
        throw std::invalid_argument("embedding inconsistent with covers at " + p.ids_[u]);
      p.children_[u] = given;
    }
  } else {
    for (auto& [u, v] : p.covers_) p.children_[u].push_back(v);
  }
  for (int u = 0; u < p.n_; ++u)
    for (int v : p.children_[u]) p.parents_[v].push_back(u);
  return p;
}

int Poset::index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("unknown element id: " + id);
  return it->second;
}

uint64_t Poset::up_set(int a) const {
  uint64_t m = uint64_t(1) << a;
  for (int b = 0; b < n_; ++b)
    if (less(a, b)) m |= uint64_t(1) << b;
  return m;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<bool> has_up(n_, false);
  for (auto& [u, v] : covers_) has_up[v] = true;
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (!has_up[i]) out.push_back(i);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<bool> has_dn(n_, false);
  for (auto& [u, v] : covers_) has_dn[u] = true;
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (!has_dn[i]) out.push_back(i);
  return out;
}

bool Poset::is_ideal(uint64_t mask) const {
  for (int a = 0; a < n_; ++a)
    if ((mask >> a) & 1)
      if (below_[a] & ~mask) return false;
  return true;
}

Poset Poset::induced(uint64_t mask) const {
  std::vector<std::string> sub_ids;
  std::vector<int> keep;
  for (int i = 0; i < n_; ++i)
    if ((mask >> i) & 1) keep.push_back(i), sub_ids.push_back(ids_[i]);
  std::vector<std::pair<std::string, std::string>> cov;
  for (size_t bi = 0; bi < keep.size(); ++bi) {
    int b = keep[bi];
    for (int a : keep) {
      if (a == b || !less(a, b)) continue;
      bool direct = true;
      for (int c : keep)
        if (c != a && c != b && less(a, c) && less(c, b)) {
          direct = false;
          break;
        }
      if (direct) cov.emplace_back(ids_[b], ids_[a]);
    }
  }
  return build(sub_ids, cov);
}

Poset Poset::dual() const {
  std::vector<std::pair<std::string, std::string>> cov;
  for (auto& [u, v] : covers_) cov.emplace_back(ids_[v], ids_[u]);
  return build(ids_, cov);
}

namespace {

bool iso_backtrack(const Poset& a, const Poset& b, const std::vector<int>& ha,
                   const std::vector<int>& hb, std::vector<int>& map_ab,
                   std::vector<bool>& used, int i) {
  int n = a.size();
  if (i == n) return true;
  for (int j = 0; j < n; ++j) {
    if (used[j] || ha[i] != hb[j]) continue;
    bool ok = true;
    for (int k = 0; k < i && ok; ++k) {
      if (a.less(k, i) != b.less(map_ab[k], j)) ok = false;
      if (a.less(i, k) != b.less(j, map_ab[k])) ok = false;
    }
    if (!ok) continue;
    map_ab[i] = j;
    used[j] = true;
    if (iso_backtrack(a, b, ha, hb, map_ab, used, i + 1)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool Poset::isomorphic_to(const Poset& other) const {
  if (n_ != other.n_ || covers_.size() != other.covers_.size()) return false;
  auto ha = heights(*this), hb = heights(other);
  if (ha.h_poset != hb.h_poset) return false;
  auto sa = ha.h, sb = hb.h;
  {
    auto ca = sa, cb = sb;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }
  std::vector<int> map_ab(n_, -1);
  std::vector<bool> used(n_, false);
  return iso_backtrack(*this, other, sa, sb, map_ab, used, 0);
}

BoundedPoset::BoundedPoset(const Poset& p) : base(&p), bot(p.size()), top(p.size() + 1) {
  for (auto& [u, v] : p.covers_) edges.push_back({u, v});
  for (int m : p.maximal_elements()) edges.push_back({top, m});
  for (int m : p.minimal_elements()) edges.push_back({m, bot});
}

HeightFunction heights(const Poset& p) {
  int n = p.size();
  HeightFunction hf;
  hf.h.assign(n, 1);
  // longest chain ending at u; process in any linear extension
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(p.strictly_below(a)) < std::popcount(p.strictly_below(b));
  });
  for (int u : order)
    for (int v : p.children()[u]) hf.h[u] = std::max(hf.h[u], hf.h[v] + 1);
  hf.h_poset = 1;
  for (int u = 0; u < n; ++u) hf.h_poset = std::max(hf.h_poset, hf.h[u] + 1);
  if (n == 0) hf.h_poset = 1;
  hf.pure = true;
  for (auto& [u, v] : p.covers())
    if (hf.h[u] != hf.h[v] + 1) hf.pure = false;
  for (int m : p.maximal_elements())
    if (hf.h[m] + 1 != hf.h_poset) hf.pure = false;
  // minimal elements have h = 1 by construction
  return hf;
}

DistributiveLattice DistributiveLattice::order_ideals(const Poset& p, size_t guard) {
  DistributiveLattice L;
  L.base_ = &p;
  int n = p.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(p.strictly_below(a)) < std::popcount(p.strictly_below(b));
  });
  std::vector<uint64_t> cur = {0};
  for (int a : order) {
    size_t sz = cur.size();
    for (size_t i = 0; i < sz; ++i) {
      uint64_t I = cur[i];
      if ((p.strictly_below(a) & ~I) == 0) {
        cur.push_back(I | (uint64_t(1) << a));
        if (cur.size() > guard) throw std::runtime_error("order ideal count exceeds guard");
      }
    }
  }
  std::sort(cur.begin(), cur.end(), [](uint64_t a, uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  L.ideals_ = std::move(cur);
  for (size_t i = 0; i < L.ideals_.size(); ++i) L.pos_[L.ideals_[i]] = i;
  return L;
}

size_t DistributiveLattice::index_of(uint64_t mask) const {
  auto it = pos_.find(mask);
  if (it == pos_.end()) throw std::invalid_argument("not an order ideal of the poset");
  return it->second;
}

std::vector<std::pair<size_t, size_t>> DistributiveLattice::cover_pairs() const {
  std::vector<std::pair<size_t, size_t>> out;
  int n = base_->size();
  for (size_t i = 0; i < ideals_.size(); ++i) {
    uint64_t I = ideals_[i];
    for (int a = 0; a < n; ++a) {
      if ((I >> a) & 1) continue;
      uint64_t J = I | (uint64_t(1) << a);
      auto it = pos_.find(J);
      if (it != pos_.end()) out.emplace_back(it->second, i);
    }
  }
  return out;
}

Poset join_irreducibles(const DistributiveLattice& L) {
  // join-irreducible ideals = down-sets of single elements
  const Poset& p = L.base();
  std::vector<size_t> ji;
  std::vector<int> lower_count(L.size(), 0);
  for (auto& [u, v] : L.cover_pairs()) ++lower_count[u];
  for (size_t i = 0; i < L.size(); ++i)
    if (lower_count[i] == 1) ji.push_back(i);
  std::vector<std::string> ids;
  for (size_t i : ji) ids.push_back("j" + std::to_string(i));
  // induced order by containment
  std::vector<std::pair<std::string, std::string>> cov;
  for (size_t bi = 0; bi < ji.size(); ++bi)
    for (size_t ai = 0; ai < ji.size(); ++ai) {
      if (ai == bi) continue;
      if (!L.leq(ji[ai], ji[bi]) || ji[ai] == ji[bi]) continue;
      bool direct = true;
      for (size_t ci = 0; ci < ji.size() && direct; ++ci)
        if (ci != ai && ci != bi && L.leq(ji[ai], ji[ci]) && L.leq(ji[ci], ji[bi]) &&
            ji[ci] != ji[ai] && ji[ci] != ji[bi])
          direct = false;
      if (direct) cov.emplace_back(ids[bi], ids[ai]);
    }
  return Poset::build(ids, cov);
}

Int count_maximal_chains(const DistributiveLattice& L) {
  // DP bottom to top over saturated chains
  std::vector<Int> ways(L.size(), 0);
  ways[0] = 1;  // empty ideal is index 0 (popcount sort)
  std::vector<std::vector<size_t>> lower(L.size());
  for (auto& [u, v] : L.cover_pairs()) lower[u].push_back(v);
  Int out = 0;
  for (size_t i = 1; i < L.size(); ++i) {
    Int s = 0;
    for (size_t v : lower[i]) s += ways[v];
    ways[i] = s;
  }
  return ways[L.size() - 1];
}

std::vector<Int> chain_length_counts(const DistributiveLattice& L) {
  int n = L.base().size();
  size_t m = L.size();
  std::vector<Int> c(n + 1);
  c[0] = 1;
  // ways[b] = number of strictly increasing chains of the current length
  // ending at b; strict containment tested by masks.
  std::vector<std::vector<int>> lt(m);
  for (size_t b = 0; b < m; ++b)
    for (size_t a = 0; a < m; ++a)
      if (a != b && L.leq(a, b)) lt[b].push_back((int)a);
  std::vector<Int> ways(m, 1);
  for (int i = 1; i <= n; ++i) {
    std::vector<Int> nw(m, 0);
    for (size_t b = 0; b < m; ++b) {
      Int s = 0;
      for (int a : lt[b]) s += ways[a];
      nw[b] = s;
    }
    ways = std::move(nw);
    Int tot = 0;
    for (auto& w : ways) tot += w;
    c[i] = tot;
  }
  return c;
}

// ---------------- contractions ----------------

namespace {

struct PhatView {
  const BoundedPoset* bp;
  int nv;
  std::vector<uint64_t> adj;    // Hasse adjacency (undirected) as masks
  std::vector<uint64_t> below;  // strict order on Phat

  explicit PhatView(const BoundedPoset& b) : bp(&b) {
    const Poset& p = *b.base;
    nv = b.vertex_count();
    adj.assign(nv, 0);
    below.assign(nv, 0);
    for (auto& e : b.edges) {
      adj[e.s] |= uint64_t(1) << e.t;
      adj[e.t] |= uint64_t(1) << e.s;
    }
    for (int a = 0; a < p.size(); ++a) below[a] = p.strictly_below(a);
    uint64_t allp = (p.size() == 64) ? ~uint64_t(0) : ((uint64_t(1) << p.size()) - 1);
    below[b.top] = allp | (uint64_t(1) << b.bot);
    below[b.bot] = 0;
    for (int a = 0; a < p.size(); ++a) below[a] |= uint64_t(1) << b.bot;
  }
  bool less(int a, int b_) const { return (below[b_] >> a) & 1; }
  bool connected(uint64_t S) const {
    if (!S) return false;
    uint64_t seen = S & (~S + 1);  // lowest bit
    for (;;) {
      uint64_t grow = seen;
      uint64_t rest = S & ~seen;
      for (int v = 0; v < nv; ++v)
        if ((seen >> v) & 1) grow |= adj[v] & S;
      if (grow == seen) break;
      seen = grow;
    }
    return seen == S;
  }
};

bool validate_partition(const PhatView& pv, const std::vector<int>& fiber, int nf,
                        Contraction* out) {
  int nv = pv.nv;
  // fibers connected, not containing both bounds: caller guarantees blocks
  // are connected; re-check bounds here.
  int bf = fiber[nv - 2], tf = fiber[nv - 1];
  if (bf == tf) return false;
  // tightness: u_i < u_j (i != j) implies no v_i > v_j
  // record for each fiber pair whether some element-pair is < and some >
  std::vector<char> lt(nf * nf, 0);
  for (int a = 0; a < nv; ++a)
    for (int b = 0; b < nv; ++b)
      if (fiber[a] != fiber[b] && pv.less(a, b)) lt[fiber[a] * nf + fiber[b]] = 1;
  for (int i = 0; i < nf; ++i)
    for (int j = 0; j < nf; ++j)
      if (i != j && lt[i * nf + j] && lt[j * nf + i]) return false;
  // quotient preorder: generated by lt; antisymmetry must hold
  std::vector<uint64_t> qbelow(nf, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < nf; ++i)
      for (int j = 0; j < nf; ++j)
        if (lt[i * nf + j]) {
          uint64_t add = (qbelow[i] | (uint64_t(1) << i)) & ~qbelow[j];
          if (add) qbelow[j] |= add, changed = true;
        }
  }
  for (int i = 0; i < nf; ++i)
    if ((qbelow[i] >> i) & 1) return false;
  if (!out) return true;
  out->fiber = fiber;
  out->num_fibers = nf;
  out->bot_fiber = bf;
  out->top_fiber = tf;
  out->interior.clear();
  for (int f = 0; f < nf; ++f)
    if (f != bf && f != tf) out->interior.push_back(f);
  out->codim = pv.bp->base->size() - (int)out->interior.size();
  // quotient covers = transitive reduction of qbelow
  out->quotient_covers.clear();
  for (int j = 0; j < nf; ++j)
    for (int i = 0; i < nf; ++i) {
      if (!((qbelow[j] >> i) & 1)) continue;
      bool direct = true;
      for (int k = 0; k < nf && direct; ++k)
        if (k != i && k != j && ((qbelow[j] >> k) & 1) && ((qbelow[k] >> i) & 1)) direct = false;
      if (direct) out->quotient_covers.emplace_back(j, i);
    }
  return true;
}

int block_cost(const PhatView& pv, uint64_t S) {
  int nv = pv.nv;
  int bot = nv - 2, top = nv - 1;
  int sz = std::popcount(S);
  if ((S >> bot) & 1 || (S >> top) & 1) return sz - 1;  // interior members absorbed
  return sz - 1;
}

// all connected blocks of Phat with cost in [1, maxcost]; cost below
void connected_blocks(const PhatView& pv, int maxcost, std::vector<uint64_t>& out) {
  // BFS-grow subsets: classic: enumerate connected subgraphs of size <= maxcost+1
  int nv = pv.nv;
  std::vector<uint64_t> frontier;
  for (int v = 0; v < nv; ++v) frontier.push_back(uint64_t(1) << v);
  std::vector<uint64_t> all(frontier);
  for (int sz = 1; sz < maxcost + 1; ++sz) {
    std::vector<uint64_t> next;
    for (uint64_t S : frontier) {
      uint64_t nbr = 0;
      for (int v = 0; v < nv; ++v)
        if ((S >> v) & 1) nbr |= pv.adj[v];
      nbr &= ~S;
      for (int v = 0; v < nv; ++v)
        if ((nbr >> v) & 1) {
          uint64_t T = S | (uint64_t(1) << v);
          next.push_back(T);
        }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  uint64_t both = (uint64_t(1) << (nv - 2)) | (uint64_t(1) << (nv - 1));
  for (uint64_t S : all)
    if (std::popcount(S) >= 2 && (S & both) != both) out.push_back(S);
}

Contraction partition_to_contraction(const PhatView& pv, const std::vector<uint64_t>& blocks) {
  int nv = pv.nv;
  std::vector<int> fiber(nv, -1);
  int nf = 0;
  for (uint64_t B : blocks) {
    for (int v = 0; v < nv; ++v)
      if ((B >> v) & 1) fiber[v] = nf;
    ++nf;
  }
  for (int v = 0; v < nv; ++v)
    if (fiber[v] < 0) fiber[v] = nf++;
  Contraction c;
  if (!validate_partition(pv, fiber, nf, &c)) throw std::invalid_argument("invalid contraction");
  return c;
}

}  // namespace

Contraction identity_contraction(const BoundedPoset& bp) {
  PhatView pv(bp);
  return partition_to_contraction(pv, {});
}

Contraction contraction_from_block(const BoundedPoset& bp, uint64_t block) {
  PhatView pv(bp);
  return partition_to_contraction(pv, {block});
}

Contraction facet_contraction(const BoundedPoset& bp, int edge_index) {
  auto& e = bp.edges.at(edge_index);
  return contraction_from_block(bp, (uint64_t(1) << e.s) | (uint64_t(1) << e.t));
}

std::vector<Contraction> enumerate_contractions(const BoundedPoset& bp, int codim) {
  PhatView pv(bp);
  std::vector<Contraction> out;
  if (codim < 0) return out;
  if (codim == 0) {
    out.push_back(identity_contraction(bp));
    return out;
  }
  std::vector<uint64_t> blocks;
  connected_blocks(pv, codim, blocks);
  // choose disjoint blocks with total cost == codim
  std::vector<uint64_t> chosen;
  std::vector<int> costs;
  costs.reserve(blocks.size());
  for (uint64_t B : blocks) costs.push_back(block_cost(pv, B));
  std::function<void(size_t, int, uint64_t)> rec = [&](size_t i, int remaining, uint64_t used) {
    if (remaining == 0) {
      std::vector<int> fiber(pv.nv, -1);
      int nf = 0;
      for (uint64_t B : chosen) {
        for (int v = 0; v < pv.nv; ++v)
          if ((B >> v) & 1) fiber[v] = nf;
        ++nf;
      }
      for (int v = 0; v < pv.nv; ++v)
        if (fiber[v] < 0) fiber[v] = nf++;
      Contraction c;
      if (validate_partition(pv, fiber, nf, &c)) out.push_back(std::move(c));
      return;
    }
    for (size_t j = i; j < blocks.size(); ++j) {
      if (costs[j] > remaining) continue;
      if (blocks[j] & used) continue;
      chosen.push_back(blocks[j]);
      rec(j + 1, remaining - costs[j], used | blocks[j]);
      chosen.pop_back();
    }
  };
  rec(0, codim, 0);
  return out;
}

namespace {

bool hasse_is_simple_cycle(const PhatView& pv, uint64_t S) {
  // induced covers within the full subposet S
  int nv = pv.nv;
  std::vector<int> verts;
  for (int v = 0; v < nv; ++v)
    if ((S >> v) & 1) verts.push_back(v);
  int edges = 0;
  std::vector<int> deg(nv, 0);
  for (int b : verts)
    for (int a : verts) {
      if (a == b || !pv.less(a, b)) continue;
      bool direct = true;
      for (int c : verts)
        if (c != a && c != b && pv.less(a, c) && pv.less(c, b)) {
          direct = false;
          break;
        }
      if (direct) ++edges, ++deg[a], ++deg[b];
    }
  if (edges != (int)verts.size()) return false;
  for (int v : verts)
    if (deg[v] != 2) return false;
  // connectivity of the induced cover graph is implied by degree-2 + edge
  // count only if connected; check via pv on induced edges
  // (cheap: reuse adjacency within S restricted to induced covers)
  std::vector<uint64_t> iadj(nv, 0);
  for (int b : verts)
    for (int a : verts) {
      if (a == b || !pv.less(a, b)) continue;
      bool direct = true;
      for (int c : verts)
        if (c != a && c != b && pv.less(a, c) && pv.less(c, b)) {
          direct = false;
          break;
        }
      if (direct) {
        iadj[a] |= uint64_t(1) << b;
        iadj[b] |= uint64_t(1) << a;
      }
    }
  uint64_t seen = uint64_t(1) << verts[0];
  for (;;) {
    uint64_t grow = seen;
    for (int v : verts)
      if ((seen >> v) & 1) grow |= iadj[v] & S;
    if (grow == seen) break;
    seen = grow;
  }
  return seen == S;
}

bool is_convex(const PhatView& pv, uint64_t S) {
  int nv = pv.nv;
  for (int a = 0; a < nv; ++a) {
    if (!((S >> a) & 1)) continue;
    for (int b = 0; b < nv; ++b) {
      if (!((S >> b) & 1) || !pv.less(a, b)) continue;
      for (int c = 0; c < nv; ++c)
        if (!((S >> c) & 1) && pv.less(a, c) && pv.less(c, b)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Contraction> minimal_convex_cycles(const BoundedPoset& bp) {
  PhatView pv(bp);
  int nv = pv.nv;
  // A convex full subposet with simple-cycle Hasse diagram is in particular a
  // chordless cycle of the Hasse graph of Phat; enumerate those by DFS with
  // the smallest vertex as anchor.
  std::vector<uint64_t> cycles;
  uint64_t both = (uint64_t(1) << bp.bot) | (uint64_t(1) << bp.top);
  std::vector<int> path;
  std::function<void(int, uint64_t)> grow = [&](int s, uint64_t mask) {
    int last = path.back();
    for (int v = s + 1; v < nv; ++v) {
      if ((mask >> v) & 1) continue;
      if (!((pv.adj[last] >> v) & 1)) continue;
      // chordless: v may touch only `last` (and possibly s, to close) among
      // path vertices
      bool closes = path.size() >= 3 && ((pv.adj[v] >> s) & 1);
      uint64_t bad = pv.adj[v] & mask & ~(uint64_t(1) << last) & ~(uint64_t(1) << s);
      if (bad) continue;
      if (closes) cycles.push_back(mask | (uint64_t(1) << v));
      if ((pv.adj[v] >> s) & 1 && path.size() >= 2) {
        // extending past a neighbor of s would create a chord later
        continue;
      }
      path.push_back(v);
      grow(s, mask | (uint64_t(1) << v));
      path.pop_back();
      if (cycles.size() > 200000) throw std::runtime_error("too many cycles");
    }
  };
  for (int s = 0; s < nv; ++s) {
    path = {s};
    grow(s, uint64_t(1) << s);
  }
  std::sort(cycles.begin(), cycles.end());
  cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
  std::vector<uint64_t> keep;
  for (uint64_t S : cycles) {
    if (std::popcount(S) < 4) continue;
    if ((S & both) == both) continue;
    if (!is_convex(pv, S)) continue;
    if (!hasse_is_simple_cycle(pv, S)) continue;
    keep.push_back(S);
  }
  cycles = std::move(keep);
  std::vector<uint64_t> minimal;
  for (uint64_t S : cycles) {
    bool min = true;
    for (uint64_t T : cycles)
      if (T != S && (T & ~S) == 0) {
        min = false;
        break;
      }
    if (min) minimal.push_back(S);
  }
  std::sort(minimal.begin(), minimal.end());
  std::vector<Contraction> out;
  for (uint64_t S : minimal) out.push_back(contraction_from_block(bp, S));
  return out;
}

Poset extend(const Poset& p, Direction d) {
  auto ids = p.ids();
  std::string nid = d == Direction::Top ? "top+" : "bot+";
  while (std::find(ids.begin(), ids.end(), nid) != ids.end()) nid += "+";
  std::vector<std::pair<std::string, std::string>> cov;
  for (auto& [u, v] : p.covers()) cov.emplace_back(p.id(u), p.id(v));
  if (d == Direction::Top)
    for (int m : p.maximal_elements()) cov.emplace_back(nid, p.id(m));
  else
    for (int m : p.minimal_elements()) cov.emplace_back(p.id(m), nid);
  ids.push_back(nid);
  return Poset::build(ids, cov);
}

std::pair<Poset, int> reduce_extensions(const Poset& p) {
  Poset cur = p;
  int d = 0;
  for (;;) {
    if (cur.size() <= 1) break;
    auto mx = cur.maximal_elements();
    auto mn = cur.minimal_elements();
    int strip = -1;
    if (mx.size() == 1 && cur.size() > 1) {
      // global maximum iff everything else is below it
      int m = mx[0];
      if (std::popcount(cur.strictly_below(m)) == cur.size() - 1) strip = m;
    }
    if (strip < 0 && mn.size() == 1) {
      int m = mn[0];
      if (std::popcount(cur.up_set(m)) == cur.size()) strip = m;
    }
    if (strip < 0) break;
    uint64_t mask = 0;
    for (int i = 0; i < cur.size(); ++i)
      if (i != strip) mask |= uint64_t(1) << i;
    cur = cur.induced(mask);
    ++d;
  }
  return {cur, d};
}

}  // namespace mcy
