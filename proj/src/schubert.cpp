#include "mcy/schubert.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "mcy/catalog.hpp"

namespace mcy {

ColoredMinusculePoset colored_poset_of(const WQLattice& L, int w) {
  ColoredMinusculePoset cp;
  cp.poset = L.minuscule_poset(w);
  cp.color = L.poset_colors(w);
  cp.rs = L.rs;
  return cp;
}

PeaksHoles peaks_holes(const ColoredMinusculePoset& cp) {
  const Poset& p = cp.poset;
  PeaksHoles ph;
  ph.peaks = p.maximal_elements();
  int n = p.size();
  for (int u = 0; u < n; ++u) {
    int cu = cp.color[u];
    bool maximal_in_color = true;
    for (int v = 0; v < n && maximal_in_color; ++v)
      if (v != u && cp.color[v] == cu && p.less(u, v)) maximal_in_color = false;
    if (!maximal_in_color) continue;
    int count = 0;
    for (int v = 0; v < n; ++v)
      if (p.less(u, v) && cp.rs.pairing(cu, cp.color[v]) != 0) ++count;
    if (count == 2) ph.holes.push_back(u);
  }
  for (int u : ph.holes) {
    uint64_t pu = complement_ideal(p, u);
    bool ess = true;
    for (int v : ph.holes)
      if (v != u && !((pu >> v) & 1)) ess = false;
    if (ess) ph.essential_holes.push_back(u);
  }
  return ph;
}

uint64_t complement_ideal(const Poset& p, int u) {
  uint64_t up = p.up_set(u);
  uint64_t all = p.size() == 64 ? ~uint64_t(0) : ((uint64_t(1) << p.size()) - 1);
  return all & ~up;
}

SchubertReport schubert_report(const ColoredMinusculePoset& cp) {
  const Poset& p = cp.poset;
  SchubertReport r;
  r.dimension = p.size();
  auto hf = heights(p);
  r.gorenstein = hf.pure;
  r.fano_index = hf.pure ? hf.h_poset : 0;
  auto ph = peaks_holes(cp);
  for (int u : ph.peaks) r.peaks.push_back(p.id(u));
  for (int u : ph.holes) r.holes.push_back(p.id(u));
  for (int u : ph.essential_holes) {
    r.essential_holes.push_back(p.id(u));
    r.hole_colors.push_back(cp.color[u]);
  }
  r.locally_factorial = ph.peaks.size() == 1;
  auto L = DistributiveLattice::order_ideals(p);
  r.degree = count_maximal_chains(L);
  r.singular_codim = -1;
  for (int u : ph.essential_holes) {
    SingularComponent sc;
    sc.ideal_mask = complement_ideal(p, u);
    sc.dimension = std::popcount(sc.ideal_mask);
    sc.hole = u;
    Poset sub = p.induced(sc.ideal_mask);
    sc.degree = count_maximal_chains(DistributiveLattice::order_ideals(sub));
    int codim = p.size() - sc.dimension;
    if (r.singular_codim < 0 || codim < r.singular_codim) r.singular_codim = codim;
    r.singular_components.push_back(std::move(sc));
  }
  return r;
}

namespace {

struct RawHit {
  ColoredMinusculePoset cp;
  std::vector<int> degrees;  // descending
  std::string ambient_name;
  SchubertReport report;
};

void partitions_into(int total, int parts, int maxpart, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (int d = std::min(total - (parts - 1), maxpart); d >= 1; --d) {
    cur.push_back(d);
    partitions_into(total - d, parts - 1, d, cur, out);
    cur.pop_back();
  }
}

// Strips cone layers: removes a global extremum together with one degree-1
// entry, as long as both exist.
void strip_class(Poset& p, std::vector<int>& deg) {
  for (;;) {
    auto it = std::find(deg.begin(), deg.end(), 1);
    if (it == deg.end() || p.size() <= 1) return;
    int strip = -1;
    auto mx = p.maximal_elements();
    if (mx.size() == 1 && std::popcount(p.strictly_below(mx[0])) == p.size() - 1) strip = mx[0];
    if (strip < 0) {
      auto mn = p.minimal_elements();
      if (mn.size() == 1 && std::popcount(p.up_set(mn[0])) == p.size()) strip = mn[0];
    }
    if (strip < 0) return;
    uint64_t mask = 0;
    for (int i = 0; i < p.size(); ++i)
      if (i != strip) mask |= uint64_t(1) << i;
    p = p.induced(mask);
    deg.erase(it);
  }
}

bool is_quadric_poset(const Poset& p) {
  int n = p.size();
  if (n < 4 || n % 2) return false;
  return p.isomorphic_to(catalog_poset("quadric-" + std::to_string(n)).poset);
}

std::string recognize(const Poset& p) {
  int n = p.size();
  for (int a = 1; a * a <= n; ++a) {
    if (n % a) continue;
    int b = n / a;
    if (a > b) continue;
    if (p.isomorphic_to(catalog_poset("rect-" + std::to_string(a) + "-" + std::to_string(b)).poset)) {
      if (a == 1) return "P" + std::to_string(b);
      return "G(" + std::to_string(a) + "," + std::to_string(a + b) + ")";
    }
  }
  if (n == 10 && p.isomorphic_to(catalog_poset("og510").poset)) return "OG(5,10)";
  if (n == 12 && p.isomorphic_to(catalog_poset("sigma").poset)) return "Sigma";
  if (n == 16 && p.isomorphic_to(catalog_poset("op2").poset)) return "OP2";
  if (n % 2 == 0 && n >= 4 &&
      p.isomorphic_to(catalog_poset("quadric-" + std::to_string(n)).poset))
    return "Q" + std::to_string(n);
  return "";
}

}  // namespace

std::vector<CicyClass> classify_cicy3(const ClassifyOptions& opt) {
  std::vector<RawHit> hits;
  std::vector<std::pair<RootSystem, int>> spaces;
  for (int r = 1; r <= opt.max_rank_a; ++r) {
    auto rs = RootSystem::make('A', r);
    for (int k = 1; k <= r; ++k) spaces.emplace_back(rs, k);
  }
  for (int r = 4; r <= opt.max_rank_d; ++r) {
    auto rs = RootSystem::make('D', r);
    spaces.emplace_back(rs, 1);
    spaces.emplace_back(rs, r);  // node r-1 gives the isomorphic spinor variety
  }
  spaces.emplace_back(RootSystem::make('E', 6), 1);
  spaces.emplace_back(RootSystem::make('E', 7), 7);

  for (auto& [rs, node] : spaces) {
    WQLattice L = generate_wq(rs, node);
    std::map<uint64_t, int> seen;  // ideal mask -> element (dedupe cosets)
    for (size_t w = 0; w < L.size(); ++w) {
      if (!seen.emplace(L.ideal[w], (int)w).second) continue;
      int dim = (int)L.length[w];
      if (dim < 4) continue;  // need r = |P| - 3 >= 1
      auto cp = colored_poset_of(L, (int)w);
      auto hf = heights(cp.poset);
      if (!hf.pure) continue;  // Gorenstein ambients only
      int h = hf.h_poset;
      if (!(h - 1 <= dim && dim <= h + 3)) continue;
      int r = dim - 3;
      if (h < r) continue;
      auto ph = peaks_holes(cp);
      if (ph.peaks.size() != 1) continue;  // locally factorial ambients only
      int dim_sing = -1;
      for (int u : ph.essential_holes)
        dim_sing = std::max(dim_sing, std::popcount(complement_ideal(cp.poset, u)));
      if (r <= dim_sing) continue;  // general sections must miss the singular locus
      std::vector<std::vector<int>> degs;
      std::vector<int> cur;
      partitions_into(h, r, h, cur, degs);
      for (auto& d : degs) {
        RawHit hit;
        hit.cp = cp;
        hit.degrees = d;
        hits.push_back(std::move(hit));
      }
    }
  }

  // canonical key: quadric ambients are quadric hypersurfaces in projective
  // space; then strip cone layers; dedupe by poset isomorphism + degrees.
  struct Bucket {
    Poset core;
    std::vector<int> deg;  // ascending
    std::vector<size_t> members;
  };
  std::vector<Bucket> buckets;
  for (size_t i = 0; i < hits.size(); ++i) {
    Poset p = hits[i].cp.poset;
    std::vector<int> d = hits[i].degrees;
    // alternate stripping cone layers with rewriting quadric-hypersurface
    // ambients (|J(P)| = |P| + 2 means the Hibi variety is a quadric in
    // P^{|P|+1}, so the class embeds in projective space with an extra 2).
    for (;;) {
      strip_class(p, d);
      if (DistributiveLattice::order_ideals(p).size() != (size_t)p.size() + 2) break;
      p = catalog_poset("chain-" + std::to_string(p.size() + 1)).poset;
      d.push_back(2);
    }
    std::sort(d.begin(), d.end());
    bool placed = false;
    for (auto& b : buckets) {
      if (b.deg == d && b.core.isomorphic_to(p)) {
        b.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) buckets.push_back({p, d, {i}});
  }

  std::vector<CicyClass> out;
  for (auto& b : buckets) {
    // display representative: a recognized non-quadric ambient, smallest first
    size_t best = b.members[0];
    int best_score = -1;
    for (size_t i : b.members) {
      const Poset& pi = hits[i].cp.poset;
      std::string nm = recognize(pi);
      int score = nm.empty() ? 0 : (is_quadric_poset(pi) ? 1 : 3);
      int best_size = hits[best].cp.poset.size();
      if (score > best_score || (score == best_score && pi.size() < best_size)) {
        best = i;
        best_score = score;
      }
    }
    CicyClass cls;
    std::string nm = recognize(hits[best].cp.poset);
    std::vector<int> d = hits[best].degrees;
    std::sort(d.begin(), d.end());
    cls.ambient = nm.empty() ? "X(w)" : nm;
    cls.poset = hits[best].cp.poset;
    cls.degrees = d;
    cls.report = schubert_report(hits[best].cp);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [](const CicyClass& a, const CicyClass& b) {
    if (a.poset.size() != b.poset.size()) return a.poset.size() < b.poset.size();
    if (a.ambient != b.ambient) return a.ambient < b.ambient;
    return a.degrees < b.degrees;
  });
  return out;
}

}  // namespace mcy
