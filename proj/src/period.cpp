#include "mcy/period.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace mcy {

namespace {

struct Levels {
  HeightFunction hf;
  std::vector<std::vector<int>> at;  // vertices of P per height 1..h-1 at[k]
};

Levels level_structure(const Poset& p) {
  Levels lv;
  lv.hf = heights(p);
  if (!lv.hf.pure) throw std::invalid_argument("period formulas require a pure poset");
  lv.at.assign(lv.hf.h_poset + 1, {});
  for (int v = 0; v < p.size(); ++v) lv.at[lv.hf.h[v]].push_back(v);
  return lv;
}

}  // namespace

Int flow_count(const Poset& p, int m) {
  if (m == 0) return 1;
  Levels lv = level_structure(p);
  int h = lv.hf.h_poset;
  BoundedPoset bp(p);
  auto height_of = [&](int v) {
    if (v == bp.top) return h;
    if (v == bp.bot) return 0;
    return lv.hf.h[v];
  };
  // bands[k]: edges with h(s) = k
  std::vector<std::vector<BoundedPoset::Edge>> bands(h + 1);
  for (auto& e : bp.edges) bands[height_of(e.s)].push_back(e);

  Int mfact = factorial(m);
  // DP upward; state = flows at the current level's vertices (target needs)
  std::map<std::vector<int>, Int> state;
  state[{m}] = 1;  // at BOT
  std::vector<int> tgt = {bp.bot};
  for (int k = 1; k <= h; ++k) {
    std::vector<int> src = k == h ? std::vector<int>{bp.top} : lv.at[k];
    std::map<std::vector<int>, Int> next;
    const auto& band = bands[k];
    std::map<int, int> tpos, spos;
    for (size_t i = 0; i < tgt.size(); ++i) tpos[tgt[i]] = (int)i;
    for (size_t i = 0; i < src.size(); ++i) spos[src[i]] = (int)i;
    for (auto& [need, w] : state) {
      // enumerate flows on band edges satisfying per-target sums
      std::vector<int> rem = need;
      std::vector<int> ssum(src.size(), 0);
      Int denom = 1;
      std::function<void(size_t, Int)> rec = [&](size_t i, Int dprod) {
        if (i == band.size()) {
          for (int x : rem)
            if (x) return;
          std::vector<int> key = ssum;
          Int gain = w * (mfact / dprod);
          auto it = next.find(key);
          if (it == next.end())
            next.emplace(std::move(key), gain);
          else
            it->second += gain;
          return;
        }
        auto& e = band[i];
        int ti = tpos.at(e.t);
        int cap = rem[ti];
        for (int f = 0; f <= cap; ++f) {
          rem[ti] -= f;
          ssum[spos.at(e.s)] += f;
          rec(i + 1, dprod * factorial(f));
          rem[ti] += f;
          ssum[spos.at(e.s)] -= f;
        }
      };
      rec(0, Int(1));
    }
    state = std::move(next);
    tgt = src;
  }
  Int out = 0;
  for (auto& [key, w] : state) out += w;
  return out;
}

namespace {

Series assemble_period(const Poset& p, const std::vector<int>& degrees, int terms,
                       const std::function<Int(int)>& N) {
  auto hf = heights(p);
  int h = hf.h_poset;
  int sum = 0;
  for (int d : degrees) sum += d;
  if (sum != h) throw std::invalid_argument("degree sum must equal h_P");
  std::vector<Rat> c(terms + 1);
  for (int m = 0; m <= terms; ++m) {
    Int num = N(m);
    for (int dj : degrees) num *= factorial((long)dj * m);
    Int den = pow_int(factorial(m), (unsigned long)h);
    c[m] = Rat(num) / Rat(den);
    c[m].canonicalize();
  }
  return Series(std::move(c));
}

}  // namespace

Series period_flow(const Poset& p, const std::vector<int>& degrees, int terms) {
  return assemble_period(p, degrees, terms, [&](int m) { return flow_count(p, m); });
}

DualGraph dual_graph(const Poset& p) {
  if (!p.has_embedding()) throw std::invalid_argument("poset has no planar embedding");
  Levels lv = level_structure(p);
  int n = p.size();
  int h = lv.hf.h_poset;
  BoundedPoset bp(p);
  const int BOT = bp.bot, TOP = bp.top;

  // ordered children incl. BOT for minimal elements; TOP gets the maximals
  std::vector<std::vector<int>> kids(n + 2);
  kids[TOP] = p.maximal_elements();
  for (int v = 0; v < n; ++v) {
    kids[v] = p.children()[v];
    if (kids[v].empty()) kids[v] = {BOT};
  }
  // left-to-right position per level, top-down
  std::vector<int> pos(n + 2, 0);
  std::vector<std::vector<int>> levord(h + 1);
  levord[h] = {TOP};
  pos[TOP] = 0;
  auto height_of = [&](int v) {
    if (v == TOP) return h;
    if (v == BOT) return 0;
    return lv.hf.h[v];
  };
  for (int k = h - 1; k >= 0; --k) {
    std::vector<int> members = k == 0 ? std::vector<int>{BOT} : lv.at[k];
    std::vector<std::pair<std::pair<int, int>, int>> keyed;
    for (int u : members) {
      std::pair<int, int> best = {1 << 30, 1 << 30};
      for (int par : levord[k + 1]) {
        auto& cl = kids[par];
        auto it = std::find(cl.begin(), cl.end(), u);
        if (it != cl.end())
          best = std::min(best, {pos[par], (int)(it - cl.begin())});
      }
      keyed.push_back({best, u});
    }
    std::sort(keyed.begin(), keyed.end());
    for (size_t i = 0; i < keyed.size(); ++i) {
      levord[k].push_back(keyed[i].second);
      pos[keyed[i].second] = (int)i;
    }
  }

  // rotations (clockwise from west): parents west->east, children east->west;
  // virtual edge appended at TOP (westmost down) and prepended at BOT.
  const int VIRT = -1;
  std::vector<std::vector<int>> parents(n + 2);
  for (auto& e : bp.edges) parents[e.t].push_back(e.s);
  std::vector<std::vector<int>> rot(n + 2);
  for (int v = 0; v < n + 2; ++v) {
    auto ups = parents[v];
    std::sort(ups.begin(), ups.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    auto dns = kids[v];
    std::sort(dns.begin(), dns.end(), [&](int a, int b) { return pos[a] > pos[b]; });
    if (v == BOT) rot[v].push_back(VIRT);
    for (int u : ups) rot[v].push_back(u);
    for (int u : dns) rot[v].push_back(u);
    if (v == TOP) rot[v].push_back(VIRT);
  }

  // face tracing: arriving a->b, continue along the neighbor after a in rot[b]
  auto succ = [&](std::pair<int, int> he) -> std::pair<int, int> {
    auto [a, b] = he;
    if (b == VIRT) {
      int dest = (a == TOP) ? BOT : TOP;
      auto& l = rot[dest];
      size_t i = std::find(l.begin(), l.end(), VIRT) - l.begin();
      return {dest, l[(i + 1) % l.size()]};
    }
    auto& l = rot[b];
    size_t i = std::find(l.begin(), l.end(), a) - l.begin();
    return {b, l[(i + 1) % l.size()]};
  };

  std::map<std::pair<int, int>, int> face_of;
  std::vector<std::pair<int, int>> half;
  for (auto& e : bp.edges) {
    half.push_back({e.s, e.t});
    half.push_back({e.t, e.s});
  }
  half.push_back({TOP, VIRT});
  half.push_back({BOT, VIRT});
  int nf = 0;
  for (auto& h0 : half) {
    if (face_of.count(h0)) continue;
    auto cur = h0;
    while (!face_of.count(cur)) {
      face_of[cur] = nf;
      cur = succ(cur);
    }
    ++nf;
  }

  DualGraph dg;
  dg.num_faces = nf;
  dg.b_left = face_of.at({TOP, VIRT});
  dg.b_right = face_of.at({BOT, VIRT});
  dg.edges = bp.edges;
  for (auto& e : bp.edges)
    dg.face_lr.push_back({face_of.at({e.t, e.s}), face_of.at({e.s, e.t})});
  // Euler check with the closing edge: V - (E+1) + F = 2
  int V = n + 2, E = (int)bp.edges.size() + 1;
  if (V - E + nf != 2) throw std::runtime_error("embedding is not planar (Euler check)");
  return dg;
}

Series period_binomial(const Poset& p, const std::vector<int>& degrees, int terms) {
  DualGraph dg = dual_graph(p);
  std::vector<int> interior;
  for (int f = 0; f < dg.num_faces; ++f)
    if (f != dg.b_left && f != dg.b_right) interior.push_back(f);
  auto N = [&](int m) {
    std::vector<int> val(dg.num_faces, 0);
    val[dg.b_right] = m;
    Int total = 0;
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == interior.size()) {
        Int t = 1;
        for (size_t e = 0; e < dg.face_lr.size() && t != 0; ++e)
          t *= binomial(val[dg.face_lr[e].second], val[dg.face_lr[e].first]);
        total += t;
        return;
      }
      for (int v = 0; v <= m; ++v) {
        val[interior[i]] = v;
        rec(i + 1);
      }
    };
    rec(0);
    return total;
  };
  return assemble_period(p, degrees, terms, N);
}

Int sigma_flow_count(int m) {
  // sum over s,v <= m, t <= s, u <= min(t,v) of
  // C(m,s)^2 C(m,v)^2 C(m,t) C(s,t) C(t,u) C(v,u)
  Int total = 0;
  for (int s = 0; s <= m; ++s) {
    Int cms2 = binomial(m, s) * binomial(m, s);
    for (int v = 0; v <= m; ++v) {
      Int cmv2 = binomial(m, v) * binomial(m, v);
      for (int t = 0; t <= s; ++t) {
        Int a = cms2 * cmv2 * binomial(m, t) * binomial(s, t);
        if (a == 0) continue;
        Int inner = 0;
        int ucap = std::min(t, v);
        for (int u = 0; u <= ucap; ++u) inner += binomial(t, u) * binomial(v, u);
        total += a * inner;
      }
    }
  }
  return total;
}

}  // namespace mcy
