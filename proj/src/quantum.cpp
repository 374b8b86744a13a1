#include "mcy/quantum.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

namespace mcy {

namespace {

// order isomorphisms S1 -> S2 between induced subposets of p matching colors
void color_isos(const Poset& p, const std::vector<int>& color, const std::vector<int>& S1,
                const std::vector<int>& S2, std::vector<std::vector<int>>& out) {
  size_t n = S1.size();
  std::vector<int> assign(n, -1);
  std::vector<bool> used(S2.size(), false);
  std::function<void(size_t)> bt = [&](size_t i) {
    if (i == n) {
      std::vector<int> m(n);
      for (size_t k = 0; k < n; ++k) m[k] = S2[assign[k]];
      out.push_back(std::move(m));
      return;
    }
    for (size_t j = 0; j < S2.size(); ++j) {
      if (used[j] || color[S1[i]] != color[S2[j]]) continue;
      bool ok = true;
      for (size_t k = 0; k < i && ok; ++k) {
        if (p.less(S1[k], S1[i]) != p.less(S2[assign[k]], S2[j])) ok = false;
        if (p.less(S1[i], S1[k]) != p.less(S2[j], S2[assign[k]])) ok = false;
      }
      if (!ok) continue;
      assign[i] = (int)j;
      used[j] = true;
      bt(i + 1);
      used[j] = false;
    }
  };
  bt(0);
}

}  // namespace

QuantumConnection quantum_chevalley(const WQLattice& L) {
  QuantumConnection qc;
  qc.lattice = &L;
  for (auto& [up, dn, c] : L.covers) qc.classical.emplace_back(dn, up);

  const Poset& P = L.ji_poset;
  int n = P.size();
  auto hf = heights(P);
  int h = hf.h_poset;
  int target = n - h + 1;  // |R^o|
  if (target < 0) throw std::runtime_error("unexpected grading in quantum shift");

  auto lat = DistributiveLattice::order_ideals(P);
  std::vector<uint64_t> ideals_sz, filters_sz;
  uint64_t full = n == 64 ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
  for (auto m : lat.ideals()) {
    if (std::popcount(m) == target) ideals_sz.push_back(m);
    if (std::popcount(full & ~m) == target) filters_sz.push_back(full & ~m);
  }

  auto members = [&](uint64_t m) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1) out.push_back(v);
    return out;
  };

  // unique color-preserving order iso from an ideal onto a filter such that
  // every shifted sub-ideal complement is again an ideal
  struct Shift {
    uint64_t ro;
    std::vector<int> dom, img;  // iota as parallel lists
  };
  std::vector<Shift> winners;
  for (uint64_t ro : ideals_sz) {
    auto dom = members(ro);
    for (uint64_t rup : filters_sz) {
      auto img_set = members(rup);
      std::vector<std::vector<int>> isos;
      color_isos(P, L.ji_color, dom, img_set, isos);
      for (auto& iota : isos) {
        bool good = true;
        for (auto mw : lat.ideals()) {
          if (mw & ~ro) continue;  // sub-ideals of R^o only
          uint64_t shifted = 0;
          for (size_t k = 0; k < dom.size(); ++k)
            if ((ro & ~mw) >> dom[k] & 1) shifted |= uint64_t(1) << iota[k];
          uint64_t v = full & ~shifted;
          if (!P.is_ideal(v)) {
            good = false;
            break;
          }
        }
        if (good) winners.push_back({ro, dom, iota});
      }
    }
  }
  if (winners.empty()) throw std::runtime_error("no color-preserving quantum shift found");
  if (winners.size() > 1) throw std::runtime_error("quantum shift not unique");
  auto& sh = winners[0];

  // map ideals to W^Q elements
  std::map<uint64_t, int> elem_of;
  for (size_t w = 0; w < L.size(); ++w) elem_of[L.ideal[w]] = (int)w;
  for (auto mw : lat.ideals()) {
    if (mw & ~sh.ro) continue;
    uint64_t shifted = 0;
    for (size_t k = 0; k < sh.dom.size(); ++k)
      if ((sh.ro & ~mw) >> sh.dom[k] & 1) shifted |= uint64_t(1) << sh.img[k];
    uint64_t v = full & ~shifted;
    int we = elem_of.at(mw), ve = elem_of.at(v);
    // degree homogeneity: the q-entry must drop length by h-1
    if (L.length[ve] != L.length[we] + h - 1)
      throw std::runtime_error("quantum term violates degree homogeneity");
    qc.quantum.emplace_back(we, ve);
  }
  return qc;
}

Series flat_section_component(const QuantumConnection& qc, int terms) {
  const WQLattice& L = *qc.lattice;
  size_t N = L.size();
  int top = L.top();
  std::vector<std::vector<int>> covered_by(N);  // v < w pairs: per w list of v
  for (auto& [v, w] : qc.classical) covered_by[w].push_back(v);
  std::vector<std::vector<int>> qto(N);  // per w: quantum targets v
  for (auto& [w, v] : qc.quantum) qto[w].push_back(v);

  std::vector<size_t> by_length(N);
  for (size_t i = 0; i < N; ++i) by_length[i] = i;
  std::sort(by_length.begin(), by_length.end(),
            [&](size_t a, size_t b) { return L.length[a] < L.length[b]; });

  std::vector<Rat> S(N, Rat(0));
  S[top] = 1;
  std::vector<Rat> comp = {Rat(1)};
  for (int d = 1; d <= terms; ++d) {
    // rhs = B^T S: rhs[w] = sum over quantum targets v of w
    std::vector<Rat> rhs(N, Rat(0));
    for (size_t w = 0; w < N; ++w)
      for (int v : qto[w]) rhs[w] += S[v];
    // solve (d - A^T) y = rhs by increasing length: y[w] = (rhs[w] + sum_{v
    // covered by w} y[v]) / d
    std::vector<Rat> y(N, Rat(0));
    for (size_t w : by_length) {
      Rat s = rhs[w];
      for (int v : covered_by[w]) s += y[v];
      y[w] = s / d;
    }
    S = std::move(y);
    comp.push_back(S[top]);
  }
  return Series(std::move(comp));
}

FitResult scalar_reduction(const QuantumConnection& qc, int max_order, int max_degree) {
  int terms = (max_order + 1) * (max_degree + 1) + 10;
  Series comp = flat_section_component(qc, terms);
  return fit_operator(comp, max_order, max_degree);
}

}  // namespace mcy
