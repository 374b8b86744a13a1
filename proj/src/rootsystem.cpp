#include "mcy/rootsystem.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace mcy {

RootSystem RootSystem::make(char family, int rank) {
  std::vector<std::pair<int, int>> links;
  if (family == 'A') {
    if (rank < 1) throw std::invalid_argument("A_n needs n >= 1");
    for (int i = 1; i < rank; ++i) links.emplace_back(i, i + 1);
  } else if (family == 'D') {
    if (rank < 3) throw std::invalid_argument("D_n needs n >= 3");
    for (int i = 1; i < rank - 1; ++i) links.emplace_back(i, i + 1);
    links.emplace_back(rank - 2, rank);
  } else if (family == 'E' && rank == 6) {
    links = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
  } else if (family == 'E' && rank == 7) {
    links = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}};
  } else {
    throw std::invalid_argument("unsupported root system");
  }
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) rs.cartan[i][i] = 2;
  for (auto& [a, b] : links) rs.cartan[a - 1][b - 1] = rs.cartan[b - 1][a - 1] = -1;
  return rs;
}

bool RootSystem::is_minuscule_node(int node) const {
  if (node < 1 || node > rank) return false;
  switch (family) {
    case 'A':
      return true;
    case 'D':
      return node == 1 || node == rank - 1 || node == rank;
    case 'E':
      if (rank == 6) return node == 1 || node == 6;
      return node == 7;  // E7
  }
  return false;
}

WQLattice generate_wq(const RootSystem& rs, int node) {
  if (!rs.is_minuscule_node(node))
    throw std::invalid_argument("node is not minuscule for this root system");
  WQLattice L;
  L.rs = rs;
  L.node = node;
  int n = rs.rank;
  std::vector<int> lam(n, 0);
  lam[node - 1] = 1;
  std::map<std::vector<int>, int> index;
  index[lam] = 0;
  L.weights.push_back(lam);
  L.length.push_back(0);
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int mi : frontier) {
      auto mu = L.weights[mi];
      for (int i = 0; i < n; ++i) {
        if (mu[i] <= 0) continue;
        if (mu[i] != 1) throw std::runtime_error("weight multiplicity > 1: not minuscule");
        std::vector<int> nu(n);
        for (int j = 0; j < n; ++j) nu[j] = mu[j] - mu[i] * rs.cartan[j][i];
        auto it = index.find(nu);
        int ni;
        if (it == index.end()) {
          ni = (int)L.weights.size();
          index[nu] = ni;
          L.weights.push_back(nu);
          L.length.push_back(L.length[mi] + 1);
          next.push_back(ni);
        } else {
          ni = it->second;
        }
        L.covers.emplace_back(ni, mi, i + 1);  // ni covers mi in Bruhat order
      }
    }
    frontier = std::move(next);
  }

  size_t N = L.weights.size();
  // join irreducibles: exactly one lower cover
  std::vector<std::vector<std::pair<int, int>>> below(N);  // (lower, color)
  for (auto& [up, dn, c] : L.covers) below[up].emplace_back(dn, c);
  for (size_t w = 0; w < N; ++w)
    if (below[w].size() == 1) {
      L.ji.push_back((int)w);
      L.color_of_ji.push_back(below[w][0].second);
    }
  if (L.ji.size() > 64) throw std::runtime_error("minuscule poset too large");

  // order: transitive closure upward
  std::vector<std::vector<int>> above(N);
  for (auto& [up, dn, c] : L.covers) above[dn].push_back(up);
  std::vector<std::vector<char>> geq(N, std::vector<char>(N, 0));
  // BFS from each element upward (N <= 56 in practice)
  for (size_t a = 0; a < N; ++a) {
    std::vector<int> stack = {(int)a};
    geq[a][a] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : above[x])
        if (!geq[a][y]) geq[a][y] = 1, stack.push_back(y);
    }
  }
  auto leq = [&](int a, int b) { return geq[a][b] != 0; };  // a <= b

  L.ideal.assign(N, 0);
  for (size_t w = 0; w < N; ++w)
    for (size_t k = 0; k < L.ji.size(); ++k)
      if (leq(L.ji[k], (int)w)) L.ideal[w] |= uint64_t(1) << k;

  // minuscule poset P_Q on the ji elements
  std::vector<std::string> ids;
  for (size_t k = 0; k < L.ji.size(); ++k) ids.push_back("u" + std::to_string(k));
  std::vector<std::pair<std::string, std::string>> cov;
  for (size_t bk = 0; bk < L.ji.size(); ++bk)
    for (size_t ak = 0; ak < L.ji.size(); ++ak) {
      if (ak == bk || !leq(L.ji[ak], L.ji[bk])) continue;
      bool direct = true;
      for (size_t ck = 0; ck < L.ji.size() && direct; ++ck)
        if (ck != ak && ck != bk && leq(L.ji[ak], L.ji[ck]) && leq(L.ji[ck], L.ji[bk]))
          direct = false;
      if (direct) cov.emplace_back(ids[bk], ids[ak]);
    }
  L.ji_poset = Poset::build(ids, cov);
  L.ji_color = L.color_of_ji;
  return L;
}

int WQLattice::top() const {
  int best = 0;
  for (size_t w = 0; w < size(); ++w)
    if (length[w] > length[best]) best = (int)w;
  return best;
}

int WQLattice::element_of_word(const std::string& digits) const {
  int n = rs.rank;
  std::vector<int> mu(n, 0);
  mu[node - 1] = 1;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    int i = *it - '0';
    if (i < 1 || i > n) throw std::invalid_argument("bad simple-root digit in word");
    int ci = mu[i - 1];
    for (int j = 0; j < n; ++j) mu[j] -= ci * rs.cartan[j][i - 1];
  }
  for (size_t w = 0; w < size(); ++w)
    if (weights[w] == mu) return (int)w;
  throw std::runtime_error("word does not land in the minuscule orbit");
}

Poset WQLattice::minuscule_poset(int w) const {
  uint64_t m = ideal[w];
  return ji_poset.induced(m);
}

std::vector<int> WQLattice::poset_colors(int w) const {
  std::vector<int> out;
  for (size_t k = 0; k < ji.size(); ++k)
    if ((ideal[w] >> k) & 1) out.push_back(ji_color[k]);
  return out;
}

void check_distributive(const WQLattice& L) {
  // join/meet of ideals are union/intersection; distributivity on samples
  size_t N = L.size();
  std::map<uint64_t, int> of_mask;
  for (size_t w = 0; w < N; ++w) of_mask[L.ideal[w]] = (int)w;
  auto require = [&](uint64_t m) {
    if (!of_mask.count(m)) throw std::runtime_error("W^Q not closed under join/meet");
  };
  uint64_t seed = 0x9e3779b97f4a7c15ull;
  auto rnd = [&]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  for (int t = 0; t < 200; ++t) {
    size_t a = rnd() % N, b = rnd() % N, c = rnd() % N;
    uint64_t A = L.ideal[a], B = L.ideal[b], C = L.ideal[c];
    require(A | B);
    require(A & B);
    if ((A & (B | C)) != ((A & B) | (A & C)))
      throw std::runtime_error("distributivity failed");
  }
}

}  // namespace mcy
