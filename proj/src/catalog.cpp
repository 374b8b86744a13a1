#include "mcy/catalog.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mcy/rootsystem.hpp"

namespace mcy {

using nlohmann::json;

namespace {

using Covers = std::vector<std::pair<std::string, std::string>>;
using Embedding = std::map<std::string, std::vector<std::string>>;

CatalogEntry make_sigma() {
  // 12-element minuscule poset of the Schubert variety X(345134265431) in the
  // Cayley plane, drawn as in the paper's Hasse-diagram figure: a chain of
  // three below a staircase of four boxes. Children lists are west-to-east.
  std::vector<std::string> ids = {"a", "b", "c", "d", "e", "f",
                                  "g", "h", "i", "j", "k", "l"};
  Covers cov = {
      {"b", "a"}, {"c", "b"}, {"d", "c"}, {"e", "c"}, {"f", "d"}, {"g", "d"},
      {"g", "e"}, {"h", "f"}, {"h", "g"}, {"i", "g"}, {"j", "h"}, {"j", "i"},
      {"k", "i"}, {"l", "j"}, {"l", "k"},
  };
  Embedding emb = {
      {"a", {}},         {"b", {"a"}},      {"c", {"b"}},      {"d", {"c"}},
      {"e", {"c"}},      {"f", {"d"}},      {"g", {"d", "e"}}, {"h", {"f", "g"}},
      {"i", {"g"}},      {"j", {"h", "i"}}, {"k", {"i"}},      {"l", {"j", "k"}},
  };
  CatalogEntry e;
  e.poset = Poset::build(ids, cov, emb);
  e.origin = MinusculeOrigin{'E', 6, 1, "345134265431"};
  return e;
}

CatalogEntry make_chain(int n) {
  std::vector<std::string> ids;
  Covers cov;
  Embedding emb;
  for (int i = 1; i <= n; ++i) ids.push_back("c" + std::to_string(i));
  for (int i = 1; i < n; ++i) cov.emplace_back(ids[i], ids[i - 1]);
  for (int i = 0; i < n; ++i)
    emb[ids[i]] = i == 0 ? std::vector<std::string>{} : std::vector<std::string>{ids[i - 1]};
  CatalogEntry e;
  e.poset = Poset::build(ids, cov, emb);
  e.origin = MinusculeOrigin{'A', n, 1, ""};
  return e;
}

CatalogEntry make_antichain(int n) {
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) ids.push_back("x" + std::to_string(i));
  CatalogEntry e;
  e.poset = Poset::build(ids, {});
  return e;
}

std::string cell(int i, int j) { return "r" + std::to_string(i) + "c" + std::to_string(j); }

CatalogEntry make_rect(int a, int b) {
  // minuscule poset of G(a, a+b): a x b grid, (i,j) covers (i-1,j) and (i,j-1)
  std::vector<std::string> ids;
  Covers cov;
  Embedding emb;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) {
      ids.push_back(cell(i, j));
      std::vector<std::string> kids;
      if (i > 1) kids.push_back(cell(i - 1, j));
      if (j > 1) kids.push_back(cell(i, j - 1));
      for (auto& k : kids) cov.emplace_back(cell(i, j), k);
      emb[cell(i, j)] = kids;
    }
  CatalogEntry e;
  e.poset = Poset::build(ids, cov, emb);
  e.origin = MinusculeOrigin{'A', a + b - 1, a, ""};
  return e;
}

CatalogEntry make_og510() {
  // shifted staircase (4,3,2,1): cells (i,j), 1 <= i <= j <= 4
  std::vector<std::string> ids;
  Covers cov;
  Embedding emb;
  auto in = [](int i, int j) { return 1 <= i && i <= j && j <= 4; };
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) {
      ids.push_back(cell(i, j));
      std::vector<std::string> kids;
      if (in(i - 1, j)) kids.push_back(cell(i - 1, j));
      if (in(i, j - 1)) kids.push_back(cell(i, j - 1));
      for (auto& k : kids) cov.emplace_back(cell(i, j), k);
      emb[cell(i, j)] = kids;
    }
  CatalogEntry e;
  e.poset = Poset::build(ids, cov, emb);
  e.origin = MinusculeOrigin{'D', 5, 5, ""};
  return e;
}

CatalogEntry make_quadric(int twon) {
  // minuscule poset of the even quadric Q^{2n}: chain of n-1, an incomparable
  // pair, chain of n-1 (2n elements, height 2n).
  if (twon < 4 || twon % 2) throw std::invalid_argument("quadric-2n needs even dimension >= 4");
  int n = twon / 2;
  std::vector<std::string> ids;
  Covers cov;
  Embedding emb;
  auto nm = [](int k) { return "q" + std::to_string(k); };
  for (int k = 1; k < n; ++k) ids.push_back(nm(k));
  ids.push_back("m1");
  ids.push_back("m2");
  for (int k = 1; k < n; ++k) ids.push_back("t" + std::to_string(k));
  emb[nm(1)] = {};
  for (int k = 2; k < n; ++k) cov.emplace_back(nm(k), nm(k - 1)), emb[nm(k)] = {nm(k - 1)};
  cov.emplace_back("m1", nm(n - 1));
  cov.emplace_back("m2", nm(n - 1));
  emb["m1"] = {nm(n - 1)};
  emb["m2"] = {nm(n - 1)};
  cov.emplace_back("t1", "m1");
  cov.emplace_back("t1", "m2");
  emb["t1"] = {"m1", "m2"};
  for (int k = 2; k < n; ++k) {
    cov.emplace_back("t" + std::to_string(k), "t" + std::to_string(k - 1));
    emb["t" + std::to_string(k)] = {"t" + std::to_string(k - 1)};
  }
  CatalogEntry e;
  e.poset = Poset::build(ids, cov, emb);
  e.origin = MinusculeOrigin{'D', n + 1, 1, ""};
  return e;
}

}  // namespace

CatalogEntry make_op2() {
  // 16-element minuscule poset of the Cayley plane: the sigma poset extended
  // by one more box and a three-element top chain (self-dual staircase strip).
  std::vector<std::string> ids = {"a", "b", "c", "d", "e", "f", "g", "h",
                                  "i", "j", "k", "l", "m", "n", "o", "p"};
  Covers cov = {
      {"b", "a"}, {"c", "b"}, {"d", "c"}, {"e", "c"}, {"f", "d"}, {"g", "d"},
      {"g", "e"}, {"h", "f"}, {"h", "g"}, {"i", "g"}, {"j", "h"}, {"j", "i"},
      {"k", "i"}, {"l", "j"}, {"l", "k"}, {"m", "j"}, {"n", "m"}, {"n", "l"},
      {"o", "n"}, {"p", "o"},
  };
  Embedding emb = {
      {"a", {}},         {"b", {"a"}},      {"c", {"b"}},      {"d", {"c"}},
      {"e", {"c"}},      {"f", {"d"}},      {"g", {"d", "e"}}, {"h", {"f", "g"}},
      {"i", {"g"}},      {"j", {"h", "i"}}, {"k", {"i"}},      {"l", {"j", "k"}},
      {"m", {"j"}},      {"n", {"m", "l"}}, {"o", {"n"}},      {"p", {"o"}},
  };
  CatalogEntry e;
  e.poset = Poset::build(ids, cov, emb);
  e.origin = MinusculeOrigin{'E', 6, 1, ""};
  return e;
}

CatalogEntry make_e7() {
  auto L = generate_wq(RootSystem::make('E', 7), 7);
  CatalogEntry e;
  e.poset = L.ji_poset;
  e.origin = MinusculeOrigin{'E', 7, 7, ""};
  return e;
}

CatalogEntry catalog_poset(const std::string& name) {
  if (name == "sigma") return make_sigma();
  if (name == "og510") return make_og510();
  if (name == "op2") return make_op2();
  if (name == "e7") return make_e7();
  if (name.rfind("chain-", 0) == 0) return make_chain(std::stoi(name.substr(6)));
  if (name.rfind("antichain-", 0) == 0) return make_antichain(std::stoi(name.substr(10)));
  if (name.rfind("rect-", 0) == 0) {
    auto rest = name.substr(5);
    auto dash = rest.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("rect-a-b expected");
    return make_rect(std::stoi(rest.substr(0, dash)), std::stoi(rest.substr(dash + 1)));
  }
  if (name.rfind("quadric-", 0) == 0) return make_quadric(std::stoi(name.substr(8)));
  throw std::invalid_argument("unknown catalog poset: " + name);
}

std::vector<std::string> catalog_names() {
  return {"sigma", "chain-n", "antichain-n", "rect-a-b", "og510", "op2", "quadric-2n", "e7"};
}

Poset poset_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<std::string> ids = j.at("elements").get<std::vector<std::string>>();
  std::vector<std::pair<std::string, std::string>> cov;
  for (auto& e : j.at("covers")) cov.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  std::map<std::string, std::vector<std::string>> emb;
  if (j.contains("embedding"))
    for (auto& [k, v] : j.at("embedding").items()) emb[k] = v.get<std::vector<std::string>>();
  return Poset::build(ids, cov, emb);
}

CatalogEntry resolve_poset(const std::string& name_or_path) {
  try {
    return catalog_poset(name_or_path);
  } catch (const std::invalid_argument&) {
  }
  std::ifstream f(name_or_path);
  if (!f.good()) throw std::invalid_argument("no catalog poset or file named " + name_or_path);
  std::stringstream ss;
  ss << f.rdbuf();
  CatalogEntry e;
  e.poset = poset_from_json(ss.str());
  return e;
}

std::string poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.ids();
  json cov = json::array();
  for (auto& [u, v] : p.covers()) cov.push_back({p.id(u), p.id(v)});
  j["covers"] = cov;
  if (p.has_embedding()) {
    json emb;
    for (int u = 0; u < p.size(); ++u) {
      std::vector<std::string> kids;
      for (int v : p.children()[u]) kids.push_back(p.id(v));
      emb[p.id(u)] = kids;
    }
    j["embedding"] = emb;
  }
  return j.dump(2);
}

}  // namespace mcy
