#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcy/catalog.hpp"
#include "mcy/schubert.hpp"

using namespace mcy;

TEST_CASE("orbit sizes") {
  CHECK(generate_wq(RootSystem::make('E', 6), 1).size() == 27);
  CHECK(generate_wq(RootSystem::make('A', 4), 1).size() == 5);
  CHECK(generate_wq(RootSystem::make('A', 5), 2).size() == 15);  // C(6,2)
  CHECK(generate_wq(RootSystem::make('D', 5), 5).size() == 16);
  CHECK(generate_wq(RootSystem::make('E', 7), 7).size() == 56);
  CHECK_THROWS(generate_wq(RootSystem::make('E', 6), 2));  // not minuscule
}

TEST_CASE("minuscule posets from lattices") {
  auto L = generate_wq(RootSystem::make('A', 5), 2);
  CHECK(L.ji_poset.isomorphic_to(catalog_poset("rect-2-4").poset));
  auto Ld = generate_wq(RootSystem::make('D', 5), 5);
  CHECK(Ld.ji_poset.isomorphic_to(catalog_poset("og510").poset));
  auto Le = generate_wq(RootSystem::make('E', 6), 1);
  CHECK(Le.ji_poset.isomorphic_to(catalog_poset("op2").poset));
  auto Lq = generate_wq(RootSystem::make('D', 4), 1);
  CHECK(Lq.ji_poset.isomorphic_to(catalog_poset("quadric-6").poset));
  check_distributive(Le);
  // projective space: chain
  auto La = generate_wq(RootSystem::make('A', 4), 1);
  CHECK(La.ji_poset.isomorphic_to(catalog_poset("chain-4").poset));
}

TEST_CASE("sigma from its reduced word") {
  auto L = generate_wq(RootSystem::make('E', 6), 1);
  int w = L.element_of_word("345134265431");
  CHECK(L.length[w] == 12);
  auto p = L.minuscule_poset(w);
  CHECK(p.size() == 12);
  CHECK(p.isomorphic_to(catalog_poset("sigma").poset));
  // identity and longest element
  CHECK(L.minuscule_poset(0).size() == 0);
  CHECK(L.minuscule_poset(L.top()).size() == 16);
}

TEST_CASE("sigma report") {
  auto L = generate_wq(RootSystem::make('E', 6), 1);
  auto cp = colored_poset_of(L, L.element_of_word("345134265431"));
  auto ph = peaks_holes(cp);
  CHECK(ph.peaks.size() == 1);
  CHECK(ph.holes.size() == 1);
  CHECK(ph.essential_holes.size() == 1);
  CHECK(cp.color[ph.holes[0]] == 2);  // alpha_2
  auto rep = schubert_report(cp);
  CHECK(rep.gorenstein);
  CHECK(rep.fano_index == 9);
  CHECK(rep.locally_factorial);
  CHECK(rep.degree == 33);
  REQUIRE(rep.singular_components.size() == 1);
  CHECK(rep.singular_components[0].dimension == 5);
  CHECK(rep.singular_components[0].degree == 1);
  CHECK(rep.singular_codim == 7);
}

TEST_CASE("homogeneous space reports") {
  // the total space G/Q has no holes
  auto L = generate_wq(RootSystem::make('A', 4), 2);
  auto cp = colored_poset_of(L, L.top());
  auto ph = peaks_holes(cp);
  CHECK(ph.holes.empty());
  auto rep = schubert_report(cp);
  CHECK(rep.degree == 5);  // deg G(2,5) = 5
  CHECK(rep.singular_codim == -1);
  // P^n: chain, index n+1, degree 1
  auto Lp = generate_wq(RootSystem::make('A', 4), 1);
  auto rp = schubert_report(colored_poset_of(Lp, Lp.top()));
  CHECK(rp.fano_index == 5);
  CHECK(rp.degree == 1);
  // OG(5,10): index 8, degree 12
  auto Lo = generate_wq(RootSystem::make('D', 5), 5);
  auto ro = schubert_report(colored_poset_of(Lo, Lo.top()));
  CHECK(ro.fano_index == 8);
  CHECK(ro.degree == 12);
}

TEST_CASE("degree triple consistency") {
  // maximal chains in J(P) = Hibi degree = Chevalley degree for the catalog
  for (auto name : {"sigma", "rect-2-3", "rect-3-3", "og510", "op2", "quadric-6"}) {
    auto entry = catalog_poset(name);
    auto L = DistributiveLattice::order_ideals(entry.poset);
    auto chains = count_maximal_chains(L);
    REQUIRE(entry.origin);
    auto& o = *entry.origin;
    auto wq = generate_wq(RootSystem::make(o.family, o.rank), o.node);
    int w = o.word.empty() ? wq.top() : wq.element_of_word(o.word);
    auto rep = schubert_report(colored_poset_of(wq, w));
    CHECK_MESSAGE(rep.degree == chains, name);
  }
}

TEST_CASE("classification") {
  auto classes = classify_cicy3();
  CHECK(classes.size() == 12);
  std::vector<std::pair<std::string, std::vector<int>>> got;
  for (auto& c : classes) got.emplace_back(c.ambient, c.degrees);
  std::sort(got.begin(), got.end());
  std::vector<std::pair<std::string, std::vector<int>>> want = {
      {"G(2,5)", {1, 1, 3}},
      {"G(2,5)", {1, 2, 2}},
      {"G(2,6)", {1, 1, 1, 1, 2}},
      {"G(2,7)", {1, 1, 1, 1, 1, 1, 1}},
      {"G(3,6)", {1, 1, 1, 1, 1, 1}},
      {"OG(5,10)", {1, 1, 1, 1, 1, 1, 2}},
      {"P4", {5}},
      {"P5", {2, 4}},
      {"P5", {3, 3}},
      {"P6", {2, 2, 3}},
      {"P7", {2, 2, 2, 2}},
      {"Sigma", {1, 1, 1, 1, 1, 1, 1, 1, 1}},
  };
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("classification stable under larger guards") {
  ClassifyOptions opt;
  opt.max_rank_a = 13;
  opt.max_rank_d = 9;
  CHECK(classify_cicy3(opt).size() == 12);
}
