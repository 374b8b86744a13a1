#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcy/catalog.hpp"
#include "mcy/invariants.hpp"

using namespace mcy;

TEST_CASE("sigma invariants") {
  auto inst = CicyInstance::make(catalog_poset("sigma").poset, std::vector<int>(9, 1));
  CHECK(degree_ci(inst) == 33);
  CHECK(chi_o1(inst) == 12);
  CHECK(c2h(inst) == 78);
  auto st = stringy_h1(inst);
  CHECK(st.h11 == 5);
  CHECK(st.h1_last == 37);
  CHECK(node_count(inst) == 19);
  CHECK(euler_number(inst) == -102);
  auto rep = invariant_report(inst);
  CHECK(rep.chi_y == -64);
  CHECK(rep.chi_x == -102);
  CHECK(rep.h21_x == 52);
}

TEST_CASE("quintic") {
  auto inst = CicyInstance::make(catalog_poset("chain-4").poset, {5});
  CHECK(degree_ci(inst) == 5);
  CHECK(chi_o1(inst) == 5);
  CHECK(c2h(inst) == 50);
  auto st = stringy_h1(inst);
  CHECK(st.h11 == 1);
  CHECK(st.h1_last == 101);
  CHECK(node_count(inst) == 0);
  CHECK(euler_number(inst) == -200);
}

TEST_CASE("type A examples") {
  auto g25 = CicyInstance::make(catalog_poset("rect-2-3").poset, {1, 1, 3});
  CHECK(degree_ci(g25) == 15);
  auto g36 = CicyInstance::make(catalog_poset("rect-3-3").poset, std::vector<int>(6, 1));
  CHECK(degree_ci(g36) == 42);  // deg G(3,6) = 42
  auto g27 = CicyInstance::make(catalog_poset("rect-2-5").poset, std::vector<int>(7, 1));
  CHECK(degree_ci(g27) == 42);  // deg G(2,7) = 42
  auto r = invariant_report(g27);
  CHECK(r.chi_y == 2 * (int)(r.h11_y.get_si() - r.h21_y.get_si()));
  CHECK(r.chi_y.get_si() % 2 == 0);
}

TEST_CASE("og510 sections") {
  auto inst = CicyInstance::make(catalog_poset("og510").poset, {1, 1, 1, 1, 1, 1, 2});
  CHECK(degree_ci(inst) == 24);
  auto rep = invariant_report(inst);
  // degree-2 section route: h11(Y) = 4, h21(Y) = 48, 14 nodes
  CHECK(rep.c2_h == 72);
  CHECK(rep.h11_y == 4);
  CHECK(rep.h21_y == 48);
  CHECK(rep.nodes == 14);
  CHECK(rep.chi_x == -116);
}

TEST_CASE("precondition checks") {
  CHECK_THROWS(CicyInstance::make(catalog_poset("rect-2-3").poset, std::vector<int>(5, 1)));
  CHECK_THROWS(CicyInstance::make(catalog_poset("sigma").poset, std::vector<int>(8, 1)));
  auto np = Poset::build({"w", "x", "y", "z"}, {{"z", "x"}, {"z", "y"}, {"y", "w"}});
  CHECK_THROWS(CicyInstance::make(np, {3}));
}
