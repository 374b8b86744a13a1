#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcy/series.hpp"

using namespace mcy;

namespace {
Series geometric(size_t n) {
  std::vector<Rat> c(n, Rat(1));
  return Series(std::move(c));
}
}  // namespace

TEST_CASE("arithmetic") {
  auto g = geometric(10);
  auto one_minus_x = Series({Rat(1), Rat(-1)}).truncated(10);
  auto prod = g * one_minus_x;
  CHECK(prod[0] == 1);
  for (int i = 1; i < 10; ++i) CHECK(prod[i] == 0);
  CHECK((one_minus_x.inverse() - g)[5] == 0);
}

TEST_CASE("exp log inverse") {
  std::vector<Rat> x(12, Rat(0));
  x[1] = 1;
  Series sx(std::move(x));
  auto e = sx.exp();
  for (int i = 0; i < 12; ++i) {
    Rat expect = Rat(1) / Rat(factorial(i));
    CHECK(e[i] == expect);
  }
  auto back = e.log();
  CHECK(back[1] == 1);
  for (int i = 2; i < 12; ++i) CHECK(back[i] == 0);
}

TEST_CASE("composition and reversion") {
  // f = x + x^2: reversion g satisfies f(g) = x
  std::vector<Rat> f(16, Rat(0));
  f[1] = 1;
  f[2] = 1;
  Series F(std::move(f));
  Series G = F.reversion();
  Series FG = F.compose(G);
  CHECK(FG[1] == 1);
  for (int i = 2; i < 16; ++i) CHECK(FG[i] == 0);
  // Catalan pattern: g = (sqrt(1+4x)-1)/2 = x - x^2 + 2x^3 - 5x^4 + ...
  CHECK(G[1] == 1);
  CHECK(G[2] == -1);
  CHECK(G[3] == 2);
  CHECK(G[4] == -5);
  CHECK(G[5] == 14);
}

TEST_CASE("derivative integral") {
  Series g = geometric(8);
  auto d = g.derivative();
  CHECK(d[0] == 1);
  CHECK(d[3] == 4);
  auto i = d.integral();
  for (int k = 1; k < 8; ++k) CHECK(i[k] == 1);
}
