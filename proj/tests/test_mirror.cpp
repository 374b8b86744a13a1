#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcy/mirror.hpp"
#include "mcy/period.hpp"

using namespace mcy;

namespace {

ThetaOperator quintic_operator() {
  auto op = ThetaOperator::theta_power(4);
  auto f = ThetaOperator::affine(5, 1) * ThetaOperator::affine(5, 2) *
           ThetaOperator::affine(5, 3) * ThetaOperator::affine(5, 4);
  return op + ThetaOperator::x_power(1).scaled(-5) * f;
}

ThetaOperator sigma_operator() {
  std::vector<std::vector<Int>> c(6, std::vector<Int>(5, Int(0)));
  c[0] = {0, 0, 0, 0, 121};
  c[1] = {-77 * 11, -77 * 77, -77 * 210, -77 * 266, -77 * 130};
  c[2] = {-11198, -55253, -103725, -89990, -32126};
  c[3] = {-1716, -20625, -63474, -74184, -28723};
  c[4] = {-7 * 110, -7 * 713, -7 * 1881, -7 * 2336, -7 * 1135};
  c[5] = {-49, -49 * 4, -49 * 6, -49 * 4, -49};
  return ThetaOperator(std::move(c));
}

}  // namespace

TEST_CASE("quintic mirror map and BPS") {
  auto op = quintic_operator();
  auto fb = frobenius_basis(op, 10);
  auto mm = mirror_map(fb, 8);
  CHECK(mm.q_of_x[1] == 1);
  CHECK(mm.x_of_q[1] == 1);
  CHECK(mm.x_of_q[2] == -770);
  // round trip
  auto rt = mm.q_of_x.compose(mm.x_of_q);
  CHECK(rt[1] == 1);
  for (int i = 2; i <= 7; ++i) CHECK(rt[i] == 0);
  auto n0 = bps_from_operator(op, Int(5), 4);
  CHECK(n0[0] == 2875);
  CHECK(n0[1] == 609250);
  CHECK(n0[2] == 317206375);
  CHECK(n0[3] == Int("242467530000"));
}

TEST_CASE("sigma X-side BPS") {
  auto n0 = bps_from_operator(sigma_operator(), Int(33), 5);
  CHECK(n0[0] == 252);
  CHECK(n0[1] == 1854);
  CHECK(n0[2] == 27156);
  CHECK(n0[3] == 567063);
  CHECK(n0[4] == 14514039);
}

TEST_CASE("sigma Z-side BPS") {
  auto opz = sigma_operator().invert_and_conjugate(Rat(-1));
  auto n0 = bps_from_operator(opz, Int(21), 4);
  CHECK(n0[0] == 387);
  CHECK(n0[1] == 4671);
  CHECK(n0[2] == 124323);
  CHECK(n0[3] == 4782996);
}

TEST_CASE("gauge invariance under period rescaling") {
  // scaling the period leaves q(x), K_ttt, and the BPS numbers unchanged
  auto op = quintic_operator();
  auto fb = frobenius_basis(op, 10);
  FrobeniusBasis scaled = fb;
  for (auto& w : scaled.wreg) w *= Rat(7, 3);
  auto mm1 = mirror_map(fb, 8);
  auto mm2 = mirror_map(scaled, 8);
  for (int i = 0; i < 8; ++i) CHECK(mm1.q_of_x[i] == mm2.q_of_x[i]);
  auto k1 = yukawa(op, Int(5), fb, 8);
  auto k2 = yukawa(op, Int(5), scaled, 8);
  for (int i = 0; i < 8; ++i) CHECK(k1[i] == k2[i]);
}

TEST_CASE("integrality guard") {
  // a Lambert expansion with a fractional coefficient must hard-error
  Series bad(std::vector<Rat>{Rat(5), Rat(1, 2), Rat(3), Rat(4), Rat(6)});
  CHECK_THROWS(bps_genus0(bad, Int(5), 3));
  Series mism(std::vector<Rat>{Rat(4), Rat(8), Rat(3), Rat(4), Rat(6)});
  CHECK_THROWS(bps_genus0(mism, Int(5), 3));
}
