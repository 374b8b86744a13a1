#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcy/monodromy.hpp"

using namespace mcy;

namespace {

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

TEST_CASE("real and complex arithmetic") {
  mpfr_prec_t prec = 256;
  Real a(2.0, prec);
  CHECK(std::abs((sqrt(a) * sqrt(a) - a).to_double()) < 1e-70);
  Real pi = Real::pi(prec);
  CHECK(std::abs(pi.to_double() - 3.14159265358979) < 1e-13);
  Complex i(Real(0.0, prec), Real(1.0, prec));
  Complex m1 = i * i;
  CHECK(std::abs(m1.re.to_double() + 1) < 1e-70);
  CHECK(std::abs(m1.im.to_double()) < 1e-70);
}

TEST_CASE("zeta3") {
  Real z = zeta3(200);
  CHECK(std::abs(z.to_double() - 1.2020569031595942854) < 1e-15);
}

TEST_CASE("matrix inverse") {
  mpfr_prec_t prec = 128;
  CMatrix m(3, prec);
  double vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = Complex::of(vals[i][j], 0, prec);
  auto p = m * m.inverse();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(p.at(i, j).re.to_double() - (i == j ? 1 : 0)) < 1e-30);
}

TEST_CASE("singular points of the sigma operator") {
  Transporter tr(sigma_operator(), 200);
  auto reals = tr.real_singular_points();
  REQUIRE(reals.size() == 5);
  CHECK(reals[0] == doctest::Approx(-158.4699).epsilon(1e-4));
  CHECK(reals[1] == doctest::Approx(-11.0 / 7.0).epsilon(1e-8));
  CHECK(reals[2] == doctest::Approx(-0.541757).epsilon(1e-4));
  CHECK(reals[3] == doctest::Approx(0.0));
  CHECK(reals[4] == doctest::Approx(0.0116479).epsilon(1e-4));
}

TEST_CASE("contractible loop is the identity") {
  // transport around a small square enclosing no singularity
  auto op = sigma_operator();
  int digits = 40;
  mpfr_prec_t prec = (mpfr_prec_t)(digits * 3.33) + 64;
  Transporter tr(op, prec);
  auto fb = frobenius_basis(op, 220);
  Real xb(0.0116479 / 2, prec);
  CMatrix Y0 = tr.frobenius_values(fb, xb);
  double b = xb.to_double();
  std::vector<Complex> path = {Complex::of(b, 0, prec),    Complex::of(b, 0.002, prec),
                               Complex::of(b + 0.002, 0.002, prec),
                               Complex::of(b + 0.002, 0, prec), Complex::of(b, 0, prec)};
  auto Y = tr.transport(Y0, path);
  auto M = (Y0.inverse() * Y).transpose();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double want = i == j ? 1 : 0;
      CHECK(std::abs(M.at(i, j).re.to_double() - want) < 1e-25);
      CHECK(std::abs(M.at(i, j).im.to_double()) < 1e-25);
    }
}

TEST_CASE("apparent singularity has no monodromy and conifolds are reflections") {
  auto op = sigma_operator();
  auto fm = monodromy_in_frobenius_basis(op, 40);
  REQUIRE(fm.points.size() == 5);
  // -11/7 is points[1]
  auto& M = fm.loops[1];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double want = i == j ? 1 : 0;
      CHECK(std::abs(M.at(i, j).re.to_double() - want) < 1e-20);
    }
  // conifold at zeta3: rank(M - 1) == 1 numerically: all 2x2 minors of M-1 small
  auto& C = fm.loops[4];
  CMatrix R = C;
  for (int i = 0; i < 4; ++i) R.at(i, i) = R.at(i, i) - Complex::of(1, 0, fm.prec);
  double max_minor = 0, max_entry = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) max_entry = std::max(max_entry, abs(R.at(i, j)).to_double());
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l) {
          Complex det = R.at(i, k) * R.at(j, l) - R.at(i, l) * R.at(j, k);
          max_minor = std::max(max_minor, abs(det).to_double());
        }
  CHECK(max_entry > 1e-5);
  CHECK(max_minor < 1e-22);
  // MUM monodromy in the integral basis matches the closed formula
  auto rep = integral_monodromy(fm, Int(33), Int(78), Int(-102), Rat(-1, 2));
  CHECK(rep.max_int_error < 1e-25);
  CHECK(rep.matrices[3] == mum_monodromy_formula(Int(33), Int(78), Rat(-1, 2)));
  CHECK(rep.product_identity);
  CHECK(rep.mum_maximally_unipotent);
}

TEST_CASE("integral basis search fails for wrong invariants") {
  auto op = sigma_operator();
  auto fm = monodromy_in_frobenius_basis(op, 40);
  auto bad = integral_basis_search(fm, Int(22), Int(78), Int(-102), 1e-18, 10);
  CHECK_FALSE(bad.has_value());
  auto good = integral_basis_search(fm, Int(33), Int(78), Int(-102), 1e-18, 10);
  REQUIRE(good.has_value());
  CHECK(good->norm.a == Rat(-1, 2));
  REQUIRE(good->invariant_symplectic_form.has_value());
}
