#include "concom/bivector.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

using namespace concom;
using GR = GaussianRational;

namespace {

GR gr(long re_n, long re_d, long im_n, long im_d) {
  return GR(Rational(re_n) / Rational(re_d), Rational(im_n) / Rational(im_d));
}

Bivector<GR> sample_exact() {
  Bivector<GR> f;
  f.E << gr(1, 1, 2, 1), gr(-3, 2, 0, 1), gr(0, 1, 1, 3);
  f.B << gr(2, 5, -1, 1), gr(4, 1, 1, 2), gr(-1, 7, 3, 4);
  return f;
}

double cdiff(const Bivector<Complex>& a, const Bivector<Complex>& b) {
  return max_abs_diff(a, b);
}

}  // namespace

TEST_CASE("matrix_form places E in the i0 column and B on the spatial cycle") {
  Bivector<GR> f;
  f.E << GR(2), GR(3), GR(5);
  f.B << GR(7), GR(11), GR(13);
  const auto t = matrix_form(f);
  CHECK(t(1, 0) == GR(2));
  CHECK(t(2, 0) == GR(3));
  CHECK(t(3, 0) == GR(5));
  CHECK(t(0, 1) == GR(-2));
  CHECK(t(3, 2) == GR(7));
  CHECK(t(1, 3) == GR(11));
  CHECK(t(2, 1) == GR(13));
  for (int a = 0; a < 4; ++a) {
    CHECK(t(a, a) == GR(0));
    for (int b = 0; b < 4; ++b) CHECK(t(a, b) == -t(b, a));
  }
  CHECK(t.variance(0) == Variance::upper);
  CHECK(t.variance(1) == Variance::upper);
}

TEST_CASE("from_matrix inverts matrix_form and rejects bad input") {
  const auto f = sample_exact();
  CHECK(from_matrix(matrix_form(f)) == f);

  auto broken = matrix_form(f);
  broken(0, 2) = broken(0, 2) + GR(1);
  CHECK_THROWS_AS(from_matrix(broken), antisymmetry_error);

  auto mixed = adjust_index(matrix_form(f), 1, Variance::lower);
  CHECK_THROWS_AS(from_matrix(mixed), std::invalid_argument);
}

TEST_CASE("from_matrix tolerance applies on the float backend") {
  Bivector<Complex> f;
  f.E << Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0);
  auto t = matrix_form(f);
  t(0, 1) += Complex(1e-14, 0.0);
  CHECK(std::abs(from_matrix(t).E(0) - Complex(1.0, 0.0)) < 1e-12);
  t(0, 1) += Complex(1e-3, 0.0);
  CHECK_THROWS_AS(from_matrix(t), antisymmetry_error);
}

TEST_CASE("sixtor order is E1 E2 E3 B1 B2 B3") {
  const auto f = sample_exact();
  const auto v = sixtor_form(f);
  for (int k = 0; k < 3; ++k) {
    CHECK(v(k) == f.E(k));
    CHECK(v(3 + k) == f.B(k));
  }
  CHECK(from_sixtor(v) == f);

  // Pair 3 is [32], so slot 3 carries B1.
  const auto t = matrix_form(f);
  for (int A = 0; A < 6; ++A)
    CHECK(t(kSixtorPairs[A][0], kSixtorPairs[A][1]) == v(A));
}

TEST_CASE("sixtor_slot reports canonical pairs, reversals, and diagonals") {
  CHECK(sixtor_slot(1, 0) == std::pair<int, int>{0, 1});
  CHECK(sixtor_slot(0, 1) == std::pair<int, int>{0, -1});
  CHECK(sixtor_slot(3, 2) == std::pair<int, int>{3, 1});
  CHECK(sixtor_slot(1, 3) == std::pair<int, int>{4, 1});
  CHECK(sixtor_slot(3, 1) == std::pair<int, int>{4, -1});
  CHECK(sixtor_slot(2, 1) == std::pair<int, int>{5, 1});
  CHECK(sixtor_slot(2, 2).second == 0);
}

TEST_CASE("dual kernel agrees with the E,B swap and squares to -1") {
  const auto f = sample_exact();
  const auto d = dual(f);
  CHECK(d == duality_transform(f));
  CHECK(d.E == -f.B);
  CHECK(d.B == f.E);
  CHECK(dual(d) == -f);

  // Flipping the epsilon convention negates the dual.
  CHECK(dual(f, 1) == -d);

  auto mixed = adjust_index(matrix_form(f), 0, Variance::lower);
  CHECK_THROWS_AS(dual(mixed), std::invalid_argument);
}

TEST_CASE("self-dual parts carry duality eigenvalues -i and +i") {
  const auto f = sample_exact();
  const auto p = self_dual_parts(f);
  const GR i = scalar_traits<GR>::imag_unit();
  CHECK(p.minus + p.plus == f);
  CHECK(dual(p.minus) == -i * p.minus);
  CHECK(dual(p.plus) == i * p.plus);
  CHECK(p.conj_minus == conjugate(p.minus));
  CHECK(p.conj_plus == conjugate(p.plus));

  // A real bivector ties the conjugate parts to the opposite eigenvalue.
  Bivector<GR> r;
  r.E << GR(1), GR(-2), GR(3);
  r.B << GR(5), GR(0), GR(-4);
  const auto rp = self_dual_parts(r);
  CHECK(rp.conj_minus == rp.plus);
  CHECK(rp.conj_plus == rp.minus);
}

TEST_CASE("phase_rotate demands unit modulus on the exact backend") {
  const auto f = sample_exact();
  const GR phase = gr(3, 5, 4, 5);  // |3/5 + 4i/5| = 1
  const auto g = phase_rotate(f, phase);
  CHECK(g.E(0) == phase * f.E(0));
  CHECK_THROWS_AS(phase_rotate(f, GR(2)), std::invalid_argument);
}

TEST_CASE("cdot conjugates the left factor and cross3 is the usual cross") {
  Vec3<GR> a, b;
  a << scalar_traits<GR>::imag_unit(), GR(0), GR(0);
  b << scalar_traits<GR>::imag_unit(), GR(0), GR(0);
  CHECK(cdot(a, b) == GR(1));

  Vec3<GR> x, y;
  x << GR(1), GR(0), GR(0);
  y << GR(0), GR(1), GR(0);
  const auto z = cross3(x, y);
  CHECK(z(0) == GR(0));
  CHECK(z(1) == GR(0));
  CHECK(z(2) == GR(1));
  CHECK(cross3(y, x) == Vec3<GR>(-z));
}

TEST_CASE("boost of a transverse field matches the textbook formula") {
  Bivector<Complex> f;
  f.E << Complex(0.0), Complex(1.0), Complex(0.0);
  const double v = 0.5;
  const double gamma = 1.0 / std::sqrt(1.0 - v * v);
  const auto lt = make_boost(Eigen::Vector3d(v, 0.0, 0.0));
  const auto g = lorentz_transform(f, lt);
  CHECK(std::abs(g.E(0)) < 1e-12);
  CHECK(std::abs(g.E(1) - Complex(gamma)) < 1e-12);
  CHECK(std::abs(g.E(2)) < 1e-12);
  CHECK(std::abs(g.B(0)) < 1e-12);
  CHECK(std::abs(g.B(1)) < 1e-12);
  CHECK(std::abs(g.B(2) - Complex(-gamma * v)) < 1e-12);

  CHECK_THROWS_AS(make_boost(Eigen::Vector3d(1.0, 0.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(make_boost(Eigen::Vector3d(0.8, 0.8, 0.0)), std::invalid_argument);
}

TEST_CASE("rotation acts on E and B as 3-vectors") {
  Bivector<Complex> f;
  f.E << Complex(1.0), Complex(0.0), Complex(0.0);
  f.B << Complex(0.0), Complex(0.0), Complex(2.0);
  const double pi = std::acos(-1.0);
  const auto lt = make_rotation(Eigen::Vector3d(0.0, 0.0, 1.0), pi / 2.0);
  const auto g = lorentz_transform(f, lt);
  CHECK(std::abs(g.E(0)) < 1e-12);
  CHECK(std::abs(g.E(1) - Complex(1.0)) < 1e-12);
  CHECK(std::abs(g.B(2) - Complex(2.0)) < 1e-12);

  CHECK_THROWS_AS(make_rotation(Eigen::Vector3d::Zero(), 1.0), std::invalid_argument);
}

TEST_CASE("tensor and bivector transforms agree") {
  const auto f = random_bivector<Complex>(2024);
  const auto lt = make_boost(Eigen::Vector3d(0.3, -0.2, 0.4));
  const auto via_tensor = from_matrix(lorentz_transform(matrix_form(f), lt), 1e-9);
  const auto direct = lorentz_transform(f, lt);
  CHECK(cdiff(via_tensor, direct) < 1e-12);

  auto mixed = adjust_index(matrix_form(f), 0, Variance::lower);
  CHECK_THROWS_AS(lorentz_transform(mixed, lt), std::invalid_argument);
}

TEST_CASE("random_bivector is deterministic in the seed") {
  const auto a = random_bivector<GR>(7);
  const auto b = random_bivector<GR>(7);
  const auto c = random_bivector<GR>(8);
  CHECK(a == b);
  CHECK(a != c);
  CHECK_FALSE(is_zero(a));
}

TEST_CASE("bivector arithmetic and conjugation") {
  const auto f = sample_exact();
  const auto g = random_bivector<GR>(3);
  CHECK((f + g) - g == f);
  CHECK(-f + f == Bivector<GR>{});
  CHECK(GR(2) * f == f * GR(2));
  CHECK(conjugate(conjugate(f)) == f);
  CHECK(is_zero(Bivector<GR>{}));
  CHECK(max_abs_diff(f, f) == 0.0);
}
