#include "concom/concomitants.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace concom;
using GR = GaussianRational;

namespace {

GR half() { return scalar_traits<GR>::ratio(1, 2); }
GR gi() { return scalar_traits<GR>::imag_unit(); }

Rational rat(long n, long d) { return Rational(n) / Rational(d); }

Bivector<GR> static_e_field() {
  Bivector<GR> f;
  f.E << GR(1), GR(0), GR(0);
  return f;
}

}  // namespace

TEST_CASE("static electric field: every piece has its textbook value") {
  const auto f = static_e_field();
  const auto all = compute_all(f);

  CHECK(all.scalars.lplus == rat(1, 2));
  CHECK(all.scalars.lminus == Rational(0));

  // T'^{1010} = 1/2, and pair [10] is sixtor slot 0.
  CHECK(all.tprime.tensor(1, 0, 1, 0) == half());
  CHECK(sixtor_matrix(all.tprime)(0, 0) == half());

  // tension along the field line, pressure across it; trace vanishes
  CHECK(all.t2.tensor(0, 0) == half());
  CHECK(all.t2.tensor(1, 1) == -half());
  CHECK(all.t2.tensor(2, 2) == half());
  CHECK(all.t2.tensor(3, 3) == half());
  CHECK(is_zero(all.q2.tensor));
  CHECK(is_zero(all.d2irr.tensor));
  CHECK(is_zero(all.x2irr.tensor));

  // D4 sixtor blocks: S = diag(1/3, -1/6, -1/6), P = 0.
  const auto m4d = sixtor_matrix(all.d4irr);
  CHECK(m4d(0, 0) == GR(rat(1, 3)));
  CHECK(m4d(1, 1) == GR(rat(-1, 6)));
  CHECK(m4d(2, 2) == GR(rat(-1, 6)));
  CHECK(m4d(0, 1) == GR(0));
  CHECK(m4d(0, 3) == GR(0));
  CHECK(m4d(3, 3) == GR(rat(-1, 3)));

  const auto ref = real_reference(f);
  CHECK(ref.lplus_r == rat(1, 2));
  CHECK(ref.lminus_r == Rational(0));
  CHECK(ref.stress(0, 0) == half());
  CHECK(ref.stress == all.t2.tensor);
}

TEST_CASE("circularly polarized analytic field: null invariants and axial flux") {
  Bivector<GR> f;
  f.E << GR(1), -gi(), GR(0);
  f.B << gi(), GR(1), GR(0);
  const auto all = compute_all(f);

  CHECK(all.scalars.lplus == Rational(0));
  CHECK(all.scalars.lminus == Rational(0));
  CHECK(all.t2.tensor(0, 0) == GR(2));
  CHECK(all.t2.tensor(3, 0) == GR(2));
  CHECK(all.t2.tensor(1, 0) == GR(0));
  CHECK(all.t2.tensor(2, 0) == GR(0));
  CHECK(all.q2.tensor(0, 0) == GR(2));
  CHECK(all.q2.tensor(3, 0) == GR(2));
  CHECK(is_zero(all.d2irr.tensor));
  CHECK(is_zero(all.x2irr.tensor));

  // The opposite handedness flips the helicity-odd Q components; the energy
  // flux still points along the propagation axis.
  Bivector<GR> g;
  g.E << GR(1), gi(), GR(0);
  g.B << -gi(), GR(1), GR(0);
  const auto rev = compute_all(g);
  CHECK(rev.t2.tensor(0, 0) == GR(2));
  CHECK(rev.t2.tensor(3, 0) == GR(2));
  CHECK(rev.q2.tensor(0, 0) == GR(-2));
  CHECK(rev.q2.tensor(3, 0) == GR(-2));
}

TEST_CASE("crossed complex field: antisymmetric pieces light up") {
  Bivector<GR> f;
  f.E << GR(1), GR(0), GR(0);
  f.B << GR(0), gi(), GR(0);
  const auto all = compute_all(f);

  CHECK(all.scalars.lplus == Rational(0));
  CHECK(all.scalars.lminus == Rational(0));
  CHECK(all.d2irr.tensor(3, 0) == GR(-1));
  CHECK(all.d2irr.tensor(0, 3) == GR(1));
  CHECK(all.x2irr.tensor(1, 2) == GR(1));
  CHECK(all.x2irr.tensor(2, 1) == GR(-1));
  for (int i = 1; i < 4; ++i) CHECK(all.x2irr.tensor(i, 0) == GR(0));
}

TEST_CASE("pure magnetic field flips the sign of L+") {
  Bivector<GR> f;
  f.B << GR(1), GR(0), GR(0);
  const auto s = scalar_invariants(f);
  CHECK(s.lplus == rat(-1, 2));
  CHECK(s.lminus == Rational(0));
  const auto ref = real_reference(f);
  CHECK(ref.lplus_r == rat(-1, 2));
  CHECK(ref.lminus_r == Rational(0));
}

TEST_CASE("L+ is exactly 1/8 for a half-strength field") {
  Bivector<GR> f;
  f.E << GR(rat(1, 2)), GR(0), GR(0);
  CHECK(scalar_invariants(f).lplus == rat(1, 8));
}

TEST_CASE("T2 alone does not determine T': the partner tensor is required") {
  Bivector<GR> f1, f2;
  f1.E << GR(1), gi(), GR(0);
  f2.E << GR(1), -gi(), GR(0);
  const auto a = compute_all(f1);
  const auto b = compute_all(f2);
  CHECK(a.t2.tensor == b.t2.tensor);
  CHECK(a.q2.tensor != b.q2.tensor);
  CHECK(a.tprime.tensor != b.tprime.tensor);

  // With the partner included the reconstruction is exact for both.
  const auto v2a = valence2_set(f1);
  const auto v2b = valence2_set(f2);
  CHECK(reconstruct_v4(v2a, Valence4Tag::Tprime).tensor == a.tprime.tensor);
  CHECK(reconstruct_v4(v2b, Valence4Tag::Tprime).tensor == b.tprime.tensor);
  CHECK(reconstruct_v4(v2a, Valence4Tag::Qprime).tensor == a.qprime.tensor);
  CHECK_THROWS_AS(reconstruct_v4(v2a, Valence4Tag::D4irr), std::invalid_argument);
  CHECK_THROWS_AS(reconstruct_v4(v2a.t2, v2a.t2), std::invalid_argument);
}

TEST_CASE("epsilon-kernel route equals the self-dual projector route") {
  const auto f = random_bivector<GR>(41);
  const auto a = valence4_set(f);
  const auto b = valence4_set_self_dual(f);
  CHECK(a.tprime.tensor == b.tprime.tensor);
  CHECK(a.qprime.tensor == b.qprime.tensor);
  CHECK(a.dprime.tensor == b.dprime.tensor);
  CHECK(a.xprime.tensor == b.xprime.tensor);
}

TEST_CASE("abstract route reproduces the E,B oracle on a random bivector") {
  const auto f = random_bivector<GR>(99);
  const auto got = compute_all(f);
  const auto want = eb_oracle(f);
  CHECK(got.scalars.lplus == want.scalars.lplus);
  CHECK(got.scalars.lminus == want.scalars.lminus);
  CHECK(got.t2.tensor == want.t2.tensor);
  CHECK(got.q2.tensor == want.q2.tensor);
  CHECK(got.d2irr.tensor == want.d2irr.tensor);
  CHECK(got.x2irr.tensor == want.x2irr.tensor);
  CHECK(got.tprime.tensor == want.tprime.tensor);
  CHECK(got.qprime.tensor == want.qprime.tensor);
  CHECK(got.dprime.tensor == want.dprime.tensor);
  CHECK(got.xprime.tensor == want.xprime.tensor);
  CHECK(got.d4irr.tensor == want.d4irr.tensor);
  CHECK(got.x4irr.tensor == want.x4irr.tensor);
}

TEST_CASE("leading-pair dual rotates D4 into X4") {
  const auto f = random_bivector<GR>(7);
  const auto all = compute_all(f);
  CHECK(dual_first_pair(all.d4irr.tensor) == all.x4irr.tensor);
  CHECK(dual_first_pair(all.x4irr.tensor) == -all.d4irr.tensor);
}

TEST_CASE("zero bivector maps to the zero set") {
  const auto all = compute_all(Bivector<GR>{});
  CHECK(all.scalars.lplus == Rational(0));
  CHECK(all.scalars.lminus == Rational(0));
  CHECK(is_zero(all.tprime.tensor));
  CHECK(is_zero(all.t2.tensor));
  CHECK(is_zero(all.d4irr.tensor));
  CHECK(is_zero(all.x4irr.tensor));
}

TEST_CASE("real_reference rejects complex input") {
  Bivector<GR> f;
  f.E << gi(), GR(0), GR(0);
  CHECK_THROWS_AS(real_reference(f), std::invalid_argument);
}

TEST_CASE("sixtor matrix round trip and guard") {
  const auto f = random_bivector<GR>(12);
  const auto t = valence4_set(f).tprime.tensor;
  const auto m = sixtor_matrix(t);
  CHECK(tensor_from_sixtor_matrix(m) == t);
  CHECK(m(0, 0) == t(1, 0, 1, 0));
  CHECK(m(3, 4) == t(3, 2, 1, 3));
}

TEST_CASE("trace2 contracts against the metric") {
  CHECK(trace2(metric<GR>(Variance::upper)) == GR(4));
  const auto f = static_e_field();
  CHECK(trace2(compute_all(f).t2.tensor) == GR(0));
}

TEST_CASE("tags carry their display names") {
  CHECK(std::string(to_string(Valence4Tag::Tprime)) == "Tprime");
  CHECK(std::string(to_string(Valence4Tag::X4irr)) == "X4irr");
  CHECK(std::string(to_string(Valence2Tag::D2irr)) == "D2irr");
  CHECK(compute_all(static_e_field()).q2.tag == Valence2Tag::Q2);
}
