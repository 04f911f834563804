#include "concom/signal.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace concom;

namespace {

constexpr double kTau = 6.28318530717958647692;

FieldSampleSeries tone(int n, double rate, double freq, int channel, bool use_sin) {
  FieldSampleSeries s;
  s.t.resize(static_cast<std::size_t>(n));
  s.e_samples.assign(static_cast<std::size_t>(n), Eigen::Vector3d::Zero());
  s.b_samples.assign(static_cast<std::size_t>(n), Eigen::Vector3d::Zero());
  for (int k = 0; k < n; ++k) {
    const double t = k / rate;
    const double theta = kTau * freq * t;
    s.t[static_cast<std::size_t>(k)] = t;
    const double v = use_sin ? std::sin(theta) : std::cos(theta);
    if (channel < 3)
      s.e_samples[static_cast<std::size_t>(k)](channel) = v;
    else
      s.b_samples[static_cast<std::size_t>(k)](channel - 3) = v;
  }
  return s;
}

}  // namespace

TEST_CASE("analytic signal of a cosine is the complex exponential") {
  const auto s = tone(64, 64.0, 4.0, 0, false);
  const auto a = analytic_signal(s);
  REQUIRE(a.bivectors.size() == 64u);
  for (int k = 0; k < 64; ++k) {
    const double theta = kTau * 4.0 * s.t[static_cast<std::size_t>(k)];
    const Complex want(std::cos(theta), std::sin(theta));
    CHECK(std::abs(a.bivectors[static_cast<std::size_t>(k)].E(0) - want) < 1e-9);
    CHECK(std::abs(a.bivectors[static_cast<std::size_t>(k)].E(1)) < 1e-9);
    CHECK(std::abs(a.bivectors[static_cast<std::size_t>(k)].B(2)) < 1e-9);
  }
}

TEST_CASE("analytic signal of a sine is -i times the complex exponential") {
  const auto s = tone(64, 64.0, 4.0, 4, true);  // B_y channel
  const auto a = analytic_signal(s);
  for (int k = 0; k < 64; ++k) {
    const double theta = kTau * 4.0 * s.t[static_cast<std::size_t>(k)];
    const Complex want(std::sin(theta), -std::cos(theta));
    CHECK(std::abs(a.bivectors[static_cast<std::size_t>(k)].B(1) - want) < 1e-9);
  }
}

TEST_CASE("DC passes through the analytic signal unchanged") {
  FieldSampleSeries s;
  for (int k = 0; k < 8; ++k) {
    s.t.push_back(k * 0.125);
    s.e_samples.emplace_back(3.5, -1.0, 0.25);
    s.b_samples.emplace_back(0.0, 2.0, -4.5);
  }
  const auto a = analytic_signal(s);
  for (const auto& f : a.bivectors) {
    CHECK(std::abs(f.E(0) - Complex(3.5)) < 1e-12);
    CHECK(std::abs(f.E(1) - Complex(-1.0)) < 1e-12);
    CHECK(std::abs(f.B(2) - Complex(-4.5)) < 1e-12);
  }
}

TEST_CASE("the even-length Nyquist bin keeps weight one") {
  // cos(pi k) lives entirely in the Nyquist bin; the analytic signal must stay real.
  FieldSampleSeries s;
  for (int k = 0; k < 8; ++k) {
    s.t.push_back(k * 1.0);
    s.e_samples.emplace_back((k % 2 == 0) ? 1.0 : -1.0, 0.0, 0.0);
    s.b_samples.emplace_back(0.0, 0.0, 0.0);
  }
  const auto a = analytic_signal(s);
  for (int k = 0; k < 8; ++k) {
    const double want = (k % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::abs(a.bivectors[static_cast<std::size_t>(k)].E(0) - Complex(want)) < 1e-12);
  }
}

TEST_CASE("validate_series rejects malformed input") {
  FieldSampleSeries s = tone(8, 8.0, 1.0, 0, false);
  CHECK_NOTHROW(validate_series(s));

  auto short_series = tone(8, 8.0, 1.0, 0, false);
  short_series.t.resize(3);
  short_series.e_samples.resize(3);
  short_series.b_samples.resize(3);
  CHECK_THROWS_AS(validate_series(short_series), std::invalid_argument);

  auto mismatched = s;
  mismatched.e_samples.pop_back();
  CHECK_THROWS_AS(validate_series(mismatched), std::invalid_argument);

  auto with_nan = s;
  with_nan.b_samples[2](1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate_series(with_nan), std::invalid_argument);

  auto decreasing = s;
  decreasing.t[1] = decreasing.t[0] - 1.0;
  CHECK_THROWS_AS(validate_series(decreasing), std::invalid_argument);

  auto jittered = s;
  jittered.t[4] += 0.01;
  CHECK_THROWS_AS(validate_series(jittered), std::invalid_argument);
}

TEST_CASE("synth_plane_wave lays out the transverse frame") {
  PlaneWaveParams p;
  p.amplitude = 2.0;
  p.polarization = Polarization::circular_left;
  p.axis = 2;
  p.n = 16;
  p.sample_rate = 16.0;
  p.frequency = 1.0;
  const auto s = synth_plane_wave(p);
  REQUIRE(s.t.size() == 16u);
  // At t = 0: E along x, B = khat x E along y.
  CHECK(s.e_samples[0](0) == doctest::Approx(2.0));
  CHECK(s.e_samples[0](1) == doctest::Approx(0.0));
  CHECK(s.e_samples[0](2) == 0.0);
  CHECK(s.b_samples[0](0) == doctest::Approx(0.0));
  CHECK(s.b_samples[0](1) == doctest::Approx(2.0));
  CHECK(s.b_samples[0](2) == 0.0);

  PlaneWaveParams lin = p;
  lin.polarization = Polarization::linear;
  const auto sl = synth_plane_wave(lin);
  for (std::size_t k = 0; k < sl.t.size(); ++k) {
    CHECK(sl.e_samples[k](1) == 0.0);
    CHECK(sl.b_samples[k](0) == doctest::Approx(0.0));
  }

  PlaneWaveParams bad = p;
  bad.n = 3;
  CHECK_THROWS_AS(synth_plane_wave(bad), std::invalid_argument);
  bad = p;
  bad.sample_rate = 0.0;
  CHECK_THROWS_AS(synth_plane_wave(bad), std::invalid_argument);
  bad = p;
  bad.frequency = 8.0;  // at Nyquist
  CHECK_THROWS_AS(synth_plane_wave(bad), std::invalid_argument);
  bad = p;
  bad.axis = 3;
  CHECK_THROWS_AS(synth_plane_wave(bad), std::invalid_argument);
}

TEST_CASE("circular waves give constant energy, axial flux, and null invariants") {
  PlaneWaveParams p;
  p.polarization = Polarization::circular_left;
  p.n = 256;
  p.sample_rate = 256.0;
  p.frequency = 8.0;
  const std::vector<std::string> sel{"T00", "Q30", "Q00", "Lplus", "Lminus"};
  const auto left = concomitant_series(analytic_signal(synth_plane_wave(p)), sel);
  REQUIRE(left.columns.size() == 5u);
  for (std::size_t k = 0; k < left.t.size(); ++k) {
    CHECK(left.columns[0][k] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(left.columns[1][k] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(left.columns[2][k] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(std::abs(left.columns[3][k]) < 1e-9);
    CHECK(std::abs(left.columns[4][k]) < 1e-9);
  }

  p.polarization = Polarization::circular_right;
  const auto right = concomitant_series(analytic_signal(synth_plane_wave(p)), sel);
  for (std::size_t k = 0; k < right.t.size(); ++k) {
    CHECK(right.columns[0][k] == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(right.columns[1][k] == doctest::Approx(-2.0).epsilon(1e-9));
  }

  // A carrier phase offset does not move the envelope quantities.
  p.polarization = Polarization::circular_left;
  p.phase = 0.7;
  const auto shifted = concomitant_series(analytic_signal(synth_plane_wave(p)), sel);
  for (std::size_t k = 0; k < shifted.t.size(); ++k)
    CHECK(shifted.columns[0][k] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("mirrored index pairs follow the component symmetry") {
  AnalyticBivectorSeries s;
  for (int k = 0; k < 4; ++k) {
    s.t.push_back(k);
    Bivector<Complex> f;
    f.E << Complex(1.0), Complex(0.0), Complex(0.0);
    f.B << Complex(0.0), Complex(0.0, 1.0), Complex(0.0);
    s.bivectors.push_back(f);
  }
  const auto out = concomitant_series(
      s, {"D30", "D03", "X12", "X21", "T10", "T01", "Q30", "Q03"});
  for (std::size_t k = 0; k < out.t.size(); ++k) {
    CHECK(out.columns[0][k] == doctest::Approx(-1.0));  // D30
    CHECK(out.columns[1][k] == doctest::Approx(1.0));   // D03 = -D30
    CHECK(out.columns[2][k] == doctest::Approx(1.0));   // X12
    CHECK(out.columns[3][k] == doctest::Approx(-1.0));  // X21 = -X12
    CHECK(out.columns[4][k] == out.columns[5][k]);      // T is symmetric
    CHECK(out.columns[6][k] == out.columns[7][k]);      // Q is symmetric
  }
}

TEST_CASE("selection rejects unknown component names") {
  AnalyticBivectorSeries s;
  s.t = {0.0, 1.0, 2.0, 3.0};
  s.bivectors.assign(4, Bivector<Complex>{});
  CHECK_THROWS_AS(concomitant_series(s, {"T44"}), std::invalid_argument);
  CHECK_THROWS_AS(concomitant_series(s, {"D00"}), std::invalid_argument);
  CHECK_THROWS_AS(concomitant_series(s, {"X33"}), std::invalid_argument);
  CHECK_THROWS_AS(concomitant_series(s, {"Lzero"}), std::invalid_argument);
  CHECK_THROWS_AS(concomitant_series(s, {""}), std::invalid_argument);
  CHECK_THROWS_AS(concomitant_series(s, {"T0"}), std::invalid_argument);
}

TEST_CASE("non-finite concomitant values are reported") {
  AnalyticBivectorSeries s;
  s.t = {0.0, 1.0};
  Bivector<Complex> f;
  f.E(0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  s.bivectors = {f, f};
  CHECK_THROWS_AS(concomitant_series(s, {"T00"}), std::runtime_error);
}

TEST_CASE("the component registry lists 34 canonical names") {
  const auto& names = component_registry();
  REQUIRE(names.size() == 34u);
  CHECK(names[0] == "T00");
  CHECK(names[1] == "T10");
  CHECK(names[10] == "Q00");
  CHECK(names[20] == "D10");
  CHECK(names[26] == "X10");
  CHECK(names[32] == "Lplus");
  CHECK(names[33] == "Lminus");
  // Every registry name resolves.
  AnalyticBivectorSeries s;
  s.t = {0.0, 1.0, 2.0, 3.0};
  s.bivectors.assign(4, Bivector<Complex>{});
  const auto out = concomitant_series(s, names);
  CHECK(out.columns.size() == 34u);
}

TEST_CASE("field CSV reader parses values and strips CRLF") {
  std::istringstream in(
      "t,Ex,Ey,Ez,Bx,By,Bz\r\n"
      "0,1,0,0,0,0,0\r\n"
      "0.25,0,1,0,0,0.5,0\n"
      "0.5,0,0,1,0,0,0\n"
      "0.75,0,0,0,1,0,0\n");
  const auto s = read_field_csv(in);
  REQUIRE(s.t.size() == 4u);
  CHECK(s.t[1] == 0.25);
  CHECK(s.e_samples[0](0) == 1.0);
  CHECK(s.e_samples[1](1) == 1.0);
  CHECK(s.b_samples[1](1) == 0.5);
  CHECK(s.b_samples[3](0) == 1.0);
}

TEST_CASE("field CSV reader reports structural errors") {
  std::istringstream bad_header("time,Ex,Ey,Ez,Bx,By,Bz\n0,1,0,0,0,0,0\n");
  CHECK_THROWS_AS(read_field_csv(bad_header), CsvError);

  std::istringstream bad_number("t,Ex,Ey,Ez,Bx,By,Bz\n0,1,0,0,0,0,0\n1,x,0,0,0,0,0\n");
  CHECK_THROWS_WITH_AS(read_field_csv(bad_number), "line 3: bad number 'x'", CsvError);

  std::istringstream short_row("t,Ex,Ey,Ez,Bx,By,Bz\n0,1,0\n");
  CHECK_THROWS_AS(read_field_csv(short_row), CsvError);

  std::istringstream empty_row("t,Ex,Ey,Ez,Bx,By,Bz\n0,1,0,0,0,0,0\n\n1,1,0,0,0,0,0\n");
  CHECK_THROWS_AS(read_field_csv(empty_row), CsvError);
}

TEST_CASE("complex CSV reader assembles bivectors") {
  std::istringstream in(
      "t,Ex_re,Ex_im,Ey_re,Ey_im,Ez_re,Ez_im,Bx_re,Bx_im,By_re,By_im,Bz_re,Bz_im\n"
      "0,1,0,0,-1,0,0,0,1,1,0,0,0\n"
      "1,1,0,0,-1,0,0,0,1,1,0,0,0\n");
  const auto s = read_complex_csv(in);
  REQUIRE(s.bivectors.size() == 2u);
  CHECK(s.bivectors[0].E(0) == Complex(1.0, 0.0));
  CHECK(s.bivectors[0].E(1) == Complex(0.0, -1.0));
  CHECK(s.bivectors[0].B(0) == Complex(0.0, 1.0));
  CHECK(s.bivectors[0].B(1) == Complex(1.0, 0.0));

  std::istringstream header_only(
      "t,Ex_re,Ex_im,Ey_re,Ey_im,Ez_re,Ez_im,Bx_re,Bx_im,By_re,By_im,Bz_re,Bz_im\n");
  CHECK_THROWS_AS(read_complex_csv(header_only), CsvError);
}

TEST_CASE("series CSV output uses shortest round-trip numbers") {
  ConcomitantSeries s;
  s.t = {0.0, 1.0};
  s.names = {"T00", "Lplus"};
  s.columns = {{1.5, 2.5}, {0.1, -0.25}};
  std::ostringstream out;
  write_series_csv(out, s);
  CHECK(out.str() == "t,T00,Lplus\n0,1.5,0.1\n1,2.5,-0.25\n");

  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-0.25) == "-0.25");
  for (double x : {1.0 / 3.0, 1e-9, 12345.6789, -7.0}) {
    CHECK(std::stod(format_double(x)) == x);
  }
}
