#pragma once

#include "concom/concomitants.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace concom {

// Uniformly sampled real E,B field data.
struct FieldSampleSeries {
  std::vector<double> t;
  std::vector<Eigen::Vector3d> e_samples;
  std::vector<Eigen::Vector3d> b_samples;
};

struct AnalyticBivectorSeries {
  std::vector<double> t;
  std::vector<Bivector<Complex>> bivectors;
};

struct ConcomitantSeries {
  std::vector<double> t;
  std::vector<std::string> names;
  std::vector<std::vector<double>> columns;  // one column per name
};

// length >= 4, matching array sizes, strictly increasing uniform t (1e-9 relative).
void validate_series(const FieldSampleSeries& series);

// Per channel: DFT, zero the negative-frequency bins, keep DC (and the Nyquist bin
// for even length) at weight 1, double the strictly positive bins, inverse DFT.
// The real parts reproduce the input to 1e-10 relative.
AnalyticBivectorSeries analytic_signal(const FieldSampleSeries& series);

// Canonical component names: T00..T33 and Q00..Q33 (lower triangle), D and X
// strictly-lower entries, Lplus, Lminus. 34 names.
const std::vector<std::string>& component_registry();

// Evaluates the 3-vector formulas per sample and emits the selected columns.
// Selection also accepts mirrored index pairs (T01 for T10, X12 for -X21).
// Unknown names throw std::invalid_argument.
ConcomitantSeries concomitant_series(const AnalyticBivectorSeries& series,
                                     const std::vector<std::string>& selection);

enum class Polarization { linear, circular_left, circular_right };

struct PlaneWaveParams {
  double amplitude = 1.0;
  double frequency = 1.0;  // Hz; must be below sample_rate/2
  Polarization polarization = Polarization::linear;
  int axis = 2;  // propagation axis: 0=x, 1=y, 2=z
  int n = 1024;
  double sample_rate = 1024.0;  // Hz
  double phase = 0.0;           // radians, offset added to omega*t
};

// Transverse wave along the given axis with B = khat x E. circular_left drives the
// second transverse axis with +sin, circular_right with -sin.
FieldSampleSeries synth_plane_wave(const PlaneWaveParams& params);

struct CsvError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Header "t,Ex,Ey,Ez,Bx,By,Bz", one decimal float row per sample.
FieldSampleSeries read_field_csv(std::istream& in);

// Pre-complexified input, header
// "t,Ex_re,Ex_im,Ey_re,Ey_im,Ez_re,Ez_im,Bx_re,Bx_im,By_re,By_im,Bz_re,Bz_im".
AnalyticBivectorSeries read_complex_csv(std::istream& in);

void write_series_csv(std::ostream& out, const ConcomitantSeries& series);

// Shortest representation that parses back to the same double.
std::string format_double(double value);

}  // namespace concom
