#include "concom/signal.hpp"

#include <unsupported/Eigen/FFT>

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>

namespace concom {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool all_finite(const Eigen::Vector3d& v) {
  return std::isfinite(v(0)) && std::isfinite(v(1)) && std::isfinite(v(2));
}

}  // namespace

void validate_series(const FieldSampleSeries& series) {
  const std::size_t n = series.t.size();
  if (series.e_samples.size() != n || series.b_samples.size() != n)
    throw std::invalid_argument("field series arrays have mismatched lengths");
  if (n < 4) throw std::invalid_argument("field series needs at least 4 samples");
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(series.t[k]) || !all_finite(series.e_samples[k]) ||
        !all_finite(series.b_samples[k]))
      throw std::invalid_argument("field series contains a non-finite value");
  }
  const double dt = series.t[1] - series.t[0];
  if (!(dt > 0.0)) throw std::invalid_argument("sample times must be strictly increasing");
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double step = series.t[k + 1] - series.t[k];
    if (std::abs(step - dt) > 1e-9 * dt)
      throw std::invalid_argument("sample times are not uniform");
  }
}

AnalyticBivectorSeries analytic_signal(const FieldSampleSeries& series) {
  validate_series(series);
  const int n = static_cast<int>(series.t.size());
  Eigen::FFT<double> fft;
  std::array<std::vector<Complex>, 6> channels;
  double input_scale = 1.0;
  for (int ch = 0; ch < 6; ++ch) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const auto& v = (ch < 3) ? series.e_samples[static_cast<std::size_t>(k)]
                               : series.b_samples[static_cast<std::size_t>(k)];
      x[static_cast<std::size_t>(k)] = v(ch % 3);
      input_scale = std::max(input_scale, std::abs(x[static_cast<std::size_t>(k)]));
    }
    std::vector<Complex> spectrum;
    fft.fwd(spectrum, x);
    // One-sided weighting: DC and (even n) Nyquist keep weight 1, strictly
    // positive bins double, negative bins vanish.
    const int nyquist = (n % 2 == 0) ? n / 2 : -1;
    for (int k = 1; k < n; ++k) {
      if (k == nyquist) continue;
      if (2 * k < n)
        spectrum[static_cast<std::size_t>(k)] *= 2.0;
      else
        spectrum[static_cast<std::size_t>(k)] = Complex{};
    }
    fft.inv(channels[static_cast<std::size_t>(ch)], spectrum);
  }
  AnalyticBivectorSeries out;
  out.t = series.t;
  out.bivectors.resize(static_cast<std::size_t>(n));
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    auto& f = out.bivectors[static_cast<std::size_t>(k)];
    for (int c = 0; c < 3; ++c) {
      f.E(c) = channels[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
      f.B(c) = channels[static_cast<std::size_t>(c + 3)][static_cast<std::size_t>(k)];
      worst = std::max(worst, std::abs(f.E(c).real() -
                                       series.e_samples[static_cast<std::size_t>(k)](c)));
      worst = std::max(worst, std::abs(f.B(c).real() -
                                       series.b_samples[static_cast<std::size_t>(k)](c)));
    }
  }
  if (worst > 1e-10 * input_scale)
    throw std::logic_error("analytic signal real part does not reproduce the input");
  return out;
}

namespace {

struct ComponentRef {
  char family = 'L';  // 'T', 'Q', 'D', 'X', or 'L'
  int a = 0;
  int b = 0;
  bool lplus = false;  // valid when family == 'L'
};

ComponentRef resolve_component(const std::string& name) {
  ComponentRef ref;
  if (name == "Lplus") {
    ref.lplus = true;
    return ref;
  }
  if (name == "Lminus") {
    ref.lplus = false;
    return ref;
  }
  if (name.size() == 3 && (name[0] == 'T' || name[0] == 'Q' || name[0] == 'D' || name[0] == 'X') &&
      name[1] >= '0' && name[1] <= '3' && name[2] >= '0' && name[2] <= '3') {
    ref.family = name[0];
    ref.a = name[1] - '0';
    ref.b = name[2] - '0';
    if ((ref.family == 'D' || ref.family == 'X') && ref.a == ref.b)
      throw std::invalid_argument("unknown component name: " + name);
    return ref;
  }
  throw std::invalid_argument("unknown component name: " + name);
}

double component_of(const LocalComponents<Complex>& local, const ComponentRef& ref) {
  switch (ref.family) {
    case 'T': return local.t2(ref.a, ref.b).real();
    case 'Q': return local.q2(ref.a, ref.b).real();
    case 'D': return local.d2irr(ref.a, ref.b).real();
    case 'X': return local.x2irr(ref.a, ref.b).real();
    default: return ref.lplus ? local.lplus : local.lminus;
  }
}

}  // namespace

const std::vector<std::string>& component_registry() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (char fam : {'T', 'Q'})
      for (int b = 0; b < 4; ++b)
        for (int a = b; a < 4; ++a)
          v.push_back(std::string(1, fam) + std::to_string(a) + std::to_string(b));
    for (char fam : {'D', 'X'})
      for (int b = 0; b < 4; ++b)
        for (int a = b + 1; a < 4; ++a)
          v.push_back(std::string(1, fam) + std::to_string(a) + std::to_string(b));
    v.push_back("Lplus");
    v.push_back("Lminus");
    return v;
  }();
  return names;
}

ConcomitantSeries concomitant_series(const AnalyticBivectorSeries& series,
                                     const std::vector<std::string>& selection) {
  std::vector<ComponentRef> refs;
  refs.reserve(selection.size());
  for (const auto& name : selection) refs.push_back(resolve_component(name));
  ConcomitantSeries out;
  out.t = series.t;
  out.names = selection;
  out.columns.assign(selection.size(), std::vector<double>(series.t.size()));
  for (std::size_t k = 0; k < series.bivectors.size(); ++k) {
    const auto local = local_components(series.bivectors[k]);
    for (std::size_t c = 0; c < refs.size(); ++c) {
      const double value = component_of(local, refs[c]);
      if (!std::isfinite(value)) throw std::runtime_error("non-finite concomitant value");
      out.columns[c][k] = value;
    }
  }
  return out;
}

FieldSampleSeries synth_plane_wave(const PlaneWaveParams& params) {
  if (params.n < 4) throw std::invalid_argument("need at least 4 samples");
  if (!(params.sample_rate > 0.0)) throw std::invalid_argument("sample rate must be positive");
  if (!(params.frequency < params.sample_rate / 2.0))
    throw std::invalid_argument("frequency must be below the Nyquist rate");
  if (params.axis < 0 || params.axis > 2) throw std::invalid_argument("axis must be 0, 1, or 2");
  const int u = (params.axis + 1) % 3;
  const int v = (params.axis + 2) % 3;
  const double omega = 2.0 * kPi * params.frequency;
  FieldSampleSeries out;
  out.t.resize(static_cast<std::size_t>(params.n));
  out.e_samples.assign(static_cast<std::size_t>(params.n), Eigen::Vector3d::Zero());
  out.b_samples.assign(static_cast<std::size_t>(params.n), Eigen::Vector3d::Zero());
  for (int k = 0; k < params.n; ++k) {
    const double t = static_cast<double>(k) / params.sample_rate;
    const double theta = omega * t + params.phase;
    double eu = params.amplitude * std::cos(theta);
    double ev = 0.0;
    if (params.polarization == Polarization::circular_left)
      ev = params.amplitude * std::sin(theta);
    else if (params.polarization == Polarization::circular_right)
      ev = -params.amplitude * std::sin(theta);
    out.t[static_cast<std::size_t>(k)] = t;
    auto& e = out.e_samples[static_cast<std::size_t>(k)];
    auto& b = out.b_samples[static_cast<std::size_t>(k)];
    e(u) = eu;
    e(v) = ev;
    // B = khat x E
    b(v) = eu;
    b(u) = -ev;
  }
  return out;
}

namespace {

std::string read_line(std::istream& in) {
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string_view> split_fields(const std::string& line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      out.emplace_back(line.data() + start, line.size() - start);
      return out;
    }
    out.emplace_back(line.data() + start, comma - start);
    start = comma + 1;
  }
}

double parse_field(std::string_view field, int line_no) {
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto res = std::from_chars(field.data(), end, value);
  if (res.ec != std::errc{} || res.ptr != end || !std::isfinite(value))
    throw CsvError("line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
  return value;
}

std::vector<std::vector<double>> read_rows(std::istream& in, const std::string& expected_header,
                                           std::size_t fields) {
  const std::string header = read_line(in);
  if (header != expected_header)
    throw CsvError("expected header '" + expected_header + "', got '" + header + "'");
  std::vector<std::vector<double>> rows;
  int line_no = 1;
  while (in) {
    const std::string line = read_line(in);
    ++line_no;
    if (line.empty()) {
      if (in.eof()) break;
      throw CsvError("line " + std::to_string(line_no) + ": empty row");
    }
    const auto parts = split_fields(line);
    if (parts.size() != fields)
      throw CsvError("line " + std::to_string(line_no) + ": expected " + std::to_string(fields) +
                     " fields, got " + std::to_string(parts.size()));
    std::vector<double> row(fields);
    for (std::size_t k = 0; k < fields; ++k) row[k] = parse_field(parts[k], line_no);
    rows.push_back(std::move(row));
    if (in.peek() == std::char_traits<char>::eof()) break;
  }
  return rows;
}

}  // namespace

FieldSampleSeries read_field_csv(std::istream& in) {
  const auto rows = read_rows(in, "t,Ex,Ey,Ez,Bx,By,Bz", 7);
  FieldSampleSeries out;
  for (const auto& row : rows) {
    out.t.push_back(row[0]);
    out.e_samples.emplace_back(row[1], row[2], row[3]);
    out.b_samples.emplace_back(row[4], row[5], row[6]);
  }
  return out;
}

AnalyticBivectorSeries read_complex_csv(std::istream& in) {
  const auto rows = read_rows(
      in, "t,Ex_re,Ex_im,Ey_re,Ey_im,Ez_re,Ez_im,Bx_re,Bx_im,By_re,By_im,Bz_re,Bz_im", 13);
  if (rows.empty()) throw CsvError("complex field series is empty");
  AnalyticBivectorSeries out;
  for (const auto& row : rows) {
    out.t.push_back(row[0]);
    Bivector<Complex> f;
    for (int c = 0; c < 3; ++c) {
      f.E(c) = Complex(row[static_cast<std::size_t>(1 + 2 * c)],
                       row[static_cast<std::size_t>(2 + 2 * c)]);
      f.B(c) = Complex(row[static_cast<std::size_t>(7 + 2 * c)],
                       row[static_cast<std::size_t>(8 + 2 * c)]);
    }
    out.bivectors.push_back(f);
  }
  return out;
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_series_csv(std::ostream& out, const ConcomitantSeries& series) {
  out << "t";
  for (const auto& name : series.names) out << ',' << name;
  out << '\n';
  for (std::size_t k = 0; k < series.t.size(); ++k) {
    out << format_double(series.t[k]);
    for (const auto& col : series.columns) out << ',' << format_double(col[k]);
    out << '\n';
  }
}

}  // namespace concom
