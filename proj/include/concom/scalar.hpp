#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace concom {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using Complex = std::complex<double>;

// Accepts "p/q" or a plain integer string; the denominator must be nonzero.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  auto is_integer = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = (allow_sign && (part[0] == '-' || part[0] == '+')) ? 1u : 0u;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer(text, true)) return fail();
    return Rational(Integer(std::string(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer(num, true) || !is_integer(den, false)) return fail();
  const Integer d{std::string(den)};
  if (d == 0) return fail();
  return Rational(Integer(std::string(num))) / Rational(d);
}

// Complex number with exact rational real and imaginary parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(int v) : re(v) {}  // implicit: generic code writes S(0), S(-1)
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re; }
  const Rational& imag() const { return im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    Rational d = o.re * o.re + o.im * o.im;
    if (d.is_zero()) throw std::domain_error("gaussian rational division by zero");
    Rational r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
inline GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
inline bool operator==(const GaussianRational& a, const GaussianRational& b) {
  return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

inline const Rational& real(const GaussianRational& z) { return z.re; }
inline const Rational& imag(const GaussianRational& z) { return z.im; }
inline GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }
inline Rational abs2(const GaussianRational& z) { return z.re * z.re + z.im * z.im; }
inline std::string to_string(const GaussianRational& z) {
  return z.re.str() + (z.im.sign() < 0 ? "" : "+") + z.im.str() + "i";
}
inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << to_string(z);
}

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Complex> {
  using real_type = double;
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static Complex make(double re, double im) { return {re, im}; }
  static Complex imag_unit() { return {0.0, 1.0}; }
  static Complex ratio(long num, long den) { return {double(num) / double(den), 0.0}; }
  static double real_part(const Complex& z) { return z.real(); }
  static double imag_part(const Complex& z) { return z.imag(); }
  static Complex real_of(const Complex& z) { return {z.real(), 0.0}; }
  static Complex imag_of(const Complex& z) { return {z.imag(), 0.0}; }
  static Complex conjugate(const Complex& z) { return std::conj(z); }
  static bool is_zero(const Complex& z) { return z.real() == 0.0 && z.imag() == 0.0; }
  static double abs_approx(const Complex& z) { return std::abs(z); }
  static Complex random(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double re = u(rng);
    const double im = u(rng);
    return {re, im};
  }
};

template <>
struct scalar_traits<GaussianRational> {
  using real_type = Rational;
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";
  static GaussianRational make(Rational re, Rational im) { return {std::move(re), std::move(im)}; }
  static GaussianRational imag_unit() { return GaussianRational::i(); }
  static GaussianRational ratio(long num, long den) {
    return GaussianRational(Rational(num) / Rational(den));
  }
  static const Rational& real_part(const GaussianRational& z) { return z.re; }
  static const Rational& imag_part(const GaussianRational& z) { return z.im; }
  static GaussianRational real_of(const GaussianRational& z) { return {z.re, Rational(0)}; }
  static GaussianRational imag_of(const GaussianRational& z) { return {z.im, Rational(0)}; }
  static GaussianRational conjugate(const GaussianRational& z) { return conj(z); }
  static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
  static double abs_approx(const GaussianRational& z) {
    return std::hypot(z.re.convert_to<double>(), z.im.convert_to<double>());
  }
  // Parts are num/den with den <= 16; canonical denominators divide den.
  static GaussianRational random(std::mt19937_64& rng) {
    auto part = [&rng]() {
      std::uniform_int_distribution<int> dens(1, 16);
      const int den = dens(rng);
      std::uniform_int_distribution<int> nums(-den, den);
      return Rational(nums(rng)) / Rational(den);
    };
    Rational re = part();
    Rational im = part();
    return {std::move(re), std::move(im)};
  }
};

}  // namespace concom

namespace Eigen {

template <>
struct NumTraits<concom::GaussianRational> {
  using Real = concom::Rational;
  using NonInteger = concom::GaussianRational;
  using Literal = concom::GaussianRational;
  using Nested = concom::GaussianRational;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 200
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
