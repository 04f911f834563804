#pragma once

#include "concom/tensor.hpp"

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <random>
#include <stdexcept>

namespace concom {

template <class S>
using Vec3 = Eigen::Matrix<S, 3, 1>;
template <class S>
using Sixtor = Eigen::Matrix<S, 6, 1>;
template <class S>
using SixtorMatrix = Eigen::Matrix<S, 6, 6>;

struct antisymmetry_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Complex bivector as the pair of complex 3-vectors (E, B).
template <class S>
struct Bivector {
  Vec3<S> E = Vec3<S>::Zero();
  Vec3<S> B = Vec3<S>::Zero();
};

template <class S>
bool operator==(const Bivector<S>& a, const Bivector<S>& b) {
  for (int k = 0; k < 3; ++k)
    if (!(a.E(k) == b.E(k)) || !(a.B(k) == b.B(k))) return false;
  return true;
}

template <class S>
bool operator!=(const Bivector<S>& a, const Bivector<S>& b) {
  return !(a == b);
}

template <class S>
Bivector<S> operator+(const Bivector<S>& a, const Bivector<S>& b) {
  Bivector<S> out;
  out.E = a.E + b.E;
  out.B = a.B + b.B;
  return out;
}

template <class S>
Bivector<S> operator-(const Bivector<S>& a, const Bivector<S>& b) {
  Bivector<S> out;
  out.E = a.E - b.E;
  out.B = a.B - b.B;
  return out;
}

template <class S>
Bivector<S> operator-(const Bivector<S>& f) {
  Bivector<S> out;
  out.E = -f.E;
  out.B = -f.B;
  return out;
}

template <class S>
Bivector<S> operator*(const S& s, const Bivector<S>& f) {
  Bivector<S> out;
  for (int k = 0; k < 3; ++k) {
    out.E(k) = s * f.E(k);
    out.B(k) = s * f.B(k);
  }
  return out;
}

template <class S>
Bivector<S> operator*(const Bivector<S>& f, const S& s) {
  return s * f;
}

template <class S>
Bivector<S> conjugate(const Bivector<S>& f) {
  Bivector<S> out;
  for (int k = 0; k < 3; ++k) {
    out.E(k) = scalar_traits<S>::conjugate(f.E(k));
    out.B(k) = scalar_traits<S>::conjugate(f.B(k));
  }
  return out;
}

template <class S>
bool is_zero(const Bivector<S>& f) {
  for (int k = 0; k < 3; ++k)
    if (!scalar_traits<S>::is_zero(f.E(k)) || !scalar_traits<S>::is_zero(f.B(k))) return false;
  return true;
}

template <class S>
double max_abs(const Bivector<S>& f) {
  double m = 0.0;
  for (int k = 0; k < 3; ++k) {
    m = std::max(m, scalar_traits<S>::abs_approx(f.E(k)));
    m = std::max(m, scalar_traits<S>::abs_approx(f.B(k)));
  }
  return m;
}

template <class S>
double max_abs_diff(const Bivector<S>& a, const Bivector<S>& b) {
  double m = 0.0;
  for (int k = 0; k < 3; ++k) {
    m = std::max(m, scalar_traits<S>::abs_approx(a.E(k) - b.E(k)));
    m = std::max(m, scalar_traits<S>::abs_approx(a.B(k) - b.B(k)));
  }
  return m;
}

// sum_i conj(a_i) b_i
template <class S>
S cdot(const Vec3<S>& a, const Vec3<S>& b) {
  S acc{};
  for (int k = 0; k < 3; ++k) acc += scalar_traits<S>::conjugate(a(k)) * b(k);
  return acc;
}

template <class S>
Vec3<S> cross3(const Vec3<S>& a, const Vec3<S>& b) {
  Vec3<S> c;
  c(0) = a(1) * b(2) - a(2) * b(1);
  c(1) = a(2) * b(0) - a(0) * b(2);
  c(2) = a(0) * b(1) - a(1) * b(0);
  return c;
}

// F^{i0} = E_i, F^{0i} = -E_i, spatial block F^{ij} = -eps_{ijk} B_k
// (so F^{32} = B_1, F^{13} = B_2, F^{21} = B_3).
template <class S>
Tensor<S, 2> matrix_form(const Bivector<S>& f) {
  Tensor<S, 2> t({Variance::upper, Variance::upper});
  for (int i = 0; i < 3; ++i) {
    t(i + 1, 0) = f.E(i);
    t(0, i + 1) = -f.E(i);
  }
  t(3, 2) = f.B(0);
  t(2, 3) = -f.B(0);
  t(1, 3) = f.B(1);
  t(3, 1) = -f.B(1);
  t(2, 1) = f.B(2);
  t(1, 2) = -f.B(2);
  return t;
}

template <class S>
Bivector<S> from_matrix(const Tensor<S, 2>& t, double tolerance = 1e-12) {
  if (t.variance(0) != Variance::upper || t.variance(1) != Variance::upper)
    throw std::invalid_argument("bivector matrix must be all-contravariant");
  if constexpr (scalar_traits<S>::exact) {
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b <= a; ++b)
        if (!scalar_traits<S>::is_zero(t(a, b) + t(b, a)))
          throw antisymmetry_error("matrix is not antisymmetric");
  } else {
    const double scale = std::max(1.0, max_abs(t));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b <= a; ++b)
        if (scalar_traits<S>::abs_approx(t(a, b) + t(b, a)) > tolerance * scale)
          throw antisymmetry_error("matrix is not antisymmetric");
  }
  Bivector<S> f;
  for (int i = 0; i < 3; ++i) f.E(i) = t(i + 1, 0);
  f.B(0) = t(3, 2);
  f.B(1) = t(1, 3);
  f.B(2) = t(2, 1);
  return f;
}

// Index map A <-> [ab]: 1<->[10], 2<->[20], 3<->[30], 4<->[32], 5<->[13], 6<->[21].
inline constexpr int kSixtorPairs[6][2] = {{1, 0}, {2, 0}, {3, 0}, {3, 2}, {1, 3}, {2, 1}};

// {A, sign}: sign +1 if (a,b) is the canonical pair, -1 if reversed, 0 on the diagonal.
inline std::pair<int, int> sixtor_slot(int a, int b) {
  for (int A = 0; A < 6; ++A) {
    if (kSixtorPairs[A][0] == a && kSixtorPairs[A][1] == b) return {A, 1};
    if (kSixtorPairs[A][0] == b && kSixtorPairs[A][1] == a) return {A, -1};
  }
  return {-1, 0};
}

template <class S>
Sixtor<S> sixtor_form(const Bivector<S>& f) {
  Sixtor<S> v;
  for (int k = 0; k < 3; ++k) {
    v(k) = f.E(k);
    v(3 + k) = f.B(k);
  }
  return v;
}

template <class S>
Bivector<S> from_sixtor(const Sixtor<S>& v) {
  Bivector<S> f;
  for (int k = 0; k < 3; ++k) {
    f.E(k) = v(k);
    f.B(k) = v(3 + k);
  }
  return f;
}

// Rank-2 dual (*t)^{ab} = 1/2 eps^{ab}{}_{mn} t^{mn}, with epsilon supplied by the
// tensor kernel. All-contravariant input required.
template <class S>
Tensor<S, 2> dual(const Tensor<S, 2>& t, int epsilon_upper_0123 = -1) {
  if (t.variance(0) != Variance::upper || t.variance(1) != Variance::upper)
    throw std::invalid_argument("rank-2 dual expects an all-contravariant tensor");
  auto eps = levi_civita4<S>(Variance::upper, epsilon_upper_0123);
  eps = adjust_index(eps, 2, Variance::lower);
  eps = adjust_index(eps, 3, Variance::lower);
  const S half = scalar_traits<S>::ratio(1, 2);
  Tensor<S, 2> out({Variance::upper, Variance::upper});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      S acc{};
      for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n) {
          const S& e = eps(a, b, m, n);
          if (!scalar_traits<S>::is_zero(e)) acc += e * t(m, n);
        }
      out(a, b) = half * acc;
    }
  return out;
}

template <class S>
Bivector<S> dual(const Bivector<S>& f, int epsilon_upper_0123 = -1) {
  return from_matrix(dual(matrix_form(f), epsilon_upper_0123));
}

// Independent swap oracle for the dual: E -> -B, B -> E.
template <class S>
Bivector<S> duality_transform(const Bivector<S>& f) {
  Bivector<S> out;
  out.E = -f.B;
  out.B = f.E;
  return out;
}

template <class S>
struct SelfDualParts {
  Bivector<S> minus;       // duality eigenvalue -i
  Bivector<S> plus;        // duality eigenvalue +i
  Bivector<S> conj_minus;  // conjugate of minus
  Bivector<S> conj_plus;   // conjugate of plus
};

template <class S>
SelfDualParts<S> self_dual_parts(const Bivector<S>& f) {
  const S half = scalar_traits<S>::ratio(1, 2);
  const S i = scalar_traits<S>::imag_unit();
  const Bivector<S> sf = duality_transform(f);
  SelfDualParts<S> out;
  out.minus = half * (f + i * sf);
  out.plus = half * (f - i * sf);
  out.conj_minus = conjugate(out.minus);
  out.conj_plus = conjugate(out.plus);
  return out;
}

// F -> phase * F. The exact backend demands |phase| = 1 exactly.
template <class S>
Bivector<S> phase_rotate(const Bivector<S>& f, const S& phase) {
  if constexpr (scalar_traits<S>::exact) {
    if (abs2(phase) != Rational(1))
      throw std::invalid_argument("phase must have unit modulus");
  }
  return phase * f;
}

struct LorentzTransform {
  Eigen::Matrix4d lambda = Eigen::Matrix4d::Identity();
};

inline LorentzTransform make_boost(const Eigen::Vector3d& velocity) {
  const double v2 = velocity.squaredNorm();
  if (v2 >= 1.0) throw std::invalid_argument("boost speed must satisfy |v| < 1");
  LorentzTransform out;
  if (v2 == 0.0) return out;
  const double gamma = 1.0 / std::sqrt(1.0 - v2);
  out.lambda(0, 0) = gamma;
  for (int i = 0; i < 3; ++i) {
    out.lambda(0, i + 1) = -gamma * velocity(i);
    out.lambda(i + 1, 0) = -gamma * velocity(i);
    for (int j = 0; j < 3; ++j)
      out.lambda(i + 1, j + 1) =
          (i == j ? 1.0 : 0.0) + (gamma - 1.0) * velocity(i) * velocity(j) / v2;
  }
  return out;
}

inline LorentzTransform make_rotation(const Eigen::Vector3d& axis, double angle) {
  const double n = axis.norm();
  if (n == 0.0) throw std::invalid_argument("rotation axis must be nonzero");
  LorentzTransform out;
  out.lambda.block<3, 3>(1, 1) = Eigen::AngleAxisd(angle, axis / n).toRotationMatrix();
  return out;
}

// F'^{ab} = Lambda^{a}{}_{m} Lambda^{b}{}_{n} F^{mn} (float backend; Lambda is real).
inline Bivector<Complex> lorentz_transform(const Bivector<Complex>& f, const LorentzTransform& lt) {
  const auto t = matrix_form(f);
  Eigen::Matrix4cd m;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m(a, b) = t(a, b);
  const Eigen::Matrix4cd lam = lt.lambda.cast<Complex>();
  const Eigen::Matrix4cd m2 = lam * m * lam.transpose();
  Bivector<Complex> out;
  for (int i = 0; i < 3; ++i) out.E(i) = m2(i + 1, 0);
  out.B(0) = m2(3, 2);
  out.B(1) = m2(1, 3);
  out.B(2) = m2(2, 1);
  return out;
}

// Applies Lambda to every slot of an all-contravariant tensor (float backend).
template <int R>
Tensor<Complex, R> lorentz_transform(const Tensor<Complex, R>& t, const LorentzTransform& lt) {
  static_assert(R >= 1, "lorentz_transform needs at least one slot");
  for (int k = 0; k < R; ++k)
    if (t.variance(k) != Variance::upper)
      throw std::invalid_argument("lorentz_transform expects an all-contravariant tensor");
  Tensor<Complex, R> cur = t;
  for (int slot = 0; slot < R; ++slot) {
    Tensor<Complex, R> next(t.variances());
    for (std::size_t f = 0; f < Tensor<Complex, R>::entry_count; ++f) {
      auto idx = Tensor<Complex, R>::unflatten(f);
      Complex acc{};
      const int out_i = idx[static_cast<std::size_t>(slot)];
      for (int m = 0; m < 4; ++m) {
        idx[static_cast<std::size_t>(slot)] = m;
        acc += lt.lambda(out_i, m) * cur.at(idx);
      }
      idx[static_cast<std::size_t>(slot)] = out_i;
      next.at(idx) = acc;
    }
    cur = next;
  }
  return cur;
}

template <class S>
Bivector<S> random_bivector(std::mt19937_64& rng) {
  Bivector<S> f;
  for (int k = 0; k < 3; ++k) f.E(k) = scalar_traits<S>::random(rng);
  for (int k = 0; k < 3; ++k) f.B(k) = scalar_traits<S>::random(rng);
  return f;
}

template <class S>
Bivector<S> random_bivector(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_bivector<S>(rng);
}

}  // namespace concom
