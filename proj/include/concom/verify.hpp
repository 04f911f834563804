#pragma once

#include "concom/concomitants.hpp"

#include <Eigen/LU>

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace concom {

// The eight concomitant families whose components are hermitian forms in F.
enum class FormFamily { Lplus, Lminus, T2, Q2, D2irr, X2irr, D4irr, X4irr };

inline const char* to_string(FormFamily f) {
  switch (f) {
    case FormFamily::Lplus: return "Lplus";
    case FormFamily::Lminus: return "Lminus";
    case FormFamily::T2: return "T2";
    case FormFamily::Q2: return "Q2";
    case FormFamily::D2irr: return "D2irr";
    case FormFamily::X2irr: return "X2irr";
    case FormFamily::D4irr: return "D4irr";
    case FormFamily::X4irr: return "X4irr";
  }
  return "?";
}

inline std::array<FormFamily, 8> all_form_families() {
  return {FormFamily::Lplus, FormFamily::Lminus, FormFamily::T2,    FormFamily::Q2,
          FormFamily::D2irr, FormFamily::X2irr,  FormFamily::D4irr, FormFamily::X4irr};
}

inline int component_count(FormFamily f) {
  switch (f) {
    case FormFamily::Lplus:
    case FormFamily::Lminus: return 1;
    case FormFamily::T2:
    case FormFamily::Q2:
    case FormFamily::D2irr:
    case FormFamily::X2irr: return 16;
    case FormFamily::D4irr:
    case FormFamily::X4irr: return 256;
  }
  return 0;
}

// Documented independent-component counts (the summary table's values).
inline int expected_component_count(FormFamily f) {
  switch (f) {
    case FormFamily::Lplus:
    case FormFamily::Lminus: return 1;
    case FormFamily::T2:
    case FormFamily::Q2: return 9;
    case FormFamily::D2irr:
    case FormFamily::X2irr: return 6;
    case FormFamily::D4irr:
    case FormFamily::X4irr: return 10;
  }
  return 0;
}

template <class S>
S component_value(const ConcomitantSet<S>& c, FormFamily f, int k) {
  switch (f) {
    case FormFamily::Lplus: return detail::from_real<S>(c.scalars.lplus);
    case FormFamily::Lminus: return detail::from_real<S>(c.scalars.lminus);
    case FormFamily::T2: return c.t2.tensor.data()[static_cast<std::size_t>(k)];
    case FormFamily::Q2: return c.q2.tensor.data()[static_cast<std::size_t>(k)];
    case FormFamily::D2irr: return c.d2irr.tensor.data()[static_cast<std::size_t>(k)];
    case FormFamily::X2irr: return c.x2irr.tensor.data()[static_cast<std::size_t>(k)];
    case FormFamily::D4irr: return c.d4irr.tensor.data()[static_cast<std::size_t>(k)];
    case FormFamily::X4irr: return c.x4irr.tensor.data()[static_cast<std::size_t>(k)];
  }
  throw std::invalid_argument("unknown form family");
}

template <class S>
const Tensor<S, 4>& raw_tensor(const ConcomitantSet<S>& c, Valence4Tag which) {
  switch (which) {
    case Valence4Tag::Tprime: return c.tprime.tensor;
    case Valence4Tag::Qprime: return c.qprime.tensor;
    case Valence4Tag::Dprime: return c.dprime.tensor;
    case Valence4Tag::Xprime: return c.xprime.tensor;
    case Valence4Tag::D4irr: return c.d4irr.tensor;
    case Valence4Tag::X4irr: return c.x4irr.tensor;
  }
  throw std::invalid_argument("unknown valence-4 tag");
}

template <class S>
struct HermitianFormMatrix {
  SixtorMatrix<S> H;
  std::string label;
};

template <class S>
struct ComponentForm {
  FormFamily family{};
  int component{};
  SixtorMatrix<S> matrix;
};

// Concomitant evaluations cached at the polarization inputs: the six sixtor basis
// vectors e_A, the sums e_A + e_B, the twists e_A + i e_B, plus validation points.
template <class S>
struct FormExtractionCache {
  std::vector<ConcomitantSet<S>> diag;              // 6
  std::vector<ConcomitantSet<S>> pair_sum;          // 36 slots, A<B filled
  std::vector<ConcomitantSet<S>> pair_twist;        // 36 slots, A<B filled
  std::vector<std::pair<Bivector<S>, ConcomitantSet<S>>> validation;
  static int pair_index(int a, int b) { return a * 6 + b; }
};

template <class S>
FormExtractionCache<S> make_form_cache(int epsilon_upper_0123 = -1,
                                       std::uint64_t validation_seed = 20240801,
                                       int validation_trials = 8) {
  FormExtractionCache<S> cache;
  const S i = scalar_traits<S>::imag_unit();
  auto unit = [](int a) {
    Sixtor<S> v;
    for (int k = 0; k < 6; ++k) v(k) = (k == a) ? S(1) : S{};
    return v;
  };
  cache.diag.reserve(6);
  for (int a = 0; a < 6; ++a)
    cache.diag.push_back(compute_all(from_sixtor(unit(a)), epsilon_upper_0123));
  cache.pair_sum.resize(36);
  cache.pair_twist.resize(36);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      Sixtor<S> sum = unit(a);
      Sixtor<S> twist = unit(a);
      sum(b) = S(1);
      twist(b) = i;
      const int p = FormExtractionCache<S>::pair_index(a, b);
      cache.pair_sum[static_cast<std::size_t>(p)] = compute_all(from_sixtor(sum), epsilon_upper_0123);
      cache.pair_twist[static_cast<std::size_t>(p)] = compute_all(from_sixtor(twist), epsilon_upper_0123);
    }
  std::mt19937_64 rng(validation_seed);
  for (int t = 0; t < validation_trials; ++t) {
    auto f = random_bivector<S>(rng);
    auto c = compute_all(f, epsilon_upper_0123);
    cache.validation.emplace_back(std::move(f), std::move(c));
  }
  return cache;
}

namespace detail {

// Sesquilinear extraction from the cached evaluations:
//   S1 = c(e_A + e_B) - c_A - c_B = H_AB + H_BA
//   S2 = c(e_A + i e_B) - c_A - c_B = i(H_AB - H_BA)
// so H_AB = (S1 - i S2)/2 and H_BA = (S1 + i S2)/2.
template <class S, class Eval>
SixtorMatrix<S> extract_form(const FormExtractionCache<S>& cache, const Eval& value) {
  const S i = scalar_traits<S>::imag_unit();
  const S half = scalar_traits<S>::ratio(1, 2);
  SixtorMatrix<S> h;
  std::array<S, 6> diag;
  for (int a = 0; a < 6; ++a) {
    diag[static_cast<std::size_t>(a)] = value(cache.diag[static_cast<std::size_t>(a)]);
    h(a, a) = diag[static_cast<std::size_t>(a)];
  }
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      const int p = FormExtractionCache<S>::pair_index(a, b);
      const S s1 = value(cache.pair_sum[static_cast<std::size_t>(p)]) -
                   diag[static_cast<std::size_t>(a)] - diag[static_cast<std::size_t>(b)];
      const S s2 = value(cache.pair_twist[static_cast<std::size_t>(p)]) -
                   diag[static_cast<std::size_t>(a)] - diag[static_cast<std::size_t>(b)];
      h(a, b) = half * (s1 - i * s2);
      h(b, a) = half * (s1 + i * s2);
    }
  return h;
}

template <class S>
S evaluate_form(const SixtorMatrix<S>& h, const Bivector<S>& f) {
  const auto v = sixtor_form(f);
  S acc{};
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      acc += scalar_traits<S>::conjugate(v(a)) * h(a, b) * v(b);
  return acc;
}

template <class S, class Eval>
void validate_form(const FormExtractionCache<S>& cache, const SixtorMatrix<S>& h,
                   const Eval& value, double tolerance, const char* what) {
  for (const auto& [f, c] : cache.validation) {
    const S got = evaluate_form(h, f);
    const S want = value(c);
    const double scale = std::max(1.0, scalar_traits<S>::abs_approx(want));
    if constexpr (scalar_traits<S>::exact) {
      if (!(got == want)) throw std::invalid_argument(std::string(what) + ": form reconstruction failed");
    } else {
      if (scalar_traits<S>::abs_approx(got - want) > tolerance * scale)
        throw std::invalid_argument(std::string(what) + ": form reconstruction failed");
    }
  }
}

template <class S>
bool form_is_hermitian(const SixtorMatrix<S>& h, double tolerance) {
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const S err = h(a, b) - scalar_traits<S>::conjugate(h(b, a));
      if constexpr (scalar_traits<S>::exact) {
        if (!scalar_traits<S>::is_zero(err)) return false;
      } else {
        if (scalar_traits<S>::abs_approx(err) > tolerance) return false;
      }
    }
  return true;
}

}  // namespace detail

// One 6x6 form matrix for every component of every hermitian family; throws if any
// extracted matrix fails hermiticity or fails to reproduce the component.
template <class S>
std::vector<ComponentForm<S>> all_component_forms(const FormExtractionCache<S>& cache,
                                                  double tolerance = 1e-12) {
  std::vector<ComponentForm<S>> out;
  for (FormFamily fam : all_form_families()) {
    const int n = component_count(fam);
    for (int k = 0; k < n; ++k) {
      auto value = [fam, k](const ConcomitantSet<S>& c) { return component_value(c, fam, k); };
      auto h = detail::extract_form<S>(cache, value);
      if (!detail::form_is_hermitian(h, tolerance))
        throw std::invalid_argument(std::string(to_string(fam)) + ": component form is not hermitian");
      detail::validate_form(cache, h, value, tolerance, to_string(fam));
      out.push_back({fam, k, std::move(h)});
    }
  }
  return out;
}

// Form matrices of one raw valence-4 tensor's components. These are complex-valued
// functionals, so no hermiticity is required; reproduction is still validated.
template <class S>
std::vector<SixtorMatrix<S>> raw_form_matrices(const FormExtractionCache<S>& cache,
                                               Valence4Tag which, double tolerance = 1e-12) {
  std::vector<SixtorMatrix<S>> out;
  out.reserve(256);
  for (int k = 0; k < 256; ++k) {
    auto value = [which, k](const ConcomitantSet<S>& c) {
      return raw_tensor(c, which).data()[static_cast<std::size_t>(k)];
    };
    auto h = detail::extract_form<S>(cache, value);
    detail::validate_form(cache, h, value, tolerance, to_string(which));
    out.push_back(std::move(h));
  }
  return out;
}

// Single-functional extraction: treats the component as a black box and
// evaluates it at the 36 polarization inputs plus 8 validation points.
template <class S>
HermitianFormMatrix<S> hermitian_form_matrix(const std::function<S(const Bivector<S>&)>& component,
                                             const std::string& label = "",
                                             std::uint64_t validation_seed = 20240801,
                                             double tolerance = 1e-12) {
  const S i = scalar_traits<S>::imag_unit();
  const S half = scalar_traits<S>::ratio(1, 2);
  auto unit = [](int a) {
    Sixtor<S> v;
    for (int k = 0; k < 6; ++k) v(k) = (k == a) ? S(1) : S{};
    return v;
  };
  SixtorMatrix<S> h;
  std::array<S, 6> diag;
  for (int a = 0; a < 6; ++a) {
    diag[static_cast<std::size_t>(a)] = component(from_sixtor(unit(a)));
    h(a, a) = diag[static_cast<std::size_t>(a)];
  }
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      Sixtor<S> sum = unit(a);
      Sixtor<S> twist = unit(a);
      sum(b) = S(1);
      twist(b) = i;
      const S s1 = component(from_sixtor(sum)) - diag[static_cast<std::size_t>(a)] -
                   diag[static_cast<std::size_t>(b)];
      const S s2 = component(from_sixtor(twist)) - diag[static_cast<std::size_t>(a)] -
                   diag[static_cast<std::size_t>(b)];
      h(a, b) = half * (s1 - i * s2);
      h(b, a) = half * (s1 + i * s2);
    }
  if (!detail::form_is_hermitian(h, tolerance))
    throw std::invalid_argument("component is not a hermitian form");
  std::mt19937_64 rng(validation_seed);
  for (int t = 0; t < 8; ++t) {
    const auto f = random_bivector<S>(rng);
    const S got = detail::evaluate_form(h, f);
    const S want = component(f);
    if constexpr (scalar_traits<S>::exact) {
      if (!(got == want)) throw std::invalid_argument("component is not a hermitian form");
    } else {
      const double scale = std::max(1.0, scalar_traits<S>::abs_approx(want));
      if (scalar_traits<S>::abs_approx(got - want) > tolerance * scale)
        throw std::invalid_argument("component is not a hermitian form");
    }
  }
  return {std::move(h), label};
}

// Incremental reduced row echelon basis over an exact field (Rational or
// GaussianRational). append() keeps full RREF so later rows reduce correctly.
template <class F>
class RowBasis {
 public:
  explicit RowBasis(int width) : width_(width) {}

  bool append(std::vector<F> row) {
    if (static_cast<int>(row.size()) != width_)
      throw std::invalid_argument("row width mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      const F factor = row[static_cast<std::size_t>(p)];
      if (factor.is_zero()) continue;
      for (int c = 0; c < width_; ++c)
        row[static_cast<std::size_t>(c)] =
            row[static_cast<std::size_t>(c)] - factor * rows_[r][static_cast<std::size_t>(c)];
    }
    int pivot = -1;
    for (int c = 0; c < width_; ++c)
      if (!row[static_cast<std::size_t>(c)].is_zero()) {
        pivot = c;
        break;
      }
    if (pivot < 0) return false;
    const F pv = row[static_cast<std::size_t>(pivot)];
    for (int c = 0; c < width_; ++c)
      row[static_cast<std::size_t>(c)] = row[static_cast<std::size_t>(c)] / pv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F factor = rows_[r][static_cast<std::size_t>(pivot)];
      if (factor.is_zero()) continue;
      for (int c = 0; c < width_; ++c)
        rows_[r][static_cast<std::size_t>(c)] =
            rows_[r][static_cast<std::size_t>(c)] - factor * row[static_cast<std::size_t>(c)];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int width_;
  std::vector<std::vector<F>> rows_;
  std::vector<int> pivots_;
};

// Hermitian 6x6 matrix as a point of R^36: 6 real diagonal entries, then
// (re, im) of the 15 upper-triangle entries.
template <class S>
std::vector<typename scalar_traits<S>::real_type> herm_to_r36(const SixtorMatrix<S>& h) {
  std::vector<typename scalar_traits<S>::real_type> v;
  v.reserve(36);
  for (int a = 0; a < 6; ++a) v.push_back(scalar_traits<S>::real_part(h(a, a)));
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      v.push_back(scalar_traits<S>::real_part(h(a, b)));
      v.push_back(scalar_traits<S>::imag_part(h(a, b)));
    }
  return v;
}

// Restriction to real bivectors keeps only the symmetrized real part: a point of
// the 21-dimensional space of real symmetric 6x6 matrices.
template <class S>
std::vector<typename scalar_traits<S>::real_type> sym_to_r21(const SixtorMatrix<S>& h) {
  using R = typename scalar_traits<S>::real_type;
  std::vector<R> v;
  v.reserve(21);
  const R half = R(1) / R(2);
  for (int a = 0; a < 6; ++a)
    for (int b = a; b < 6; ++b)
      v.push_back((scalar_traits<S>::real_part(h(a, b)) + scalar_traits<S>::real_part(h(b, a))) * half);
  return v;
}

template <class S>
std::vector<S> flat_c36(const SixtorMatrix<S>& h) {
  std::vector<S> v;
  v.reserve(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) v.push_back(h(a, b));
  return v;
}

enum class Restriction { full, real_bivectors };

// Rank of the span of the given form matrices: exact Gaussian elimination in the
// rational backend, threshold-pivoted LU as the float cross-check.
template <class S>
int completeness_rank(const std::vector<ComponentForm<S>>& forms, Restriction restriction) {
  const int width = restriction == Restriction::full ? 36 : 21;
  if constexpr (scalar_traits<S>::exact) {
    RowBasis<Rational> basis(width);
    for (const auto& f : forms) {
      auto row = restriction == Restriction::full ? herm_to_r36(f.matrix) : sym_to_r21(f.matrix);
      basis.append(std::move(row));
    }
    return basis.rank();
  } else {
    if (forms.empty()) return 0;
    Eigen::MatrixXd m(static_cast<Eigen::Index>(forms.size()), width);
    for (std::size_t r = 0; r < forms.size(); ++r) {
      auto row = restriction == Restriction::full ? herm_to_r36(forms[r].matrix)
                                                  : sym_to_r21(forms[r].matrix);
      for (int c = 0; c < width; ++c) m(static_cast<Eigen::Index>(r), c) = row[static_cast<std::size_t>(c)];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(1e-8);
    return static_cast<int>(lu.rank());
  }
}

template <class S>
int independent_component_count(const std::vector<ComponentForm<S>>& forms, FormFamily fam) {
  std::vector<ComponentForm<S>> filtered;
  for (const auto& f : forms)
    if (f.family == fam) filtered.push_back(f);
  return completeness_rank(filtered, Restriction::full);
}

// Rank over the complex rationals of a raw tensor's component forms.
inline int raw_complex_rank(const std::vector<SixtorMatrix<GaussianRational>>& forms) {
  RowBasis<GaussianRational> basis(36);
  for (const auto& h : forms) basis.append(flat_c36(h));
  return basis.rank();
}

struct IrreducibilityReport {
  int tensor_rank{};
  bool certified{};
  // rank 4: metric traces over slot pairs (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
  std::array<double, 6> pair_trace_norms{};
  double full_eps_norm{};
  std::array<double, 4> triple_eps_norms{};
  // rank 2: the metric trace
  double trace_norm{};
};

inline constexpr std::array<std::pair<int, int>, 6> kSlotPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

template <class S>
IrreducibilityReport irreducibility_report(const Tensor<S, 2>& t, double tolerance = 1e-12) {
  detail::require_all_upper(t, "irreducibility_report");
  IrreducibilityReport rep;
  rep.tensor_rank = 2;
  const S tr = trace2(t);
  rep.trace_norm = scalar_traits<S>::abs_approx(tr);
  if constexpr (scalar_traits<S>::exact)
    rep.certified = scalar_traits<S>::is_zero(tr);
  else
    rep.certified = rep.trace_norm <= tolerance * std::max(1.0, max_abs(t));
  return rep;
}

template <class S>
IrreducibilityReport irreducibility_report(const Tensor<S, 4>& t, double tolerance = 1e-12,
                                           int epsilon_upper_0123 = -1) {
  detail::require_all_upper(t, "irreducibility_report");
  IrreducibilityReport rep;
  rep.tensor_rank = 4;
  bool exact_zero = true;
  double worst = 0.0;
  auto note = [&](const auto& value) {
    if constexpr (scalar_traits<S>::exact) {
      if (!is_zero(value)) exact_zero = false;
    }
  };
  for (std::size_t p = 0; p < kSlotPairs.size(); ++p) {
    const auto [i, j] = kSlotPairs[p];
    const auto tr = contract(adjust_index(t, i, Variance::lower), i, j);
    rep.pair_trace_norms[p] = max_abs(tr);
    worst = std::max(worst, rep.pair_trace_norms[p]);
    note(tr);
  }
  const auto eps_dn = levi_civita4<S>(Variance::lower, epsilon_upper_0123);
  const S full = full_contract(eps_dn, t);
  rep.full_eps_norm = scalar_traits<S>::abs_approx(full);
  worst = std::max(worst, rep.full_eps_norm);
  if constexpr (scalar_traits<S>::exact) {
    if (!scalar_traits<S>::is_zero(full)) exact_zero = false;
  }
  for (int pos = 0; pos < 4; ++pos) {
    Tensor<S, 2> r({Variance::lower, Variance::upper});
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        S acc{};
        for (int m = 0; m < 4; ++m)
          for (int n = 0; n < 4; ++n)
            for (int k = 0; k < 4; ++k) {
              const S& e = eps_dn(a, m, n, k);
              if (scalar_traits<S>::is_zero(e)) continue;
              std::array<int, 4> ix{};
              const int rest[3] = {m, n, k};
              int ri = 0;
              for (int slot = 0; slot < 4; ++slot)
                ix[static_cast<std::size_t>(slot)] = (slot == pos) ? b : rest[ri++];
              acc += e * t.at(ix);
            }
        r(a, b) = acc;
      }
    rep.triple_eps_norms[static_cast<std::size_t>(pos)] = max_abs(r);
    worst = std::max(worst, rep.triple_eps_norms[static_cast<std::size_t>(pos)]);
    note(r);
  }
  if constexpr (scalar_traits<S>::exact)
    rep.certified = exact_zero;
  else
    rep.certified = worst <= tolerance * std::max(1.0, max_abs(t));
  return rep;
}

enum class DualitySign { plus, minus, mixed };

inline const char* to_string(DualitySign s) {
  switch (s) {
    case DualitySign::plus: return "+1";
    case DualitySign::minus: return "-1";
    case DualitySign::mixed: return "mixed";
  }
  return "?";
}

// Measures how a component vector transforms under the E -> -B, B -> E swap of its
// source bivector. A zero functional is reported as +1.
template <class S>
DualitySign duality_eigenvalue(
    const std::function<std::vector<S>(const Bivector<S>&)>& concomitant, int trials,
    std::uint64_t seed, double tolerance = 1e-12) {
  if (trials < 1) throw std::invalid_argument("duality_eigenvalue needs at least one trial");
  std::mt19937_64 rng(seed);
  std::optional<int> sign;
  for (int t = 0; t < trials; ++t) {
    const auto f = random_bivector<S>(rng);
    const auto base = concomitant(f);
    const auto swapped = concomitant(duality_transform(f));
    if (base.size() != swapped.size()) return DualitySign::mixed;
    double scale = 1.0;
    for (const S& x : base) scale = std::max(scale, scalar_traits<S>::abs_approx(x));
    auto matches = [&](int s) {
      for (std::size_t k = 0; k < base.size(); ++k) {
        const S want = (s > 0) ? base[k] : -base[k];
        if constexpr (scalar_traits<S>::exact) {
          if (!(swapped[k] == want)) return false;
        } else {
          if (scalar_traits<S>::abs_approx(swapped[k] - want) > tolerance * scale) return false;
        }
      }
      return true;
    };
    const bool plus_ok = matches(+1);
    const bool minus_ok = matches(-1);
    if (plus_ok && minus_ok) continue;  // all components vanish at this input
    const int s = plus_ok ? +1 : (minus_ok ? -1 : 0);
    if (s == 0) return DualitySign::mixed;
    if (sign && *sign != s) return DualitySign::mixed;
    sign = s;
  }
  if (!sign) return DualitySign::plus;
  return *sign > 0 ? DualitySign::plus : DualitySign::minus;
}

struct SuiteConfig {
  std::uint64_t seed = 1;
  int trials = 50;
  std::string backend = "rational";  // "rational" or "float"
  double tolerance = 1e-12;
  int epsilon_upper_0123 = -1;  // mutation hook; the library convention is -1
};

struct PropertyResult {
  std::string name;
  bool passed = false;
  int trials = 0;
  double worst_residual = 0.0;
  std::string detail;
};

struct PropertyReport {
  SuiteConfig config;
  std::vector<PropertyResult> results;
  std::map<std::string, int> duality_signs;
  std::map<std::string, int> component_counts;
  int union_rank = 0;
  std::array<int, 4> union_rank_choices{};  // {D2,D4},{D2,X4},{X2,D4},{X2,X4}
  int real_restriction_rank = 0;
  std::map<std::string, int> raw_complex_ranks;
  std::string count_definition;
  std::string duality_note;
  bool all_passed = false;
  double worst_residual = 0.0;
};

PropertyReport run_suite(const SuiteConfig& config);

}  // namespace concom
