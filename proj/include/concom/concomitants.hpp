#pragma once

#include "concom/bivector.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace concom {

enum class Valence4Tag { Tprime, Qprime, Dprime, Xprime, D4irr, X4irr };
enum class Valence2Tag { T2, Q2, D2raw, X2raw, D2irr, X2irr };

inline const char* to_string(Valence4Tag tag) {
  switch (tag) {
    case Valence4Tag::Tprime: return "Tprime";
    case Valence4Tag::Qprime: return "Qprime";
    case Valence4Tag::Dprime: return "Dprime";
    case Valence4Tag::Xprime: return "Xprime";
    case Valence4Tag::D4irr: return "D4irr";
    case Valence4Tag::X4irr: return "X4irr";
  }
  return "?";
}

inline const char* to_string(Valence2Tag tag) {
  switch (tag) {
    case Valence2Tag::T2: return "T2";
    case Valence2Tag::Q2: return "Q2";
    case Valence2Tag::D2raw: return "D2raw";
    case Valence2Tag::X2raw: return "X2raw";
    case Valence2Tag::D2irr: return "D2irr";
    case Valence2Tag::X2irr: return "X2irr";
  }
  return "?";
}

template <class S>
struct Valence4Concomitant {
  Valence4Tag tag{};
  Tensor<S, 4> tensor;
};

template <class S>
struct Valence2Concomitant {
  Valence2Tag tag{};
  Tensor<S, 2> tensor;
};

template <class S>
struct InvariantScalars {
  typename scalar_traits<S>::real_type lplus{};
  typename scalar_traits<S>::real_type lminus{};
};

struct Convention {
  std::string signature = "+---";
  int epsilon_upper_0123 = -1;
  std::string backend;
};

template <class S>
struct Valence4Set {
  Valence4Concomitant<S> tprime, qprime, dprime, xprime;
};

template <class S>
struct Valence2RawSet {
  Valence2Concomitant<S> t2, q2, d2raw, x2raw;
};

template <class S>
struct ConcomitantSet {
  InvariantScalars<S> scalars;
  Valence2Concomitant<S> t2, q2, d2irr, x2irr;
  Valence4Concomitant<S> tprime, qprime, dprime, xprime;
  Valence4Concomitant<S> d4irr, x4irr;
  Convention convention;
};

template <class S>
struct RealReferenceInvariants {
  typename scalar_traits<S>::real_type lplus_r{};
  typename scalar_traits<S>::real_type lminus_r{};
  Tensor<S, 2> stress;
};

namespace detail {

template <class S>
S from_real(const typename scalar_traits<S>::real_type& x) {
  return scalar_traits<S>::make(x, typename scalar_traits<S>::real_type(0));
}

template <class S, int R>
void require_all_upper(const Tensor<S, R>& t, const char* what) {
  for (int k = 0; k < R; ++k)
    if (t.variance(k) != Variance::upper)
      throw std::invalid_argument(std::string(what) + " expects an all-contravariant tensor");
}

// value must vanish: exactly for the rational backend, below 1e-9*scale for float.
template <class S>
bool tiny(const S& value, double scale) {
  if constexpr (scalar_traits<S>::exact) {
    return scalar_traits<S>::is_zero(value);
  } else {
    return scalar_traits<S>::abs_approx(value) <= 1e-9 * std::max(1.0, scale);
  }
}

}  // namespace detail

// T' = (cF (x) F + *cF (x) *F)/2      Q' = (i/2)(cF (x) *F - *cF (x) F)
// D' = (cF (x) F - *cF (x) *F)/2      X' = (cF (x) *F + *cF (x) F)/2
// with cF = conjugate(F) and * the epsilon-kernel dual.
template <class S>
Valence4Set<S> valence4_set(const Bivector<S>& f, int epsilon_upper_0123 = -1) {
  const auto m = matrix_form(f);
  const auto mc = matrix_form(conjugate(f));
  const auto ms = dual(m, epsilon_upper_0123);
  const auto mcs = dual(mc, epsilon_upper_0123);
  const auto cf_f = outer(mc, m);
  const auto scf_sf = outer(mcs, ms);
  const auto cf_sf = outer(mc, ms);
  const auto scf_f = outer(mcs, m);
  const S half = scalar_traits<S>::ratio(1, 2);
  const S ihalf = half * scalar_traits<S>::imag_unit();
  Valence4Set<S> out;
  out.tprime = {Valence4Tag::Tprime, half * (cf_f + scf_sf)};
  out.qprime = {Valence4Tag::Qprime, ihalf * (cf_sf - scf_f)};
  out.dprime = {Valence4Tag::Dprime, half * (cf_f - scf_sf)};
  out.xprime = {Valence4Tag::Xprime, half * (cf_sf + scf_f)};
  return out;
}

// Same four tensors assembled from the self-dual halves; uses the E,B swap dual,
// so it is independent of the epsilon kernel.
template <class S>
Valence4Set<S> valence4_set_self_dual(const Bivector<S>& f) {
  const auto sd = self_dual_parts(f);
  const auto mm = matrix_form(sd.minus);
  const auto mp = matrix_form(sd.plus);
  const auto mcm = matrix_form(sd.conj_minus);
  const auto mcp = matrix_form(sd.conj_plus);
  const auto cmm = outer(mcm, mm);
  const auto cpp = outer(mcp, mp);
  const auto cmp = outer(mcm, mp);
  const auto cpm = outer(mcp, mm);
  const S i = scalar_traits<S>::imag_unit();
  Valence4Set<S> out;
  out.tprime = {Valence4Tag::Tprime, cmm + cpp};
  out.qprime = {Valence4Tag::Qprime, cmm - cpp};
  out.dprime = {Valence4Tag::Dprime, cmp + cpm};
  out.xprime = {Valence4Tag::Xprime, i * (cmp - cpm)};
  return out;
}

// M^{AB} = t^{abcd} under the pair map; hermitian-exchange tensors give M = M^dagger.
template <class S>
SixtorMatrix<S> sixtor_matrix(const Tensor<S, 4>& t) {
  detail::require_all_upper(t, "sixtor_matrix");
  SixtorMatrix<S> m;
  for (int A = 0; A < 6; ++A)
    for (int B = 0; B < 6; ++B)
      m(A, B) = t(kSixtorPairs[A][0], kSixtorPairs[A][1], kSixtorPairs[B][0], kSixtorPairs[B][1]);
  return m;
}

template <class S>
SixtorMatrix<S> sixtor_matrix(const Valence4Concomitant<S>& c) {
  return sixtor_matrix(c.tensor);
}

template <class S>
Tensor<S, 4> tensor_from_sixtor_matrix(const SixtorMatrix<S>& m) {
  Tensor<S, 4> t;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const auto [A, sa] = sixtor_slot(a, b);
      if (sa == 0) continue;
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const auto [B, sb] = sixtor_slot(c, d);
          if (sb == 0) continue;
          t(a, b, c, d) = (sa * sb > 0) ? m(A, B) : -m(A, B);
        }
    }
  return t;
}

// T^{ab} = T'^{amnb} g_{mn}
template <class S>
Tensor<S, 2> middle_contraction(const Tensor<S, 4>& t) {
  detail::require_all_upper(t, "middle_contraction");
  return contract(adjust_index(t, 1, Variance::lower), 1, 2);
}

// g_{ab} t^{ab} (or the plain trace once one slot is already lowered)
template <class S>
S trace2(const Tensor<S, 2>& t) {
  if (t.variance(0) == t.variance(1))
    return contract(adjust_index(t, 0, flipped(t.variance(0))), 0, 1)();
  return contract(t, 0, 1)();
}

template <class S>
Valence2RawSet<S> valence2_set(const Valence4Set<S>& v4) {
  Valence2RawSet<S> out;
  out.t2 = {Valence2Tag::T2, middle_contraction(v4.tprime.tensor)};
  out.q2 = {Valence2Tag::Q2, middle_contraction(v4.qprime.tensor)};
  out.d2raw = {Valence2Tag::D2raw, middle_contraction(v4.dprime.tensor)};
  out.x2raw = {Valence2Tag::X2raw, middle_contraction(v4.xprime.tensor)};
  return out;
}

template <class S>
Valence2RawSet<S> valence2_set(const Bivector<S>& f, int epsilon_upper_0123 = -1) {
  return valence2_set(valence4_set(f, epsilon_upper_0123));
}

// L+ = tr(D2raw)/4, L- = tr(X2raw)/4; the traces of T2 and Q2 must vanish.
template <class S>
InvariantScalars<S> scalar_invariants(const Valence2RawSet<S>& v2) {
  const S quarter = scalar_traits<S>::ratio(1, 4);
  const S lp = quarter * trace2(v2.d2raw.tensor);
  const S lm = quarter * trace2(v2.x2raw.tensor);
  const double scale = std::max(max_abs(v2.t2.tensor), max_abs(v2.q2.tensor));
  if (!detail::tiny(trace2(v2.t2.tensor), scale) || !detail::tiny(trace2(v2.q2.tensor), scale))
    throw std::logic_error("T2/Q2 trace is nonzero");
  if (!detail::tiny(scalar_traits<S>::imag_of(lp), scale) ||
      !detail::tiny(scalar_traits<S>::imag_of(lm), scale))
    throw std::logic_error("scalar invariant has a nonzero imaginary part");
  return {scalar_traits<S>::real_part(lp), scalar_traits<S>::real_part(lm)};
}

template <class S>
InvariantScalars<S> scalar_invariants(const Bivector<S>& f, int epsilon_upper_0123 = -1) {
  return scalar_invariants(valence2_set(f, epsilon_upper_0123));
}

// D = -i(D2raw - L+ g), X = -i(X2raw - L- g): the imaginary parts of the raw contractions.
template <class S>
std::pair<Valence2Concomitant<S>, Valence2Concomitant<S>> irreducible_v2(
    const Valence2RawSet<S>& v2, const InvariantScalars<S>& scalars) {
  const auto gup = metric<S>(Variance::upper);
  const S minus_i = -scalar_traits<S>::imag_unit();
  const S lp = detail::from_real<S>(scalars.lplus);
  const S lm = detail::from_real<S>(scalars.lminus);
  Valence2Concomitant<S> d2{Valence2Tag::D2irr, minus_i * (v2.d2raw.tensor - lp * gup)};
  Valence2Concomitant<S> x2{Valence2Tag::X2irr, minus_i * (v2.x2raw.tensor - lm * gup)};
  return {std::move(d2), std::move(x2)};
}

template <class S>
std::pair<Valence2Concomitant<S>, Valence2Concomitant<S>> irreducible_v2(
    const Bivector<S>& f, int epsilon_upper_0123 = -1) {
  const auto v2 = valence2_set(f, epsilon_upper_0123);
  return irreducible_v2(v2, scalar_invariants(v2));
}

// t^{[a[d} g^{c]b]} = (t^{ad}g^{cb} - t^{ac}g^{db} - t^{bd}g^{ca} + t^{bc}g^{da})/4
template <class S>
Tensor<S, 4> v4_bracket(const Tensor<S, 2>& t) {
  detail::require_all_upper(t, "v4_bracket");
  const S quarter = scalar_traits<S>::ratio(1, 4);
  auto gsgn = [](int x, const S& v) { return x == 0 ? v : -v; };
  Tensor<S, 4> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          S acc{};
          if (c == b) acc += gsgn(b, t(a, d));
          if (d == b) acc -= gsgn(b, t(a, c));
          if (c == a) acc -= gsgn(a, t(b, d));
          if (d == a) acc += gsgn(a, t(b, c));
          out(a, b, c, d) = quarter * acc;
        }
  return out;
}

// g^{a[d} g^{c]b} = (g^{ad}g^{cb} - g^{ac}g^{db})/2
template <class S>
Tensor<S, 4> v4_metric_bracket() {
  const S half = scalar_traits<S>::ratio(1, 2);
  const S minus_half = -half;
  Tensor<S, 4> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const bool same = (a == 0) == (b == 0);
      out(a, b, b, a) += same ? half : minus_half;
      out(a, b, a, b) -= same ? half : minus_half;
    }
  return out;
}

// Dual on the leading index pair: out^{abcd} = 1/2 eps^{ab}{}_{mn} t^{mncd}.
// Maps D4 to +X4 and X4 to -D4.
template <class S>
Tensor<S, 4> dual_first_pair(const Tensor<S, 4>& t, int epsilon_upper_0123 = -1) {
  detail::require_all_upper(t, "dual_first_pair");
  const S half = scalar_traits<S>::ratio(1, 2);
  auto e = levi_civita4<S>(Variance::upper, epsilon_upper_0123);
  e = adjust_index(adjust_index(e, 2, Variance::lower), 3, Variance::lower);
  Tensor<S, 4> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          S acc{};
          for (int m = 0; m < 4; ++m)
            for (int n = 0; n < 4; ++n) {
              const S& ev = e(a, b, m, n);
              if (scalar_traits<S>::is_zero(ev)) continue;
              acc += ev * t(m, n, c, d);
            }
          out(a, b, c, d) = half * acc;
        }
    }
  return out;
}

// D4 = D' - 2i D^{[a[d}g^{c]b]} - (2/3)L+ g-bracket - (1/3)L- eps
// X4 = X' - 2i X^{[a[d}g^{c]b]} - (2/3)L- g-bracket + (1/3)L+ eps
template <class S>
std::pair<Valence4Concomitant<S>, Valence4Concomitant<S>> irreducible_v4(
    const Valence4Set<S>& v4, const Valence2Concomitant<S>& d2irr,
    const Valence2Concomitant<S>& x2irr, const InvariantScalars<S>& scalars,
    int epsilon_upper_0123 = -1) {
  const auto gb = v4_metric_bracket<S>();
  const auto eps = levi_civita4<S>(Variance::upper, epsilon_upper_0123);
  const S two_i = scalar_traits<S>::ratio(2, 1) * scalar_traits<S>::imag_unit();
  const S lp23 = scalar_traits<S>::ratio(2, 3) * detail::from_real<S>(scalars.lplus);
  const S lm23 = scalar_traits<S>::ratio(2, 3) * detail::from_real<S>(scalars.lminus);
  const S lp13 = scalar_traits<S>::ratio(1, 3) * detail::from_real<S>(scalars.lplus);
  const S lm13 = scalar_traits<S>::ratio(1, 3) * detail::from_real<S>(scalars.lminus);
  Valence4Concomitant<S> d4{
      Valence4Tag::D4irr,
      v4.dprime.tensor - two_i * v4_bracket(d2irr.tensor) - lp23 * gb - lm13 * eps};
  Valence4Concomitant<S> x4{
      Valence4Tag::X4irr,
      v4.xprime.tensor - two_i * v4_bracket(x2irr.tensor) - lm23 * gb + lp13 * eps};
  return {std::move(d4), std::move(x4)};
}

template <class S>
std::pair<Valence4Concomitant<S>, Valence4Concomitant<S>> irreducible_v4(
    const Bivector<S>& f, int epsilon_upper_0123 = -1) {
  const auto v4 = valence4_set(f, epsilon_upper_0123);
  const auto v2 = valence2_set(v4);
  const auto scalars = scalar_invariants(v2);
  const auto [d2, x2] = irreducible_v2(v2, scalars);
  return irreducible_v4(v4, d2, x2, scalars, epsilon_upper_0123);
}

// Rebuilds T' from (T2, Q2) or Q' from (Q2, T2):
//   out = own-bracket/2 - (i/4)(e1 - e2 - e3 + e4)
// where e1 = partner^{a}{}_{m} eps^{mbcd} and e2..e4 cycle the free indices.
// The epsilon terms need the PARTNER tensor: T2 alone does not determine T'
// (equal-T2 counterexample: E=(1,i,0) vs E=(1,-i,0), B=0).
template <class S>
Valence4Concomitant<S> reconstruct_v4(const Valence2Concomitant<S>& own,
                                      const Valence2Concomitant<S>& partner,
                                      int epsilon_upper_0123 = -1) {
  Valence4Tag out_tag;
  if (own.tag == Valence2Tag::T2 && partner.tag == Valence2Tag::Q2)
    out_tag = Valence4Tag::Tprime;
  else if (own.tag == Valence2Tag::Q2 && partner.tag == Valence2Tag::T2)
    out_tag = Valence4Tag::Qprime;
  else
    throw std::invalid_argument("reconstruct_v4 expects (T2, Q2) or (Q2, T2)");
  detail::require_all_upper(own.tensor, "reconstruct_v4");
  detail::require_all_upper(partner.tensor, "reconstruct_v4");
  const auto eps = levi_civita4<S>(Variance::upper, epsilon_upper_0123);
  const auto pl = adjust_index(partner.tensor, 1, Variance::lower);
  const S half = scalar_traits<S>::ratio(1, 2);
  const S i_quarter = scalar_traits<S>::ratio(1, 4) * scalar_traits<S>::imag_unit();
  const auto& o = own.tensor;
  auto gsgn = [](int x, const S& v) { return x == 0 ? v : -v; };
  Tensor<S, 4> out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          S br{};
          if (c == b) br += gsgn(b, o(a, d));
          if (d == b) br -= gsgn(b, o(a, c));
          if (c == a) br -= gsgn(a, o(b, d));
          if (d == a) br += gsgn(a, o(b, c));
          S ep{};
          for (int m = 0; m < 4; ++m) {
            if (!scalar_traits<S>::is_zero(eps(m, b, c, d))) ep += pl(a, m) * eps(m, b, c, d);
            if (!scalar_traits<S>::is_zero(eps(m, c, d, a))) ep -= pl(b, m) * eps(m, c, d, a);
            if (!scalar_traits<S>::is_zero(eps(m, d, a, b))) ep -= pl(c, m) * eps(m, d, a, b);
            if (!scalar_traits<S>::is_zero(eps(m, a, b, c))) ep += pl(d, m) * eps(m, a, b, c);
          }
          out(a, b, c, d) = half * br - i_quarter * ep;
        }
  return {out_tag, std::move(out)};
}

template <class S>
Valence4Concomitant<S> reconstruct_v4(const Valence2RawSet<S>& v2, Valence4Tag which,
                                      int epsilon_upper_0123 = -1) {
  if (which == Valence4Tag::Tprime) return reconstruct_v4(v2.t2, v2.q2, epsilon_upper_0123);
  if (which == Valence4Tag::Qprime) return reconstruct_v4(v2.q2, v2.t2, epsilon_upper_0123);
  throw std::invalid_argument("only Tprime and Qprime are reconstructible");
}

// Valence-2 concomitants and scalars straight from the 3-vector formulas.
template <class S>
struct LocalComponents {
  Tensor<S, 2> t2, q2, d2irr, x2irr;
  typename scalar_traits<S>::real_type lplus{};
  typename scalar_traits<S>::real_type lminus{};
};

template <class S>
LocalComponents<S> local_components(const Bivector<S>& f) {
  using traits = scalar_traits<S>;
  const S half = traits::ratio(1, 2);
  const S ihalf = half * traits::imag_unit();
  const Vec3<S> ec = f.E.unaryExpr([](const S& z) { return traits::conjugate(z); });
  const Vec3<S> bc = f.B.unaryExpr([](const S& z) { return traits::conjugate(z); });
  auto block = [](const Vec3<S>& a, const Vec3<S>& b, int i, int j) { return a(i) * b(j); };

  const S e2 = cdot(f.E, f.E);
  const S b2 = cdot(f.B, f.B);
  const S edotb = cdot(f.E, f.B);
  const Vec3<S> ce_b = cross3(ec, f.B);   // conj(E) x B
  const Vec3<S> ce_e = cross3(ec, f.E);   // conj(E) x E
  const Vec3<S> cb_b = cross3(bc, f.B);   // conj(B) x B

  LocalComponents<S> out;
  out.lplus = traits::real_part(half * (e2 - b2));
  out.lminus = -traits::real_part(edotb);

  const S t00 = traits::real_of(half * (e2 + b2));
  out.t2(0, 0) = t00;
  const S q00 = traits::imag_of(edotb);
  out.q2(0, 0) = q00;
  for (int i = 0; i < 3; ++i) {
    out.t2(i + 1, 0) = traits::real_of(ce_b(i));
    out.t2(0, i + 1) = out.t2(i + 1, 0);
    out.q2(i + 1, 0) = ihalf * (ce_e(i) + cb_b(i));
    out.q2(0, i + 1) = out.q2(i + 1, 0);
    out.d2irr(i + 1, 0) = -traits::imag_of(ce_b(i));
    out.d2irr(0, i + 1) = -out.d2irr(i + 1, 0);
    out.x2irr(i + 1, 0) = ihalf * (ce_e(i) - cb_b(i));
    out.x2irr(0, i + 1) = -out.x2irr(i + 1, 0);
    for (int j = 0; j < 3; ++j) {
      const S ee = block(ec, f.E, i, j);
      const S bb = block(bc, f.B, i, j);
      const S eb = block(ec, f.B, i, j);
      const S be = block(bc, f.E, i, j);
      out.t2(i + 1, j + 1) = -traits::real_of(ee + bb) + (i == j ? t00 : S{});
      out.q2(i + 1, j + 1) = -traits::imag_of(eb - be) + (i == j ? q00 : S{});
      out.d2irr(i + 1, j + 1) = -traits::imag_of(ee - bb);
      out.x2irr(i + 1, j + 1) = traits::imag_of(eb + be);
    }
  }
  return out;
}

// Every concomitant from E,B 3-vector algebra alone: valence-2 sets from the local
// formulas above, valence-4 sets assembled through their sixtor block matrices.
// Serves as the independent oracle for the abstract-index route (fixed eps^{0123} = -1).
template <class S>
ConcomitantSet<S> eb_oracle(const Bivector<S>& f) {
  using traits = scalar_traits<S>;
  const S half = traits::ratio(1, 2);
  const S ihalf = half * traits::imag_unit();
  const S third = traits::ratio(1, 3);
  const Vec3<S> ec = f.E.unaryExpr([](const S& z) { return traits::conjugate(z); });
  const Vec3<S> bc = f.B.unaryExpr([](const S& z) { return traits::conjugate(z); });

  ConcomitantSet<S> out;
  const auto local = local_components(f);
  out.scalars = {local.lplus, local.lminus};
  out.t2 = {Valence2Tag::T2, local.t2};
  out.q2 = {Valence2Tag::Q2, local.q2};
  out.d2irr = {Valence2Tag::D2irr, local.d2irr};
  out.x2irr = {Valence2Tag::X2irr, local.x2irr};

  SixtorMatrix<S> mt, mq, md, mx, m4d, m4x;
  const S lp3 = third * detail::from_real<S>(local.lplus);
  const S lm3 = third * detail::from_real<S>(local.lminus);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const S ee = ec(i) * f.E(j);
      const S bb = bc(i) * f.B(j);
      const S eb = ec(i) * f.B(j);
      const S be = bc(i) * f.E(j);
      // T' = [[(EE+BB)/2, (EB-BE)/2], [(BE-EB)/2, (EE+BB)/2]]
      mt(i, j) = half * (ee + bb);
      mt(i, j + 3) = half * (eb - be);
      mt(i + 3, j) = half * (be - eb);
      mt(i + 3, j + 3) = mt(i, j);
      // Q' = [[(i/2)(BE-EB), (i/2)(EE+BB)], [-(i/2)(EE+BB), (i/2)(BE-EB)]]
      mq(i, j) = ihalf * (be - eb);
      mq(i, j + 3) = ihalf * (ee + bb);
      mq(i + 3, j) = -mq(i, j + 3);
      mq(i + 3, j + 3) = mq(i, j);
      // D' = [[(EE-BB)/2, (EB+BE)/2], [(EB+BE)/2, (BB-EE)/2]]
      md(i, j) = half * (ee - bb);
      md(i, j + 3) = half * (eb + be);
      md(i + 3, j) = md(i, j + 3);
      md(i + 3, j + 3) = -md(i, j);
      // X' = [[-(EB+BE)/2, (EE-BB)/2], [(EE-BB)/2, (EB+BE)/2]]
      mx(i, j) = -md(i, j + 3);
      mx(i, j + 3) = md(i, j);
      mx(i + 3, j) = md(i, j);
      mx(i + 3, j + 3) = md(i, j + 3);
      // D4 = [[S, P], [P, -S]], X4 = [[-P, S], [S, P]] with
      // S = Re{EE-BB}/2 - (L+/3) I, P = Re{EB+BE}/2 + (L-/3) I
      const S sblk = half * traits::real_of(ee - bb) - (i == j ? lp3 : S{});
      const S pblk = half * traits::real_of(eb + be) + (i == j ? lm3 : S{});
      m4d(i, j) = sblk;
      m4d(i, j + 3) = pblk;
      m4d(i + 3, j) = pblk;
      m4d(i + 3, j + 3) = -sblk;
      m4x(i, j) = -pblk;
      m4x(i, j + 3) = sblk;
      m4x(i + 3, j) = sblk;
      m4x(i + 3, j + 3) = pblk;
    }
  out.tprime = {Valence4Tag::Tprime, tensor_from_sixtor_matrix(mt)};
  out.qprime = {Valence4Tag::Qprime, tensor_from_sixtor_matrix(mq)};
  out.dprime = {Valence4Tag::Dprime, tensor_from_sixtor_matrix(md)};
  out.xprime = {Valence4Tag::Xprime, tensor_from_sixtor_matrix(mx)};
  out.d4irr = {Valence4Tag::D4irr, tensor_from_sixtor_matrix(m4d)};
  out.x4irr = {Valence4Tag::X4irr, tensor_from_sixtor_matrix(m4x)};
  out.convention.backend = traits::name;
  return out;
}

// Classical invariants of a real bivector:
//   L+^r = F^{mn}F_{nm}/4, L-^r = F^{mn}F^{ab}eps_{nmab}/8,
//   stress^{ab} = F^{am}F_{m}{}^{b} - L+^r g^{ab}  (trace-free coefficient).
// Cross-checked against the hermitian route before returning.
template <class S>
RealReferenceInvariants<S> real_reference(const Bivector<S>& f) {
  using traits = scalar_traits<S>;
  for (int k = 0; k < 3; ++k)
    if (!traits::is_zero(traits::imag_of(f.E(k))) || !traits::is_zero(traits::imag_of(f.B(k))))
      throw std::invalid_argument("real_reference expects a real bivector");
  const auto m = matrix_form(f);
  auto gsgn = [](int x, const S& v) { return x == 0 ? v : -v; };
  S lp{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) lp += m(a, b) * gsgn(a, gsgn(b, m(b, a)));
  lp = traits::ratio(1, 4) * lp;
  const auto eps_dn = levi_civita4<S>(Variance::lower, -1);
  S lm{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (traits::is_zero(m(a, b))) continue;
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          if (!traits::is_zero(eps_dn(b, a, c, d))) lm += m(a, b) * m(c, d) * eps_dn(b, a, c, d);
    }
  lm = traits::ratio(1, 8) * lm;
  RealReferenceInvariants<S> out;
  out.lplus_r = traits::real_part(lp);
  out.lminus_r = traits::real_part(lm);
  const auto gup = metric<S>(Variance::upper);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      S acc{};
      for (int k = 0; k < 4; ++k) acc += gsgn(k, m(a, k)) * m(k, b);
      out.stress(a, b) = acc - lp * gup(a, b);
    }

  const auto v2 = valence2_set(f);
  const auto scalars = scalar_invariants(v2);
  const double scale = std::max(1.0, max_abs(out.stress));
  const auto lp_err = detail::from_real<S>(out.lplus_r - scalars.lplus);
  const auto lm_err = detail::from_real<S>(out.lminus_r - scalars.lminus);
  if (!detail::tiny(lp_err, scale) || !detail::tiny(lm_err, scale))
    throw std::logic_error("classical scalar invariants disagree with the hermitian route");
  if constexpr (traits::exact) {
    if (!(out.stress == v2.t2.tensor))
      throw std::logic_error("classical stress tensor disagrees with T2");
  } else {
    if (max_abs_diff(out.stress, v2.t2.tensor) > 1e-9 * scale)
      throw std::logic_error("classical stress tensor disagrees with T2");
  }
  return out;
}

template <class S>
ConcomitantSet<S> compute_all(const Bivector<S>& f, int epsilon_upper_0123 = -1) {
  const auto v4 = valence4_set(f, epsilon_upper_0123);
  const auto v2 = valence2_set(v4);
  const auto scalars = scalar_invariants(v2);
  auto [d2, x2] = irreducible_v2(v2, scalars);
  auto [d4, x4] = irreducible_v4(v4, d2, x2, scalars, epsilon_upper_0123);
  ConcomitantSet<S> out;
  out.scalars = scalars;
  out.t2 = v2.t2;
  out.q2 = v2.q2;
  out.d2irr = std::move(d2);
  out.x2irr = std::move(x2);
  out.tprime = v4.tprime;
  out.qprime = v4.qprime;
  out.dprime = v4.dprime;
  out.xprime = v4.xprime;
  out.d4irr = std::move(d4);
  out.x4irr = std::move(x4);
  out.convention.epsilon_upper_0123 = epsilon_upper_0123;
  out.convention.backend = scalar_traits<S>::name;
  return out;
}

}  // namespace concom
