#include "concom/signal.hpp"
#include "concom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

namespace concom {

namespace {

template <class S>
double residual_of(const S& v) {
  return scalar_traits<S>::abs_approx(v);
}

template <class S, int R>
double residual_of(const Tensor<S, R>& t) {
  return max_abs(t);
}

template <class S>
double residual_of(const Bivector<S>& f) {
  return max_abs(f);
}

template <class S>
bool vanishes(const S& v) {
  return scalar_traits<S>::is_zero(v);
}

template <class S, int R>
bool vanishes(const Tensor<S, R>& t) {
  return is_zero(t);
}

template <class S>
bool vanishes(const Bivector<S>& f) {
  return is_zero(f);
}

// Accumulates residuals for one property; exact backends demand exact zeros,
// the float backend compares against tolerance * max(1, scale).
template <class S>
class Check {
 public:
  Check(std::string name, double tolerance) : name_(std::move(name)), tolerance_(tolerance) {}

  template <class V>
  void zero(const V& v, double scale, const char* what) {
    const double r = residual_of(v);
    worst_ = std::max(worst_, r);
    bool pass;
    if constexpr (scalar_traits<S>::exact)
      pass = vanishes(v);
    else
      pass = r <= tolerance_ * std::max(1.0, scale);
    if (!pass) note_failure(what, r);
  }

  void require(bool condition, const char* what) {
    if (!condition) note_failure(what, -1.0);
  }

  void set_detail(std::string detail) { info_ = std::move(detail); }
  bool ok() const { return ok_; }

  PropertyResult result(int trials) const {
    PropertyResult r;
    r.name = name_;
    r.passed = ok_;
    r.trials = trials;
    r.worst_residual = worst_;
    r.detail = ok_ ? info_ : failure_;
    return r;
  }

 private:
  void note_failure(const char* what, double r) {
    if (ok_) {
      failure_ = what;
      if (r >= 0.0) {
        std::ostringstream os;
        os << failure_ << " (residual " << r << ")";
        failure_ = os.str();
      }
    }
    ok_ = false;
  }

  std::string name_;
  double tolerance_;
  bool ok_ = true;
  double worst_ = 0.0;
  std::string failure_;
  std::string info_;
};

template <class S>
struct Pieces {
  Valence4Set<S> v4;
  Valence2RawSet<S> v2;
  InvariantScalars<S> scalars;
  Valence2Concomitant<S> d2, x2;
  Valence4Concomitant<S> d4, x4;
};

template <class S>
Pieces<S> make_pieces(const Bivector<S>& f, int eps) {
  Pieces<S> out;
  out.v4 = valence4_set(f, eps);
  out.v2 = valence2_set(out.v4);
  out.scalars = scalar_invariants(out.v2);
  auto [d2, x2] = irreducible_v2(out.v2, out.scalars);
  out.d2 = std::move(d2);
  out.x2 = std::move(x2);
  auto [d4, x4] = irreducible_v4(out.v4, out.d2, out.x2, out.scalars, eps);
  out.d4 = std::move(d4);
  out.x4 = std::move(x4);
  return out;
}

// b must equal sign * a family by family; covers the twelve concomitants plus
// the raw valence-2 contractions.
template <class S>
void compare_pieces(Check<S>& chk, const Pieces<S>& a, const Pieces<S>& b, int sign,
                    double scale) {
  const S s = S(sign);
  auto c4 = [&](const Tensor<S, 4>& x, const Tensor<S, 4>& y, const char* what) {
    chk.zero(y - s * x, scale, what);
  };
  auto c2 = [&](const Tensor<S, 2>& x, const Tensor<S, 2>& y, const char* what) {
    chk.zero(y - s * x, scale, what);
  };
  c4(a.v4.tprime.tensor, b.v4.tprime.tensor, "T'");
  c4(a.v4.qprime.tensor, b.v4.qprime.tensor, "Q'");
  c4(a.v4.dprime.tensor, b.v4.dprime.tensor, "D'");
  c4(a.v4.xprime.tensor, b.v4.xprime.tensor, "X'");
  c4(a.d4.tensor, b.d4.tensor, "D4");
  c4(a.x4.tensor, b.x4.tensor, "X4");
  c2(a.v2.t2.tensor, b.v2.t2.tensor, "T2");
  c2(a.v2.q2.tensor, b.v2.q2.tensor, "Q2");
  c2(a.v2.d2raw.tensor, b.v2.d2raw.tensor, "D2raw");
  c2(a.v2.x2raw.tensor, b.v2.x2raw.tensor, "X2raw");
  c2(a.d2.tensor, b.d2.tensor, "D2");
  c2(a.x2.tensor, b.x2.tensor, "X2");
  chk.zero(detail::from_real<S>(b.scalars.lplus) - s * detail::from_real<S>(a.scalars.lplus),
           scale, "L+");
  chk.zero(detail::from_real<S>(b.scalars.lminus) - s * detail::from_real<S>(a.scalars.lminus),
           scale, "L-");
}

template <class S>
void compare_with_oracle(Check<S>& chk, const Pieces<S>& p, const ConcomitantSet<S>& o,
                         double scale) {
  auto c4 = [&](const Tensor<S, 4>& x, const Tensor<S, 4>& y, const char* what) {
    chk.zero(y - x, scale, what);
  };
  c4(p.v4.tprime.tensor, o.tprime.tensor, "T'");
  c4(p.v4.qprime.tensor, o.qprime.tensor, "Q'");
  c4(p.v4.dprime.tensor, o.dprime.tensor, "D'");
  c4(p.v4.xprime.tensor, o.xprime.tensor, "X'");
  c4(p.d4.tensor, o.d4irr.tensor, "D4");
  c4(p.x4.tensor, o.x4irr.tensor, "X4");
  chk.zero(o.t2.tensor - p.v2.t2.tensor, scale, "T2");
  chk.zero(o.q2.tensor - p.v2.q2.tensor, scale, "Q2");
  chk.zero(o.d2irr.tensor - p.d2.tensor, scale, "D2");
  chk.zero(o.x2irr.tensor - p.x2.tensor, scale, "X2");
  chk.zero(detail::from_real<S>(o.scalars.lplus - p.scalars.lplus), scale, "L+");
  chk.zero(detail::from_real<S>(o.scalars.lminus - p.scalars.lminus), scale, "L-");
}

template <class S>
Bivector<S> real_part_bivector(const Bivector<S>& f) {
  using traits = scalar_traits<S>;
  Bivector<S> out;
  for (int k = 0; k < 3; ++k) {
    out.E(k) = traits::make(traits::real_part(f.E(k)), typename traits::real_type{});
    out.B(k) = traits::make(traits::real_part(f.B(k)), typename traits::real_type{});
  }
  return out;
}

PropertyResult kernel_property(const SuiteConfig& cfg) {
  using S = GaussianRational;
  Check<S> chk("kernel identities", cfg.tolerance);
  const int eps = cfg.epsilon_upper_0123;
  const auto eps_up = levi_civita4<S>(Variance::upper, eps);
  const auto eps_dn = levi_civita4<S>(Variance::lower, eps);
  chk.zero(full_contract(eps_dn, eps_up) + S(24), 24.0, "eps^abcd eps_abcd = -24");
  chk.zero(trace2(metric<S>(Variance::upper)) - S(4), 4.0, "g^ab g_ab = 4");
  chk.zero(eps_up(0, 1, 2, 3) - S(eps), 1.0, "eps^{0123} value");
  chk.zero(eps_dn(0, 1, 2, 3) + S(eps), 1.0, "eps_{0123} = -eps^{0123}");
  chk.zero(eps_up(1, 0, 2, 3) + eps_up(0, 1, 2, 3), 1.0, "odd permutation flips sign");
  const auto delta = adjust_index(metric<S>(Variance::lower), 0, Variance::upper);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      chk.zero(delta(a, b) - S(a == b ? 1 : 0), 1.0, "mixed metric is the identity");
  for (int a = 0; a < 6; ++a) {
    Sixtor<S> unit;
    for (int k = 0; k < 6; ++k) unit(k) = (k == a) ? S(1) : S{};
    const auto f = from_sixtor(unit);
    chk.zero(dual(f, eps) - duality_transform(f), 1.0, "epsilon dual matches the E,B swap");
    chk.zero(dual(dual(f, eps), eps) + f, 1.0, "dual applied twice is -1");
  }
  return chk.result(0);
}

template <class S>
void run_trial_properties(const SuiteConfig& cfg, PropertyReport& rep) {
  using traits = scalar_traits<S>;
  const int eps = cfg.epsilon_upper_0123;
  const double tol = cfg.tolerance;
  const S i = traits::imag_unit();

  Check<S> pipeline("concomitant pipeline evaluates", tol);
  Check<S> raw_sym("raw tensors: pair antisymmetry and hermitian exchange", tol);
  Check<S> routes("epsilon-kernel and self-dual routes agree", tol);
  Check<S> combos("raw combination identities", tol);
  Check<S> sixtor_rt("sixtor pair map round trips", tol);
  Check<S> dual_lock("dual kernel matches the E,B swap", tol);
  Check<S> projectors("self-dual projections", tol);
  Check<S> v2sym("valence-2 symmetry and realness", tol);
  Check<S> v2trace("valence-2 traces fix the scalar invariants", tol);
  Check<S> v2decomp("raw valence-2 parts decompose as L g + i irreducible", tol);
  Check<S> v2dual("valence-2 duality rotation", tol);
  Check<S> slots("raw slot-pair contractions collapse to the valence-2 tensor", tol);
  Check<S> irred("irreducibility certificates", tol);
  Check<S> rawred("raw tensors are reducible", tol);
  Check<S> v4dual("leading-pair duality rotation", tol);
  Check<S> signs("duality sign table", tol);
  Check<S> phases("unit phase invariance", tol);
  Check<S> recon("raw reconstruction from valence-2 pieces", tol);
  Check<S> oracle("abstract route matches the E,B oracle", tol);
  Check<S> realdeg("real bivector degeneration", tol);

  const auto gup = metric<S>(Variance::upper);
  std::mt19937_64 rng(cfg.seed);
  for (int trial = 0; trial < cfg.trials; ++trial) {
    try {
      const auto f = random_bivector<S>(rng);
      const double m = max_abs(f);
      const double scale = std::max(1.0, m * m);
      const auto p = make_pieces(f, eps);
      const auto fm = matrix_form(f);
      const auto cfm = conjugate(fm);
      const auto sfm = dual(fm, eps);

      const Tensor<S, 4>* raws[4] = {&p.v4.tprime.tensor, &p.v4.qprime.tensor,
                                     &p.v4.dprime.tensor, &p.v4.xprime.tensor};
      for (const auto* tp : raws) {
        const auto& t = *tp;
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
              for (int d = 0; d < 4; ++d) {
                raw_sym.zero(t(b, a, c, d) + t(a, b, c, d), scale, "first pair antisymmetry");
                raw_sym.zero(t(a, b, d, c) + t(a, b, c, d), scale, "second pair antisymmetry");
                raw_sym.zero(t(c, d, a, b) - traits::conjugate(t(a, b, c, d)), scale,
                             "hermitian pair exchange");
              }
      }

      const auto alt = valence4_set_self_dual(f);
      routes.zero(alt.tprime.tensor - p.v4.tprime.tensor, scale, "T'");
      routes.zero(alt.qprime.tensor - p.v4.qprime.tensor, scale, "Q'");
      routes.zero(alt.dprime.tensor - p.v4.dprime.tensor, scale, "D'");
      routes.zero(alt.xprime.tensor - p.v4.xprime.tensor, scale, "X'");

      combos.zero(p.v4.tprime.tensor + p.v4.dprime.tensor - outer(cfm, fm), scale,
                  "T' + D' = conj(F) (x) F");
      combos.zero(p.v4.xprime.tensor - i * p.v4.qprime.tensor - outer(cfm, sfm), scale,
                  "X' - i Q' = conj(F) (x) *F");

      sixtor_rt.zero(tensor_from_sixtor_matrix(sixtor_matrix(p.v4.tprime.tensor)) -
                         p.v4.tprime.tensor,
                     scale, "T' round trip");
      sixtor_rt.zero(tensor_from_sixtor_matrix(sixtor_matrix(p.d4.tensor)) - p.d4.tensor, scale,
                     "D4 round trip");
      sixtor_rt.zero(from_sixtor(sixtor_form(f)) - f, scale, "bivector round trip");

      dual_lock.zero(sfm - matrix_form(duality_transform(f)), scale, "kernel dual vs swap");
      dual_lock.zero(dual(sfm, eps) + fm, scale, "dual squared is -1");

      const auto parts = self_dual_parts(f);
      projectors.zero(parts.minus + parts.plus - f, scale, "minus + plus = F");
      projectors.zero(duality_transform(parts.minus) + i * parts.minus, scale,
                      "minus part has duality eigenvalue -i");
      projectors.zero(duality_transform(parts.plus) - i * parts.plus, scale,
                      "plus part has duality eigenvalue +i");
      projectors.zero(duality_transform(parts.conj_minus) - i * parts.conj_minus, scale,
                      "conj minus part has duality eigenvalue +i");
      projectors.zero(parts.conj_minus - conjugate(parts.minus), scale,
                      "conj minus is the conjugate");

      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          v2sym.zero(traits::imag_of(p.v2.t2.tensor(a, b)), scale, "T2 realness");
          v2sym.zero(traits::imag_of(p.v2.q2.tensor(a, b)), scale, "Q2 realness");
          v2sym.zero(traits::imag_of(p.d2.tensor(a, b)), scale, "D2 realness");
          v2sym.zero(traits::imag_of(p.x2.tensor(a, b)), scale, "X2 realness");
          v2sym.zero(p.v2.t2.tensor(a, b) - p.v2.t2.tensor(b, a), scale, "T2 symmetry");
          v2sym.zero(p.v2.q2.tensor(a, b) - p.v2.q2.tensor(b, a), scale, "Q2 symmetry");
          v2sym.zero(p.d2.tensor(a, b) + p.d2.tensor(b, a), scale, "D2 antisymmetry");
          v2sym.zero(p.x2.tensor(a, b) + p.x2.tensor(b, a), scale, "X2 antisymmetry");
        }

      const S four(4);
      v2trace.zero(trace2(p.v2.t2.tensor), scale, "T2 trace");
      v2trace.zero(trace2(p.v2.q2.tensor), scale, "Q2 trace");
      v2trace.zero(trace2(p.v2.d2raw.tensor) - four * detail::from_real<S>(p.scalars.lplus),
                   scale, "D2raw trace = 4 L+");
      v2trace.zero(trace2(p.v2.x2raw.tensor) - four * detail::from_real<S>(p.scalars.lminus),
                   scale, "X2raw trace = 4 L-");
      v2trace.zero(trace2(p.d2.tensor), scale, "D2 trace");
      v2trace.zero(trace2(p.x2.tensor), scale, "X2 trace");

      v2decomp.zero(p.v2.d2raw.tensor - detail::from_real<S>(p.scalars.lplus) * gup -
                        i * p.d2.tensor,
                    scale, "D2raw = L+ g + i D2");
      v2decomp.zero(p.v2.x2raw.tensor - detail::from_real<S>(p.scalars.lminus) * gup -
                        i * p.x2.tensor,
                    scale, "X2raw = L- g + i X2");

      v2dual.zero(dual(p.d2.tensor, eps) - p.x2.tensor, scale, "*D2 = +X2");
      v2dual.zero(dual(p.x2.tensor, eps) + p.d2.tensor, scale, "*X2 = -D2");
      v2dual.zero(dual(p.v2.t2.tensor, eps), scale, "*T2 = 0");
      v2dual.zero(dual(p.v2.q2.tensor, eps), scale, "*Q2 = 0");

      auto slot_contract = [](const Tensor<S, 4>& t, int a, int b) {
        return contract(adjust_index(t, a, Variance::lower), a, b);
      };
      const std::pair<const Tensor<S, 4>*, const Tensor<S, 2>*> slot_cases[2] = {
          {&p.v4.tprime.tensor, &p.v2.t2.tensor}, {&p.v4.qprime.tensor, &p.v2.q2.tensor}};
      for (const auto& [t4, t2] : slot_cases) {
        slots.zero(slot_contract(*t4, 0, 3) - *t2, scale, "(0,3) slot pair gives +v2");
        slots.zero(slot_contract(*t4, 0, 2) + *t2, scale, "(0,2) slot pair gives -v2");
        slots.zero(slot_contract(*t4, 1, 3) + *t2, scale, "(1,3) slot pair gives -v2");
        slots.zero(slot_contract(*t4, 0, 1), scale, "(0,1) slot pair vanishes");
        slots.zero(slot_contract(*t4, 2, 3), scale, "(2,3) slot pair vanishes");
      }

      irred.require(irreducibility_report(p.d4.tensor, tol, eps).certified, "D4 certificate");
      irred.require(irreducibility_report(p.x4.tensor, tol, eps).certified, "X4 certificate");
      irred.require(irreducibility_report(p.d2.tensor, tol).certified, "D2 certificate");
      irred.require(irreducibility_report(p.x2.tensor, tol).certified, "X2 certificate");
      irred.require(irreducibility_report(p.v2.t2.tensor, tol).certified, "T2 certificate");
      irred.require(irreducibility_report(p.v2.q2.tensor, tol).certified, "Q2 certificate");
      for (std::size_t k = 0; k < p.d4.tensor.data().size(); ++k) {
        irred.zero(traits::imag_of(p.d4.tensor.data()[k]), scale, "D4 realness");
        irred.zero(traits::imag_of(p.x4.tensor.data()[k]), scale, "X4 realness");
      }

      if (!is_zero(f)) {
        const auto rep4 = irreducibility_report(p.v4.tprime.tensor, tol, eps);
        rawred.require(!rep4.certified, "raw T' must fail the trace tests");
        rawred.zero(slot_contract(p.v4.tprime.tensor, 1, 2) - p.v2.t2.tensor, scale,
                    "raw (1,2) trace recovers T2");
        rawred.require(!vanishes(p.v2.t2.tensor), "T2 vanishes only for F = 0");
      }

      v4dual.zero(dual_first_pair(p.d4.tensor, eps) - p.x4.tensor, scale, "*12 D4 = +X4");
      v4dual.zero(dual_first_pair(p.x4.tensor, eps) + p.d4.tensor, scale, "*12 X4 = -D4");

      // T', Q', T2, Q2 are invariant under the swap; everything else flips sign.
      const auto ps = make_pieces(duality_transform(f), eps);
      signs.zero(ps.v4.tprime.tensor - p.v4.tprime.tensor, scale, "T' -> +T'");
      signs.zero(ps.v4.qprime.tensor - p.v4.qprime.tensor, scale, "Q' -> +Q'");
      signs.zero(ps.v4.dprime.tensor + p.v4.dprime.tensor, scale, "D' -> -D'");
      signs.zero(ps.v4.xprime.tensor + p.v4.xprime.tensor, scale, "X' -> -X'");
      signs.zero(ps.d4.tensor + p.d4.tensor, scale, "D4 -> -D4");
      signs.zero(ps.x4.tensor + p.x4.tensor, scale, "X4 -> -X4");
      signs.zero(ps.v2.t2.tensor - p.v2.t2.tensor, scale, "T2 -> +T2");
      signs.zero(ps.v2.q2.tensor - p.v2.q2.tensor, scale, "Q2 -> +Q2");
      signs.zero(ps.d2.tensor + p.d2.tensor, scale, "D2 -> -D2");
      signs.zero(ps.x2.tensor + p.x2.tensor, scale, "X2 -> -X2");
      signs.zero(detail::from_real<S>(ps.scalars.lplus + p.scalars.lplus), scale, "L+ -> -L+");
      signs.zero(detail::from_real<S>(ps.scalars.lminus + p.scalars.lminus), scale,
                 "L- -> -L-");

      const S five(5);
      const S thirteen(13);
      const S exact_phases[3] = {i, (S(3) + S(4) * i) / five, (S(5) + S(12) * i) / thirteen};
      for (const S& phase : exact_phases) {
        const auto rotated = make_pieces(phase_rotate(f, phase), eps);
        compare_pieces(phases, p, rotated, +1, scale);
      }
      if constexpr (!traits::exact) {
        std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
        const double th = angle(rng);
        const S phase = traits::make(std::cos(th), std::sin(th));
        const auto rotated = make_pieces(phase_rotate(f, phase), eps);
        compare_pieces(phases, p, rotated, +1, scale);
      }

      recon.zero(reconstruct_v4(p.v2, Valence4Tag::Tprime, eps).tensor - p.v4.tprime.tensor,
                 scale, "T' from (T2, Q2)");
      recon.zero(reconstruct_v4(p.v2, Valence4Tag::Qprime, eps).tensor - p.v4.qprime.tensor,
                 scale, "Q' from (Q2, T2)");

      compare_with_oracle(oracle, p, eb_oracle(f), scale);

      const auto fr = real_part_bivector(random_bivector<S>(rng));
      const auto pr = make_pieces(fr, eps);
      const double mr = max_abs(fr);
      const double rscale = std::max(1.0, mr * mr);
      realdeg.zero(pr.v2.q2.tensor, rscale, "Q2 vanishes for real F");
      realdeg.zero(pr.d2.tensor, rscale, "D2 vanishes for real F");
      realdeg.zero(pr.x2.tensor, rscale, "X2 vanishes for real F");
      const auto rparts = self_dual_parts(fr);
      realdeg.zero(rparts.conj_minus - rparts.plus, rscale, "conj(minus) = plus for real F");
      const auto mq = sixtor_matrix(pr.v4.qprime.tensor);
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
          realdeg.zero(traits::real_of(mq(a, b) + mq(b, a)), rscale,
                       "Re(Q'(A,B) + Q'(B,A)) vanishes for real F");
      const auto rr = real_reference(fr);
      realdeg.zero(detail::from_real<S>(rr.lplus_r - pr.scalars.lplus), rscale,
                   "classical L+ agrees");
      realdeg.zero(detail::from_real<S>(rr.lminus_r - pr.scalars.lminus), rscale,
                   "classical L- agrees");
      realdeg.zero(rr.stress - pr.v2.t2.tensor, rscale, "classical stress tensor equals T2");
    } catch (const std::exception& e) {
      pipeline.require(false, e.what());
    }
  }

  // Functional probe: classify each family's response to the duality swap.
  Check<S> api("duality eigenvalues via functional probes", tol);
  const int api_trials = std::max(1, std::min(cfg.trials, 6));
  static const char* family_names[12] = {"Tprime", "Qprime", "Dprime", "Xprime", "T2", "Q2",
                                         "D2irr",  "X2irr",  "D4irr",  "X4irr",  "Lplus", "Lminus"};
  static const int family_expected[12] = {+1, +1, -1, -1, +1, +1, -1, -1, -1, -1, -1, -1};
  for (int k = 0; k < 12; ++k) {
    std::function<std::vector<S>(const Bivector<S>&)> fn =
        [eps, k](const Bivector<S>& f) -> std::vector<S> {
      const auto c = compute_all(f, eps);
      std::vector<S> v;
      auto grab4 = [&](const Tensor<S, 4>& t) { v.assign(t.data().begin(), t.data().end()); };
      auto grab2 = [&](const Tensor<S, 2>& t) { v.assign(t.data().begin(), t.data().end()); };
      switch (k) {
        case 0: grab4(c.tprime.tensor); break;
        case 1: grab4(c.qprime.tensor); break;
        case 2: grab4(c.dprime.tensor); break;
        case 3: grab4(c.xprime.tensor); break;
        case 4: grab2(c.t2.tensor); break;
        case 5: grab2(c.q2.tensor); break;
        case 6: grab2(c.d2irr.tensor); break;
        case 7: grab2(c.x2irr.tensor); break;
        case 8: grab4(c.d4irr.tensor); break;
        case 9: grab4(c.x4irr.tensor); break;
        case 10: v.push_back(detail::from_real<S>(c.scalars.lplus)); break;
        default: v.push_back(detail::from_real<S>(c.scalars.lminus)); break;
      }
      return v;
    };
    const DualitySign got =
        duality_eigenvalue<S>(fn, api_trials, cfg.seed * 1000003 + static_cast<std::uint64_t>(k),
                              cfg.tolerance);
    rep.duality_signs[family_names[k]] =
        got == DualitySign::plus ? +1 : (got == DualitySign::minus ? -1 : 0);
    api.require(got == (family_expected[k] > 0 ? DualitySign::plus : DualitySign::minus),
                family_names[k]);
  }

  const int n = cfg.trials;
  rep.results.push_back(pipeline.result(n));
  rep.results.push_back(raw_sym.result(n));
  rep.results.push_back(routes.result(n));
  rep.results.push_back(combos.result(n));
  rep.results.push_back(sixtor_rt.result(n));
  rep.results.push_back(dual_lock.result(n));
  rep.results.push_back(projectors.result(n));
  rep.results.push_back(v2sym.result(n));
  rep.results.push_back(v2trace.result(n));
  rep.results.push_back(v2decomp.result(n));
  rep.results.push_back(v2dual.result(n));
  rep.results.push_back(slots.result(n));
  rep.results.push_back(irred.result(n));
  rep.results.push_back(rawred.result(n));
  rep.results.push_back(v4dual.result(n));
  rep.results.push_back(signs.result(n));
  rep.results.push_back(phases.result(n));
  rep.results.push_back(recon.result(n));
  rep.results.push_back(oracle.result(n));
  rep.results.push_back(realdeg.result(n));
  rep.results.push_back(api.result(api_trials));
}

PropertyResult lorentz_property(const SuiteConfig& cfg) {
  Check<Complex> chk("Lorentz covariance", 1e-9);
  std::mt19937_64 rng(cfg.seed + 77);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int eps = cfg.epsilon_upper_0123;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const auto f = random_bivector<Complex>(rng);
    Eigen::Vector3d dir(uni(rng), uni(rng), uni(rng));
    if (dir.norm() < 1e-3) dir = Eigen::Vector3d::UnitX();
    const double speed = 0.45 * (uni(rng) + 1.0);  // uniform in [0, 0.9]
    const auto boost = make_boost(dir.normalized() * speed);
    Eigen::Vector3d axis(uni(rng), uni(rng), uni(rng));
    if (axis.norm() < 1e-3) axis = Eigen::Vector3d::UnitZ();
    const auto rot = make_rotation(axis, 3.141592653589793 * uni(rng));
    LorentzTransform composite;
    composite.lambda = rot.lambda * boost.lambda;
    const auto cf = compute_all(f, eps);
    for (const auto& lt : {boost, rot, composite}) {
      const auto g = lorentz_transform(f, lt);
      const auto cg = compute_all(g, eps);
      chk.zero(Complex(cg.scalars.lplus - cf.scalars.lplus, 0.0),
               std::max(1.0, std::abs(cf.scalars.lplus)), "L+ invariance");
      chk.zero(Complex(cg.scalars.lminus - cf.scalars.lminus, 0.0),
               std::max(1.0, std::abs(cf.scalars.lminus)), "L- invariance");
      auto cov2 = [&](const Tensor<Complex, 2>& before, const Tensor<Complex, 2>& after,
                      const char* what) {
        const auto want = lorentz_transform(before, lt);
        chk.zero(after - want, std::max(1.0, max_abs(want)), what);
      };
      auto cov4 = [&](const Tensor<Complex, 4>& before, const Tensor<Complex, 4>& after,
                      const char* what) {
        const auto want = lorentz_transform(before, lt);
        chk.zero(after - want, std::max(1.0, max_abs(want)), what);
      };
      cov2(cf.t2.tensor, cg.t2.tensor, "T2 covariance");
      cov2(cf.q2.tensor, cg.q2.tensor, "Q2 covariance");
      cov2(cf.d2irr.tensor, cg.d2irr.tensor, "D2 covariance");
      cov2(cf.x2irr.tensor, cg.x2irr.tensor, "X2 covariance");
      cov4(cf.tprime.tensor, cg.tprime.tensor, "T' covariance");
      cov4(cf.d4irr.tensor, cg.d4irr.tensor, "D4 covariance");
      cov4(cf.x4irr.tensor, cg.x4irr.tensor, "X4 covariance");
    }
  }
  return chk.result(cfg.trials * 3);
}

PropertyResult forms_property(const FormExtractionCache<GaussianRational>& cache,
                              const std::vector<ComponentForm<GaussianRational>>& forms,
                              const SuiteConfig& cfg) {
  using S = GaussianRational;
  Check<S> chk("hermitian form extraction", cfg.tolerance);
  chk.require(forms.size() == 578, "2 + 4*16 + 2*256 component forms");
  const S half = scalar_traits<S>::ratio(1, 2);
  for (const auto& form : forms) {
    if (form.family == FormFamily::T2 && form.component == 0) {
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
          chk.zero(form.matrix(a, b) - (a == b ? half : S{}), 1.0, "H(T00) = I/2");
    }
    if (form.family == FormFamily::Lplus) {
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
          const S want = (a == b) ? (a < 3 ? half : -half) : S{};
          chk.zero(form.matrix(a, b) - want, 1.0, "H(L+) = diag(1,1,1,-1,-1,-1)/2");
        }
    }
  }
  std::function<S(const Bivector<S>&)> t00 = [](const Bivector<S>& f) {
    return valence2_set(f).t2.tensor(0, 0);
  };
  const auto h = hermitian_form_matrix<S>(t00, "T00");
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      chk.zero(h.H(a, b) - (a == b ? half : S{}), 1.0, "black-box H(T00) = I/2");
  std::function<S(const Bivector<S>&)> offdiag = [](const Bivector<S>& f) {
    return sixtor_matrix(valence4_set(f).tprime.tensor)(0, 1);
  };
  bool threw = false;
  try {
    hermitian_form_matrix<S>(offdiag, "T'^{01}");
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  chk.require(threw, "complex-valued component must be rejected as non-hermitian");
  (void)cache;
  return chk.result(0);
}

PropertyResult ranks_property(const std::vector<ComponentForm<GaussianRational>>& forms,
                              const SuiteConfig& cfg, PropertyReport& rep) {
  using S = GaussianRational;
  Check<S> chk("completeness and component counts", cfg.tolerance);
  for (FormFamily fam : all_form_families()) {
    const int n = independent_component_count(forms, fam);
    rep.component_counts[to_string(fam)] = n;
    chk.require(n == expected_component_count(fam), "family component count");
  }
  auto family_forms = [&](FormFamily fam) {
    std::vector<ComponentForm<S>> out;
    for (const auto& f : forms)
      if (f.family == fam) out.push_back(f);
    return out;
  };
  const auto base_lp = family_forms(FormFamily::Lplus);
  const auto base_lm = family_forms(FormFamily::Lminus);
  const auto base_t2 = family_forms(FormFamily::T2);
  const auto base_q2 = family_forms(FormFamily::Q2);
  const FormFamily choice2[2] = {FormFamily::D2irr, FormFamily::X2irr};
  const FormFamily choice4[2] = {FormFamily::D4irr, FormFamily::X4irr};
  int slot = 0;
  std::vector<ComponentForm<S>> canonical_union;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      std::vector<ComponentForm<S>> u;
      for (const auto* part : {&base_lp, &base_lm, &base_t2, &base_q2})
        u.insert(u.end(), part->begin(), part->end());
      const auto c2 = family_forms(choice2[a]);
      const auto c4 = family_forms(choice4[b]);
      u.insert(u.end(), c2.begin(), c2.end());
      u.insert(u.end(), c4.begin(), c4.end());
      const int r = completeness_rank(u, Restriction::full);
      rep.union_rank_choices[static_cast<std::size_t>(slot++)] = r;
      chk.require(r == 36, "union spans all hermitian forms");
      if (a == 0 && b == 0) canonical_union = std::move(u);
    }
  rep.union_rank = rep.union_rank_choices[0];
  rep.real_restriction_rank = completeness_rank(canonical_union, Restriction::real_bivectors);
  chk.require(rep.real_restriction_rank == 21, "real restriction spans the symmetric forms");
  int sum = 0;
  for (const auto& [name, n] : rep.component_counts) sum += n;
  chk.require(sum - expected_component_count(FormFamily::Q2) -
                      expected_component_count(FormFamily::X2irr) -
                      expected_component_count(FormFamily::X4irr) ==
                  36 - expected_component_count(FormFamily::Q2),
              "counts of one choice sum to 36");
  std::ostringstream os;
  os << "counts";
  for (FormFamily fam : all_form_families()) os << ' ' << to_string(fam) << '='
                                                << rep.component_counts[to_string(fam)];
  os << "; union " << rep.union_rank_choices[0] << '/' << rep.union_rank_choices[1] << '/'
     << rep.union_rank_choices[2] << '/' << rep.union_rank_choices[3] << "; real "
     << rep.real_restriction_rank;
  if (cfg.backend == "float") {
    const auto fcache = make_form_cache<Complex>(cfg.epsilon_upper_0123);
    const auto fforms = all_component_forms(fcache, 1e-9);
    bool agree = completeness_rank(fforms, Restriction::full) ==
                 completeness_rank(forms, Restriction::full);
    for (FormFamily fam : all_form_families())
      agree = agree && independent_component_count(fforms, fam) ==
                           rep.component_counts[to_string(fam)];
    chk.require(agree, "float LU ranks agree with the exact ranks");
    os << "; float LU cross-check agrees";
  }
  chk.set_detail(os.str());
  return chk.result(0);
}

PropertyResult raw_ranks_property(const FormExtractionCache<GaussianRational>& cache,
                                  const SuiteConfig& cfg, PropertyReport& rep) {
  using S = GaussianRational;
  Check<S> chk("raw form rank over the complex rationals", cfg.tolerance);
  std::ostringstream os;
  for (Valence4Tag tag :
       {Valence4Tag::Tprime, Valence4Tag::Qprime, Valence4Tag::Dprime, Valence4Tag::Xprime}) {
    const auto matrices = raw_form_matrices(cache, tag, cfg.tolerance);
    const int r = raw_complex_rank(matrices);
    rep.raw_complex_ranks[to_string(tag)] = r;
    chk.require(r == 18, "raw family has 18 independent complex forms");
    os << to_string(tag) << '=' << r << ' ';
  }
  chk.set_detail(os.str());
  return chk.result(0);
}

PropertyResult signal_property(const SuiteConfig& cfg) {
  Check<Complex> chk("analytic signal pipeline", 1e-9);
  (void)cfg;
  chk.require(component_registry().size() == 34, "registry has 34 component names");

  PlaneWaveParams left;
  left.amplitude = 1.0;
  left.frequency = 8.0;
  left.sample_rate = 256.0;
  left.n = 256;
  left.axis = 2;
  left.polarization = Polarization::circular_left;
  const auto sleft = synth_plane_wave(left);
  const auto aleft = analytic_signal(sleft);
  const auto series =
      concomitant_series(aleft, {"T00", "Q30", "Lplus", "Lminus"});
  const double omega = 2.0 * 3.14159265358979323846 * left.frequency;
  for (std::size_t k = 0; k < series.t.size(); ++k) {
    chk.zero(Complex(series.columns[0][k] - 2.0, 0.0), 4.0, "circular T00 = 2a^2");
    chk.zero(Complex(series.columns[1][k] - 2.0, 0.0), 4.0, "left-handed Q30 = +2a^2");
    chk.zero(Complex(series.columns[2][k], 0.0), 4.0, "circular L+ = 0");
    chk.zero(Complex(series.columns[3][k], 0.0), 4.0, "circular L- = 0");
    const Complex expected = std::exp(Complex(0.0, omega * series.t[k]));
    chk.zero(aleft.bivectors[k].E(0) - expected, 1.0, "cos becomes exp(i w t)");
    chk.zero(aleft.bivectors[k].E(1) - Complex(0.0, -1.0) * expected, 1.0,
             "sin becomes -i exp(i w t)");
  }

  PlaneWaveParams right = left;
  right.polarization = Polarization::circular_right;
  const auto sright = synth_plane_wave(right);
  const auto aright = analytic_signal(sright);
  const auto rseries = concomitant_series(aright, {"Q30"});
  for (std::size_t k = 0; k < rseries.t.size(); ++k)
    chk.zero(Complex(rseries.columns[0][k] + 2.0, 0.0), 4.0, "right-handed Q30 = -2a^2");

  PlaneWaveParams shifted = left;
  shifted.phase = 0.7;
  const auto ashift = analytic_signal(synth_plane_wave(shifted));
  const auto shift_series = concomitant_series(ashift, {"T00", "Q30"});
  for (std::size_t k = 0; k < shift_series.t.size(); ++k) {
    chk.zero(Complex(shift_series.columns[0][k] - 2.0, 0.0), 4.0, "T00 ignores a carrier phase");
    chk.zero(Complex(shift_series.columns[1][k] - 2.0, 0.0), 4.0, "Q30 ignores a carrier phase");
  }

  PlaneWaveParams lin = left;
  lin.polarization = Polarization::linear;
  lin.frequency = 16.0;
  lin.phase = 0.4;
  const auto slin = synth_plane_wave(lin);
  const auto alin = analytic_signal(slin);
  const auto lseries = concomitant_series(alin, {"T00"});
  for (std::size_t k = 0; k < lseries.t.size(); ++k)
    chk.require(lseries.columns[0][k] >= -1e-12, "T00 stays nonnegative");

  FieldSampleSeries sum = sleft;
  for (std::size_t k = 0; k < sum.t.size(); ++k) {
    sum.e_samples[k] += slin.e_samples[k];
    sum.b_samples[k] += slin.b_samples[k];
  }
  const auto asum = analytic_signal(sum);
  for (std::size_t k = 0; k < asum.t.size(); ++k)
    chk.zero(asum.bivectors[k] - (aleft.bivectors[k] + alin.bivectors[k]), 2.0,
             "analytic signal is linear");

  FieldSampleSeries dc;
  for (int k = 0; k < 8; ++k) {
    dc.t.push_back(k / 8.0);
    dc.e_samples.push_back(Eigen::Vector3d(1.0, 0.0, 0.0));
    dc.b_samples.push_back(Eigen::Vector3d::Zero());
  }
  const auto adc = analytic_signal(dc);
  for (const auto& f : adc.bivectors) {
    chk.zero(f.E(0) - Complex(1.0, 0.0), 1.0, "constant input passes through untouched");
    chk.zero(f.B(0), 1.0, "zero channel stays zero");
  }

  auto expect_throw = [&](const char* what, auto&& fn) {
    bool threw = false;
    try {
      fn();
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    chk.require(threw, what);
  };
  expect_throw("frequency at or above Nyquist is rejected", [&] {
    PlaneWaveParams bad = left;
    bad.frequency = bad.sample_rate / 2.0;
    synth_plane_wave(bad);
  });
  expect_throw("non-uniform sampling is rejected", [&] {
    FieldSampleSeries bad = sleft;
    bad.t[10] += 1e-3;
    analytic_signal(bad);
  });
  expect_throw("short series are rejected", [&] {
    FieldSampleSeries bad;
    bad.t = {0.0, 1.0, 2.0};
    bad.e_samples.assign(3, Eigen::Vector3d::Zero());
    bad.b_samples.assign(3, Eigen::Vector3d::Zero());
    analytic_signal(bad);
  });
  expect_throw("unknown component names are rejected",
               [&] { concomitant_series(aleft, {"T44"}); });
  expect_throw("misspelled scalar names are rejected",
               [&] { concomitant_series(aleft, {"Lzero"}); });
  return chk.result(0);
}

template <class Fn>
void guarded(PropertyReport& rep, const char* name, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    PropertyResult r;
    r.name = name;
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
    rep.results.push_back(std::move(r));
  }
}

}  // namespace

PropertyReport run_suite(const SuiteConfig& config) {
  if (config.backend != "rational" && config.backend != "float")
    throw std::invalid_argument("backend must be 'rational' or 'float'");
  if (config.trials < 0) throw std::invalid_argument("trials must be nonnegative");
  if (!(config.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (config.epsilon_upper_0123 != -1 && config.epsilon_upper_0123 != 1)
    throw std::invalid_argument("epsilon_upper_0123 must be -1 or +1");

  PropertyReport rep;
  rep.config = config;

  guarded(rep, "kernel identities", [&] { rep.results.push_back(kernel_property(config)); });

  if (config.trials > 0) {
    guarded(rep, "randomized properties", [&] {
      if (config.backend == "rational")
        run_trial_properties<GaussianRational>(config, rep);
      else
        run_trial_properties<Complex>(config, rep);
    });
    guarded(rep, "Lorentz covariance",
            [&] { rep.results.push_back(lorentz_property(config)); });
  }

  guarded(rep, "hermitian form extraction", [&] {
    const auto cache = make_form_cache<GaussianRational>(config.epsilon_upper_0123);
    const auto forms = all_component_forms(cache, config.tolerance);
    rep.results.push_back(forms_property(cache, forms, config));
    rep.results.push_back(ranks_property(forms, config, rep));
    rep.results.push_back(raw_ranks_property(cache, config, rep));
  });

  guarded(rep, "analytic signal pipeline",
          [&] { rep.results.push_back(signal_property(config)); });

  rep.count_definition =
      "a family's component count is the rank over the rationals of the span of its 6x6 "
      "hermitian form matrices, viewed as vectors of R^36 (the real restriction uses the "
      "symmetrized real parts in R^21)";
  rep.duality_note =
      "under E -> -B, B -> E: T', Q', T2, Q2 are invariant while D', X', D2, X2, D4, X4, "
      "L+, L- change sign; the leading-pair dual maps D4 to +X4 and X4 to -D4";

  rep.all_passed = true;
  rep.worst_residual = 0.0;
  for (const auto& r : rep.results) {
    rep.all_passed = rep.all_passed && r.passed;
    rep.worst_residual = std::max(rep.worst_residual, r.worst_residual);
  }
  return rep;
}

}  // namespace concom
