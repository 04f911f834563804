#include "concom/verify.hpp"

#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

using namespace concom;
using GR = GaussianRational;

namespace {

GR half() { return scalar_traits<GR>::ratio(1, 2); }

// Built once per binary: 74 exact pipeline evaluations feed every extraction below.
const FormExtractionCache<GR>& cache() {
  static const auto c = make_form_cache<GR>();
  return c;
}

std::vector<GR> tensor_components(const Tensor<GR, 2>& t) {
  return std::vector<GR>(t.data().begin(), t.data().end());
}

}  // namespace

TEST_CASE("T00 is the hermitian form (1/2) I on sixtor space") {
  std::function<GR(const Bivector<GR>&)> t00 = [](const Bivector<GR>& f) {
    return valence2_set(f).t2.tensor(0, 0);
  };
  const auto got = hermitian_form_matrix(t00, "T00");
  CHECK(got.label == "T00");
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(got.H(a, b) == (a == b ? half() : GR(0)));
}

TEST_CASE("L+ is the hermitian form (1/2) diag(1,1,1,-1,-1,-1)") {
  std::function<GR(const Bivector<GR>&)> lp = [](const Bivector<GR>& f) {
    return GR(scalar_invariants(f).lplus);
  };
  const auto got = hermitian_form_matrix(lp);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const GR want = (a != b) ? GR(0) : (a < 3 ? half() : -half());
      CHECK(got.H(a, b) == want);
    }
}

TEST_CASE("non-hermitian and non-quadratic functionals are rejected") {
  // An off-diagonal T' sixtor entry is sesquilinear but not hermitian.
  std::function<GR(const Bivector<GR>&)> offdiag = [](const Bivector<GR>& f) {
    return sixtor_matrix(valence4_set(f).tprime)(0, 1);
  };
  CHECK_THROWS_AS(hermitian_form_matrix(offdiag), std::invalid_argument);

  // A linear functional fails the reconstruction validation.
  std::function<GR(const Bivector<GR>&)> linear = [](const Bivector<GR>& f) { return f.E(0); };
  CHECK_THROWS_AS(hermitian_form_matrix(linear), std::invalid_argument);
}

TEST_CASE("RowBasis tracks rank over an exact field") {
  RowBasis<Rational> basis(3);
  CHECK(basis.append({Rational(1), Rational(2), Rational(3)}));
  CHECK_FALSE(basis.append({Rational(2), Rational(4), Rational(6)}));
  CHECK(basis.rank() == 1);
  CHECK(basis.append({Rational(0), Rational(1), Rational(1)}));
  CHECK(basis.rank() == 2);
  CHECK_FALSE(basis.append({Rational(1), Rational(0), Rational(1)}));
  CHECK(basis.append({Rational(0), Rational(0), Rational(5)}));
  CHECK(basis.rank() == 3);
  CHECK_THROWS_AS(basis.append({Rational(1)}), std::invalid_argument);
}

TEST_CASE("herm_to_r36 and sym_to_r21 flatten with the documented layout") {
  SixtorMatrix<GR> h;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) h(a, b) = (a == b) ? half() : GR(0);
  h(0, 1) = GR(Rational(2), Rational(3));
  h(1, 0) = GR(Rational(2), Rational(-3));
  const auto v36 = herm_to_r36(h);
  REQUIRE(v36.size() == 36);
  CHECK(v36[0] == Rational(1) / Rational(2));
  CHECK(v36[6] == Rational(2));   // re h(0,1)
  CHECK(v36[7] == Rational(3));   // im h(0,1)
  const auto v21 = sym_to_r21(h);
  REQUIRE(v21.size() == 21);
  CHECK(v21[0] == Rational(1) / Rational(2));
  CHECK(v21[1] == Rational(2));   // symmetrized re h(0,1)
}

TEST_CASE("component forms exist for all 578 components and span 36 dimensions") {
  const auto forms = all_component_forms(cache());
  REQUIRE(forms.size() == 578u);

  // Spot checks against the two closed-form matrices.
  for (const auto& cf : forms) {
    if (cf.family == FormFamily::T2 && cf.component == 0)
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(cf.matrix(a, b) == (a == b ? half() : GR(0)));
    if (cf.family == FormFamily::Lplus)
      for (int a = 0; a < 6; ++a) CHECK(cf.matrix(a, a) == (a < 3 ? half() : -half()));
  }

  CHECK(independent_component_count(forms, FormFamily::Lplus) == 1);
  CHECK(independent_component_count(forms, FormFamily::T2) == 9);
  CHECK(independent_component_count(forms, FormFamily::Q2) == 9);
  CHECK(independent_component_count(forms, FormFamily::D2irr) == 6);
  CHECK(independent_component_count(forms, FormFamily::X2irr) == 6);
  CHECK(independent_component_count(forms, FormFamily::D4irr) == 10);
  CHECK(independent_component_count(forms, FormFamily::X4irr) == 10);
  CHECK(completeness_rank(forms, Restriction::full) == 36);
  CHECK(completeness_rank(forms, Restriction::real_bivectors) == 21);

  for (FormFamily fam : all_form_families())
    CHECK(independent_component_count(forms, fam) == expected_component_count(fam));
}

TEST_CASE("raw valence-4 components span 18 dimensions over the complex rationals") {
  const auto mats = raw_form_matrices(cache(), Valence4Tag::Tprime);
  REQUIRE(mats.size() == 256u);
  CHECK(raw_complex_rank(mats) == 18);
}

TEST_CASE("irreducibility certificates separate raw from irreducible tensors") {
  const auto f = random_bivector<GR>(5);
  const auto all = compute_all(f);

  const auto raw = irreducibility_report(all.tprime.tensor);
  CHECK(raw.tensor_rank == 4);
  CHECK_FALSE(raw.certified);

  const auto d4 = irreducibility_report(all.d4irr.tensor);
  CHECK(d4.certified);
  for (double n : d4.pair_trace_norms) CHECK(n == 0.0);
  CHECK(d4.full_eps_norm == 0.0);
  for (double n : d4.triple_eps_norms) CHECK(n == 0.0);
  CHECK(irreducibility_report(all.x4irr.tensor).certified);

  const auto t2 = irreducibility_report(all.t2.tensor);
  CHECK(t2.tensor_rank == 2);
  CHECK(t2.certified);
  CHECK_FALSE(irreducibility_report(metric<GR>(Variance::upper)).certified);

  const auto mixed = adjust_index(all.t2.tensor, 0, Variance::lower);
  CHECK_THROWS_AS(irreducibility_report(mixed), std::invalid_argument);
}

TEST_CASE("duality_eigenvalue measures the swap parity of a functional") {
  std::function<std::vector<GR>(const Bivector<GR>&)> t2fn = [](const Bivector<GR>& f) {
    return tensor_components(valence2_set(f).t2.tensor);
  };
  std::function<std::vector<GR>(const Bivector<GR>&)> d2fn = [](const Bivector<GR>& f) {
    return tensor_components(irreducible_v2(f).first.tensor);
  };
  std::function<std::vector<GR>(const Bivector<GR>&)> zero = [](const Bivector<GR>&) {
    return std::vector<GR>{GR(0)};
  };
  CHECK(duality_eigenvalue(t2fn, 3, 11) == DualitySign::plus);
  CHECK(duality_eigenvalue(d2fn, 3, 11) == DualitySign::minus);
  CHECK(duality_eigenvalue(zero, 2, 11) == DualitySign::plus);
  CHECK_THROWS_AS(duality_eigenvalue(t2fn, 0, 11), std::invalid_argument);
  CHECK(std::string(to_string(DualitySign::minus)) == "-1");
  CHECK(std::string(to_string(DualitySign::mixed)) == "mixed");

  // A component mixing even and odd parts has no single parity.
  std::function<std::vector<GR>(const Bivector<GR>&)> blend = [](const Bivector<GR>& f) {
    const auto v2 = valence2_set(f);
    return std::vector<GR>{v2.t2.tensor(0, 0) + GR(scalar_invariants(v2).lplus)};
  };
  CHECK(duality_eigenvalue(blend, 3, 11) == DualitySign::mixed);
}

TEST_CASE("family metadata is consistent") {
  CHECK(all_form_families().size() == 8u);
  CHECK(component_count(FormFamily::Lplus) == 1);
  CHECK(component_count(FormFamily::T2) == 16);
  CHECK(component_count(FormFamily::D4irr) == 256);
  CHECK(std::string(to_string(FormFamily::X4irr)) == "X4irr");
}

TEST_CASE("run_suite validates its configuration") {
  SuiteConfig cfg;
  cfg.backend = "decimal";
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.backend = "rational";
  cfg.tolerance = 0.0;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.tolerance = 1e-12;
  cfg.trials = -1;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
  cfg.trials = 1;
  cfg.epsilon_upper_0123 = 2;
  CHECK_THROWS_AS(run_suite(cfg), std::invalid_argument);
}

TEST_CASE("run_suite passes and fills the report") {
  SuiteConfig cfg;
  cfg.trials = 2;
  cfg.seed = 42;
  const auto rep = run_suite(cfg);
  CHECK(rep.all_passed);
  CHECK(rep.results.size() > 20u);
  for (const auto& r : rep.results) CHECK(r.passed);
  CHECK(rep.duality_signs.at("T2") == 1);
  CHECK(rep.duality_signs.at("Qprime") == 1);
  CHECK(rep.duality_signs.at("D4irr") == -1);
  CHECK(rep.duality_signs.at("Lminus") == -1);
  CHECK(rep.component_counts.at("T2") == 9);
  CHECK(rep.component_counts.at("D2irr") == 6);
  CHECK(rep.component_counts.at("D4irr") == 10);
  CHECK(rep.union_rank == 36);
  for (int r : rep.union_rank_choices) CHECK(r == 36);
  CHECK(rep.real_restriction_rank == 21);
  CHECK(rep.raw_complex_ranks.at("Tprime") == 18);
  CHECK(rep.raw_complex_ranks.at("Xprime") == 18);
  CHECK_FALSE(rep.count_definition.empty());
  CHECK_FALSE(rep.duality_note.empty());
  // The Lorentz property always runs in floating point, so the worst residual
  // is small but not exactly zero even on the rational backend.
  CHECK(rep.worst_residual < 1e-9);
}

TEST_CASE("run_suite structural pass needs no random trials") {
  SuiteConfig cfg;
  cfg.trials = 0;
  const auto rep = run_suite(cfg);
  CHECK(rep.all_passed);
}

TEST_CASE("run_suite float backend stays within tolerance") {
  SuiteConfig cfg;
  cfg.trials = 2;
  cfg.backend = "float";
  const auto rep = run_suite(cfg);
  CHECK(rep.all_passed);
  CHECK(rep.worst_residual < 1e-9);
}

TEST_CASE("flipping the epsilon convention is caught") {
  SuiteConfig cfg;
  cfg.trials = 1;
  cfg.epsilon_upper_0123 = 1;
  const auto rep = run_suite(cfg);
  CHECK_FALSE(rep.all_passed);
  int failures = 0;
  for (const auto& r : rep.results)
    if (!r.passed) ++failures;
  CHECK(failures >= 3);
}
