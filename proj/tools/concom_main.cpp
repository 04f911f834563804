#include "concom/json_io.hpp"
#include "concom/signal.hpp"
#include "concom/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace concom;

// Temp file + rename so readers never observe a half-written document.
void write_atomic(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move " + tmp + " to " + path);
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::string env_backend() {
  const char* env = std::getenv("CONCOM_BACKEND");
  return env ? std::string(env) : std::string();
}

int cmd_compute(const std::string& input, bool exact, const std::vector<std::string>& select,
                const std::string& output) {
  Json doc;
  std::string backend;
  try {
    doc = Json::parse(read_input(input));
    const auto hint = backend_hint_from_json(doc);
    if (exact)
      backend = "rational";
    else if (hint)
      backend = *hint;
    else if (!env_backend().empty())
      backend = env_backend();
    else
      backend = "float";
    if (backend != "rational" && backend != "float") {
      std::cerr << "error: unknown backend '" << backend << "'\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::string rendered;
  try {
    if (backend == "rational") {
      const auto f = bivector_from_json<GaussianRational>(doc);
      rendered = dump_document(concomitant_document(compute_all(f), select));
    } else {
      const auto f = bivector_from_json<Complex>(doc);
      rendered = dump_document(concomitant_document(compute_all(f), select));
    }
  } catch (const antisymmetry_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  write_atomic(output, rendered);
  return 0;
}

int cmd_verify(const SuiteConfig& cfg, const std::string& report_path) {
  PropertyReport rep;
  try {
    rep = run_suite(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  for (const auto& r : rep.results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
    if (r.trials > 0) std::cout << "  (trials " << r.trials << ")";
    if (r.worst_residual > 0.0) std::cout << "  worst " << r.worst_residual;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
  }
  std::cout << "component counts:";
  for (const auto& [name, count] : rep.component_counts) std::cout << ' ' << name << '=' << count;
  std::cout << "\nunion rank " << rep.union_rank << " (choices";
  for (int r : rep.union_rank_choices) std::cout << ' ' << r;
  std::cout << "), real restriction " << rep.real_restriction_rank << "\n";
  std::cout << (rep.all_passed ? "all properties passed" : "SUITE FAILED") << "\n";
  if (!report_path.empty()) write_atomic(report_path, dump_document(report_to_json(rep)));
  return rep.all_passed ? 0 : 1;
}

int cmd_signal(const std::string& input, bool no_hilbert, std::vector<std::string> select,
               bool select_given, const std::string& output) {
  AnalyticBivectorSeries series;
  try {
    const std::string text = read_input(input);
    std::istringstream in(text);
    if (no_hilbert)
      series = read_complex_csv(in);
    else
      series = analytic_signal(read_field_csv(in));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!select_given) select = component_registry();
  select.erase(std::remove(select.begin(), select.end(), std::string()), select.end());
  if (select.empty()) {
    std::cerr << "error: empty component selection\n";
    return 4;
  }
  std::ostringstream rendered;
  try {
    write_series_csv(rendered, concomitant_series(series, select));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  write_atomic(output, rendered.str());
  return 0;
}

int cmd_table() {
  const auto cache = make_form_cache<GaussianRational>(-1);
  const auto forms = all_component_forms(cache);
  std::cout << "family   expected  measured\n";
  bool ok = true;
  int expected_total = 0;
  int measured_total = 0;
  for (FormFamily fam : {FormFamily::Lplus, FormFamily::Lminus, FormFamily::T2, FormFamily::Q2,
                         FormFamily::D2irr, FormFamily::D4irr}) {
    const int expected = expected_component_count(fam);
    const int measured = independent_component_count(forms, fam);
    expected_total += expected;
    measured_total += measured;
    ok = ok && expected == measured;
    std::printf("%-8s %8d  %8d\n", to_string(fam), expected, measured);
  }
  std::printf("%-8s %8d  %8d\n", "total", expected_total, measured_total);
  std::vector<ComponentForm<GaussianRational>> unioned;
  for (FormFamily fam : {FormFamily::Lplus, FormFamily::Lminus, FormFamily::T2, FormFamily::Q2,
                         FormFamily::D2irr, FormFamily::D4irr})
    for (const auto& f : forms)
      if (f.family == fam) unioned.push_back(f);
  const int union_rank = completeness_rank(unioned, Restriction::full);
  const int real_rank = completeness_rank(unioned, Restriction::real_bivectors);
  std::cout << "union rank " << union_rank << " of 36, real restriction " << real_rank
            << " of 21\n";
  ok = ok && union_rank == 36 && real_rank == 21;
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hermitian-form concomitants of a complex bivector in Minkowski spacetime"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute all concomitants of one bivector");
  std::string compute_input;
  std::string compute_output;
  std::vector<std::string> compute_select;
  bool compute_exact = false;
  compute->add_option("input", compute_input, "bivector JSON document ('-' for stdin)")
      ->required();
  compute->add_flag("--exact", compute_exact, "use the exact rational backend");
  compute->add_option("--select", compute_select, "comma-separated concomitant names")
      ->delimiter(',');
  compute->add_option("--output", compute_output, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the property suite");
  SuiteConfig cfg;
  cfg.backend.clear();
  std::string report_path;
  bool flip_epsilon = false;
  verify->add_option("--trials", cfg.trials, "random trials per property");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--backend", cfg.backend, "rational or float");
  verify->add_option("--tolerance", cfg.tolerance, "float-backend tolerance");
  verify->add_option("--report", report_path, "write the report JSON here");
  verify->add_flag("--flip-epsilon", flip_epsilon)->group("");

  auto* signal = app.add_subcommand("signal", "turn a sampled field CSV into concomitant series");
  std::string signal_input;
  std::string signal_output;
  std::vector<std::string> signal_select;
  bool no_hilbert = false;
  signal->add_option("input", signal_input, "field CSV ('-' for stdin)")->required();
  signal->add_flag("--no-hilbert", no_hilbert,
                   "input is already complex (12 value columns), skip the analytic signal");
  signal->add_option("--select", signal_select, "comma-separated component names")
      ->delimiter(',');
  signal->add_option("--output", signal_output, "output path (default stdout)");

  auto* table = app.add_subcommand("table", "print expected vs measured component counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed())
      return cmd_compute(compute_input, compute_exact, compute_select, compute_output);
    if (verify->parsed()) {
      if (cfg.backend.empty()) cfg.backend = env_backend();
      if (cfg.backend.empty()) cfg.backend = "rational";
      if (flip_epsilon) cfg.epsilon_upper_0123 = 1;
      return cmd_verify(cfg, report_path);
    }
    if (signal->parsed())
      return cmd_signal(signal_input, no_hilbert, signal_select,
                        signal->count("--select") > 0, signal_output);
    if (table->parsed()) return cmd_table();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
