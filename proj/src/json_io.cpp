#include "concom/json_io.hpp"

#include <stdexcept>
#include <utility>

namespace concom {

namespace {

Json part_to_json(const Rational& r) { return Json(r.str()); }
Json part_to_json(double d) { return Json(d); }

template <class S>
Json scalar_to_json(const S& v) {
  using traits = scalar_traits<S>;
  return Json::array({part_to_json(traits::real_part(v)), part_to_json(traits::imag_part(v))});
}

template <class S>
Json tensor_to_json(const Tensor<S, 2>& t) {
  Json rows = Json::array();
  for (int a = 0; a < 4; ++a) {
    Json row = Json::array();
    for (int b = 0; b < 4; ++b) row.push_back(scalar_to_json(t(a, b)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class S>
Json tensor_to_json(const Tensor<S, 4>& t) {
  Json out = Json::array();
  for (int a = 0; a < 4; ++a) {
    Json la = Json::array();
    for (int b = 0; b < 4; ++b) {
      Json lb = Json::array();
      for (int c = 0; c < 4; ++c) {
        Json lc = Json::array();
        for (int d = 0; d < 4; ++d) lc.push_back(scalar_to_json(t(a, b, c, d)));
        lb.push_back(std::move(lc));
      }
      la.push_back(std::move(lb));
    }
    out.push_back(std::move(la));
  }
  return out;
}

template <class R>
R part_from_json(const Json& j);

template <>
Rational part_from_json<Rational>(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument(
      "the rational backend needs integers or \"p/q\" strings, got: " + j.dump());
}

template <>
double part_from_json<double>(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return static_cast<double>(parse_rational(j.get<std::string>()));
  throw std::invalid_argument("expected a number, got: " + j.dump());
}

template <class S>
S scalar_from_json(const Json& j) {
  using traits = scalar_traits<S>;
  using R = typename traits::real_type;
  if (j.is_array()) {
    if (j.size() != 2)
      throw std::invalid_argument("a complex entry is [re, im], got: " + j.dump());
    return traits::make(part_from_json<R>(j[0]), part_from_json<R>(j[1]));
  }
  return traits::make(part_from_json<R>(j), R{});
}

template <class S>
Vec3<S> vec3_from_json(const Json& j, const char* name) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument(std::string(name) + " must be an array of 3 entries");
  Vec3<S> v;
  for (int k = 0; k < 3; ++k) v(k) = scalar_from_json<S>(j[static_cast<std::size_t>(k)]);
  return v;
}

}  // namespace

template <class S>
Bivector<S> bivector_from_json(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("bivector document must be a JSON object");
  if (doc.contains("matrix")) {
    const Json& m = doc["matrix"];
    if (!m.is_array() || m.size() != 4)
      throw std::invalid_argument("matrix must be a 4x4 array");
    Tensor<S, 2> t({Variance::upper, Variance::upper});
    for (int a = 0; a < 4; ++a) {
      const Json& row = m[static_cast<std::size_t>(a)];
      if (!row.is_array() || row.size() != 4)
        throw std::invalid_argument("matrix must be a 4x4 array");
      for (int b = 0; b < 4; ++b) t(a, b) = scalar_from_json<S>(row[static_cast<std::size_t>(b)]);
    }
    return from_matrix(t);
  }
  if (!doc.contains("E") || !doc.contains("B"))
    throw std::invalid_argument("bivector document needs E and B (or a matrix)");
  Bivector<S> f;
  f.E = vec3_from_json<S>(doc["E"], "E");
  f.B = vec3_from_json<S>(doc["B"], "B");
  return f;
}

std::optional<std::string> backend_hint_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("backend")) return std::nullopt;
  const Json& b = doc["backend"];
  if (!b.is_string()) throw std::invalid_argument("backend must be a string");
  return b.get<std::string>();
}

template <class S>
Json concomitant_document(const ConcomitantSet<S>& set,
                          const std::vector<std::string>& selection) {
  static const std::vector<std::string> all = {"Lplus",  "Lminus", "T2",     "Q2",
                                               "D2irr",  "X2irr",  "Tprime", "Qprime",
                                               "Dprime", "Xprime", "D4irr",  "X4irr"};
  const std::vector<std::string>& names = selection.empty() ? all : selection;
  Json doc = Json::object();
  doc["schema"] = "concomitants/1";
  Json conv = Json::object();
  conv["signature"] = set.convention.signature;
  conv["epsilon_upper_0123"] = set.convention.epsilon_upper_0123;
  conv["backend"] = set.convention.backend;
  doc["convention"] = std::move(conv);
  for (const auto& name : names) {
    if (name == "Lplus")
      doc["Lplus"] = part_to_json(set.scalars.lplus);
    else if (name == "Lminus")
      doc["Lminus"] = part_to_json(set.scalars.lminus);
    else if (name == "T2")
      doc["T2"] = tensor_to_json(set.t2.tensor);
    else if (name == "Q2")
      doc["Q2"] = tensor_to_json(set.q2.tensor);
    else if (name == "D2irr")
      doc["D2irr"] = tensor_to_json(set.d2irr.tensor);
    else if (name == "X2irr")
      doc["X2irr"] = tensor_to_json(set.x2irr.tensor);
    else if (name == "Tprime")
      doc["Tprime"] = tensor_to_json(set.tprime.tensor);
    else if (name == "Qprime")
      doc["Qprime"] = tensor_to_json(set.qprime.tensor);
    else if (name == "Dprime")
      doc["Dprime"] = tensor_to_json(set.dprime.tensor);
    else if (name == "Xprime")
      doc["Xprime"] = tensor_to_json(set.xprime.tensor);
    else if (name == "D4irr")
      doc["D4irr"] = tensor_to_json(set.d4irr.tensor);
    else if (name == "X4irr")
      doc["X4irr"] = tensor_to_json(set.x4irr.tensor);
    else
      throw std::invalid_argument("unknown concomitant name: " + name);
  }
  return doc;
}

Json report_to_json(const PropertyReport& report) {
  Json doc = Json::object();
  doc["schema"] = "property-report/1";
  Json cfg = Json::object();
  cfg["seed"] = report.config.seed;
  cfg["trials"] = report.config.trials;
  cfg["backend"] = report.config.backend;
  cfg["tolerance"] = report.config.tolerance;
  cfg["epsilon_upper_0123"] = report.config.epsilon_upper_0123;
  doc["config"] = std::move(cfg);
  doc["all_passed"] = report.all_passed;
  doc["worst_residual"] = report.worst_residual;
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json row = Json::object();
    row["name"] = r.name;
    row["passed"] = r.passed;
    row["trials"] = r.trials;
    row["worst_residual"] = r.worst_residual;
    row["detail"] = r.detail;
    results.push_back(std::move(row));
  }
  doc["results"] = std::move(results);
  Json signs = Json::object();
  for (const auto& [name, sign] : report.duality_signs) signs[name] = sign;
  doc["duality_signs"] = std::move(signs);
  Json counts = Json::object();
  for (const auto& [name, count] : report.component_counts) counts[name] = count;
  doc["component_counts"] = std::move(counts);
  doc["union_rank"] = report.union_rank;
  doc["union_rank_choices"] = Json::array({report.union_rank_choices[0],
                                           report.union_rank_choices[1],
                                           report.union_rank_choices[2],
                                           report.union_rank_choices[3]});
  doc["real_restriction_rank"] = report.real_restriction_rank;
  Json raws = Json::object();
  for (const auto& [name, rank] : report.raw_complex_ranks) raws[name] = rank;
  doc["raw_complex_ranks"] = std::move(raws);
  doc["count_definition"] = report.count_definition;
  doc["duality_note"] = report.duality_note;
  return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

template Bivector<Complex> bivector_from_json<Complex>(const Json&);
template Bivector<GaussianRational> bivector_from_json<GaussianRational>(const Json&);
template Json concomitant_document<Complex>(const ConcomitantSet<Complex>&,
                                            const std::vector<std::string>&);
template Json concomitant_document<GaussianRational>(const ConcomitantSet<GaussianRational>&,
                                                     const std::vector<std::string>&);

}  // namespace concom
