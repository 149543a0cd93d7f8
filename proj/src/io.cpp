#include "qcx/io.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace qcx::io {

namespace {

std::vector<cplx> coeff_list(const json& j, std::string_view field) {
  if (!j.is_array())
    throw InputError("field '" + std::string(field) + "' must be an array");
  std::vector<cplx> out;
  out.reserve(j.size());
  for (std::size_t n = 0; n < j.size(); ++n)
    out.push_back(complex_from_json(j[n], std::string(field) + "[" + std::to_string(n) + "]"));
  return out;
}

json coeff_array(std::span<const cplx> c) {
  json arr = json::array();
  for (const cplx z : c)
    arr.push_back(complex_to_json(z));
  return arr;
}

double number_field(const json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end())
    throw InputError(std::string("missing field '") + field + "'");
  if (!it->is_number())
    throw InputError(std::string("field '") + field + "' must be a real number");
  return it->get<double>();
}

} // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j, std::string_view field) {
  if (j.is_number())
    return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw InputError("field '" + std::string(field) + "' must be [re, im] or a real number");
}

json to_json(const PoledFunction& f) {
  json j{{"p", f.pole()}, {"coeffs", coeff_array(f.coeffs())}, {"tail_bound", f.tail_bound()}};
  if (const auto& env = f.envelope())
    j["envelope"] = {{"scale", env->scale}, {"ratio", env->ratio}};
  return j;
}

json to_json(const FunctionFile& file) {
  json j = to_json(file.function);
  if (file.omega)
    j["omega"] = {{"kind", "poly"}, {"coeffs", coeff_array(*file.omega)}};
  if (file.extension)
    j["extension"] = {{"family", "theorem1"},
                      {"a0", complex_to_json(file.extension->a0)},
                      {"a1", complex_to_json(file.extension->a1)}};
  return j;
}

json to_json(const WeightedSums& ws) {
  return {{"sum_n_sq", ws.sum_n_sq},
          {"sum_n_abs", ws.sum_n_abs},
          {"tail_bound", ws.tail_bound},
          {"sq_tail_bound", ws.sq_tail_bound}};
}

json to_json(const MembershipCertificate& c) {
  return {{"witness_k", c.witness_k},
          {"test", std::string(to_string(c.test))},
          {"valid", c.valid},
          {"sampled", c.sampled},
          {"inputs", c.inputs}};
}

json to_json(const AreaReport& r) {
  return {{"series_area", r.series_area},
          {"quadrature_area", r.quadrature_area},
          {"abs_discrepancy", r.abs_discrepancy},
          {"rel_discrepancy", r.rel_discrepancy},
          {"samples", r.samples},
          {"series_uncertainty", r.series_uncertainty},
          {"tail_warning", r.tail_warning}};
}

json to_json(const AreaTheoremCheck& c) {
  return {{"pass", c.pass}, {"equality", c.equality}, {"lhs", c.lhs}, {"bound", c.bound}, {"slack", c.slack}};
}

json to_json(const A1BoundCheck& c) {
  return {{"pass", c.pass},
          {"a1_abs", c.a1_abs},
          {"bound", c.bound},
          {"margin", c.margin},
          {"bracket", {c.bracket_lower, c.bracket_upper}}};
}

json to_json(const ProbeReport& r) {
  return {{"pairs", r.pairs},
          {"seed", r.seed},
          {"min_ratio", r.min_ratio},
          {"argmin", {complex_to_json(r.argmin_z1), complex_to_json(r.argmin_z2)}},
          {"lower_bound", r.lower_bound},
          {"meets_bound", r.meets_bound},
          {"collision", r.collision},
          {"proves_univalence", false}};
}

FunctionFile function_file_from_json(const json& j) {
  if (!j.is_object())
    throw InputError("function file must be a JSON object");
  const double p = number_field(j, "p");

  std::optional<std::vector<cplx>> omega;
  if (const auto it = j.find("omega"); it != j.end()) {
    if (!it->is_object())
      throw InputError("field 'omega' must be an object");
    const auto kind = it->find("kind");
    if (kind == it->end() || !kind->is_string() || kind->get<std::string>() != "poly")
      throw InputError("field 'omega.kind' must be \"poly\"");
    const auto c = it->find("coeffs");
    if (c == it->end())
      throw InputError("missing field 'omega.coeffs'");
    omega = coeff_list(*c, "omega.coeffs");
  }

  std::vector<cplx> coeffs;
  if (const auto it = j.find("coeffs"); it != j.end())
    coeffs = coeff_list(*it, "coeffs");
  else if (omega)
    coeffs = *omega;
  else
    throw InputError("missing field 'coeffs'");

  double tail = 0.0;
  if (j.contains("tail_bound"))
    tail = number_field(j, "tail_bound");

  std::optional<GeometricEnvelope> envelope;
  if (const auto it = j.find("envelope"); it != j.end()) {
    if (!it->is_object())
      throw InputError("field 'envelope' must be an object");
    envelope = GeometricEnvelope{number_field(*it, "scale"), number_field(*it, "ratio")};
  }

  std::optional<AffineMobius> extension;
  if (const auto it = j.find("extension"); it != j.end()) {
    if (!it->is_object())
      throw InputError("field 'extension' must be an object");
    const auto fam = it->find("family");
    if (fam == it->end() || !fam->is_string() || fam->get<std::string>() != "theorem1")
      throw InputError("field 'extension.family' must be \"theorem1\"");
    if (!it->contains("a0") || !it->contains("a1"))
      throw InputError("field 'extension' needs 'a0' and 'a1'");
    extension = AffineMobius{complex_from_json(it->at("a0"), "extension.a0"),
                             complex_from_json(it->at("a1"), "extension.a1")};
  }

  try {
    return FunctionFile{PoledFunction(p, std::move(coeffs), tail, envelope), std::move(omega), extension};
  } catch (const InvalidParameter& e) {
    throw InputError(e.what());
  }
}

FunctionFile parse_function_file(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return function_file_from_json(j);
}

ExtensionMap extension_from_file(const FunctionFile& file) {
  try {
    if (file.extension)
      return ExtensionMap(file.function, *file.extension);
    if (file.omega)
      return build_theorem2_extension(AnalyticPart::polynomial(*file.omega), file.function.pole());
  } catch (const InvalidParameter& e) {
    throw InputError(e.what());
  }
  throw InputError("file describes no extension family (need an 'extension' or 'omega' block)");
}

void write_dilatation_csv(std::ostream& os, const DilatationSweep& sweep) {
  const auto old = os.precision(17);
  os << "re(z),im(z),re(mu),im(mu),abs(mu)\n";
  for (const auto& s : sweep.samples)
    os << s.z.real() << ',' << s.z.imag() << ',' << s.mu.real() << ',' << s.mu.imag() << ','
       << std::abs(s.mu) << '\n';
  os.precision(old);
}

} // namespace qcx::io
