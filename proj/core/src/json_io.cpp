#include "pseudoprob/json_io.hpp"

#include <cstdio>
#include <sstream>

#include "pseudoprob/error.hpp"

namespace pseudoprob {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(errc::kParse, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

double number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw Error(errc::kParse, std::string(what) + " must be a number");
  return j.get<double>();
}

Vec3 vec3(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw Error(errc::kParse, std::string(what) + " must be a 3-array");
  return {number(j[0], what), number(j[1], what), number(j[2], what)};
}

std::vector<std::vector<double>> real_rows(const nlohmann::json& j, std::size_t dim, const char* what) {
  if (!j.is_array() || j.size() != dim) {
    throw Error(errc::kParse, std::string(what) + " must have " + std::to_string(dim) + " rows");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dim) {
      throw Error(errc::kParse, std::string(what) + " rows must have " + std::to_string(dim) + " entries");
    }
    std::vector<double> r;
    for (const auto& v : row) r.push_back(number(v, what));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json observable_to_json(const Observable& o) {
  if (o.direction()) return direction_to_json(*o.direction());
  Json j;
  j["dim"] = o.dim();
  Json outcomes = Json::array();
  for (const auto& t : o.resolution()) outcomes.push_back(t.outcome);
  j["outcomes"] = outcomes;
  return j;
}

Json outcome_value(double a) {
  // Integral outcome labels (the qubit +-1 case) print as integers.
  if (a == std::floor(a) && std::abs(a) < 1e15) return static_cast<long long>(a);
  return a;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(errc::kParse, e.what());
  }
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json rr = Json::array();
    Json ir = Json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) {
      rr.push_back(m(i, k).real());
      ir.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  Json j;
  j["dim"] = m.dim();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  const auto& d = field(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 64) {
    throw Error(errc::kParse, "dim must be an integer in [1, 64]");
  }
  const auto dim = d.get<std::size_t>();
  const auto re = real_rows(field(j, "re"), dim, "re");
  std::vector<std::vector<double>> im(dim, std::vector<double>(dim, 0.0));
  if (j.contains("im")) im = real_rows(j.at("im"), dim, "im");
  std::vector<Complex> entries;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) entries.emplace_back(re[r][c], im[r][c]);
  }
  return ComplexMatrix(dim, std::move(entries));
}

DensityMatrix state_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("bloch")) return density_from_bloch(BlochVector(vec3(j.at("bloch"), "bloch")));
  if (j.is_object() && j.contains("rho")) return DensityMatrix(HermitianOperator(matrix_from_json(j.at("rho"))));
  throw Error(errc::kParse, "state needs a 'bloch' or 'rho' field");
}

Direction direction_from_json(const nlohmann::json& j) { return Direction(vec3(field(j, "m"), "m")); }

Json direction_to_json(const Direction& d) {
  Json j;
  j["m"] = {d.m()[0], d.m()[1], d.m()[2]};
  return j;
}

Json recipe_to_json(const OrderingRecipe& r) {
  if (r.is_weyl()) return "weyl";
  Json j;
  if (const auto* u = r.as_unit()) {
    j["unit"] = u->index;
  } else {
    j["weights"] = r.as_weights()->values;
  }
  return j;
}

OrderingRecipe recipe_from_json(const nlohmann::json& j) {
  if (j.is_string()) return OrderingRecipe::parse(j.get<std::string>());
  if (j.is_object() && j.contains("unit")) {
    const auto& u = j.at("unit");
    if (!u.is_number_unsigned()) throw Error(errc::kParse, "unit index must be a non-negative integer");
    return OrderingRecipe::unit(u.get<std::size_t>());
  }
  if (j.is_object() && j.contains("weights")) {
    const auto& w = j.at("weights");
    if (!w.is_array()) throw Error(errc::kParse, "weights must be an array");
    std::vector<double> values;
    for (const auto& v : w) values.push_back(number(v, "weight"));
    return OrderingRecipe::weights(std::move(values));
  }
  throw Error(errc::kParse, "recipe must be \"weyl\", {\"unit\": k} or {\"weights\": [...]}");
}

TwoQubitPureState two_qubit_state_from_json(const nlohmann::json& j, double tolerance) {
  if (j.is_object() && j.contains("schmidt_alpha")) {
    return TwoQubitPureState::schmidt(number(j.at("schmidt_alpha"), "schmidt_alpha"));
  }
  const auto& re = field(j, "amps_re");
  if (!re.is_array() || re.size() != 4) throw Error(errc::kParse, "amps_re must have 4 entries");
  std::array<Complex, 4> amps{};
  for (std::size_t k = 0; k < 4; ++k) amps[k] = number(re[k], "amps_re");
  if (j.contains("amps_im")) {
    const auto& im = j.at("amps_im");
    if (!im.is_array() || im.size() != 4) throw Error(errc::kParse, "amps_im must have 4 entries");
    for (std::size_t k = 0; k < 4; ++k) amps[k] += Complex(0.0, number(im[k], "amps_im"));
  }
  return TwoQubitPureState(amps, tolerance);
}

Json scheme_to_json(const Scheme& s, double eps) {
  Json j;
  Json observables = Json::array();
  for (const auto& o : s.observables()) observables.push_back(observable_to_json(o));
  j["observables"] = std::move(observables);
  j["recipe"] = recipe_to_json(s.recipe());
  Json entries = Json::array();
  for (const auto& e : s.entries()) {
    Json a = Json::array();
    for (double v : e.outcomes) a.push_back(outcome_value(v));
    Json entry;
    entry["a"] = std::move(a);
    entry["p"] = e.p;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  j["negativity"] = negativity(s);
  j["classical"] = classify(s, eps).classical;
  return j;
}

std::string scheme_to_csv(const Scheme& s) {
  std::ostringstream out;
  for (std::size_t k = 0; k < s.observables().size(); ++k) out << 'a' << (k + 1) << ',';
  out << "p\n";
  for (const auto& e : s.entries()) {
    for (double v : e.outcomes) out << outcome_value(v).dump() << ',';
    out << format_double(e.p) << '\n';
  }
  return out.str();
}

Json scan_to_json(const ScanResult& r) {
  Json j;
  j["kind"] = r.kind;
  j["params"] = r.params;
  j["columns"] = r.columns;
  j["rows"] = r.rows;
  j["summary"] = r.summary;
  j["warnings"] = r.warnings;
  j["metadata"] = r.metadata;
  return j;
}

std::string scan_to_csv(const ScanResult& r) {
  std::ostringstream out;
  for (const auto& w : r.warnings) out << "# warning=" << w << '\n';
  for (const auto& [key, value] : r.summary.items()) out << "# " << key << '=' << value.dump() << '\n';
  for (std::size_t k = 0; k < r.columns.size(); ++k) out << (k ? "," : "") << r.columns[k];
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_double(row[k]);
    out << '\n';
  }
  return out.str();
}

}  // namespace pseudoprob
