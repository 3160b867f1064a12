#include "waylab/serialization.hpp"

#include "waylab/error.hpp"

namespace waylab::io {

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::Schema, "field '" + field + "': " + what);
}

const Json& member(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) schema(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

std::string child(const std::string& field, const char* key) { return field.empty() ? key : field + "." + key; }

std::string child(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

std::size_t dimension(const Json& j, const std::string& field) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) schema(field, "expected a positive integer");
  const auto v = j.get<long long>();
  if (v <= 0) schema(field, "expected a positive integer");
  return static_cast<std::size_t>(v);
}

double number(const Json& j, const std::string& field) {
  if (!j.is_number()) schema(field, "expected a number");
  return j.get<double>();
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(std::span<const Complex> v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(to_json(z));
  return out;
}

Json to_json(const DiscreteObservable& e) {
  Json effects = Json::array();
  for (const auto& m : e.effects()) effects.push_back(to_json(m));
  return {{"dim", e.space_dim()}, {"outcomes", e.outcomes()}, {"effects", std::move(effects)}};
}

Json to_json(const NormalMeasurement& nm) {
  return {{"system_dim", nm.system_dim()},
          {"apparatus_dim", nm.apparatus_dim()},
          {"pointer", to_json(nm.pointer())},
          {"coupling", to_json(nm.coupling())},
          {"probe", to_json(std::span<const Complex>(nm.probe()))}};
}

Json to_json(const Multimeter& mm) {
  return {{"system_dim", mm.system_dim()},
          {"apparatus_dim", mm.apparatus_dim()},
          {"pointer", to_json(mm.pointer())},
          {"coupling", to_json(mm.coupling())}};
}

Complex complex_from_json(const Json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) schema(field, "expected [re, im]");
  return {number(j[0], child(field, std::size_t{0})), number(j[1], child(field, std::size_t{1}))};
}

ComplexMatrix matrix_from_json(const Json& j, const std::string& field) {
  if (j.is_object()) {
    const std::size_t r = dimension(member(j, "rows", field), child(field, "rows"));
    const std::size_t c = dimension(member(j, "cols", field), child(field, "cols"));
    const Json& data = member(j, "data", field);
    const std::string df = child(field, "data");
    if (!data.is_array() || data.size() != r * c) {
      schema(df, "expected " + std::to_string(r * c) + " row-major entries");
    }
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r * c; ++i) m(i / c, i % c) = complex_from_json(data[i], child(df, i));
    return m;
  }
  if (!j.is_array() || j.empty()) schema(field, "expected a non-empty array of rows");
  const std::size_t r = j.size();
  if (!j[0].is_array() || j[0].empty()) schema(child(field, std::size_t{0}), "expected a non-empty row");
  const std::size_t c = j[0].size();
  ComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const auto rf = child(field, i);
    if (!j[i].is_array() || j[i].size() != c) schema(rf, "expected a row of length " + std::to_string(c));
    for (std::size_t k = 0; k < c; ++k) m(i, k) = complex_from_json(j[i][k], child(rf, k));
  }
  return m;
}

StateVector state_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) schema(field, "expected a non-empty array of [re, im]");
  StateVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(complex_from_json(j[i], child(field, i)));
  return v;
}

DiscreteObservable observable_from_json(const Json& j, const std::string& field, double tol) {
  const std::size_t dim = dimension(member(j, "dim", field), child(field, "dim"));
  const Json& outcomes = member(j, "outcomes", field);
  const Json& effects = member(j, "effects", field);
  const auto of = child(field, "outcomes"), ef = child(field, "effects");
  if (!outcomes.is_array()) schema(of, "expected an array of labels");
  if (!effects.is_array() || effects.size() != outcomes.size()) {
    schema(ef, "expected one effect per outcome");
  }
  std::vector<std::string> labels;
  std::vector<ComplexMatrix> mats;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (!outcomes[i].is_string()) schema(child(of, i), "expected a string");
    labels.push_back(outcomes[i].get<std::string>());
    auto m = matrix_from_json(effects[i], child(ef, i));
    if (!m.is_square() || m.rows() != dim) schema(child(ef, i), "expected a " + std::to_string(dim) + "x" +
                                                                   std::to_string(dim) + " matrix");
    mats.push_back(std::move(m));
  }
  return DiscreteObservable(std::move(labels), std::move(mats), tol);
}

namespace {

struct Triplet {
  std::size_t dh, dk;
  DiscreteObservable pointer;
  ComplexMatrix coupling;
};

Triplet triplet_from_json(const Json& j, double tol) {
  if (!j.is_object()) schema("(root)", "expected an object");
  const std::size_t dh = dimension(member(j, "system_dim", ""), "system_dim");
  const std::size_t dk = dimension(member(j, "apparatus_dim", ""), "apparatus_dim");
  auto pointer = observable_from_json(member(j, "pointer", ""), "pointer", tol);
  auto coupling = matrix_from_json(member(j, "coupling", ""), "coupling");
  if (!coupling.is_square() || coupling.rows() != dh * dk) {
    schema("coupling", "expected a " + std::to_string(dh * dk) + "x" + std::to_string(dh * dk) + " matrix");
  }
  if (pointer.space_dim() != dk) schema("pointer.dim", "must equal apparatus_dim");
  return {dh, dk, std::move(pointer), std::move(coupling)};
}

}  // namespace

NormalMeasurement measurement_from_json(const Json& j, double tol) {
  auto t = triplet_from_json(j, tol);
  auto probe = state_from_json(member(j, "probe", ""), "probe");
  if (probe.size() != t.dk) schema("probe", "expected " + std::to_string(t.dk) + " entries");
  return NormalMeasurement(t.dh, t.dk, std::move(t.pointer), std::move(t.coupling), std::move(probe), tol);
}

Multimeter multimeter_from_json(const Json& j, double tol) {
  auto t = triplet_from_json(j, tol);
  return Multimeter(t.dh, t.dk, std::move(t.pointer), std::move(t.coupling), tol);
}

Model model_from_json(const Json& j, double tol) {
  if (j.is_object() && j.contains("probe")) return measurement_from_json(j, tol);
  return multimeter_from_json(j, tol);
}

std::vector<LabelledState> states_from_json(const Json& j) {
  const Json& states = member(j, "states", "");
  if (!states.is_array()) schema("states", "expected an array");
  std::vector<LabelledState> out;
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto f = child("states", i);
    const Json& label = member(states[i], "label", f);
    if (!label.is_string()) schema(child(f, "label"), "expected a string");
    out.push_back({label.get<std::string>(), state_from_json(member(states[i], "vector", f), child(f, "vector"))});
  }
  return out;
}

AdditivePair additive_from_json(const Json& j, double tol) {
  return make_additive_pair(matrix_from_json(member(j, "l1", ""), "l1"),
                            matrix_from_json(member(j, "l2", ""), "l2"), tol);
}

MultiplicativeSpec multiplicative_from_json(const Json& j, double tol) {
  MultiplicativeSpec spec{std::nullopt, matrix_from_json(member(j, "l2", ""), "l2")};
  if (!is_hermitian(spec.l2, tol)) throw Error(ErrorCode::NotHermitian, "l2 is not Hermitian");
  if (j.contains("l1")) {
    spec.l1 = matrix_from_json(j.at("l1"), "l1");
    if (!is_hermitian(*spec.l1, tol)) throw Error(ErrorCode::NotHermitian, "l1 is not Hermitian");
  }
  return spec;
}

Json parse(std::string_view text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::Schema, what + ": invalid JSON (" + e.what() + ")");
  }
}

std::string dump(const Json& j, int indent) { return j.dump(indent); }

}  // namespace waylab::io
