#pragma once

#include "json.hpp"
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "waylab/multimeter.hpp"
#include "waylab/way.hpp"

namespace waylab::io {

using Json = nlohmann::json;

/// Complex numbers are [re, im]; matrices are arrays of rows. The flat form
/// {"rows": r, "cols": c, "data": [[re, im], ...]} (row-major) is also read.
Json to_json(Complex z);
Json to_json(const ComplexMatrix& m);
Json to_json(std::span<const Complex> v);
Json to_json(const DiscreteObservable& e);
Json to_json(const NormalMeasurement& nm);
Json to_json(const Multimeter& mm);

// Readers throw Error(Schema) naming the offending field, or the validation
// error of the constructed object.
Complex complex_from_json(const Json& j, const std::string& field);
ComplexMatrix matrix_from_json(const Json& j, const std::string& field);
StateVector state_from_json(const Json& j, const std::string& field);
DiscreteObservable observable_from_json(const Json& j, const std::string& field, double tol = kTolerance);
NormalMeasurement measurement_from_json(const Json& j, double tol = kTolerance);
Multimeter multimeter_from_json(const Json& j, double tol = kTolerance);

/// A model file with "probe" is a measurement, otherwise a multimeter.
using Model = std::variant<NormalMeasurement, Multimeter>;
Model model_from_json(const Json& j, double tol = kTolerance);

struct LabelledState {
  std::string label;
  StateVector vector;
};
/// {"states": [{"label": ..., "vector": [...]}, ...]}
std::vector<LabelledState> states_from_json(const Json& j);

/// {"l1": matrix, "l2": matrix}
AdditivePair additive_from_json(const Json& j, double tol = kTolerance);

struct MultiplicativeSpec {
  std::optional<ComplexMatrix> l1;
  ComplexMatrix l2;
};
/// {"l2": matrix} with optional "l1".
MultiplicativeSpec multiplicative_from_json(const Json& j, double tol = kTolerance);

/// Parse text; malformed JSON is a Schema error mentioning `what`.
Json parse(std::string_view text, const std::string& what);
/// Compact dump with round-trip number precision.
std::string dump(const Json& j, int indent = 2);

}  // namespace waylab::io
