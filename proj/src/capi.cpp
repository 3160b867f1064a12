#include "waylab/waylab.h"

#include <cmath>
#include <memory>
#include <string>

#include "waylab/catalog.hpp"
#include "waylab/error.hpp"
#include "waylab/plotting.hpp"
#include "waylab/report.hpp"
#include "waylab/serialization.hpp"

struct waylab_context {
  double tolerance = waylab::kTolerance;
};

struct waylab_matrix {
  waylab::ComplexMatrix m;
};

struct waylab_measurement {
  waylab::NormalMeasurement nm;
};

struct waylab_multimeter {
  waylab::Multimeter mm;
};

struct waylab_string {
  std::string text;
};

namespace {

thread_local std::string last_error;

waylab_status status_of(waylab::ErrorCode code) {
  using waylab::ErrorCode;
  switch (code) {
    case ErrorCode::DimensionMismatch: return WAYLAB_ERR_DIMENSION_MISMATCH;
    case ErrorCode::NotHermitian: return WAYLAB_ERR_NOT_HERMITIAN;
    case ErrorCode::NotUnitary: return WAYLAB_ERR_NOT_UNITARY;
    case ErrorCode::BlochNormExceeded: return WAYLAB_ERR_BLOCH_NORM;
    case ErrorCode::InvalidObservable: return WAYLAB_ERR_INVALID_OBSERVABLE;
    case ErrorCode::InvalidModel: return WAYLAB_ERR_INVALID_MODEL;
    case ErrorCode::InvalidState: return WAYLAB_ERR_INVALID_STATE;
    case ErrorCode::UnknownOutcome: return WAYLAB_ERR_UNKNOWN_OUTCOME;
    case ErrorCode::UnknownId: return WAYLAB_ERR_UNKNOWN_ID;
    case ErrorCode::BadParams: return WAYLAB_ERR_BAD_PARAMS;
    case ErrorCode::PreconditionViolated: return WAYLAB_ERR_PRECONDITION;
    case ErrorCode::NotSharpProgram: return WAYLAB_ERR_NOT_SHARP_PROGRAM;
    case ErrorCode::MalformedCsv: return WAYLAB_ERR_MALFORMED_CSV;
    case ErrorCode::Schema: return WAYLAB_ERR_SCHEMA;
    case ErrorCode::Io: return WAYLAB_ERR_IO;
    case ErrorCode::NumericFailure: return WAYLAB_ERR_NUMERIC;
  }
  return WAYLAB_ERR_INTERNAL;
}

template <class F>
waylab_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return WAYLAB_OK;
  } catch (const waylab::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return WAYLAB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return WAYLAB_ERR_INTERNAL;
  }
}

waylab_status null_argument() {
  last_error = "required pointer argument is NULL";
  return WAYLAB_ERR_NULL_ARGUMENT;
}

void require(const void* p, const char* name) {
  if (!p) throw waylab::Error(waylab::ErrorCode::BadParams, std::string(name) + " is NULL");
}

double tol_of(const waylab_context* ctx) { return ctx ? ctx->tolerance : waylab::kTolerance; }

waylab::io::Json parse(const char* text, const char* what) {
  require(text, what);
  return waylab::io::parse(text, what);
}

void emit(std::string text, waylab_string** out) { *out = new waylab_string{std::move(text)}; }

waylab::StateVector interleaved(const double* re_im, std::size_t n) {
  waylab::StateVector v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = {re_im[2 * i], re_im[2 * i + 1]};
  return v;
}

waylab::catalog::Params params_from(const char* json) {
  waylab::catalog::Params p;
  if (!json) return p;
  const auto j = waylab::io::parse(json, "params");
  if (!j.is_object()) throw waylab::Error(waylab::ErrorCode::Schema, "field 'params': expected an object");
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number()) throw waylab::Error(waylab::ErrorCode::Schema, "field 'params." + k + "': expected a number");
    p[k] = v.get<double>();
  }
  return p;
}

}  // namespace

extern "C" {

const char* waylab_version(void) { return "0.1.0"; }

const char* waylab_status_name(waylab_status status) {
  switch (status) {
    case WAYLAB_OK: return "ok";
    case WAYLAB_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case WAYLAB_ERR_NOT_HERMITIAN: return "not_hermitian";
    case WAYLAB_ERR_NOT_UNITARY: return "not_unitary";
    case WAYLAB_ERR_BLOCH_NORM: return "bloch_norm_exceeded";
    case WAYLAB_ERR_INVALID_OBSERVABLE: return "invalid_observable";
    case WAYLAB_ERR_INVALID_MODEL: return "invalid_model";
    case WAYLAB_ERR_INVALID_STATE: return "invalid_state";
    case WAYLAB_ERR_UNKNOWN_OUTCOME: return "unknown_outcome";
    case WAYLAB_ERR_UNKNOWN_ID: return "unknown_id";
    case WAYLAB_ERR_BAD_PARAMS: return "bad_params";
    case WAYLAB_ERR_PRECONDITION: return "precondition_violated";
    case WAYLAB_ERR_NOT_SHARP_PROGRAM: return "not_sharp_program";
    case WAYLAB_ERR_MALFORMED_CSV: return "malformed_csv";
    case WAYLAB_ERR_SCHEMA: return "schema";
    case WAYLAB_ERR_IO: return "io";
    case WAYLAB_ERR_NUMERIC: return "numeric_failure";
    case WAYLAB_ERR_NULL_ARGUMENT: return "null_argument";
    case WAYLAB_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* waylab_last_error(void) { return last_error.c_str(); }

waylab_status waylab_context_create(waylab_context** out) {
  if (!out) return null_argument();
  return guarded([&] { *out = new waylab_context{}; });
}

void waylab_context_destroy(waylab_context* ctx) { delete ctx; }

waylab_status waylab_context_set_tolerance(waylab_context* ctx, double tol) {
  if (!ctx) return null_argument();
  return guarded([&] {
    if (!(tol > 0.0) || !std::isfinite(tol) || tol >= 1.0) {
      throw waylab::Error(waylab::ErrorCode::BadParams, "tolerance must lie in (0, 1)");
    }
    ctx->tolerance = tol;
  });
}

double waylab_context_tolerance(const waylab_context* ctx) { return tol_of(ctx); }

const char* waylab_string_data(const waylab_string* s) { return s ? s->text.c_str() : ""; }
size_t waylab_string_size(const waylab_string* s) { return s ? s->text.size() : 0; }
void waylab_string_destroy(waylab_string* s) { delete s; }

waylab_status waylab_matrix_create(size_t rows, size_t cols, const double* re_im, waylab_matrix** out) {
  if (!out || (!re_im && rows * cols > 0)) return null_argument();
  return guarded([&] {
    auto v = interleaved(re_im, rows * cols);
    *out = new waylab_matrix{waylab::ComplexMatrix(rows, cols, std::move(v))};
  });
}

void waylab_matrix_destroy(waylab_matrix* m) { delete m; }
size_t waylab_matrix_rows(const waylab_matrix* m) { return m ? m->m.rows() : 0; }
size_t waylab_matrix_cols(const waylab_matrix* m) { return m ? m->m.cols() : 0; }

waylab_status waylab_matrix_get(const waylab_matrix* m, size_t i, size_t j, double* re, double* im) {
  if (!m || !re || !im) return null_argument();
  return guarded([&] {
    if (i >= m->m.rows() || j >= m->m.cols()) {
      throw waylab::Error(waylab::ErrorCode::DimensionMismatch, "index out of range");
    }
    *re = m->m(i, j).real();
    *im = m->m(i, j).imag();
  });
}

waylab_status waylab_matrix_operator_norm(const waylab_matrix* m, double* out) {
  if (!m || !out) return null_argument();
  return guarded([&] { *out = waylab::operator_norm(m->m); });
}

waylab_status waylab_matrix_commutator_norm(const waylab_matrix* a, const waylab_matrix* b, double* out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] { *out = waylab::commutator_norm(a->m, b->m); });
}

waylab_status waylab_matrix_is_unitary(const waylab_context* ctx, const waylab_matrix* m, int* out) {
  if (!m || !out) return null_argument();
  return guarded([&] { *out = waylab::is_unitary(m->m, tol_of(ctx)) ? 1 : 0; });
}

waylab_status waylab_catalog_unitary(const char* id, const char* params_json, waylab_matrix** out) {
  if (!id || !out) return null_argument();
  return guarded([&] {
    auto built = waylab::catalog::build(id, params_from(params_json));
    auto* u = std::get_if<waylab::ComplexMatrix>(&built);
    if (!u) throw waylab::Error(waylab::ErrorCode::BadParams, std::string("'") + id + "' is not a unitary entry");
    *out = new waylab_matrix{std::move(*u)};
  });
}

waylab_status waylab_measurement_from_json(const waylab_context* ctx, const char* json, waylab_measurement** out) {
  if (!json || !out) return null_argument();
  return guarded([&] {
    *out = new waylab_measurement{waylab::io::measurement_from_json(parse(json, "model"), tol_of(ctx))};
  });
}

void waylab_measurement_destroy(waylab_measurement* m) { delete m; }

waylab_status waylab_measurement_to_json(const waylab_measurement* m, waylab_string** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { emit(waylab::io::dump(waylab::io::to_json(m->nm)), out); });
}

waylab_status waylab_measurement_sharpness_defect(const waylab_measurement* m, double* out) {
  if (!m || !out) return null_argument();
  return guarded([&] { *out = waylab::sharpness_defect(m->nm); });
}

waylab_status waylab_measurement_is_repeatable(const waylab_context* ctx, const waylab_measurement* m, int* out) {
  if (!m || !out) return null_argument();
  return guarded([&] { *out = waylab::is_repeatable(m->nm, tol_of(ctx)) ? 1 : 0; });
}

waylab_status waylab_measurement_observable_json(const waylab_measurement* m, waylab_string** out) {
  if (!m || !out) return null_argument();
  return guarded([&] { emit(waylab::io::dump(waylab::io::to_json(waylab::measured_observable(m->nm))), out); });
}

waylab_status waylab_multimeter_from_json(const waylab_context* ctx, const char* json, waylab_multimeter** out) {
  if (!json || !out) return null_argument();
  return guarded([&] {
    *out = new waylab_multimeter{waylab::io::multimeter_from_json(parse(json, "model"), tol_of(ctx))};
  });
}

void waylab_multimeter_destroy(waylab_multimeter* m) { delete m; }

waylab_status waylab_multimeter_program_json(const waylab_multimeter* m, const double* phi, size_t n,
                                             waylab_string** out) {
  if (!m || !phi || !out) return null_argument();
  return guarded([&] {
    emit(waylab::io::dump(waylab::io::to_json(waylab::program(m->mm, interleaved(phi, n)))), out);
  });
}

waylab_status waylab_example_report(const waylab_context*, const char* id, const char* params_json,
                                    waylab_string** out, int* all_passed) {
  if (!id || !out) return null_argument();
  return guarded([&] {
    const auto j = waylab::report::example_report(id, params_from(params_json));
    if (all_passed) *all_passed = j.at("all_passed").get<bool>() ? 1 : 0;
    emit(waylab::io::dump(j), out);
  });
}

waylab_status waylab_catalog_index(waylab_string** out) {
  if (!out) return null_argument();
  return guarded([&] { emit(waylab::io::dump(waylab::report::catalog_index()), out); });
}

waylab_status waylab_analyze(const waylab_context* ctx, const char* model_json, const char* quantity_json,
                             const char* additive_json, const char* multiplicative_json, waylab_string** out) {
  if (!model_json || !out) return null_argument();
  return guarded([&] {
    const auto model = parse(model_json, "model");
    std::optional<waylab::io::Json> q, a, m;
    if (quantity_json) q = parse(quantity_json, "quantity");
    if (additive_json) a = parse(additive_json, "additive");
    if (multiplicative_json) m = parse(multiplicative_json, "multiplicative");
    const waylab::report::AnalyzeInputs inputs{q ? &*q : nullptr, a ? &*a : nullptr, m ? &*m : nullptr};
    emit(waylab::io::dump(waylab::report::analyze(model, inputs, tol_of(ctx))), out);
  });
}

waylab_status waylab_multimeter_audit(const waylab_context* ctx, const char* model_json, const char* states_json,
                                      waylab_string** out) {
  if (!model_json || !states_json || !out) return null_argument();
  return guarded([&] {
    emit(waylab::io::dump(waylab::report::multimeter_audit(parse(model_json, "model"), parse(states_json, "states"),
                                                           tol_of(ctx))),
         out);
  });
}

waylab_status waylab_scan_csv(double alpha_min, double alpha_max, size_t steps, waylab_string** out) {
  if (!out) return null_argument();
  return guarded([&] {
    if (!(alpha_min >= 0.0) || !(alpha_max <= 1.0) || !(alpha_min <= alpha_max)) {
      throw waylab::Error(waylab::ErrorCode::BadParams, "need 0 <= alpha-min <= alpha-max <= 1");
    }
    if (steps < 2) throw waylab::Error(waylab::ErrorCode::BadParams, "steps must be at least 2");
    const auto alphas = waylab::linear_grid(alpha_min, alpha_max, steps);
    emit(waylab::report::scan_csv(waylab::figure2_scan(alphas)), out);
  });
}

waylab_status waylab_region_csv(double alpha, size_t grid, waylab_string** out) {
  if (!out) return null_argument();
  return guarded([&] {
    if (grid < 8) throw waylab::Error(waylab::ErrorCode::BadParams, "grid must be at least 8");
    emit(waylab::report::region_csv(waylab::realisable_effect_region(alpha, grid)), out);
  });
}

waylab_status waylab_render_svg(const char* csv, waylab_string** out) {
  if (!csv || !out) return null_argument();
  return guarded([&] { emit(waylab::plot::render_svg(csv), out); });
}

}  // extern "C"
