#pragma once

#include <string>
#include <string_view>

#include "waylab/catalog.hpp"
#include "waylab/serialization.hpp"

namespace waylab::report {

using io::Json;

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

Json to_json(const WayBoundReport& r);

/// Built object plus every expected fact with its outcome; "all_passed" summarises.
Json example_report(std::string_view id, const catalog::Params& params = {});

/// ids, parameter defaults and fact claims, without running the checks.
Json catalog_index();

struct AnalyzeInputs {
  const Json* quantity = nullptr;        // Hermitian on H (x) K or on H
  const Json* additive = nullptr;        // {"l1", "l2"}
  const Json* multiplicative = nullptr;  // {"l2"} with optional "l1"
};

Json analyze(const Json& model, const AnalyzeInputs& inputs, double tol = kTolerance);

/// Programs of every listed state, pairwise orthogonality audit and the
/// programming bound maximised over outcome pairs.
Json multimeter_audit(const Json& model, const Json& states, double tol = kTolerance);

/// Header alpha,min_bound,nx,ny,nz.
std::string scan_csv(std::span<const ScanPoint> points);
/// "#alpha", "#min_bound" and "#axis" lines, then header x,z.
std::string region_csv(const EffectRegion& region);

}  // namespace waylab::report
