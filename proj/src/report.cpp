#include "waylab/report.hpp"

#include <charconv>

#include "waylab/error.hpp"

namespace waylab::report {

namespace {

Json space_json(const AdditiveSpace& s) {
  Json physical = Json::array();
  for (const auto& p : s.physical) physical.push_back({{"l1", io::to_json(p.l1)}, {"l2", io::to_json(p.l2)}});
  return {{"unreduced_dim", s.pair_space.size()},
          {"physical_dim", s.physical_dim()},
          {"max_residual", s.pair_space.max_residual},
          {"physical", std::move(physical)}};
}

Json basis_json(const RealLinearBasis& b) {
  Json basis = Json::array();
  for (const auto& t : b.basis) basis.push_back(io::to_json(t[0]));
  return {{"dim", b.size()}, {"max_residual", b.max_residual}, {"basis", std::move(basis)}};
}

Json built_json(const catalog::Built& built) {
  return std::visit([](const auto& obj) { return io::to_json(obj); }, built);
}

const NormalMeasurement& require_measurement(const io::Model& model, const char* why) {
  if (const auto* nm = std::get_if<NormalMeasurement>(&model)) return *nm;
  throw Error(ErrorCode::Schema, std::string("field 'probe': missing, required by ") + why);
}

Json bounds_per_outcome(const NormalMeasurement& nm, const auto& bound) {
  Json out = Json::object();
  for (const auto& x : nm.pointer().outcomes()) out[x] = to_json(bound(x));
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

Json to_json(const WayBoundReport& r) {
  Json terms = Json::object();
  for (const auto& t : r.rhs_terms) terms[t.name] = t.value;
  Json j{{"lhs", r.lhs}, {"rhs_terms", std::move(terms)}, {"rhs_total", r.rhs_total}, {"slack", r.slack}};
  if (r.chain_slack) j["chain_slack"] = *r.chain_slack;
  return j;
}

Json example_report(std::string_view id, const catalog::Params& params) {
  const auto& e = catalog::entry(id);
  const auto resolved = catalog::resolve_params(e, params);
  const auto built = catalog::build(id, resolved);
  Json facts = Json::array();
  bool all = true;
  for (const auto& f : e.facts(resolved)) {
    const auto o = f.check();
    all = all && o.passed;
    facts.push_back({{"claim", f.claim},
                     {"tag", catalog::to_string(f.tag)},
                     {"checker", f.checker},
                     {"passed", o.passed},
                     {"value", o.value},
                     {"threshold", o.threshold},
                     {"detail", o.detail}});
  }
  Json j{{"id", e.id},
         {"kind", e.kind},
         {"description", e.description},
         {"params", resolved},
         {"object", built_json(built)},
         {"facts", std::move(facts)},
         {"all_passed", all}};
  if (const auto* nm = std::get_if<NormalMeasurement>(&built)) {
    j["summary"] = {{"sharpness_defect", sharpness_defect(*nm)},
                    {"repeatable", is_repeatable(*nm)},
                    {"measured_observable", io::to_json(measured_observable(*nm))}};
  }
  return j;
}

Json catalog_index() {
  Json list = Json::array();
  for (const auto& e : catalog::entries()) {
    Json facts = Json::array();
    for (const auto& f : e.facts(e.params)) {
      facts.push_back({{"claim", f.claim}, {"tag", catalog::to_string(f.tag)}, {"checker", f.checker}});
    }
    list.push_back({{"id", e.id},
                    {"kind", e.kind},
                    {"description", e.description},
                    {"params", e.params},
                    {"facts", std::move(facts)}});
  }
  return {{"entries", std::move(list)}};
}

Json analyze(const Json& model_json, const AnalyzeInputs& inputs, double tol) {
  const auto model = io::model_from_json(model_json, tol);
  if (const auto* mm = std::get_if<Multimeter>(&model)) {
    if (inputs.quantity || inputs.additive || inputs.multiplicative) {
      require_measurement(model, "quantity analysis");
    }
    return {{"kind", "multimeter"},
            {"system_dim", mm->system_dim()},
            {"apparatus_dim", mm->apparatus_dim()},
            {"additive_conserved_space",
             space_json(additive_conserved_space(mm->coupling(), mm->system_dim(), mm->apparatus_dim()))}};
  }
  const auto& nm = std::get<NormalMeasurement>(model);
  const auto measured = measured_observable(nm);
  const bool repeatable = is_repeatable(nm, tol);
  Json j{{"kind", "measurement"},
         {"system_dim", nm.system_dim()},
         {"apparatus_dim", nm.apparatus_dim()},
         {"measured_observable", io::to_json(measured)},
         {"sharp", is_sharp(measured, tol)},
         {"trivial", is_trivial(measured, tol)},
         {"nontriviality", nontriviality(measured)},
         {"sharpness_defect", sharpness_defect(nm)},
         {"repeatable", repeatable},
         {"repeatability_spectrum_check", repeatable ? Json(repeatability_spectrum_check(nm, tol)) : Json()},
         {"additive_conserved_space",
          space_json(additive_conserved_space(nm.coupling(), nm.system_dim(), nm.apparatus_dim()))},
         {"additive_weak_yanase_space", space_json(additive_weak_yanase_space(nm))}};

  const std::size_t dh = nm.system_dim(), dk = nm.apparatus_dim();
  if (inputs.quantity) {
    const auto l = io::matrix_from_json(*inputs.quantity, "quantity");
    if (!is_hermitian(l, tol)) throw Error(ErrorCode::NotHermitian, "quantity is not Hermitian");
    Json q{{"dim", l.rows()}};
    if (l.rows() == dh * dk && l.is_square()) {
      q["acts_on"] = "system_apparatus";
      q["prop2"] = bounds_per_outcome(nm, [&](const std::string& x) { return prop2_bound(nm, l, x); });
      const auto p1 = prop1_check(nm, l);
      q["prop1_check"] = {{"weak_yanase", p1.weak_yanase}, {"sharpness", p1.sharpness}, {"conclusion", p1.conclusion}};
    } else if (l.rows() == dh && l.is_square()) {
      const ComplexMatrix lifted = tensor(l, ComplexMatrix::identity(dk));
      q["acts_on"] = "system";
      q["prop2"] = bounds_per_outcome(nm, [&](const std::string& x) { return prop2_bound(nm, lifted, x); });
      q["prop3"] = bounds_per_outcome(nm, [&](const std::string& x) { return prop3_bound(nm, l, x); });
    } else {
      throw Error(ErrorCode::Schema, "field 'quantity': expected a " + std::to_string(dh * dk) + "x" +
                                         std::to_string(dh * dk) + " or " + std::to_string(dh) + "x" +
                                         std::to_string(dh) + " matrix");
    }
    j["quantity"] = std::move(q);
  }
  if (inputs.additive) {
    const auto pair = io::additive_from_json(*inputs.additive, tol);
    if (pair.l1.rows() != dh || pair.l2.rows() != dk) {
      throw Error(ErrorCode::Schema, "field 'l1'/'l2': dimensions do not match the model");
    }
    const ComplexMatrix l = pair.combined();
    j["additive"] = {{"conservation_defect", commutator_norm(l, nm.coupling())},
                     {"yanase_defect", yanase_defect(nm, pair.l2)},
                     {"weak_yanase_defect", weak_yanase_defect(nm, l)},
                     {"prop2", bounds_per_outcome(nm, [&](const std::string& x) { return prop2_bound(nm, l, x); })}};
  }
  if (inputs.multiplicative) {
    const auto spec = io::multiplicative_from_json(*inputs.multiplicative, tol);
    if (spec.l2.rows() != dk) throw Error(ErrorCode::Schema, "field 'l2': dimension does not match the model");
    Json m{{"l1_space", basis_json(multiplicative_weak_yanase_space(nm, spec.l2))}};
    if (spec.l1) {
      if (spec.l1->rows() != dh) throw Error(ErrorCode::Schema, "field 'l1': dimension does not match the model");
      const auto c = multiplicative_corollary(nm, *spec.l1, spec.l2, tol);
      m["corollary"] = {{"probe_expectation", io::to_json(c.probe_expectation)},
                        {"degenerate", c.degenerate},
                        {"weak_yanase", c.weak_yanase},
                        {"sharpness", c.sharpness},
                        {"conclusion", c.conclusion ? Json(*c.conclusion) : Json()}};
    }
    j["multiplicative"] = std::move(m);
  }
  return j;
}

Json multimeter_audit(const Json& model_json, const Json& states_json, double tol) {
  const auto model = io::model_from_json(model_json, tol);
  const Multimeter mm = std::visit(
      [tol](const auto& m) { return Multimeter(m.system_dim(), m.apparatus_dim(), m.pointer(), m.coupling(), tol); },
      model);
  const auto states = io::states_from_json(states_json);
  if (states.empty()) throw Error(ErrorCode::Schema, "field 'states': expected at least one state");

  std::vector<DiscreteObservable> programs;
  Json labels = Json::array(), prog = Json::array();
  for (const auto& s : states) {
    programs.push_back(program(mm, s.vector));
    const auto& a = programs.back();
    labels.push_back(s.label);
    prog.push_back({{"label", s.label},
                    {"sharp", is_sharp(a, tol)},
                    {"trivial", is_trivial(a, tol)},
                    {"nontriviality", nontriviality(a)},
                    {"observable", io::to_json(a)}});
  }

  Json pairs = Json::array();
  Json rhs_matrix = Json::array();
  bool orthogonality_ok = true;
  for (std::size_t i = 0; i < states.size(); ++i) {
    Json row = Json::array();
    const bool sharp_i = is_sharp(programs[i], tol);
    for (std::size_t k = 0; k < states.size(); ++k) {
      if (!sharp_i) {
        row.push_back(nullptr);
        continue;
      }
      double rhs = 0.0;
      for (const auto& x : mm.pointer().outcomes())
        for (const auto& y : mm.pointer().outcomes())
          rhs = std::max(rhs, prop5_bound(mm, states[i].vector, states[k].vector, x, y, std::nullopt, tol).rhs_total);
      row.push_back(rhs);
    }
    rhs_matrix.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t k = i + 1; k < states.size(); ++k) {
      const auto a = orthogonality_audit(mm, states[i].vector, states[k].vector, tol);
      const bool ok = !a.distinct_sharp || a.overlap <= tol;
      orthogonality_ok = orthogonality_ok && ok;
      Json p{{"first", states[i].label},
             {"second", states[k].label},
             {"overlap", a.overlap},
             {"distinct_sharp", a.distinct_sharp},
             {"program_distance", a.program_distance},
             {"orthogonality_ok", ok}};
      if (a.first_sharp) {
        double min_slack = 1e300, max_lhs = 0.0;
        for (const auto& x : mm.pointer().outcomes()) {
          for (const auto& y : mm.pointer().outcomes()) {
            const auto r = prop5_bound(mm, states[i].vector, states[k].vector, x, y, std::nullopt, tol);
            min_slack = std::min(min_slack, r.slack);
            max_lhs = std::max(max_lhs, r.lhs);
          }
        }
        p["prop5"] = {{"max_lhs", max_lhs}, {"min_slack", min_slack}};
      } else {
        p["prop5"] = nullptr;
      }
      pairs.push_back(std::move(p));
    }
  }
  return {{"states", std::move(labels)},
          {"programs", std::move(prog)},
          {"pairs", std::move(pairs)},
          {"prop5_rhs", std::move(rhs_matrix)},
          {"orthogonality_ok", orthogonality_ok}};
}

std::string scan_csv(std::span<const ScanPoint> points) {
  std::string out = "alpha,min_bound,nx,ny,nz\n";
  for (const auto& p : points) {
    out += format_double(p.alpha) + "," + format_double(p.min_bound) + "," + format_double(p.direction[0]) + "," +
           format_double(p.direction[1]) + "," + format_double(p.direction[2]) + "\n";
  }
  return out;
}

std::string region_csv(const EffectRegion& region) {
  std::string out = "#alpha," + format_double(region.alpha) + "\n#min_bound," + format_double(region.min_bound) +
                    "\n#axis," + format_double(region.axis[0]) + "," + format_double(region.axis[1]) + "," +
                    format_double(region.axis[2]) + "\nx,z\n";
  for (const auto& [x, z] : region.points) out += format_double(x) + "," + format_double(z) + "\n";
  return out;
}

}  // namespace waylab::report
