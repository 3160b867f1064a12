#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "waylab/waylab.h"

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kIo = 2;

struct Failure {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kIo, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Failure{kIo, "error while reading '" + path + "'"};
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kIo, "cannot write '" + path + "'"};
  out << text;
  out.flush();
  if (!out) throw Failure{kIo, "error while writing '" + path + "'"};
}

/// Owns a waylab_string and turns a failed status into a Failure.
std::string take(waylab_status st, waylab_string*& s) {
  if (st != WAYLAB_OK) {
    throw Failure{st == WAYLAB_ERR_IO ? kIo : kValidation,
                  std::string(waylab_status_name(st)) + ": " + waylab_last_error()};
  }
  std::string text(waylab_string_data(s), waylab_string_size(s));
  waylab_string_destroy(s);
  return text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) std::cout << text << (text.ends_with('\n') ? "" : "\n");
  else write_file(out_path, text);
}

struct Context {
  waylab_context* ctx = nullptr;
  Context() {
    if (waylab_context_create(&ctx) != WAYLAB_OK) throw Failure{kValidation, "cannot create context"};
    if (const char* env = std::getenv("WAYLAB_TOLERANCE")) {
      char* end = nullptr;
      const double tol = std::strtod(env, &end);
      if (end == env || *end != '\0') throw Failure{kValidation, "WAYLAB_TOLERANCE is not a number"};
      if (waylab_context_set_tolerance(ctx, tol) != WAYLAB_OK) {
        throw Failure{kValidation, std::string("WAYLAB_TOLERANCE: ") + waylab_last_error()};
      }
    }
  }
  ~Context() { waylab_context_destroy(ctx); }
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"waylab: measurement limitations under conservation laws"};
  app.require_subcommand(1);

  std::string example_id;
  std::vector<std::string> example_params;
  auto* example = app.add_subcommand("example", "replay a catalog entry and check its facts");
  example->add_option("id", example_id, "catalog id")->required();
  example->add_option("--param", example_params, "name=value override")->take_all();

  auto* catalog = app.add_subcommand("catalog", "list catalog ids, parameters and facts");

  std::string model_path, quantity_path, additive_path, multiplicative_path;
  auto* analyze = app.add_subcommand("analyze", "report sharpness, conserved quantities and bounds");
  analyze->add_option("--model", model_path, "model JSON")->required();
  analyze->add_option("--quantity", quantity_path, "Hermitian quantity on H (x) K or on H");
  auto* add_opt = analyze->add_option("--additive", additive_path, "additive pair {l1, l2}");
  auto* mul_opt = analyze->add_option("--multiplicative", multiplicative_path, "multiplicative {l2} (optional l1)");
  add_opt->excludes(mul_opt);

  double alpha_min = 0.0, alpha_max = 0.0;
  std::size_t steps = 0;
  std::string scan_out, scan_svg;
  auto* scan = app.add_subcommand("scan", "minimised commutator bound over alpha");
  scan->add_option("--alpha-min", alpha_min)->required();
  scan->add_option("--alpha-max", alpha_max)->required();
  scan->add_option("--steps", steps)->required();
  scan->add_option("--out", scan_out, "CSV path (stdout if omitted)");
  scan->add_option("--svg", scan_svg, "SVG path");

  double alpha = 0.0;
  std::size_t grid = 401;
  std::string region_out, region_svg;
  auto* region = app.add_subcommand("region", "xz cross-section of realisable effects");
  region->add_option("--alpha", alpha)->required();
  region->add_option("--grid", grid, "lattice points per side")->capture_default_str();
  region->add_option("--out", region_out, "CSV path (stdout if omitted)");
  region->add_option("--svg", region_svg, "SVG path");

  std::string mm_model, mm_states;
  auto* audit = app.add_subcommand("multimeter-audit", "programs, orthogonality and programming bounds");
  audit->add_option("--model", mm_model, "multimeter JSON")->required();
  audit->add_option("--states", mm_states, "programming states JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kValidation;
  }

  try {
    Context c;
    if (example->parsed()) {
      std::string params = "{";
      for (std::size_t i = 0; i < example_params.size(); ++i) {
        const auto eq = example_params[i].find('=');
        if (eq == std::string::npos) throw Failure{kValidation, "--param expects name=value"};
        params += (i ? "," : "") + std::string("\"") + example_params[i].substr(0, eq) + "\":" +
                  example_params[i].substr(eq + 1);
      }
      params += "}";
      waylab_string* s = nullptr;
      int passed = 0;
      const auto st = waylab_example_report(c.ctx, example_id.c_str(), params.c_str(), &s, &passed);
      emit(take(st, s), "");
      if (!passed) {
        std::cerr << "error: at least one expected fact failed for '" << example_id << "'\n";
        return kValidation;
      }
    } else if (catalog->parsed()) {
      waylab_string* s = nullptr;
      emit(take(waylab_catalog_index(&s), s), "");
    } else if (analyze->parsed()) {
      const std::string model = read_file(model_path);
      std::optional<std::string> q, a, m;
      if (!quantity_path.empty()) q = read_file(quantity_path);
      if (!additive_path.empty()) a = read_file(additive_path);
      if (!multiplicative_path.empty()) m = read_file(multiplicative_path);
      waylab_string* s = nullptr;
      const auto st = waylab_analyze(c.ctx, model.c_str(), q ? q->c_str() : nullptr, a ? a->c_str() : nullptr,
                                     m ? m->c_str() : nullptr, &s);
      emit(take(st, s), "");
    } else if (scan->parsed()) {
      waylab_string* s = nullptr;
      const std::string csv = take(waylab_scan_csv(alpha_min, alpha_max, steps, &s), s);
      emit(csv, scan_out);
      if (!scan_svg.empty()) emit(take(waylab_render_svg(csv.c_str(), &s), s), scan_svg);
    } else if (region->parsed()) {
      waylab_string* s = nullptr;
      const std::string csv = take(waylab_region_csv(alpha, grid, &s), s);
      emit(csv, region_out);
      if (!region_svg.empty()) emit(take(waylab_render_svg(csv.c_str(), &s), s), region_svg);
    } else if (audit->parsed()) {
      const std::string model = read_file(mm_model);
      const std::string states = read_file(mm_states);
      waylab_string* s = nullptr;
      emit(take(waylab_multimeter_audit(c.ctx, model.c_str(), states.c_str(), &s), s), "");
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kOk;
}
