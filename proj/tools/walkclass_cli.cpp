// walkclass command-line front end. Uses the C API only.
#include <cstdio>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "walkclass/walkclass.h"

namespace {

struct ModelDeleter {
  void operator()(wc_model* m) const { wc_model_free(m); }
};
struct ReportDeleter {
  void operator()(wc_report* r) const { wc_report_free(r); }
};
using ModelPtr = std::unique_ptr<wc_model, ModelDeleter>;
using ReportPtr = std::unique_ptr<wc_report, ReportDeleter>;

int fail(wc_status s) {
  std::fprintf(stderr, "walkclass: %s (%s)\n", wc_status_string(s), wc_last_error());
  return 2;
}

int print_owned(wc_status s, char* text) {
  if (s != WC_OK) return fail(s);
  std::fputs(text, stdout);
  wc_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify weighted small-step quarter-plane walk models"};
  app.require_subcommand(1);

  std::string model_path, t = "1/2", csv_dir;
  int cap = 24, order = 12;
  double tol = 1e-9;
  bool as_json = false, as_text = false;

  auto* classify = app.add_subcommand("classify", "Full classification pipeline");
  classify->add_option("model", model_path, "Model JSON file")->required();
  classify->add_option("--t", t, "Rational t in (0,1), p/q")->required();
  classify->add_option("--cap", cap, "Order cap")->check(CLI::PositiveNumber);
  classify->add_option("--tol", tol, "Tolerance on omega3/omega2 rationality")->check(CLI::PositiveNumber);
  auto* fj = classify->add_flag("--json", as_json, "JSON report (default)");
  classify->add_flag("--text", as_text, "Human-readable report")->excludes(fj);
  classify->add_option("--emit-csv", csv_dir, "Write unit-circle path CSVs into DIR");

  auto* uniformize = app.add_subcommand("uniformize", "Lattice, periods and branch points");
  uniformize->add_option("model", model_path, "Model JSON file")->required();
  uniformize->add_option("--t", t, "Rational t in (0,1), p/q")->required();

  auto* series = app.add_subcommand("series", "Exact series truncation and functional-equation check");
  series->add_option("model", model_path, "Model JSON file")->required();
  series->add_option("--order", order, "Truncation order K")->required()->check(CLI::PositiveNumber);
  series->add_option("--t", t, "Rational t in (0,1) for the specialized check")->capture_default_str();

  auto* orbit = app.add_subcommand("orbit-sum", "Group order and orbit sum");
  orbit->add_option("model", model_path, "Model JSON file")->required();
  auto* ot = orbit->add_option("--t", t, "Rational t in (0,1); adds the on-curve test");
  orbit->add_option("--cap", cap, "Order cap")->check(CLI::PositiveNumber);

  auto* critical = app.add_subcommand("critical-t", "Critical value t0 of the step polynomial");
  critical->add_option("model", model_path, "Model JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  wc_model* raw = nullptr;
  if (wc_status s = wc_model_load(model_path.c_str(), &raw); s != WC_OK) return fail(s);
  ModelPtr model(raw);

  wc_options opts;
  wc_options_default(&opts);
  opts.cap = cap;
  opts.tol = tol;

  if (*classify) {
    wc_report* rr = nullptr;
    if (wc_status s = wc_classify(model.get(), t.c_str(), &opts, &rr); s != WC_OK) return fail(s);
    ReportPtr report(rr);
    char* out = nullptr;
    const wc_status s = as_text ? wc_report_text(report.get(), &out) : wc_report_json(report.get(), &out);
    if (int rc = print_owned(s, out)) return rc;
    if (!csv_dir.empty()) {
      if (wc_status e = wc_emit_path_csv(model.get(), t.c_str(), csv_dir.c_str(), 256); e != WC_OK) return fail(e);
    }
    return 0;
  }
  char* out = nullptr;
  wc_status s = WC_OK;
  if (*uniformize) {
    s = wc_uniformize_json(model.get(), t.c_str(), &out);
  } else if (*series) {
    s = wc_series_json(model.get(), t.c_str(), order, &out);
  } else if (*orbit) {
    const bool have_t = ot->count() > 0;
    s = wc_orbit_sum_json(model.get(), have_t ? t.c_str() : nullptr, &opts, &out);
  } else if (*critical) {
    s = wc_critical_t_json(model.get(), &out);
  } else {
    return 1;
  }
  return print_owned(s, out);
}
