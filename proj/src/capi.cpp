#include "walkclass/walkclass.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "walkclass/classify.hpp"
#include "walkclass/error.hpp"

struct wc_model {
  walkclass::WeightTable w;
};

struct wc_report {
  walkclass::ClassificationReport r;
};

namespace {

thread_local std::string g_last_error;

wc_status map_code(walkclass::ErrorCode c) {
  using walkclass::ErrorCode;
  switch (c) {
    case ErrorCode::MalformedRational: return WC_ERR_MALFORMED_RATIONAL;
    case ErrorCode::MalformedModel: return WC_ERR_MALFORMED_MODEL;
    case ErrorCode::NegativeWeight: return WC_ERR_NEGATIVE_WEIGHT;
    case ErrorCode::AllZeroWeights: return WC_ERR_ALL_ZERO_WEIGHTS;
    case ErrorCode::InvalidArgument: return WC_ERR_INVALID_ARGUMENT;
    case ErrorCode::PreconditionFailed: return WC_ERR_PRECONDITION;
    case ErrorCode::IdentityViolated: return WC_ERR_IDENTITY_VIOLATED;
    case ErrorCode::IoError: return WC_ERR_IO;
    default: return WC_ERR_NUMERICAL;
  }
}

template <class F>
wc_status guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return WC_OK;
  } catch (const walkclass::Error& e) {
    g_last_error = std::string(walkclass::error_code_name(e.code())) + ": " + e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return WC_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool ok, const char* what) {
  if (!ok) throw walkclass::Error(walkclass::ErrorCode::InvalidArgument, what);
}

walkclass::ClassifyOptions to_options(const wc_options* o) {
  walkclass::ClassifyOptions c;
  if (!o) return c;
  if (o->cap > 0) c.cap = o->cap;
  if (o->tol > 0) c.tol = o->tol;
  if (o->orbit_tol > 0) c.orbit_tol = o->orbit_tol;
  if (o->probes > 0) c.probes = o->probes;
  if (o->samples > 0) c.samples = o->samples;
  c.seed = o->seed;
  return c;
}

walkclass::KernelContext context(const wc_model* m, const char* t) {
  require(m && t, "null argument");
  return walkclass::KernelContext(m->w, walkclass::parse_rational(t));
}

}  // namespace

extern "C" {

const char* wc_last_error(void) { return g_last_error.c_str(); }

const char* wc_status_string(wc_status s) {
  switch (s) {
    case WC_OK: return "ok";
    case WC_ERR_MALFORMED_RATIONAL: return "malformed rational";
    case WC_ERR_MALFORMED_MODEL: return "malformed model";
    case WC_ERR_NEGATIVE_WEIGHT: return "negative weight";
    case WC_ERR_ALL_ZERO_WEIGHTS: return "all weights zero";
    case WC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WC_ERR_PRECONDITION: return "precondition failed";
    case WC_ERR_NUMERICAL: return "numerical failure";
    case WC_ERR_IDENTITY_VIOLATED: return "identity violated";
    case WC_ERR_IO: return "i/o failure";
    case WC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void wc_options_default(wc_options* opts) {
  if (!opts) return;
  const walkclass::ClassifyOptions c;
  opts->cap = c.cap;
  opts->tol = c.tol;
  opts->orbit_tol = c.orbit_tol;
  opts->probes = c.probes;
  opts->samples = c.samples;
  opts->seed = c.seed;
}

void wc_string_free(char* s) { std::free(s); }

wc_status wc_model_parse(const char* json_text, wc_model** out) {
  return guard([&] {
    require(json_text && out, "null argument");
    *out = new wc_model{walkclass::parse_model(json_text)};
  });
}

wc_status wc_model_load(const char* path, wc_model** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new wc_model{walkclass::load_model(path)};
  });
}

void wc_model_free(wc_model* m) { delete m; }

wc_status wc_model_canonical_json(const wc_model* m, char** out) {
  return guard([&] {
    require(m && out, "null argument");
    *out = dup_string(walkclass::canonical_json(m->w));
  });
}

wc_status wc_classify(const wc_model* m, const char* t, const wc_options* opts, wc_report** out) {
  return guard([&] {
    require(m && t && out, "null argument");
    const walkclass::Rational tv = walkclass::parse_rational(t);
    // Validates t in (0,1) before the pipeline starts.
    (void)walkclass::KernelContext(m->w, tv);
    *out = new wc_report{walkclass::classify(m->w, tv, to_options(opts))};
  });
}

void wc_report_free(wc_report* r) { delete r; }

wc_verdict wc_report_verdict(const wc_report* r) {
  if (!r) return WC_VERDICT_INCONCLUSIVE;
  return static_cast<wc_verdict>(static_cast<int>(r->r.verdict));
}

int wc_report_criterion(const wc_report* r) { return r ? r->r.criterion : 0; }

wc_status wc_report_json(const wc_report* r, char** out) {
  return guard([&] {
    require(r && out, "null argument");
    *out = dup_string(walkclass::emit_report(r->r, walkclass::ReportFormat::Json));
  });
}

wc_status wc_report_text(const wc_report* r, char** out) {
  return guard([&] {
    require(r && out, "null argument");
    *out = dup_string(walkclass::emit_report(r->r, walkclass::ReportFormat::Text));
  });
}

wc_status wc_uniformize_json(const wc_model* m, const char* t, char** out) {
  return guard([&] {
    require(out, "null argument");
    *out = dup_string(walkclass::uniformize_json(context(m, t)));
  });
}

wc_status wc_series_json(const wc_model* m, const char* t, int order, char** out) {
  return guard([&] {
    require(out && order >= 1, "order must be positive");
    *out = dup_string(walkclass::series_json(context(m, t), order));
  });
}

wc_status wc_orbit_sum_json(const wc_model* m, const char* t, const wc_options* opts, char** out) {
  return guard([&] {
    require(m && out, "null argument");
    std::optional<walkclass::Rational> tv;
    if (t) tv = walkclass::parse_rational(t);
    *out = dup_string(walkclass::orbit_sum_json(m->w, tv, to_options(opts)));
  });
}

wc_status wc_critical_t_json(const wc_model* m, char** out) {
  return guard([&] {
    require(m && out, "null argument");
    *out = dup_string(walkclass::critical_t_json(m->w));
  });
}

wc_status wc_emit_path_csv(const wc_model* m, const char* t, const char* dir, int n) {
  return guard([&] {
    require(dir && n >= 4, "need a directory and n >= 4");
    (void)walkclass::emit_path_csv(context(m, t), dir, n);
  });
}

}  // extern "C"
