#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkclass/group.hpp"
#include "walkclass/series.hpp"

namespace walkclass {

enum class Verdict {
  DegenerateModel,
  GenusZeroOutOfScope,
  Algebraic,
  HolonomicNotAlgebraic,
  DifferentiallyTranscendental,
  Inconclusive,
};

const char* verdict_name(Verdict v);

struct Evidence {
  std::string claim;
  std::string basis;
  std::string value;
};

struct UniformSummary {
  double g2 = 0.0, g3 = 0.0;
  double e1 = 0.0, e2 = 0.0, e3 = 0.0;
  cplx omega1;
  double omega2 = 0.0;
  double omega3 = 0.0;
  double ratio = 0.0;
  double omega3_quadrature = 0.0;
  double kernel_residual = 0.0;  // max |K(Lambda(w))| over sample points
  std::array<ExtReal, 4> a, b;
};

struct GroupReport {
  std::optional<int> order_p1p1;
  bool probe_sets_agree = true;
  bool parity_consistent = true;
  std::optional<int> order_on_curve;  // 2 * ell
  double tau_confirmation = 0.0;
  TriState orbit_sum_p1p1 = TriState::Unknown;
  std::vector<Rational> orbit_sum_witnesses;
  std::optional<double> orbit_sum_on_curve_max;
  std::optional<double> orbit_sum_on_curve_o1_plus_o2;
  std::optional<bool> orbit_sum_on_curve_zero;
};

struct ClassifyOptions {
  int cap = 24;                // word-length cap on P1 x P1, and denominator cap for omega3/omega2
  double tol = 1e-9;           // |omega3/omega2 - k/ell| tolerance
  double confirm_tol = 1e-6;   // Lambda(w + ell omega3) = Lambda(w) check
  double orbit_tol = 1e-8;     // relative zero test for the orbit sum on the curve
  int probes = 5;
  int probe_sets = 3;
  int samples = 32;
  std::uint64_t seed = 1;
};

struct ClassificationReport {
  WeightTable weights;
  Rational t;
  PatternClass pattern;
  GenusTag genus = GenusTag::Degenerate;
  std::pair<Rational, Rational> drift;
  bool stationary_weight = false;  // d(0,0) > 0
  GroupReport group;
  std::optional<UniformSummary> uniform;
  Verdict verdict = Verdict::Inconclusive;
  int criterion = 0;        // 1..3 when DifferentiallyTranscendental
  bool t_specific = false;  // verdict established for this t only
  std::vector<Evidence> evidence;
  std::vector<std::string> notes;
};

ClassificationReport classify(const WeightTable& w, const Rational& t, const ClassifyOptions& opts = {});

enum class ReportFormat { Json, Text };
std::string emit_report(const ClassificationReport& r, ReportFormat format);

// Writes gamma_x_minus/plus and gamma_y_minus/plus CSV files (re_x,im_x,re_y,im_y,branch).
// Returns the paths written.
std::vector<std::string> emit_path_csv(const KernelContext& ctx, const std::string& dir, int n = 256);

// JSON documents for the auxiliary commands.
std::string uniformize_json(const KernelContext& ctx);
std::string series_json(const KernelContext& ctx, int K);
std::string orbit_sum_json(const WeightTable& w, const std::optional<Rational>& t, const ClassifyOptions& opts);
std::string critical_t_json(const WeightTable& w);

}  // namespace walkclass
