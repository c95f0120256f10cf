#include "walkclass/classify.hpp"

#include <cmath>
#include <sstream>

#include "walkclass/error.hpp"

namespace walkclass {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::DegenerateModel: return "DegenerateModel";
    case Verdict::GenusZeroOutOfScope: return "GenusZeroOutOfScope";
    case Verdict::Algebraic: return "Algebraic";
    case Verdict::HolonomicNotAlgebraic: return "HolonomicNotAlgebraic";
    case Verdict::DifferentiallyTranscendental: return "DifferentiallyTranscendental";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double kernel_residual(const KernelContext& ctx, const Uniformization& u, int samples) {
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const cplx w(u.lattice.omega2 * (0.0137 + 0.9613 * s / samples),
                 u.lattice.omega1.imag() * std::fmod(0.071 + 0.618034 * s, 1.0));
    const auto p = lambda_map(w, u);
    worst = std::max(worst, std::abs(ctx.kernel_proj(p.first, p.second)));
  }
  return worst;
}

void run_criteria(ClassificationReport& r) {
  const WeightTable& w = r.weights;
  const Rational q1 = w.d(1, 0) * w.d(1, 0) - 4 * w.d(1, -1) * w.d(1, 1);
  const Rational q2 = w.d(0, 1) * w.d(0, 1) - 4 * w.d(-1, 1) * w.d(1, 1);
  const bool s1 = is_rational_square(q1), s2 = is_rational_square(q2);
  r.evidence.push_back({"d(1,0)^2 - 4 d(1,-1) d(1,1) is a rational square", "criterion 1 test", to_string(q1) + (s1 ? " (square)" : " (not a square)")});
  r.evidence.push_back({"d(0,1)^2 - 4 d(-1,1) d(1,1) is a rational square", "criterion 1 test", to_string(q2) + (s2 ? " (square)" : " (not a square)")});
  if (!s1 || !s2) {
    r.verdict = Verdict::DifferentiallyTranscendental;
    r.criterion = 1;
    return;
  }
  const bool c2_shape = !w.has(1, 1) && w.has(1, 0) && w.has(0, 1);
  if (c2_shape) {
    const FixedPointRationality fp = fixed_point_rationality(w);
    std::string found;
    for (const auto& s : fp.witnesses) found += (found.empty() ? "" : "; ") + s;
    r.evidence.push_back({"a fixed point of iota1 or iota2 is defined over Q(t)", "criterion 2 test",
                          fp.rational ? found : "no root of D or E in P1(Q(t))"});
    if (!fp.rational) {
      r.verdict = Verdict::DifferentiallyTranscendental;
      r.criterion = 2;
      return;
    }
  } else {
    r.evidence.push_back({"d(1,1) = 0 and d(1,0) d(0,1) != 0", "criterion 2 shape", "false"});
  }
  const bool c3a = !w.has(1, 1) && !w.has(1, 0) && w.has(0, 1);
  const bool c3b = !w.has(1, 1) && !w.has(0, 1) && w.has(1, 0);
  r.evidence.push_back({"d(1,1) = d(1,0) = 0 with d(0,1) != 0, or d(1,1) = d(0,1) = 0 with d(1,0) != 0",
                        "criterion 3 shape", (c3a || c3b) ? "true" : "false"});
  if (c3a || c3b) {
    r.verdict = Verdict::DifferentiallyTranscendental;
    r.criterion = 3;
    return;
  }
  r.verdict = Verdict::Inconclusive;
  r.notes.push_back("no finite group detected and no transcendence criterion applies");
}

void classify_elliptic(ClassificationReport& r, const ClassifyOptions& opts);

}  // namespace

ClassificationReport classify(const WeightTable& w, const Rational& t, const ClassifyOptions& opts) {
  ClassificationReport r;
  r.weights = w;
  r.t = t;
  r.pattern = pattern_class(w);
  r.genus = genus(w);
  r.drift = drift(w);
  r.stationary_weight = w.has(0, 0);
  if (r.stationary_weight) r.notes.push_back("d(0,0) > 0 is treated like any other weight");
  r.evidence.push_back({"step pattern", "pattern scan", pattern_name(r.pattern)});

  if (r.genus == GenusTag::Degenerate) {
    r.verdict = Verdict::DegenerateModel;
    r.notes.push_back("degenerate models reduce to one-dimensional or half-plane walks, whose series are algebraic");
    return r;
  }
  if (r.genus == GenusTag::GenusZero) {
    r.verdict = Verdict::GenusZeroOutOfScope;
    r.notes.push_back("genus-zero kernel curves are outside the scope of this classifier");
    return r;
  }
  try {
    classify_elliptic(r, opts);
  } catch (const Error& e) {
    r.verdict = Verdict::Inconclusive;
    r.criterion = 0;
    r.notes.push_back(std::string("pipeline stopped: ") + error_code_name(e.code()) + ": " + e.what());
  }
  return r;
}

namespace {

void classify_elliptic(ClassificationReport& r, const ClassifyOptions& opts) {
  const WeightTable& w = r.weights;
  const Rational& t = r.t;
  // Exact group on P1 x P1, over independent probe sets.
  for (int set = 0; set < opts.probe_sets; ++set) {
    const std::uint64_t seed = opts.seed + 7919ULL * static_cast<std::uint64_t>(set);
    const OrbitSumFormal os = orbit_sum_formal(w, opts.cap, seed, opts.probes);
    const GroupOrderResult g = group_order_p1p1(w, opts.cap, seed, opts.probes);
    if (set == 0) {
      r.group.order_p1p1 = os.order;
      r.group.orbit_sum_p1p1 = os.state;
      r.group.orbit_sum_witnesses = os.values;
      r.group.parity_consistent = g.parity_consistent;
    } else if (os.order != r.group.order_p1p1 || os.state != r.group.orbit_sum_p1p1) {
      r.group.probe_sets_agree = false;
    }
  }
  r.evidence.push_back({"group order on P1 x P1", "exact probe images",
                        r.group.order_p1p1 ? std::to_string(*r.group.order_p1p1)
                                           : "no closure within word length " + std::to_string(opts.cap)});

  // Uniformization at this t.
  const KernelContext ctx(w, t);
  const Uniformization u = uniformize(ctx);
  UniformSummary us;
  us.g2 = u.lattice.g2;
  us.g3 = u.lattice.g3;
  us.e1 = u.lattice.e1;
  us.e2 = u.lattice.e2;
  us.e3 = u.lattice.e3;
  us.omega1 = u.lattice.omega1;
  us.omega2 = u.lattice.omega2;
  us.omega3 = u.omega3;
  us.ratio = u.omega3 / u.lattice.omega2;
  us.omega3_quadrature = u.omega3_quadrature;
  us.kernel_residual = kernel_residual(ctx, u, opts.samples);
  us.a = u.bp.a;
  us.b = u.bp.b;
  r.uniform = us;
  r.evidence.push_back({"max |K(x(w),y(w))| on sampled w", "uniformization residual", fmt(us.kernel_residual)});

  const TauOrder tau = tau_order_on_curve(u, opts.cap, opts.tol, opts.confirm_tol);
  r.group.tau_confirmation = tau.confirmation;
  if (tau.ell) {
    r.group.order_on_curve = 2 * *tau.ell;
    r.evidence.push_back({"omega3/omega2 is rational", "continued fraction + shift check",
                          std::to_string(tau.k) + "/" + std::to_string(*tau.ell) + " (shift residual " +
                              fmt(tau.confirmation) + ")"});
    const OrbitSumOnCurve oc = orbit_sum_on_curve(u, *tau.ell, opts.samples, opts.orbit_tol, opts.seed);
    r.group.orbit_sum_on_curve_max = oc.max_abs_o2;
    r.group.orbit_sum_on_curve_o1_plus_o2 = oc.max_abs_o1_plus_o2;
    r.group.orbit_sum_on_curve_zero = oc.is_zero;
    r.evidence.push_back({"orbit sum on the curve vanishes", "sampled O2 over one shift orbit",
                          "max|O2| = " + fmt(oc.max_abs_o2) + ", term scale " + fmt(oc.scale)});
    r.t_specific = !r.group.order_p1p1.has_value();
    if (r.t_specific) r.notes.push_back("group is finite on the curve for this t only; verdict is specific to t and the orbit-sum test is numeric only");
    if (r.group.orbit_sum_p1p1 != TriState::Unknown &&
        (r.group.orbit_sum_p1p1 == TriState::Zero) != oc.is_zero) {
      r.verdict = Verdict::Inconclusive;
      r.notes.push_back("exact and on-curve orbit sums disagree");
      return;
    }
    r.verdict = oc.is_zero ? Verdict::Algebraic : Verdict::HolonomicNotAlgebraic;
    return;
  }
  if (r.group.order_p1p1) {
    r.verdict = Verdict::Inconclusive;
    r.notes.push_back("finite group on P1 x P1 but no rational omega3/omega2 detected on the curve");
    return;
  }
  r.evidence.push_back({"omega3/omega2 is rational", "continued fraction", "no k/ell with ell <= " + std::to_string(opts.cap) + " (ratio " + fmt(us.ratio) + ")"});
  r.notes.push_back("transcendence criteria are stated for t transcendental over Q; the rational t given is used only for the numerical pipeline");
  run_criteria(r);
}

}  // namespace
}  // namespace walkclass
