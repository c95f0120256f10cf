// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "random_models.hpp"
#include "walkclass/classify.hpp"
#include "walkclass/error.hpp"

using namespace walkclass;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << " first failure: " << what << ";";
      pass = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::pair<WeightTable, Rational>> analytic_models() {
  std::vector<std::pair<WeightTable, Rational>> out = {
      {models::nw_heavy(), Rational(24, 25)},      {models::simple_walk(), Rational(1, 2)},
      {models::kreweras(), Rational(1, 2)},    {models::gessel(), Rational(1, 3)},
      {models::fixed_point_model(), Rational(1, 2)}, {models::one_sided_model(), Rational(1, 2)},
      {models::order10(1), Rational(2, 5)},    {models::order10(2), Rational(2, 5)},
      {models::poles_example(), Rational(3, 7)}};
  std::mt19937_64 rng(2024);
  out.push_back({testing::random_elliptic(rng, true), testing::random_t(rng)});
  return out;
}

// 1. Functional equation exact through degree 11 at K = 12.
void functional_equation(Outcome& o) {
  std::mt19937_64 rng(1);
  const auto t0 = Clock::now();
  int checked = 0;
  for (int m = 0; m < 25; ++m) {
    const WeightTable w = testing::random_elliptic(rng, true);
    for (int k = 0; k < 3; ++k) {
      const Rational t = testing::random_t(rng);
      try {
        const int deg = verify_functional_equation(KernelContext(w, t), 12);
        o.require(deg == 11, "degree " + std::to_string(deg));
      } catch (const Error& e) {
        o.require(false, canonical_json(w) + " t=" + to_string(t) + ": " + e.what());
      }
      ++checked;
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 30.0, "runtime over 30 s");
  o.detail << " " << checked << " (model,t) pairs exact through t^11 in " << dt << " s";
}

// 2. Dynamic programme against exhaustive enumeration.
void brute_force(Outcome& o) {
  std::mt19937_64 rng(2);
  int compared = 0;
  for (int m = 0; m < 20; ++m) {
    const WeightTable w = testing::random_elliptic(rng, true);
    const int K = 8;
    const SeriesTruncation s = walk_dp(w, K);
    const auto paths = oracle::enumerate_paths(w, K);
    for (int k = 0; k <= K; ++k)
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) {
          const auto it = paths.find({i, j, k});
          const Rational expect = it == paths.end() ? Rational(0) : it->second;
          o.require(s.q(i, j, k) == expect, canonical_json(w) + " at (" + std::to_string(i) + "," +
                                                std::to_string(j) + "," + std::to_string(k) + ")");
          ++compared;
        }
  }
  o.detail << " " << compared << " coefficients equal over 20 models, K <= 8";
}

// 3. Uniformization residual and branch-point correspondence.
void uniformization_residual(Outcome& o) {
  double worst_k = 0.0, worst_c = 0.0;
  for (const auto& [w, t] : analytic_models()) {
    const KernelContext ctx(w, t);
    const Uniformization u = uniformize(ctx);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unit(0, 1);
    for (int k = 0; k < 64; ++k) {
      const cplx om = unit(rng) * u.lattice.omega2 + unit(rng) * u.lattice.omega1;
      const auto [x, y] = lambda_map(om, u);
      worst_k = std::max(worst_k, std::abs(ctx.kernel_proj(x, y)));
    }
    const cplx w1 = u.lattice.omega1, w2 = u.lattice.omega2;
    const std::array<std::pair<cplx, int>, 4> corr = {{{0.0, 3}, {w2 / 2.0, 0}, {w1 / 2.0, 2}, {(w1 + w2) / 2.0, 1}}};
    for (const auto& [om, idx] : corr)
      worst_c = std::max(worst_c, chordal_distance(lambda_map(om, u).first, u.bp.a[static_cast<std::size_t>(idx)].proj()));
  }
  o.require(worst_k < 1e-8, "kernel residual");
  o.require(worst_c < 1e-7, "correspondence");
  o.detail << " max |K(Lambda(w))| = " << worst_k << " over 10 models x 64 w; max chordal correspondence error = "
           << worst_c;
}

// 4. Branch-point structure.
void branch_structure(Outcome& o) {
  std::mt19937_64 rng(4);
  int pairs = 0;
  const auto key = [](const ExtReal& e) { return e.infinite ? 1e300 : (e.value >= -1 ? e.value : 2e300 + e.value); };
  const auto check = [&](const std::array<ExtReal, 4>& a, const Rational& lead, const std::string& tag) {
    bool ok = !a[0].infinite && !a[1].infinite && -1 < a[0].value && a[0].value < a[1].value && a[1].value < 1;
    for (int k = 2; k < 4; ++k) ok = ok && (a[k].infinite || std::abs(a[k].value) > 1);
    for (int k = 0; k < 3; ++k) ok = ok && key(a[k]) < key(a[k + 1]);
    if (sgn(lead) > 0) ok = ok && !a[2].infinite && !a[3].infinite && a[2].value > 0 && a[3].value > 0;
    if (sgn(lead) == 0) ok = ok && (a[2].infinite || a[3].infinite);
    if (sgn(lead) < 0) ok = ok && !a[2].infinite && !a[3].infinite && a[2].value * a[3].value < 0;
    o.require(ok, tag);
  };
  for (; pairs < 500; ++pairs) {
    const WeightTable w = testing::random_elliptic(rng, true);
    const Rational t = testing::random_t(rng);
    const KernelContext ctx(w, t);
    try {
      const BranchPoints bp = branch_points(ctx);
      const Discriminants d = discriminants(ctx);
      const std::string tag = canonical_json(w) + " t=" + to_string(t);
      check(bp.a, d.alpha[4], tag + " (a)");
      check(bp.b, d.beta[4], tag + " (b)");
    } catch (const Error& e) {
      o.require(false, e.what());
    }
  }
  const BranchPoints s = branch_points(KernelContext(models::simple_walk(), Rational(1, 2)));
  const double expect[4] = {5 - 2 * std::sqrt(6.0), 3 - 2 * std::sqrt(2.0), 3 + 2 * std::sqrt(2.0), 5 + 2 * std::sqrt(6.0)};
  double err = 0.0;
  for (int k = 0; k < 4; ++k) err = std::max(err, std::abs(s.a[k].value - expect[k]));
  o.require(err < 1e-10, "simple walk branch points");
  o.detail << " ordering and sign cases hold on " << pairs << " random pairs; simple walk max error " << err;
}

// 5. Periods against quadrature.
void period_check(Outcome& o) {
  double worst = 0.0, worst_e1 = 0.0;
  for (const auto& [w, t] : analytic_models()) {
    const Uniformization u = uniformize(KernelContext(w, t));
    const Lattice& lat = u.lattice;
    const auto [q1, q2] = oracle::periods_by_quadrature(lat.e1, lat.e2, lat.e3);
    worst = std::max({worst, std::abs(lat.omega2 - q2) / q2, std::abs(lat.omega1.imag() - q1) / q1});
    worst_e1 = std::max(worst_e1, std::abs(wp(lat.omega2 / 2.0, lat) - lat.e1));
  }
  o.require(worst < 1e-7, "period mismatch");
  o.require(worst_e1 < 1e-8, "p(omega2/2) != e1");
  o.detail << " max relative period error " << worst << "; max |p(omega2/2) - e1| = " << worst_e1;
}

// 6. Group orders, shift ratios and orbit sums, stable over three probe sets.
void groups(Outcome& o) {
  struct Case {
    const char* name;
    WeightTable w;
    Rational t;
    int order;
    std::optional<int> ell;
    std::optional<bool> zero;
  };
  const std::vector<Case> cases = {
      {"simple", models::simple_walk(), Rational(1, 2), 4, 2, false},
      {"kreweras", models::kreweras(), Rational(1, 2), 6, 3, true},
      {"gessel", models::gessel(), Rational(1, 3), 8, 4, std::nullopt},
      {"order10a", models::order10(1), Rational(2, 5), 10, 5, true},
      {"order10b", models::order10(2), Rational(2, 5), 10, 5, true},
      {"order10c", models::order10(3), Rational(2, 5), 10, 5, true}};
  for (const auto& c : cases) {
    const Uniformization u = uniformize(KernelContext(c.w, c.t));
    const TauOrder tau = tau_order_on_curve(u);
    o.require(tau.ell == c.ell, std::string(c.name) + " shift order");
    for (std::uint64_t seed : {1ULL, 1001ULL, 777777ULL}) {
      const OrbitSumFormal f = orbit_sum_formal(c.w, 24, seed, 5);
      o.require(f.order == c.order, std::string(c.name) + " order on P1 x P1");
      if (c.zero) {
        o.require((f.state == TriState::Zero) == *c.zero, std::string(c.name) + " exact orbit sum");
        if (tau.ell)
          o.require(orbit_sum_on_curve(u, *tau.ell, 32, 1e-8, seed).is_zero == *c.zero,
                    std::string(c.name) + " orbit sum on the curve");
      }
    }
    o.detail << " " << c.name << ": order " << c.order << ", omega3/omega2 = " << tau.k << "/"
             << (tau.ell ? *tau.ell : 0) << ";";
  }
  // Simple walk ratio exactly 1/2; Kreweras ratio 1/3 up to the orientation of omega3 (2/3 = -1/3 mod 1).
  const double rs = tau_order_on_curve(uniformize(KernelContext(models::simple_walk(), Rational(1, 2)))).ratio;
  const double rk = tau_order_on_curve(uniformize(KernelContext(models::kreweras(), Rational(1, 2)))).ratio;
  o.require(std::abs(rs - 0.5) < 1e-9, "simple walk ratio");
  o.require(std::min(std::abs(rk - 1.0 / 3.0), std::abs(rk - 2.0 / 3.0)) < 1e-9, "Kreweras ratio");
  o.detail << " Kreweras ratio measured " << rk << " (orientation gives 2/3, i.e. -1/3 mod 1)";
}

// 7. Transcendence criteria on the three example models.
void criteria(Outcome& o) {
  const auto c1 = classify(models::nw_heavy(), Rational(1, 2));
  const auto c2 = classify(models::fixed_point_model(), Rational(1, 2));
  const auto c3 = classify(models::one_sided_model(), Rational(1, 2));
  bool witness = false;
  for (const auto& e : c1.evidence) witness = witness || e.value.rfind("-1/3 ", 0) == 0;
  o.require(c1.verdict == Verdict::DifferentiallyTranscendental && c1.criterion == 1, "square-test model");
  o.require(witness, "square-test witness -1/3");
  o.require(c2.verdict == Verdict::DifferentiallyTranscendental && c2.criterion == 2, "fixed-point model");
  o.require(c3.verdict == Verdict::DifferentiallyTranscendental && c3.criterion == 3, "one-sided model");
  o.detail << " verdicts DT(" << c1.criterion << "), DT(" << c2.criterion << "), DT(" << c3.criterion
           << "); criterion-1 witness -1/3 " << (witness ? "found" : "missing");
}

// 8. End-to-end verdicts.
void verdicts(Outcome& o) {
  for (int m = 1; m <= 3; ++m)
    o.require(classify(models::order10(m), Rational(2, 5)).verdict == Verdict::Algebraic, "order-10 model");
  o.require(classify(models::simple_walk(), Rational(1, 2)).verdict == Verdict::HolonomicNotAlgebraic, "simple walk");
  o.require(classify(models::from_list({{1, 1, "1"}, {-1, -1, "1"}}), Rational(1, 2)).verdict ==
                Verdict::DegenerateModel,
            "diagonal");
  o.require(classify(models::from_list({{-1, 1, "1"}, {0, 1, "1"}, {1, 1, "1"}, {1, 0, "1"}, {1, -1, "1"}}),
                     Rational(1, 2))
                    .verdict == Verdict::GenusZeroOutOfScope,
            "genus zero");
  o.detail << " order-10 models Algebraic, simple walk HolonomicNotAlgebraic, diagonal DegenerateModel, "
              "missing W/SW/S GenusZeroOutOfScope";
}

// 9. Analytic continuation residuals.
void continuation(Outcome& o) {
  const auto t0 = Clock::now();
  for (const auto& [name, w, t, K] : {std::tuple{"simple", models::simple_walk(), Rational(1, 2), 40},
                                      std::tuple{"nw_heavy", models::nw_heavy(), Rational(24, 25), 60}}) {
    const KernelContext ctx(w, t);
    const Uniformization u = uniformize(ctx);
    const ContinuationResidual r = continuation_residual(ctx, u, walk_dp(w, K), 16);
    o.require(r.domain_samples >= 16 && r.shift_samples >= 16, std::string(name) + " sample count");
    o.require(r.domain_residual < 1e-6, std::string(name) + " domain identity");
    o.require(r.shift_residual < 1e-6, std::string(name) + " shift relation");
    o.detail << " " << name << ": domain " << r.domain_residual << " (" << r.domain_samples << " w), shift "
             << r.shift_residual << " (" << r.shift_samples << " w), tail bound " << r.tail_bound << ";";
  }
  const double dt = seconds_since(t0);
  o.require(dt < 60.0, "runtime over 60 s");
  o.detail << " " << dt << " s";
}

// 10. Critical value of t.
void critical(Outcome& o) {
  double worst = 0.0;
  for (const WeightTable& w : {models::simple_walk(), models::kreweras(), models::gessel(),
                               models::from_list({{1, 1, "1"}, {-1, -1, "1"}, {1, -1, "1"}, {-1, 1, "1"}})})
    worst = std::max(worst, std::abs(critical_t(w).t0 - 1.0));
  const double b = critical_t(models::from_list({{1, 0, "1/2"}, {0, 1, "1/4"}, {-1, 0, "1/8"}, {0, -1, "1/8"}})).t0;
  const double expect = 1.0 / (0.5 + std::sqrt(2.0) / 4.0);
  o.require(worst < 1e-10, "zero drift t0");
  o.require(std::abs(b - expect) < 1e-9, "biased t0");
  o.detail << " zero-drift max |t0 - 1| = " << worst << "; biased t0 = " << b << " (error " << std::abs(b - expect)
           << ")";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> all = {
      {"functional equation exact at K=12", functional_equation},
      {"series equals path enumeration", brute_force},
      {"uniformization residual and correspondence", uniformization_residual},
      {"branch point structure", branch_structure},
      {"periods against quadrature", period_check},
      {"group orders and orbit sums", groups},
      {"transcendence criteria", criteria},
      {"end-to-end verdicts", verdicts},
      {"analytic continuation residuals", continuation},
      {"critical t", critical}};
  int failures = 0;
  for (std::size_t k = 0; k < all.size(); ++k) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      all[k].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s [%.2f s]%s\n", o.pass ? "PASS" : "FAIL", k + 1, all[k].first, seconds_since(t0),
                o.detail.str().c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
