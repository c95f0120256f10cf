#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "random_models.hpp"
#include "walkclass/error.hpp"
#include "walkclass/series.hpp"

using namespace walkclass;
using doctest::Approx;

namespace {

Integer binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer catalan(int n) { return binom(2 * n, n) / (n + 1); }

}  // namespace

TEST_CASE("small exact values") {
  const SeriesTruncation k = walk_dp(models::kreweras(), 6);
  CHECK(k.q(0, 0, 3) == Rational(2, 27));
  CHECK(k.q(0, 0, 0) == 1);
  CHECK(k.mass(0) == 1);
  const SeriesTruncation s = walk_dp(models::simple_walk(), 4);
  CHECK(s.q(0, 0, 2) == Rational(1, 8));
  CHECK(s.q(1, 0, 1) == Rational(1, 4));
  CHECK(s.q(0, 0, 1) == 0);
  CHECK(s.q(5, 0, 4) == 0);
}

TEST_CASE("excursion counts match closed forms") {
  const SeriesTruncation s = walk_dp(models::simple_walk(), 24);
  for (int n = 0; n <= 12; ++n) {
    Rational expect(catalan(n) * catalan(n + 1), Integer(1) << (4 * n));
    expect.canonicalize();
    CHECK(s.q(0, 0, 2 * n) == expect);
  }
  const SeriesTruncation k = walk_dp(models::kreweras(), 24);
  for (int n = 0; n <= 8; ++n) {
    Integer p4 = 1, p27 = 1;
    for (int i = 0; i < n; ++i) {
      p4 *= 4;
      p27 *= 27;
    }
    Rational expect(p4 * binom(3 * n, n), Integer((n + 1) * (2 * n + 1)) * p27);
    expect.canonicalize();
    CHECK(k.q(0, 0, 3 * n) == expect);
  }
  const SeriesTruncation g = walk_dp(models::gessel(), 24);
  Rational count = 1;
  for (int n = 0; n <= 12; ++n) {
    Rational expect = count;
    for (int i = 0; i < 2 * n; ++i) expect /= 4;
    CHECK(g.q(0, 0, 2 * n) == expect);
    count *= Rational(16) * (Rational(5, 6) + n) * (Rational(1, 2) + n) / ((Rational(5, 3) + n) * (2 + n));
  }
}

TEST_CASE("dynamic programme equals path enumeration") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 8; ++trial) {
    const WeightTable w = testing::random_elliptic(rng, true);
    const int K = 6;
    const SeriesTruncation s = walk_dp(w, K);
    const auto paths = oracle::enumerate_paths(w, K);
    for (int k = 0; k <= K; ++k)
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= k; ++j) {
          const auto it = paths.find({i, j, k});
          CHECK(s.q(i, j, k) == (it == paths.end() ? Rational(0) : it->second));
        }
  }
}

TEST_CASE("functional equation holds exactly") {
  std::mt19937_64 rng(43);
  CHECK(verify_functional_equation(KernelContext(models::simple_walk(), Rational(1, 2)), 12) == 11);
  for (int trial = 0; trial < 5; ++trial) {
    const KernelContext ctx(testing::random_elliptic(rng, true), testing::random_t(rng));
    CHECK(verify_functional_equation(ctx, 10) == 9);
  }
}

TEST_CASE("numerical boundary series") {
  const KernelContext ctx(models::kreweras(), Rational(1, 3));
  const SeriesTruncation s = walk_dp(ctx.weights(), 40);
  double q00 = 0.0, tp = 1.0;
  for (int k = 0; k <= 40; ++k, tp /= 3.0) q00 += s.q(0, 0, k).get_d() * tp;
  CHECK(Q00(ctx, s) == Approx(q00).epsilon(1e-14));
  const BoundarySeries bs(ctx, s);
  CHECK(bs.tail() > 0.0);
  CHECK(bs.tail() < 1e-15);
  // Inside the disk the functional equation holds on the curve up to the tail.
  const auto [ym, yp] = roots_in_y(ctx, ProjPoint::finite(cplx(0.3, 0.4)));
  const cplx x(0.3, 0.4), y = ym.value();
  const cplx lhs = F1_trunc(ctx, s, x).value + F2_trunc(ctx, s, y).value - bs.K00Q00().value + x * y;
  CHECK(std::abs(lhs) < 1e-12);
  CHECK(F1_trunc(ctx, s, cplx(2.0, 0.0)).outside_disk);
  (void)yp;
}

TEST_CASE("analytic continuation residuals for the simple walk") {
  const KernelContext ctx(models::simple_walk(), Rational(1, 2));
  const Uniformization u = uniformize(ctx);
  const ContinuationResidual r = continuation_residual(ctx, u, walk_dp(ctx.weights(), 40), 16);
  CHECK(r.domain_samples >= 16);
  CHECK(r.shift_samples >= 16);
  CHECK(r.domain_residual < 1e-6);
  CHECK(r.shift_residual < 1e-6);
}

TEST_CASE("critical value of t") {
  for (const WeightTable& w : {models::simple_walk(), models::kreweras(), models::gessel()})
    CHECK(std::abs(critical_t(w).t0 - 1.0) < 1e-10);
  const CriticalPoint b = critical_t(models::from_list({{1, 0, "1/2"}, {0, 1, "1/4"}, {-1, 0, "1/8"}, {0, -1, "1/8"}}));
  CHECK(std::abs(b.t0 - 1.0 / (0.5 + std::sqrt(2.0) / 4.0)) < 1e-9);
  CHECK(b.x0 == Approx(0.5));
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightTable w = testing::random_elliptic(rng, true);
    CHECK(critical_t(w).t0 == Approx(1.0 / oracle::min_jump_polynomial(w)).epsilon(1e-8));
  }
}
