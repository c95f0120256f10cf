#include <random>

#include "doctest.h"
#include "random_models.hpp"
#include "walkclass/error.hpp"
#include "walkclass/group.hpp"

using namespace walkclass;

namespace {

Rational S(const WeightTable& w, const RatPoint& p) {
  Rational s = 0;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) {
      const Rational xi = i < 0 ? 1 / p.x : (i == 0 ? Rational(1) : p.x);
      const Rational yj = j < 0 ? 1 / p.y : (j == 0 ? Rational(1) : p.y);
      s += w.d(i, j) * xi * yj;
    }
  return s;
}

}  // namespace

TEST_CASE("involutions fix S and square to the identity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightTable w = testing::random_elliptic(rng, true);
    for (const RatPoint& p : random_probes(rng(), 4)) {
      for (auto f : {&iota1, &iota2}) {
        RatPoint q;
        try {
          q = f(w, p);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::IndeterminateAtProbe);
          continue;
        }
        CHECK(S(w, q) == S(w, p));
        CHECK(f(w, q) == p);
      }
    }
  }
  // Simple walk: iota1 is y -> 1/y.
  const RatPoint q = iota1(models::simple_walk(), {Rational(2), Rational(3)});
  CHECK(q.x == 2);
  CHECK(q.y == Rational(1, 3));
}

TEST_CASE("group orders on P1 x P1") {
  const auto order = [](const WeightTable& w, std::uint64_t seed) { return group_order_p1p1(w, 24, seed).order; };
  for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
    CHECK(order(models::simple_walk(), seed) == 4);
    CHECK(order(models::kreweras(), seed) == 6);
    CHECK(order(models::gessel(), seed) == 8);
    for (int m = 1; m <= 3; ++m) CHECK(order(models::order10(m), seed) == 10);
    CHECK(!order(models::fixed_point_model(), seed).has_value());
    CHECK(!order(models::nw_heavy(), seed).has_value());
  }
  const GroupOrderResult g = group_order_p1p1(models::gessel());
  CHECK(g.parity_consistent);
  CHECK(g.elements.size() == 8);
}

TEST_CASE("formal orbit sum") {
  const OrbitSumFormal s = orbit_sum_formal(models::simple_walk());
  CHECK(s.state == TriState::NonZero);
  // Simple walk: the orbit sum is (x - 1/x)(y - 1/y).
  for (std::size_t k = 0; k < s.probes.size(); ++k) {
    const Rational x = s.probes[k].x, y = s.probes[k].y;
    CHECK(s.values[k] == (x - 1 / x) * (y - 1 / y));
  }
  CHECK(orbit_sum_formal(models::kreweras()).state == TriState::Zero);
  CHECK(orbit_sum_formal(models::gessel()).state == TriState::Zero);
  for (int m = 1; m <= 3; ++m) CHECK(orbit_sum_formal(models::order10(m)).state == TriState::Zero);
  CHECK(orbit_sum_formal(models::fixed_point_model()).state == TriState::Unknown);
}

TEST_CASE("orbit sum on the curve") {
  const auto run = [](const WeightTable& w, const Rational& t, int ell) {
    return orbit_sum_on_curve(uniformize(KernelContext(w, t)), ell);
  };
  const OrbitSumOnCurve s = run(models::simple_walk(), Rational(1, 2), 2);
  CHECK(!s.is_zero);
  CHECK(s.samples_used > 0);
  const OrbitSumOnCurve k = run(models::kreweras(), Rational(1, 2), 3);
  CHECK(k.is_zero);
  CHECK(run(models::gessel(), Rational(1, 3), 4).is_zero);
  for (int m = 1; m <= 3; ++m) CHECK(run(models::order10(m), Rational(2, 5), 5).is_zero);
  // Both orbit sums cancel: O1 + O2 = 0.
  CHECK(s.max_abs_o1_plus_o2 < 1e-8 * (1 + s.scale));
  CHECK_THROWS_AS(run(models::kreweras(), Rational(1, 2), 0), Error);
}

TEST_CASE("b1 + b2 equals xy minus its shift") {
  for (const auto& [w, t] : {std::pair{models::nw_heavy(), Rational(24, 25)}, {models::simple_walk(), Rational(1, 2)}}) {
    const Uniformization u = uniformize(KernelContext(w, t));
    for (const cplx om : {cplx(0.3, 0.2), cplx(1.1, 0.9), cplx(2.5, -0.4)}) {
      const auto p = lambda_map(om, u), r = lambda_map(om + u.omega3, u), m = lambda_map(-om, u);
      // The shift keeps y from the reflected point: y(w + w3) = y(-w).
      CHECK(std::abs(r.second.value() - m.second.value()) < 1e-8 * (1 + std::abs(m.second.value())));
      const cplx lhs = b1(om, u) + b2(om, u);
      const cplx rhs = p.first.value() * p.second.value() - r.first.value() * r.second.value();
      CHECK(std::abs(lhs - rhs) < 1e-8 * (1 + std::abs(rhs)));
    }
  }
}

TEST_CASE("rationality of fixed points") {
  const FixedPointRationality m = fixed_point_rationality(models::fixed_point_model());
  CHECK(!m.rational);
  CHECK(m.witnesses.empty());
  // D has the root x = 4/t (and then also x = 0).
  const WeightTable eng = models::from_list({{-1, 1, "1/8"}, {-1, -1, "1/8"}, {0, 1, "1/16"}, {0, -1, "1/16"},
                                             {0, 0, "1/8"}, {-1, 0, "1/4"}, {1, 0, "1/4"}});
  const FixedPointRationality e = fixed_point_rationality(eng);
  CHECK(e.rational);
  bool found = false;
  for (const auto& s : e.witnesses) found = found || s == "x = (4) * t^-1";
  CHECK(found);
}
