#include "oracles.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <vector>

namespace walkclass::oracle {

namespace {

struct Enumerator {
  int K;
  std::vector<std::pair<std::pair<int, int>, Integer>> steps;
  std::map<std::tuple<int, int, int>, Integer> counts;

  void walk(int i, int j, int k, const Integer& weight) {
    counts[{i, j, k}] += weight;
    if (k == K) return;
    for (const auto& [s, m] : steps) {
      const int ni = i + s.first, nj = j + s.second;
      if (ni < 0 || nj < 0) continue;
      walk(ni, nj, k + 1, weight * m);
    }
  }
};

}  // namespace

std::map<std::tuple<int, int, int>, Rational> enumerate_paths(const WeightTable& w, int K) {
  Integer L = 1;
  for (const auto& d : w.entries()) L = lcm(L, Integer(d.get_den()));
  Enumerator e{K, {}, {}};
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      if (w.has(i, j)) e.steps.push_back({{i, j}, Integer(w.d(i, j) * L)});
  e.walk(0, 0, 0, Integer(1));
  std::map<std::tuple<int, int, int>, Rational> out;
  for (const auto& [key, c] : e.counts) {
    Integer den = 1;
    for (int s = 0; s < std::get<2>(key); ++s) den *= L;
    Rational q(c, den);
    q.canonicalize();
    out[key] = q;
  }
  return out;
}

std::pair<double, double> periods_by_quadrature(double e1, double e2, double e3) {
  // u = e1 + s^2 and u = e3 - s^2 remove the endpoint singularities.
  boost::math::quadrature::exp_sinh<double> integrator;
  const auto w2 = [&](double s) { return 1.0 / std::sqrt((s * s + e1 - e2) * (s * s + e1 - e3)); };
  const auto w1 = [&](double s) { return 1.0 / std::sqrt((s * s + e1 - e3) * (s * s + e2 - e3)); };
  const double omega2 = 2.0 * integrator.integrate(w2, 1e-15);
  const double omega1 = 2.0 * integrator.integrate(w1, 1e-15);
  return {omega1, omega2};
}

std::complex<double> wp_laurent(std::complex<double> z, double g2, double g3) {
  const std::complex<double> z2 = z * z;
  const double c2 = g2 / 20.0, c3 = g3 / 28.0;
  // c_k for k >= 4 from the recursion c_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m}.
  std::vector<double> c = {0.0, 0.0, c2, c3};
  for (int k = 4; k <= 8; ++k) {
    double s = 0.0;
    for (int m = 2; m <= k - 2; ++m) s += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
    c.push_back(3.0 * s / ((2.0 * k + 1.0) * (k - 3.0)));
  }
  std::complex<double> acc = 1.0 / z2, p = z2;
  for (int k = 2; k <= 8; ++k) {
    acc += c[static_cast<std::size_t>(k)] * p;
    p *= z2;
  }
  return acc;
}

std::vector<double> real_roots(const std::vector<double>& coeffs, double lo, double hi, int grid) {
  const auto f = [&](double x) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  std::vector<double> roots;
  double x0 = lo, f0 = f(lo);
  for (int k = 1; k <= grid; ++k) {
    const double x1 = lo + (hi - lo) * k / grid, f1 = f(x1);
    if (f0 == 0.0) roots.push_back(x0);
    else if (f0 * f1 < 0.0) {
      double a = x0, b = x1, fa = f0;
      for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b), fm = f(m);
        if ((fm < 0) == (fa < 0)) { a = m; fa = fm; } else { b = m; }
      }
      roots.push_back(0.5 * (a + b));
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

namespace {

template <class F>
double golden_min(F f, double a, double b) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200; ++it) {
    if (fc < fd) { b = d; d = c; fd = fc; c = b - g * (b - a); fc = f(c); }
    else { a = c; c = d; fc = fd; d = a + g * (b - a); fd = f(d); }
  }
  return 0.5 * (a + b);
}

}  // namespace

double min_jump_polynomial(const WeightTable& w) {
  const auto S = [&](double u, double v) {
    double s = 0.0;
    for (int i = -1; i <= 1; ++i)
      for (int j = -1; j <= 1; ++j) s += w.d(i, j).get_d() * std::exp(i * u + j * v);
    return s;
  };
  // S is convex in (log x, log y); minimize the inner problem for each outer value.
  const auto inner = [&](double u) { return S(u, golden_min([&](double v) { return S(u, v); }, -20, 20)); };
  const double u = golden_min(inner, -20, 20);
  return inner(u);
}

}  // namespace walkclass::oracle
