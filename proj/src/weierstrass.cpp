#include "walkclass/weierstrass.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "walkclass/error.hpp"

namespace walkclass {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

// csc^2(u) and cot(u), stable for large |Im u|.
void csc2_cot(cplx u, cplx& csc2, cplx& cot) {
  if (std::abs(u.imag()) < 1.0) {
    const cplx s = std::sin(u);
    csc2 = 1.0 / (s * s);
    cot = std::cos(u) / s;
    return;
  }
  if (u.imag() > 0.0) {
    const cplx e = std::exp(2.0 * kI * u);  // |e| < 1
    const cplx d = 1.0 - e;
    csc2 = -4.0 * e / (d * d);
    cot = -kI * (1.0 + e) / d;
  } else {
    const cplx e = std::exp(-2.0 * kI * u);
    const cplx d = 1.0 - e;
    csc2 = -4.0 * e / (d * d);
    cot = kI * (1.0 + e) / d;
  }
}

}  // namespace

double agm(double a, double b) {
  for (int it = 0; it < 64 && std::abs(a - b) > 1e-16 * std::abs(a); ++it) {
    const double m = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = m;
  }
  return 0.5 * (a + b);
}

std::array<double, 3> cubic_roots(double g2, double g3) {
  if (!(g2 > 0.0) || g2 * g2 * g2 - 27.0 * g3 * g3 <= 0.0)
    throw Error(ErrorCode::InvalidArgument, "Weierstrass cubic must have three distinct real roots");
  // u^3 + p u + q with p = -g2/4, q = -g3/4.
  const long double p = -g2 / 4.0L, q = -g3 / 4.0L;
  const long double r = 2.0L * std::sqrt(-p / 3.0L);
  long double arg = (3.0L * q / (2.0L * p)) * std::sqrt(-3.0L / p);
  arg = std::clamp(arg, -1.0L, 1.0L);
  const long double phi = std::acos(arg) / 3.0L;
  std::array<long double, 3> e{};
  for (int k = 0; k < 3; ++k) {
    long double u = r * std::cos(phi - 2.0L * std::numbers::pi_v<long double> * k / 3.0L);
    for (int it = 0; it < 3; ++it) {
      const long double f = 4.0L * u * u * u - g2 * u - g3;
      const long double fp = 12.0L * u * u - g2;
      if (fp == 0.0L) break;
      u -= f / fp;
    }
    e[static_cast<std::size_t>(k)] = u;
  }
  std::sort(e.begin(), e.end(), std::greater<>());
  return {static_cast<double>(e[0]), static_cast<double>(e[1]), static_cast<double>(e[2])};
}

namespace {

std::pair<cplx, double> periods_from_roots(const std::array<double, 3>& e) {
  const double omega2 = kPi / agm(std::sqrt(e[0] - e[2]), std::sqrt(e[0] - e[1]));
  const double w1 = kPi / agm(std::sqrt(e[0] - e[2]), std::sqrt(e[1] - e[2]));
  return {cplx(0.0, w1), omega2};
}

}  // namespace

std::pair<cplx, double> periods(double g2, double g3) { return periods_from_roots(cubic_roots(g2, g3)); }

Lattice make_lattice(double g2, double g3) { return make_lattice(g2, g3, cubic_roots(g2, g3)); }

Lattice make_lattice(double g2, double g3, const std::array<double, 3>& e) {
  if (!(e[0] > e[1] && e[1] > e[2])) throw Error(ErrorCode::InvalidArgument, "roots must be strictly decreasing");
  Lattice lat;
  lat.g2 = g2;
  lat.g3 = g3;
  lat.e1 = e[0];
  lat.e2 = e[1];
  lat.e3 = e[2];
  const auto [w1, w2] = periods_from_roots(e);
  lat.omega1 = w1;
  lat.omega2 = w2;
  return lat;
}

WpValue wp_eval(cplx z, const Lattice& lat) {
  const double w1 = lat.omega1.imag();
  const double w2 = lat.omega2;
  z -= std::round(z.real() / w2) * w2;
  z -= std::round(z.imag() / w1) * lat.omega1;
  WpValue out;
  if (std::abs(z) < 1e-300) {
    out.pole = true;
    out.value = out.derivative = cplx(std::numeric_limits<double>::infinity(), 0.0);
    return out;
  }
  // Sum in closed form along the shorter period P; rows indexed along Q decay like
  // exp(-2 pi |m| Im(Q/P)).
  const cplx P = w1 < w2 ? lat.omega1 : cplx(w2, 0.0);
  const cplx Q = w1 < w2 ? cplx(w2, 0.0) : lat.omega1;
  const double ratio = std::abs((Q / P).imag());
  const int M = static_cast<int>(std::ceil(0.5 + 40.0 / (2.0 * kPi * ratio))) + 1;
  const cplx k = kPi / P;
  cplx sum = 0.0, dsum = 0.0;
  for (int m = -M; m <= M; ++m) {
    cplx c2, ct;
    csc2_cot(k * (z + static_cast<double>(m) * Q), c2, ct);
    sum += c2;
    dsum += c2 * ct;
    if (m != 0) {
      cplx c0, ct0;
      csc2_cot(k * static_cast<double>(m) * Q, c0, ct0);
      sum -= c0;
    }
  }
  out.value = k * k * (sum - 1.0 / 3.0);
  out.derivative = -2.0 * k * k * k * dsum;
  return out;
}

cplx wp(cplx z, const Lattice& lat) {
  const WpValue v = wp_eval(z, lat);
  if (v.pole) throw Error(ErrorCode::PoleAtLattice, "p evaluated at a lattice point");
  return v.value;
}

cplx wp_prime(cplx z, const Lattice& lat) {
  const WpValue v = wp_eval(z, lat);
  if (v.pole) throw Error(ErrorCode::PoleAtLattice, "p' evaluated at a lattice point");
  return v.derivative;
}

double wp_inverse(double u, const Lattice& lat) {
  const double scale = std::max({std::abs(lat.e1), std::abs(lat.e3), 1.0});
  if (std::isnan(u) || u < lat.e1 - 1e-12 * scale)
    throw Error(ErrorCode::OutOfBranch, "wp_inverse needs u >= e1");
  if (std::isinf(u)) return 0.0;
  const double half = 0.5 * lat.omega2;
  if (u <= lat.e1) return half;

  // Integral from u to infinity of dm / sqrt(4m^3 - g2 m - g3). With m = e3 + 1/s^2 and
  // s = sin(phi)/sqrt(e1-e3) the integrand becomes 1/sqrt(1 - k^2 sin^2 phi).
  const double e13 = lat.e1 - lat.e3;
  const double k2 = (lat.e2 - lat.e3) / e13;
  const double phi_u = std::asin(std::min(1.0, std::sqrt(e13 / (u - lat.e3))));
  auto integrand = [k2](double phi) {
    const double s = std::sin(phi);
    return 1.0 / std::sqrt(1.0 - k2 * s * s);
  };
  double w = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, phi_u, 15, 1e-15) /
             std::sqrt(e13);

  // Newton polish on p(w) = u; fall back to bisection (p decreases on (0, omega2/2]).
  auto f = [&](double x) { return wp_eval(cplx(x, 0.0), lat); };
  bool ok = w > 0.0 && w <= half;
  for (int it = 0; ok && it < 4; ++it) {
    const WpValue v = f(w);
    const double d = v.derivative.real();
    if (d == 0.0) break;
    const double next = w - (v.value.real() - u) / d;
    if (!(next > 0.0 && next <= half)) {
      ok = false;
      break;
    }
    if (std::abs(next - w) < 1e-16 * half) {
      w = next;
      break;
    }
    w = next;
  }
  if (!ok || std::abs(f(w).value.real() - u) > 1e-8 * std::max(1.0, std::abs(u))) {
    double lo = 1e-300, hi = half;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (f(mid).value.real() > u) lo = mid; else hi = mid;
    }
    w = 0.5 * (lo + hi);
  }
  return w;
}

}  // namespace walkclass
