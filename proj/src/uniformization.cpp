#include "walkclass/uniformization.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "walkclass/error.hpp"

namespace walkclass {

ProjPoint QuarticChart::coordinate(std::optional<cplx> p) const {
  if (infinite) {
    if (!p) return ProjPoint::infinity();
    return ProjPoint::make(*p - c2 / 3.0, c3);
  }
  if (!p) return ProjPoint::finite(root);
  const cplx v = *p - dpp / 6.0;
  return ProjPoint::make(root * v + dp, v);
}

double QuarticChart::p_value(const ProjPoint& x) const {
  const double x0 = x.c0.real(), x1 = x.c1.real();
  if (infinite) {
    if (x1 == 0.0) return std::numeric_limits<double>::infinity();
    return c3 * x0 / x1 + c2 / 3.0;
  }
  const double den = x0 - root * x1;
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  return dpp / 6.0 + dp * x1 / den;
}

Invariants invariants(const RatPoly& quartic, const ExtReal& r4) {
  Invariants out;
  RatPoly q = quartic;
  q.resize(5, Rational(0));
  if (r4.infinite) {
    if (sgn(q[4]) != 0) throw Error(ErrorCode::InvalidArgument, "infinite branch point needs a zero quartic coefficient");
    const Rational& a0 = q[0];
    const Rational& a1 = q[1];
    const Rational& a2 = q[2];
    const Rational& a3 = q[3];
    const Rational g2 = Rational(4, 3) * a2 * a2 - 4 * a1 * a3;
    const Rational g3 = Rational(-8, 27) * a2 * a2 * a2 + Rational(4, 3) * a1 * a2 * a3 - 4 * a0 * a3 * a3;
    out.g2 = g2.get_d();
    out.g3 = g3.get_d();
    out.chart.infinite = true;
    out.chart.c2 = a2.get_d();
    out.chart.c3 = a3.get_d();
    return out;
  }
  const long double a = r4.value;
  const long double d1 = eval_poly(q, a, 1), d2 = eval_poly(q, a, 2), d3 = eval_poly(q, a, 3), d4 = eval_poly(q, a, 4);
  out.g2 = static_cast<double>(d2 * d2 / 3.0L - 2.0L * d1 * d3 / 3.0L);
  out.g3 = static_cast<double>(-d2 * d2 * d2 / 27.0L + d1 * d2 * d3 / 9.0L - d1 * d1 * d4 / 6.0L);
  out.chart.root = r4.value;
  out.chart.dp = static_cast<double>(d1);
  out.chart.dpp = static_cast<double>(d2);
  return out;
}

namespace {

double angle_of(const ExtReal& x) { return x.infinite ? std::numbers::pi : 2.0 * std::atan(x.value); }

// (1 + x^2) / (2 sqrt(D(x))) at x = tan(theta/2), evaluated through 1/x when |x| > 1.
double angular_integrand(const RatPoly& D, double theta) {
  const long double half = theta / 2.0L;
  const long double c = std::cos(half), s = std::sin(half);
  if (std::abs(s) <= std::abs(c)) {
    const long double x = s / c;
    const long double v = eval_poly(D, x);
    return static_cast<double>((1.0L + x * x) / (2.0L * std::sqrt(std::abs(v))));
  }
  const long double w = c / s;
  long double v = 0.0L;  // w^4 D(1/w)
  for (std::size_t k = 0; k < D.size(); ++k) {
    long double term = to_long_double(D[k]);
    for (std::size_t m = 0; m < 4 - k; ++m) term *= w;
    v += term;
  }
  return static_cast<double>((1.0L + w * w) / (2.0L * std::sqrt(std::abs(v))));
}

}  // namespace

double arc_integral_from_a4(const RatPoly& D_in, const ExtReal& a4, const ExtReal& x) {
  RatPoly D = D_in;
  D.resize(5, Rational(0));
  const double th0 = angle_of(a4);
  double span = angle_of(x) - th0;
  while (span <= 0.0) span += 2.0 * std::numbers::pi;
  while (span > 2.0 * std::numbers::pi) span -= 2.0 * std::numbers::pi;
  // theta = th0 + span s^2 removes the square-root singularity at a4.
  auto g = [&](double s) { return angular_integrand(D, th0 + span * s * s) * 2.0 * span * s; };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0.0, 1.0, 15, 1e-14);
}

namespace {

// Double root of a*u0^2 + b*u0*u1 + c*u1^2 (b^2 = 4ac): [-b : 2a] or, equivalently, [2c : -b].
ProjPoint double_root(const std::array<cplx, 3>& abc) {
  if (std::abs(abc[0]) >= std::abs(abc[2])) return ProjPoint::make(-abc[1], 2.0 * abc[0]);
  return ProjPoint::make(2.0 * abc[2], -abc[1]);
}

}  // namespace

double omega3(const KernelContext& ctx, const BranchPoints& bp, const Lattice& lat, const QuarticChart& xc) {
  const ProjPoint yb = bp.b[3].proj();
  const ProjPoint X = double_root(ctx.x_quadratic(yb));
  const double u = xc.p_value(X);
  return 2.0 * wp_inverse(u, lat);
}

Uniformization uniformize(const KernelContext& ctx) {
  Uniformization out;
  out.bp = branch_points(ctx);
  const Discriminants disc = discriminants(ctx);
  const Invariants ix = invariants(disc.alpha, out.bp.a[3]);
  const Invariants iy = invariants(disc.beta, out.bp.b[3]);
  out.lattice = make_lattice(ix.g2, ix.g3);
  // e1, e2, e3 are the chart images of a1, a2, a3. The quartic roots stay well separated when two
  // e's nearly collide (small t), so prefer them when both routes roughly agree.
  const std::array<double, 3> from_bp = {ix.chart.p_value(out.bp.a[0].proj()), ix.chart.p_value(out.bp.a[1].proj()),
                                         ix.chart.p_value(out.bp.a[2].proj())};
  const double scale = 1.0 + std::abs(out.lattice.e1) + std::abs(out.lattice.e3);
  if (std::abs(from_bp[0] - out.lattice.e1) < 1e-6 * scale && std::abs(from_bp[1] - out.lattice.e2) < 1e-6 * scale &&
      std::abs(from_bp[2] - out.lattice.e3) < 1e-6 * scale && from_bp[0] > from_bp[1] && from_bp[1] > from_bp[2])
    out.lattice = make_lattice(ix.g2, ix.g3, from_bp);
  out.x_chart = ix.chart;
  out.y_chart = iy.chart;
  out.g2_from_y = iy.g2;
  out.g3_from_y = iy.g3;
  out.omega3 = omega3(ctx, out.bp, out.lattice, out.x_chart);

  const ProjPoint X = double_root(ctx.x_quadratic(out.bp.b[3].proj()));
  const ExtReal xr = X.is_infinite() ? ExtReal::inf() : ExtReal::of(X.value().real());
  out.omega3_quadrature = arc_integral_from_a4(disc.alpha, out.bp.a[3], xr);
  return out;
}

std::pair<ProjPoint, ProjPoint> lambda_map(cplx w, const Uniformization& u) {
  const WpValue px = wp_eval(w, u.lattice);
  const WpValue py = wp_eval(w - 0.5 * u.omega3, u.lattice);
  const ProjPoint x = u.x_chart.coordinate(px.pole ? std::nullopt : std::optional<cplx>(px.value));
  const ProjPoint y = u.y_chart.coordinate(py.pole ? std::nullopt : std::optional<cplx>(py.value));
  return {x, y};
}

cplx z_coordinate(cplx w, const Uniformization& u) {
  const WpValue p = wp_eval(w, u.lattice);
  if (p.pole) return {std::numeric_limits<double>::infinity(), 0.0};
  const QuarticChart& c = u.x_chart;
  if (c.infinite) return -p.derivative / (2.0 * c.c3);
  const cplx v = p.value - c.dpp / 6.0;
  return c.dp * p.derivative / (2.0 * v * v);
}

TauOrder tau_order_on_curve(const Uniformization& u, int cap, double tol, double confirm_tol) {
  TauOrder out;
  out.ratio = u.omega3 / u.lattice.omega2;
  // Continued-fraction convergents h/k of the ratio.
  double x = out.ratio;
  long long h_prev = 1, h = static_cast<long long>(std::floor(x));
  long long k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int it = 0; it < 64 && k <= cap; ++it) {
    if (std::abs(out.ratio - static_cast<double>(h) / static_cast<double>(k)) < tol && k >= 1) {
      double worst = 0.0;
      for (int s = 0; s < 8; ++s) {
        const cplx w(u.lattice.omega2 * (0.07 + 0.113 * s), u.lattice.omega1.imag() * (0.05 + 0.119 * s));
        const auto a = lambda_map(w, u);
        const auto b = lambda_map(w + static_cast<double>(k) * u.omega3, u);
        worst = std::max({worst, chordal_distance(a.first, b.first), chordal_distance(a.second, b.second)});
      }
      out.confirmation = worst;
      if (worst < confirm_tol) {
        out.ell = static_cast<int>(k);
        out.k = static_cast<int>(h);
      }
      return out;
    }
    if (frac < 1e-15) break;
    x = 1.0 / frac;
    const long long a = static_cast<long long>(std::floor(x));
    frac = x - std::floor(x);
    const long long h_next = a * h + h_prev, k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return out;
}

}  // namespace walkclass
