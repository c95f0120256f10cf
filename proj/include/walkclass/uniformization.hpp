#pragma once

#include <optional>
#include <utility>

#include "walkclass/curve.hpp"
#include "walkclass/weierstrass.hpp"

namespace walkclass {

// Weierstrass reduction of one discriminant quartic about its fourth branch point r4.
// Finite r4:   coordinate = r4 + Dp / (p - Dpp/6).
// Infinite r4: coordinate = (p - c2/3) / c3.
struct QuarticChart {
  bool infinite = false;
  double root = 0.0;  // r4 when finite
  double dp = 0.0;    // D'(r4)
  double dpp = 0.0;   // D''(r4)
  double c2 = 0.0;    // alpha2 when r4 is infinite
  double c3 = 0.0;    // alpha3 when r4 is infinite

  // Image of a p-value (nullopt = pole) under the chart.
  ProjPoint coordinate(std::optional<cplx> p) const;
  // Inverse: the p-value of a real point of P^1 (infinite when the point is r4).
  double p_value(const ProjPoint& x) const;
};

struct Invariants {
  double g2 = 0.0;
  double g3 = 0.0;
  QuarticChart chart;
};

Invariants invariants(const RatPoly& quartic, const ExtReal& r4);

struct Uniformization {
  Lattice lattice;
  double omega3 = 0.0;
  QuarticChart x_chart;  // from D about a4
  QuarticChart y_chart;  // from E about b4
  BranchPoints bp;
  // Diagnostics.
  double g2_from_y = 0.0;
  double g3_from_y = 0.0;
  double omega3_quadrature = 0.0;
};

Uniformization uniformize(const KernelContext& ctx);

// omega3 = 2 wp_inverse(p(X(b4))) for the double x-root X(b4) over y = b4.
double omega3(const KernelContext& ctx, const BranchPoints& bp, const Lattice& lat, const QuarticChart& xc);

// Integral of dx / sqrt(D(x)) along P^1(R) from a4 in increasing cyclic direction up to x.
double arc_integral_from_a4(const RatPoly& D, const ExtReal& a4, const ExtReal& x);

// Lambda(w) = (x(w), y(w)); y uses the b4 chart at w - omega3/2.
std::pair<ProjPoint, ProjPoint> lambda_map(cplx w, const Uniformization& u);

// z = 2 A(x) y + B(x) from p' (diagnostic; sign follows p').
cplx z_coordinate(cplx w, const Uniformization& u);

struct TauOrder {
  std::optional<int> ell;  // order of the shift on the curve
  int k = 0;               // omega3/omega2 ~ k/ell
  double ratio = 0.0;      // omega3/omega2
  double confirmation = 0.0;  // max chordal distance between Lambda(w + ell*omega3) and Lambda(w)
};

TauOrder tau_order_on_curve(const Uniformization& u, int cap = 24, double tol = 1e-9,
                            double confirm_tol = 1e-6);

}  // namespace walkclass
