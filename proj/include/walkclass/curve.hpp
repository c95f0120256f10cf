#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "walkclass/kernel.hpp"

namespace walkclass {

// Exact coefficients of D(x) (alpha[k] multiplies x^k) and E(y) (beta[k] multiplies y^k).
struct Discriminants {
  RatPoly alpha;  // size 5
  RatPoly beta;   // size 5
};

Discriminants discriminants(const KernelContext& ctx);

// (Delta+, Delta-) at real y; their product is E(y). Throws NonRealRegion when the
// radicand B~1(y) * B~-1(y) is negative.
std::pair<double, double> delta_factors(const KernelContext& ctx, double y);

// Point of P^1(R).
struct ExtReal {
  bool infinite = false;
  double value = 0.0;
  static ExtReal inf() { return {true, 0.0}; }
  static ExtReal of(double v) { return {false, v}; }
  ProjPoint proj() const { return infinite ? ProjPoint::infinity() : ProjPoint::finite(value); }
};

std::string to_string(const ExtReal& e);

struct BranchPoints {
  std::array<ExtReal, 4> a;
  std::array<ExtReal, 4> b;
};

// Roots of a real quartic (given exactly) on P^1(R), in the cyclic order that starts at -1,
// runs up to +infinity and returns from -infinity. Throws RootsNotSeparated if the roots are
// not four distinct real points.
std::array<ExtReal, 4> ordered_quartic_roots(const RatPoly& coeffs, double dedupe_tol = 1e-7);

BranchPoints branch_points(const KernelContext& ctx, double dedupe_tol = 1e-7);

// Evaluate an exact polynomial (or its m-th derivative) in extended precision.
long double eval_poly(const RatPoly& p, long double x, int derivative = 0);

struct PathSample {
  std::vector<cplx> base;         // x = exp(2 pi i k / n) (or y for the y-paths)
  std::vector<ProjPoint> inside;  // Y- (resp. X-)
  std::vector<ProjPoint> outside; // Y+ (resp. X+)
};

PathSample unit_circle_paths(const KernelContext& ctx, int n);    // x on the unit circle
PathSample unit_circle_paths_y(const KernelContext& ctx, int n);  // y on the unit circle

}  // namespace walkclass
