#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "walkclass/model.hpp"

namespace walkclass {

using cplx = std::complex<double>;

// Point of P^1(C) as [c0:c1], scaled so that max(|c0|,|c1|) = 1. [1:0] is infinity.
struct ProjPoint {
  cplx c0{0.0, 0.0};
  cplx c1{1.0, 0.0};

  static ProjPoint make(cplx a, cplx b);
  static ProjPoint finite(cplx v) { return make(v, 1.0); }
  static ProjPoint infinity() { return make(1.0, 0.0); }

  bool is_infinite() const { return c1 == cplx(0.0, 0.0); }
  // c0/c1; infinite points give a complex infinity.
  cplx value() const;
  // |c0/c1|, +inf for [1:0].
  double modulus() const;
};

// Chordal distance on the Riemann sphere, in [0,1].
double chordal_distance(const ProjPoint& a, const ProjPoint& b);

// A weight table together with a rational t in (0,1).
class KernelContext {
 public:
  KernelContext(WeightTable w, Rational t);

  const WeightTable& weights() const { return w_; }
  const Rational& t() const { return t_; }
  double t_value() const { return t_d_; }

  // Coefficients of x^k (k=0..2) in x*A_j(x); i.e. d(k-1, j).
  const RatPoly& a_tilde(int j) const { return a_tilde_[static_cast<std::size_t>(j + 1)]; }
  // Coefficients of y^k (k=0..2) in y*B_i(y); i.e. d(i, k-1).
  const RatPoly& b_tilde(int i) const { return b_tilde_[static_cast<std::size_t>(i + 1)]; }

  // K(x,y;t) = xy(1 - t S(x,y)).
  cplx kernel(cplx x, cplx y) const;
  Rational kernel(const Rational& x, const Rational& y) const;
  // Homogeneous bidegree-(2,2) kernel at canonical representatives.
  cplx kernel_proj(const ProjPoint& x, const ProjPoint& y) const;

  // (a,b,c) with the kernel proportional to a*y0^2 + b*y0*y1 + c*y1^2 over the fiber x.
  std::array<cplx, 3> y_quadratic(const ProjPoint& x) const;
  std::array<cplx, 3> x_quadratic(const ProjPoint& y) const;

  double d(int i, int j) const { return dd_[WeightTable::index(i, j)]; }

 private:
  WeightTable w_;
  Rational t_;
  double t_d_;
  std::array<double, 9> dd_{};
  std::array<RatPoly, 3> a_tilde_;
  std::array<RatPoly, 3> b_tilde_;
};

// Roots of a*u0^2 + b*u0*u1 + c*u1^2 on P^1. Throws DegenerateFiber when a=b=c=0.
std::pair<ProjPoint, ProjPoint> quadratic_roots(const std::array<cplx, 3>& abc);

// (Y-, Y+) over x. On |x|=1 the labels follow |Y-| < 1 < |Y+|; elsewhere they are
// carried by continuity along the ray from x/|x|.
std::pair<ProjPoint, ProjPoint> roots_in_y(const KernelContext& ctx, const ProjPoint& x);
std::pair<ProjPoint, ProjPoint> roots_in_x(const KernelContext& ctx, const ProjPoint& y);

enum class GenusTag { Elliptic, GenusZero, Degenerate };
GenusTag genus(const WeightTable& w);
const char* genus_name(GenusTag g);

struct LabeledPoint {
  std::string label;
  ProjPoint x;
  ProjPoint y;
};

// P1,P2 (x = infinity), Q1,Q2 (y = infinity), and the images of Q1,Q2 under the y-swap.
std::vector<LabeledPoint> poles_of_xy(const KernelContext& ctx);

}  // namespace walkclass
