#pragma once

#include <array>
#include <complex>
#include <utility>

namespace walkclass {

using cplx = std::complex<double>;

// Rectangular lattice Z*omega1 + Z*omega2 with omega1 on the positive imaginary axis,
// omega2 > 0, attached to 4u^3 - g2 u - g3 with three real roots e1 > e2 > e3.
struct Lattice {
  double g2 = 0.0;
  double g3 = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  cplx omega1;
  double omega2 = 0.0;
};

double agm(double a, double b);

// Roots of 4u^3 - g2 u - g3, descending. Throws InvalidArgument unless they are real and distinct.
std::array<double, 3> cubic_roots(double g2, double g3);

// (omega1, omega2) from the arithmetic-geometric mean.
std::pair<cplx, double> periods(double g2, double g3);

Lattice make_lattice(double g2, double g3);
// Same lattice with the roots e1 > e2 > e3 supplied by the caller (e.g. from a better-conditioned route).
Lattice make_lattice(double g2, double g3, const std::array<double, 3>& e);

struct WpValue {
  bool pole = false;  // argument is a lattice point
  cplx value;
  cplx derivative;
};

// Weierstrass p and p' by reduction to the fundamental cell and a lattice sum whose rows are
// summed in closed form (sum over n of (w + n P)^-2 = (pi/P)^2 csc^2(pi w / P)).
WpValue wp_eval(cplx z, const Lattice& lat);
cplx wp(cplx z, const Lattice& lat);        // throws PoleAtLattice
cplx wp_prime(cplx z, const Lattice& lat);  // throws PoleAtLattice

// The unique w in (0, omega2/2] with p(w) = u, for u >= e1. Throws OutOfBranch for u < e1.
double wp_inverse(double u, const Lattice& lat);

}  // namespace walkclass
