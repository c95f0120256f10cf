#include "walkclass/curve.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <functional>
#include <sstream>

#include "walkclass/error.hpp"

namespace walkclass {

namespace {

// D = B^2 - 4AC for the quadratic (A,B,C) = (t p1, t p0 - u, t pm1) in one variable u.
RatPoly discriminant_of(const Rational& t, const RatPoly& pm1, const RatPoly& p0, const RatPoly& p1) {
  const RatPoly A = poly_scale(p1, t);
  RatPoly B = poly_scale(p0, t);
  B[1] -= 1;
  const RatPoly C = poly_scale(pm1, t);
  RatPoly D = poly_add(poly_mul(B, B), poly_scale(poly_mul(A, C), Rational(-4)));
  D.resize(5, Rational(0));
  return D;
}

double cyclic_key_major(const ExtReal& e) {
  if (e.infinite) return 1.0;
  return e.value >= -1.0 ? 0.0 : 2.0;
}

}  // namespace

Discriminants discriminants(const KernelContext& ctx) {
  Discriminants out;
  out.alpha = discriminant_of(ctx.t(), ctx.a_tilde(-1), ctx.a_tilde(0), ctx.a_tilde(1));
  out.beta = discriminant_of(ctx.t(), ctx.b_tilde(-1), ctx.b_tilde(0), ctx.b_tilde(1));
  return out;
}

std::pair<double, double> delta_factors(const KernelContext& ctx, double y) {
  auto ev = [&](const RatPoly& p) { return static_cast<double>(eval_poly(p, y)); };
  const double rad = ev(ctx.b_tilde(1)) * ev(ctx.b_tilde(-1));
  if (rad < 0.0) throw Error(ErrorCode::NonRealRegion, "B~1(y) B~-1(y) < 0: Delta factors are not real");
  const double t = ctx.t_value();
  const double base = t * ev(ctx.b_tilde(0)) - y;
  const double root = 2.0 * t * std::sqrt(rad);
  return {base + root, base - root};
}

std::string to_string(const ExtReal& e) {
  if (e.infinite) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << e.value;
  return os.str();
}

long double eval_poly(const RatPoly& p, long double x, int derivative) {
  long double acc = 0.0L;
  for (int k = static_cast<int>(p.size()) - 1; k >= derivative; --k) {
    long double c = to_long_double(p[static_cast<std::size_t>(k)]);
    for (int m = 0; m < derivative; ++m) c *= static_cast<long double>(k - m);
    acc = acc * x + c;
  }
  return acc;
}

std::array<ExtReal, 4> ordered_quartic_roots(const RatPoly& coeffs_in, double dedupe_tol) {
  RatPoly coeffs = coeffs_in;
  coeffs.resize(5, Rational(0));
  std::vector<ExtReal> roots;
  int deg = 4;
  if (sgn(coeffs[4]) == 0) {
    roots.push_back(ExtReal::inf());
    deg = 3;
    if (sgn(coeffs[3]) == 0) throw Error(ErrorCode::RootsNotSeparated, "discriminant has a multiple root at infinity");
  }
  // Companion matrix of the monic polynomial.
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  const double lead = coeffs[static_cast<std::size_t>(deg)].get_d();
  for (int k = 0; k < deg; ++k) comp(0, k) = -coeffs[static_cast<std::size_t>(deg - 1 - k)].get_d() / lead;
  for (int k = 1; k < deg; ++k) comp(k, k - 1) = 1.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  const auto ev = solver.eigenvalues();
  for (int k = 0; k < deg; ++k) {
    const std::complex<double> z = ev(k);
    if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z)))
      throw Error(ErrorCode::RootsNotSeparated, "discriminant has non-real roots");
    long double x = z.real();
    for (int it = 0; it < 3; ++it) {
      const long double f = eval_poly(coeffs, x, 0);
      const long double fp = eval_poly(coeffs, x, 1);
      if (fp == 0.0L) break;
      x -= f / fp;
    }
    roots.push_back(ExtReal::of(static_cast<double>(x)));
  }
  std::sort(roots.begin(), roots.end(), [](const ExtReal& p, const ExtReal& q) {
    const double kp = cyclic_key_major(p), kq = cyclic_key_major(q);
    if (kp != kq) return kp < kq;
    return p.value < q.value;
  });
  for (std::size_t k = 1; k < roots.size(); ++k) {
    const ExtReal& p = roots[k - 1];
    const ExtReal& q = roots[k];
    if (!p.infinite && !q.infinite &&
        std::abs(p.value - q.value) <= dedupe_tol * (1.0 + std::max(std::abs(p.value), std::abs(q.value))))
      throw Error(ErrorCode::RootsNotSeparated, "discriminant roots are not separated");
  }
  return {roots[0], roots[1], roots[2], roots[3]};
}

BranchPoints branch_points(const KernelContext& ctx, double dedupe_tol) {
  if (genus(ctx.weights()) != GenusTag::Elliptic)
    throw Error(ErrorCode::PreconditionFailed, "branch points require an elliptic model");
  const Discriminants disc = discriminants(ctx);
  return {ordered_quartic_roots(disc.alpha, dedupe_tol), ordered_quartic_roots(disc.beta, dedupe_tol)};
}

namespace {

PathSample circle_paths(int n, const std::function<std::array<cplx, 3>(const ProjPoint&)>& quad) {
  if (n <= 0) throw Error(ErrorCode::InvalidArgument, "path sample count must be positive");
  PathSample out;
  for (int k = 0; k < n; ++k) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    auto r = quadratic_roots(quad(ProjPoint::finite(z)));
    if (r.first.modulus() > r.second.modulus()) std::swap(r.first, r.second);
    out.base.push_back(z);
    out.inside.push_back(r.first);
    out.outside.push_back(r.second);
  }
  return out;
}

}  // namespace

PathSample unit_circle_paths(const KernelContext& ctx, int n) {
  return circle_paths(n, [&](const ProjPoint& p) { return ctx.y_quadratic(p); });
}

PathSample unit_circle_paths_y(const KernelContext& ctx, int n) {
  return circle_paths(n, [&](const ProjPoint& p) { return ctx.x_quadratic(p); });
}

}  // namespace walkclass
