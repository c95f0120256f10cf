#include "walkclass/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "walkclass/error.hpp"

namespace walkclass {

ProjPoint ProjPoint::make(cplx a, cplx b) {
  const double m = std::max(std::abs(a), std::abs(b));
  if (!(m > 0.0) || !std::isfinite(m))
    throw Error(ErrorCode::InvalidArgument, "projective point needs finite, not-both-zero coordinates");
  ProjPoint p;
  p.c0 = a / m;
  p.c1 = b / m;
  return p;
}

cplx ProjPoint::value() const {
  if (is_infinite()) return {std::numeric_limits<double>::infinity(), 0.0};
  return c0 / c1;
}

double ProjPoint::modulus() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return std::abs(c0) / std::abs(c1);
}

double chordal_distance(const ProjPoint& a, const ProjPoint& b) {
  const double num = std::abs(a.c0 * b.c1 - a.c1 * b.c0);
  const double na = std::sqrt(std::norm(a.c0) + std::norm(a.c1));
  const double nb = std::sqrt(std::norm(b.c0) + std::norm(b.c1));
  return num / (na * nb);
}

KernelContext::KernelContext(WeightTable w, Rational t) : w_(std::move(w)), t_(std::move(t)) {
  t_.canonicalize();
  if (!(sgn(t_) > 0 && t_ < 1)) throw Error(ErrorCode::InvalidArgument, "t must lie in (0,1)");
  t_d_ = t_.get_d();
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) dd_[WeightTable::index(i, j)] = w_.d(i, j).get_d();
  for (int j = -1; j <= 1; ++j) {
    RatPoly& p = a_tilde_[static_cast<std::size_t>(j + 1)];
    for (int k = 0; k <= 2; ++k) p.push_back(w_.d(k - 1, j));
  }
  for (int i = -1; i <= 1; ++i) {
    RatPoly& p = b_tilde_[static_cast<std::size_t>(i + 1)];
    for (int k = 0; k <= 2; ++k) p.push_back(w_.d(i, k - 1));
  }
}

cplx KernelContext::kernel(cplx x, cplx y) const {
  cplx sum = 0.0;
  const cplx xp[3] = {1.0, x, x * x};
  const cplx yp[3] = {1.0, y, y * y};
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) sum += d(i, j) * xp[i + 1] * yp[j + 1];
  return x * y - t_d_ * sum;
}

Rational KernelContext::kernel(const Rational& x, const Rational& y) const {
  Rational sum = 0;
  const Rational xp[3] = {1, x, x * x};
  const Rational yp[3] = {1, y, y * y};
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j) sum += w_.d(i, j) * xp[i + 1] * yp[j + 1];
  return x * y - t_ * sum;
}

cplx KernelContext::kernel_proj(const ProjPoint& x, const ProjPoint& y) const {
  const cplx xp[3] = {x.c1 * x.c1, x.c0 * x.c1, x.c0 * x.c0};
  const cplx yp[3] = {y.c1 * y.c1, y.c0 * y.c1, y.c0 * y.c0};
  cplx sum = 0.0;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) sum += d(i - 1, j - 1) * xp[i] * yp[j];
  return x.c0 * x.c1 * y.c0 * y.c1 - t_d_ * sum;
}

std::array<cplx, 3> KernelContext::y_quadratic(const ProjPoint& x) const {
  const cplx xp[3] = {x.c1 * x.c1, x.c0 * x.c1, x.c0 * x.c0};
  std::array<cplx, 3> h{};
  for (int j = -1; j <= 1; ++j)
    for (int k = 0; k <= 2; ++k) h[static_cast<std::size_t>(j + 1)] += d(k - 1, j) * xp[k];
  return {t_d_ * h[2], t_d_ * h[1] - x.c0 * x.c1, t_d_ * h[0]};
}

std::array<cplx, 3> KernelContext::x_quadratic(const ProjPoint& y) const {
  const cplx yp[3] = {y.c1 * y.c1, y.c0 * y.c1, y.c0 * y.c0};
  std::array<cplx, 3> h{};
  for (int i = -1; i <= 1; ++i)
    for (int k = 0; k <= 2; ++k) h[static_cast<std::size_t>(i + 1)] += d(i, k - 1) * yp[k];
  return {t_d_ * h[2], t_d_ * h[1] - y.c0 * y.c1, t_d_ * h[0]};
}

std::pair<ProjPoint, ProjPoint> quadratic_roots(const std::array<cplx, 3>& abc) {
  const auto [a, b, c] = abc;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale == 0.0) throw Error(ErrorCode::DegenerateFiber, "kernel vanishes identically on this fiber");
  cplx s = std::sqrt(b * b - 4.0 * a * c);
  if (std::real(std::conj(b) * s) < 0.0) s = -s;
  const cplx q = -0.5 * (b + s);
  if (std::abs(q) <= 1e-300 * scale) {
    // b = 0 and ac = 0: a double root at 0 or at infinity.
    const ProjPoint r = std::abs(a) >= std::abs(c) ? ProjPoint::make(0.0, 1.0) : ProjPoint::infinity();
    return {r, r};
  }
  return {ProjPoint::make(q, a), ProjPoint::make(c, q)};
}

namespace {

std::pair<ProjPoint, ProjPoint> order_by_modulus(std::pair<ProjPoint, ProjPoint> r) {
  if (r.first.modulus() > r.second.modulus()) std::swap(r.first, r.second);
  return r;
}

template <class QuadFn>
std::pair<ProjPoint, ProjPoint> roots_with_continuity(const ProjPoint& p, QuadFn quad) {
  const double m = p.modulus();
  if (std::abs(m - 1.0) < 1e-12) return order_by_modulus(quadratic_roots(quad(p)));
  const cplx dir = (m == 0.0 || !std::isfinite(m)) ? cplx(1.0, 0.0) : p.value() / m;
  auto current = order_by_modulus(quadratic_roots(quad(ProjPoint::finite(dir))));
  const double target = std::isfinite(m) ? std::max(m, 1e-12) : 1e12;
  const int steps = 256;
  auto track = [&](const ProjPoint& q) {
    auto next = quadratic_roots(quad(q));
    const double keep = chordal_distance(next.first, current.first) + chordal_distance(next.second, current.second);
    const double flip = chordal_distance(next.first, current.second) + chordal_distance(next.second, current.first);
    if (flip < keep) std::swap(next.first, next.second);
    current = next;
  };
  for (int k = 1; k <= steps; ++k) {
    const double r = std::exp(std::log(target) * k / steps);
    track(ProjPoint::finite(dir * r));
  }
  if (m == 0.0 || !std::isfinite(m)) track(p);
  return current;
}

}  // namespace

std::pair<ProjPoint, ProjPoint> roots_in_y(const KernelContext& ctx, const ProjPoint& x) {
  return roots_with_continuity(x, [&](const ProjPoint& q) { return ctx.y_quadratic(q); });
}

std::pair<ProjPoint, ProjPoint> roots_in_x(const KernelContext& ctx, const ProjPoint& y) {
  return roots_with_continuity(y, [&](const ProjPoint& q) { return ctx.x_quadratic(q); });
}

GenusTag genus(const WeightTable& w) {
  switch (pattern_class(w).tag) {
    case PatternClass::Tag::Degenerate: return GenusTag::Degenerate;
    case PatternClass::Tag::GenusZeroConfig: return GenusTag::GenusZero;
    case PatternClass::Tag::NonSingular: return GenusTag::Elliptic;
  }
  return GenusTag::Degenerate;
}

const char* genus_name(GenusTag g) {
  switch (g) {
    case GenusTag::Elliptic: return "Elliptic";
    case GenusTag::GenusZero: return "GenusZero";
    case GenusTag::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

std::vector<LabeledPoint> poles_of_xy(const KernelContext& ctx) {
  std::vector<LabeledPoint> out;
  const ProjPoint inf = ProjPoint::infinity();
  const auto p = quadratic_roots(ctx.y_quadratic(inf));
  out.push_back({"P1", inf, p.first});
  out.push_back({"P2", inf, p.second});
  const auto q = quadratic_roots(ctx.x_quadratic(inf));
  out.push_back({"Q1", q.first, inf});
  out.push_back({"Q2", q.second, inf});
  for (int k = 0; k < 2; ++k) {
    const ProjPoint& xq = k == 0 ? q.first : q.second;
    const auto ys = quadratic_roots(ctx.y_quadratic(xq));
    // The swap partner of y = infinity is the root farther from infinity.
    const ProjPoint other =
        chordal_distance(ys.first, inf) >= chordal_distance(ys.second, inf) ? ys.first : ys.second;
    out.push_back({k == 0 ? "iota1(Q1)" : "iota1(Q2)", xq, other});
  }
  return out;
}

}  // namespace walkclass
