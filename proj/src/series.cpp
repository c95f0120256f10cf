#include "walkclass/series.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "walkclass/error.hpp"
#include "walkclass/group.hpp"

namespace walkclass {

SeriesTruncation::SeriesTruncation(const WeightTable& w, int K) : K_(K), L_(1) {
  if (K < 0) throw Error(ErrorCode::InvalidArgument, "truncation order must be nonnegative");
  for (const auto& d : w.entries()) mpz_lcm(L_.get_mpz_t(), L_.get_mpz_t(), d.get_den_mpz_t());
  Lpow_.push_back(1);
  for (int k = 1; k <= K + 1; ++k) Lpow_.push_back(Lpow_.back() * L_);
}

const Integer& SeriesTruncation::count(int i, int j, int k) const {
  return layers_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i * (k + 1) + j)];
}

Rational SeriesTruncation::q(int i, int j, int k) const {
  if (k < 0 || k > K_) throw Error(ErrorCode::InvalidArgument, "q index beyond truncation order");
  if (i < 0 || j < 0 || i > k || j > k) return 0;
  Rational r(count(i, j, k), Lpow_[static_cast<std::size_t>(k)]);
  r.canonicalize();
  return r;
}

Rational SeriesTruncation::mass(int k) const {
  Integer total = 0;
  for (const auto& n : layers_.at(static_cast<std::size_t>(k))) total += n;
  Rational r(total, Lpow_[static_cast<std::size_t>(k)]);
  r.canonicalize();
  return r;
}

SeriesTruncation walk_dp(const WeightTable& w, int K) {
  SeriesTruncation s(w, K);
  std::vector<std::tuple<int, int, Integer>> steps;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      if (w.has(i, j)) steps.emplace_back(i, j, Integer(w.d(i, j) * Rational(s.L_)));
  s.layers_.push_back({Integer(1)});
  for (int k = 1; k <= K; ++k) {
    std::vector<Integer> layer(static_cast<std::size_t>((k + 1) * (k + 1)), Integer(0));
    const auto& prev = s.layers_.back();
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        const Integer& n = prev[static_cast<std::size_t>(i * k + j)];
        if (n == 0) continue;
        for (const auto& [di, dj, c] : steps) {
          const int a = i + di, b = j + dj;
          if (a < 0 || b < 0) continue;
          layer[static_cast<std::size_t>(a * (k + 1) + b)] += c * n;
        }
      }
    s.layers_.push_back(std::move(layer));
  }
  return s;
}

namespace {

// Dense polynomial in (t, x, y).
struct TriPoly {
  int nk = 0, na = 0, nb = 0;
  std::vector<Rational> c;
  TriPoly(int k, int a, int b) : nk(k), na(a), nb(b), c(static_cast<std::size_t>(k * a * b), Rational(0)) {}
  Rational& at(int k, int a, int b) { return c[static_cast<std::size_t>((k * na + a) * nb + b)]; }
  const Rational& at(int k, int a, int b) const { return c[static_cast<std::size_t>((k * na + a) * nb + b)]; }
};

TriPoly mul(const TriPoly& p, const TriPoly& q) {
  TriPoly r(p.nk + q.nk - 1, p.na + q.na - 1, p.nb + q.nb - 1);
  for (int k = 0; k < p.nk; ++k)
    for (int a = 0; a < p.na; ++a)
      for (int b = 0; b < p.nb; ++b) {
        const Rational& u = p.at(k, a, b);
        if (sgn(u) == 0) continue;
        for (int k2 = 0; k2 < q.nk; ++k2)
          for (int a2 = 0; a2 < q.na; ++a2)
            for (int b2 = 0; b2 < q.nb; ++b2) {
              const Rational& v = q.at(k2, a2, b2);
              if (sgn(v) != 0) r.at(k + k2, a + a2, b + b2) += u * v;
            }
      }
  return r;
}

// Keep only terms with x-degree 0 (drop_x) and/or y-degree 0 (drop_y).
TriPoly restrict(const TriPoly& p, bool x_zero, bool y_zero) {
  TriPoly r = p;
  for (int k = 0; k < p.nk; ++k)
    for (int a = 0; a < p.na; ++a)
      for (int b = 0; b < p.nb; ++b)
        if ((x_zero && a != 0) || (y_zero && b != 0)) r.at(k, a, b) = 0;
  return r;
}

Rational series_value(const SeriesTruncation& s, const Rational& t, const Rational& x, const Rational& y,
                      int max_k) {
  Rational total = 0, tk = 1;
  for (int k = 0; k <= max_k; ++k) {
    Rational layer = 0, xi = 1;
    for (int i = 0; i <= k; ++i) {
      Rational yj = 1;
      for (int j = 0; j <= k; ++j) {
        const Rational q = s.q(i, j, k);
        if (sgn(q) != 0) layer += q * xi * yj;
        yj *= y;
      }
      xi *= x;
    }
    total += tk * layer;
    tk *= t;
  }
  return total;
}

}  // namespace

int verify_functional_equation(const KernelContext& ctx, int K) {
  if (K < 2) throw Error(ErrorCode::InvalidArgument, "functional equation check needs K >= 2");
  const SeriesTruncation s = walk_dp(ctx.weights(), K + 1);

  // Kernel xy - t sum d(i,j) x^(i+1) y^(j+1), built from the section polynomials.
  TriPoly kern(2, 3, 3);
  kern.at(0, 1, 1) += 1;
  for (int j = -1; j <= 1; ++j)
    for (int a = 0; a <= 2; ++a) kern.at(1, a, j + 1) -= ctx.a_tilde(j)[static_cast<std::size_t>(a)];

  TriPoly Q(K + 1, K + 1, K + 1);
  for (int k = 0; k <= K; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) Q.at(k, i, j) = s.q(i, j, k);

  const TriPoly KQ = mul(kern, Q);
  const TriPoly F1 = mul(restrict(kern, false, true), restrict(Q, false, true));
  const TriPoly F2 = mul(restrict(kern, true, false), restrict(Q, true, false));
  const TriPoly F0 = mul(restrict(kern, true, true), restrict(Q, true, true));
  for (int k = 0; k <= K - 1; ++k)
    for (int a = 0; a < KQ.na; ++a)
      for (int b = 0; b < KQ.nb; ++b) {
        Rational r = KQ.at(k, a, b);
        if (a < F1.na && b < F1.nb) r -= F1.at(k, a, b);
        if (a < F2.na && b < F2.nb) r -= F2.at(k, a, b);
        if (a < F0.na && b < F0.nb) r += F0.at(k, a, b);
        if (k == 0 && a == 1 && b == 1) r -= 1;
        if (sgn(r) != 0)
          throw Error(ErrorCode::IdentityViolated, "functional equation fails at t^" + std::to_string(k) + " x^" +
                                                       std::to_string(a) + " y^" + std::to_string(b));
      }

  // Specialized t at rational points: the truncated identity leaves exactly -t^(K+1) xy [t^(K+1)]Q.
  const Rational& t = ctx.t();
  for (const auto& p : random_probes(0x5eed ^ static_cast<std::uint64_t>(K), 3)) {
    const Rational Qxy = series_value(s, t, p.x, p.y, K);
    const Rational Qx0 = series_value(s, t, p.x, 0, K);
    const Rational Q0y = series_value(s, t, 0, p.y, K);
    const Rational Q00v = series_value(s, t, 0, 0, K);
    const Rational lhs = ctx.kernel(p.x, p.y) * Qxy - ctx.kernel(p.x, Rational(0)) * Qx0 -
                         ctx.kernel(Rational(0), p.y) * Q0y + ctx.kernel(Rational(0), Rational(0)) * Q00v -
                         p.x * p.y;
    Rational next = 0, xi = 1;
    for (int i = 0; i <= K + 1; ++i) {
      Rational yj = 1;
      for (int j = 0; j <= K + 1; ++j) {
        next += s.q(i, j, K + 1) * xi * yj;
        yj *= p.y;
      }
      xi *= p.x;
    }
    const Rational expected = -pow(t, static_cast<unsigned>(K + 1)) * p.x * p.y * next;
    if (lhs != expected)
      throw Error(ErrorCode::IdentityViolated, "functional equation fails at a specialized point");
  }
  return K - 1;
}

BoundarySeries::BoundarySeries(const KernelContext& ctx, const SeriesTruncation& s) {
  const Rational& t = ctx.t();
  const int K = s.order();
  std::vector<Rational> ax(static_cast<std::size_t>(K + 1), Rational(0)), ay = ax;
  Rational tk = 1;
  for (int k = 0; k <= K; ++k) {
    for (int i = 0; i <= k; ++i) {
      ax[static_cast<std::size_t>(i)] += tk * s.q(i, 0, k);
      ay[static_cast<std::size_t>(i)] += tk * s.q(0, i, k);
    }
    tk *= t;
  }
  for (int i = 0; i <= K; ++i) {
    cx_.push_back(ax[static_cast<std::size_t>(i)].get_d());
    cy_.push_back(ay[static_cast<std::size_t>(i)].get_d());
  }
  q00_ = ax[0].get_d();
  // K(x,0;t) = -t x A-1(x) = -t sum_i d(i,-1) x^(i+1), and symmetrically in y.
  for (int k = 0; k <= 2; ++k) {
    kx_.push_back(-Rational(t * ctx.a_tilde(-1)[static_cast<std::size_t>(k)]).get_d());
    ky_.push_back(-Rational(t * ctx.b_tilde(-1)[static_cast<std::size_t>(k)]).get_d());
  }
  k00_ = kx_[0];
  tail_ = Rational(s.mass(K) * tk / (1 - t)).get_d();
}

namespace {

cplx horner(const std::vector<double>& c, cplx z) {
  cplx acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

TruncatedValue BoundarySeries::F1(cplx x) const {
  const cplx k = horner(kx_, x);
  return {k * horner(cx_, x), std::abs(k) * tail_, std::abs(x) > 1.0};
}

TruncatedValue BoundarySeries::F2(cplx y) const {
  const cplx k = horner(ky_, y);
  return {k * horner(cy_, y), std::abs(k) * tail_, std::abs(y) > 1.0};
}

TruncatedValue BoundarySeries::K00Q00() const { return {k00_ * q00_, std::abs(k00_) * tail_, false}; }

TruncatedValue F1_trunc(const KernelContext& ctx, const SeriesTruncation& s, cplx x) {
  return BoundarySeries(ctx, s).F1(x);
}

TruncatedValue F2_trunc(const KernelContext& ctx, const SeriesTruncation& s, cplx y) {
  return BoundarySeries(ctx, s).F2(y);
}

double Q00(const KernelContext& ctx, const SeriesTruncation& s) { return BoundarySeries(ctx, s).q00(); }

ContinuationResidual continuation_residual(const KernelContext& ctx, const Uniformization& u,
                                           const SeriesTruncation& s, int samples) {
  const BoundarySeries bs(ctx, s);
  ContinuationResidual out;
  out.tail_bound = bs.tail();
  const double w2 = u.lattice.omega2;
  const double w1 = u.lattice.omega1.imag();
  const double big = 1e3;

  struct Pt {
    cplx w;
    cplx x, y;
    bool in_x, in_y;
  };
  auto eval = [&](cplx w) {
    const auto p = lambda_map(w, u);
    Pt r{w, p.first.value(), p.second.value(), p.first.modulus() < 1.0, p.second.modulus() < 1.0};
    return r;
  };
  auto usable = [&](const Pt& p) {
    return (p.in_x || p.in_y) && std::abs(p.x) < big && std::abs(p.y) < big;
  };
  auto r_y = [&](const Pt& p) -> cplx {
    if (p.in_y) return bs.F2(p.y).value;
    return -bs.F1(p.x).value + bs.K00Q00().value - p.x * p.y;
  };

  std::vector<Pt> domain, shift;
  const int lines = 8;
  const int steps = 512;
  const double h = w2 / steps;
  for (int l = 0; l < lines; ++l) {
    const double im = w1 * (l + 0.5) / lines;
    // Connected component of {|x|<1 or |y|<1} on this line that contains w2/2.
    std::vector<Pt> run;
    int lo = 0, hi = 0;
    while (lo > -steps && usable(eval(cplx(w2 / 2 + (lo - 1) * h, im)))) --lo;
    while (hi < steps && usable(eval(cplx(w2 / 2 + (hi + 1) * h, im)))) ++hi;
    for (int k = lo; k <= hi; ++k) run.push_back(eval(cplx(w2 / 2 + k * h, im)));
    for (const auto& p : run)
      if (p.in_x && p.in_y) domain.push_back(p);
    const int shift_steps = static_cast<int>(std::ceil(u.omega3 / h));
    for (int k = lo; k + shift_steps <= hi; ++k) shift.push_back(run[static_cast<std::size_t>(k - lo)]);
  }
  if (domain.empty()) throw Error(ErrorCode::NoSampleInDomain, "no sample with |x|<1 and |y|<1 found");

  auto pick = [&](const std::vector<Pt>& v) {
    std::vector<Pt> out_v;
    const int n = std::min<int>(samples, static_cast<int>(v.size()));
    for (int k = 0; k < n; ++k)
      out_v.push_back(v[static_cast<std::size_t>((static_cast<long>(k) * static_cast<long>(v.size())) / n)]);
    return out_v;
  };
  for (const auto& p : pick(domain)) {
    const cplx r = bs.F1(p.x).value + bs.F2(p.y).value - bs.K00Q00().value + p.x * p.y;
    out.domain_residual = std::max(out.domain_residual, std::abs(r));
    ++out.domain_samples;
  }
  for (const auto& p : pick(shift)) {
    const Pt q = eval(p.w + u.omega3);
    if (!usable(q)) continue;
    const cplx r = r_y(q) - r_y(p) - b2(p.w, u);
    out.shift_residual = std::max(out.shift_residual, std::abs(r));
    ++out.shift_samples;
  }
  return out;
}

CriticalPoint critical_t(const WeightTable& w) {
  if (pattern_class(w).tag != PatternClass::Tag::NonSingular)
    throw Error(ErrorCode::PreconditionFailed, "critical point requires a non-singular, non-genus-zero model");
  struct Term {
    int i, j;
    double d;
  };
  std::vector<Term> terms;
  for (int i = -1; i <= 1; ++i)
    for (int j = -1; j <= 1; ++j)
      if (w.has(i, j)) terms.push_back({i, j, w.d(i, j).get_d()});
  // f(u,v) = S(e^u, e^v) is convex; Newton with backtracking.
  auto S = [&](double u, double v) {
    double s = 0.0;
    for (const auto& tm : terms) s += tm.d * std::exp(tm.i * u + tm.j * v);
    return s;
  };
  CriticalPoint out;
  double u = 0.0, v = 0.0;
  for (int it = 0; it < 100; ++it) {
    double gu = 0, gv = 0, huu = 0, huv = 0, hvv = 0;
    for (const auto& tm : terms) {
      const double e = tm.d * std::exp(tm.i * u + tm.j * v);
      gu += tm.i * e;
      gv += tm.j * e;
      huu += tm.i * tm.i * e;
      huv += tm.i * tm.j * e;
      hvv += tm.j * tm.j * e;
    }
    out.iterations = it;
    out.gradient_norm = std::hypot(gu, gv);
    if (out.gradient_norm == 0.0) break;
    const double det = huu * hvv - huv * huv;
    if (!(det > 0.0)) throw Error(ErrorCode::NonConvergence, "singular Hessian in critical point search");
    const double du = -(hvv * gu - huv * gv) / det;
    const double dv = -(-huv * gu + huu * gv) / det;
    // Newton decrement; below this the iterate is at the minimizer to double precision.
    if (-(gu * du + gv * dv) < 1e-30) break;
    double step = 1.0;
    const double f0 = S(u, v);
    while (step > 1e-12 && S(u + step * du, v + step * dv) > f0 + 1e-4 * step * (gu * du + gv * dv)) step *= 0.5;
    if (step <= 1e-12) break;  // no further decrease representable
    const double u_next = u + step * du, v_next = v + step * dv;
    if (u_next == u && v_next == v) break;
    u = u_next;
    v = v_next;
    if (it == 99) throw Error(ErrorCode::NonConvergence, "critical point search did not converge");
  }
  out.x0 = std::exp(u);
  out.y0 = std::exp(v);
  out.t0 = 1.0 / S(u, v);
  return out;
}

}  // namespace walkclass
