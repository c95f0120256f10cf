#include "walkclass/group.hpp"

#include <map>
#include <random>
#include <set>

#include "walkclass/error.hpp"

namespace walkclass {

namespace {

Rational eval3(const WeightTable& w, bool rows, int fixed, const Rational& v) {
  // rows: sum_k d(k-1, fixed) v^k ; otherwise sum_k d(fixed, k-1) v^k.
  Rational acc = 0, p = 1;
  for (int k = 0; k <= 2; ++k) {
    acc += (rows ? w.d(k - 1, fixed) : w.d(fixed, k - 1)) * p;
    p *= v;
  }
  return acc;
}

std::string key_of(const std::vector<RatPoint>& images) {
  std::string s;
  for (const auto& p : images) {
    s += p.x.get_str(16);
    s += ';';
    s += p.y.get_str(16);
    s += '|';
  }
  return s;
}

}  // namespace

RatPoint iota1(const WeightTable& w, const RatPoint& p) {
  const Rational den = eval3(w, true, 1, p.x) * p.y;
  const Rational num = eval3(w, true, -1, p.x);
  if (sgn(den) == 0 || sgn(num) == 0) throw Error(ErrorCode::IndeterminateAtProbe, "iota1 undefined at probe");
  return {p.x, num / den};
}

RatPoint iota2(const WeightTable& w, const RatPoint& p) {
  const Rational den = eval3(w, false, 1, p.y) * p.x;
  const Rational num = eval3(w, false, -1, p.y);
  if (sgn(den) == 0 || sgn(num) == 0) throw Error(ErrorCode::IndeterminateAtProbe, "iota2 undefined at probe");
  return {num / den, p.y};
}

std::vector<RatPoint> random_probes(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 97), den(1, 89), sign(0, 1);
  auto draw = [&] {
    Rational r(num(rng) * (sign(rng) ? -1 : 1), den(rng));
    r.canonicalize();
    return r;
  };
  std::vector<RatPoint> out;
  for (int k = 0; k < count; ++k) out.push_back({draw(), draw()});
  return out;
}

GroupOrderResult group_order_p1p1(const WeightTable& w, int cap, std::uint64_t seed, int probes) {
  if (probes < 1) throw Error(ErrorCode::InvalidArgument, "need at least one probe");
  for (int attempt = 0; attempt < 32; ++attempt) {
    GroupOrderResult out;
    out.probes = random_probes(seed + 1000003ULL * static_cast<std::uint64_t>(attempt), probes);
    try {
      std::map<std::string, std::size_t> seen;
      out.elements.push_back({{}, out.probes});
      seen.emplace(key_of(out.probes), 0);
      std::vector<std::size_t> frontier{0};
      for (int length = 1; length <= cap && !frontier.empty(); ++length) {
        std::vector<std::size_t> next;
        for (std::size_t idx : frontier) {
          for (int letter : {1, 2}) {
            const GroupElement& e = out.elements[idx];
            if (!e.word.empty() && e.word.front() == letter) continue;  // involution: no reduction gain
            GroupElement g;
            g.word = e.word;
            g.word.insert(g.word.begin(), letter);
            for (const auto& p : e.images) g.images.push_back(letter == 1 ? iota1(w, p) : iota2(w, p));
            const std::string key = key_of(g.images);
            auto it = seen.find(key);
            if (it != seen.end()) {
              if (out.elements[it->second].sign() != g.sign()) out.parity_consistent = false;
              continue;
            }
            seen.emplace(key, out.elements.size());
            next.push_back(out.elements.size());
            out.elements.push_back(std::move(g));
          }
        }
        frontier = std::move(next);
      }
      if (frontier.empty()) out.order = static_cast<int>(out.elements.size());
      return out;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::IndeterminateAtProbe) throw;
    }
  }
  throw Error(ErrorCode::IndeterminateAtProbe, "could not find probes avoiding indeterminacy");
}

const char* tri_state_name(TriState s) {
  switch (s) {
    case TriState::Zero: return "Zero";
    case TriState::NonZero: return "NonZero";
    case TriState::Unknown: return "Unknown";
  }
  return "Unknown";
}

OrbitSumFormal orbit_sum_formal(const WeightTable& w, int cap, std::uint64_t seed, int probes) {
  const GroupOrderResult g = group_order_p1p1(w, cap, seed, probes);
  OrbitSumFormal out;
  out.order = g.order;
  out.probes = g.probes;
  if (!g.order) return out;
  out.values.assign(g.probes.size(), Rational(0));
  for (const auto& e : g.elements)
    for (std::size_t k = 0; k < e.images.size(); ++k) out.values[k] += e.sign() * e.images[k].x * e.images[k].y;
  bool all_zero = true;
  for (const auto& v : out.values) all_zero = all_zero && sgn(v) == 0;
  out.state = all_zero ? TriState::Zero : TriState::NonZero;
  return out;
}

cplx b1(cplx w, const Uniformization& u) {
  const auto p = lambda_map(w, u);
  const auto q = lambda_map(w + u.omega3, u);
  return q.second.value() * (p.first.value() - q.first.value());
}

cplx b2(cplx w, const Uniformization& u) {
  const auto p = lambda_map(w, u);
  const auto m = lambda_map(-w, u);
  return p.first.value() * (p.second.value() - m.second.value());
}

OrbitSumOnCurve orbit_sum_on_curve(const Uniformization& u, int ell, int samples, double tol, std::uint64_t seed) {
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "orbit length must be positive");
  OrbitSumOnCurve out;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double bound = 1e4;
  for (int attempt = 0; attempt < 50 * samples && out.samples_used < samples; ++attempt) {
    const cplx w = unit(rng) * u.lattice.omega2 + unit(rng) * u.lattice.omega1;
    cplx o1 = 0.0, o2 = 0.0;
    double scale = 0.0;
    bool near_pole = false;
    for (int k = 0; k < ell && !near_pole; ++k) {
      const cplx wk = w + static_cast<double>(k) * u.omega3;
      for (const cplx v : {wk, -wk, wk + u.omega3}) {
        const auto p = lambda_map(v, u);
        if (p.first.modulus() > bound || p.second.modulus() > bound) near_pole = true;
      }
      if (near_pole) break;
      const cplx t1 = b1(wk, u), t2 = b2(wk, u);
      scale = std::max({scale, std::abs(t1), std::abs(t2)});
      o1 += t1;
      o2 += t2;
    }
    if (near_pole) continue;
    ++out.samples_used;
    out.scale = std::max(out.scale, scale);
    out.max_abs_o2 = std::max(out.max_abs_o2, std::abs(o2));
    out.max_abs_o1_plus_o2 = std::max(out.max_abs_o1_plus_o2, std::abs(o1 + o2));
  }
  if (out.samples_used == 0) throw Error(ErrorCode::AllSamplesNearPoles, "every orbit sample hit a pole");
  out.is_zero = out.max_abs_o2 < tol * (1.0 + out.scale);
  return out;
}

namespace {

// D(x;t) = t^2 P2(x) + t P1(x) + P0(x) for the quadratic family (t pm1, t p0 - x, t p1).
std::array<RatPoly, 3> discriminant_in_t(const RatPoly& pm1, const RatPoly& p0, const RatPoly& p1) {
  RatPoly P2 = poly_add(poly_mul(p0, p0), poly_scale(poly_mul(p1, pm1), Rational(-4)));
  RatPoly P1 = poly_scale(poly_mul(RatPoly{0, 1}, p0), Rational(-2));
  RatPoly P0{0, 0, 1};
  for (auto* p : {&P2, &P1, &P0}) p->resize(5, Rational(0));
  return {P0, P1, P2};
}

// All roots of sum_m t^m P_m(x) in P^1(Q(t)), as descriptions.
std::vector<std::string> roots_in_rational_functions(const std::array<RatPoly, 3>& P, const char* var) {
  const std::string v(var);
  std::vector<std::string> found;
  if (sgn(P[2][0]) == 0) found.push_back(v + " = 0");
  if (sgn(P[2][4]) == 0) found.push_back(v + " = infinity");
  // Any root is lambda * t^e with e in [-2, 2] since leading and constant terms are c t^2.
  for (int e = -2; e <= 2; ++e) {
    std::map<int, RatPoly> by_power;  // power of t -> polynomial in lambda
    for (int m = 0; m <= 2; ++m)
      for (int j = 0; j <= 4; ++j) {
        const Rational& c = P[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
        if (sgn(c) == 0) continue;
        RatPoly& poly = by_power[m + e * j];
        if (poly.size() < 5) poly.resize(5, Rational(0));
        poly[static_cast<std::size_t>(j)] += c;
      }
    RatPoly g;
    for (auto& [n, poly] : by_power) {
      poly_trim(poly);
      g = poly_gcd(g, poly);
    }
    if (poly_degree(g) < 1) continue;
    for (const Rational& lam : rational_roots(g))
      if (sgn(lam) != 0) found.push_back(v + " = (" + to_string(lam) + ") * t^" + std::to_string(e));
  }
  return found;
}

}  // namespace

FixedPointRationality fixed_point_rationality(const WeightTable& w) {
  RatPoly a[3], b[3];
  for (int s = -1; s <= 1; ++s)
    for (int k = 0; k <= 2; ++k) {
      a[s + 1].push_back(w.d(k - 1, s));
      b[s + 1].push_back(w.d(s, k - 1));
    }
  FixedPointRationality out;
  out.witnesses = roots_in_rational_functions(discriminant_in_t(a[0], a[1], a[2]), "x");
  for (auto& s : roots_in_rational_functions(discriminant_in_t(b[0], b[1], b[2]), "y")) out.witnesses.push_back(s);
  out.rational = !out.witnesses.empty();
  return out;
}

}  // namespace walkclass
