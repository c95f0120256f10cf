#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "walkclass/uniformization.hpp"

namespace walkclass {

struct RatPoint {
  Rational x;
  Rational y;
  friend bool operator==(const RatPoint& a, const RatPoint& b) { return a.x == b.x && a.y == b.y; }
};

// iota1(x,y) = (x, A-1(x) / (A1(x) y)); iota2(x,y) = (B-1(y) / (B1(y) x), y).
// Throw IndeterminateAtProbe when the map is undefined at the point.
RatPoint iota1(const WeightTable& w, const RatPoint& p);
RatPoint iota2(const WeightTable& w, const RatPoint& p);

struct GroupElement {
  std::vector<int> word;  // letters 1 or 2, leftmost applied last
  std::vector<RatPoint> images;
  int sign() const { return word.size() % 2 == 0 ? 1 : -1; }
};

struct GroupOrderResult {
  std::optional<int> order;  // nullopt: no closure within the word-length cap
  std::vector<GroupElement> elements;
  std::vector<RatPoint> probes;
  bool parity_consistent = true;
};

std::vector<RatPoint> random_probes(std::uint64_t seed, int count);

GroupOrderResult group_order_p1p1(const WeightTable& w, int cap = 24, std::uint64_t seed = 1, int probes = 5);

enum class TriState { Zero, NonZero, Unknown };
const char* tri_state_name(TriState s);

struct OrbitSumFormal {
  TriState state = TriState::Unknown;
  std::optional<int> order;
  std::vector<RatPoint> probes;
  std::vector<Rational> values;  // orbit sum at each probe
};

OrbitSumFormal orbit_sum_formal(const WeightTable& w, int cap = 24, std::uint64_t seed = 1, int probes = 5);

// b1(w) = y(w+w3) (x(w) - x(w+w3));  b2(w) = x(w) (y(w) - y(-w)).
cplx b1(cplx w, const Uniformization& u);
cplx b2(cplx w, const Uniformization& u);

struct OrbitSumOnCurve {
  double max_abs_o2 = 0.0;
  double max_abs_o1_plus_o2 = 0.0;
  double scale = 0.0;  // largest |b2| term seen
  int samples_used = 0;
  bool is_zero = false;
};

// Zero test is relative: max|O2| < tol * (1 + scale).
OrbitSumOnCurve orbit_sum_on_curve(const Uniformization& u, int ell, int samples = 32, double tol = 1e-8,
                                   std::uint64_t seed = 7);

struct FixedPointRationality {
  bool rational = false;
  std::vector<std::string> witnesses;  // every root found in P^1(Q(t)), e.g. "x = (4) * t^-1"
};

// Whether D(x) or E(y), as quartics over Q(t) with t an indeterminate, has a root in P^1(Q(t)).
FixedPointRationality fixed_point_rationality(const WeightTable& w);

}  // namespace walkclass
