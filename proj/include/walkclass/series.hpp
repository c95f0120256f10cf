#pragma once

#include <cstdint>
#include <vector>

#include "walkclass/uniformization.hpp"

namespace walkclass {

// Exact q(i,j,k): weight of k-step walks from (0,0) to (i,j) staying in the quadrant.
// Stored as integers N(i,j,k) with q = N / L^k, L the common denominator of the weights.
class SeriesTruncation {
 public:
  SeriesTruncation(const WeightTable& w, int K);

  int order() const { return K_; }
  Rational q(int i, int j, int k) const;
  Rational mass(int k) const;  // sum over (i,j) of q(i,j,k)

 private:
  int K_;
  Integer L_;
  std::vector<Integer> Lpow_;
  std::vector<std::vector<Integer>> layers_;  // layer k is (k+1) x (k+1), index i*(k+1)+j
  const Integer& count(int i, int j, int k) const;
  friend SeriesTruncation walk_dp(const WeightTable&, int);
};

SeriesTruncation walk_dp(const WeightTable& w, int K);

// Checks K Q = F1 + F2 - K(0,0)Q(0,0) + xy coefficient by coefficient in (x,y,t) through t-degree
// K-1, and at three rational points (x,y) with t specialized to ctx.t() against the exact
// truncation remainder. Returns K-1; throws IdentityViolated on any nonzero residual.
int verify_functional_equation(const KernelContext& ctx, int K);

// Numerical boundary series at the context's t, truncated at order K.
struct TruncatedValue {
  cplx value;
  double tail_bound = 0.0;
  bool outside_disk = false;
};

class BoundarySeries {
 public:
  BoundarySeries(const KernelContext& ctx, const SeriesTruncation& s);

  TruncatedValue F1(cplx x) const;  // K(x,0;t) Q(x,0;t)
  TruncatedValue F2(cplx y) const;  // K(0,y;t) Q(0,y;t)
  TruncatedValue K00Q00() const;    // K(0,0;t) Q(0,0;t)
  double q00() const { return q00_; }
  // sum_{k>K} t^k mass(k) <= mass(K) t^(K+1)/(1-t).
  double tail() const { return tail_; }

 private:
  std::vector<double> cx_, cy_;  // coefficients of Q(x,0;t) and Q(0,y;t)
  std::vector<double> kx_, ky_;  // K(x,0;t) and K(0,y;t) as polynomials
  double q00_ = 0.0;
  double k00_ = 0.0;
  double tail_ = 0.0;
};

TruncatedValue F1_trunc(const KernelContext& ctx, const SeriesTruncation& s, cplx x);
TruncatedValue F2_trunc(const KernelContext& ctx, const SeriesTruncation& s, cplx y);
double Q00(const KernelContext& ctx, const SeriesTruncation& s);

struct ContinuationResidual {
  double domain_residual = 0.0;  // max |F1(x) + F2(y) - K00 Q00 + xy| on D_{x,y}
  double shift_residual = 0.0;   // max |r_y(w+w3) - r_y(w) - b2(w)|
  int domain_samples = 0;
  int shift_samples = 0;
  double tail_bound = 0.0;
};

ContinuationResidual continuation_residual(const KernelContext& ctx, const Uniformization& u,
                                           const SeriesTruncation& s, int samples = 16);

struct CriticalPoint {
  double x0 = 1.0;
  double y0 = 1.0;
  double t0 = 1.0;
  double gradient_norm = 0.0;
  int iterations = 0;
};

CriticalPoint critical_t(const WeightTable& w);

}  // namespace walkclass
