#include "walkclass/rational.hpp"

#include <algorithm>
#include <cctype>

#include "walkclass/error.hpp"

namespace walkclass {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorCode::MalformedRational, "malformed rational: '" + std::string(text) + "'");
}

std::vector<Integer> positive_divisors(const Integer& n) {
  Integer m = abs(n);
  // Trial division beyond this size would be too slow; realistic weight tables never get here.
  if (mpz_sizeinbase(m.get_mpz_t(), 2) > 62)
    throw Error(ErrorCode::RootSearchLimit, "coefficient too large for rational root search");
  std::vector<std::pair<Integer, unsigned>> factors;
  for (Integer p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t n0 = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < n0; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) malformed(text);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) malformed(text);
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

bool is_rational_square(const Rational& r) {
  if (sgn(r) < 0) return false;
  if (sgn(r) == 0) return true;
  return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 && mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
}

long double to_long_double(const Rational& r) {
  const double hi = r.get_d();
  const Rational rest = r - Rational(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out = 1;
  for (unsigned k = 0; k < exponent; ++k) out *= base;
  return out;
}

void poly_trim(RatPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int poly_degree(const RatPoly& a) {
  for (int k = static_cast<int>(a.size()) - 1; k >= 0; --k)
    if (sgn(a[static_cast<std::size_t>(k)]) != 0) return k;
  return -1;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

RatPoly poly_add(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

RatPoly poly_scale(const RatPoly& a, const Rational& s) {
  RatPoly out = a;
  for (auto& c : out) c *= s;
  return out;
}

Rational poly_eval(const RatPoly& a, const Rational& x) {
  Rational acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a <- a mod b
    while (a.size() >= b.size() && !a.empty()) {
      const Rational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
      poly_trim(a);
    }
    std::swap(a, b);
  }
  if (a.empty()) return a;
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

std::vector<Rational> rational_roots(const RatPoly& p_in) {
  RatPoly p = p_in;
  poly_trim(p);
  if (p.empty()) throw Error(ErrorCode::InvalidArgument, "rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (sgn(p[low]) == 0) ++low;
  if (low > 0) {
    roots.emplace_back(0);
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  }
  const int deg = poly_degree(p);
  if (deg == 1) {
    roots.push_back(-p[0] / p[1]);
  } else if (deg == 2) {
    const Rational disc = p[1] * p[1] - 4 * p[2] * p[0];
    if (is_rational_square(disc)) {
      const Rational s(Integer(sqrt(disc.get_num())), Integer(sqrt(disc.get_den())));
      roots.push_back((-p[1] + s) / (2 * p[2]));
      roots.push_back((-p[1] - s) / (2 * p[2]));
    }
  } else if (deg > 2) {
    Integer lcm_den = 1;
    for (const auto& c : p) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ic;
    for (const auto& c : p) ic.emplace_back(Integer(c * Rational(lcm_den)));
    for (const auto& num : positive_divisors(ic.front()))
      for (const auto& den : positive_divisors(ic.back()))
        for (int sign : {1, -1}) {
          Rational cand(num * sign, den);
          cand.canonicalize();
          if (sgn(poly_eval(p, cand)) == 0) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace walkclass
