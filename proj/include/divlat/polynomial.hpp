// polynomial.hpp — exact integer polynomials and Sturm-sequence root
// counting, used to certify the two positivity facts behind the constants:
// the degree-12 polynomial v(t) and the degree-24 palindromic polynomial
// m(t) (t = sqrt x) have no positive real roots, so each keeps the sign of
// its value at t = 1 (v(1) = 128, m(1) = 73728) on all of (0, inf).
//
// All arithmetic is exact (GMP integers/rationals); no floating point
// enters the certification path.
#pragma once

#include <string>
#include <vector>

#include "divlat/errors.hpp"
#include "divlat/rational.hpp"

namespace divlat {

struct IntegerPolynomial {
  std::vector<mpz_class> coeffs;  // ascending degree
};

namespace poly_detail {

using RatPoly = std::vector<Rational>;  // ascending, normalized (no lead 0)

inline void strip_leading_zeros(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t i = 1; i < p.size(); ++i)
    d.push_back(p[i] * Rational(static_cast<long>(i)));
  strip_leading_zeros(d);
  return d;
}

inline Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Remainder of a by b (degree(b) >= 0, b nonzero).
inline RatPoly remainder(RatPoly a, const RatPoly& b) {
  strip_leading_zeros(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= factor * b[i];
    strip_leading_zeros(a);
  }
  return a;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
  strip_leading_zeros(a);
  strip_leading_zeros(b);
  while (!b.empty()) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Sturm chain of the square-free part of p.
inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  RatPoly g = gcd(p, derivative(p));
  RatPoly p0 = p;
  if (g.size() > 1) {
    // divide p by g exactly (long division; remainder is zero)
    RatPoly q(p.size() - g.size() + 1, Rational(0));
    RatPoly rem = p;
    while (rem.size() >= g.size() && !rem.empty()) {
      const Rational factor = rem.back() / g.back();
      const std::size_t shift = rem.size() - g.size();
      q[shift] = factor;
      for (std::size_t i = 0; i < g.size(); ++i)
        rem[shift + i] -= factor * g[i];
      strip_leading_zeros(rem);
    }
    p0 = q;
    strip_leading_zeros(p0);
  }
  std::vector<RatPoly> chain;
  chain.push_back(p0);
  RatPoly d = derivative(p0);
  if (!d.empty()) chain.push_back(d);
  while (chain.back().size() > 1) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (Rational& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

inline int sign_of(const Rational& r) { return sgn(r); }

// Sign variations of the chain at a point (zeros skipped).
inline int variations_at(const std::vector<RatPoly>& chain,
                         const Rational& x) {
  int var = 0, prev = 0;
  for (const RatPoly& p : chain) {
    const int s = sign_of(eval(p, x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Sign variations as x -> +inf (or -inf): sign of the leading term.
inline int variations_at_infinity(const std::vector<RatPoly>& chain,
                                  bool positive) {
  int var = 0, prev = 0;
  for (const RatPoly& p : chain) {
    if (p.empty()) continue;
    int s = sign_of(p.back());
    if (!positive && (p.size() - 1) % 2 == 1) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// Converts, validates, and strips the t^k factor; returns the number of
// stripped zero roots via zero_mult.
inline RatPoly prepare(const IntegerPolynomial& p, int& zero_mult) {
  RatPoly q;
  for (const mpz_class& c : p.coeffs) q.emplace_back(c);
  strip_leading_zeros(q);
  if (q.empty())
    throw Error(ErrorCode::kZeroPolynomial,
                "root counting needs a nonzero polynomial");
  zero_mult = 0;
  while (!q.empty() && q.front() == 0) {
    q.erase(q.begin());
    ++zero_mult;
  }
  return q;
}

}  // namespace poly_detail

// Exact coefficient sum p(1).
inline mpz_class eval_at_one(const IntegerPolynomial& p) {
  mpz_class s = 0;
  for (const mpz_class& c : p.coeffs) s += c;
  return s;
}

// Number of distinct real roots in (0, inf), exactly.
inline int count_positive_roots(const IntegerPolynomial& p) {
  using namespace poly_detail;
  int zero_mult = 0;
  RatPoly q = prepare(p, zero_mult);
  if (q.size() <= 1) return 0;  // constant after stripping t^k
  const std::vector<RatPoly> chain = sturm_chain(q);
  return variations_at(chain, Rational(0)) -
         variations_at_infinity(chain, /*positive=*/true);
}

// Number of distinct real roots in (a, b], exactly.  Preconditions:
// a < b and neither endpoint is a root.  A stripped root at t = 0 counts
// when 0 lies in (a, b].
inline int count_real_roots_in(const IntegerPolynomial& p, const Rational& a,
                               const Rational& b) {
  using namespace poly_detail;
  if (!(a < b))
    throw Error(ErrorCode::kOutOfRange, "interval endpoints must satisfy a < b");
  int zero_mult = 0;
  RatPoly q = prepare(p, zero_mult);
  int count = (zero_mult > 0 && a < 0 && b >= 0) ? 1 : 0;
  if (q.size() <= 1) return count;
  const std::vector<RatPoly> chain = sturm_chain(q);
  return count + variations_at(chain, a) - variations_at(chain, b);
}

// Total number of distinct real roots, exactly.
inline int count_real_roots(const IntegerPolynomial& p) {
  using namespace poly_detail;
  int zero_mult = 0;
  RatPoly q = prepare(p, zero_mult);
  int count = zero_mult > 0 ? 1 : 0;
  if (q.size() <= 1) return count;
  const std::vector<RatPoly> chain = sturm_chain(q);
  return count + variations_at_infinity(chain, /*positive=*/false) -
         variations_at_infinity(chain, /*positive=*/true);
}

// The degree-12 certificate polynomial: no real roots at all, v(1) = 128,
// hence v(t) > 0 for every real t.
inline const IntegerPolynomial& poly_v() {
  static const IntegerPolynomial v = {
      {4, -9, 24, -41, 60, 50, -48, 50, 60, -41, 24, -9, 4}};
  return v;
}

// The degree-24 palindromic certificate polynomial: no positive real roots,
// m(1) = 73728, hence m(t) > 0 for every t > 0.  The coefficient list is
// gated by the exact identity m(1) == 73728 so a transcription slip fails
// loudly at first use.
inline const IntegerPolynomial& poly_m() {
  static const IntegerPolynomial m = [] {
    IntegerPolynomial p{{2025,   9270,  14344, 8634,  27498, 15106, 9952,
                         -2034,  -9001, -9380, -12776, 1444,  -36436,
                         1444,   -12776, -9380, -9001, -2034, 9952,
                         15106,  27498, 8634,  14344, 9270,  2025}};
    if (eval_at_one(p) != 73728)
      throw Error(ErrorCode::kConfigError,
                  "certificate polynomial m fails its value gate at t = 1");
    return p;
  }();
  return m;
}

}  // namespace divlat
