// generating_function.hpp — convex generating functions f(x) for the 11
// divergences, with hand-derived closed-form first and second derivatives,
// plus the f-divergence evaluation sum_i q_i f(p_i / q_i).
//
// Every f is normalized (f(1) = 0) and convex on (0, inf).  The square-root
// mean based measures share the kernel s = sqrt((x+1)/2), a = (sqrt x + 1)/2;
// their f values use the cancellation-free form s - a = (sqrt x - 1)^2 /
// (4 (s + a)) so f underflows gracefully (no catastrophic cancellation)
// near x = 1.
#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "divlat/distribution.hpp"
#include "divlat/errors.hpp"
#include "divlat/measures.hpp"
#include "divlat/summation.hpp"

namespace divlat {

struct GeneratingFunction {
  std::function<real(real)> value;
  std::function<real(real)> d1;
  std::function<real(real)> d2;
};

namespace gf_detail {

// Shared kernel for the N2-based measures.  n2_d1 / n2_d2 are the first and
// second derivatives of x |-> s(x) * a(x).
inline real kernel_s(real x) { return std::sqrt((x + 1.0L) / 2.0L); }
inline real kernel_a(real x) { return (std::sqrt(x) + 1.0L) / 2.0L; }

inline real n2_d1(real x) {
  const real s = kernel_s(x);
  const real a = kernel_a(x);
  return a / (4.0L * s) + s / (4.0L * std::sqrt(x));
}

inline real n2_d2(real x) {
  const real s = kernel_s(x);
  const real a = kernel_a(x);
  const real rx = std::sqrt(x);
  return -a / (16.0L * s * s * s) + 1.0L / (8.0L * s * rx) -
         s / (8.0L * x * rx);
}

// s - a without cancellation: s^2 - a^2 = (sqrt x - 1)^2 / 4.
inline real s_minus_a(real x) {
  const real d = std::sqrt(x) - 1.0L;
  return d * d / (4.0L * (kernel_s(x) + kernel_a(x)));
}

}  // namespace gf_detail

inline GeneratingFunction generating_function(MeasureId id) {
  using std::log;
  using std::sqrt;
  namespace d = gf_detail;
  switch (id) {
    case MeasureId::Delta:
      return {
          [](real x) { return (x - 1.0L) * (x - 1.0L) / (x + 1.0L); },
          [](real x) {
            const real t = x + 1.0L;
            return (x - 1.0L) * (x + 3.0L) / (t * t);
          },
          [](real x) {
            const real t = x + 1.0L;
            return 8.0L / (t * t * t);
          }};
    case MeasureId::I:
      return {
          [](real x) {
            const real m = (x + 1.0L) / 2.0L;
            return (x / 2.0L) * log(x) - m * log(m);
          },
          [](real x) { return log(2.0L * x / (x + 1.0L)) / 2.0L; },
          [](real x) { return 1.0L / (2.0L * x * (x + 1.0L)); }};
    case MeasureId::M1:
      return {
          [](real x) { return d::kernel_a(x) * d::s_minus_a(x); },
          [](real x) { return d::n2_d1(x) - d::kernel_a(x) / (2.0L * sqrt(x)); },
          [](real x) { return d::n2_d2(x) + 1.0L / (8.0L * x * sqrt(x)); }};
    case MeasureId::M2:
      return {
          [](real x) {
            const real t = sqrt(x) - 1.0L;
            return d::kernel_a(x) * d::s_minus_a(x) + t * t / 4.0L;
          },
          [](real x) { return d::n2_d1(x) - 1.0L / (2.0L * sqrt(x)); },
          [](real x) { return d::n2_d2(x) + 1.0L / (4.0L * x * sqrt(x)); }};
    case MeasureId::h:
      return {
          [](real x) {
            const real t = sqrt(x) - 1.0L;
            return t * t / 2.0L;
          },
          [](real x) {
            const real r = sqrt(x);
            return (r - 1.0L) / (2.0L * r);
          },
          [](real x) { return 1.0L / (4.0L * x * sqrt(x)); }};
    case MeasureId::M3:
      return {
          [](real x) { return d::kernel_s(x) * d::s_minus_a(x); },
          [](real x) { return 0.5L - d::n2_d1(x); },
          [](real x) { return -d::n2_d2(x); }};
    case MeasureId::J:
      return {
          [](real x) { return (x - 1.0L) * log(x); },
          [](real x) { return log(x) + 1.0L - 1.0L / x; },
          [](real x) { return (x + 1.0L) / (x * x); }};
    case MeasureId::T:
      return {
          [](real x) {
            const real m = (x + 1.0L) / 2.0L;
            return m * (log(m) - log(x) / 2.0L);
          },
          [](real x) {
            return log((x + 1.0L) / (2.0L * sqrt(x))) / 2.0L + 0.5L -
                   (x + 1.0L) / (4.0L * x);
          },
          [](real x) { return (x * x + 1.0L) / (4.0L * x * x * (x + 1.0L)); }};
    case MeasureId::K0:
      return {
          [](real x) {
            const real t = x - 1.0L;
            return t * t / sqrt(x);
          },
          [](real x) {
            return (x - 1.0L) * (3.0L * x + 1.0L) / (2.0L * x * sqrt(x));
          },
          [](real x) {
            return (3.0L * x * x + 2.0L * x + 3.0L) /
                   (4.0L * x * x * sqrt(x));
          }};
    case MeasureId::Psi:
      return {
          [](real x) {
            const real t = x - 1.0L;
            return t * t * (x + 1.0L) / x;
          },
          [](real x) { return 2.0L * x - 1.0L - 1.0L / (x * x); },
          [](real x) { return 2.0L + 2.0L / (x * x * x); }};
    case MeasureId::F:
      return {
          [](real x) {
            const real t = (x - 1.0L) * (x + 1.0L);
            return t * t / (2.0L * x * sqrt(x));
          },
          [](real x) {
            const real rx = sqrt(x);
            return 5.0L * x * rx / 4.0L - 1.0L / (2.0L * rx) -
                   3.0L / (4.0L * x * x * rx);
          },
          [](real x) {
            const real x2 = x * x;
            return (15.0L * x2 * x2 + 2.0L * x2 + 15.0L) /
                   (8.0L * x2 * x * sqrt(x));
          }};
    default:
      throw Error(ErrorCode::kNotADivergence,
                  std::string(measure_name(id)) +
                      " is a mean sum; it has no normalized generating "
                      "function");
  }
}

inline real eval_csiszar(const GeneratingFunction& f, const Distribution& p,
                         const Distribution& q) {
  detail::require_same_length(p, q);
  return pairwise_sum(p.size(),
                      [&](std::size_t i) { return q[i] * f.value(p[i] / q[i]); });
}

// True iff d2 > 0 at every grid point.
inline bool check_convexity(const GeneratingFunction& f,
                            const std::vector<real>& grid) {
  if (grid.empty()) throw Error(ErrorCode::kEmptyGrid, "convexity grid is empty");
  for (real x : grid) {
    if (!(f.d2(x) > 0.0L)) return false;
  }
  return true;
}

// n log-spaced points covering [lo, hi] inclusive.
inline std::vector<real> log_grid(real lo, real hi, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kEmptyGrid, "log grid with zero points");
  std::vector<real> g(n);
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  const real llo = std::log(lo);
  const real lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    const real t = static_cast<real>(i) / static_cast<real>(n - 1);
    g[i] = std::exp(llo + t * (lhi - llo));
  }
  return g;
}

}  // namespace divlat
