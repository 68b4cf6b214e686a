// measures.hpp — closed-form evaluation of the 11 symmetric divergence
// measures and the 4 mean sums.
//
// Divergences (chain order): Delta (triangular discrimination), I
// (Jensen-Shannon), M1, M2 (mean-difference divergences), h (Hellinger),
// M3, J (Jeffreys), T (arithmetic-geometric), K0, Psi (symmetric
// chi-square), F.  Mean sums: G (geometric), N1, N2 (square-root means),
// A (arithmetic, identically 1).
//
// The M-measures are differences of mean sums (M1 = N2 - N1, M2 = N2 - G,
// M3 = A - N2); they are evaluated through the cancellation-free kernel
// w = s - a = (sqrt p - sqrt q)^2 / (4 (s + a)) with s = sqrt((p+q)/2),
// a = (sqrt p + sqrt q)/2, which is exactly zero when p == q termwise.
#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "divlat/distribution.hpp"
#include "divlat/errors.hpp"
#include "divlat/rational.hpp"
#include "divlat/summation.hpp"

namespace divlat {

enum class MeasureId : int {
  Delta = 0,
  I = 1,
  M1 = 2,
  M2 = 3,
  h = 4,
  M3 = 5,
  J = 6,
  T = 7,
  K0 = 8,
  Psi = 9,
  F = 10,
  G = 11,
  N1 = 12,
  N2 = 13,
  A = 14,
};

inline constexpr int kMeasureCount = 15;
inline constexpr int kDivergenceCount = 11;

inline constexpr std::array<MeasureId, kMeasureCount> kAllMeasures = {
    MeasureId::Delta, MeasureId::I,  MeasureId::M1, MeasureId::M2,
    MeasureId::h,     MeasureId::M3, MeasureId::J,  MeasureId::T,
    MeasureId::K0,    MeasureId::Psi, MeasureId::F, MeasureId::G,
    MeasureId::N1,    MeasureId::N2, MeasureId::A};

inline bool is_divergence(MeasureId id) {
  return static_cast<int>(id) < kDivergenceCount;
}

inline const char* measure_name(MeasureId id) {
  switch (id) {
    case MeasureId::Delta: return "Delta";
    case MeasureId::I: return "I";
    case MeasureId::M1: return "M1";
    case MeasureId::M2: return "M2";
    case MeasureId::h: return "h";
    case MeasureId::M3: return "M3";
    case MeasureId::J: return "J";
    case MeasureId::T: return "T";
    case MeasureId::K0: return "K0";
    case MeasureId::Psi: return "Psi";
    case MeasureId::F: return "F";
    case MeasureId::G: return "G";
    case MeasureId::N1: return "N1";
    case MeasureId::N2: return "N2";
    case MeasureId::A: return "A";
  }
  return "?";
}

inline std::optional<MeasureId> measure_from_name(const std::string& name) {
  for (MeasureId id : kAllMeasures)
    if (name == measure_name(id)) return id;
  return std::nullopt;
}

// One summand of the measure, as a function of the entry pair (p, q).
inline real measure_term(MeasureId id, real p, real q) {
  switch (id) {
    case MeasureId::Delta: {
      const real d = p - q;
      return d * d / (p + q);
    }
    case MeasureId::I: {
      const real m = (p + q) / 2.0L;
      return (p * std::log(p) + q * std::log(q)) / 2.0L - m * std::log(m);
    }
    case MeasureId::J:
      return (p - q) * (std::log(p) - std::log(q));
    case MeasureId::T: {
      const real m = (p + q) / 2.0L;
      return m * (std::log(m) - (std::log(p) + std::log(q)) / 2.0L);
    }
    case MeasureId::K0: {
      const real d = p - q;
      return d * d / (std::sqrt(p) * std::sqrt(q));
    }
    case MeasureId::Psi: {
      const real d = p - q;
      return d * d * (p + q) / (p * q);
    }
    case MeasureId::F: {
      const real d = (p - q) * (p + q);
      const real g = std::sqrt(p) * std::sqrt(q);
      return d * d / (2.0L * g * g * g);
    }
    default: {
      const real sp = std::sqrt(p);
      const real sq = std::sqrt(q);
      const real d = sp - sq;
      switch (id) {
        case MeasureId::h:
          return d * d / 2.0L;
        case MeasureId::G:
          return sp * sq;
        case MeasureId::N1: {
          const real a = (sp + sq) / 2.0L;
          return a * a;
        }
        case MeasureId::A:
          return (p + q) / 2.0L;
        default: {
          const real a = (sp + sq) / 2.0L;
          const real s = std::sqrt((p + q) / 2.0L);
          if (id == MeasureId::N2) return s * a;
          const real w = d * d / (4.0L * (s + a));  // == s - a, stably
          switch (id) {
            case MeasureId::M1: return a * w;
            case MeasureId::M2: return a * w + d * d / 4.0L;
            case MeasureId::M3: return s * w;
            default: break;
          }
        }
      }
    }
  }
  throw Error(ErrorCode::kOutOfRange, "unknown measure id");
}

struct MeasureValue {
  MeasureId id;
  real value;
};

namespace detail {
inline void require_same_length(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size())
    throw Error(ErrorCode::kDimensionMismatch,
                "P has " + std::to_string(p.size()) + " entries, Q has " +
                    std::to_string(q.size()));
}
}  // namespace detail

// Hot path: all 15 closed-form values as a flat array indexed by MeasureId.
inline std::array<real, kMeasureCount> measure_vector(const Distribution& p,
                                                      const Distribution& q) {
  detail::require_same_length(p, q);
  std::array<real, kMeasureCount> out{};
  for (MeasureId id : kAllMeasures) {
    out[static_cast<int>(id)] = pairwise_sum(
        p.size(), [&](std::size_t i) { return measure_term(id, p[i], q[i]); });
  }
  return out;
}

inline MeasureValue evaluate(MeasureId id, const Distribution& p,
                             const Distribution& q) {
  detail::require_same_length(p, q);
  const real value = pairwise_sum(
      p.size(), [&](std::size_t i) { return measure_term(id, p[i], q[i]); });
  return MeasureValue{id, value};
}

inline std::array<MeasureValue, kMeasureCount> evaluate_all(
    const Distribution& p, const Distribution& q) {
  const auto vec = measure_vector(p, q);
  std::array<MeasureValue, kMeasureCount> out{};
  for (int i = 0; i < kMeasureCount; ++i)
    out[i] = MeasureValue{static_cast<MeasureId>(i), vec[i]};
  return out;
}

// The single-inequality scaling of the 11 divergences:
// Delta/4 <= I <= 4M1 <= 4M2/3 <= h <= 4M3 <= J/8 <= T <= K0/8 <= Psi/16
// <= F/16.  Positions are 1-based.
struct ChainScaling {
  int pos;
  MeasureId id;
  int coeff_num;
  int coeff_den;
};

inline constexpr std::array<ChainScaling, kDivergenceCount> kChainScalings = {{
    {1, MeasureId::Delta, 1, 4},
    {2, MeasureId::I, 1, 1},
    {3, MeasureId::M1, 4, 1},
    {4, MeasureId::M2, 4, 3},
    {5, MeasureId::h, 1, 1},
    {6, MeasureId::M3, 4, 1},
    {7, MeasureId::J, 1, 8},
    {8, MeasureId::T, 1, 1},
    {9, MeasureId::K0, 1, 8},
    {10, MeasureId::Psi, 1, 16},
    {11, MeasureId::F, 1, 16},
}};

// slack[k] = scaled(position k+2) - scaled(position k+1), k = 0..9.
inline std::array<real, 10> check_chain5(
    const std::array<real, kMeasureCount>& values) {
  std::array<real, 10> slacks{};
  real prev = 0.0L;
  for (int k = 0; k < kDivergenceCount; ++k) {
    const ChainScaling& cs = kChainScalings[k];
    const real scaled = values[static_cast<int>(cs.id)] *
                        static_cast<real>(cs.coeff_num) /
                        static_cast<real>(cs.coeff_den);
    if (k > 0) slacks[k - 1] = scaled - prev;
    prev = scaled;
  }
  return slacks;
}

inline std::array<real, 10> check_chain5(
    const std::array<MeasureValue, kMeasureCount>& values) {
  std::array<real, kMeasureCount> flat{};
  for (const MeasureValue& mv : values) flat[static_cast<int>(mv.id)] = mv.value;
  return check_chain5(flat);
}

// Map-based entry point; throws if any of the 11 divergences is missing.
inline std::array<real, 10> check_chain5(
    const std::map<MeasureId, real>& values) {
  std::array<real, kMeasureCount> flat{};
  for (int k = 0; k < kDivergenceCount; ++k) {
    const MeasureId id = kChainScalings[k].id;
    auto it = values.find(id);
    if (it == values.end())
      throw Error(ErrorCode::kIncompleteValues,
                  std::string("missing measure ") + measure_name(id));
    flat[static_cast<int>(id)] = it->second;
  }
  return check_chain5(flat);
}

}  // namespace divlat
