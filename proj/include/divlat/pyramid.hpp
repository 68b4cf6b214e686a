// pyramid.hpp — the 55 nonnegative difference measures obtained by
// subtracting any two scaled entries of the divergence chain
// Delta/4 <= I <= 4M1 <= 4M2/3 <= h <= 4M3 <= J/8 <= T <= K0/8 <= Psi/16
// <= F/16.
//
// Difference index = L(L-1)/2 + k, where the upper (later, larger) chain
// entry sits at position L+1 and the lower entry k steps earlier.  Indices
// run 1..55 and enumerate the triangular table line by line.
#pragma once

#include <array>
#include <cstddef>

#include "divlat/distribution.hpp"
#include "divlat/errors.hpp"
#include "divlat/generating_function.hpp"
#include "divlat/measures.hpp"
#include "divlat/rational.hpp"

namespace divlat {

inline constexpr int kDifferenceCount = 55;

struct ChainPosition {
  int pos;         // 1..11
  MeasureId id;    // measure at that chain position
  Rational coeff;  // exact normalization applied in the chain
};

inline ChainPosition chain_position(int pos) {
  if (pos < 1 || pos > kDivergenceCount)
    throw Error(ErrorCode::kOutOfRange,
                "chain position " + std::to_string(pos) + " outside 1..11");
  const ChainScaling& cs = kChainScalings[pos - 1];
  return ChainPosition{cs.pos, cs.id, rational(cs.coeff_num, cs.coeff_den)};
}

struct DifferenceId {
  int index;  // 1..55
  ChainPosition upper;
  ChainPosition lower;
};

inline DifferenceId difference_index(int upper_pos, int lower_pos) {
  if (upper_pos < 2 || upper_pos > kDivergenceCount || lower_pos < 1 ||
      lower_pos >= upper_pos)
    throw Error(ErrorCode::kOutOfRange,
                "difference positions (" + std::to_string(upper_pos) + ", " +
                    std::to_string(lower_pos) + ") must satisfy 1 <= lower < "
                    "upper <= 11");
  const int L = upper_pos - 1;
  const int k = upper_pos - lower_pos;
  return DifferenceId{L * (L - 1) / 2 + k, chain_position(upper_pos),
                      chain_position(lower_pos)};
}

inline DifferenceId difference_from_index(int index) {
  if (index < 1 || index > kDifferenceCount)
    throw Error(ErrorCode::kOutOfRange,
                "difference index " + std::to_string(index) + " outside 1..55");
  int L = 1;
  while (L * (L + 1) / 2 < index) ++L;
  const int k = index - L * (L - 1) / 2;
  return difference_index(L + 1, L + 1 - k);
}

// Difference value from a precomputed measure vector (hot path).
inline real difference_value(const DifferenceId& d,
                             const std::array<real, kMeasureCount>& values) {
  return to_real(d.upper.coeff) * values[static_cast<int>(d.upper.id)] -
         to_real(d.lower.coeff) * values[static_cast<int>(d.lower.id)];
}

inline real evaluate_difference(const DifferenceId& d, const Distribution& p,
                                const Distribution& q) {
  return to_real(d.upper.coeff) * evaluate(d.upper.id, p, q).value -
         to_real(d.lower.coeff) * evaluate(d.lower.id, p, q).value;
}

// f = c_u f_upper - c_l f_lower; value(1) = 0 and d2 > 0 away from x = 1.
inline GeneratingFunction difference_generating_function(
    const DifferenceId& d) {
  const GeneratingFunction fu = generating_function(d.upper.id);
  const GeneratingFunction fl = generating_function(d.lower.id);
  const real cu = to_real(d.upper.coeff);
  const real cl = to_real(d.lower.coeff);
  return GeneratingFunction{
      [fu, fl, cu, cl](real x) { return cu * fu.value(x) - cl * fl.value(x); },
      [fu, fl, cu, cl](real x) { return cu * fu.d1(x) - cl * fl.d1(x); },
      [fu, fl, cu, cl](real x) { return cu * fu.d2(x) - cl * fl.d2(x); }};
}

inline std::array<real, kDifferenceCount> pyramid_table(
    const std::array<real, kMeasureCount>& values) {
  std::array<real, kDifferenceCount> out{};
  for (int idx = 1; idx <= kDifferenceCount; ++idx)
    out[idx - 1] = difference_value(difference_from_index(idx), values);
  return out;
}

inline std::array<real, kDifferenceCount> pyramid_table(const Distribution& p,
                                                        const Distribution& q) {
  return pyramid_table(measure_vector(p, q));
}

}  // namespace divlat
