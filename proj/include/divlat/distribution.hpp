// distribution.hpp — points of the probability simplex.
//
// A Distribution is a strictly positive vector summing to 1 within 1e-12.
// `validate` rejects out-of-tolerance input, `normalize` repairs positive
// input, and `random_distribution` draws uniformly from the simplex
// (unit-rate exponentials, normalized) with bit-reproducible seeding.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "divlat/errors.hpp"
#include "divlat/rational.hpp"
#include "divlat/summation.hpp"

namespace divlat {

inline constexpr real kSumTolerance = 1e-12L;

struct Distribution {
  std::vector<real> probs;

  std::size_t size() const { return probs.size(); }
  real operator[](std::size_t i) const { return probs[i]; }
};

inline Distribution validate(const std::vector<real>& raw) {
  if (raw.size() < 2)
    throw Error(ErrorCode::kTooShort,
                "need at least 2 entries, got " + std::to_string(raw.size()));
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!(raw[i] > 0.0L))
      throw Error(ErrorCode::kNonPositiveEntry,
                  "entry " + std::to_string(i) + " is not strictly positive");
  const real sum = pairwise_sum(raw.size(), [&](std::size_t i) { return raw[i]; });
  if (std::fabs(sum - 1.0L) > kSumTolerance)
    throw Error(ErrorCode::kSumNotOne,
                "entries sum to " + std::to_string(static_cast<double>(sum)));
  return Distribution{raw};
}

inline Distribution normalize(const std::vector<real>& raw) {
  if (raw.size() < 2)
    throw Error(ErrorCode::kTooShort,
                "need at least 2 entries, got " + std::to_string(raw.size()));
  for (std::size_t i = 0; i < raw.size(); ++i)
    if (!(raw[i] > 0.0L))
      throw Error(ErrorCode::kNonPositiveEntry,
                  "entry " + std::to_string(i) + " is not strictly positive");
  const real sum = pairwise_sum(raw.size(), [&](std::size_t i) { return raw[i]; });
  std::vector<real> probs(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) probs[i] = raw[i] / sum;
  return Distribution{std::move(probs)};
}

// Maps a raw 64-bit draw to (0,1); the result is exactly representable, so
// the stream of u values is bit-reproducible across platforms.
inline real unit_open_interval(std::uint64_t bits) {
  return (static_cast<real>(bits >> 11) + 0.5L) * 0x1p-53L;
}

inline Distribution random_distribution(std::size_t n, std::uint64_t seed) {
  if (n < 2)
    throw Error(ErrorCode::kTooShort,
                "need at least 2 entries, got " + std::to_string(n));
  std::mt19937_64 engine(seed);
  std::vector<real> e(n);
  for (std::size_t i = 0; i < n; ++i)
    e[i] = -std::log(unit_open_interval(engine()));
  const real sum = pairwise_sum(n, [&](std::size_t i) { return e[i]; });
  for (std::size_t i = 0; i < n; ++i) e[i] /= sum;
  return Distribution{std::move(e)};
}

// Derives the engine seed for one half of suite pair (n, pair_index):
// which = 0 draws P, which = 1 draws Q.  Double splitmix64-style mix so
// nearby (n, i) produce unrelated streams.
inline std::uint64_t pair_seed(std::uint64_t seed, std::uint64_t n,
                               std::uint64_t pair_index, std::uint64_t which) {
  std::uint64_t z = seed;
  const std::uint64_t inputs[2] = {n, 2 * pair_index + which};
  for (std::uint64_t v : inputs) {
    z += 0x9E3779B97F4A7C15ULL * (v + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
  }
  return z;
}

struct DistributionPair {
  Distribution p, q;
};

// The deterministic pair schedule used by the verification suite: for each
// dimension in order, `pairs_per_dim` pairs with per-pair derived seeds.
inline std::vector<DistributionPair> make_suite_pairs(
    const std::vector<std::size_t>& dims, std::size_t pairs_per_dim,
    std::uint64_t seed) {
  std::vector<DistributionPair> out;
  out.reserve(dims.size() * pairs_per_dim);
  for (std::size_t n : dims) {
    for (std::size_t i = 0; i < pairs_per_dim; ++i) {
      out.push_back(DistributionPair{
          random_distribution(n, pair_seed(seed, n, i, 0)),
          random_distribution(n, pair_seed(seed, n, i, 1))});
    }
  }
  return out;
}

}  // namespace divlat
