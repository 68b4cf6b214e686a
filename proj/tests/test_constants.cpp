#include "divlat/constants.hpp"

#include <gtest/gtest.h>

#include "divlat/pyramid.hpp"
#include "test_util.hpp"

using divlat::Error;
using divlat::ErrorCode;
using divlat::GeneratingFunction;
using divlat::RatioFunction;
using divlat::real;
using testutil::rel_diff;

namespace {

RatioFunction constant_over_constant(real num, real den) {
  const auto make = [](real c) {
    return GeneratingFunction{[c](real) { return c; }, [](real) { return 0.0L; },
                              [c](real) { return c; }};
  };
  return RatioFunction{make(num), make(den)};
}

}  // namespace

TEST(Tunables, PinnedValues) {
  EXPECT_EQ(divlat::kRatioGuardLogX, 0.02L);
  EXPECT_EQ(divlat::kMonotoneSlopeTol, 1e-9L);
}

TEST(RatioFunction, IdenticalDifferenceGivesExactlyOne) {
  const auto d = divlat::difference_from_index(7);
  const auto g = divlat::ratio_function(d, d);
  for (real x : {0.01L, 0.3L, 2.5L, 700.0L}) EXPECT_EQ(g.eval(x), 1.0L);
}

TEST(RatioFunction, PartThirtyOneClosedForm) {
  // This part's ratio simplifies to 3 (sqrt(x)+1)^2 / (3x + 2 sqrt(x) + 3).
  const auto g = divlat::part_ratio(31);
  for (real x : {0.02L, 0.4L, 0.9L, 1.5L, 12.0L, 800.0L}) {
    const real r = std::sqrt(x);
    const real want = 3.0L * (r + 1.0L) * (r + 1.0L) /
                      (3.0L * x + 2.0L * r + 3.0L);
    EXPECT_LT(rel_diff(g.eval(x), want), 1e-15L) << static_cast<double>(x);
  }
}

TEST(RatioFunction, DenominatorMustBePositive) {
  GeneratingFunction one{[](real) { return 1.0L; }, [](real) { return 0.0L; },
                         [](real) { return 1.0L; }};
  GeneratingFunction neg{[](real) { return -1.0L; }, [](real) { return 0.0L; },
                         [](real) { return -1.0L; }};
  try {
    divlat::ratio_function(one, neg);
    FAIL() << "expected DenominatorVanishes";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDenominatorVanishes);
  }
  // Direct evaluation trips the same guard.
  RatioFunction g{one, neg};
  try {
    g.eval(2.0L);
    FAIL() << "expected DenominatorVanishes";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDenominatorVanishes);
  }
}

TEST(PartRatio, RejectsOutOfRange) {
  for (int part : {0, 60, -1}) {
    try {
      divlat::part_ratio(part);
      FAIL() << "expected OutOfRange for " << part;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
    }
  }
}

TEST(LimitAtOne, RecoversAllClaimedConstants) {
  for (const auto& ps : divlat::theorem_parts()) {
    const real claimed = static_cast<real>(ps.beta_num) /
                         static_cast<real>(ps.beta_den);
    const real limit = divlat::limit_at_one(divlat::part_ratio(ps.part));
    EXPECT_LT(rel_diff(limit, claimed), 1e-6L) << "part " << ps.part;
  }
}

TEST(LimitAtOne, TightOnPartOne) {
  EXPECT_LT(rel_diff(divlat::limit_at_one(divlat::part_ratio(1)),
                     1.0L / 36.0L),
            1e-9L);
}

TEST(LimitAtOne, ConstantRatio) {
  const auto g = constant_over_constant(15.0L, 4.0L);
  EXPECT_LT(rel_diff(divlat::limit_at_one(g), 3.75L), 1e-15L);
}

TEST(LimitAtOne, DivergentRatioThrows) {
  GeneratingFunction pole{
      [](real) { return 0.0L; }, [](real) { return 0.0L; },
      [](real x) { return 1.0L / ((x - 1.0L) * (x - 1.0L)); }};
  GeneratingFunction one{[](real) { return 1.0L; }, [](real) { return 0.0L; },
                         [](real) { return 1.0L; }};
  RatioFunction g{pole, one};
  try {
    divlat::limit_at_one(g);
    FAIL() << "expected ExtrapolationDiverged";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kExtrapolationDiverged);
  }
}

TEST(GridSup, IdentityRatioIsExactlyOne) {
  const auto d = divlat::difference_from_index(20);
  const auto g = divlat::ratio_function(d, d);
  EXPECT_EQ(divlat::grid_sup(g, 1e-6L, 1e6L, 500), 1.0L);
}

TEST(GridSup, ApproachesClaimedConstantFromBelow) {
  const auto g = divlat::part_ratio(2);
  const real claimed = 9.0L / 11.0L;
  const real sup = divlat::grid_sup(g, 1e-6L, 1e6L, 4000);
  EXPECT_LE(sup, claimed * (1.0L + 1e-9L));
  EXPECT_GE(sup, claimed * 0.99L);
}

TEST(GridSup, RejectsBadConfiguration) {
  const auto g = divlat::part_ratio(2);
  for (auto [lo, hi, n] :
       std::vector<std::tuple<real, real, int>>{{2.0L, 10.0L, 500},
                                                {0.1L, 0.9L, 500},
                                                {-1.0L, 10.0L, 500},
                                                {1e-6L, 1e6L, 99}}) {
    try {
      divlat::grid_sup(g, lo, hi, n);
      FAIL() << "expected ConfigError";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kConfigError);
    }
  }
}

TEST(Monotonicity, HoldsForRatioProvenParts) {
  for (int part : {1, 2, 16, 31, 57, 58, 59})
    EXPECT_TRUE(
        divlat::monotonicity_check(divlat::part_ratio(part), 512))
        << "part " << part;
}

TEST(Monotonicity, FailsForReciprocalShape) {
  // Swapping numerator and denominator turns the peak at x = 1 into a
  // valley, which the directional slope test must reject.
  const auto g = divlat::part_ratio(1);
  RatioFunction swapped{g.denominator, g.numerator};
  EXPECT_FALSE(divlat::monotonicity_check(swapped, 512));
}

TEST(Monotonicity, RejectsTooFewPoints) {
  try {
    divlat::monotonicity_check(divlat::part_ratio(1), 99);
    FAIL() << "expected ConfigError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigError);
  }
}

TEST(DippingParts, FrozenDipValues) {
  // Parts 43 and 54 are the two parts whose ratios dip below the
  // constant away from x = 1; the constant is still tight (the limit at
  // 1) but the sup argument is replaced by the pyramid ordering.
  const auto g43 = divlat::part_ratio(43);
  EXPECT_LT(rel_diff(g43.eval(0.0749894209332455827L),
                     0.911055598638941586L),
            1e-12L);
  EXPECT_LT(rel_diff(g43.eval(1e-6L), 0.999251998001996754L), 1e-12L);
  EXPECT_FALSE(divlat::monotonicity_check(g43, 512));

  const auto g54 = divlat::part_ratio(54);
  EXPECT_LT(rel_diff(g54.eval(0.133352143216332403L),
                     0.972762097542274263L),
            1e-12L);
  EXPECT_LT(rel_diff(g54.eval(1e-6L), 0.999999202132796164L), 1e-12L);
  EXPECT_FALSE(divlat::monotonicity_check(g54, 512));
}

TEST(EstimatePart, RatioProvenPart) {
  const auto est = divlat::estimate_part(2, 2000);
  EXPECT_EQ(est.part_label, "part-2");
  EXPECT_EQ(est.claimed, divlat::rational(9, 11));
  EXPECT_EQ(est.proof, divlat::ProofKind::Ratio);
  EXPECT_TRUE(est.monotone_ok);
  EXPECT_TRUE(est.pass);
  EXPECT_LT(rel_diff(est.limit_at_one, 9.0L / 11.0L), 1e-6L);
  EXPECT_LE(est.grid_sup, (9.0L / 11.0L) * (1.0L + 1e-9L));
}

TEST(EstimatePart, PyramidProvenPart) {
  for (int part : {43, 54}) {
    const auto est = divlat::estimate_part(part, 2000);
    EXPECT_EQ(est.claimed, divlat::Rational(1));
    EXPECT_EQ(est.proof, divlat::ProofKind::Pyramid);
    EXPECT_FALSE(est.monotone_ok);
    EXPECT_TRUE(est.pass) << "part " << part;
    EXPECT_LT(rel_diff(est.limit_at_one, 1.0L), 1e-6L);
    EXPECT_LE(est.grid_sup, 1.0L + 1e-9L);
  }
}

TEST(EstimatePart, RejectsOutOfRange) {
  for (int part : {0, 60}) {
    try {
      divlat::estimate_part(part, 2000);
      FAIL() << "expected OutOfRange";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
    }
  }
}
