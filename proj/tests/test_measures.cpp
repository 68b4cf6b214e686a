#include "divlat/measures.hpp"

#include <gtest/gtest.h>

#include <map>

#include "divlat/distribution.hpp"
#include "test_util.hpp"

using divlat::Distribution;
using divlat::Error;
using divlat::ErrorCode;
using divlat::MeasureId;
using divlat::real;
using testutil::rel_diff;

namespace {

Distribution spot_p() { return divlat::validate({0.5L, 0.5L}); }
Distribution spot_q() { return divlat::validate({0.25L, 0.75L}); }

// Frozen 19-digit reference values at the spot pair, in measure order.
constexpr real kSpot[divlat::kMeasureCount] = {
    0.133333333333333333L,    // Delta
    0.03382207556860523L,     // I
    0.00847164235372668242L,  // M1
    0.025508729209192539L,    // M2
    0.0340741737109317133L,   // h
    0.00856544450173917421L,  // M3
    0.274653072167027423L,    // J
    0.0348411924731516257L,   // T
    0.278838767912602635L,    // K0
    0.583333333333333333L,    // Psi
    0.610376882367361637L,    // F
    0.965925826289068287L,    // G
    0.982962913144534143L,    // N1
    0.991434555498260826L,    // N2
    1.0L,                     // A
};

constexpr real kSpotSlacks[10] = {
    0.000488742235271896667L, 0.0000644938463014996602L,
    0.000125069530683322393L, 0.0000625347653416611966L,
    0.00018760429602498359L,  0.0000698560139217310162L,
    0.000509558452273197856L, 0.0000136535159237036871L,
    0.00160348734425800393L,  0.00169022181462676897L,
};

}  // namespace

TEST(MeasureNames, RoundTrip) {
  for (MeasureId id : divlat::kAllMeasures) {
    const auto back = divlat::measure_from_name(divlat::measure_name(id));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, id);
  }
  EXPECT_FALSE(divlat::measure_from_name("nope").has_value());
  EXPECT_FALSE(divlat::measure_from_name("").has_value());
}

TEST(MeasureNames, DivergenceSplit) {
  int divergences = 0;
  for (MeasureId id : divlat::kAllMeasures)
    if (divlat::is_divergence(id)) ++divergences;
  EXPECT_EQ(divergences, divlat::kDivergenceCount);
  EXPECT_TRUE(divlat::is_divergence(MeasureId::Delta));
  EXPECT_TRUE(divlat::is_divergence(MeasureId::F));
  EXPECT_FALSE(divlat::is_divergence(MeasureId::G));
  EXPECT_FALSE(divlat::is_divergence(MeasureId::A));
}

TEST(MeasureVector, FrozenSpotValues) {
  const auto values = divlat::measure_vector(spot_p(), spot_q());
  for (int i = 0; i < divlat::kMeasureCount; ++i)
    EXPECT_LT(rel_diff(values[i], kSpot[i]), 1e-13L)
        << divlat::measure_name(static_cast<MeasureId>(i));
}

TEST(MeasureVector, ExactRationalSpotValues) {
  // At this dyadic pair the two power-type measures land exactly on
  // their rational values even in floating point.
  const auto values = divlat::measure_vector(spot_p(), spot_q());
  EXPECT_EQ(values[static_cast<int>(MeasureId::Delta)], 2.0L / 15.0L);
  EXPECT_EQ(values[static_cast<int>(MeasureId::Psi)], 7.0L / 12.0L);
  EXPECT_EQ(values[static_cast<int>(MeasureId::A)], 1.0L);
}

TEST(MeasureVector, SymmetricInArguments) {
  const auto pq = divlat::measure_vector(spot_p(), spot_q());
  const auto qp = divlat::measure_vector(spot_q(), spot_p());
  for (int i = 0; i < divlat::kMeasureCount; ++i) EXPECT_EQ(pq[i], qp[i]);

  const Distribution a = divlat::random_distribution(5, 7);
  const Distribution b = divlat::random_distribution(5, 8);
  const auto ab = divlat::measure_vector(a, b);
  const auto ba = divlat::measure_vector(b, a);
  for (int i = 0; i < divlat::kMeasureCount; ++i) EXPECT_EQ(ab[i], ba[i]);
}

TEST(MeasureVector, IdenticalArgumentsAreExact) {
  const Distribution d = divlat::random_distribution(7, 3);
  const auto values = divlat::measure_vector(d, d);
  for (MeasureId id : divlat::kAllMeasures) {
    if (divlat::is_divergence(id)) {
      // Every divergence term carries an exact zero factor at p == q, so
      // the sums are bitwise zero.
      EXPECT_EQ(values[static_cast<int>(id)], 0.0L)
          << divlat::measure_name(id);
    } else {
      // Mean sums equal 1 mathematically; sqrt(p*p) rounds at the last
      // bit, so allow a few ulps (long double eps ~ 1.1e-19).
      EXPECT_LE(std::fabs(values[static_cast<int>(id)] - 1.0L), 1e-18L)
          << divlat::measure_name(id);
    }
  }
}

TEST(MeasureVector, MeanIdentities) {
  // h = A - G, N1 = (A+G)/2, M1 = N2-N1, M2 = N2-G, M3 = A-N2.
  const auto v = divlat::measure_vector(spot_p(), spot_q());
  const auto at = [&](MeasureId id) { return v[static_cast<int>(id)]; };
  EXPECT_LT(rel_diff(at(MeasureId::h), at(MeasureId::A) - at(MeasureId::G)),
            1e-15L);
  EXPECT_LT(rel_diff(at(MeasureId::N1),
                     (at(MeasureId::A) + at(MeasureId::G)) / 2.0L),
            1e-15L);
  EXPECT_LT(
      rel_diff(at(MeasureId::M1), at(MeasureId::N2) - at(MeasureId::N1)),
      1e-12L);
  EXPECT_LT(rel_diff(at(MeasureId::M2), at(MeasureId::N2) - at(MeasureId::G)),
            1e-12L);
  EXPECT_LT(rel_diff(at(MeasureId::M3), at(MeasureId::A) - at(MeasureId::N2)),
            1e-12L);
}

TEST(Evaluate, MatchesVectorEntries) {
  const auto values = divlat::measure_vector(spot_p(), spot_q());
  for (MeasureId id : divlat::kAllMeasures) {
    const divlat::MeasureValue mv = divlat::evaluate(id, spot_p(), spot_q());
    EXPECT_EQ(mv.id, id);
    EXPECT_EQ(mv.value, values[static_cast<int>(id)]);
  }
}

TEST(EvaluateAll, CarriesIdsAndValues) {
  const auto all = divlat::evaluate_all(spot_p(), spot_q());
  const auto values = divlat::measure_vector(spot_p(), spot_q());
  for (int i = 0; i < divlat::kMeasureCount; ++i) {
    EXPECT_EQ(all[static_cast<std::size_t>(i)].id,
              static_cast<MeasureId>(i));
    EXPECT_EQ(all[static_cast<std::size_t>(i)].value, values[i]);
  }
}

TEST(Evaluate, DimensionMismatchThrows) {
  const Distribution p = divlat::validate({0.5L, 0.5L});
  const Distribution q = divlat::validate({0.25L, 0.25L, 0.5L});
  try {
    divlat::measure_vector(p, q);
    FAIL() << "expected DimensionMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(ChainScalings, TableShape) {
  ASSERT_EQ(divlat::kChainScalings.size(), 11u);
  EXPECT_EQ(divlat::kChainScalings[0].id, MeasureId::Delta);
  EXPECT_EQ(divlat::kChainScalings[0].coeff_num, 1);
  EXPECT_EQ(divlat::kChainScalings[0].coeff_den, 4);
  EXPECT_EQ(divlat::kChainScalings[6].id, MeasureId::J);
  EXPECT_EQ(divlat::kChainScalings[6].coeff_num, 1);
  EXPECT_EQ(divlat::kChainScalings[6].coeff_den, 8);
  EXPECT_EQ(divlat::kChainScalings[10].id, MeasureId::F);
  EXPECT_EQ(divlat::kChainScalings[10].coeff_num, 1);
  EXPECT_EQ(divlat::kChainScalings[10].coeff_den, 16);
  for (std::size_t i = 0; i < 11; ++i)
    EXPECT_EQ(divlat::kChainScalings[i].pos, static_cast<int>(i) + 1);
}

TEST(ChainSlacks, FrozenSpotValues) {
  const auto values = divlat::measure_vector(spot_p(), spot_q());
  const auto slacks = divlat::check_chain5(values);
  for (int k = 0; k < 10; ++k) {
    EXPECT_LT(rel_diff(slacks[static_cast<std::size_t>(k)],
                       kSpotSlacks[static_cast<std::size_t>(k)]),
              1e-13L)
        << "slack " << k + 1;
    EXPECT_GT(slacks[static_cast<std::size_t>(k)], 0.0L);
  }
}

TEST(ChainSlacks, MeasureValueOverloadAgrees) {
  const auto values = divlat::measure_vector(spot_p(), spot_q());
  const auto all = divlat::evaluate_all(spot_p(), spot_q());
  EXPECT_EQ(divlat::check_chain5(values), divlat::check_chain5(all));
}

TEST(ChainSlacks, MapOverloadAgreesAndChecksCompleteness) {
  const auto values = divlat::measure_vector(spot_p(), spot_q());
  std::map<MeasureId, real> by_id;
  for (MeasureId id : divlat::kAllMeasures)
    if (divlat::is_divergence(id))
      by_id[id] = values[static_cast<int>(id)];
  EXPECT_EQ(divlat::check_chain5(by_id), divlat::check_chain5(values));

  by_id.erase(MeasureId::T);
  try {
    divlat::check_chain5(by_id);
    FAIL() << "expected IncompleteValues";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteValues);
    EXPECT_NE(std::string(e.what()).find("T"), std::string::npos);
  }
}

TEST(ChainSlacks, NonNegativeOnRandomPairs) {
  for (const auto& pr : divlat::make_suite_pairs({2, 3, 5, 10, 50}, 40, 9)) {
    const auto slacks =
        divlat::check_chain5(divlat::measure_vector(pr.p, pr.q));
    for (real s : slacks) EXPECT_GE(s, 0.0L);
  }
}
