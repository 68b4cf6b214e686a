// inequalities.hpp — the complete catalog of verifiable inequality records
// among the 15 measures, and the machinery to check them on distribution
// pairs.
//
// Families:
//   theorem-part  59 records  D_a <= beta * D_b between pyramid differences
//                             (record 1 relates the divergence I itself to a
//                             two-measure combination)
//   chain2        13 records  the scaled-difference chain with a braced fork
//                             (two parallel routes between the same endpoints)
//   chain13        9 records  links of the increasing corner chain
//                             D1, D3, D6, D10, D15, D21, D28, D36, D45, D55
//   group1        16 records  two-sided linear forms with integer weights
//   group2        39 records  single-measure bounds X <= (combo)/d or >=
//   reverse14     19 records  reverse chain on differences 46..55
//   reverse15     17 records  reverse chain on differences 37..45
//   reverse16     13 records  reverse chain on differences 29..36
//   pyramid-line 100 records  nonnegativity of all 55 differences plus the
//                             45 within-line orderings D_j <= D_{j+1}
//
// Every coefficient is an exact rational; evaluation happens in long double.
// A record passes on a pair iff slack = rhs - lhs >= -max(tol*scale, 1e-12)
// with scale = max(|lhs|, |rhs|): tolerance is relative to term magnitude
// with an absolute floor, because all measures vanish quadratically at
// P = Q.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "divlat/distribution.hpp"
#include "divlat/errors.hpp"
#include "divlat/measures.hpp"
#include "divlat/pyramid.hpp"
#include "divlat/rational.hpp"

namespace divlat {

enum class Family : int {
  TheoremPart = 0,
  Chain2,
  Chain13,
  Group1,
  Group2,
  Reverse14,
  Reverse15,
  Reverse16,
  PyramidLine,
};

inline constexpr int kFamilyCount = 9;

inline const char* family_name(Family f) {
  switch (f) {
    case Family::TheoremPart: return "theorem-part";
    case Family::Chain2: return "chain2";
    case Family::Chain13: return "chain13";
    case Family::Group1: return "group1";
    case Family::Group2: return "group2";
    case Family::Reverse14: return "reverse14";
    case Family::Reverse15: return "reverse15";
    case Family::Reverse16: return "reverse16";
    case Family::PyramidLine: return "pyramid-line";
  }
  return "?";
}

inline std::optional<Family> family_from_name(const std::string& name) {
  for (int i = 0; i < kFamilyCount; ++i) {
    const Family f = static_cast<Family>(i);
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

// How the source argument establishes a theorem part: via the ratio of
// second derivatives (sup attained at 1, monotone on both sides), or via
// the pyramid ordering alone (no ratio claim; the ratio dips below the
// constant in the interior).
enum class ProofKind : int { Ratio = 0, Pyramid = 1 };

struct LinearCombo {
  std::map<MeasureId, Rational> terms;
};

struct InequalityRecord {
  std::string label;
  Family family;
  LinearCombo lhs;
  LinearCombo rhs;
  Rational constant;  // theorem-part: the beta multiplying the rhs
                      // difference; other families: 0 (unused)
  ProofKind proof;    // meaningful for theorem-part records only
};

// ------------------------------------------------------------------ parts
// Theorem parts 2..59 as (lhs pyramid index, rhs pyramid index, beta).
// Part 1 is special-cased: 36 I <= Delta + 128 M1, beta = 1/36.
struct TheoremPartSpec {
  int part;
  int lhs_index;  // 0 for part 1 (bare measure I on the left)
  int rhs_index;  // 0 for part 1 (combination Delta + 128 M1 on the right)
  long beta_num;
  long beta_den;
  ProofKind proof;
};

inline const std::array<TheoremPartSpec, 59>& theorem_parts() {
  static const std::array<TheoremPartSpec, 59> parts = {{
      {1, 0, 0, 1, 36, ProofKind::Ratio},
      {2, 3, 6, 9, 11, ProofKind::Ratio},
      {3, 6, 10, 11, 12, ProofKind::Ratio},
      {4, 10, 15, 4, 5, ProofKind::Ratio},
      {5, 15, 8, 5, 1, ProofKind::Ratio},
      {6, 15, 21, 15, 16, ProofKind::Ratio},
      {7, 21, 28, 2, 3, ProofKind::Ratio},
      {8, 8, 28, 1, 8, ProofKind::Ratio},
      {9, 11, 14, 3, 7, ProofKind::Ratio},
      {10, 14, 9, 7, 4, ProofKind::Ratio},
      {11, 9, 5, 4, 3, ProofKind::Ratio},
      {12, 5, 36, 1, 8, ProofKind::Ratio},
      {13, 5, 22, 3, 8, ProofKind::Ratio},
      {14, 5, 26, 1, 5, ProofKind::Ratio},
      {15, 5, 19, 3, 7, ProofKind::Ratio},
      {16, 5, 2, 3, 1, ProofKind::Ratio},
      {17, 22, 25, 8, 13, ProofKind::Ratio},
      {18, 26, 25, 15, 13, ProofKind::Ratio},
      {19, 25, 24, 13, 12, ProofKind::Ratio},
      {20, 24, 23, 4, 3, ProofKind::Ratio},
      {21, 24, 18, 12, 5, ProofKind::Ratio},
      {22, 18, 17, 5, 4, ProofKind::Ratio},
      {23, 36, 35, 3, 2, ProofKind::Ratio},
      {24, 23, 35, 9, 16, ProofKind::Ratio},
      {25, 2, 35, 1, 16, ProofKind::Ratio},
      {26, 17, 35, 1, 4, ProofKind::Ratio},
      {27, 35, 34, 16, 15, ProofKind::Ratio},
      {28, 34, 33, 15, 13, ProofKind::Ratio},
      {29, 33, 32, 13, 12, ProofKind::Ratio},
      {30, 32, 31, 4, 3, ProofKind::Ratio},
      {31, 32, 30, 3, 2, ProofKind::Ratio},
      {32, 32, 45, 1, 4, ProofKind::Ratio},
      {33, 30, 44, 1, 5, ProofKind::Ratio},
      {34, 45, 44, 6, 5, ProofKind::Ratio},
      {35, 31, 43, 3, 13, ProofKind::Ratio},
      {36, 44, 43, 40, 39, ProofKind::Ratio},
      {37, 43, 42, 39, 37, ProofKind::Ratio},
      {38, 42, 41, 37, 36, ProofKind::Ratio},
      {39, 41, 39, 9, 8, ProofKind::Ratio},
      {40, 41, 40, 12, 11, ProofKind::Ratio},
      {41, 40, 37, 11, 8, ProofKind::Ratio},
      {42, 39, 37, 4, 3, ProofKind::Ratio},
      {43, 37, 38, 1, 1, ProofKind::Pyramid},
      {44, 37, 55, 1, 3, ProofKind::Ratio},
      {45, 38, 54, 3, 8, ProofKind::Ratio},
      {46, 55, 54, 9, 8, ProofKind::Ratio},
      {47, 54, 53, 64, 63, ProofKind::Ratio},
      {48, 53, 52, 63, 61, ProofKind::Ratio},
      {49, 52, 51, 61, 60, ProofKind::Ratio},
      {50, 51, 49, 15, 14, ProofKind::Ratio},
      {51, 51, 50, 20, 19, ProofKind::Ratio},
      {52, 50, 47, 19, 16, ProofKind::Ratio},
      {53, 49, 47, 7, 6, ProofKind::Ratio},
      {54, 47, 48, 1, 1, ProofKind::Pyramid},
      {55, 48, 46, 2, 1, ProofKind::Ratio},
      {56, 17, 16, 4, 1, ProofKind::Ratio},
      {57, 2, 16, 1, 1, ProofKind::Ratio},
      {58, 23, 16, 9, 1, ProofKind::Ratio},
      {59, 16, 46, 1, 24, ProofKind::Ratio},
  }};
  return parts;
}

// ---------------------------------------------------------------- helpers
namespace cat_detail {

inline void add_term(LinearCombo& c, MeasureId id, const Rational& r) {
  if (r == 0) return;
  auto [it, inserted] = c.terms.emplace(id, r);
  if (!inserted) {
    it->second += r;
    if (it->second == 0) c.terms.erase(it);
  }
}

// The difference with pyramid index idx as a two-term combination
// c_up * upper - c_lo * lower, optionally scaled.
inline LinearCombo difference_combo(int idx, const Rational& scale = 1) {
  const DifferenceId d = difference_from_index(idx);
  LinearCombo c;
  add_term(c, d.upper.id, scale * d.upper.coeff);
  add_term(c, d.lower.id, -scale * d.lower.coeff);
  return c;
}

using IntTerms = std::vector<std::pair<MeasureId, long>>;

inline LinearCombo int_combo(const IntTerms& terms) {
  LinearCombo c;
  for (const auto& [id, w] : terms) add_term(c, id, rational(w));
  return c;
}

}  // namespace cat_detail

// ---------------------------------------------------------------- catalog
inline const std::vector<InequalityRecord>& catalog() {
  static const std::vector<InequalityRecord> records = [] {
    using cat_detail::difference_combo;
    using cat_detail::int_combo;
    using M = MeasureId;
    std::vector<InequalityRecord> out;
    out.reserve(285);

    auto label = [](const char* stem, int i) {
      return std::string(stem) + "-" + std::to_string(i);
    };

    // 59 theorem parts.
    for (const TheoremPartSpec& ps : theorem_parts()) {
      InequalityRecord r;
      r.label = label("part", ps.part);
      r.family = Family::TheoremPart;
      r.constant = rational(ps.beta_num, ps.beta_den);
      r.proof = ps.proof;
      if (ps.part == 1) {
        r.lhs = int_combo({{M::I, 36}});
        r.rhs = int_combo({{M::Delta, 1}, {M::M1, 128}});
      } else {
        r.lhs = difference_combo(ps.lhs_index);
        r.rhs = difference_combo(ps.rhs_index, r.constant);
      }
      out.push_back(std::move(r));
    }

    // Scaled difference links a*D_l <= b*D_r shared by chain2, chain13 and
    // the reverse chains.
    struct ScaledLink {
      long an, ad, dl, bn, bd, dr;
    };
    auto add_links = [&](const char* stem, Family fam,
                         const std::vector<ScaledLink>& links) {
      int i = 0;
      for (const ScaledLink& l : links) {
        InequalityRecord r;
        r.label = label(stem, ++i);
        r.family = fam;
        r.lhs = difference_combo(static_cast<int>(l.dl), rational(l.an, l.ad));
        r.rhs = difference_combo(static_cast<int>(l.dr), rational(l.bn, l.bd));
        r.constant = rational(0);
        r.proof = ProofKind::Ratio;
        out.push_back(std::move(r));
      }
    };

    // chain2: the scaled-difference chain; the brace is entered as two
    // parallel routes from (2/3) D10 to D22 (through 2 D9, and through
    // (1/2) D21 <= (1/3) D28); brace members are mutually unrelated.
    add_links("chain2", Family::Chain2,
              {{1, 1, 1, 2, 3, 10},
               {2, 3, 10, 2, 1, 9},
               {2, 3, 10, 1, 2, 21},
               {1, 2, 21, 1, 3, 28},
               {2, 1, 9, 1, 1, 22},
               {1, 3, 28, 1, 1, 22},
               {1, 1, 22, 2, 3, 24},
               {2, 3, 24, 2, 1, 17},
               {2, 1, 17, 1, 6, 45},
               {1, 6, 45, 1, 5, 44},
               {1, 5, 44, 2, 9, 41},
               {2, 9, 41, 1, 4, 39},
               {1, 4, 39, 1, 3, 38}});

    // chain13: nine links through the corner differences.
    {
      static constexpr int corners[10] = {1, 3, 6, 10, 15, 21, 28, 36, 45, 55};
      static constexpr long cn[10] = {1, 8, 8, 2, 8, 1, 1, 1, 1, 1};
      static constexpr long cd[10] = {1, 9, 11, 3, 15, 2, 3, 3, 6, 9};
      std::vector<ScaledLink> links;
      for (int i = 0; i + 1 < 10; ++i)
        links.push_back({cn[i], cd[i], corners[i], cn[i + 1], cd[i + 1],
                         corners[i + 1]});
      add_links("chain13", Family::Chain13, links);
    }

    // group1: 16 two-sided integer-weighted records.
    {
      using IC = cat_detail::IntTerms;
      const std::vector<std::pair<IC, IC>> g1 = {
          {{{M::M1, 80}, {M::M3, 16}}, {{M::Delta, 1}, {M::h, 20}}},
          {{{M::Delta, 1}, {M::h, 32}}, {{M::T, 4}, {M::M1, 128}}},
          {{{M::Delta, 6}, {M::M2, 256}}, {{M::I, 192}, {M::K0, 3}}},
          {{{M::M1, 288}, {M::M2, 224}}, {{M::I, 168}, {M::J, 9}}},
          {{{M::M1, 12}, {M::M2, 20}}, {{M::I, 15}, {M::T, 3}}},
          {{{M::J, 9}, {M::M2, 256}}, {{M::I, 192}, {M::T, 72}}},
          {{{M::T, 10}, {M::M2, 32}}, {{M::J, 3}, {M::h, 10}}},
          {{{M::I, 72}, {M::T, 128}}, {{M::K0, 9}, {M::M3, 512}}},
          {{{M::I, 8}, {M::J, 4}}, {{M::K0, 1}, {M::h, 32}}},
          {{{M::Delta, 4}, {M::K0, 8}}, {{M::Psi, 1}, {M::h, 64}}},
          {{{M::I, 16}, {M::K0, 10}}, {{M::Psi, 1}, {M::J, 10}}},
          {{{M::K0, 26}, {M::M1, 192}}, {{M::Psi, 3}, {M::M3, 832}}},
          {{{M::M1, 32}, {M::M3, 32}}, {{M::I, 8}, {M::J, 1}}},
          {{{M::Delta, 4}, {M::Psi, 3}}, {{M::F, 1}, {M::K0, 6}}},
          {{{M::I, 48}, {M::Psi, 8}}, {{M::F, 3}, {M::T, 128}}},
          {{{M::J, 48}, {M::Psi, 1}}, {{M::F, 1}, {M::M3, 1536}}},
      };
      for (int i = 0; i < 16; ++i) {
        InequalityRecord r;
        r.label = label("group1", i + 1);
        r.family = Family::Group1;
        r.lhs = int_combo(g1[i].first);
        r.rhs = int_combo(g1[i].second);
        r.constant = rational(0);
        r.proof = ProofKind::Ratio;
        out.push_back(std::move(r));
      }
    }

    // group2: 39 single-measure bounds; direction +1 means
    // d * target <= combo, direction -1 means combo <= d * target.
    {
      struct G2 {
        M target;
        cat_detail::IntTerms combo;
        long divisor;
        int dir;
      };
      const std::vector<G2> g2 = {
          {M::I, {{M::Delta, 1}, {M::M1, 128}}, 36, +1},
          {M::I, {{M::Delta, 4}, {M::K0, 1}}, 24, +1},
          {M::I, {{M::Delta, 20}, {M::Psi, 1}}, 96, +1},
          {M::I, {{M::Delta, 32}, {M::F, 1}}, 144, +1},
          {M::M1, {{M::Delta, 1}, {M::M2, 24}}, 88, +1},
          {M::M1, {{M::I, 120}, {M::K0, 1}}, 512, +1},
          {M::M1, {{M::I, 624}, {M::Psi, 1}}, 2560, +1},
          {M::M1, {{M::I, 1008}, {M::F, 1}}, 4096, +1},
          {M::M1, {{M::I, 3}, {M::M2, 2}}, 18, -1},
          {M::M2, {{M::Delta, 1}, {M::h, 44}}, 64, +1},
          {M::M2, {{M::T, 1}, {M::M1, 26}}, 10, +1},
          {M::M2, {{M::K0, 1}, {M::M1, 208}}, 80, +1},
          {M::M2, {{M::Psi, 1}, {M::M1, 1184}}, 416, +1},
          {M::M2, {{M::F, 1}, {M::M1, 1952}}, 672, +1},
          {M::M2, {{M::I, 3}, {M::h, 9}}, 16, -1},
          {M::h, {{M::Delta, 1}, {M::M3, 64}}, 20, +1},
          {M::h, {{M::J, 3}, {M::M2, 128}}, 120, +1},
          {M::h, {{M::T, 1}, {M::M2, 16}}, 13, +1},
          {M::h, {{M::K0, 1}, {M::M2, 128}}, 104, +1},
          {M::h, {{M::Psi, 1}, {M::M2, 768}}, 592, +1},
          {M::h, {{M::F, 1}, {M::M2, 1280}}, 976, +1},
          {M::h, {{M::I, 3}, {M::M3, 16}}, 7, -1},
          {M::M3, {{M::Delta, 2}, {M::J, 15}}, 512, +1},
          {M::M3, {{M::J, 3}, {M::h, 8}}, 128, +1},
          {M::M3, {{M::T, 1}, {M::h, 3}}, 16, +1},
          {M::M3, {{M::K0, 1}, {M::h, 24}}, 128, +1},
          {M::M3, {{M::F, 1}, {M::h, 304}}, 1280, +1},
          {M::M3, {{M::Psi, 1}, {M::h, 176}}, 768, +1},
          {M::J, {{M::K0, 1}, {M::h, 16}}, 3, +1},
          {M::J, {{M::Delta, 2}, {M::T, 16}}, 3, +1},
          {M::J, {{M::Psi, 1}, {M::h, 128}}, 18, +1},
          {M::J, {{M::F, 1}, {M::h, 224}}, 30, +1},
          {M::J, {{M::T, 120}, {M::M2, 256}}, 39, -1},
          {M::J, {{M::T, 8}, {M::M3, 256}}, 9, -1},
          {M::K0, {{M::J, 6}, {M::Psi, 1}}, 8, +1},
          {M::K0, {{M::J, 12}, {M::F, 1}}, 14, +1},
          {M::K0, {{M::Psi, 3}, {M::M3, 512}}, 22, +1},
          {M::K0, {{M::F, 3}, {M::M3, 1024}}, 38, +1},
          {M::Psi, {{M::F, 1}, {M::T, 16}}, 2, +1},
      };
      for (int i = 0; i < 39; ++i) {
        InequalityRecord r;
        r.label = label("group2", i + 1);
        r.family = Family::Group2;
        LinearCombo target = int_combo({{g2[i].target, g2[i].divisor}});
        LinearCombo combo = int_combo(g2[i].combo);
        if (g2[i].dir > 0) {
          r.lhs = std::move(target);
          r.rhs = std::move(combo);
        } else {
          r.lhs = std::move(combo);
          r.rhs = std::move(target);
        }
        r.constant = rational(0);
        r.proof = ProofKind::Ratio;
        out.push_back(std::move(r));
      }
    }

    // Reverse chains: the pyramid prefix D_lo <= ... <= D_hi followed by
    // the scaled descent back down the line.
    auto prefix = [](int lo, int hi) {
      std::vector<ScaledLink> links;
      for (int i = lo; i < hi; ++i) links.push_back({1, 1, i, 1, 1, i + 1});
      return links;
    };
    {
      std::vector<ScaledLink> links = prefix(46, 55);
      const std::vector<ScaledLink> tail = {
          {1, 1, 55, 9, 8, 54},   {9, 8, 54, 8, 7, 53},
          {8, 7, 53, 72, 61, 52}, {72, 61, 52, 6, 5, 51},
          {6, 5, 51, 9, 7, 49},   {6, 5, 51, 24, 19, 50},
          {9, 7, 49, 3, 2, 47},   {24, 19, 50, 3, 2, 47},
          {3, 2, 47, 3, 2, 48},   {3, 2, 48, 3, 1, 46}};
      links.insert(links.end(), tail.begin(), tail.end());
      add_links("reverse14", Family::Reverse14, links);
    }
    {
      std::vector<ScaledLink> links = prefix(37, 45);
      const std::vector<ScaledLink> tail = {
          {1, 1, 45, 6, 5, 44},    {6, 5, 44, 16, 13, 43},
          {16, 13, 43, 48, 37, 42}, {48, 37, 42, 4, 3, 41},
          {4, 3, 41, 3, 2, 39},    {4, 3, 41, 16, 11, 40},
          {3, 2, 39, 2, 1, 37},    {16, 11, 40, 2, 1, 37},
          {2, 1, 37, 2, 1, 38}};
      links.insert(links.end(), tail.begin(), tail.end());
      add_links("reverse15", Family::Reverse15, links);
    }
    {
      std::vector<ScaledLink> links = prefix(29, 36);
      const std::vector<ScaledLink> tail = {
          {1, 1, 36, 3, 2, 35},    {3, 2, 35, 8, 5, 34},
          {8, 5, 34, 24, 13, 33},  {24, 13, 33, 2, 1, 32},
          {2, 1, 32, 3, 1, 30},    {2, 1, 32, 8, 3, 31}};
      links.insert(links.end(), tail.begin(), tail.end());
      add_links("reverse16", Family::Reverse16, links);
    }

    // pyramid-line: nonnegativity of each difference, written as
    // c_lo * lower <= c_up * upper so both sides stay nonempty, then the
    // within-line orderings D_j <= D_{j+1}.
    for (int idx = 1; idx <= kDifferenceCount; ++idx) {
      const DifferenceId d = difference_from_index(idx);
      InequalityRecord r;
      r.label = "pyramid-nonneg-" + std::to_string(idx);
      r.family = Family::PyramidLine;
      LinearCombo lhs, rhs;
      cat_detail::add_term(lhs, d.lower.id, d.lower.coeff);
      cat_detail::add_term(rhs, d.upper.id, d.upper.coeff);
      r.lhs = std::move(lhs);
      r.rhs = std::move(rhs);
      r.constant = rational(0);
      r.proof = ProofKind::Pyramid;
      out.push_back(std::move(r));
    }
    for (int L = 2; L <= 10; ++L) {
      for (int j = L * (L - 1) / 2 + 1; j < L * (L - 1) / 2 + L; ++j) {
        InequalityRecord r;
        r.label = "pyramid-order-" + std::to_string(j);
        r.family = Family::PyramidLine;
        r.lhs = difference_combo(j);
        r.rhs = difference_combo(j + 1);
        r.constant = rational(0);
        r.proof = ProofKind::Pyramid;
        out.push_back(std::move(r));
      }
    }

    return out;
  }();
  return records;
}

// ------------------------------------------------------------- evaluation
inline real combo_value(const LinearCombo& c,
                        const std::array<real, kMeasureCount>& values) {
  real s = 0.0L;
  for (const auto& [id, coeff] : c.terms)
    s += to_real(coeff) * values[static_cast<int>(id)];
  return s;
}

// Absolute slack rhs - lhs; the record holds iff the slack is (numerically)
// nonnegative.
inline real verify(const InequalityRecord& record, const Distribution& p,
                   const Distribution& q) {
  const auto values = measure_vector(p, q);
  return combo_value(record.rhs, values) - combo_value(record.lhs, values);
}

struct VerificationReport {
  std::size_t total = 0;   // record x pair evaluations performed
  std::size_t passed = 0;  // evaluations with slack >= -max(tol*scale, 1e-12)
  real worst_slack = 0.0L;  // most negative relative slack seen (0 if none)
  std::string worst_record;
  DistributionPair worst_pair;
  real tolerance = 0.0L;
};

inline constexpr real kAbsoluteSlackFloor = 1e-12L;

namespace verify_detail {

struct CompiledTerm {
  int id;
  real coeff;
};

struct CompiledRecord {
  const InequalityRecord* record;
  std::vector<CompiledTerm> lhs;
  std::vector<CompiledTerm> rhs;
};

inline std::vector<CompiledRecord> compile(
    const std::vector<InequalityRecord>& records) {
  std::vector<CompiledRecord> out;
  out.reserve(records.size());
  for (const InequalityRecord& r : records) {
    CompiledRecord c;
    c.record = &r;
    for (const auto& [id, coeff] : r.lhs.terms)
      c.lhs.push_back({static_cast<int>(id), to_real(coeff)});
    for (const auto& [id, coeff] : r.rhs.terms)
      c.rhs.push_back({static_cast<int>(id), to_real(coeff)});
    out.push_back(std::move(c));
  }
  return out;
}

inline real side_value(const std::vector<CompiledTerm>& side,
                       const std::array<real, kMeasureCount>& values) {
  real s = 0.0L;
  for (const CompiledTerm& t : side) s += t.coeff * values[t.id];
  return s;
}

struct BlockResult {
  std::size_t total = 0;
  std::size_t passed = 0;
  bool has_worst = false;
  real worst_slack = 0.0L;
  std::string worst_record;
  DistributionPair worst_pair;
};

// Relative slack is measured against max(scale, 1e-12/tol) so that
// worst_slack >= -tol holds exactly when every evaluation passed.
inline void run_block(const std::vector<CompiledRecord>& compiled,
                      const std::vector<DistributionPair>& pairs,
                      std::size_t begin, std::size_t end, real tol,
                      BlockResult& res) {
  const real scale_floor = kAbsoluteSlackFloor / tol;
  for (std::size_t pi = begin; pi < end; ++pi) {
    const DistributionPair& pr = pairs[pi];
    const auto values = measure_vector(pr.p, pr.q);
    for (const CompiledRecord& c : compiled) {
      const real lhs = side_value(c.lhs, values);
      const real rhs = side_value(c.rhs, values);
      const real slack = rhs - lhs;
      const real scale = std::max(std::fabs(lhs), std::fabs(rhs));
      ++res.total;
      if (slack >= -std::max(tol * scale, kAbsoluteSlackFloor)) ++res.passed;
      const real norm_slack = slack / std::max(scale, scale_floor);
      if (!res.has_worst || norm_slack < res.worst_slack ||
          (norm_slack == res.worst_slack &&
           c.record->label < res.worst_record)) {
        res.has_worst = true;
        res.worst_slack = norm_slack;
        res.worst_record = c.record->label;
        res.worst_pair = pr;
      }
    }
  }
}

}  // namespace verify_detail

inline VerificationReport verify_suite(
    const std::vector<InequalityRecord>& records,
    const std::vector<DistributionPair>& pairs, real tol,
    unsigned threads = 1) {
  if (!(tol > 0.0L))
    throw Error(ErrorCode::kConfigError, "tolerance must be positive");
  using namespace verify_detail;
  VerificationReport report;
  report.tolerance = tol;
  if (records.empty() || pairs.empty()) return report;

  const std::vector<CompiledRecord> compiled = compile(records);
  const std::size_t n = pairs.size();
  unsigned nthreads = std::max(1u, threads);
  nthreads = static_cast<unsigned>(
      std::min<std::size_t>(nthreads, n));

  std::vector<BlockResult> results(nthreads);
  if (nthreads == 1) {
    run_block(compiled, pairs, 0, n, tol, results[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    const std::size_t chunk = (n + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
      const std::size_t begin = std::min<std::size_t>(t * chunk, n);
      const std::size_t end = std::min<std::size_t>(begin + chunk, n);
      workers.emplace_back(run_block, std::cref(compiled), std::cref(pairs),
                           begin, end, tol, std::ref(results[t]));
    }
    for (std::thread& w : workers) w.join();
  }

  // Deterministic merge in pair order; exact ties keep the lowest label.
  bool has_worst = false;
  for (const BlockResult& r : results) {
    report.total += r.total;
    report.passed += r.passed;
    if (!r.has_worst) continue;
    if (!has_worst || r.worst_slack < report.worst_slack ||
        (r.worst_slack == report.worst_slack &&
         r.worst_record < report.worst_record)) {
      has_worst = true;
      report.worst_slack = r.worst_slack;
      report.worst_record = r.worst_record;
      report.worst_pair = r.worst_pair;
    }
  }
  return report;
}

// ------------------------------------------------- exact record expansion
// rhs - lhs as a primitive integer vector keyed by measure (denominators
// cleared, divided by the gcd).  Two records state the same inequality up
// to positive scaling iff their vectors are equal.
inline std::map<MeasureId, mpz_class> primitive_vector(
    const InequalityRecord& record) {
  std::map<MeasureId, Rational> diff;
  for (const auto& [id, c] : record.rhs.terms) diff[id] += c;
  for (const auto& [id, c] : record.lhs.terms) diff[id] -= c;
  for (auto it = diff.begin(); it != diff.end();) {
    if (it->second == 0)
      it = diff.erase(it);
    else
      ++it;
  }
  mpz_class den = 1;
  for (const auto& [id, c] : diff) {
    mpz_class d = c.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  std::map<MeasureId, mpz_class> ints;
  mpz_class g = 0;
  for (const auto& [id, c] : diff) {
    Rational scaled = c * Rational(den);
    ints[id] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[id].get_mpz_t());
  }
  if (g != 0)
    for (auto& [id, v] : ints) v /= g;
  return ints;
}

}  // namespace divlat
