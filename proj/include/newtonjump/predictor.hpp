#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "newtonjump/constructions.hpp"

namespace newtonjump {

enum class GapCase { FirstJumpBand, PkpBand, Pkp2pMinus1, NuMinusP, SmallPCatalog };

inline std::string_view to_string(GapCase c) {
  switch (c) {
    case GapCase::FirstJumpBand: return "first-jump-band";
    case GapCase::PkpBand: return "pkp-band";
    case GapCase::Pkp2pMinus1: return "pkp-2p-1";
    case GapCase::NuMinusP: return "nu-minus-p";
    case GapCase::SmallPCatalog: return "small-p-catalog";
  }
  return "unknown";
}

enum class Applicability { Full, OracleOnly };

inline std::string_view to_string(Applicability a) {
  return a == Applicability::Full ? "full" : "oracle-only";
}

/// A value that may be left unattained. `definitive` gaps are proven
/// to be missed by every nondegenerate deformation; the others are upper
/// bounds ("except for at most").
struct PossibleGap {
  integer value = 0;
  GapCase case_tag = GapCase::FirstJumpBand;
  bool definitive = false;

  friend bool operator==(const PossibleGap&, const PossibleGap&) = default;
};

/// Inclusive range [lo, hi].
struct Interval {
  integer lo = 0;
  integer hi = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted integers -> maximal runs of consecutive values.
inline std::vector<Interval> to_intervals(const std::vector<integer>& sorted_values) {
  std::vector<Interval> out;
  for (integer v : sorted_values) {
    if (!out.empty() && out.back().hi + 1 == v) {
      out.back().hi = v;
    } else {
      out.push_back({v, v});
    }
  }
  return out;
}

struct GapReport {
  SQHParams params;
  integer mu = 0;
  integer mu_pkp = 0;
  std::vector<Interval> guaranteed;        // ascending
  std::vector<PossibleGap> possible_gaps;  // descending by value
  Applicability applicability = Applicability::Full;

  bool is_guaranteed(integer v) const {
    return std::any_of(guaranteed.begin(), guaranteed.end(), [v](const Interval& i) { return v >= i.lo && v <= i.hi; });
  }
  std::vector<integer> guaranteed_values() const {
    std::vector<integer> out;
    for (const auto& i : guaranteed)
      for (integer v = i.lo; v <= i.hi; ++v) out.push_back(v);
    return out;
  }
};

/// Milnor number of an SQH germ with weights (1/p, 1/q). For q = kp the
/// germ may be non-convenient; its Milnor number equals that of the
/// convenient germ with the same weights.
inline integer mu_sqh(integer p, integer q) {
  const SQHParams params = SQHParams::make(p, q);
  return triangle_newton_number(params.p, params.q);
}

/// Values of {1..mu} that are not guaranteed to be attained, with the
/// clause responsible for each. "Between A and B" is the open interval.
inline GapReport predicted_report(integer p, integer q) {
  const SQHParams params = SQHParams::make(p, q);
  const auto [pp, qq, k, r, m] = params;
  GapReport report;
  report.params = params;
  report.mu = triangle_newton_number(pp, qq);
  report.mu_pkp = triangle_newton_number(pp, checked_mul(k, pp));
  const integer mu = report.mu;
  const integer mu_pkp = report.mu_pkp;
  const bool even = pp % 2 == 0;

  std::vector<PossibleGap> gaps;
  auto add_open_band = [&](integer upper, integer lower, GapCase c, bool definitive) {
    for (integer v = upper - 1; v > lower; --v) gaps.push_back({v, c, definitive});
  };

  if (r == 0) {
    if (pp == 3) {
      gaps.push_back({mu - 1, GapCase::SmallPCatalog, true});
    } else if (pp == 4) {
      gaps.push_back({mu - 1, GapCase::SmallPCatalog, true});
      gaps.push_back({mu - 2, GapCase::SmallPCatalog, true});
      if (k >= 3) gaps.push_back({mu - 7, GapCase::SmallPCatalog, true});
    } else if (pp >= 5) {
      add_open_band(mu, mu - (pp - 1), GapCase::PkpBand, false);
      if (even) gaps.push_back({mu - (2 * pp - 1), GapCase::Pkp2pMinus1, false});
    }
  } else if (pp <= 4) {
    report.applicability = Applicability::OracleOnly;
    return report;
  } else {
    add_open_band(mu, mu - m, GapCase::FirstJumpBand, false);
    add_open_band(mu_pkp, mu_pkp - (pp - 1), GapCase::PkpBand, false);
    if (even) gaps.push_back({mu_pkp - (2 * pp - 1), GapCase::Pkp2pMinus1, false});
    if (even && r == pp - 1) gaps.push_back({mu - pp, GapCase::NuMinusP, false});
  }

  std::set<integer> seen;
  for (const auto& g : gaps) {
    if (g.value < 1 || g.value >= mu) continue;
    if (!seen.insert(g.value).second) continue;
    report.possible_gaps.push_back(g);
  }
  std::sort(report.possible_gaps.begin(), report.possible_gaps.end(),
            [](const PossibleGap& a, const PossibleGap& b) { return a.value > b.value; });

  std::vector<integer> guaranteed;
  for (integer v = 1; v <= mu; ++v)
    if (!seen.contains(v)) guaranteed.push_back(v);
  report.guaranteed = to_intervals(guaranteed);
  return report;
}

}  // namespace newtonjump
