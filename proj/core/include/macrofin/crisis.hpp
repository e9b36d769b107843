#pragma once

#include <optional>
#include <string_view>

#include "macrofin/params.hpp"

namespace macrofin {

/// Collapse thresholds: employment at or below e_floor, or net debt ell - m at
/// or above debt_ceiling, within `horizon` years. Numerical blow-up counts as
/// a collapse unless disabled.
struct CrisisCriterion {
  double e_floor = 0.05;
  double debt_ceiling = 10.0;
  double horizon = 150.0;
  bool count_blowup_as_crisis = true;
};

enum class CrisisReason { employment, debt, blowup };

std::string_view to_string(CrisisReason r);

/// Threshold test on a single state; employment is checked first.
inline std::optional<CrisisReason> crisis_condition(const EconState& s, const CrisisCriterion& c) {
  if (s.e <= c.e_floor) return CrisisReason::employment;
  if (s.ell - s.m >= c.debt_ceiling) return CrisisReason::debt;
  return std::nullopt;
}

}  // namespace macrofin
