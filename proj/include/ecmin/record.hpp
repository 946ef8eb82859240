// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>

#include <json.hpp>

#include "ecmin/recognition.hpp"
#include "ecmin/reduction.hpp"

namespace ecmin {

inline constexpr const char* kRecordVersion = "1.0";

/// Full analysis record (invariants, u_T, minimal model, factored minimal
/// discriminant, reduction data) for a family curve. Big integers serialize
/// as decimal strings.
nlohmann::json analyze_record(TorsionFamily t, const FamilyParams& raw);

/// Same, for a raw model with a marked point: identifies first and reports
/// the recovered family.
nlohmann::json analyze_record(const WeierstrassModel& m, const RationalPoint& p);

nlohmann::json identify_record(const WeierstrassModel& m, const RationalPoint& p);

std::string record_to_text(const nlohmann::json& rec);

}  // namespace ecmin
