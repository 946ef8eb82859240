// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "ecmin/weierstrass.hpp"

namespace ecmin {

/// The fifteen parameterized families covering all non-trivial rational
/// torsion structures (C3 splits into C3 and the j=0 family C3_0).
enum class TorsionFamily {
    C2, C3, C3_0, C4, C5, C6, C7, C8, C9, C10, C12, C2xC2, C2xC4, C2xC6, C2xC8
};

inline constexpr std::array<TorsionFamily, 15> kAllFamilies = {
    TorsionFamily::C2,    TorsionFamily::C3,    TorsionFamily::C3_0,
    TorsionFamily::C4,    TorsionFamily::C5,    TorsionFamily::C6,
    TorsionFamily::C7,    TorsionFamily::C8,    TorsionFamily::C9,
    TorsionFamily::C10,   TorsionFamily::C12,   TorsionFamily::C2xC2,
    TorsionFamily::C2xC4, TorsionFamily::C2xC6, TorsionFamily::C2xC8};

std::string_view family_name(TorsionFamily t);
std::optional<TorsionFamily> family_from_name(std::string_view name);
/// 1 for C3_0, 3 for C2 and C2xC2, 2 otherwise.
int family_arity(TorsionFamily t);
/// Group order |T| (C3_0 counts as 3).
int family_order(TorsionFamily t);
/// Order of the marked point (0,0) on the family model.
int marked_point_order(TorsionFamily t);

/// Parameter tuple; b is unused for C3_0, d is used only by C2 and C2xC2
/// (kept at 1 otherwise).
struct FamilyParams {
    Int a, b = 0, d = 1;
    bool operator==(const FamilyParams&) const = default;
};

/// alpha = c4, beta = c6, gamma = disc of the family model, as exact
/// evaluations of the printed table polynomials.
struct FamilyInvariants {
    Int alpha, beta, gamma;
};

/// The family model E_T (integral, a6 = 0).
WeierstrassModel build_ET(TorsionFamily t, const FamilyParams& p);

/// The invariant polynomials as literal data; the test suite cross-checks
/// them against the generic formulas applied to build_ET.
FamilyInvariants family_invariants(TorsionFamily t, const FamilyParams& p);

/// Tate normal form y^2 + (1-g)xy - fy = x^3 - fx^2 of the one-parameter
/// universal family (for C3: y^2 + xy + ty = x^3). Rejects parameters where
/// a denominator vanishes or the model is singular.
WeierstrassModel universal_curve(TorsionFamily t, const Rat& tval);

/// The (f, g) pair of the universal curve; not defined for C3, C2, C2xC2,
/// C3_0.
std::pair<Rat, Rat> universal_fg(TorsionFamily t, const Rat& tval);

/// w_T with (u,r,s,w) = (1/w_T,0,0,0) mapping X_{b/a}(T) onto E_T(a,b).
Int rescale_factor_wT(TorsionFamily t, const Int& a, const Int& b);

/// delta_T of the ideal-containment table; symbolic entries carry a
/// parameter multiplier ('a' for C3/C4, 'd' for C2/C2xC2, none otherwise).
struct DeltaConstant {
    Int constant;
    char multiplier = 0;
};
DeltaConstant delta_constant(TorsionFamily t);

}  // namespace ecmin
