// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>
#include <vector>

#include "ecmin/canonical.hpp"

namespace ecmin {

/// y^2 + (1-g)xy - fy = x^3 - fx^2 with (0,0) a torsion point of the marked
/// order and f != 0.
struct TateNormalForm {
    Rat f, g;

    WeierstrassModel model() const { return {1 - g, -f, -f, Rat(0), Rat(0)}; }
};

/// Model with P moved to (0,0) (and a6 = 0).
WeierstrassModel translate_to_origin(const WeierstrassModel& m, const RationalPoint& p);

/// The unique Tate normal form of the pair (E, P); requires order >= 4.
TateNormalForm tate_normal_form(const WeierstrassModel& m, const RationalPoint& p,
                                int order);

/// All rational t with (f(t), g(t)) equal to the given pair, sorted. The C_N
/// rows are injective; the C2xC2M rows are 2:1 so two values can come back.
std::vector<Rat> recover_t_all(TorsionFamily t, const TateNormalForm& tnf);

/// The unique rational parameter; throws when none or ambiguous.
Rat recover_t(TorsionFamily t, const TateNormalForm& tnf);

struct Identification {
    int order = 0;
    CanonicalParams canonical;
    std::optional<TateNormalForm> tnf;  // orders >= 4 only
    std::optional<Rat> t;               // orders >= 3 only
};

/// Recover (T, canonical params) from an integral model and a marked torsion
/// point. Dispatches on the order of P; full 2-torsion splits C2 vs C2xC2.
Identification identify(const WeierstrassModel& m, const RationalPoint& p);

}  // namespace ecmin
