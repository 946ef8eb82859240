// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <optional>

#include "ecmin/factor.hpp"
#include "ecmin/families.hpp"

namespace ecmin {

/// a = c^3 d^2 e (C3) or a = c^2 d, e = 1 (C4).
struct CubeSquareParts {
    Int c, d, e;
};

/// Parameters in canonical form, together with the admissible change
/// mapping build_ET(T, raw) onto build_ET(T, canonical).
struct CanonicalParams {
    TorsionFamily family = TorsionFamily::C2;
    FamilyParams params;
    std::optional<CubeSquareParts> decomposition;  // C3 and C4 only
    AdmissibleChange provenance;
};

/// Reduce raw parameters to canonical form:
///   - 2-parameter families: gcd(a,b) = 1, a > 0;
///   - C2: gcd(a,b) squarefree, d squarefree with d not in {0,1}, b > 0;
///   - C2xC2: gcd(a,b) = 1, d > 0 squarefree, a even;
///   - C3_0: a > 0 cubefree.
/// Rejects singular parameters (gamma_T = 0) and C2 inputs whose 2-torsion is
/// full (d collapses to 1: caller must use C2xC2).
CanonicalParams canonicalize(TorsionFamily t, const FamilyParams& raw);

/// Wrap parameters that are already canonical (validated; identity
/// provenance).
CanonicalParams assume_canonical(TorsionFamily t, const FamilyParams& p);

/// True when the parameters satisfy the canonical-class constraints.
bool is_canonical(TorsionFamily t, const FamilyParams& p);

}  // namespace ecmin
