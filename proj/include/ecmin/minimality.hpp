// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>

#include "ecmin/canonical.hpp"

namespace ecmin {

struct UTResult {
    Int u;
    std::string branch;  // stable case identifier, e.g. "C2:u2:4<=v2diff<=7"
};

struct MinimalityResult {
    Int uT;
    std::string branch;
    WeierstrassModel minimal_model;  // integral global minimal model
    Int min_disc;                    // uT^-12 * gamma_T
    FactoredInteger min_disc_factored;
    Int min_c4, min_c6;
};

/// Necessary-and-sufficient u_T from the case table.
UTResult compute_uT(const CanonicalParams& p);

/// uT^-12 gamma_T with its full factorization.
FactoredInteger minimal_discriminant(const CanonicalParams& p);

/// Explicit global minimal model via x -> uT^2 x + r_T, y -> uT^3 y + uT^2 s_T x.
WeierstrassModel global_minimal_model(const CanonicalParams& p);

/// The full closed-form pipeline (u_T, minimal model, factored minimal
/// discriminant and minimal invariants).
MinimalityResult minimality(const CanonicalParams& p);

/// Kraus: integers (c4, c6) with 1728 | c4^3 - c6^2 (nonzero quotient) are
/// the invariants of an integral Weierstrass model iff v3(c6) != 2 and either
/// c6 = 3 mod 4 or (v2(c4) >= 4 and c6 = 0, 8 mod 32). v(0) counts as
/// infinity.
bool kraus_admissible(const Int& c4, const Int& c6);

/// Independent Laska-Kraus-Connell oracle for any integral nonsingular model.
MinimalityResult lkc_minimal_model(const WeierstrassModel& m);

struct FreyResult {
    MinimalityResult result;
    FamilyParams canonical;  // the (a, b, 1) labeling the closed form uses
};

/// Minimal data of the Frey curve y^2 = x(x+a)(x+b) for coprime a, b with
/// ab(a-b) != 0. u = 2 exactly when the canonical labeling has
/// a = 0 mod 16 and b = 1 mod 4.
FreyResult frey_minimal(const Int& a, const Int& b);

/// Integral model with the given Kraus-admissible invariants, found by the
/// standard congruence completion (a1, a3 in {0,1}, a2 in {-1,0,1}).
WeierstrassModel model_from_c4c6(const Int& c4, const Int& c6);

}  // namespace ecmin
