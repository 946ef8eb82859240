// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ecmin/reduction.hpp"
#include "ecmin/recognition.hpp"

namespace ecmin {

/// Canonical parameter tuples with |a|,|b| <= bound (d over squarefree
/// |d| <= dbound for C2/C2xC2), plus branch-boundary extras: high 2-adic
/// valuations for C4/C2/C2xC2/C2xC4 and sampled c^3 d^2 e decompositions for
/// C3.
std::vector<FamilyParams> enumerate_canonical(TorsionFamily t, long bound,
                                              long dbound = 10,
                                              bool branch_extras = true);

struct SweepCounts {
    long tuples = 0;
    std::map<std::string, long> checks;  // check name -> tuples verified
    std::vector<std::string> failures;   // first few failure descriptions
    bool ok() const { return failures.empty(); }
};

/// Property checks run per canonical tuple by `verify` and the acceptance
/// suite. Bitmask selects check groups.
enum SweepCheck : unsigned {
    kCheckIdentity = 1u << 0,    // alpha^3 - beta^2 = 1728 gamma
    kCheckTables = 1u << 1,      // table polynomials match build_ET invariants
    kCheckOracle = 1u << 2,      // uT/minimal model path matches LKC
    kCheckReduction = 1u << 3,   // additive primes match the gcd oracle
    kCheckTorsion = 1u << 4,     // (0,0) has the marked order
    kCheckRoundTrip = 1u << 5,   // identify(build_ET) round-trips
    kCheckAll = ~0u,
};

SweepCounts sweep_family(TorsionFamily t, long bound, unsigned checks,
                         int jobs = 1, long dbound = 10);

/// Number of worker threads resolved from a --jobs argument (0 = hardware).
int resolve_jobs(int jobs);

}  // namespace ecmin
