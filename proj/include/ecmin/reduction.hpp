// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <string>
#include <vector>

#include "ecmin/minimality.hpp"

namespace ecmin {

struct AdditivePrime {
    Int p;
    std::string rule;  // the table row that fired
};

struct ReductionReport {
    std::vector<AdditivePrime> additive;  // sorted by p
    bool semistable = false;
    std::vector<Int> allowed_set;  // populated for |T| > 4
};

/// The finite set of primes that can carry additive reduction; defined for
/// |T| > 4.
std::vector<Int> allowed_additive_primes(TorsionFamily t);

/// Closed-form additive primes with, for each prime, the satisfied condition
/// row.
ReductionReport additive_primes(const CanonicalParams& p);

struct SemistableResult {
    bool semistable;
    std::string rule;  // the matched condition row
};

/// Closed-form semistability test; always equals additive_primes(..) being
/// empty.
SemistableResult is_semistable(const CanonicalParams& p);

/// gcd-based oracle: primes dividing gcd(c4, disc) of a global minimal model.
std::vector<Int> additive_primes_general(const WeierstrassModel& m);

/// min_c4 and min_c6 are both odd (defined for C7, C9, C10, C12, C2xC6,
/// C2xC8).
bool corollary_parity_check(const CanonicalParams& p);

}  // namespace ecmin
