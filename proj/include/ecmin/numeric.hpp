// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ecmin {

using Int = mpz_class;
using Rat = mpq_class;

/// Invalid or singular input (maps to CLI exit code 2).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Identification failure: non-torsion or trivial marked point (CLI exit 3).
struct IdentifyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int pow_int(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return out;
}

/// Nonnegative residue of n mod m (m > 0).
inline Int mod_pos(const Int& n, const Int& m) {
    Int r = n % m;
    if (r < 0) r += m;
    return r;
}

inline bool congruent(const Int& n, long r, long m) {
    return mod_pos(n, Int(m)) == mod_pos(Int(r), Int(m));
}

/// p-adic valuation with v_p(0) = +infinity.
struct Valuation {
    long v = 0;
    bool infinite = false;

    static Valuation infinity() { return {0, true}; }

    bool operator==(long k) const { return !infinite && v == k; }
    bool operator!=(long k) const { return !(*this == k); }
    bool operator>=(long k) const { return infinite || v >= k; }
    bool operator<=(long k) const { return !infinite && v <= k; }
    bool operator>(long k) const { return infinite || v > k; }
    bool operator<(long k) const { return !infinite && v < k; }
};

}  // namespace ecmin
