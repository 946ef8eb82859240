// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "ecmin/numeric.hpp"

namespace ecmin {

/// Signed prime factorization: sign * prod p_i^e_i with strictly increasing
/// primes and exponents >= 1.
struct FactoredInteger {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;

    Int value() const;
    /// Exponent of p (0 when absent).
    unsigned exponent(const Int& p) const;
    bool operator==(const FactoredInteger&) const = default;
};

bool is_prime(const Int& n);

/// Complete factorization of a nonzero integer; trial division to 10^6, then
/// Pollard rho (Brent) with Miller-Rabin on cofactors.
FactoredInteger factor(const Int& n);

/// n = g^2 * h with h squarefree, for n >= 1.
std::pair<Int, Int> squarefree_decompose(const Int& n);

/// a = c^3 * d^2 * e with d, e positive squarefree and coprime, for a >= 1.
std::tuple<Int, Int, Int> cube_square_decompose(const Int& a);

bool is_squarefree(const Int& n);

}  // namespace ecmin
