// This file is part of ecmin.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ecmin/factor.hpp"

#include <algorithm>
#include <map>

namespace ecmin {

namespace {

constexpr unsigned long kTrialBound = 1000000;

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long r) {
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

// Deterministic below 3.317e24 with the first twelve prime bases; for larger
// inputs fall back to GMP's probabilistic test.
bool miller_rabin(const Int& n) {
    static const Int kDeterministicBound("3317044064679887385961981");
    if (n > kDeterministicBound) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == a) return true;
        if (miller_rabin_witness(n, Int(a), d, r)) return false;
    }
    return true;
}

Int pollard_brent(const Int& n) {
    // n odd composite, no factor below the trial bound.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xec51ul);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 2) + 1;
        Int x, ys, q = 1, g = 1;
        const long m = 128;
        long r = 1;
        while (g == 1) {
            x = y;
            for (long i = 0; i < r; ++i) y = (y * y + c) % n;
            long k = 0;
            while (k < r && g == 1) {
                ys = y;
                const long lim = std::min(m, r - k);
                for (long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = q * diff % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                if (diff < 0) diff = -diff;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out[n] += 1;
        return;
    }
    const Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Int FactoredInteger::value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) v *= pow_int(p, e);
    return v;
}

unsigned FactoredInteger::exponent(const Int& p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    return miller_rabin(n);
}

FactoredInteger factor(const Int& n) {
    if (n == 0) throw DomainError("factor: n must be nonzero");
    FactoredInteger out;
    out.sign = n < 0 ? -1 : 1;
    Int rem = abs(n);
    std::map<Int, unsigned> found;

    const auto strip = [&](unsigned long p) {
        if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            Int pp(static_cast<long>(p));
            const auto e = mpz_remove(rem.get_mpz_t(), rem.get_mpz_t(), pp.get_mpz_t());
            found[pp] = static_cast<unsigned>(e);
        }
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= kTrialBound && rem > 1; p += 6) {
        if (mpz_cmp_ui(rem.get_mpz_t(), p * p) < 0) break;
        strip(p);
        strip(p + 2);
    }
    if (rem > 1) {
        // Either rem < p^2 for the last trial p (so rem is prime), or every
        // factor exceeds the trial bound; composites <= bound^2 cannot occur.
        if (rem <= Int(kTrialBound) * Int(kTrialBound) || miller_rabin(rem))
            found[rem] += 1;
        else
            factor_into(rem, found);
    }
    out.factors.assign(found.begin(), found.end());
    return out;
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n < 1) throw DomainError("squarefree_decompose: n must be positive");
    Int g = 1, h = 1;
    for (const auto& [p, e] : factor(n).factors) {
        g *= pow_int(p, e / 2);
        if (e % 2) h *= p;
    }
    return {g, h};
}

std::tuple<Int, Int, Int> cube_square_decompose(const Int& a) {
    if (a < 1) throw DomainError("cube_square_decompose: a must be positive");
    Int c = 1, d = 1, e = 1;
    for (const auto& [p, k] : factor(a).factors) {
        c *= pow_int(p, k / 3);
        if (k % 3 == 2)
            d *= p;
        else if (k % 3 == 1)
            e *= p;
    }
    return {c, d, e};
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor(n).factors)
        if (e > 1) return false;
    return true;
}

}  // namespace ecmin
