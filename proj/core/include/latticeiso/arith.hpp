#ifndef LATTICEISO_ARITH_HPP
#define LATTICEISO_ARITH_HPP

#include <vector>

#include "latticeiso/errors.hpp"
#include "latticeiso/integer.hpp"

namespace latticeiso::arith {

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with primes in strictly increasing order.
// factorize(1) has an empty factor list.
struct Factorization {
    Integer n;
    std::vector<PrimePower> factors;
};

Factorization factorize(const Integer& n);

// A squared distance r together with its factorization split into the
// power of two, the primes congruent to 1 mod 4 and the primes congruent
// to 3 mod 4.  `realized` tells whether r is a sum of two squares, i.e.
// whether every 3-mod-4 prime occurs to an even exponent.
struct Radicand {
    Integer r;
    Factorization factorization;
    unsigned gamma = 0;                // exponent of 2
    std::vector<PrimePower> p_part;    // p == 1 (mod 4), exponent alpha
    std::vector<PrimePower> q_part;    // q == 3 (mod 4), exponent as it occurs in r
    bool realized = false;
    Integer h;                         // 2^floor(gamma/2) * prod q^floor(exp/2)
    Integer core;                      // prod p^alpha

    bool is_core() const { return gamma == 0 && q_part.empty(); }
};

Radicand analyze_radicand(const Integer& r);

// True iff r = a^2 + b^2 for some integers a, b.
bool is_realized(const Integer& r);

// A solution a^2 + b^2 = r stored canonically with a >= b >= 0.
// gcd(0, b) is taken to be b, so (5, 0) counts as imprimitive for r = 25.
struct Representation {
    Integer a;
    Integer b;
    Integer r;
    bool primitive = false;

    friend bool operator==(const Representation&, const Representation&) = default;
};

// All canonical representations of r, sorted by ascending a.
// Empty exactly when r is not realized.
std::vector<Representation> all_representations(const Integer& r);

// The representation with gcd(a, b) = 1 and smallest a, which exists
// exactly when gamma <= 1 and no 3-mod-4 prime divides r.
// Throws NotRealizedError or NoPrimitiveRepresentationError otherwise.
Representation primitive_representation(const Integer& r);

// h = 2^floor(gamma/2) * prod q^beta; divides gcd(a, b) for every
// representation a^2 + b^2 = r.
Integer mandatory_gcd_divisor(const Integer& r);

// r = core * 2^gamma * prod q^(2 beta) with core a product of 1-mod-4
// primes only.  Requires r realized.
struct CoreDecomposition {
    Integer core;
    unsigned gamma = 0;
    std::vector<PrimePower> q_part;    // (q, beta)
};

CoreDecomposition core_decompose(const Integer& r);

// Minimal nonnegative s with s*a - t*b = -1 for coprime a even, b odd.
struct BezoutPair {
    Integer s;
    Integer t;
    Integer a;
    Integer b;
};

BezoutPair solve_unit_bezout(const Integer& a, const Integer& b);

}  // namespace latticeiso::arith

#endif  // LATTICEISO_ARITH_HPP
