#include "latticeiso/arith.hpp"

#include <algorithm>

namespace latticeiso::arith {

namespace {

void require_positive(const Integer& n, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + " must be a positive integer, got " + n.get_str());
    }
}

}  // namespace

Factorization factorize(const Integer& n) {
    require_positive(n, "n");
    Factorization out;
    out.n = n;
    Integer rest = n;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e > 0) out.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    // Trial division over 6k +- 1 up to sqrt(rest).
    Integer d = 5;
    while (d * d <= rest) {
        strip(d);
        strip(d + 2);
        d += 6;
    }
    if (rest > 1) out.factors.push_back({rest, 1});
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
    return out;
}

Radicand analyze_radicand(const Integer& r) {
    require_positive(r, "r");
    Radicand rad;
    rad.r = r;
    rad.factorization = factorize(r);
    rad.realized = true;
    rad.h = 1;
    rad.core = 1;
    for (const auto& [p, e] : rad.factorization.factors) {
        if (p == 2) {
            rad.gamma = e;
            for (unsigned i = 0; i < e / 2; ++i) rad.h *= 2;
        } else if (p % 4 == 1) {
            rad.p_part.push_back({p, e});
            for (unsigned i = 0; i < e; ++i) rad.core *= p;
        } else {
            rad.q_part.push_back({p, e});
            if (e % 2 != 0) rad.realized = false;
            for (unsigned i = 0; i < e / 2; ++i) rad.h *= p;
        }
    }
    return rad;
}

bool is_realized(const Integer& r) {
    return analyze_radicand(r).realized;
}

std::vector<Representation> all_representations(const Integer& r) {
    require_positive(r, "r");
    std::vector<Representation> reps;
    // Canonical pairs a >= b >= 0 satisfy 2a^2 >= r, so a runs over
    // [ceil(sqrt(r/2)), floor(sqrt(r))].
    Integer a;
    mpz_sqrt(a.get_mpz_t(), Integer(r / 2).get_mpz_t());
    while (2 * a * a < r) ++a;
    for (; a * a <= r; ++a) {
        Integer b2 = r - a * a;
        if (mpz_perfect_square_p(b2.get_mpz_t())) {
            Integer b;
            mpz_sqrt(b.get_mpz_t(), b2.get_mpz_t());
            Integer g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            reps.push_back({a, b, r, g == 1});
        }
    }
    return reps;
}

Representation primitive_representation(const Integer& r) {
    const Radicand rad = analyze_radicand(r);
    if (!rad.realized) {
        throw NotRealizedError("r = " + r.get_str() + " is not a sum of two squares");
    }
    if (rad.gamma > 1 || !rad.q_part.empty()) {
        throw NoPrimitiveRepresentationError(
            "every representation of r = " + r.get_str() + " has gcd divisible by h = " + rad.h.get_str());
    }
    for (const auto& rep : all_representations(r)) {
        if (rep.primitive) return rep;
    }
    // Unreachable: existence is guaranteed when gamma <= 1 and no q-prime divides r.
    throw std::logic_error("primitive representation missing for r = " + r.get_str());
}

Integer mandatory_gcd_divisor(const Integer& r) {
    return analyze_radicand(r).h;
}

CoreDecomposition core_decompose(const Integer& r) {
    const Radicand rad = analyze_radicand(r);
    if (!rad.realized) {
        throw NotRealizedError("r = " + r.get_str() + " is not a sum of two squares");
    }
    CoreDecomposition out;
    out.core = rad.core;
    out.gamma = rad.gamma;
    for (const auto& [q, e] : rad.q_part) out.q_part.push_back({q, e / 2});
    return out;
}

BezoutPair solve_unit_bezout(const Integer& a, const Integer& b) {
    if (a < 0 || b < 1) {
        throw std::invalid_argument("solve_unit_bezout requires a >= 0 and b >= 1");
    }
    if (a % 2 != 0 || b % 2 != 1) {
        throw BadParityError("solve_unit_bezout requires a even and b odd, got a = " +
                             a.get_str() + ", b = " + b.get_str());
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) {
        throw NotCoprimeError("gcd(" + a.get_str() + ", " + b.get_str() + ") = " + g.get_str() + " != 1");
    }
    BezoutPair out;
    out.a = a;
    out.b = b;
    if (a == 0) {
        // b = 1 here; 0*a - 1*1 = -1.
        out.s = 0;
        out.t = 1;
        return out;
    }
    // s = -a^(-1) mod b is the unique solution in [0, b); t follows exactly.
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer s = (b - inv) % b;
    if (s < 0) s += b;
    out.s = s;
    out.t = (s * a + 1) / b;
    return out;
}

}  // namespace latticeiso::arith
