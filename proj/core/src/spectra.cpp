#include "latticeiso/spectra.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "latticeiso/arith.hpp"

namespace latticeiso::spectra {

using lattice::LatticeVector;
using lattice::NeighborSet;

namespace {

NeighborSet neighbors_or_throw(i64 r) {
    NeighborSet nbrs = lattice::neighbor_vectors(r);
    if (nbrs.vectors.empty()) {
        throw NotRealizedError("r = " + std::to_string(r) + " is not a sum of two squares");
    }
    return nbrs;
}

arith::Radicand core_radicand_or_throw(i64 r) {
    arith::Radicand rad = arith::analyze_radicand(to_integer(r));
    if (!rad.realized || !rad.is_core()) {
        throw NotCoreRadicandError("r = " + std::to_string(r) +
                                   " has a prime factor not congruent to 1 mod 4");
    }
    return rad;
}

}  // namespace

RationalCosine reduce_cosine(i64 num, i64 den) {
    if (den == 0) throw std::invalid_argument("cosine with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::vector<i64> dot_spectrum(i64 r) {
    const NeighborSet nbrs = neighbors_or_throw(r);
    std::vector<i64> dots;
    for (std::size_t i = 0; i < nbrs.vectors.size(); ++i) {
        for (std::size_t j = i; j < nbrs.vectors.size(); ++j) {
            dots.push_back(lattice::dot(nbrs.vectors[i], nbrs.vectors[j]));
        }
    }
    std::sort(dots.begin(), dots.end());
    dots.erase(std::unique(dots.begin(), dots.end()), dots.end());
    return dots;
}

std::vector<RationalCosine> cosine_spectrum(i64 r) {
    std::vector<RationalCosine> out;
    for (const i64 d : dot_spectrum(r)) out.push_back(reduce_cosine(d, r));
    return out;
}

AngleWitness angle_witness(i64 r1, i64 r2) {
    if (r1 == r2) {
        throw IdenticalRadicandsError("r1 and r2 must be distinct, got " + std::to_string(r1));
    }
    const arith::Radicand rad1 = core_radicand_or_throw(r1);
    core_radicand_or_throw(r2);
    if (r1 < r2) throw std::invalid_argument("angle_witness requires r1 > r2");

    // Largest prime power dividing r1 but not r2.  One exists: otherwise
    // r1 would divide r2 < r1.
    AngleWitness witness;
    witness.r1 = r1;
    witness.r2 = r2;
    Integer best = 0;
    for (const auto& [prime, exponent] : rad1.p_part) {
        Integer pn = 1;
        unsigned n = 0;
        for (unsigned i = 0; i < exponent; ++i) {
            pn *= prime;
            ++n;
        }
        if (mpz_divisible_p(to_integer(r2).get_mpz_t(), pn.get_mpz_t())) continue;
        if (pn > best) {
            best = pn;
            witness.p = to_i64(prime);
            witness.n = n;
        }
    }
    if (best == 0) throw std::logic_error("no separating prime power for distinct core radicands");

    const arith::Representation rep = arith::primitive_representation(rad1.r);
    witness.a = to_i64(rep.a);
    witness.b = to_i64(rep.b);
    witness.cosine = reduce_cosine(2 * witness.a * witness.b, r1);

    // The lemma promises the angle is missing from r2's spectrum; the exact
    // check keeps the certificate honest.
    const i128 lhs = static_cast<i128>(2) * witness.a * witness.b * r2;
    for (const i64 d : dot_spectrum(r2)) {
        if (lhs == static_cast<i128>(r1) * d) {
            throw std::logic_error("angle witness invalidated by dot spectrum, r1 = " +
                                   std::to_string(r1) + ", r2 = " + std::to_string(r2));
        }
    }
    return witness;
}

bool is_angle_realized(RationalCosine cosine, i64 r) {
    const RationalCosine c = reduce_cosine(cosine.num, cosine.den);
    if (c.num > c.den || -c.num > c.den) {
        throw std::invalid_argument("cosine must lie in [-1, 1]");
    }
    for (const i64 d : dot_spectrum(r)) {
        if (static_cast<i128>(c.num) * r == static_cast<i128>(c.den) * d) return true;
    }
    return false;
}

}  // namespace latticeiso::spectra
