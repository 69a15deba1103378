#include "latticeiso/certify.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "latticeiso/arith.hpp"
#include "latticeiso/lattice.hpp"

namespace latticeiso::certify {

namespace {

void require_realized(i64 r, const char* which) {
    if (r < 1 || !arith::is_realized(to_integer(r))) {
        throw NotRealizedError(std::string(which) + " = " + std::to_string(r) +
                               " is not a sum of two squares");
    }
}

i64 narrow_index(i128 v) {
    if (v > std::numeric_limits<i64>::max()) throw std::overflow_error("index exceeds 64 bits");
    return static_cast<i64>(v);
}

// Subgroup index as the gcd of all 2x2 minors of the generator list.  This
// is a different route than the triangularization used by
// lattice::component_count, so the verifier does not lean on it.
i64 component_count_by_minors(i64 r) {
    const lattice::NeighborSet nbrs = lattice::neighbor_vectors(r);
    if (nbrs.vectors.empty()) throw NotRealizedError("not realized");
    const auto gcd128 = [](i128 a, i128 b) {
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    i128 g = 0;
    for (std::size_t i = 0; i < nbrs.vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.vectors.size(); ++j) {
            const auto& u = nbrs.vectors[i];
            const auto& v = nbrs.vectors[j];
            i128 det = static_cast<i128>(u.x) * v.y - static_cast<i128>(u.y) * v.x;
            if (det < 0) det = -det;
            g = gcd128(g, det);
            if (g == 1) return 1;
        }
    }
    if (g == 0) throw std::logic_error("neighbor vectors of a realized r must span rank 2");
    return narrow_index(g);
}

i64 core_of(i64 r) { return to_i64(arith::analyze_radicand(to_integer(r)).core); }

bool verify_impl(const Certificate& c) {
    if (c.r1 < 1 || c.r2 < 1 || c.r1 == c.r2) return false;
    if (!arith::is_realized(to_integer(c.r1)) || !arith::is_realized(to_integer(c.r2))) return false;

    if (const auto* cc = std::get_if<ComponentCountCertificate>(&c.kind)) {
        if (cc->k1 == cc->k2) return false;
        return cc->k1 == component_count_by_minors(c.r1) &&
               cc->k2 == component_count_by_minors(c.r2);
    }

    const auto& as = std::get<AngleSpectrumCertificate>(c.kind);
    if (as.core1 != core_of(c.r1) || as.core2 != core_of(c.r2)) return false;
    if (as.core1 == as.core2) return false;
    // This kind only applies when the counts agree.
    if (component_count_by_minors(c.r1) != component_count_by_minors(c.r2)) return false;

    const spectra::AngleWitness& w = as.witness;
    if (w.r1 != std::max(as.core1, as.core2) || w.r2 != std::min(as.core1, as.core2)) return false;

    // Representation: a^2 + b^2 = r1 with coprime positive parts.
    if (w.a < 1 || w.b < 1) return false;
    if (static_cast<i128>(w.a) * w.a + static_cast<i128>(w.b) * w.b != w.r1) return false;
    if (std::gcd(w.a, w.b) != 1) return false;

    // Cosine: 2ab/r1 in lowest terms.
    if (w.cosine.den < 1 || std::gcd(w.cosine.num < 0 ? -w.cosine.num : w.cosine.num, w.cosine.den) != 1) {
        return false;
    }
    if (static_cast<i128>(2) * w.a * w.b * w.cosine.den != static_cast<i128>(w.cosine.num) * w.r1) {
        return false;
    }

    // Separating prime power: p = 1 (mod 4) prime, p^n | r1, p^n does not divide r2.
    if (w.p < 5 || w.p % 4 != 1 || w.n < 1) return false;
    if (!mpz_probab_prime_p(to_integer(w.p).get_mpz_t(), 40)) return false;
    Integer pn = 1;
    for (unsigned i = 0; i < w.n; ++i) pn *= to_integer(w.p);
    if (!mpz_divisible_p(to_integer(w.r1).get_mpz_t(), pn.get_mpz_t())) return false;
    if (mpz_divisible_p(to_integer(w.r2).get_mpz_t(), pn.get_mpz_t())) return false;

    // The angle really is missing: full re-enumeration of r2's spectrum.
    const i128 lhs = static_cast<i128>(2) * w.a * w.b * w.r2;
    for (const i64 d : spectra::dot_spectrum(w.r2)) {
        if (lhs == static_cast<i128>(w.r1) * d) return false;
    }
    return true;
}

}  // namespace

Certificate certify_nonisomorphic(i64 r1, i64 r2) {
    if (r1 == r2) {
        throw IdenticalRadicandsError("r1 and r2 must be distinct, got " + std::to_string(r1));
    }
    require_realized(r1, "r1");
    require_realized(r2, "r2");

    Certificate out;
    out.r1 = r1;
    out.r2 = r2;
    const i64 k1 = lattice::component_count(r1);
    const i64 k2 = lattice::component_count(r2);
    if (k1 != k2) {
        out.kind = ComponentCountCertificate{k1, k2};
        return out;
    }
    // Equal counts force distinct cores (k = r / core).
    const i64 core1 = core_of(r1);
    const i64 core2 = core_of(r2);
    const spectra::AngleWitness witness =
        spectra::angle_witness(std::max(core1, core2), std::min(core1, core2));
    out.kind = AngleSpectrumCertificate{core1, core2, witness};
    return out;
}

bool verify_certificate(const Certificate& certificate) {
    try {
        return verify_impl(certificate);
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace latticeiso::certify
