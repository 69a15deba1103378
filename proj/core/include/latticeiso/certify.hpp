#ifndef LATTICEISO_CERTIFY_HPP
#define LATTICEISO_CERTIFY_HPP

#include <variant>

#include "latticeiso/errors.hpp"
#include "latticeiso/integer.hpp"
#include "latticeiso/spectra.hpp"

namespace latticeiso::certify {

// The graphs have different numbers of connected components.
struct ComponentCountCertificate {
    i64 k1 = 0;
    i64 k2 = 0;

    friend bool operator==(const ComponentCountCertificate&, const ComponentCountCertificate&) = default;
};

// Component counts agree, so the cores differ and some angle is realized at
// the larger core but not at the smaller one.
struct AngleSpectrumCertificate {
    i64 core1 = 0;
    i64 core2 = 0;
    spectra::AngleWitness witness;   // computed on the cores, larger first

    friend bool operator==(const AngleSpectrumCertificate&, const AngleSpectrumCertificate&) = default;
};

// A machine-checkable witness that G(Z^2, sqrt r1) and G(Z^2, sqrt r2) are
// not isomorphic.
struct Certificate {
    i64 r1 = 0;
    i64 r2 = 0;
    std::variant<ComponentCountCertificate, AngleSpectrumCertificate> kind;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Requires r1 != r2, both realized.  Emits a ComponentCount certificate when
// the counts differ, and an AngleSpectrum certificate on the cores otherwise.
Certificate certify_nonisomorphic(i64 r1, i64 r2);

// Recomputes every claimed fact from scratch (component counts through an
// independent subgroup-index route, the witness by full spectrum
// re-enumeration).  Malformed certificates yield false, never an exception.
bool verify_certificate(const Certificate& certificate);

}  // namespace latticeiso::certify

#endif  // LATTICEISO_CERTIFY_HPP
