#ifndef LATTICEISO_SPECTRA_HPP
#define LATTICEISO_SPECTRA_HPP

#include <vector>

#include "latticeiso/errors.hpp"
#include "latticeiso/integer.hpp"
#include "latticeiso/lattice.hpp"

namespace latticeiso::spectra {

// An exact cosine: num/den in lowest terms with den > 0 and |num| <= den.
struct RationalCosine {
    i64 num = 0;
    i64 den = 1;

    friend bool operator==(const RationalCosine&, const RationalCosine&) = default;
    friend auto operator<=>(const RationalCosine&, const RationalCosine&) = default;
};

RationalCosine reduce_cosine(i64 num, i64 den);

// { w . w' : w, w' neighbor vectors of r }, sorted ascending.  Contains
// r and -r (parallel and antiparallel pairs).
std::vector<i64> dot_spectrum(i64 r);

// dot_spectrum(r) scaled by 1/r, reduced, sorted ascending.
std::vector<RationalCosine> cosine_spectrum(i64 r);

// An angle realized between two vectors of squared length r1 but not
// between any pair of squared length r2: v_a = <a,b>, v_b = <b,a> for the
// primitive representation a^2 + b^2 = r1, with a separating prime power
// p^n | r1, p^n does not divide r2.  For every d in dot_spectrum(r2) the
// exact inequality 2*a*b*r2 != r1*d holds.
struct AngleWitness {
    i64 r1 = 0;
    i64 r2 = 0;
    i64 a = 0;
    i64 b = 0;
    RationalCosine cosine;
    i64 p = 0;
    unsigned n = 0;

    friend bool operator==(const AngleWitness&, const AngleWitness&) = default;
};

// Requires r1 > r2 >= 1, both with all prime factors 1 mod 4.  The witness
// is deterministic: p^n is the largest prime power dividing r1 but not r2.
AngleWitness angle_witness(i64 r1, i64 r2);

// True iff some pair of neighbor vectors of r realizes the cosine exactly.
bool is_angle_realized(RationalCosine cosine, i64 r);

}  // namespace latticeiso::spectra

#endif  // LATTICEISO_SPECTRA_HPP
