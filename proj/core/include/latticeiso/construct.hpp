#ifndef LATTICEISO_CONSTRUCT_HPP
#define LATTICEISO_CONSTRUCT_HPP

#include <cstddef>
#include <vector>

#include "latticeiso/errors.hpp"
#include "latticeiso/integer.hpp"
#include "latticeiso/lattice.hpp"

namespace latticeiso::construct {

// A walk in G(Z^2, sqrt r): a start point and a sequence of steps, each of
// squared length exactly r.  Not necessarily vertex-distinct; see loop_erase.
struct PathWitness {
    i64 r = 0;
    lattice::LatticeVector start;
    std::vector<lattice::LatticeVector> steps;

    std::size_t length() const { return steps.size(); }
    lattice::LatticeVector end() const;
    std::vector<lattice::LatticeVector> vertices() const;
};

// The vector list realizing the translation by (0, 1): with r = a^2 + b^2,
// gcd(a, b) = 1, a even, b odd and s*a - t*b = -1, emits
//
//   <a,b> + (a/2)[s<a,b> + s<a,-b> + t<-b,a> + t<-b,-a>]
//         + ((b-1)/2)[s<b,a> + s<-b,a> + t<a,-b> + t<-a,-b>]
//
// which has (s+t)(a+b-1) + 1 entries, each of squared norm r, summing to
// (0, 1).  Requires every prime factor of r to be 1 mod 4.
std::vector<lattice::LatticeVector> unit_translation(i64 r);

enum class AxisDirection { PlusX, MinusX, PlusY, MinusY };

// unit_translation reflected to sum to the requested unit vector.
std::vector<lattice::LatticeVector> axis_translation(i64 r, AxisDirection direction);

// A walk from u to v made of axis translations, x moves first.  Its length
// is ((s+t)(a+b-1)+1) * (|x|+|y|) for (x, y) = v - u, which stays below
// 8 r^(3/2) whenever |u - v| < sqrt r.
PathWitness build_path(i64 r, lattice::LatticeVector u, lattice::LatticeVector v);

// Standard loop erasure on first revisit: a vertex-distinct path with the
// same endpoints and the same r, never longer than the input.
PathWitness loop_erase(const PathWitness& witness);

}  // namespace latticeiso::construct

#endif  // LATTICEISO_CONSTRUCT_HPP
