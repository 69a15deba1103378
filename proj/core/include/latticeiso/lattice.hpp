#ifndef LATTICEISO_LATTICE_HPP
#define LATTICEISO_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "latticeiso/errors.hpp"
#include "latticeiso/integer.hpp"

namespace latticeiso::lattice {

// A point or displacement of Z^2.  Coordinates passed in through public
// operations are bounded by kMaxCoordinate so that norms and determinants
// stay exact.
struct LatticeVector {
    i64 x = 0;
    i64 y = 0;

    friend LatticeVector operator+(LatticeVector a, LatticeVector b) { return {a.x + b.x, a.y + b.y}; }
    friend LatticeVector operator-(LatticeVector a, LatticeVector b) { return {a.x - b.x, a.y - b.y}; }
    friend LatticeVector operator*(i64 k, LatticeVector v) { return {k * v.x, k * v.y}; }
    LatticeVector operator-() const { return {-x, -y}; }
    LatticeVector swapped() const { return {y, x}; }
    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

i64 squared_norm(LatticeVector v);
i64 dot(LatticeVector a, LatticeVector b);

struct LatticeVectorHash {
    std::size_t operator()(const LatticeVector& v) const {
        u64 h = static_cast<u64>(v.x) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<u64>(v.y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// The full symmetry orbit of the representations of r: every w in Z^2 with
// |w|^2 = r, sorted lexicographically.  Its size is the degree of every
// vertex of G(Z^2, sqrt r); empty iff r is not realized.
struct NeighborSet {
    i64 r = 0;
    std::vector<LatticeVector> vectors;

    std::size_t degree() const { return vectors.size(); }
};

NeighborSet neighbor_vectors(i64 r);

// Reduced (triangular) basis of the subgroup of Z^2 generated by a list of
// vectors, with its index in Z^2.  index is empty when the subgroup has
// rank < 2.
struct SublatticeBasis {
    std::vector<LatticeVector> generators;   // reduced basis, 0..2 vectors
    std::optional<i64> index;

    bool contains(LatticeVector v) const;
};

SublatticeBasis reduce_sublattice(std::span<const LatticeVector> generators);
std::optional<i64> sublattice_index(std::span<const LatticeVector> generators);

// Number of connected components of G(Z^2, sqrt r): the index in Z^2 of the
// subgroup generated by the neighbor vectors.  Throws NotRealizedError when
// the graph has no edges.
i64 component_count(i64 r);

// True iff u and v lie in the same component, i.e. u - v is in the subgroup
// generated by the neighbor vectors of r.
bool same_component(i64 r, LatticeVector u, LatticeVector v);

// The one-dimensional warmup: G(Z, d) splits into exactly d components.
i64 component_count_1d(i64 d);

}  // namespace latticeiso::lattice

#endif  // LATTICEISO_LATTICE_HPP
