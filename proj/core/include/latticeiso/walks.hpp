#ifndef LATTICEISO_WALKS_HPP
#define LATTICEISO_WALKS_HPP

#include <cstdint>

#include "latticeiso/errors.hpp"
#include "latticeiso/integer.hpp"
#include "latticeiso/lattice.hpp"

namespace latticeiso::walks {

// Node budget for exact searches.  Exceeding it raises BudgetExceededError;
// results are never truncated.
struct SearchBudget {
    u64 max_nodes = 10'000'000;
};

struct PathCountQuery {
    i64 r = 0;
    unsigned length = 0;   // number of edges
    lattice::LatticeVector u;
    lattice::LatticeVector v;
};

// f_l(u, v): the exact number of vertex-distinct paths of the given length
// from u to v with every step of squared length r.  DFS pruned by the
// triangle inequality |p - v|^2 <= (remaining steps)^2 * r, which cannot
// change the count.
u64 count_paths(const PathCountQuery& query, const SearchBudget& budget = {});

// Number of length-l step sequences from u to v, vertex repetition allowed.
// Computed by l-fold convolution of the neighbor-set indicator on a grid of
// exact integers.
Integer count_walks(i64 r, unsigned length, lattice::LatticeVector u, lattice::LatticeVector v,
                    const SearchBudget& budget = {});

// True iff the straight run u = 0, p, 2p, ..., np is the unique path of
// length n from the origin to np.  Requires |p|^2 = r.
bool verify_collinear_uniqueness(i64 r, lattice::LatticeVector p, unsigned n,
                                 const SearchBudget& budget = {});

}  // namespace latticeiso::walks

#endif  // LATTICEISO_WALKS_HPP
