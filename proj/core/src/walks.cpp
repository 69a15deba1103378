#include "latticeiso/walks.hpp"

#include <string>
#include <vector>

namespace latticeiso::walks {

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

i128 dist2(LatticeVector a, LatticeVector b) {
    const i128 dx = static_cast<i128>(a.x) - b.x;
    const i128 dy = static_cast<i128>(a.y) - b.y;
    return dx * dx + dy * dy;
}

struct PathSearch {
    const std::vector<LatticeVector>& steps;
    LatticeVector target;
    i64 r;
    u64 budget;
    u64 visited = 0;
    u64 found = 0;
    std::vector<LatticeVector> path;   // vertices on the current path

    bool on_path(LatticeVector p) const {
        for (const LatticeVector q : path) {
            if (q == p) return true;
        }
        return false;
    }

    void dfs(LatticeVector at, unsigned remaining) {
        if (++visited > budget) {
            throw BudgetExceededError("path search exceeded the budget of " +
                                      std::to_string(budget) + " nodes");
        }
        if (remaining == 0) {
            if (at == target) ++found;
            return;
        }
        // Triangle inequality: the rest of the path covers at most
        // remaining * sqrt(r) of straight-line distance.
        if (dist2(at, target) > static_cast<i128>(remaining) * remaining * r) return;
        path.push_back(at);
        for (const LatticeVector s : steps) {
            const LatticeVector next = at + s;
            if (!on_path(next)) dfs(next, remaining - 1);
        }
        path.pop_back();
    }
};

}  // namespace

u64 count_paths(const PathCountQuery& query, const SearchBudget& budget) {
    const NeighborSet nbrs = neighbors_or_throw(query.r);
    if (query.length == 0) return query.u == query.v ? 1 : 0;
    PathSearch search{nbrs.vectors, query.v, query.r, budget.max_nodes};
    search.dfs(query.u, query.length);
    return search.found;
}

Integer count_walks(i64 r, unsigned length, LatticeVector u, LatticeVector v,
                    const SearchBudget& budget) {
    const NeighborSet nbrs = neighbors_or_throw(r);
    const LatticeVector d = v - u;   // counts depend only on v - u
    if (length == 0) return d == LatticeVector{0, 0} ? 1 : 0;

    const i64 step = ceil_isqrt(r);   // per-step reach in either coordinate
    const i64 radius = static_cast<i64>(length) * step;
    const i64 side = 2 * radius + 1;
    if (static_cast<i128>(side) * side * nbrs.degree() * length >
        static_cast<i128>(budget.max_nodes)) {
        throw BudgetExceededError("walk grid of side " + std::to_string(side) +
                                  " exceeds the budget of " + std::to_string(budget.max_nodes) +
                                  " nodes");
    }
    if (d.x < -radius || d.x > radius || d.y < -radius || d.y > radius) return 0;

    const auto cell = [&](i64 x, i64 y) -> std::size_t {
        return static_cast<std::size_t>((x + radius) * side + (y + radius));
    };
    std::vector<Integer> counts(static_cast<std::size_t>(side) * side);
    std::vector<Integer> next(counts.size());
    counts[cell(0, 0)] = 1;

    for (unsigned i = 1; i <= length; ++i) {
        const i64 reach = static_cast<i64>(i) * step;   // support after i steps
        for (i64 x = -reach; x <= reach; ++x) {
            for (i64 y = -reach; y <= reach; ++y) {
                Integer& acc = next[cell(x, y)];
                acc = 0;
                for (const LatticeVector s : nbrs.vectors) {
                    const i64 px = x - s.x;
                    const i64 py = y - s.y;
                    if (px < -radius || px > radius || py < -radius || py > radius) continue;
                    acc += counts[cell(px, py)];
                }
            }
        }
        counts.swap(next);
    }
    return counts[cell(d.x, d.y)];
}

bool verify_collinear_uniqueness(i64 r, LatticeVector p, unsigned n, const SearchBudget& budget) {
    if (lattice::squared_norm(p) != r) {
        throw std::invalid_argument("p must have squared norm r");
    }
    if (n < 1) throw std::invalid_argument("n must be a positive integer");
    const PathCountQuery query{r, n, {0, 0}, static_cast<i64>(n) * p};
    return count_paths(query, budget) == 1;
}

}  // namespace latticeiso::walks
