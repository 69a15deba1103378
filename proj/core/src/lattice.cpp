#include "latticeiso/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "latticeiso/arith.hpp"

namespace latticeiso::lattice {

namespace {

void check_coordinate(i64 c, const char* what) {
    if (c > kMaxCoordinate || c < -kMaxCoordinate) {
        throw std::invalid_argument(std::string(what) + " coordinate out of supported range");
    }
}

void check_vector(LatticeVector v, const char* what) {
    check_coordinate(v.x, what);
    check_coordinate(v.y, what);
}

struct Vec128 {
    i128 x = 0;
    i128 y = 0;
};

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Extended gcd: returns g = gcd(a, b) and u, v with u*a + v*b = g.
i128 extgcd128(i128 a, i128 b, i128& u, i128& v) {
    if (b == 0) {
        u = (a < 0) ? -1 : 1;
        v = 0;
        return abs128(a);
    }
    i128 u1, v1;
    const i128 g = extgcd128(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

i64 narrow(i128 v, const char* what) {
    if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min()) {
        throw std::overflow_error(std::string(what) + " exceeds 64 bits");
    }
    return static_cast<i64>(v);
}

}  // namespace

i64 squared_norm(LatticeVector v) {
    const i128 n = static_cast<i128>(v.x) * v.x + static_cast<i128>(v.y) * v.y;
    return narrow(n, "squared norm");
}

i64 dot(LatticeVector a, LatticeVector b) {
    const i128 d = static_cast<i128>(a.x) * b.x + static_cast<i128>(a.y) * b.y;
    return narrow(d, "dot product");
}

NeighborSet neighbor_vectors(i64 r) {
    if (r < 1) throw std::invalid_argument("r must be a positive integer");
    NeighborSet out;
    out.r = r;
    for (const auto& rep : arith::all_representations(to_integer(r))) {
        const i64 a = to_i64(rep.a);
        const i64 b = to_i64(rep.b);
        out.vectors.push_back({a, b});
        out.vectors.push_back({b, a});
        out.vectors.push_back({-a, b});
        out.vectors.push_back({b, -a});
        out.vectors.push_back({a, -b});
        out.vectors.push_back({-b, a});
        out.vectors.push_back({-a, -b});
        out.vectors.push_back({-b, -a});
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    out.vectors.erase(std::unique(out.vectors.begin(), out.vectors.end()), out.vectors.end());
    return out;
}

SublatticeBasis reduce_sublattice(std::span<const LatticeVector> generators) {
    // Triangular form: e1 = (x1, 0) with x1 > 0, e2 = (x2, y2) with y2 > 0.
    i128 x1 = 0;
    bool have_e2 = false;
    Vec128 e2;

    auto fold_x = [&](i128 x) { x1 = gcd128(x1, x); };

    for (const LatticeVector g : generators) {
        check_vector(g, "generator");
        Vec128 v{g.x, g.y};
        if (v.y == 0) {
            fold_x(v.x);
            continue;
        }
        if (!have_e2) {
            if (v.y < 0) { v.x = -v.x; v.y = -v.y; }
            e2 = v;
            have_e2 = true;
            continue;
        }
        // Combine so the new e2 carries gcd of the y parts; the leftover has y = 0.
        i128 u, w;
        const i128 gy = extgcd128(e2.y, v.y, u, w);
        const Vec128 merged{u * e2.x + w * v.x, gy};
        const i128 k2 = v.y / gy;
        const i128 k1 = e2.y / gy;
        fold_x(k2 * e2.x - k1 * v.x);
        e2 = merged;
        // Keep e2.x small; shifting by multiples of (x1, 0) stays in the lattice.
        if (x1 > 0) e2.x %= x1;
    }

    SublatticeBasis out;
    if (have_e2 && x1 > 0) {
        // Normalize x2 into [0, x1).
        i128 x2 = e2.x % x1;
        if (x2 < 0) x2 += x1;
        out.generators.push_back({narrow(x1, "basis"), 0});
        out.generators.push_back({narrow(x2, "basis"), narrow(e2.y, "basis")});
        out.index = narrow(x1 * e2.y, "sublattice index");
    } else if (have_e2) {
        out.generators.push_back({narrow(e2.x, "basis"), narrow(e2.y, "basis")});
    } else if (x1 > 0) {
        out.generators.push_back({narrow(x1, "basis"), 0});
    }
    return out;
}

bool SublatticeBasis::contains(LatticeVector v) const {
    check_vector(v, "point");
    if (generators.empty()) return v == LatticeVector{0, 0};
    if (generators.size() == 1) {
        const LatticeVector e = generators[0];
        if (e.y == 0) return v.y == 0 && v.x % e.x == 0;
        if (v.y % e.y != 0) return false;
        const i64 m = v.y / e.y;
        return v.x == m * e.x;
    }
    const LatticeVector e1 = generators[0];
    const LatticeVector e2 = generators[1];
    if (v.y % e2.y != 0) return false;
    const i128 m = v.y / e2.y;
    const i128 rest = static_cast<i128>(v.x) - m * e2.x;
    return rest % e1.x == 0;
}

std::optional<i64> sublattice_index(std::span<const LatticeVector> generators) {
    return reduce_sublattice(generators).index;
}

i64 component_count(i64 r) {
    const NeighborSet nbrs = neighbor_vectors(r);
    if (nbrs.vectors.empty()) {
        throw NotRealizedError("r = " + std::to_string(r) +
                               " is not a sum of two squares; every vertex is isolated");
    }
    const auto index = sublattice_index(nbrs.vectors);
    if (!index) throw std::logic_error("neighbor vectors of a realized r must span rank 2");
    return *index;
}

bool same_component(i64 r, LatticeVector u, LatticeVector v) {
    const NeighborSet nbrs = neighbor_vectors(r);
    if (nbrs.vectors.empty()) {
        throw NotRealizedError("r = " + std::to_string(r) +
                               " is not a sum of two squares; every vertex is isolated");
    }
    check_vector(u, "u");
    check_vector(v, "v");
    return reduce_sublattice(nbrs.vectors).contains(u - v);
}

i64 component_count_1d(i64 d) {
    if (d < 1) throw std::invalid_argument("d must be a positive integer");
    return d;
}

}  // namespace latticeiso::lattice
