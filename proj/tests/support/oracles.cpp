#include "oracles.hpp"

#include <queue>
#include <stdexcept>

namespace latticeiso::oracle {

using lattice::LatticeVector;

std::vector<std::pair<i64, i64>> two_squares_bruteforce(i64 r) {
    std::vector<std::pair<i64, i64>> out;
    for (i64 a = 0; a * a <= r; ++a) {
        for (i64 b = 0; b <= a; ++b) {
            if (a * a + b * b == r) out.emplace_back(a, b);
        }
    }
    return out;
}

namespace {

// All vectors of squared norm r, by direct scan.
std::vector<LatticeVector> step_vectors(i64 r) {
    std::vector<LatticeVector> steps;
    const i64 m = isqrt(r);
    for (i64 x = -m; x <= m; ++x) {
        for (i64 y = -m; y <= m; ++y) {
            if (x * x + y * y == r) steps.push_back({x, y});
        }
    }
    return steps;
}

struct Window {
    i64 half_width;
    i64 side;

    bool inside(LatticeVector v) const {
        return v.x >= -half_width && v.x <= half_width && v.y >= -half_width && v.y <= half_width;
    }
    std::size_t index(LatticeVector v) const {
        return static_cast<std::size_t>((v.x + half_width) * side + (v.y + half_width));
    }
};

}  // namespace

i64 component_count_bfs(i64 r) {
    const std::vector<LatticeVector> steps = step_vectors(r);
    if (steps.empty()) throw std::invalid_argument("r is not realized");
    const i64 w = ceil_isqrt(r);
    const Window window{4 * w, 8 * w + 1};
    const i64 quarter = 2 * w;

    std::vector<int> label(static_cast<std::size_t>(window.side) * window.side, -1);
    int next_label = 0;
    i64 counted = 0;

    for (i64 x = -window.half_width; x <= window.half_width; ++x) {
        for (i64 y = -window.half_width; y <= window.half_width; ++y) {
            const LatticeVector start{x, y};
            if (label[window.index(start)] != -1) continue;
            // BFS this component; its first-discovered point is the
            // lexicographic minimum because of the scan order.
            const int id = next_label++;
            std::queue<LatticeVector> queue;
            queue.push(start);
            label[window.index(start)] = id;
            while (!queue.empty()) {
                const LatticeVector at = queue.front();
                queue.pop();
                for (const LatticeVector s : steps) {
                    const LatticeVector to = at + s;
                    if (!window.inside(to)) continue;
                    if (label[window.index(to)] != -1) continue;
                    label[window.index(to)] = id;
                    queue.push(to);
                }
            }
            if (x >= -quarter && x <= quarter && y >= -quarter && y <= quarter) ++counted;
        }
    }
    return counted;
}

bool reachable_in_window(i64 r, LatticeVector a, LatticeVector b, i64 half_width) {
    const std::vector<LatticeVector> steps = step_vectors(r);
    const Window window{half_width, 2 * half_width + 1};
    if (!window.inside(a) || !window.inside(b)) throw std::invalid_argument("point outside window");
    std::vector<char> seen(static_cast<std::size_t>(window.side) * window.side, 0);
    std::queue<LatticeVector> queue;
    queue.push(a);
    seen[window.index(a)] = 1;
    while (!queue.empty()) {
        const LatticeVector at = queue.front();
        queue.pop();
        if (at == b) return true;
        for (const LatticeVector s : steps) {
            const LatticeVector to = at + s;
            if (!window.inside(to) || seen[window.index(to)]) continue;
            seen[window.index(to)] = 1;
            queue.push(to);
        }
    }
    return false;
}

namespace {

u64 paths_rec(const std::vector<LatticeVector>& steps, std::vector<LatticeVector>& path,
              LatticeVector at, LatticeVector target, unsigned remaining) {
    if (remaining == 0) return at == target ? 1 : 0;
    u64 total = 0;
    path.push_back(at);
    for (const LatticeVector s : steps) {
        const LatticeVector next = at + s;
        bool revisit = false;
        for (const LatticeVector q : path) {
            if (q == next) {
                revisit = true;
                break;
            }
        }
        if (!revisit) total += paths_rec(steps, path, next, target, remaining - 1);
    }
    path.pop_back();
    return total;
}

u64 walks_rec(const std::vector<LatticeVector>& steps, LatticeVector at, LatticeVector target,
              unsigned remaining) {
    if (remaining == 0) return at == target ? 1 : 0;
    u64 total = 0;
    for (const LatticeVector s : steps) {
        total += walks_rec(steps, at + s, target, remaining - 1);
    }
    return total;
}

}  // namespace

u64 count_paths_bruteforce(i64 r, unsigned length, LatticeVector u, LatticeVector v) {
    const std::vector<LatticeVector> steps = step_vectors(r);
    std::vector<LatticeVector> path;
    return paths_rec(steps, path, u, v, length);
}

u64 count_walks_bruteforce(i64 r, unsigned length, LatticeVector u, LatticeVector v) {
    const std::vector<LatticeVector> steps = step_vectors(r);
    return walks_rec(steps, u, v, length);
}

std::pair<i64, i64> unit_bezout_bruteforce(i64 a, i64 b) {
    for (i64 s = 0;; ++s) {
        const i64 rem = s * a + 1;
        if (rem % b == 0) return {s, rem / b};
    }
}

}  // namespace latticeiso::oracle
