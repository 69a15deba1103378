#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "latticeiso/arith.hpp"
#include "latticeiso/lattice.hpp"
#include "support/oracles.hpp"

using namespace latticeiso;
using lattice::LatticeVector;

TEST_CASE("squared_norm and dot are exact") {
    CHECK(lattice::squared_norm({3, 4}) == 25);
    CHECK(lattice::squared_norm({0, 0}) == 0);
    CHECK(lattice::squared_norm({-2, 1}) == 5);
    CHECK(lattice::dot({4, 3}, {3, 4}) == 24);
    CHECK(lattice::dot({1, 1}, {1, -1}) == 0);
}

TEST_CASE("neighbor_vectors examples") {
    const auto n1 = lattice::neighbor_vectors(1);
    CHECK(n1.degree() == 4);
    const std::vector<LatticeVector> expected1{{-1, 0}, {0, -1}, {0, 1}, {1, 0}};
    CHECK(n1.vectors == expected1);

    const auto n2 = lattice::neighbor_vectors(2);
    CHECK(n2.degree() == 4);
    const std::vector<LatticeVector> expected2{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
    CHECK(n2.vectors == expected2);

    CHECK(lattice::neighbor_vectors(25).degree() == 12);
    CHECK(lattice::neighbor_vectors(3).vectors.empty());
}

TEST_CASE("neighbor_vectors is closed under negation and swap") {
    for (i64 r = 1; r <= 100; ++r) {
        const auto nbrs = lattice::neighbor_vectors(r);
        for (const LatticeVector v : nbrs.vectors) {
            CHECK(lattice::squared_norm(v) == r);
            CHECK(std::binary_search(nbrs.vectors.begin(), nbrs.vectors.end(), -v));
            CHECK(std::binary_search(nbrs.vectors.begin(), nbrs.vectors.end(), v.swapped()));
        }
    }
}

TEST_CASE("sublattice_index examples") {
    const std::vector<LatticeVector> full{{1, 0}, {0, 1}};
    CHECK(lattice::sublattice_index(full) == 1);

    const std::vector<LatticeVector> checker{{1, 1}, {1, -1}};
    CHECK(lattice::sublattice_index(checker) == 2);

    const std::vector<LatticeVector> rank1{{2, 0}};
    CHECK_FALSE(lattice::sublattice_index(rank1).has_value());

    CHECK_FALSE(lattice::sublattice_index(std::vector<LatticeVector>{}).has_value());
    CHECK(lattice::sublattice_index(std::vector<LatticeVector>{{3, 0}, {0, 3}, {1, 1}}) == 3);
}

TEST_CASE("component_count examples") {
    CHECK(lattice::component_count(1) == 1);
    CHECK(lattice::component_count(2) == 2);
    CHECK(lattice::component_count(9) == 9);
    CHECK_THROWS_AS(lattice::component_count(3), NotRealizedError);
}

TEST_CASE("component_count equals r / core for realized r up to 500") {
    for (i64 r = 1; r <= 500; ++r) {
        if (!arith::is_realized(to_integer(r))) continue;
        const i64 core = to_i64(arith::core_decompose(to_integer(r)).core);
        CHECK_MESSAGE(lattice::component_count(r) == r / core, "r = ", r);
    }
}

TEST_CASE("component_count matches the windowed BFS oracle up to 60") {
    for (i64 r = 1; r <= 60; ++r) {
        if (!arith::is_realized(to_integer(r))) continue;
        CHECK_MESSAGE(lattice::component_count(r) == oracle::component_count_bfs(r), "r = ", r);
    }
}

TEST_CASE("same_component examples") {
    CHECK(lattice::same_component(2, {0, 0}, {1, 1}));
    CHECK_FALSE(lattice::same_component(2, {0, 0}, {1, 0}));   // x + y stays even
    CHECK(lattice::same_component(25, {0, 0}, {1, 0}));        // connected graph
    CHECK_THROWS_AS(lattice::same_component(3, {0, 0}, {1, 0}), NotRealizedError);
}

TEST_CASE("same_component is an equivalence relation consistent with window BFS") {
    const std::array<i64, 3> radicands{2, 9, 25};
    for (const i64 r : radicands) {
        std::vector<LatticeVector> sample;
        for (i64 x = -3; x <= 3; x += 2) {
            for (i64 y = -3; y <= 3; y += 3) sample.push_back({x, y});
        }
        const i64 window = 8 * ceil_isqrt(r);
        for (const LatticeVector u : sample) {
            CHECK(lattice::same_component(r, u, u));
            for (const LatticeVector v : sample) {
                const bool uv = lattice::same_component(r, u, v);
                CHECK(uv == lattice::same_component(r, v, u));
                CHECK(uv == oracle::reachable_in_window(r, u, v, window));
                for (const LatticeVector w : sample) {
                    if (uv && lattice::same_component(r, v, w)) {
                        CHECK(lattice::same_component(r, u, w));
                    }
                }
            }
        }
    }
}

TEST_CASE("component_count_1d returns d") {
    CHECK(lattice::component_count_1d(1) == 1);
    CHECK(lattice::component_count_1d(2) == 2);
    CHECK(lattice::component_count_1d(7) == 7);
    CHECK_THROWS_AS(lattice::component_count_1d(0), std::invalid_argument);
}
