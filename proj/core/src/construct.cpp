#include "latticeiso/construct.hpp"

#include <string>
#include <unordered_map>

#include "latticeiso/arith.hpp"

namespace latticeiso::construct {

using lattice::LatticeVector;

LatticeVector PathWitness::end() const {
    LatticeVector at = start;
    for (const LatticeVector s : steps) at = at + s;
    return at;
}

std::vector<LatticeVector> PathWitness::vertices() const {
    std::vector<LatticeVector> out;
    out.reserve(steps.size() + 1);
    out.push_back(start);
    for (const LatticeVector s : steps) out.push_back(out.back() + s);
    return out;
}

namespace {

struct UnitTranslationParams {
    i64 a;   // even
    i64 b;   // odd
    i64 s;
    i64 t;
};

UnitTranslationParams unit_params(i64 r) {
    const arith::Radicand rad = arith::analyze_radicand(to_integer(r));
    if (!rad.realized || !rad.is_core()) {
        throw NotCoreRadicandError("r = " + std::to_string(r) +
                                   " has a prime factor not congruent to 1 mod 4");
    }
    const arith::Representation rep = arith::primitive_representation(rad.r);
    // r is odd, so exactly one of the pair is even; the construction wants it first.
    i64 a = to_i64(rep.a);
    i64 b = to_i64(rep.b);
    if (a % 2 != 0) std::swap(a, b);
    const arith::BezoutPair bez = arith::solve_unit_bezout(to_integer(a), to_integer(b));
    return {a, b, to_i64(bez.s), to_i64(bez.t)};
}

}  // namespace

std::vector<LatticeVector> unit_translation(i64 r) {
    const auto [a, b, s, t] = unit_params(r);
    std::vector<LatticeVector> out;
    const u64 total = static_cast<u64>(s + t) * static_cast<u64>(a + b - 1) + 1;
    out.reserve(total);

    const auto emit = [&out](u64 copies, LatticeVector v) {
        for (u64 i = 0; i < copies; ++i) out.push_back(v);
    };

    out.push_back({a, b});
    const u64 half_a = static_cast<u64>(a / 2);
    emit(half_a * s, {a, b});
    emit(half_a * s, {a, -b});
    emit(half_a * t, {-b, a});
    emit(half_a * t, {-b, -a});
    const u64 half_b = static_cast<u64>((b - 1) / 2);
    emit(half_b * s, {b, a});
    emit(half_b * s, {-b, a});
    emit(half_b * t, {a, -b});
    emit(half_b * t, {-a, -b});
    return out;
}

std::vector<LatticeVector> axis_translation(i64 r, AxisDirection direction) {
    std::vector<LatticeVector> out = unit_translation(r);
    switch (direction) {
        case AxisDirection::PlusY:
            break;
        case AxisDirection::MinusY:
            for (LatticeVector& v : out) v = -v;
            break;
        case AxisDirection::PlusX:
            for (LatticeVector& v : out) v = v.swapped();
            break;
        case AxisDirection::MinusX:
            for (LatticeVector& v : out) v = -v.swapped();
            break;
    }
    return out;
}

PathWitness build_path(i64 r, LatticeVector u, LatticeVector v) {
    PathWitness witness;
    witness.r = r;
    witness.start = u;
    const LatticeVector d = v - u;
    if (d == LatticeVector{0, 0}) {
        unit_params(r);   // still validate the radicand
        return witness;
    }
    const auto append_axis = [&](AxisDirection dir, i64 count) {
        if (count == 0) return;
        const std::vector<LatticeVector> unit = axis_translation(r, dir);
        witness.steps.reserve(witness.steps.size() + unit.size() * static_cast<u64>(count));
        for (i64 i = 0; i < count; ++i) {
            witness.steps.insert(witness.steps.end(), unit.begin(), unit.end());
        }
    };
    append_axis(d.x >= 0 ? AxisDirection::PlusX : AxisDirection::MinusX, d.x >= 0 ? d.x : -d.x);
    append_axis(d.y >= 0 ? AxisDirection::PlusY : AxisDirection::MinusY, d.y >= 0 ? d.y : -d.y);
    return witness;
}

PathWitness loop_erase(const PathWitness& witness) {
    std::vector<LatticeVector> vertices;
    vertices.reserve(witness.steps.size() + 1);
    vertices.push_back(witness.start);
    std::unordered_map<LatticeVector, std::size_t, lattice::LatticeVectorHash> position;
    position.emplace(witness.start, 0);

    for (const LatticeVector s : witness.steps) {
        if (lattice::squared_norm(s) != witness.r) {
            throw std::invalid_argument("witness step with squared norm != r");
        }
        const LatticeVector next = vertices.back() + s;
        if (const auto it = position.find(next); it != position.end()) {
            // Erase the cycle: drop everything after the first visit.
            for (std::size_t i = it->second + 1; i < vertices.size(); ++i) {
                position.erase(vertices[i]);
            }
            vertices.resize(it->second + 1);
        } else {
            position.emplace(next, vertices.size());
            vertices.push_back(next);
        }
    }

    PathWitness out;
    out.r = witness.r;
    out.start = witness.start;
    out.steps.reserve(vertices.size() - 1);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
        out.steps.push_back(vertices[i] - vertices[i - 1]);
    }
    return out;
}

}  // namespace latticeiso::construct
