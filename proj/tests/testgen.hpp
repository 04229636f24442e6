#pragma once

// Shared instance generators for the unit and acceptance suites.

#include <random>
#include <vector>

#include "tfvs/detect.hpp"
#include "tfvs/tournament.hpp"

namespace testgen {

using tfvs::Rational;
using tfvs::Tournament;
using tfvs::VertexSet;
using tfvs::Weights;

inline Weights random_int_weights(int n, std::uint64_t seed, int max_weight = 10) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        values.emplace_back(static_cast<long long>(rng() % static_cast<std::uint64_t>(max_weight + 1)));
    }
    return Weights(std::move(values));
}

// T5-free by construction: a transitive chain of blocks of order <= 4 with
// every cross-block arc pointing forward.  Any 5-subset spans at least two
// blocks, and picking an arc inside its earliest block plus vertices of later
// blocks always yields a transitive 4-subset; blocks themselves are too small
// to host a T5 member.
inline Tournament chained_blocks_tournament(int target_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> sizes;
    int total = 0;
    while (total < target_n) {
        int s = 1 + static_cast<int>(rng() % 4);
        s = std::min(s, target_n - total);
        sizes.push_back(s);
        total += s;
    }
    Tournament t(total);
    int base = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i) {
            for (int j = i + 1; j < s; ++j) {
                if (rng() & 1u) {
                    t.orient(base + i, base + j);
                } else {
                    t.orient(base + j, base + i);
                }
            }
        }
        base += s;
    }
    return t;
}

// All isomorphism classes of order <= max_order that are T7-free and have
// every vertex on a directed triangle (the layering stage's precondition).
inline std::vector<Tournament> small_t7_free_all_on_triangle(int max_order) {
    std::vector<Tournament> out;
    for (int n = 3; n <= max_order; ++n) {
        auto codes = tfvs::enumerate_classes(n, [n](const Tournament& t) {
            if (tfvs::vertices_on_triangles(t).size() != n) return false;
            return n < 7 || !tfvs::in_t7(t);
        });
        for (std::uint64_t code : codes) out.push_back(tfvs::decode_arcs(n, code));
    }
    return out;
}

} // namespace testgen
