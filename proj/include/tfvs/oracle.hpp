#pragma once

#include <cstdint>

#include "tfvs/tournament.hpp"

namespace tfvs {

// Exact minimum with a certifying witness: no FVS has smaller weight.
struct OracleResult {
    Rational optimum;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
};

// Exhaustive branch-and-bound on triangles: find the lexicographically least
// triangle among undecided vertices and branch on which of its three vertices
// enters the FVS (complete, since an FVS must intersect every triangle).
// The incumbent starts from three_approx and branches are pruned at
// accumulated weight >= incumbent.  Dense instances beyond the size cap are
// rejected; callers may raise the cap.
OracleResult exact_min_fvs(const Tournament& t, const Weights& w, int size_cap = 18);

// Optimal value of the fractional triangle packing: maximize total y over
// triangles subject to per-vertex load <= weight.  Computed as the dual value
// of the triangle-only covering LP.
Rational max_fractional_packing(const Tournament& t, const Weights& w);

} // namespace tfvs
