#pragma once

#include <optional>
#include <vector>

#include "tfvs/tournament.hpp"

namespace tfvs {

// Covering LP:  min w^T x  s.t.  x(support) >= rhs per row,  x >= 0.
struct CoverRow {
    VertexSet support;
    Rational rhs;
};

struct CoverModel {
    int n = 0;
    std::vector<CoverRow> rows;
    Weights objective;
};

// A basic optimal primal together with an optimal dual.  The basis is
// certified by tight_rows and zero_vertices: |tight_rows| + |zero_vertices|
// = n, the corresponding constraints are linearly independent, and the primal
// is their unique common solution.
struct LpSolution {
    std::vector<Rational> primal;
    std::vector<Rational> dual; // one per model row
    Rational value;
    std::vector<int> tight_rows;  // rows with x(support) = rhs forced by the basis
    VertexSet zero_vertices;      // vertices with x = 0 forced by the basis
};

// Exact-rational primal simplex with Bland's rule, run on the dual
// (max 1^T diag(rhs) y, A^T y <= w, y >= 0), which is feasible at y = 0; the
// basic primal is read off the optimal basis.  Rejects malformed models
// (empty row support, out-of-range ids, rhs <= 0, negative weights).
LpSolution simplex_solve(const CoverModel& model);

// Checks that tight_rows plus zero_vertices form n linearly independent
// constraints uniquely satisfied by the primal, i.e. the primal is a vertex
// of the feasible polyhedron.
bool certify_basic(const CoverModel& model, const LpSolution& solution);

// One row (R, 1) per directed triangle R; with_t7 adds one row (Q, 3) per
// 7-subset Q inducing a T7 member.  Rows in lexicographic order, triangles
// first.  Full materialization, intended for n <= 12 cross-checks; the lazy
// route below is the default.
CoverModel build_fvs_model(const Tournament& t, const Weights& w, bool with_t7);

// Lexicographically first triangle row with x(R) < 1; failing that (and when
// with_t7) the lexicographically first T7 row with x(Q) < 3; absent certifies
// feasibility for the full model.  Requires x >= 0 of length n.
std::optional<CoverRow> separate(const Tournament& t, const std::vector<Rational>& x,
                                 bool with_t7 = true);

// Optimal basic solution of the full FVS relaxation via lazy row generation:
// iterate simplex_solve + separate until no violated row remains.  The dual
// of every never-generated row is 0.
struct SolvedLp {
    CoverModel model; // the generated rows
    LpSolution solution;
};
SolvedLp solve_fvs_lp(const Tournament& t, const Weights& w, bool with_t7);

} // namespace tfvs
