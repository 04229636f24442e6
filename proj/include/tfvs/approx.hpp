#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tfvs/lp.hpp"
#include "tfvs/tournament.hpp"

namespace tfvs {

// Which stage put a vertex into the FVS.
enum class StageTag {
    rounding,      // stage one, LP value >= 3/7
    layers_s,      // an S_{2j} part of a layer decomposition
    layers_parity, // the discarded (lighter) parity class
    layers_cdz,    // exact FVS of a kept layer
    baseline,      // local-ratio 3-approximation
    exact,         // exact solve (standalone CDZ)
};

const char* stage_tag_name(StageTag tag);

// One stage-one iteration: the vertices rounded up, their weight, and the LP
// value of the residual after removal and triangle-free cleanup.
struct RoundingIteration {
    VertexSet rounded;
    Rational rounded_weight;
    Rational lp_value_after;
};

struct RoundingTrace {
    Rational initial_lp_value{0};          // LP value of the cleaned input
    std::vector<RoundingIteration> iterations;
    std::map<int, Rational> final_x;       // residual vertex (original id) -> x*
};

struct FvsResult {
    VertexSet fvs;       // original ids
    Rational weight{0};
    std::map<int, StageTag> stage_tags;
    RoundingTrace trace; // populated by iterative_rounding / seven_thirds_fvs
};

// Stage one: solve the relaxation with T7 rows, round every x*_v >= 3/7 into
// F, drop vertices on no triangle (keep SCCs of size >= 3), repeat.  On exit
// the residual is T7-free, every residual x*_v < 3/7, and every residual
// vertex lies on a triangle.  The trace carries the per-iteration LP values.
struct StageOneResult {
    FvsResult partial;
    Induced residual;
};
StageOneResult iterative_rounding(const Tournament& t, const Weights& w);

// Exact minimum-weight FVS of a T5-free tournament, via the integrality of
// the triangle covering polyhedron: a basic optimum of the triangle-only LP
// is 0/1 and its support is returned.  Throws PreconditionError with a
// witness if the input is not T5-free; throws InvariantViolation if the basic
// optimum is fractional (a solver bug, never the input's fault).  Passing
// check_t5_free = false skips the witness scan; the integrality check still
// guards the result.
FvsResult cdz_t5free_fvs(const Tournament& t, const Weights& w, bool check_t5_free = true);

// One run of the layering loop.  Layer U_i and part S_{2j} ids are original
// ids; layers[0] = U_1, layers[1] = U_2, ...; s_parts[j] = S_{2j+2} with
// S_2 = s_parts[0] always empty; pivots = z_1, z_3, z_5, ...
struct LayerPart {
    VertexSet ground;          // vertices this part layered
    VertexSet skipped_acyclic; // stripped before layering (on no triangle within the stalled set)
    std::vector<VertexSet> layers;
    std::vector<VertexSet> s_parts;
    std::vector<int> pivots;
    VertexSet even_union; // L0
    VertexSet odd_union;  // L1
    VertexSet s_union;    // S
    bool kept_even = true;
    std::vector<std::pair<int, VertexSet>> layer_fvs; // (1-based layer index, exact FVS found)
};

// parts[0] is the main run; each further part is a restart on a stalled
// remainder.  Ground sets, skipped sets and parts partition the input.
struct LayerDecomposition {
    std::vector<LayerPart> parts;

    int restart_count() const { return static_cast<int>(parts.size()) - 1; }
    // the expansion stalled at least once: either a restart ran, or a stalled
    // remainder was stripped away entirely (it had no internal triangles)
    bool stall_fired() const;
    VertexSet all_s() const;
    VertexSet all_skipped() const;
};

// Layering stage on a T7-free tournament whose every vertex lies on a
// triangle (both checked).  Builds distance layers with weighted pivot
// splits, then covers the lighter parity class exactly and keeps an exact
// FVS inside each layer of the heavier class.  Output weight is at most
// 7/9 of the total weight.  When the expansion stalls with vertices left, the
// remainder restarts as a fresh part (see LayerDecomposition).
struct LayersResult {
    FvsResult fvs;
    LayerDecomposition decomposition;
};
LayersResult layers_fvs(const Tournament& t, const Weights& w);

// The full 7/3-approximation: stage-one rounding, then the layering stage on
// the residual.  The result is verified before returning.
FvsResult seven_thirds_fvs(const Tournament& t, const Weights& w);

// Local-ratio 3-approximation: repeatedly pick the lexicographically first
// triangle among positive-residual-weight vertices, subtract its minimum
// residual weight from all three, collect vertices reaching zero; finally
// reverse-delete collected vertices that are not needed.
FvsResult three_approx(const Tournament& t, const Weights& w);

// True iff removing s leaves a transitive tournament; cross-checked against
// the triangle criterion (s intersects every directed triangle).
bool verify_fvs(const Tournament& t, const VertexSet& s);

} // namespace tfvs
