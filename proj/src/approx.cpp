#include "tfvs/approx.hpp"

#include <algorithm>
#include <array>

#include "tfvs/detect.hpp"

namespace tfvs {

const char* stage_tag_name(StageTag tag) {
    switch (tag) {
        case StageTag::rounding: return "rounding";
        case StageTag::layers_s: return "layers-s";
        case StageTag::layers_parity: return "layers-parity";
        case StageTag::layers_cdz: return "layers-cdz";
        case StageTag::baseline: return "baseline";
        case StageTag::exact: return "exact";
    }
    return "?";
}

namespace {

const Rational kRoundingThreshold(3, 7);

VertexSet map_to_original(const VertexSet& local, const VertexSet& original_ids) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(local.size()));
    for (int v : local) out.push_back(original_ids[v]);
    return VertexSet(std::move(out));
}

void tag_all(FvsResult& result, const VertexSet& s, StageTag tag) {
    for (int v : s) result.stage_tags[v] = tag;
}

// Direct triangle-hit check, independent of the transitivity route used by
// verify_fvs.
bool hits_all_triangles(const Tournament& t, const VertexSet& s) {
    int n = t.size();
    for (int a = 0; a < n; ++a) {
        if (s.contains(a)) continue;
        for (int b = a + 1; b < n; ++b) {
            if (s.contains(b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (s.contains(c)) continue;
                bool cyclic = (t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) ||
                              (t.arc(a, c) && t.arc(c, b) && t.arc(b, a));
                if (cyclic) return false;
            }
        }
    }
    return true;
}

} // namespace

bool verify_fvs(const Tournament& t, const VertexSet& s) {
    for (int v : s) {
        if (v < 0 || v >= t.size()) throw PreconditionError("verify_fvs: vertex out of range");
    }
    bool by_transitivity = is_transitive(induced(t, difference(VertexSet::full(t.size()), s)).tournament);
    bool by_triangles = hits_all_triangles(t, s);
    if (by_transitivity != by_triangles) {
        throw InvariantViolation("verify_fvs: transitivity and triangle criteria disagree");
    }
    return by_transitivity;
}

StageOneResult iterative_rounding(const Tournament& t, const Weights& w) {
    if (w.size() != t.size()) throw PreconditionError("weights size mismatch");
    StageOneResult out;

    // Vertices on no triangle can never be forced by the LP; drop them up
    // front so the residual contract (every vertex on a triangle) also holds
    // when the loop body never runs.
    VertexSet alive = vertices_on_triangles(t);

    auto solve_current = [&](const VertexSet& ids) {
        Induced sub = induced(t, ids);
        return solve_fvs_lp(sub.tournament, w.restrict_to(ids), true);
    };

    if (alive.empty()) {
        out.residual = induced(t, alive);
        return out;
    }

    SolvedLp lp = solve_current(alive);
    out.partial.trace.initial_lp_value = lp.solution.value;

    while (true) {
        VertexSet rounded_local;
        for (int i = 0; i < static_cast<int>(lp.solution.primal.size()); ++i) {
            if (lp.solution.primal[static_cast<std::size_t>(i)] >= kRoundingThreshold) {
                rounded_local.insert(i);
            }
        }
        if (rounded_local.empty()) break;

        VertexSet rounded = map_to_original(rounded_local, alive);
        out.partial.fvs = unite(out.partial.fvs, rounded);
        tag_all(out.partial, rounded, StageTag::rounding);

        VertexSet remaining = difference(alive, rounded);
        Induced rest = induced(t, remaining);
        alive = map_to_original(vertices_on_triangles(rest.tournament), remaining);

        RoundingIteration iter;
        iter.rounded = rounded;
        iter.rounded_weight = w.sum(rounded);
        if (alive.empty()) {
            iter.lp_value_after = 0;
            out.partial.trace.iterations.push_back(std::move(iter));
            break;
        }
        lp = solve_current(alive);
        iter.lp_value_after = lp.solution.value;
        out.partial.trace.iterations.push_back(std::move(iter));
    }

    if (!alive.empty()) {
        for (int i = 0; i < alive.size(); ++i) {
            out.partial.trace.final_x[alive[i]] = lp.solution.primal[static_cast<std::size_t>(i)];
        }
    }
    out.partial.weight = w.sum(out.partial.fvs);
    out.residual = induced(t, alive);
    return out;
}

FvsResult cdz_t5free_fvs(const Tournament& t, const Weights& w, bool check_t5_free) {
    if (w.size() != t.size()) throw PreconditionError("weights size mismatch");
    if (check_t5_free) {
        if (auto witness = find_t5_subtournament(t)) {
            std::string ids;
            for (int v : *witness) ids += " " + std::to_string(v);
            throw PreconditionError("cdz_t5free_fvs: input is not T5-free; witness" + ids);
        }
    }
    SolvedLp lp = solve_fvs_lp(t, w, false);
    FvsResult result;
    for (int v = 0; v < t.size(); ++v) {
        const Rational& xv = lp.solution.primal[static_cast<std::size_t>(v)];
        if (xv == 1) {
            result.fvs.insert(v);
        } else if (xv != 0) {
            // the triangle covering polyhedron of a T5-free tournament is
            // integral, so a basic optimum must be 0/1
            throw InvariantViolation("cdz_t5free_fvs: basic optimum is not 0/1 at vertex " +
                                     std::to_string(v) + " (x = " + to_string(xv) + ")");
        }
    }
    result.weight = w.sum(result.fvs);
    tag_all(result, result.fvs, StageTag::exact);
    if (!verify_fvs(t, result.fvs)) {
        throw InvariantViolation("cdz_t5free_fvs: produced set is not an FVS");
    }
    if (result.weight * 3 > w.total()) {
        throw InvariantViolation("cdz_t5free_fvs: weight exceeds w(V)/3");
    }
    return result;
}

bool LayerDecomposition::stall_fired() const {
    if (restart_count() > 0) return true;
    for (const LayerPart& part : parts) {
        if (!part.skipped_acyclic.empty()) return true;
    }
    return false;
}

VertexSet LayerDecomposition::all_s() const {
    VertexSet out;
    for (const LayerPart& part : parts) out = unite(out, part.s_union);
    return out;
}

VertexSet LayerDecomposition::all_skipped() const {
    VertexSet out;
    for (const LayerPart& part : parts) out = unite(out, part.skipped_acyclic);
    return out;
}

namespace {

// In-degree of z counted within `ground` only.
int in_degree_within(const Tournament& t, int z, const VertexSet& ground) {
    int d = 0;
    for (int u : ground) {
        if (u != z && t.arc(u, z)) ++d;
    }
    return d;
}

// One layering pass over `ground`.  Returns the part and the stalled
// remainder (empty when the ground set was exhausted).
LayerPart run_layer_part(const Tournament& t, const Weights& w, const VertexSet& ground,
                         VertexSet& stalled) {
    LayerPart part;
    part.ground = ground;

    int z1 = -1, best = -1;
    for (int v : ground) {
        int d = in_degree_within(t, v, ground);
        if (z1 == -1 || d < best) {
            z1 = v;
            best = d;
        }
    }
    part.pivots.push_back(z1);
    part.layers.push_back(VertexSet{z1});
    part.layers.push_back(intersection(in_neighbours(t, z1), ground));
    part.s_parts.push_back(VertexSet{}); // S_2 is always empty
    VertexSet w_set = difference(difference(ground, part.layers[0]), part.layers[1]);

    while (!w_set.empty()) {
        VertexSet odd = intersection(in_neighbours(t, part.layers.back()), w_set);
        if (odd.empty()) {
            // Expansion stalled with vertices left: they have no arc into any
            // U layer, so their cross triangles all pass through S.  The
            // remainder restarts as a fresh part.
            stalled = w_set;
            break;
        }
        w_set = difference(w_set, odd);
        VertexSet uprime = intersection(in_neighbours(t, odd), w_set);
        w_set = difference(w_set, uprime);

        Rational uprime_weight = w.sum(uprime);
        int pivot = -1;
        VertexSet even;
        for (int z : odd) {
            VertexSet captured = intersection(uprime, in_neighbours(t, z));
            if (w.sum(captured) * 2 >= uprime_weight) {
                pivot = z;
                even = std::move(captured);
                break;
            }
        }
        if (pivot == -1) {
            throw InvariantViolation("layers_fvs: no pivot covers half of U' by weight");
        }
        part.pivots.push_back(pivot);
        part.layers.push_back(std::move(odd));
        part.s_parts.push_back(difference(uprime, even));
        part.layers.push_back(std::move(even));
    }

    for (int i = 0; i < static_cast<int>(part.layers.size()); ++i) {
        if (i % 2 == 0) {
            part.odd_union = unite(part.odd_union, part.layers[static_cast<std::size_t>(i)]);
        } else {
            part.even_union = unite(part.even_union, part.layers[static_cast<std::size_t>(i)]);
        }
    }
    for (const VertexSet& s : part.s_parts) part.s_union = unite(part.s_union, s);
    part.kept_even = w.sum(part.even_union) >= w.sum(part.odd_union);
    return part;
}

} // namespace

LayersResult layers_fvs(const Tournament& t, const Weights& w) {
    if (w.size() != t.size()) throw PreconditionError("weights size mismatch");
    if (auto witness = find_t7_subtournament(t)) {
        std::string ids;
        for (int v : *witness) ids += " " + std::to_string(v);
        throw PreconditionError("layers_fvs: input is not T7-free; witness" + ids);
    }
    if (vertices_on_triangles(t).size() != t.size()) {
        throw PreconditionError("layers_fvs: some vertex lies on no directed triangle");
    }

    LayersResult out;
    VertexSet remaining = VertexSet::full(t.size());
    while (!remaining.empty()) {
        // Restart hygiene: a stalled remainder may contain vertices on no
        // triangle within it (their triangles pass through S); strip them the
        // same way stage one does.  No-op for the first part.
        Induced sub = induced(t, remaining);
        VertexSet ground = map_to_original(vertices_on_triangles(sub.tournament), remaining);
        VertexSet skipped = difference(remaining, ground);
        if (ground.empty()) {
            if (!out.decomposition.parts.empty()) {
                out.decomposition.parts.back().skipped_acyclic =
                    unite(out.decomposition.parts.back().skipped_acyclic, skipped);
            }
            break;
        }

        VertexSet stalled;
        LayerPart part = run_layer_part(t, w, ground, stalled);
        part.ground = difference(part.ground, stalled); // stalled vertices belong to the next part
        part.skipped_acyclic = skipped;

        const bool keep_even = part.kept_even;
        VertexSet discarded = keep_even ? part.odd_union : part.even_union;
        for (int i = 0; i < static_cast<int>(part.layers.size()); ++i) {
            bool is_even_layer = (i % 2 == 1); // layers[1] = U_2
            if (is_even_layer != keep_even) continue;
            const VertexSet& layer = part.layers[static_cast<std::size_t>(i)];
            if (layer.empty()) continue;
            Induced layer_sub = induced(t, layer);
            FvsResult exact = cdz_t5free_fvs(layer_sub.tournament, w.restrict_to(layer));
            VertexSet layer_fvs = map_to_original(exact.fvs, layer);
            part.layer_fvs.emplace_back(i + 1, layer_fvs);
            out.fvs.fvs = unite(out.fvs.fvs, layer_fvs);
            tag_all(out.fvs, layer_fvs, StageTag::layers_cdz);
        }
        out.fvs.fvs = unite(out.fvs.fvs, part.s_union);
        tag_all(out.fvs, part.s_union, StageTag::layers_s);
        out.fvs.fvs = unite(out.fvs.fvs, discarded);
        tag_all(out.fvs, discarded, StageTag::layers_parity);

        out.decomposition.parts.push_back(std::move(part));
        remaining = stalled;
    }

    out.fvs.weight = w.sum(out.fvs.fvs);
    if (!verify_fvs(t, out.fvs.fvs)) {
        throw InvariantViolation("layers_fvs: produced set is not an FVS");
    }
    if (out.fvs.weight * 9 > w.total() * 7) {
        throw InvariantViolation("layers_fvs: weight exceeds 7/9 of the total");
    }
    return out;
}

FvsResult seven_thirds_fvs(const Tournament& t, const Weights& w) {
    StageOneResult stage1 = iterative_rounding(t, w);
    FvsResult result = std::move(stage1.partial);
    if (!stage1.residual.original_ids.empty()) {
        const VertexSet& ids = stage1.residual.original_ids;
        LayersResult stage2 = layers_fvs(stage1.residual.tournament, w.restrict_to(ids));
        VertexSet mapped = map_to_original(stage2.fvs.fvs, ids);
        result.fvs = unite(result.fvs, mapped);
        for (const auto& [local, tag] : stage2.fvs.stage_tags) {
            result.stage_tags[ids[local]] = tag;
        }
    }
    result.weight = w.sum(result.fvs);
    if (!verify_fvs(t, result.fvs)) {
        throw InvariantViolation("seven_thirds_fvs: produced set is not an FVS");
    }
    return result;
}

FvsResult three_approx(const Tournament& t, const Weights& w) {
    if (w.size() != t.size()) throw PreconditionError("weights size mismatch");
    int n = t.size();
    std::vector<Rational> residual;
    residual.reserve(static_cast<std::size_t>(n));
    std::vector<int> collected;
    for (int v = 0; v < n; ++v) {
        residual.push_back(w[v]);
        if (residual.back() == 0) collected.push_back(v);
    }

    auto positive_triangle = [&]() -> std::optional<std::array<int, 3>> {
        for (int a = 0; a < n; ++a) {
            if (residual[static_cast<std::size_t>(a)] == 0) continue;
            for (int b = a + 1; b < n; ++b) {
                if (residual[static_cast<std::size_t>(b)] == 0) continue;
                for (int c = b + 1; c < n; ++c) {
                    if (residual[static_cast<std::size_t>(c)] == 0) continue;
                    bool cyclic = (t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) ||
                                  (t.arc(a, c) && t.arc(c, b) && t.arc(b, a));
                    if (cyclic) return std::array<int, 3>{a, b, c};
                }
            }
        }
        return std::nullopt;
    };

    while (auto triangle = positive_triangle()) {
        Rational delta = residual[static_cast<std::size_t>((*triangle)[0])];
        for (int v : *triangle) delta = std::min(delta, residual[static_cast<std::size_t>(v)]);
        for (int v : *triangle) {
            residual[static_cast<std::size_t>(v)] -= delta;
            if (residual[static_cast<std::size_t>(v)] == 0) collected.push_back(v);
        }
    }

    // Reverse-delete: drop collected vertices that are no longer needed, last
    // collected first.
    VertexSet fvs(collected);
    for (auto it = collected.rbegin(); it != collected.rend(); ++it) {
        VertexSet without = fvs;
        without.erase(*it);
        if (verify_fvs(t, without)) fvs = without;
    }

    FvsResult result;
    result.fvs = fvs;
    result.weight = w.sum(fvs);
    tag_all(result, fvs, StageTag::baseline);
    if (!verify_fvs(t, result.fvs)) {
        throw InvariantViolation("three_approx: produced set is not an FVS");
    }
    return result;
}

} // namespace tfvs
