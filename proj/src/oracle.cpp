#include "tfvs/oracle.hpp"

#include <array>
#include <optional>
#include <string>

#include "tfvs/approx.hpp"
#include "tfvs/lp.hpp"

namespace tfvs {

namespace {

struct BranchState {
    const Tournament& t;
    const Weights& w;
    std::vector<bool> chosen;
    Rational accumulated{0};
    Rational best;
    VertexSet best_set;
    std::uint64_t nodes = 0;

    std::optional<std::array<int, 3>> open_triangle() const {
        int n = t.size();
        for (int a = 0; a < n; ++a) {
            if (chosen[static_cast<std::size_t>(a)]) continue;
            for (int b = a + 1; b < n; ++b) {
                if (chosen[static_cast<std::size_t>(b)]) continue;
                for (int c = b + 1; c < n; ++c) {
                    if (chosen[static_cast<std::size_t>(c)]) continue;
                    bool cyclic = (t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) ||
                                  (t.arc(a, c) && t.arc(c, b) && t.arc(b, a));
                    if (cyclic) return std::array<int, 3>{a, b, c};
                }
            }
        }
        return std::nullopt;
    }

    void search() {
        ++nodes;
        if (accumulated >= best) return;
        auto triangle = open_triangle();
        if (!triangle) {
            best = accumulated;
            std::vector<int> set;
            for (int v = 0; v < t.size(); ++v) {
                if (chosen[static_cast<std::size_t>(v)]) set.push_back(v);
            }
            best_set = VertexSet(std::move(set));
            return;
        }
        for (int v : *triangle) {
            chosen[static_cast<std::size_t>(v)] = true;
            accumulated += w[v];
            search();
            accumulated -= w[v];
            chosen[static_cast<std::size_t>(v)] = false;
        }
    }
};

} // namespace

OracleResult exact_min_fvs(const Tournament& t, const Weights& w, int size_cap) {
    if (w.size() != t.size()) throw PreconditionError("weights size mismatch");
    if (t.size() > size_cap) {
        throw PreconditionError("exact_min_fvs: instance of order " + std::to_string(t.size()) +
                                " exceeds the size cap " + std::to_string(size_cap));
    }
    FvsResult incumbent = three_approx(t, w);
    BranchState state{t, w, std::vector<bool>(static_cast<std::size_t>(t.size()), false)};
    state.best = incumbent.weight;
    state.best_set = incumbent.fvs;
    state.search();
    if (!verify_fvs(t, state.best_set)) {
        throw InvariantViolation("exact_min_fvs: witness is not an FVS");
    }
    return OracleResult{state.best, state.best_set, state.nodes};
}

Rational max_fractional_packing(const Tournament& t, const Weights& w) {
    SolvedLp lp = solve_fvs_lp(t, w, false);
    Rational total(0);
    for (const Rational& y : lp.solution.dual) total += y;
    if (total != lp.solution.value) {
        throw InvariantViolation("max_fractional_packing: dual value mismatch");
    }
    return total;
}

} // namespace tfvs
