#include "tfvs/lp.hpp"

#include <algorithm>
#include <numeric>

#include "tfvs/detect.hpp"

namespace tfvs {

namespace {

void validate_model(const CoverModel& model) {
    if (model.objective.size() != model.n) {
        throw PreconditionError("cover model: objective size mismatch");
    }
    for (int v = 0; v < model.n; ++v) {
        if (model.objective[v] < 0) throw PreconditionError("cover model: negative weight");
    }
    for (const CoverRow& row : model.rows) {
        if (row.support.empty()) throw PreconditionError("cover model: empty row support");
        if (row.support[0] < 0 || row.support[row.support.size() - 1] >= model.n) {
            throw PreconditionError("cover model: row support out of range");
        }
        if (row.rhs <= 0) throw PreconditionError("cover model: rhs must be positive");
    }
}

void check_solution(const CoverModel& model, const LpSolution& sol) {
    int m = static_cast<int>(model.rows.size());
    Rational primal_value(0);
    for (int v = 0; v < model.n; ++v) {
        if (sol.primal[static_cast<std::size_t>(v)] < 0) {
            throw InvariantViolation("lp: negative primal coordinate");
        }
        primal_value += model.objective[v] * sol.primal[static_cast<std::size_t>(v)];
    }
    Rational dual_value(0);
    std::vector<Rational> load(static_cast<std::size_t>(model.n), Rational(0));
    for (int r = 0; r < m; ++r) {
        const Rational& y = sol.dual[static_cast<std::size_t>(r)];
        if (y < 0) throw InvariantViolation("lp: negative dual coordinate");
        Rational coverage(0);
        for (int v : model.rows[static_cast<std::size_t>(r)].support) {
            coverage += sol.primal[static_cast<std::size_t>(v)];
            load[static_cast<std::size_t>(v)] += y;
        }
        if (coverage < model.rows[static_cast<std::size_t>(r)].rhs) {
            throw InvariantViolation("lp: primal infeasible");
        }
        if (y > 0 && coverage != model.rows[static_cast<std::size_t>(r)].rhs) {
            throw InvariantViolation("lp: complementary slackness (dual) failed");
        }
        dual_value += model.rows[static_cast<std::size_t>(r)].rhs * y;
    }
    for (int v = 0; v < model.n; ++v) {
        if (load[static_cast<std::size_t>(v)] > model.objective[v]) {
            throw InvariantViolation("lp: dual infeasible");
        }
        if (sol.primal[static_cast<std::size_t>(v)] > 0 &&
            load[static_cast<std::size_t>(v)] != model.objective[v]) {
            throw InvariantViolation("lp: complementary slackness (primal) failed");
        }
    }
    if (primal_value != dual_value || primal_value != sol.value) {
        throw InvariantViolation("lp: strong duality failed");
    }
}

} // namespace

namespace {

// The covering LP is solved through its dual
//     max sum_R rhs_R y_R   s.t.   sum_{R : v in R} y_R <= w_v,  y >= 0,
// which is feasible at y = 0 (no phase one needed) and bounded because the
// primal is feasible.  Dense tableau over exact rationals, Bland's rule on
// both the entering column (least index with positive reduced cost; slack
// columns come before row columns) and the leaving row (least basic index
// among minimum ratios), so no cycling.  At optimality the simplex
// multipliers give the primal x: basic row-columns pin x(R) = rhs_R, basic
// slack columns pin x_v = 0, and those n constraints are linearly
// independent, which makes x a vertex of the primal polyhedron.
//
// Lazy row generation maps to column generation here: a violated primal row
// is a new dual column, the current basis stays feasible, and the simplex
// resumes instead of restarting.
class CoveringSimplex {
public:
    explicit CoveringSimplex(const Weights& objective) : n_(objective.size()) {
        tab_.assign(static_cast<std::size_t>(n_),
                    std::vector<Rational>(static_cast<std::size_t>(n_), Rational(0)));
        rhs_.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) {
            tab_[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 1;
            rhs_.push_back(objective[v]);
            basis_.push_back(v);
        }
        cost_.assign(static_cast<std::size_t>(n_), Rational(0));
    }

    // Columns 0..n-1 are slacks; column n+r is model row r.
    void add_row(const CoverRow& row) {
        std::size_t col = cost_.size();
        Rational reduced = row.rhs;
        for (int i = 0; i < n_; ++i) tab_[static_cast<std::size_t>(i)].emplace_back(0);
        for (int v : row.support) {
            // B^-1 e_v is stored in slack column v
            for (int i = 0; i < n_; ++i) {
                tab_[static_cast<std::size_t>(i)][col] +=
                    tab_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
            }
            reduced += cost_[static_cast<std::size_t>(v)];
        }
        cost_.push_back(reduced);
        ++row_count_;
    }

    void optimize() {
        int cols = static_cast<int>(cost_.size());
        while (true) {
            int entering = -1;
            for (int j = 0; j < cols; ++j) {
                if (cost_[static_cast<std::size_t>(j)] > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == -1) return;

            int leaving = -1;
            Rational best_ratio(0);
            for (int i = 0; i < n_; ++i) {
                const Rational& coef = tab_[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
                if (coef <= 0) continue;
                Rational ratio = rhs_[static_cast<std::size_t>(i)] / coef;
                if (leaving == -1 || ratio < best_ratio ||
                    (ratio == best_ratio &&
                     basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            if (leaving == -1) {
                // dual unbounded would mean the covering primal is infeasible
                throw InvariantViolation("lp: unbounded dual on a covering model");
            }

            auto& pivot_row = tab_[static_cast<std::size_t>(leaving)];
            const Rational pivot = pivot_row[static_cast<std::size_t>(entering)];
            for (auto& entry : pivot_row) entry /= pivot;
            rhs_[static_cast<std::size_t>(leaving)] /= pivot;
            for (int i = 0; i < n_; ++i) {
                if (i == leaving) continue;
                Rational factor = tab_[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
                if (factor == 0) continue;
                auto& row = tab_[static_cast<std::size_t>(i)];
                for (int j = 0; j < cols; ++j) {
                    row[static_cast<std::size_t>(j)] -= factor * pivot_row[static_cast<std::size_t>(j)];
                }
                rhs_[static_cast<std::size_t>(i)] -= factor * rhs_[static_cast<std::size_t>(leaving)];
            }
            Rational cost_factor = cost_[static_cast<std::size_t>(entering)];
            if (cost_factor != 0) {
                for (int j = 0; j < cols; ++j) {
                    cost_[static_cast<std::size_t>(j)] -= cost_factor * pivot_row[static_cast<std::size_t>(j)];
                }
                value_ += cost_factor * rhs_[static_cast<std::size_t>(leaving)];
            }
            basis_[static_cast<std::size_t>(leaving)] = entering;
        }
    }

    // Primal multipliers of the current basis (the covering solution).
    std::vector<Rational> multipliers() const {
        std::vector<Rational> x;
        x.reserve(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) x.push_back(-cost_[static_cast<std::size_t>(v)]);
        return x;
    }

    LpSolution extract() const {
        LpSolution sol;
        sol.primal = multipliers();
        sol.dual.assign(static_cast<std::size_t>(row_count_), Rational(0));
        sol.value = value_;
        for (int i = 0; i < n_; ++i) {
            int col = basis_[static_cast<std::size_t>(i)];
            if (col >= n_) {
                sol.dual[static_cast<std::size_t>(col - n_)] = rhs_[static_cast<std::size_t>(i)];
                sol.tight_rows.push_back(col - n_);
            } else {
                sol.zero_vertices.insert(col);
            }
        }
        std::sort(sol.tight_rows.begin(), sol.tight_rows.end());
        return sol;
    }

private:
    int n_;
    int row_count_ = 0;
    std::vector<std::vector<Rational>> tab_; // n rows; columns: n slacks, then model rows
    std::vector<Rational> rhs_;
    std::vector<Rational> cost_; // reduced costs
    Rational value_{0};
    std::vector<int> basis_; // tableau row -> column index
};

} // namespace

LpSolution simplex_solve(const CoverModel& model) {
    validate_model(model);
    CoveringSimplex simplex(model.objective);
    for (const CoverRow& row : model.rows) simplex.add_row(row);
    simplex.optimize();
    LpSolution sol = simplex.extract();
    check_solution(model, sol);
    return sol;
}

bool certify_basic(const CoverModel& model, const LpSolution& solution) {
    int n = model.n;
    if (static_cast<int>(solution.tight_rows.size()) + solution.zero_vertices.size() != n) {
        return false;
    }
    // Assemble the n tight constraints and check rank n by Gaussian
    // elimination; the primal must satisfy each with equality.
    std::vector<std::vector<Rational>> mat;
    for (int r : solution.tight_rows) {
        const CoverRow& row = model.rows[static_cast<std::size_t>(r)];
        std::vector<Rational> line(static_cast<std::size_t>(n), Rational(0));
        Rational coverage(0);
        for (int v : row.support) {
            line[static_cast<std::size_t>(v)] = 1;
            coverage += solution.primal[static_cast<std::size_t>(v)];
        }
        if (coverage != row.rhs) return false;
        mat.push_back(std::move(line));
    }
    for (int v : solution.zero_vertices) {
        if (solution.primal[static_cast<std::size_t>(v)] != 0) return false;
        std::vector<Rational> line(static_cast<std::size_t>(n), Rational(0));
        line[static_cast<std::size_t>(v)] = 1;
        mat.push_back(std::move(line));
    }
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int i = rank; i < n; ++i) {
            if (mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == -1) continue;
        std::swap(mat[static_cast<std::size_t>(rank)], mat[static_cast<std::size_t>(pivot)]);
        const Rational head = mat[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (int i = rank + 1; i < n; ++i) {
            Rational factor = mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] / head;
            if (factor == 0) continue;
            for (int j = col; j < n; ++j) {
                mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    factor * mat[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
            }
        }
        ++rank;
    }
    return rank == n;
}

CoverModel build_fvs_model(const Tournament& t, const Weights& w, bool with_t7) {
    if (w.size() != t.size()) throw PreconditionError("weights size mismatch");
    CoverModel model;
    model.n = t.size();
    model.objective = w;
    for (const VertexSet& triangle : all_triangles(t)) {
        model.rows.push_back(CoverRow{triangle, Rational(1)});
    }
    if (with_t7 && t.size() >= 7) {
        std::vector<std::uint64_t> masks = out_neighbour_masks(t);
        std::vector<int> subset(7);
        std::iota(subset.begin(), subset.end(), 0);
        bool more = true;
        while (more) {
            std::uint64_t mask = 0;
            for (int v : subset) mask |= std::uint64_t{1} << v;
            if (t7_subset(masks, mask)) {
                model.rows.push_back(CoverRow{VertexSet(subset), Rational(3)});
            }
            more = false;
            for (int i = 6; i >= 0; --i) {
                if (subset[static_cast<std::size_t>(i)] < t.size() - 7 + i) {
                    ++subset[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < 7; ++j) {
                        subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
                    }
                    more = true;
                    break;
                }
            }
        }
    }
    return model;
}

std::optional<CoverRow> separate(const Tournament& t, const std::vector<Rational>& x,
                                 bool with_t7) {
    int n = t.size();
    if (static_cast<int>(x.size()) != n) throw PreconditionError("separate: x size mismatch");
    for (const Rational& xv : x) {
        if (xv < 0) throw PreconditionError("separate: x must be non-negative");
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                bool cyclic = (t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) ||
                              (t.arc(a, c) && t.arc(c, b) && t.arc(b, a));
                if (!cyclic) continue;
                if (x[static_cast<std::size_t>(a)] + x[static_cast<std::size_t>(b)] +
                        x[static_cast<std::size_t>(c)] < 1) {
                    return CoverRow{VertexSet{a, b, c}, Rational(1)};
                }
            }
        }
    }
    if (with_t7 && n >= 7) {
        std::vector<std::uint64_t> masks = out_neighbour_masks(t);
        std::vector<int> subset(7);
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            Rational total(0);
            for (int v : subset) total += x[static_cast<std::size_t>(v)];
            if (total < 3) {
                std::uint64_t mask = 0;
                for (int v : subset) mask |= std::uint64_t{1} << v;
                if (t7_subset(masks, mask)) {
                    return CoverRow{VertexSet(subset), Rational(3)};
                }
            }
            bool more = false;
            for (int i = 6; i >= 0; --i) {
                if (subset[static_cast<std::size_t>(i)] < n - 7 + i) {
                    ++subset[static_cast<std::size_t>(i)];
                    for (int j = i + 1; j < 7; ++j) {
                        subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
                    }
                    more = true;
                    break;
                }
            }
            if (!more) break;
        }
    }
    return std::nullopt;
}

SolvedLp solve_fvs_lp(const Tournament& t, const Weights& w, bool with_t7) {
    if (w.size() != t.size()) throw PreconditionError("weights size mismatch");
    SolvedLp result;
    result.model.n = t.size();
    result.model.objective = w;
    CoveringSimplex simplex(w);
    while (true) {
        simplex.optimize();
        auto violated = separate(t, simplex.multipliers(), with_t7);
        if (!violated) break;
        simplex.add_row(*violated);
        result.model.rows.push_back(std::move(*violated));
    }
    result.solution = simplex.extract();
    check_solution(result.model, result.solution);
    return result;
}

} // namespace tfvs
