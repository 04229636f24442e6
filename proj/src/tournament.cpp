#include "tfvs/tournament.hpp"

#include <algorithm>
#include <random>

namespace tfvs {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<int> ids) : VertexSet(std::vector<int>(ids)) {}

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::full(int n) {
    VertexSet s;
    s.ids_.resize(static_cast<std::size_t>(std::max(n, 0)));
    for (int v = 0; v < n; ++v) s.ids_[static_cast<std::size_t>(v)] = v;
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet difference(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    return intersection(a, b).empty();
}

// --------------------------------------------------------------- Tournament

Tournament::Tournament(int n) : n_(n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    arc_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            arc_[index(u, v)] = true; // start from the transitive order
        }
    }
}

std::size_t Tournament::index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        throw PreconditionError("arc index out of range");
    }
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
}

void Tournament::orient(int u, int v) {
    arc_[index(u, v)] = true;
    arc_[index(v, u)] = false;
}

int Tournament::out_degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u) {
        if (u != v && arc(v, u)) ++d;
    }
    return d;
}

int Tournament::in_degree(int v) const {
    return n_ - 1 - out_degree(v);
}

// ------------------------------------------------------------------ Weights

Weights::Weights(std::vector<Rational> values) : values_(std::move(values)) {
    for (const Rational& w : values_) {
        if (w < 0) throw PreconditionError("negative weight");
    }
}

Weights Weights::unit(int n) {
    return Weights(std::vector<Rational>(static_cast<std::size_t>(std::max(n, 0)), Rational(1)));
}

Rational Weights::total() const {
    Rational sum(0);
    for (const Rational& w : values_) sum += w;
    return sum;
}

Rational Weights::sum(const VertexSet& s) const {
    Rational out(0);
    for (int v : s) out += (*this)[v];
    return out;
}

Weights Weights::restrict_to(const VertexSet& s) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(s.size()));
    for (int v : s) out.push_back((*this)[v]);
    return Weights(std::move(out));
}

// ----------------------------------------------------------------- core ops

VertexSet in_neighbours(const Tournament& t, const VertexSet& s) {
    std::vector<int> out;
    for (int v = 0; v < t.size(); ++v) {
        if (s.contains(v)) continue;
        for (int u : s) {
            if (t.arc(v, u)) {
                out.push_back(v);
                break;
            }
        }
    }
    return VertexSet(std::move(out));
}

VertexSet in_neighbours(const Tournament& t, int u) {
    return in_neighbours(t, VertexSet{u});
}

Induced induced(const Tournament& t, const VertexSet& s) {
    for (int v : s) {
        if (v < 0 || v >= t.size()) throw PreconditionError("induced: vertex out of range");
    }
    Tournament sub(s.size());
    for (int i = 0; i < s.size(); ++i) {
        for (int j = i + 1; j < s.size(); ++j) {
            if (t.arc(s[i], s[j])) {
                sub.orient(i, j);
            } else {
                sub.orient(j, i);
            }
        }
    }
    return Induced{std::move(sub), s};
}

namespace {

// Iterative Tarjan; components come out in reverse topological order.
struct TarjanState {
    const Tournament& t;
    std::vector<int> index, low, stack;
    std::vector<bool> on_stack;
    std::vector<std::vector<int>> components;
    int next_index = 0;

    explicit TarjanState(const Tournament& t_)
        : t(t_), index(static_cast<std::size_t>(t_.size()), -1),
          low(static_cast<std::size_t>(t_.size()), 0),
          on_stack(static_cast<std::size_t>(t_.size()), false) {}

    void run(int root) {
        struct Frame {
            int v;
            int next_child;
        };
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            int v = f.v;
            bool descended = false;
            while (f.next_child < t.size()) {
                int u = f.next_child++;
                if (u == v || !t.arc(v, u)) continue;
                if (index[static_cast<std::size_t>(u)] == -1) {
                    index[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = next_index++;
                    stack.push_back(u);
                    on_stack[static_cast<std::size_t>(u)] = true;
                    frames.push_back({u, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(u)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(u)]);
                }
            }
            if (descended) continue;
            if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                std::vector<int> comp;
                int u;
                do {
                    u = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(u)] = false;
                    comp.push_back(u);
                } while (u != v);
                components.push_back(std::move(comp));
            }
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().v;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
            }
        }
    }
};

} // namespace

std::vector<VertexSet> scc_decomposition(const Tournament& t) {
    TarjanState state(t);
    for (int v = 0; v < t.size(); ++v) {
        if (state.index[static_cast<std::size_t>(v)] == -1) state.run(v);
    }
    std::vector<VertexSet> out;
    out.reserve(state.components.size());
    for (auto it = state.components.rbegin(); it != state.components.rend(); ++it) {
        out.emplace_back(std::move(*it));
    }
    return out;
}

VertexSet vertices_on_triangles(const Tournament& t) {
    std::vector<int> keep;
    for (const VertexSet& comp : scc_decomposition(t)) {
        if (comp.size() >= 3) {
            keep.insert(keep.end(), comp.begin(), comp.end());
        }
    }
    return VertexSet(std::move(keep));
}

Tournament random_tournament(int n, std::uint64_t seed) {
    if (n < 0) throw PreconditionError("negative vertex count");
    std::mt19937_64 rng(seed);
    Tournament t(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1u) {
                t.orient(u, v);
            } else {
                t.orient(v, u);
            }
        }
    }
    return t;
}

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

} // namespace

Tournament paley_tournament(int q) {
    if (!is_prime(q) || q % 4 != 3) {
        throw PreconditionError("paley_tournament requires a prime q with q = 3 (mod 4)");
    }
    std::vector<bool> residue(static_cast<std::size_t>(q), false);
    for (int i = 1; i < q; ++i) {
        residue[static_cast<std::size_t>((i * i) % q)] = true;
    }
    Tournament t(q);
    for (int u = 0; u < q; ++u) {
        for (int v = 0; v < q; ++v) {
            if (u != v && residue[static_cast<std::size_t>(((v - u) % q + q) % q)]) {
                t.orient(u, v);
            }
        }
    }
    return t;
}

} // namespace tfvs
