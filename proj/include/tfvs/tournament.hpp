#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tfvs/errors.hpp"
#include "tfvs/rational.hpp"

namespace tfvs {

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids);
    explicit VertexSet(std::vector<int> ids); // sorts and dedupes

    static VertexSet full(int n); // {0, 1, ..., n-1}

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<int>& ids() const { return ids_; }
    int operator[](int i) const { return ids_[static_cast<std::size_t>(i)]; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<int> ids_;
};

VertexSet unite(const VertexSet& a, const VertexSet& b);
VertexSet difference(const VertexSet& a, const VertexSet& b);
VertexSet intersection(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);

// An orientation of the complete graph on n vertices: for every pair u != v
// exactly one of the arcs u->v, v->u is present, and never a loop.  A freshly
// constructed Tournament is the transitive order 0 -> 1 -> ... -> n-1; pairs
// are reoriented with orient().  Immutable-by-convention once built; all
// library functions take it by const reference.
class Tournament {
public:
    Tournament() = default;
    explicit Tournament(int n);

    int size() const { return n_; }
    bool arc(int u, int v) const { return arc_[index(u, v)]; }
    void orient(int u, int v); // make the arc u -> v

    int out_degree(int v) const;
    int in_degree(int v) const;

    bool operator==(const Tournament&) const = default;

private:
    std::size_t index(int u, int v) const;

    int n_ = 0;
    std::vector<bool> arc_;
};

// One exact non-negative rational weight per vertex.
class Weights {
public:
    Weights() = default;
    explicit Weights(std::vector<Rational> values); // rejects negatives

    static Weights unit(int n);

    int size() const { return static_cast<int>(values_.size()); }
    const Rational& operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }

    Rational total() const;
    Rational sum(const VertexSet& s) const;
    Weights restrict_to(const VertexSet& s) const; // aligned with induced() relabeling

    bool operator==(const Weights&) const = default;

private:
    std::vector<Rational> values_;
};

// N(S) = {v not in S : some u in S has the arc v -> u}, the in-neighbours of
// S.  N({u}) = {v : v -> u}.
VertexSet in_neighbours(const Tournament& t, const VertexSet& s);
VertexSet in_neighbours(const Tournament& t, int u);

// Subtournament on s, relabeled to 0..|s|-1 in increasing original id.
// original_ids[i] is the original id of new vertex i.
struct Induced {
    Tournament tournament;
    VertexSet original_ids;
};
Induced induced(const Tournament& t, const VertexSet& s);

// Strongly connected components in topological order of the condensation:
// every arc between distinct components points from an earlier component to a
// later one.  (In a tournament the condensation is itself a transitive
// tournament, so this order is unique.)
std::vector<VertexSet> scc_decomposition(const Tournament& t);

// Vertices lying on at least one directed triangle; equals the union of SCCs
// of size >= 3 (a tournament vertex is on a triangle iff its SCC is
// nontrivial, and restricting to these SCCs changes no triangle).
VertexSet vertices_on_triangles(const Tournament& t);

// Each unordered pair oriented by one draw of std::mt19937_64 seeded with
// `seed`; pairs are drawn in lexicographic order (0,1), (0,2), ..., and the
// arc u -> v (u < v) is present iff the draw's least significant bit is 1.
Tournament random_tournament(int n, std::uint64_t seed);

// Quadratic-residue tournament: u -> v iff (v - u) mod q is a nonzero square.
// Requires q prime with q = 3 (mod 4), otherwise the orientation would not be
// antisymmetric.
Tournament paley_tournament(int q);

} // namespace tfvs
