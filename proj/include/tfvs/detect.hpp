#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tfvs/tournament.hpp"

namespace tfvs {

// True iff t has no directed cycle; equivalently the n out-degrees are
// pairwise distinct.  Both routes are evaluated and compared.
bool is_transitive(const Tournament& t);

// Lexicographically first directed triangle, if any.
std::optional<VertexSet> find_triangle(const Tournament& t);

// Every directed triangle, each once, in lexicographic order.
std::vector<VertexSet> all_triangles(const Tournament& t);

// Does some k-subset induce a transitive subtournament?  Enumerates all
// C(n,k) subsets.  Requires 0 <= k <= n.
bool has_transitive_subtournament(const Tournament& t, int k);

// Membership in the forbidden families: a 5-tournament is in T5 iff it has no
// transitive subtournament on 4 vertices; a 7-tournament is in T7 iff it has
// none on 5 vertices.  Wrong order is rejected.
bool in_t5(const Tournament& t);
bool in_t7(const Tournament& t);

// Lexicographically first 5-subset (resp. 7-subset) inducing a member of T5
// (resp. T7); absent defines T5-freeness (resp. T7-freeness).
std::optional<VertexSet> find_t5_subtournament(const Tournament& t);
std::optional<VertexSet> find_t7_subtournament(const Tournament& t);

// Bitmask fast path shared by the subset scans above and the LP separation
// loop (n <= 64).  masks[v] holds the out-neighbours of v.
std::vector<std::uint64_t> out_neighbour_masks(const Tournament& t);
// subset must have exactly 5 (resp. 7) bits; tests membership of the induced
// subtournament in T5 (resp. T7).
bool t5_subset(const std::vector<std::uint64_t>& masks, std::uint64_t subset);
bool t7_subset(const std::vector<std::uint64_t>& masks, std::uint64_t subset);

bool is_t5_free(const Tournament& t);
bool is_t7_free(const Tournament& t);

// A witness Z' of at most 2 vertices of z_set such that every v in s has an
// arc v -> z' into some z' of Z'; absent if no singleton or pair works.
// Witness search order: empty set, singletons ascending, pairs lexicographic.
// Requires z_set and s disjoint.
std::optional<VertexSet> two_in_dominates(const Tournament& t,
                                          const VertexSet& z_set,
                                          const VertexSet& s);

// Distance layers towards z: layers[0] = {z}, and layers[l] holds the
// vertices whose shortest directed path to z has length exactly l.  Vertices
// with no directed path to z land in `unreachable`.
struct LayerSequence {
    int root = 0;
    std::vector<VertexSet> layers;
    VertexSet unreachable;
};
LayerSequence layer_sequence(const Tournament& t, int z);

// Upper-triangle arc bits of the adjacency table: pair (0,1) is the most
// significant bit, and bit(u,v) = 1 iff u -> v for u < v.  Only defined for
// n <= 8 (at most 28 bits).
std::uint64_t encode_arcs(const Tournament& t);
Tournament decode_arcs(int n, std::uint64_t code);

// Minimal arc code over all vertex permutations; equal codes iff isomorphic.
// Full factorial scan, so capped at n <= 8.
struct CanonicalForm {
    int order = 0;
    std::uint64_t code = 0;

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};
CanonicalForm canonical_form(const Tournament& t);

// Isomorphism classes of order-k tournaments (k <= 7) satisfying `keep`,
// which must be isomorphism-invariant.  Returns the canonical code of each
// class in ascending order.  Walks all 2^C(k,2) labeled tournaments; each
// orbit is expanded once and `keep` runs once per class.
std::vector<std::uint64_t> enumerate_classes(
    int order, const std::function<bool(const Tournament&)>& keep);

// Isomorphism classes of order-k tournaments with no transitive
// subtournament on `forbidden_order` vertices.
struct FamilyEnumeration {
    int order = 0;
    int forbidden_order = 0;
    std::vector<std::uint64_t> codes; // canonical, ascending

    int class_count() const { return static_cast<int>(codes.size()); }
    Tournament representative(int i) const;
};
FamilyEnumeration enumerate_family(int order, int forbidden_transitive);

} // namespace tfvs
