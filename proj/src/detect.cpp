#include "tfvs/detect.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace tfvs {

namespace {

// First k-subset of [0,n) in lexicographic order; next_combination advances
// in place and returns false after the last one.
std::vector<int> first_combination(int k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    std::iota(c.begin(), c.end(), 0);
    return c;
}

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j) {
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

// A subset of a tournament induces a transitive subtournament iff its
// internal out-degrees are pairwise distinct.
bool transitive_subset(const Tournament& t, const std::vector<int>& subset) {
    int k = static_cast<int>(subset.size());
    unsigned seen = 0;
    for (int v : subset) {
        int d = 0;
        for (int u : subset) {
            if (u != v && t.arc(v, u)) ++d;
        }
        seen |= 1u << d;
    }
    return seen == (k == 0 ? 0u : (1u << k) - 1u);
}

bool directed_triangle(const Tournament& t, int a, int b, int c) {
    return (t.arc(a, b) && t.arc(b, c) && t.arc(c, a)) ||
           (t.arc(a, c) && t.arc(c, b) && t.arc(b, a));
}

} // namespace

bool is_transitive(const Tournament& t) {
    int n = t.size();
    // Primary route: order by descending out-degree and verify every arc
    // points forward.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return t.out_degree(a) > t.out_degree(b); });
    bool forward = true;
    for (int i = 0; i < n && forward; ++i) {
        for (int j = i + 1; j < n && forward; ++j) {
            if (!t.arc(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)])) {
                forward = false;
            }
        }
    }
    // Cross-check route: out-degrees pairwise distinct.
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    bool distinct = true;
    for (int v = 0; v < n; ++v) {
        int d = t.out_degree(v);
        if (seen[static_cast<std::size_t>(d)]) distinct = false;
        seen[static_cast<std::size_t>(d)] = true;
    }
    if (forward != distinct) {
        throw InvariantViolation("is_transitive: degree route disagrees with order route");
    }
    return forward;
}

std::optional<VertexSet> find_triangle(const Tournament& t) {
    int n = t.size();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                if (directed_triangle(t, a, b, c)) return VertexSet{a, b, c};
            }
        }
    }
    return std::nullopt;
}

std::vector<VertexSet> all_triangles(const Tournament& t) {
    std::vector<VertexSet> out;
    int n = t.size();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                if (directed_triangle(t, a, b, c)) out.push_back(VertexSet{a, b, c});
            }
        }
    }
    return out;
}

bool has_transitive_subtournament(const Tournament& t, int k) {
    if (k < 0 || k > t.size()) {
        throw PreconditionError("has_transitive_subtournament: k out of range");
    }
    if (k <= 2) return true; // every pair (and the empty set) is transitive
    std::vector<int> subset = first_combination(k);
    do {
        if (transitive_subset(t, subset)) return true;
    } while (next_combination(subset, t.size()));
    return false;
}

bool in_t5(const Tournament& t) {
    if (t.size() != 5) throw PreconditionError("in_t5 requires order 5");
    return !has_transitive_subtournament(t, 4);
}

bool in_t7(const Tournament& t) {
    if (t.size() != 7) throw PreconditionError("in_t7 requires order 7");
    return !has_transitive_subtournament(t, 5);
}

std::vector<std::uint64_t> out_neighbour_masks(const Tournament& t) {
    if (t.size() > 64) throw PreconditionError("out_neighbour_masks: order cap is 64");
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(t.size()), 0);
    for (int u = 0; u < t.size(); ++u) {
        for (int v = 0; v < t.size(); ++v) {
            if (u != v && t.arc(u, v)) masks[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        }
    }
    return masks;
}

namespace {

// Transitive iff the out-degrees within the subset are pairwise distinct.
bool transitive_mask(const std::vector<std::uint64_t>& masks, std::uint64_t subset, int k) {
    unsigned seen = 0;
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        seen |= 1u << std::popcount(masks[static_cast<std::size_t>(v)] & subset);
    }
    return seen == (1u << k) - 1u;
}

} // namespace

bool t5_subset(const std::vector<std::uint64_t>& masks, std::uint64_t subset) {
    // no transitive 4-subset: drop each vertex in turn
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) {
        std::uint64_t dropped = std::uint64_t{1} << std::countr_zero(rest);
        if (transitive_mask(masks, subset ^ dropped, 4)) return false;
    }
    return true;
}

bool t7_subset(const std::vector<std::uint64_t>& masks, std::uint64_t subset) {
    // no transitive 5-subset: drop each pair in turn
    for (std::uint64_t ra = subset; ra != 0; ra &= ra - 1) {
        std::uint64_t a = std::uint64_t{1} << std::countr_zero(ra);
        for (std::uint64_t rb = ra & (ra - 1); rb != 0; rb &= rb - 1) {
            std::uint64_t b = std::uint64_t{1} << std::countr_zero(rb);
            if (transitive_mask(masks, subset ^ a ^ b, 5)) return false;
        }
    }
    return true;
}

namespace {

std::optional<VertexSet> find_family_member(const Tournament& t, int order) {
    if (t.size() < order) return std::nullopt;
    std::vector<std::uint64_t> masks = out_neighbour_masks(t);
    std::vector<int> subset = first_combination(order);
    do {
        std::uint64_t mask = 0;
        for (int v : subset) mask |= std::uint64_t{1} << v;
        bool member = order == 5 ? t5_subset(masks, mask) : t7_subset(masks, mask);
        if (member) return VertexSet(subset);
    } while (next_combination(subset, t.size()));
    return std::nullopt;
}

} // namespace

std::optional<VertexSet> find_t5_subtournament(const Tournament& t) {
    return find_family_member(t, 5);
}

std::optional<VertexSet> find_t7_subtournament(const Tournament& t) {
    return find_family_member(t, 7);
}

bool is_t5_free(const Tournament& t) { return !find_t5_subtournament(t).has_value(); }

bool is_t7_free(const Tournament& t) { return !find_t7_subtournament(t).has_value(); }

std::optional<VertexSet> two_in_dominates(const Tournament& t, const VertexSet& z_set,
                                          const VertexSet& s) {
    if (!disjoint(z_set, s)) {
        throw PreconditionError("two_in_dominates: z_set and s must be disjoint");
    }
    auto dominated = [&](int v, const std::vector<int>& zs) {
        for (int z : zs) {
            if (t.arc(v, z)) return true;
        }
        return false;
    };
    auto covers = [&](const std::vector<int>& zs) {
        for (int v : s) {
            if (!dominated(v, zs)) return false;
        }
        return true;
    };
    if (s.empty()) return VertexSet{};
    for (int z : z_set) {
        if (covers({z})) return VertexSet{z};
    }
    for (int i = 0; i < z_set.size(); ++i) {
        for (int j = i + 1; j < z_set.size(); ++j) {
            if (covers({z_set[i], z_set[j]})) return VertexSet{z_set[i], z_set[j]};
        }
    }
    return std::nullopt;
}

LayerSequence layer_sequence(const Tournament& t, int z) {
    if (z < 0 || z >= t.size()) throw PreconditionError("layer_sequence: root out of range");
    LayerSequence seq;
    seq.root = z;
    seq.layers.push_back(VertexSet{z});
    VertexSet used{z};
    while (true) {
        VertexSet next = difference(in_neighbours(t, seq.layers.back()), used);
        if (next.empty()) break;
        used = unite(used, next);
        seq.layers.push_back(std::move(next));
    }
    seq.unreachable = difference(VertexSet::full(t.size()), used);
    return seq;
}

// ---------------------------------------------------------- canonical forms

namespace {

constexpr int kMaxCanonicalOrder = 8;

int pair_count(int n) { return n * (n - 1) / 2; }

// pos(u,v), u < v, in lexicographic pair order; the most significant code bit
// belongs to pair (0,1).
int pair_pos(int n, int u, int v) {
    return (u * (2 * n - u - 1)) / 2 + (v - u - 1);
}

struct BitMap {
    std::uint8_t source;
    std::uint8_t flip;
};

// For permutation sigma, target bit (i,j) of the relabeled code comes from
// source pair (sigma(i), sigma(j)), negated when sigma reverses the pair.
std::vector<BitMap> permutation_bit_map(int n, const std::vector<int>& sigma) {
    int bits = pair_count(n);
    std::vector<BitMap> map(static_cast<std::size_t>(bits));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int a = sigma[static_cast<std::size_t>(i)];
            int b = sigma[static_cast<std::size_t>(j)];
            BitMap& m = map[static_cast<std::size_t>(pair_pos(n, i, j))];
            if (a < b) {
                m = {static_cast<std::uint8_t>(pair_pos(n, a, b)), 0};
            } else {
                m = {static_cast<std::uint8_t>(pair_pos(n, b, a)), 1};
            }
        }
    }
    return map;
}

std::vector<std::vector<BitMap>> build_permutation_tables(int n) {
    std::vector<std::vector<BitMap>> tables;
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        tables.push_back(permutation_bit_map(n, sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return tables;
}

const std::vector<std::vector<BitMap>>& permutation_tables(int n) {
    // one magic static per order keeps concurrent first calls safe
    static const std::vector<std::vector<BitMap>> cached[kMaxCanonicalOrder + 1] = {
        build_permutation_tables(0), build_permutation_tables(1),
        build_permutation_tables(2), build_permutation_tables(3),
        build_permutation_tables(4), build_permutation_tables(5),
        build_permutation_tables(6), build_permutation_tables(7),
        build_permutation_tables(8)};
    return cached[n];
}

std::uint64_t apply_bit_map(int bits, std::uint64_t code, const std::vector<BitMap>& map) {
    std::uint64_t out = 0;
    for (int pos = 0; pos < bits; ++pos) {
        const BitMap& m = map[static_cast<std::size_t>(pos)];
        std::uint64_t bit = ((code >> (bits - 1 - m.source)) & 1u) ^ m.flip;
        out |= bit << (bits - 1 - pos);
    }
    return out;
}

} // namespace

std::uint64_t encode_arcs(const Tournament& t) {
    int n = t.size();
    if (n > kMaxCanonicalOrder) throw PreconditionError("encode_arcs: order cap is 8");
    int bits = pair_count(n);
    std::uint64_t code = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (t.arc(u, v)) code |= std::uint64_t{1} << (bits - 1 - pair_pos(n, u, v));
        }
    }
    return code;
}

Tournament decode_arcs(int n, std::uint64_t code) {
    if (n > kMaxCanonicalOrder) throw PreconditionError("decode_arcs: order cap is 8");
    int bits = pair_count(n);
    Tournament t(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if ((code >> (bits - 1 - pair_pos(n, u, v))) & 1u) {
                t.orient(u, v);
            } else {
                t.orient(v, u);
            }
        }
    }
    return t;
}

CanonicalForm canonical_form(const Tournament& t) {
    int n = t.size();
    if (n > kMaxCanonicalOrder) throw PreconditionError("canonical_form: order cap is 8");
    std::uint64_t code = encode_arcs(t);
    std::uint64_t best = code;
    int bits = pair_count(n);
    for (const auto& map : permutation_tables(n)) {
        best = std::min(best, apply_bit_map(bits, code, map));
    }
    return CanonicalForm{n, best};
}

// ----------------------------------------------------------- enumeration

std::vector<std::uint64_t> enumerate_classes(
    int order, const std::function<bool(const Tournament&)>& keep) {
    if (order < 0 || order > 7) {
        throw PreconditionError("enumerate_classes: order cap is 7");
    }
    if (order == 0) {
        std::vector<std::uint64_t> out;
        if (keep(Tournament(0))) out.push_back(0);
        return out;
    }
    int bits = pair_count(order);
    const auto& tables = permutation_tables(order);
    std::vector<bool> seen(std::size_t{1} << bits, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
        if (seen[code]) continue;
        // First unseen member of an orbit is its lexicographic minimum, i.e.
        // the canonical code of the class.
        for (const auto& map : tables) {
            seen[apply_bit_map(bits, code, map)] = true;
        }
        if (keep(decode_arcs(order, code))) out.push_back(code);
    }
    return out;
}

Tournament FamilyEnumeration::representative(int i) const {
    return decode_arcs(order, codes[static_cast<std::size_t>(i)]);
}

FamilyEnumeration enumerate_family(int order, int forbidden_transitive) {
    if (forbidden_transitive < 0) {
        throw PreconditionError("enumerate_family: negative forbidden order");
    }
    FamilyEnumeration family;
    family.order = order;
    family.forbidden_order = forbidden_transitive;
    family.codes = enumerate_classes(order, [&](const Tournament& t) {
        if (forbidden_transitive > order) return true; // nothing that large to forbid
        return !has_transitive_subtournament(t, forbidden_transitive);
    });
    return family;
}

} // namespace tfvs
