#ifndef LATDIAM_INNERPOINTS_HPP
#define LATDIAM_INNERPOINTS_HPP

// Binary include/exclude search over the interior lattice points that may
// still become vertices of a polytope whose boundary slices are fixed by a
// shelling. Every node gets a hull and a u-v distance.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latdiam/geometry.hpp"
#include "latdiam/shelling.hpp"
#include "latdiam/symmetry.hpp"

namespace latdiam {

enum class PruningMode { Paper, Exhaustive };

inline std::string to_string(PruningMode m) { return m == PruningMode::Paper ? "paper" : "exhaustive"; }

inline PruningMode parse_pruning_mode(const std::string& s) {
    if (s == "paper") return PruningMode::Paper;
    if (s == "exhaustive") return PruningMode::Exhaustive;
    throw std::invalid_argument("unknown pruning mode: " + s);
}

/// Points of {1,...,k-1}^3 outside the hull of the shelling's boundary
/// vertices, in lexicographic order.
inline std::vector<Point3> candidate_points(const ShellingAssignment& shelling, int k) {
    const Polytope3 h = hull3d(shelling.boundary_vertices);
    std::vector<Point3> out;
    for (int x = 1; x < k; ++x)
        for (int y = 1; y < k; ++y)
            for (int z = 1; z < k; ++z)
                if (!contains_point(h, {x, y, z})) out.push_back({x, y, z});
    return out;
}

struct SearchOutcome {
    std::optional<int> max_uv_distance;      // over nodes where u and v are both vertices
    std::optional<std::vector<Point3>> witness;  // set iff max_uv_distance == limit + 1
    std::vector<Point3> best_vertices;       // hull vertices of the first node reaching the max
    std::uint64_t nodes_visited = 0;
    std::uint64_t hulls_computed = 0;

    /// Keeps the larger distance; ties keep *this, so merging in a fixed
    /// order is deterministic.
    SearchOutcome& merge(const SearchOutcome& o) {
        if (o.max_uv_distance && (!max_uv_distance || *o.max_uv_distance > *max_uv_distance)) {
            max_uv_distance = o.max_uv_distance;
            witness = o.witness;
            best_vertices = o.best_vertices;
        }
        nodes_visited += o.nodes_visited;
        hulls_computed += o.hulls_computed;
        return *this;
    }
};

/// d(u,v) in the edge graph of hull(points), or nullopt when u or v is not a
/// vertex of that hull.
inline std::optional<int> uv_distance(const Polytope3& h, const AntipodalPair& pair) {
    const auto iu = h.index_of(pair.u);
    const auto iv = h.index_of(pair.v);
    if (!iu || !iv) return std::nullopt;
    return graph_distance(edge_graph(h), *iu, *iv);
}

/// Explores the binary tree over candidate_points(shelling) in lexicographic
/// order, "exclude" child before "include" child. An exclude child has the
/// same point set as its parent, so only include steps build a new hull.
///
/// Paper pruning drops the whole subtree of a node whose hull already has
/// d(u,v) <= limit. Exhaustive pruning never drops a subtree.
///
/// An endpoint strictly inside the cube has to be a vertex, so it is
/// included from the root instead of being branched on; if it is not a
/// candidate at all the tree is empty.
inline SearchOutcome explore(const ShellingAssignment& shelling, const AntipodalPair& pair, int k, int limit,
                             PruningMode mode) {
    SearchOutcome out;
    std::vector<Point3> cands = candidate_points(shelling, k);

    std::vector<Point3> points = shelling.boundary_vertices;
    for (const auto& e : {pair.u, pair.v}) {
        if (std::find(points.begin(), points.end(), e) != points.end()) continue;
        auto it = std::find(cands.begin(), cands.end(), e);
        if (it == cands.end()) return out;
        cands.erase(it);
        points.push_back(e);
    }
    bool done = false;

    auto evaluate = [&]() -> std::optional<int> {
        ++out.hulls_computed;
        const Polytope3 h = hull3d(points);
        const auto d = uv_distance(h, pair);
        if (d && (!out.max_uv_distance || *d > *out.max_uv_distance)) {
            out.max_uv_distance = d;
            out.best_vertices = h.vertices;
            if (*d == limit + 1) {
                out.witness = h.vertices;
                done = true;
            }
        }
        return d;
    };

    // value: d(u,v) of the current point set, already evaluated by the caller
    auto visit = [&](auto& self, std::size_t depth, std::optional<int> value) -> void {
        ++out.nodes_visited;
        if (done) return;
        if (mode == PruningMode::Paper && value && *value <= limit) return;
        if (depth == cands.size()) return;
        self(self, depth + 1, value);
        if (done) return;
        points.push_back(cands[depth]);
        const auto included = evaluate();
        self(self, depth + 1, included);
        points.pop_back();
    };

    const auto root = evaluate();
    visit(visit, 0, root);
    return out;
}

}  // namespace latdiam

#endif  // LATDIAM_INNERPOINTS_HPP
