#ifndef LATDIAM_SHELLING_HPP
#define LATDIAM_SHELLING_HPP

// Placement of maximal-diameter polygons onto the six facets of the cube
// [0,k]^3, pruned by ridge consistency, the {-1,0,1} edge condition at u and
// v, and boundary shortcuts between u and v.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latdiam/geometry.hpp"
#include "latdiam/polygons.hpp"
#include "latdiam/symmetry.hpp"

namespace latdiam {

/// Facet {x_axis = level} of the cube [0,k]^3; axis is 0-based, level 0 or k.
struct FacetSlot {
    int axis = 0;
    int level = 0;

    friend auto operator<=>(const FacetSlot&, const FacetSlot&) = default;
};

inline constexpr std::size_t kSlotCount = 6;

/// Slot with canonical index 2*axis + (level == k).
inline FacetSlot slot_at(std::size_t index, int k) { return {int(index / 2), (index % 2) ? k : 0}; }

inline std::size_t slot_index(const FacetSlot& s, int k) { return std::size_t(2 * s.axis + (s.level == k ? 1 : 0)); }

/// The two axes other than `axis`, increasing; they carry the 2D coordinates.
inline std::array<int, 2> free_axes(int axis) {
    switch (axis) {
        case 0: return {1, 2};
        case 1: return {0, 2};
        default: return {0, 1};
    }
}

inline Point3 lift(const Point2& p, const FacetSlot& s) {
    Point3 q{};
    const auto ax = free_axes(s.axis);
    q[s.axis] = s.level;
    q[ax[0]] = p[0];
    q[ax[1]] = p[1];
    return q;
}

inline Point2 project(const Point3& p, int axis) {
    const auto ax = free_axes(axis);
    return {p[ax[0]], p[ax[1]]};
}

inline bool on_slot(const Point3& p, const FacetSlot& s) { return p[s.axis] == s.level; }

struct EmbeddedPolygon {
    std::vector<Point3> vertices;
    std::vector<std::pair<Point3, Point3>> edges;
};

/// Places a 2D polygon on a cube facet: (s,t) fills the free axes in order.
inline EmbeddedPolygon embed(const Polygon& p, const FacetSlot& slot, int /*k*/) {
    EmbeddedPolygon e;
    for (std::size_t i = 0; i < p.size(); ++i) {
        e.vertices.push_back(lift(p[i], slot));
        e.edges.push_back({lift(p[i], slot), lift(p.next(i), slot)});
    }
    return e;
}

/// Graph on the lattice points of [0,k]^3 with undoable edge insertion.
class LatticeGraph {
public:
    explicit LatticeGraph(int k) : k_(k), adjacency_(std::size_t(k + 1) * (k + 1) * (k + 1)) {}

    int k() const { return k_; }

    int id(const Point3& p) const { return (p[0] * (k_ + 1) + p[1]) * (k_ + 1) + p[2]; }

    void add_edge(const Point3& a, const Point3& b) {
        const int x = id(a), y = id(b);
        adjacency_[x].push_back(y);
        adjacency_[y].push_back(x);
        log_.push_back({x, y});
    }

    std::size_t checkpoint() const { return log_.size(); }

    void rollback(std::size_t mark) {
        while (log_.size() > mark) {
            auto [x, y] = log_.back();
            log_.pop_back();
            adjacency_[y].pop_back();
            adjacency_[x].pop_back();
        }
    }

    /// A point belongs to the graph once some edge touches it.
    bool contains(const Point3& p) const { return !adjacency_[id(p)].empty(); }

    /// Breadth-first distance, searching no deeper than `max_depth`;
    /// nullopt when t is farther or unreachable.
    std::optional<int> distance(const Point3& s, const Point3& t, int max_depth) const {
        const int src = id(s), dst = id(t);
        if (src == dst) return 0;
        std::vector<int> dist(adjacency_.size(), -1);
        std::vector<int> frontier{src}, next;
        dist[src] = 0;
        for (int depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
            next.clear();
            for (int x : frontier)
                for (int y : adjacency_[x]) {
                    if (dist[y] >= 0) continue;
                    if (y == dst) return depth;
                    dist[y] = depth;
                    next.push_back(y);
                }
            frontier.swap(next);
        }
        return std::nullopt;
    }

    std::vector<std::pair<Point3, Point3>> edges() const {
        std::vector<std::pair<Point3, Point3>> out;
        for (auto [x, y] : log_) {
            auto a = point(x), b = point(y);
            if (b < a) std::swap(a, b);
            out.push_back({a, b});
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    Point3 point(int id) const { return {id / ((k_ + 1) * (k_ + 1)), (id / (k_ + 1)) % (k_ + 1), id % (k_ + 1)}; }

private:
    int k_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::pair<int, int>> log_;
};

/// True iff u and v are both in the graph and joined by a path of length at
/// most `limit`.
inline bool shortcut_exists(const LatticeGraph& g, const AntipodalPair& pair, int limit) {
    if (!g.contains(pair.u) || !g.contains(pair.v)) return false;
    return g.distance(pair.u, pair.v, limit).has_value();
}

/// Six family members placed on the six cube facets.
struct ShellingAssignment {
    std::array<int, kSlotCount> polygon{};  // family index, by canonical slot index
    std::vector<Point3> boundary_vertices;  // sorted
    std::vector<std::pair<Point3, Point3>> boundary_edges;  // sorted, first < second
};

struct ShellingStats {
    std::uint64_t placements = 0;        // polygons tried at some slot
    std::uint64_t ridge_rejections = 0;  // inconsistent with an already placed neighbour
    std::uint64_t shortcut_prunes = 0;   // partial assignment with a short u-v path
    std::uint64_t interior_prunes = 0;   // interior u or v swallowed by the placed boundary
    std::uint64_t surviving = 0;

    ShellingStats& operator+=(const ShellingStats& o) {
        placements += o.placements;
        ridge_rejections += o.ridge_rejections;
        shortcut_prunes += o.shortcut_prunes;
        interior_prunes += o.interior_prunes;
        surviving += o.surviving;
        return *this;
    }
};

/// Depth-first search over slot assignments for one antipodal pair.
///
/// Slots containing u are filled first, then slots containing v, then the
/// rest. A slot containing u (or v) only accepts polygons having the
/// projected point as a vertex with both incident edges {-1,0,1}-valued.
class ShellingSearch {
public:
    ShellingSearch(const PolygonFamily& family, const AntipodalPair& pair)
        : family_(family), pair_(pair), k_(family.k), limit_(family.target_diameter + family.k - 1) {
        std::vector<std::size_t> u_slots, v_slots, rest;
        for (std::size_t s : {0, 2, 4, 1, 3, 5}) {
            const FacetSlot slot = slot_at(s, k_);
            if (on_slot(pair.u, slot))
                u_slots.push_back(s);
            else if (on_slot(pair.v, slot))
                v_slots.push_back(s);
            else
                rest.push_back(s);
        }
        for (auto* part : {&u_slots, &v_slots, &rest}) order_.insert(order_.end(), part->begin(), part->end());
        for (const auto& p : {pair.u, pair.v})
            if (std::none_of(p.begin(), p.end(), [&](int x) { return x == 0 || x == k_; })) interior_.push_back(p);

        side_masks_.resize(family.size());
        for (std::size_t p = 0; p < family.size(); ++p) {
            auto& m = side_masks_[p];
            m.fill(0);
            for (const auto& v : family.members[p].vertices)
                for (int c = 0; c < 2; ++c) {
                    if (v[c] == 0) m[2 * c] |= 1u << v[1 - c];
                    if (v[c] == k_) m[2 * c + 1] |= 1u << v[1 - c];
                }
            for (int side = 0; side < 4; ++side) by_side_[{side, m[side]}].push_back(int(p));
        }
    }

    int limit() const { return limit_; }
    const std::vector<std::size_t>& slot_order() const { return order_; }

    /// Candidates for the first slot; each is an independent search branch.
    std::vector<int> first_choices() const {
        std::array<int, kSlotCount> placed;
        placed.fill(-1);
        return candidates(0, placed);
    }

    /// Runs the branch that places `first` on the first slot. `visit` receives
    /// every surviving ShellingAssignment.
    template <class Visit>
    ShellingStats run_branch(int first, Visit&& visit) const {
        ShellingStats stats;
        LatticeGraph g(k_);
        std::array<int, kSlotCount> placed;
        placed.fill(-1);
        try_place(0, first, placed, g, stats, visit);
        return stats;
    }

    template <class Visit>
    ShellingStats run(Visit&& visit) const {
        ShellingStats stats;
        for (int first : first_choices()) stats += run_branch(first, visit);
        return stats;
    }

private:
    using SideMasks = std::array<std::uint32_t, 4>;  // sides x=0, x=k, y=0, y=k

    // Mask of polygon p's vertices on the ridge it shares with slot `other`.
    std::uint32_t ridge_mask(int p, const FacetSlot& self, const FacetSlot& other) const {
        const auto ax = free_axes(self.axis);
        const int c = ax[0] == other.axis ? 0 : 1;
        return side_masks_[p][2 * c + (other.level == k_ ? 1 : 0)];
    }

    bool consistent(int p, std::size_t slot, const std::array<int, kSlotCount>& placed) const {
        const FacetSlot self = slot_at(slot, k_);
        for (std::size_t t = 0; t < kSlotCount; ++t) {
            if (placed[t] < 0) continue;
            const FacetSlot other = slot_at(t, k_);
            if (other.axis == self.axis) continue;
            if (ridge_mask(p, self, other) != ridge_mask(placed[t], other, self)) return false;
        }
        return true;
    }

    std::vector<int> candidates(std::size_t depth, const std::array<int, kSlotCount>& placed) const {
        const std::size_t slot = order_[depth];
        const FacetSlot self = slot_at(slot, k_);
        const Point3* corner = on_slot(pair_.u, self) ? &pair_.u : on_slot(pair_.v, self) ? &pair_.v : nullptr;
        std::vector<int> out;
        if (corner) {
            const Point2 c = project(*corner, self.axis);
            for (std::size_t p = 0; p < family_.size(); ++p) {
                const auto& poly = family_.members[p];
                if (poly.index_of(c) && corner_edge_filter(poly, c)) out.push_back(int(p));
            }
            return out;
        }
        for (std::size_t t = 0; t < kSlotCount; ++t) {
            if (placed[t] < 0) continue;
            const FacetSlot other = slot_at(t, k_);
            if (other.axis == self.axis) continue;
            const auto ax = free_axes(self.axis);
            const int side = 2 * (ax[0] == other.axis ? 0 : 1) + (other.level == k_ ? 1 : 0);
            auto it = by_side_.find({side, ridge_mask(placed[t], other, self)});
            if (it != by_side_.end()) out = it->second;
            return out;
        }
        out.resize(family_.size());
        for (std::size_t p = 0; p < out.size(); ++p) out[p] = int(p);
        return out;
    }

    template <class Visit>
    void try_place(std::size_t depth, int p, std::array<int, kSlotCount>& placed, LatticeGraph& g,
                   ShellingStats& stats, Visit& visit) const {
        const std::size_t slot = order_[depth];
        ++stats.placements;
        if (!consistent(p, slot, placed)) {
            ++stats.ridge_rejections;
            return;
        }
        const auto mark = g.checkpoint();
        for (const auto& [a, b] : embed(family_.members[p], slot_at(slot, k_), k_).edges) g.add_edge(a, b);
        placed[slot] = p;
        if (shortcut_exists(g, pair_, limit_)) {
            ++stats.shortcut_prunes;
        } else if (interior_swallowed(placed)) {
            ++stats.interior_prunes;
        } else if (depth + 1 == kSlotCount) {
            ++stats.surviving;
            visit(finish(placed, g));
        } else {
            for (int q : candidates(depth + 1, placed)) try_place(depth + 1, q, placed, g, stats, visit);
        }
        placed[slot] = -1;
        g.rollback(mark);
    }

    // u and v are vertices of the polytope, so an endpoint strictly inside the
    // cube must stay outside the hull of the boundary vertices placed so far.
    bool interior_swallowed(const std::array<int, kSlotCount>& placed) const {
        if (interior_.empty()) return false;
        std::vector<Point3> pts;
        for (std::size_t s = 0; s < kSlotCount; ++s)
            if (placed[s] >= 0)
                for (const auto& v : family_.members[placed[s]].vertices) pts.push_back(lift(v, slot_at(s, k_)));
        if (detail::affine_rank(pts) < 3) return false;
        const Polytope3 h = hull3d(pts);
        return std::any_of(interior_.begin(), interior_.end(), [&](const Point3& p) { return contains_point(h, p); });
    }

    ShellingAssignment finish(const std::array<int, kSlotCount>& placed, const LatticeGraph& g) const {
        ShellingAssignment a;
        a.polygon = placed;
        for (std::size_t s = 0; s < kSlotCount; ++s)
            for (const auto& v : family_.members[placed[s]].vertices)
                a.boundary_vertices.push_back(lift(v, slot_at(s, k_)));
        std::sort(a.boundary_vertices.begin(), a.boundary_vertices.end());
        a.boundary_vertices.erase(std::unique(a.boundary_vertices.begin(), a.boundary_vertices.end()),
                                  a.boundary_vertices.end());
        a.boundary_edges = g.edges();
        return a;
    }

    const PolygonFamily& family_;
    AntipodalPair pair_;
    int k_;
    int limit_;
    std::vector<std::size_t> order_;
    std::vector<Point3> interior_;
    std::vector<SideMasks> side_masks_;
    std::map<std::pair<int, std::uint32_t>, std::vector<int>> by_side_;
};

/// Every shelling surviving ridge consistency, the corner filter and
/// shortcut pruning, in deterministic order.
inline std::vector<ShellingAssignment> enumerate_shellings(const PolygonFamily& family, const AntipodalPair& pair,
                                                           ShellingStats* stats = nullptr) {
    std::vector<ShellingAssignment> out;
    ShellingSearch search(family, pair);
    auto s = search.run([&](ShellingAssignment a) { out.push_back(std::move(a)); });
    if (stats) *stats = s;
    return out;
}

/// "pair=<u> slot_polygons=<i0,...,i5>" with indices in canonical slot order.
inline std::string trace_line(const AntipodalPair& pair, const ShellingAssignment& a) {
    std::string s = "pair=" + to_string(pair.u) + " slot_polygons=";
    for (std::size_t i = 0; i < kSlotCount; ++i) {
        if (i) s += ',';
        s += std::to_string(a.polygon[i]);
    }
    return s;
}

}  // namespace latdiam

#endif  // LATDIAM_SHELLING_HPP
