#ifndef LATDIAM_GEOMETRY_HPP
#define LATDIAM_GEOMETRY_HPP

// Exact integer geometry kernel: orientation predicates, 2D and 3D convex
// hulls (3D facets are maximal planar faces, never triangulations), edge
// graphs and breadth-first distances.
//
// Coordinates are small lattice values (|x| <= a few hundred); every
// predicate is evaluated in 64-bit integers and is exact.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latdiam {

template <std::size_t D>
using LatticePoint = std::array<int, D>;

using Point2 = LatticePoint<2>;
using Point3 = LatticePoint<3>;

/// Raised when a hull is requested for input that does not span the space.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <std::size_t D>
std::string to_string(const LatticePoint<D>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < D; ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

/// Sign of det(b - a, c - a): +1 counterclockwise, 0 collinear, -1 clockwise.
inline int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    const std::int64_t det = std::int64_t(b[0] - a[0]) * (c[1] - a[1]) -
                             std::int64_t(b[1] - a[1]) * (c[0] - a[0]);
    return (det > 0) - (det < 0);
}

/// Convex lattice polygon, vertices in counterclockwise order starting at
/// the lexicographically least vertex.
struct Polygon {
    std::vector<Point2> vertices;

    std::size_t size() const { return vertices.size(); }
    const Point2& operator[](std::size_t i) const { return vertices[i]; }
    const Point2& next(std::size_t i) const { return vertices[(i + 1) % size()]; }
    const Point2& prev(std::size_t i) const { return vertices[(i + size() - 1) % size()]; }

    std::optional<std::size_t> index_of(const Point2& p) const {
        auto it = std::find(vertices.begin(), vertices.end(), p);
        if (it == vertices.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vertices.begin());
    }

    friend auto operator<=>(const Polygon&, const Polygon&) = default;
};

/// True when the cycle is strictly convex, counterclockwise and has at least
/// three vertices.
inline bool is_strictly_convex(std::span<const Point2> cycle) {
    const std::size_t n = cycle.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (orient2d(cycle[i], cycle[(i + 1) % n], cycle[(i + 2) % n]) <= 0) return false;
    }
    // Positive turns alone admit star polygons; require the edge direction
    // to wind exactly once.
    int turns = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = cycle[i];
        const Point2& b = cycle[(i + 1) % n];
        const Point2& c = cycle[(i + 2) % n];
        const long dx1 = b[0] - a[0], dy1 = b[1] - a[1];
        const long dx2 = c[0] - b[0], dy2 = c[1] - b[1];
        const bool below1 = dy1 < 0 || (dy1 == 0 && dx1 > 0);
        const bool below2 = dy2 < 0 || (dy2 == 0 && dx2 > 0);
        if (!below1 && below2) ++turns;
    }
    return turns == 1;
}

/// Indices of the strict hull of `pts` (collinear boundary points dropped),
/// counterclockwise, starting from the lexicographically least point.
/// Returns fewer than three indices for degenerate input.
inline std::vector<std::size_t> hull2d_indices(std::span<const Point2> pts) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
                order.end());
    if (order.size() < 3) return order;

    std::vector<std::size_t> h(2 * order.size());
    std::size_t m = 0;
    for (std::size_t idx : order) {
        while (m >= 2 && orient2d(pts[h[m - 2]], pts[h[m - 1]], pts[idx]) <= 0) --m;
        h[m++] = idx;
    }
    const std::size_t lower = m + 1;
    for (auto it = order.rbegin() + 1; it != order.rend(); ++it) {
        while (m >= lower && orient2d(pts[h[m - 2]], pts[h[m - 1]], pts[*it]) <= 0) --m;
        h[m++] = *it;
    }
    h.resize(m - 1);
    return h;
}

/// Strict convex hull of a planar lattice point set.
inline Polygon hull2d(std::span<const Point2> pts) {
    auto idx = hull2d_indices(pts);
    if (idx.size() < 3) throw DimensionError("hull2d: input is collinear or has fewer than 3 points");
    Polygon p;
    p.vertices.reserve(idx.size());
    for (auto i : idx) p.vertices.push_back(pts[i]);
    return p;
}

namespace detail {

using Vec3 = std::array<std::int64_t, 3>;

inline Vec3 sub(const Point3& a, const Point3& b) {
    return {std::int64_t(a[0]) - b[0], std::int64_t(a[1]) - b[1], std::int64_t(a[2]) - b[2]};
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline std::int64_t dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline std::int64_t dot(const Vec3& a, const Point3& p) { return a[0] * p[0] + a[1] * p[1] + a[2] * p[2]; }

inline bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

inline Vec3 primitive(Vec3 v) {
    std::int64_t g = std::gcd(std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]), v[2] < 0 ? -v[2] : v[2]);
    if (g > 1)
        for (auto& c : v) c /= g;
    return v;
}

/// Affine rank (0..3) of a point set.
inline int affine_rank(std::span<const Point3> pts) {
    if (pts.empty()) return -1;
    const Point3& a = pts[0];
    std::size_t i = 1;
    while (i < pts.size() && pts[i] == a) ++i;
    if (i == pts.size()) return 0;
    const Vec3 ab = sub(pts[i], a);
    std::size_t j = i + 1;
    Vec3 n{};
    for (; j < pts.size(); ++j) {
        n = cross(ab, sub(pts[j], a));
        if (!is_zero(n)) break;
    }
    if (j >= pts.size()) return 1;
    for (std::size_t l = j + 1; l < pts.size(); ++l)
        if (dot(n, sub(pts[l], a)) != 0) return 3;
    return 2;
}

// Supporting plane through the line {a + t*dir} that touches at least one of
// the points strictly below (n_prev . p < off_prev). The candidates all lie in
// an open half-space bounded by a plane containing the line, so the planes
// through the line are totally ordered by rotation and one pass finds the
// extreme one. Returns the outward normal.
inline Vec3 pivot(std::span<const Point3> pts, const Point3& a, const Vec3& dir, const Vec3& n_prev,
                  std::int64_t off_prev) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        const Vec3 d = attempt == 0 ? dir : Vec3{-dir[0], -dir[1], -dir[2]};
        const Point3* c = nullptr;
        for (const auto& p : pts) {
            if (dot(n_prev, p) >= off_prev) continue;
            if (!c) {
                c = &p;
                continue;
            }
            if (dot(cross(sub(*c, a), d), sub(p, a)) > 0) c = &p;
        }
        if (!c) throw std::logic_error("hull3d: pivot without candidates");
        const Vec3 n = cross(sub(*c, a), d);
        bool ok = true;
        for (const auto& p : pts) {
            if (dot(n, sub(p, a)) > 0) {
                ok = false;
                break;
            }
        }
        if (ok) return primitive(n);
    }
    throw std::logic_error("hull3d: no supporting plane found");
}

}  // namespace detail

/// Maximal planar face of a 3D polytope. `cycle` lists vertex indices
/// counterclockwise as seen from outside; `normal` is the primitive outward
/// normal and every point x of the polytope satisfies normal . x <= offset.
struct Facet {
    std::array<std::int64_t, 3> normal{};
    std::int64_t offset = 0;
    std::vector<int> cycle;
};

/// Convex hull of a full-dimensional 3D lattice point set. Vertices are
/// sorted lexicographically; edges are (i, j) index pairs with i < j, sorted.
struct Polytope3 {
    std::vector<Point3> vertices;
    std::vector<Facet> facets;
    std::vector<std::pair<int, int>> edges;

    std::optional<int> index_of(const Point3& p) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
        if (it == vertices.end() || *it != p) return std::nullopt;
        return static_cast<int>(it - vertices.begin());
    }
};

/// Exact 3D convex hull by gift wrapping over merged planar facets.
/// Throws DimensionError when the input has affine rank < 3.
inline Polytope3 hull3d(std::span<const Point3> input) {
    using namespace detail;
    std::vector<Point3> pts(input.begin(), input.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 4 || affine_rank(pts) < 3)
        throw DimensionError("hull3d: input is not full-dimensional");

    struct RawFacet {
        Vec3 normal;
        std::int64_t offset;
        std::vector<Point3> cycle;
    };

    auto contact = [&](const Vec3& n, std::int64_t off) {
        std::vector<Point3> s;
        for (const auto& p : pts)
            if (dot(n, p) == off) s.push_back(p);
        return s;
    };

    // Counterclockwise (seen along -normal) strict hull of a planar point set.
    auto facet_cycle = [](const Vec3& n, const std::vector<Point3>& plane_pts) {
        int drop = 0;
        for (int i = 1; i < 3; ++i) {
            auto mag = [&](int j) { return n[j] < 0 ? -n[j] : n[j]; };
            if (mag(i) > mag(drop)) drop = i;
        }
        // cyclic order keeps the projection orientation-preserving for n[drop] > 0
        const int a0 = (drop + 1) % 3, a1 = (drop + 2) % 3;
        std::vector<Point2> proj;
        proj.reserve(plane_pts.size());
        for (const auto& p : plane_pts) proj.push_back({p[a0], p[a1]});
        auto idx = hull2d_indices(proj);
        std::vector<Point3> cyc;
        cyc.reserve(idx.size());
        for (auto i : idx) cyc.push_back(plane_pts[i]);
        if (n[drop] < 0) std::reverse(cyc.begin(), cyc.end());
        return cyc;
    };

    // Initial facet: start from the supporting plane x = min x and pivot
    // until the contact set is two-dimensional.
    Vec3 n{-1, 0, 0};
    std::int64_t off = dot(n, pts.front());
    std::vector<Point3> touch = contact(n, off);
    for (int guard = 0; guard < 3; ++guard) {
        const bool planar = touch.size() >= 3 && [&] {
            const Vec3 ab = sub(touch[1], touch[0]);
            for (std::size_t i = 2; i < touch.size(); ++i)
                if (!is_zero(cross(ab, sub(touch[i], touch[0])))) return true;
            return false;
        }();
        if (planar) break;
        const Point3 a = touch.front();
        Vec3 dir;
        if (touch.size() >= 2) {
            dir = sub(touch.back(), a);
        } else {
            dir = cross(n, Vec3{0, 0, 1});
            if (is_zero(dir)) dir = cross(n, Vec3{0, 1, 0});
        }
        n = pivot(pts, a, dir, n, off);
        off = dot(n, a);
        touch = contact(n, off);
    }

    std::vector<RawFacet> raw;
    std::set<std::pair<Vec3, std::int64_t>> seen;
    raw.push_back({n, off, facet_cycle(n, touch)});
    seen.insert({n, off});
    for (std::size_t f = 0; f < raw.size(); ++f) {
        const std::size_t m = raw[f].cycle.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point3 a = raw[f].cycle[i];
            const Point3 b = raw[f].cycle[(i + 1) % m];
            const Vec3 nn = pivot(pts, a, sub(b, a), raw[f].normal, raw[f].offset);
            const std::int64_t oo = dot(nn, a);
            if (seen.insert({nn, oo}).second) raw.push_back({nn, oo, facet_cycle(nn, contact(nn, oo))});
        }
    }

    Polytope3 out;
    for (const auto& rf : raw) out.vertices.insert(out.vertices.end(), rf.cycle.begin(), rf.cycle.end());
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());

    std::set<std::pair<int, int>> edges;
    out.facets.reserve(raw.size());
    for (const auto& rf : raw) {
        Facet f;
        f.normal = rf.normal;
        f.offset = rf.offset;
        for (const auto& p : rf.cycle) f.cycle.push_back(*out.index_of(p));
        for (std::size_t i = 0; i < f.cycle.size(); ++i) {
            int x = f.cycle[i], y = f.cycle[(i + 1) % f.cycle.size()];
            edges.insert({std::min(x, y), std::max(x, y)});
        }
        out.facets.push_back(std::move(f));
    }
    out.edges.assign(edges.begin(), edges.end());
    return out;
}

/// True iff q satisfies every facet inequality (boundary counts as inside).
inline bool contains_point(const Polytope3& p, const Point3& q) {
    for (const auto& f : p.facets)
        if (detail::dot(f.normal, q) > f.offset) return false;
    return true;
}

/// Undirected simple graph as sorted adjacency lists.
struct EdgeGraph {
    std::vector<std::vector<int>> adjacency;

    std::size_t size() const { return adjacency.size(); }

    static EdgeGraph from_edges(std::size_t n, std::span<const std::pair<int, int>> edges) {
        EdgeGraph g;
        g.adjacency.resize(n);
        for (auto [a, b] : edges) {
            if (a == b) continue;
            g.adjacency[a].push_back(b);
            g.adjacency[b].push_back(a);
        }
        for (auto& adj : g.adjacency) {
            std::sort(adj.begin(), adj.end());
            adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        }
        return g;
    }

    /// Cycle graph C_n on vertices 0..n-1.
    static EdgeGraph cycle(std::size_t n) {
        std::vector<std::pair<int, int>> e;
        for (std::size_t i = 0; i < n; ++i) e.push_back({int(i), int((i + 1) % n)});
        return from_edges(n, e);
    }
};

inline EdgeGraph edge_graph(const Polytope3& p) { return EdgeGraph::from_edges(p.vertices.size(), p.edges); }

namespace detail {
inline std::vector<int> bfs_levels(const EdgeGraph& g, int s) {
    std::vector<int> dist(g.size(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : g.adjacency[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    return dist;
}
}  // namespace detail

/// Shortest-path length; nullopt when t is unreachable from s.
inline std::optional<int> graph_distance(const EdgeGraph& g, int s, int t) {
    if (s < 0 || t < 0 || std::size_t(s) >= g.size() || std::size_t(t) >= g.size())
        throw std::out_of_range("graph_distance: vertex index out of range");
    if (s == t) return 0;
    const int d = detail::bfs_levels(g, s)[t];
    if (d < 0) return std::nullopt;
    return d;
}

/// Largest shortest-path distance; throws on a disconnected graph.
inline int graph_diameter(const EdgeGraph& g) {
    int best = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        for (int d : detail::bfs_levels(g, int(s))) {
            if (d < 0) throw std::domain_error("graph_diameter: graph is disconnected");
            best = std::max(best, d);
        }
    }
    return best;
}

}  // namespace latdiam

#endif  // LATDIAM_GEOMETRY_HPP
