#ifndef LATDIAM_POLYGONS_HPP
#define LATDIAM_POLYGONS_HPP

// Convex lattice polygons in [0,k]^2: the largest diameter delta(2,k), the
// family of polygons attaining it, and the {-1,0,1} edge filter at a corner.
//
// The edge graph of a convex polygon with n vertices is the cycle C_n, so
// its diameter is floor(n/2) and everything reduces to vertex counts.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latdiam/geometry.hpp"
#include "latdiam/symmetry.hpp"

namespace latdiam {

inline int polygon_diameter(const Polygon& p) { return static_cast<int>(p.size() / 2); }

namespace detail {

// Nonzero vectors with |dx|,|dy| <= k grouped by direction, groups sorted by
// angle in (-90deg, 270deg]; the multiples inside a group are sorted by length.
// This is the edge order of a counterclockwise polygon read from its
// lexicographically least vertex.
inline std::vector<std::vector<Point2>> direction_groups(int k) {
    auto half = [](const Point2& v) {
        if (v[0] > 0) return 0;
        if (v[0] < 0 || v[1] > 0) return 1;
        return 2;
    };
    std::vector<Point2> prim;
    for (int dx = -k; dx <= k; ++dx)
        for (int dy = -k; dy <= k; ++dy)
            if (std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy) == 1) prim.push_back({dx, dy});
    std::sort(prim.begin(), prim.end(), [&](const Point2& a, const Point2& b) {
        const int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        return std::int64_t(a[0]) * b[1] - std::int64_t(a[1]) * b[0] > 0;
    });
    std::vector<std::vector<Point2>> groups;
    for (const auto& p : prim) {
        std::vector<Point2> g;
        for (int m = 1; std::abs(m * p[0]) <= k && std::abs(m * p[1]) <= k; ++m) g.push_back({m * p[0], m * p[1]});
        groups.push_back(std::move(g));
    }
    return groups;
}

// Depth-first construction of convex vertex chains anchored at a fixed
// lexicographically least vertex. `best(q, g)` is the largest number of
// further edges (closing edge included) that return from q to the anchor
// using directions after group g, memoized per anchor; it prunes every branch
// that cannot reach the requested vertex count.
class ChainSearch {
public:
    ChainSearch(int k, const std::vector<std::vector<Point2>>& groups, Point2 anchor)
        : k_(k), groups_(groups), anchor_(anchor),
          memo_(std::size_t(k + 1) * (k + 1) * (groups.size() + 1), kUnknown) {}

    int best(const Point2& q, int g) {
        int& slot = memo_[key(q, g)];
        if (slot != kUnknown) return slot;
        int result = kImpossible;
        for (std::size_t h = std::size_t(g + 1); h < groups_.size(); ++h) {
            for (const auto& w : groups_[h]) {
                const Point2 r{q[0] + w[0], q[1] + w[1]};
                if (r == anchor_) {
                    result = std::max(result, 1);
                } else if (inside(r)) {
                    const int rest = best(r, int(h));
                    if (rest != kImpossible) result = std::max(result, 1 + rest);
                }
            }
        }
        return slot = result;
    }

    template <class Emit>
    void enumerate(int min_n, int max_n, Emit&& emit) {
        std::vector<Point2> chain{anchor_};
        walk(chain, -1, min_n, max_n, emit);
    }

    static constexpr int kImpossible = -1000000;

private:
    static constexpr int kUnknown = -2000000;

    std::size_t key(const Point2& q, int g) const {
        return (std::size_t(q[0]) * (k_ + 1) + q[1]) * (groups_.size() + 1) + std::size_t(g + 1);
    }
    bool inside(const Point2& r) const { return r[0] >= 0 && r[1] >= 0 && r[0] <= k_ && r[1] <= k_; }

    template <class Emit>
    void walk(std::vector<Point2>& chain, int g, int min_n, int max_n, Emit& emit) {
        const Point2 q = chain.back();
        const int edges = int(chain.size()) - 1;
        for (std::size_t h = std::size_t(g + 1); h < groups_.size(); ++h) {
            for (const auto& w : groups_[h]) {
                const Point2 r{q[0] + w[0], q[1] + w[1]};
                if (r == anchor_) {
                    const int n = edges + 1;
                    if (n >= 3 && n >= min_n && n <= max_n) emit(chain);
                    continue;
                }
                if (!inside(r)) continue;
                if (edges + 1 >= max_n) continue;
                const int rest = best(r, int(h));
                if (rest == kImpossible || edges + 1 + rest < min_n) continue;
                chain.push_back(r);
                walk(chain, int(h), min_n, max_n, emit);
                chain.pop_back();
            }
        }
    }

    int k_;
    const std::vector<std::vector<Point2>>& groups_;
    Point2 anchor_;
    std::vector<int> memo_;
};

}  // namespace detail

/// Largest vertex count of a convex lattice polygon in [0,k]^2.
///
/// Exhaustive over edge-vector sets: a convex polygon is the same thing as a
/// set of nonzero vectors with pairwise distinct directions summing to zero,
/// and it fits in [0,k]^2 (after translation) iff the absolute x parts and the
/// absolute y parts each sum to at most 2k. The group knapsack below takes at
/// most one vector per primitive direction.
inline int max_vertex_count(int k) {
    if (k < 1) throw std::invalid_argument("max_vertex_count: k must be >= 1");
    const int A = 2 * k;           // bound on sum |dx| and on sum |dy|
    const int S = 4 * k + 1;       // signed sums in [-2k, 2k]
    auto idx = [&](int ax, int ay, int sx, int sy) {
        return ((std::size_t(ax) * (A + 1) + ay) * S + (sx + A)) * S + (sy + A);
    };
    std::vector<std::int16_t> dp(std::size_t(A + 1) * (A + 1) * S * S, -1);
    dp[idx(0, 0, 0, 0)] = 0;

    for (const auto& group : detail::direction_groups(k)) {
        auto next = dp;
        for (int ax = 0; ax <= A; ++ax)
            for (int ay = 0; ay <= A; ++ay)
                for (int sx = -ax; sx <= ax; ++sx)
                    for (int sy = -ay; sy <= ay; ++sy) {
                        const int cur = dp[idx(ax, ay, sx, sy)];
                        if (cur < 0) continue;
                        for (const auto& w : group) {
                            const int nax = ax + std::abs(w[0]), nay = ay + std::abs(w[1]);
                            if (nax > A || nay > A) continue;
                            auto& slot = next[idx(nax, nay, sx + w[0], sy + w[1])];
                            slot = std::max<std::int16_t>(slot, std::int16_t(cur + 1));
                        }
                    }
        dp = std::move(next);
    }
    int best = 0;
    for (int ax = 0; ax <= A; ++ax)
        for (int ay = 0; ay <= A; ++ay) best = std::max<int>(best, dp[idx(ax, ay, 0, 0)]);
    return best;
}

/// Largest edge-graph diameter of a lattice (2,k)-polygon.
inline int delta2(int k) { return max_vertex_count(k) / 2; }

/// All strictly convex lattice polygons in [0,k]^2 with min_n..max_n
/// vertices, each as its canonical cycle, sorted.
inline std::vector<Polygon> enumerate_polygons(int k, int min_n, int max_n) {
    const auto groups = detail::direction_groups(k);
    std::vector<Polygon> out;
    for (int x = 0; x <= k; ++x)
        for (int y = 0; y <= k; ++y) {
            detail::ChainSearch search(k, groups, {x, y});
            search.enumerate(min_n, max_n, [&](const std::vector<Point2>& chain) { out.push_back({chain}); });
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// The polygons of [0,k]^2 attaining delta(2,k): n in {2*delta, 2*delta+1}.
struct PolygonFamily {
    int k = 0;
    int target_diameter = 0;
    std::vector<Polygon> members;

    std::size_t size() const { return members.size(); }
};

inline PolygonFamily enumerate_family(int k) {
    PolygonFamily f;
    f.k = k;
    f.target_diameter = delta2(k);
    f.members = enumerate_polygons(k, 2 * f.target_diameter, 2 * f.target_diameter + 1);
    return f;
}

/// Image of a polygon under a symmetry of the square [0,k]^2.
inline Polygon transform(const Polygon& p, const CubeSymmetry<2>& s, int k) {
    std::vector<Point2> img;
    img.reserve(p.size());
    for (const auto& v : p.vertices) img.push_back(s.apply(v, k));
    return hull2d(img);
}

/// Number of orbits of the family under the 8 symmetries of the square.
inline std::size_t count_orbits(const PolygonFamily& f) {
    std::set<Polygon> seen;
    std::size_t orbits = 0;
    const auto group = enumerate_group<2>();
    for (const auto& p : f.members) {
        if (seen.count(p)) continue;
        ++orbits;
        for (const auto& s : group) seen.insert(transform(p, s, f.k));
    }
    return orbits;
}

/// True iff both polygon edges at `corner` have coordinates in {-1,0,1}.
inline bool corner_edge_filter(const Polygon& p, const Point2& corner) {
    const auto i = p.index_of(corner);
    if (!i) throw std::invalid_argument("corner_edge_filter: " + to_string(corner) + " is not a vertex");
    auto unit = [&](const Point2& q) { return std::abs(q[0] - corner[0]) <= 1 && std::abs(q[1] - corner[1]) <= 1; };
    return unit(p.next(*i)) && unit(p.prev(*i));
}

// ---- cache file -----------------------------------------------------------
// header "k=<k> diameter=<d> count=<n>", then one polygon per line as
// semicolon-separated "x,y" pairs in canonical cyclic order.

inline void write_family(std::ostream& os, const PolygonFamily& f) {
    os << "k=" << f.k << " diameter=" << f.target_diameter << " count=" << f.size() << '\n';
    for (const auto& p : f.members) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) os << ';';
            os << p[i][0] << ',' << p[i][1];
        }
        os << '\n';
    }
}

inline PolygonFamily read_family(std::istream& is) {
    PolygonFamily f;
    std::string line;
    std::size_t count = 0;
    if (!std::getline(is, line) ||
        std::sscanf(line.c_str(), "k=%d diameter=%d count=%zu", &f.k, &f.target_diameter, &count) != 3)
        throw std::runtime_error("polygon cache: malformed header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Polygon p;
        std::stringstream ss(line);
        std::string pair;
        while (std::getline(ss, pair, ';')) {
            Point2 v;
            if (std::sscanf(pair.c_str(), "%d,%d", &v[0], &v[1]) != 2)
                throw std::runtime_error("polygon cache: malformed vertex '" + pair + "'");
            p.vertices.push_back(v);
        }
        if (!is_strictly_convex(p.vertices) || hull2d(p.vertices) != p)
            throw std::runtime_error("polygon cache: polygon is not a canonical convex cycle");
        f.members.push_back(std::move(p));
    }
    if (f.members.size() != count) throw std::runtime_error("polygon cache: count mismatch");
    return f;
}

/// Loads the family from `path` when it exists and matches k; otherwise
/// enumerates it and (re)writes the file. An empty path skips caching.
inline PolygonFamily load_or_enumerate_family(int k, const std::string& path) {
    if (!path.empty()) {
        std::ifstream in(path);
        if (in) {
            try {
                auto f = read_family(in);
                if (f.k == k && f.target_diameter == delta2(k)) return f;
            } catch (const std::runtime_error&) {
                // stale or corrupt cache: fall through and rebuild
            }
        }
    }
    auto f = enumerate_family(k);
    if (!path.empty()) {
        std::ofstream out(path);
        if (out) write_family(out, f);
    }
    return f;
}

}  // namespace latdiam

#endif  // LATDIAM_POLYGONS_HPP
