#ifndef LATDIAM_MINKOWSKI_HPP
#define LATDIAM_MINKOWSKI_HPP

// Lower-bound witnesses: Minkowski sums of lattice segments (zonotopes)
// translated into the grid [0,k]^3.

#include <algorithm>
#include <array>
#include <cstdio>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latdiam/geometry.hpp"

namespace latdiam {

/// Thrown when a Minkowski sum does not fit into [0,k]^3 after translation.
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GeneratorSet {
    std::vector<std::array<int, 3>> vectors;

    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<std::array<int, 3>> v) : vectors(std::move(v)) {
        for (const auto& g : vectors)
            if (g == std::array<int, 3>{0, 0, 0}) throw std::invalid_argument("generator set contains the zero vector");
    }
};

/// Componentwise extent of the sum: the sum of |g_i| per coordinate.
inline std::array<int, 3> coordinate_range(const GeneratorSet& g) {
    std::array<int, 3> r{};
    for (const auto& v : g.vectors)
        for (int i = 0; i < 3; ++i) r[i] += std::abs(v[i]);
    return r;
}

/// All 2^m subset sums, translated so the componentwise minimum is 0.
inline std::vector<Point3> subset_sums(const GeneratorSet& g) {
    if (g.vectors.size() > 20) throw std::invalid_argument("subset_sums: too many generators");
    std::vector<Point3> pts{{0, 0, 0}};
    for (const auto& v : g.vectors) {
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) pts.push_back({pts[i][0] + v[0], pts[i][1] + v[1], pts[i][2] + v[2]});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    }
    Point3 lo = pts.front();
    for (const auto& p : pts)
        for (int i = 0; i < 3; ++i) lo[i] = std::min(lo[i], p[i]);
    for (auto& p : pts)
        for (int i = 0; i < 3; ++i) p[i] -= lo[i];
    return pts;
}

/// Hull of the translated Minkowski sum; throws FitError when some
/// coordinate range exceeds k.
inline Polytope3 minkowski_polytope(const GeneratorSet& g, int k) {
    const auto r = coordinate_range(g);
    for (int i = 0; i < 3; ++i)
        if (r[i] > k)
            throw FitError("Minkowski sum spans [0," + std::to_string(r[i]) + "] in coordinate " +
                           std::to_string(i + 1) + ", exceeding k=" + std::to_string(k));
    return hull3d(subset_sums(g));
}

/// floor((k+1) d / 2)
inline int conjecture_bound(int d, int k) { return (k + 1) * d / 2; }

/// Built-in generator sets: "cube" (k=1), "d3k3", "d3k4", "d3k5".
inline GeneratorSet preset_generators(const std::string& name) {
    if (name == "cube") return GeneratorSet({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    if (name == "d3k3") return GeneratorSet({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    if (name == "d3k4")
        return GeneratorSet({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}});
    if (name == "d3k5")
        return GeneratorSet({{1, 0, 0},
                             {0, 1, 0},
                             {0, 0, 1},
                             {0, 1, 1},
                             {1, 0, 1},
                             {1, 1, 0},
                             {0, 1, -1},
                             {1, 0, -1},
                             {1, -1, 0}});
    throw std::invalid_argument("unknown generator preset: " + name);
}

/// Preset used as the lower-bound witness for delta(3,k), if any.
inline std::string preset_for(int k) {
    switch (k) {
        case 1: return "cube";
        case 3: return "d3k3";
        case 4: return "d3k4";
        case 5: return "d3k5";
        default: return {};
    }
}

/// One vector per line, comma-separated integers; blank lines and lines
/// starting with '#' are ignored.
inline GeneratorSet read_generators(std::istream& in) {
    std::vector<std::array<int, 3>> v;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::array<int, 3> g{};
        char tail = 0;
        if (std::sscanf(line.c_str(), " %d , %d , %d %c", &g[0], &g[1], &g[2], &tail) != 3)
            throw std::invalid_argument("generator file line " + std::to_string(lineno) + ": expected 'a,b,c'");
        v.push_back(g);
    }
    return GeneratorSet(std::move(v));
}

}  // namespace latdiam

#endif  // LATDIAM_MINKOWSKI_HPP
