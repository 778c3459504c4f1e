#ifndef LATDIAM_SYMMETRY_HPP
#define LATDIAM_SYMMETRY_HPP

// Symmetries of the cube [0,k]^d (signed coordinate permutations) and
// canonical antipodal vertex pairs.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "latdiam/geometry.hpp"

namespace latdiam {

/// Element of the hyperoctahedral group acting on {0,...,k}^D:
///   (s p)[i] = flip[i] ? k - p[perm[i]] : p[perm[i]]
template <std::size_t D>
struct CubeSymmetry {
    std::array<int, D> perm{};
    std::array<bool, D> flip{};

    static CubeSymmetry identity() {
        CubeSymmetry s;
        std::iota(s.perm.begin(), s.perm.end(), 0);
        return s;
    }

    LatticePoint<D> apply(const LatticePoint<D>& p, int k) const {
        LatticePoint<D> q;
        for (std::size_t i = 0; i < D; ++i) q[i] = flip[i] ? k - p[perm[i]] : p[perm[i]];
        return q;
    }

    /// (*this o other)(p) == apply(other.apply(p)).
    CubeSymmetry compose(const CubeSymmetry& other) const {
        CubeSymmetry r;
        for (std::size_t i = 0; i < D; ++i) {
            r.perm[i] = other.perm[perm[i]];
            r.flip[i] = flip[i] != other.flip[perm[i]];
        }
        return r;
    }

    CubeSymmetry inverse() const {
        CubeSymmetry r;
        for (std::size_t i = 0; i < D; ++i) {
            r.perm[perm[i]] = int(i);
            r.flip[perm[i]] = flip[i];
        }
        return r;
    }

    friend auto operator<=>(const CubeSymmetry&, const CubeSymmetry&) = default;
};

template <std::size_t D>
LatticePoint<D> apply(const CubeSymmetry<D>& s, const LatticePoint<D>& p, int k) {
    return s.apply(p, k);
}

/// All 2^D * D! symmetries, in lexicographic (perm, flip) order.
template <std::size_t D>
std::vector<CubeSymmetry<D>> enumerate_group() {
    std::vector<CubeSymmetry<D>> out;
    std::array<int, D> perm;
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned mask = 0; mask < (1u << D); ++mask) {
            CubeSymmetry<D> s;
            s.perm = perm;
            for (std::size_t i = 0; i < D; ++i) s.flip[i] = (mask >> (D - 1 - i)) & 1u;
            out.push_back(s);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Vertices u, v of a candidate polytope with u + v = (k, ..., k).
struct AntipodalPair {
    Point3 u{};
    Point3 v{};

    static AntipodalPair from_u(const Point3& u, int k) { return {u, {k - u[0], k - u[1], k - u[2]}}; }

    friend auto operator<=>(const AntipodalPair&, const AntipodalPair&) = default;
};

enum class SymmetryMode { Paper, Full };

inline std::string to_string(SymmetryMode m) { return m == SymmetryMode::Paper ? "paper" : "full"; }

inline SymmetryMode parse_symmetry_mode(const std::string& s) {
    if (s == "paper") return SymmetryMode::Paper;
    if (s == "full") return SymmetryMode::Full;
    throw std::invalid_argument("unknown symmetry mode: " + s);
}

/// Orbit representative of u: each coordinate folded to min(x, k - x), then
/// sorted ascending.
template <std::size_t D>
LatticePoint<D> canonical_representative(LatticePoint<D> u, int k) {
    for (auto& x : u) x = std::min(x, k - x);
    std::sort(u.begin(), u.end());
    return u;
}

/// One antipodal pair per orbit under the cube group, ordered by u. Paper
/// mode keeps only representatives whose u has a zero coordinate.
inline std::vector<AntipodalPair> canonical_pairs(int k, SymmetryMode mode) {
    if (k < 1) throw std::invalid_argument("canonical_pairs: k must be >= 1");
    std::vector<AntipodalPair> out;
    const int half = k / 2;
    for (int a = 0; a <= half; ++a)
        for (int b = a; b <= half; ++b)
            for (int c = b; c <= half; ++c) {
                if (mode == SymmetryMode::Paper && a != 0) continue;
                out.push_back(AntipodalPair::from_u({a, b, c}, k));
            }
    return out;
}

}  // namespace latdiam

#endif  // LATDIAM_SYMMETRY_HPP
