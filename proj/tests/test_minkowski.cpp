#include <gtest/gtest.h>

#include <functional>
#include <set>
#include <sstream>

#include "latdiam/minkowski.hpp"

using namespace latdiam;

namespace {

int diameter(const Polytope3& p) { return graph_diameter(edge_graph(p)); }

// The 13 primitive {-1,0,1} directions up to sign.
std::vector<std::array<int, 3>> unit_directions() {
    std::vector<std::array<int, 3>> out;
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            for (int c = -1; c <= 1; ++c) {
                const std::array<int, 3> v{a, b, c};
                const std::array<int, 3> neg{-a, -b, -c};
                if (v > neg) out.push_back(v);
            }
    return out;
}

}  // namespace

TEST(Presets, Diameters) {
    EXPECT_EQ(diameter(minkowski_polytope(preset_generators("cube"), 1)), 3);
    EXPECT_EQ(diameter(minkowski_polytope(preset_generators("d3k3"), 3)), 6);
    EXPECT_EQ(diameter(minkowski_polytope(preset_generators("d3k4"), 4)), 7);
    EXPECT_EQ(diameter(minkowski_polytope(preset_generators("d3k5"), 5)), 9);
    EXPECT_EQ(preset_generators("d3k4").vectors.size(), 7u);
    EXPECT_EQ(preset_generators("d3k5").vectors.size(), 9u);
    EXPECT_THROW(preset_generators("d9k9"), std::invalid_argument);
}

TEST(Presets, UnitCubeShape) {
    const auto p = minkowski_polytope(preset_generators("cube"), 1);
    EXPECT_EQ(p.vertices.size(), 8u);
    EXPECT_EQ(p.facets.size(), 6u);
}

TEST(Presets, KFiveNeedsTranslation) {
    const auto sums = subset_sums(preset_generators("d3k5"));
    for (const auto& p : sums)
        for (int x : p) {
            EXPECT_GE(x, 0);
            EXPECT_LE(x, 5);
        }
    EXPECT_EQ(coordinate_range(preset_generators("d3k5")), (std::array<int, 3>{5, 5, 5}));
}

TEST(Fit, ErrorNamesTheCoordinate) {
    try {
        minkowski_polytope(preset_generators("d3k4"), 3);
        FAIL() << "expected FitError";
    } catch (const FitError& e) {
        EXPECT_NE(std::string(e.what()).find("[0,4]"), std::string::npos);
    }
    EXPECT_THROW(minkowski_polytope(preset_generators("d3k5"), 4), FitError);
}

TEST(Generators, RejectZeroVector) {
    EXPECT_THROW(GeneratorSet({{1, 0, 0}, {0, 0, 0}}), std::invalid_argument);
}

TEST(Generators, FileFormat) {
    std::stringstream in("# witness\n1,0,0\n\n 0, 1 ,-1\n");
    const auto g = read_generators(in);
    EXPECT_EQ(g.vectors, (std::vector<std::array<int, 3>>{{1, 0, 0}, {0, 1, -1}}));
    std::stringstream bad("1,0\n");
    EXPECT_THROW(read_generators(bad), std::invalid_argument);
    std::stringstream trailing("1,0,0,4\n");
    EXPECT_THROW(read_generators(trailing), std::invalid_argument);
}

TEST(ConjectureBound, Examples) {
    EXPECT_EQ(conjecture_bound(3, 4), 7);
    EXPECT_EQ(conjecture_bound(3, 5), 9);
    EXPECT_EQ(conjecture_bound(3, 3), 6);
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(conjecture_bound(d, 1), d);
}

TEST(MinkowskiProperty, ZonotopeVerticesAreSubsetSumsAndCentrallySymmetric) {
    for (const char* name : {"cube", "d3k3", "d3k4", "d3k5"}) {
        const auto g = preset_generators(name);
        const auto r = coordinate_range(g);
        const auto sums = subset_sums(g);
        const std::set<Point3> sum_set(sums.begin(), sums.end());
        const Polytope3 p = hull3d(sums);
        for (const auto& v : p.vertices) {
            EXPECT_TRUE(sum_set.count(v));
            const Point3 mirror{r[0] - v[0], r[1] - v[1], r[2] - v[2]};
            EXPECT_TRUE(p.index_of(mirror).has_value()) << name;
        }
        // the diameter is realized by some antipodal pair v, m - v
        const EdgeGraph graph = edge_graph(p);
        int antipodal = 0;
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            const auto& v = p.vertices[i];
            const int j = *p.index_of({r[0] - v[0], r[1] - v[1], r[2] - v[2]});
            antipodal = std::max(antipodal, *graph_distance(graph, int(i), j));
        }
        EXPECT_EQ(antipodal, graph_diameter(graph)) << name;
        // each facet of a zonotope is centrally symmetric, hence has an even number of edges
        for (const auto& f : p.facets) EXPECT_EQ(f.cycle.size() % 2, 0u) << name;
    }
}

// Derives the (3,3) witness: among 6-subsets of the primitive {-1,0,1}
// directions that fit in [0,3]^3, the best diameter is 6 and the shipped
// preset attains it.
TEST(MinkowskiProperty, SmallSearchFindsTheKThreeWitness) {
    const auto dirs = unit_directions();
    ASSERT_EQ(dirs.size(), 13u);
    int best = 0;
    std::vector<int> idx(6);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == idx.size()) {
            std::vector<std::array<int, 3>> v;
            for (int i : idx) v.push_back(dirs[i]);
            const GeneratorSet g(v);
            const auto r = coordinate_range(g);
            if (r[0] > 3 || r[1] > 3 || r[2] > 3) return;
            try {
                best = std::max(best, diameter(minkowski_polytope(g, 3)));
            } catch (const DimensionError&) {
            }
            return;
        }
        for (std::size_t i = start; i < dirs.size(); ++i) {
            idx[depth] = int(i);
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    EXPECT_EQ(best, 6);
    EXPECT_EQ(diameter(minkowski_polytope(preset_generators(preset_for(3)), 3)), best);
}

TEST(Presets, LookupByK) {
    EXPECT_EQ(preset_for(1), "cube");
    EXPECT_EQ(preset_for(4), "d3k4");
    EXPECT_EQ(preset_for(5), "d3k5");
    EXPECT_EQ(preset_for(2), "");
}
