#ifndef LATDIAM_DRIVER_HPP
#define LATDIAM_DRIVER_HPP

// End-to-end decision "delta(3,k) == delta(2,k) + k or strictly less",
// combined with a Minkowski-sum lower bound into a certificate.

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latdiam/geometry.hpp"
#include "latdiam/innerpoints.hpp"
#include "latdiam/minkowski.hpp"
#include "latdiam/polygons.hpp"
#include "latdiam/shelling.hpp"
#include "latdiam/symmetry.hpp"

namespace latdiam {

inline constexpr const char* kToolVersion = "1.0.0";

/// Published values of delta(d,k). Used only to cross-check computed results.
class KnownValuesTable {
public:
    KnownValuesTable() {
        for (int k = 1; k <= 10; ++k) values_[{1, k}] = 1;
        const int row2[] = {2, 3, 4, 4, 5, 6, 6, 7, 8, 8};
        for (int k = 1; k <= 10; ++k) values_[{2, k}] = row2[k - 1];
        const int row3[] = {3, 4, 6, 7, 9};
        for (int k = 1; k <= 5; ++k) values_[{3, k}] = row3[k - 1];
        const int row4[] = {4, 6, 8};
        for (int k = 1; k <= 3; ++k) values_[{4, k}] = row4[k - 1];
    }

    std::optional<int> lookup(int d, int k) const {
        auto it = values_.find({d, k});
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    const std::map<std::pair<int, int>, int>& entries() const { return values_; }

private:
    std::map<std::pair<int, int>, int> values_;
};

struct Config {
    SymmetryMode symmetry = SymmetryMode::Full;
    PruningMode pruning = PruningMode::Exhaustive;
    unsigned jobs = 1;
    std::string cache_path;   // polygon cache file; empty disables caching
    bool allow_any_k = false; // lift the k in {3,4,5} restriction (self-tests)
};

enum class DecisionKind { EqualsUpper, StrictlyLess };

inline std::string to_string(DecisionKind k) { return k == DecisionKind::EqualsUpper ? "EqualsUpper" : "StrictlyLess"; }

struct Decision {
    DecisionKind kind = DecisionKind::StrictlyLess;
    int upper = 0;
    std::optional<AntipodalPair> witness_pair;
    std::optional<std::vector<Point3>> witness;  // hull vertices, when EqualsUpper
};

struct UpperReport {
    Decision decision;
    PolygonFamily family;
    std::vector<AntipodalPair> pairs;
    ShellingStats step3;
    std::uint64_t step4_nodes = 0;
    std::uint64_t step4_hulls = 0;
    std::vector<std::string> trace;  // one line per surviving shelling
    std::optional<AntipodalPair> best_pair;
    SearchOutcome best;  // largest d(u,v) reached in step 4
};

namespace detail {

struct BranchResult {
    ShellingStats step3;
    SearchOutcome outcome;
    std::vector<std::string> trace;
};

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < std::min<std::size_t>(jobs, n); ++w)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    for (auto& t : workers) t.join();
}

}  // namespace detail

/// Runs the shelling search and the interior-point search over every
/// canonical pair and decides whether some node reaches delta(2,k) + k.
inline UpperReport decide_upper(int k, const Config& config, std::optional<PolygonFamily> family = std::nullopt) {
    if (!config.allow_any_k && (k < 3 || k > 5)) throw std::invalid_argument("decide_upper: k must be 3, 4 or 5");
    UpperReport r;
    r.family = family ? std::move(*family) : load_or_enumerate_family(k, config.cache_path);
    if (r.family.k != k) throw std::invalid_argument("decide_upper: family was built for another k");
    r.pairs = canonical_pairs(k, config.symmetry);
    const int limit = r.family.target_diameter + k - 1;
    r.decision.upper = limit + 1;

    // independent branches: (pair, polygon on the first slot)
    std::vector<ShellingSearch> searches;
    searches.reserve(r.pairs.size());
    std::vector<std::pair<std::size_t, int>> tasks;
    for (std::size_t i = 0; i < r.pairs.size(); ++i) {
        searches.emplace_back(r.family, r.pairs[i]);
        for (int first : searches.back().first_choices()) tasks.push_back({i, first});
    }

    std::vector<detail::BranchResult> results(tasks.size());
    detail::parallel_for(tasks.size(), config.jobs, [&](std::size_t t) {
        const auto [pi, first] = tasks[t];
        auto& res = results[t];
        const AntipodalPair& pair = r.pairs[pi];
        res.step3 = searches[pi].run_branch(first, [&](const ShellingAssignment& a) {
            res.trace.push_back(trace_line(pair, a));
            res.outcome.merge(explore(a, pair, k, limit, config.pruning));
        });
    });

    for (std::size_t t = 0; t < tasks.size(); ++t) {
        auto& res = results[t];
        r.step3 += res.step3;
        r.trace.insert(r.trace.end(), res.trace.begin(), res.trace.end());
        const bool better = res.outcome.max_uv_distance &&
                            (!r.best.max_uv_distance || *res.outcome.max_uv_distance > *r.best.max_uv_distance);
        if (better) r.best_pair = r.pairs[tasks[t].first];
        r.best.merge(res.outcome);
    }
    r.step4_nodes = r.best.nodes_visited;
    r.step4_hulls = r.best.hulls_computed;

    if (r.best.witness) {
        r.decision.kind = DecisionKind::EqualsUpper;
        r.decision.witness = r.best.witness;
        r.decision.witness_pair = r.best_pair;
    }
    return r;
}

struct LowerWitness {
    std::string preset;
    GeneratorSet generators;
    int diameter = 0;
};

inline std::optional<LowerWitness> lower_witness_for(int k) {
    const std::string name = preset_for(k);
    if (name.empty()) return std::nullopt;
    LowerWitness w{name, preset_generators(name), 0};
    w.diameter = graph_diameter(edge_graph(minkowski_polytope(w.generators, k)));
    return w;
}

namespace detail {

inline nlohmann::ordered_json point_json(const Point3& p) { return nlohmann::ordered_json::array({p[0], p[1], p[2]}); }

inline nlohmann::ordered_json points_json(const std::vector<Point3>& pts) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& p : pts) a.push_back(point_json(p));
    return a;
}

inline Point3 point_from(const nlohmann::ordered_json& j) { return {j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()}; }

inline std::vector<Point3> points_from(const nlohmann::ordered_json& j) {
    std::vector<Point3> out;
    for (const auto& p : j) out.push_back(point_from(p));
    return out;
}

}  // namespace detail

/// Mismatch between a computed value and the known-values table.
class CrossCheckError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decides the upper bound, verifies the lower witness and pins delta(3,k)
/// when both meet. Returns the certificate as ordered JSON.
inline nlohmann::ordered_json compute_delta(int k, const Config& config,
                                            std::optional<PolygonFamily> family = std::nullopt) {
    const UpperReport up = decide_upper(k, config, std::move(family));
    const auto lower = lower_witness_for(k);
    const int d = 3;

    std::optional<int> delta;
    std::optional<std::pair<int, int>> interval;
    if (up.decision.kind == DecisionKind::EqualsUpper) {
        delta = up.decision.upper;
    } else if (lower && lower->diameter == up.decision.upper - 1) {
        delta = lower->diameter;
    } else {
        interval = {lower ? lower->diameter : 0, up.decision.upper - 1};
    }

    const KnownValuesTable table;
    const auto known = table.lookup(d, k);
    if (delta && known && *delta != *known)
        throw CrossCheckError("computed delta(3," + std::to_string(k) + ")=" + std::to_string(*delta) +
                              " disagrees with the known value " + std::to_string(*known));

    using nlohmann::ordered_json;
    ordered_json c;
    c["d"] = d;
    c["k"] = k;
    c["delta"] = delta ? ordered_json(*delta) : ordered_json(nullptr);
    c["decision"] = to_string(up.decision.kind);
    c["upper"] = up.decision.upper;
    if (lower) {
        ordered_json vecs = ordered_json::array();
        for (const auto& v : lower->generators.vectors) vecs.push_back({v[0], v[1], v[2]});
        c["lower_witness"] = {{"vectors", vecs}, {"diameter", lower->diameter}, {"preset", lower->preset}};
    } else {
        c["lower_witness"] = nullptr;
    }
    c["family_size"] = up.family.size();
    ordered_json pairs = ordered_json::array();
    for (const auto& p : up.pairs) pairs.push_back(detail::point_json(p.u));
    c["pairs"] = pairs;
    c["counters"] = {{"shellings_surviving", up.step3.surviving},
                     {"step4_nodes", up.step4_nodes},
                     {"hulls", up.step4_hulls}};
    c["modes"] = {{"symmetry", to_string(config.symmetry)}, {"pruning", to_string(config.pruning)}};
    c["tool_version"] = kToolVersion;

    c["family_diameter"] = up.family.target_diameter;
    c["family_orbits"] = count_orbits(up.family);
    c["undetermined_interval"] =
        interval ? ordered_json::array({interval->first, interval->second}) : ordered_json(nullptr);
    c["known_value"] = known ? ordered_json(*known) : ordered_json(nullptr);
    c["conjecture_bound"] = conjecture_bound(d, k);
    if (up.decision.witness) {
        c["decision_witness"] = {{"u", detail::point_json(up.decision.witness_pair->u)},
                                 {"v", detail::point_json(up.decision.witness_pair->v)},
                                 {"distance", up.decision.upper},
                                 {"vertices", detail::points_json(*up.decision.witness)}};
    } else {
        c["decision_witness"] = nullptr;
    }
    if (up.best.max_uv_distance) {
        const Polytope3 h = hull3d(up.best.best_vertices);
        c["step4_best"] = {{"u", detail::point_json(up.best_pair->u)},
                           {"v", detail::point_json(up.best_pair->v)},
                           {"distance", *up.best.max_uv_distance},
                           {"graph_diameter", graph_diameter(edge_graph(h))},
                           {"vertices", detail::points_json(up.best.best_vertices)}};
    } else {
        c["step4_best"] = nullptr;
    }
    c["step3"] = {{"placements", up.step3.placements},
                  {"ridge_rejections", up.step3.ridge_rejections},
                  {"shortcut_prunes", up.step3.shortcut_prunes},
                  {"interior_prunes", up.step3.interior_prunes}};
    c["surviving_shellings"] = up.trace;
    return c;
}

struct VerifyReport {
    std::vector<std::string> passed;
    std::vector<std::string> failed;

    bool ok() const { return failed.empty(); }
};

/// Replays every number a certificate claims from its own data, without
/// rerunning the search.
inline VerifyReport verify_certificate(const nlohmann::ordered_json& c) {
    VerifyReport rep;
    auto check = [&](bool cond, const std::string& what) { (cond ? rep.passed : rep.failed).push_back(what); };

    try {
        const int d = c.at("d").get<int>();
        const int k = c.at("k").get<int>();
        check(d == 3, "d is 3");
        const int upper = c.at("upper").get<int>();
        const PolygonFamily fam = enumerate_family(k);
        check(upper == fam.target_diameter + k, "upper equals delta(2,k)+k");
        check(c.at("family_size").get<std::size_t>() == fam.size(), "family size matches enumeration");

        const auto mode = parse_symmetry_mode(c.at("modes").at("symmetry").get<std::string>());
        parse_pruning_mode(c.at("modes").at("pruning").get<std::string>());
        std::vector<Point3> expect_pairs;
        for (const auto& p : canonical_pairs(k, mode)) expect_pairs.push_back(p.u);
        check(detail::points_from(c.at("pairs")) == expect_pairs, "pairs match canonical representatives");

        std::optional<int> lower;
        if (!c.at("lower_witness").is_null()) {
            std::vector<std::array<int, 3>> vecs;
            for (const auto& v : c["lower_witness"].at("vectors")) vecs.push_back(detail::point_from(v));
            try {
                const Polytope3 z = minkowski_polytope(GeneratorSet(vecs), k);
                lower = graph_diameter(edge_graph(z));
                check(*lower == c["lower_witness"].at("diameter").get<int>(), "lower witness diameter replays");
            } catch (const FitError&) {
                check(false, "lower witness fits in [0,k]^3");
            }
        }

        const std::string kind = c.at("decision").get<std::string>();
        check(kind == "EqualsUpper" || kind == "StrictlyLess", "decision kind is valid");
        if (kind == "EqualsUpper") {
            const auto& w = c.at("decision_witness");
            const AntipodalPair pair{detail::point_from(w.at("u")), detail::point_from(w.at("v"))};
            const auto verts = detail::points_from(w.at("vertices"));
            const bool in_grid = std::all_of(verts.begin(), verts.end(), [&](const Point3& p) {
                return std::all_of(p.begin(), p.end(), [&](int x) { return x >= 0 && x <= k; });
            });
            check(in_grid, "decision witness lies in [0,k]^3");
            check(AntipodalPair::from_u(pair.u, k) == pair, "decision witness pair is antipodal");
            check(uv_distance(hull3d(verts), pair) == upper, "decision witness reaches the upper bound");
        } else {
            check(c.at("decision_witness").is_null(), "no decision witness for StrictlyLess");
        }

        if (!c.at("step4_best").is_null()) {
            const auto& b = c["step4_best"];
            const AntipodalPair pair{detail::point_from(b.at("u")), detail::point_from(b.at("v"))};
            const Polytope3 h = hull3d(detail::points_from(b.at("vertices")));
            check(uv_distance(h, pair) == b.at("distance").get<int>(), "step 4 best distance replays");
            check(graph_diameter(edge_graph(h)) == b.at("graph_diameter").get<int>(), "step 4 best diameter replays");
            check(b.at("distance").get<int>() < upper || kind == "EqualsUpper", "step 4 best is consistent with decision");
        }

        const auto& delta = c.at("delta");
        if (kind == "EqualsUpper") {
            check(!delta.is_null() && delta.get<int>() == upper, "delta equals upper");
        } else if (lower && *lower == upper - 1) {
            check(!delta.is_null() && delta.get<int>() == upper - 1, "delta pinned by lower witness");
        } else {
            check(delta.is_null(), "delta absent while the gap is open");
        }
        if (!delta.is_null()) {
            check(delta.get<int>() <= conjecture_bound(d, k), "delta within the conjectured bound");
            const auto known = KnownValuesTable().lookup(d, k);
            if (known) check(delta.get<int>() == *known, "delta agrees with the known-values table");
        }
    } catch (const std::exception& e) {
        rep.failed.push_back(std::string("malformed certificate: ") + e.what());
    }
    return rep;
}

}  // namespace latdiam

#endif  // LATDIAM_DRIVER_HPP
