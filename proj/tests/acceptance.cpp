// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
//   acceptance <path-to-latdiam-cli> [scratch-dir]

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "latdiam/driver.hpp"
#include "oracles.hpp"

using namespace latdiam;
using nlohmann::ordered_json;

namespace {

struct Run {
    int status = -1;
    std::string out;
    double seconds = 0;
};

std::string cli;
std::filesystem::path scratch;

Run run(const std::string& args) {
    Run r;
    const std::string cmd = "\"" + cli + "\" " + args + " 2>/dev/null";
    const auto t0 = std::chrono::steady_clock::now();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::optional<ordered_json> compute(int k, const std::string& extra, double* seconds) {
    const auto path = scratch / ("cert_k" + std::to_string(k) + ".json");
    const Run r = run("compute --d 3 --k " + std::to_string(k) + " " + extra + " --out \"" + path.string() + "\"");
    if (seconds) *seconds = r.seconds;
    if (r.status != 0) return std::nullopt;
    std::ifstream in(path);
    try {
        return ordered_json::parse(in);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::string field(const std::string& text, const std::string& key) {
    const auto at = text.find(key + "=");
    if (at == std::string::npos) return {};
    const auto start = at + key.size() + 1;
    return text.substr(start, text.find_first_of(" \n", start) - start);
}

int failures = 0;

void report(int id, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << detail << std::endl;
    if (!ok) ++failures;
}

std::string fmt(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << "s";
    return os.str();
}

// ---- property suites (criterion 8) ----------------------------------------

bool hull_oracle_suite(std::string& note) {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coord(0, 3), count(4, 11);
    int tested = 0, euler = 0;
    while (tested < 1000) {
        std::vector<Point3> pts;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng), coord(rng)});
        const auto verts = oracle::vertices3(pts);
        Polytope3 h;
        try {
            h = hull3d(pts);
        } catch (const DimensionError&) {
            // the oracle must agree that the set is flat: no 4 affinely independent points
            std::vector<Point3> v(verts.begin(), verts.end());
            for (std::size_t a = 0; a < v.size(); ++a)
                for (std::size_t b = a + 1; b < v.size(); ++b)
                    for (std::size_t c = b + 1; c < v.size(); ++c)
                        for (std::size_t d = c + 1; d < v.size(); ++d)
                            if (oracle::orient3(v[a], v[b], v[c], v[d]) != 0) {
                                note = "hull3d rejected a full-dimensional set";
                                return false;
                            }
            continue;
        }
        ++tested;
        if (std::set<Point3>(h.vertices.begin(), h.vertices.end()) != verts) {
            note = "vertex mismatch on random set " + std::to_string(tested);
            return false;
        }
        std::set<std::pair<Point3, Point3>> edges;
        for (auto [a, b] : h.edges) edges.insert({h.vertices[a], h.vertices[b]});
        if (edges != oracle::edges3(pts)) {
            note = "edge mismatch on random set " + std::to_string(tested);
            return false;
        }
        std::set<std::pair<oracle::V3, std::int64_t>> planes;
        for (const auto& f : h.facets) planes.insert({{f.normal[0], f.normal[1], f.normal[2]}, f.offset});
        if (planes != oracle::facet_planes(pts)) {
            note = "facet mismatch on random set " + std::to_string(tested);
            return false;
        }
        if (int(h.vertices.size()) - int(h.edges.size()) + int(h.facets.size()) != 2) {
            note = "Euler relation fails on random set " + std::to_string(tested);
            return false;
        }
        ++euler;
    }
    note = "hull oracle equivalence and Euler relation on " + std::to_string(euler) + " random sets";
    return true;
}

bool euler_on_search_hulls(std::string& note) {
    // every hull met while replaying the (3,4) survivors and the witnesses
    std::size_t checked = 0;
    auto ok = [&](const Polytope3& h) {
        ++checked;
        return int(h.vertices.size()) - int(h.edges.size()) + int(h.facets.size()) == 2;
    };
    const auto fam = enumerate_family(4);
    for (const auto& pair : canonical_pairs(4, SymmetryMode::Full))
        for (const auto& a : enumerate_shellings(fam, pair)) {
            if (!ok(hull3d(a.boundary_vertices))) return note = "Euler fails on a shelling hull", false;
            for (const auto& p : candidate_points(a, 4)) {
                auto pts = a.boundary_vertices;
                pts.push_back(p);
                if (!ok(hull3d(pts))) return note = "Euler fails on a shelling hull plus one point", false;
            }
        }
    for (const char* name : {"cube", "d3k3", "d3k4", "d3k5"}) {
        const int k = std::string(name) == "cube" ? 1 : name[3] - '0';
        if (!ok(minkowski_polytope(preset_generators(name), k))) return note = "Euler fails on a witness", false;
    }
    note = "Euler relation on " + std::to_string(checked) + " search and witness hulls";
    return true;
}

bool polygon_oracle_suite(std::string& note) {
    for (int k = 1; k <= 3; ++k) {
        const auto f = enumerate_family(k);
        std::set<std::set<Point2>> got;
        for (const auto& p : f.members) got.insert(std::set<Point2>(p.vertices.begin(), p.vertices.end()));
        const int dd = f.target_diameter;
        if (got != oracle::convex_subsets(k, 2 * dd, 2 * dd + 1)) {
            note = "family mismatch for k=" + std::to_string(k);
            return false;
        }
    }
    note = "polygon families equal brute-force subsets for k=1,2,3";
    return true;
}

template <std::size_t D>
bool group_axioms(int k) {
    const auto g = enumerate_group<D>();
    const std::set<CubeSymmetry<D>> set(g.begin(), g.end());
    std::size_t expect = 1u << D;
    for (std::size_t i = 2; i <= D; ++i) expect *= i;
    if (set.size() != expect || g.size() != expect) return false;
    const auto e = CubeSymmetry<D>::identity();
    std::vector<LatticePoint<D>> pts;
    LatticePoint<D> p{};
    while (true) {
        pts.push_back(p);
        std::size_t i = 0;
        while (i < D && ++p[i] > k) p[i++] = 0;
        if (i == D) break;
    }
    for (const auto& a : g) {
        if (a.compose(e) != a || e.compose(a) != a || a.compose(a.inverse()) != e) return false;
        for (const auto& b : g) {
            const auto ab = a.compose(b);
            if (!set.count(ab)) return false;
            for (const auto& c : g)
                if (ab.compose(c) != a.compose(b.compose(c))) return false;
            for (const auto& q : pts)
                if (ab.apply(q, k) != a.apply(b.apply(q, k), k)) return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <latdiam-cli> [scratch-dir]\n";
        return 2;
    }
    cli = argv[1];
    scratch = argc > 2 ? std::filesystem::path(argv[2]) : std::filesystem::temp_directory_path() / "latdiam_acceptance";
    std::filesystem::create_directories(scratch);

    // 1
    {
        const Run r = run("polygons --k 4 --out \"" + (scratch / "family_k4.txt").string() + "\"");
        const bool ok = r.status == 0 && field(r.out, "count") == "335" && r.seconds < 60;
        report(1, ok, "polygons --k 4 count=" + field(r.out, "count") + " (expected 335) in " + fmt(r.seconds));
    }

    // 2
    std::optional<ordered_json> cert4;
    {
        double secs = 0;
        cert4 = compute(4, "--jobs 4", &secs);
        const bool ok = cert4 && (*cert4)["decision"] == "StrictlyLess" && (*cert4)["upper"] == 8 &&
                        (*cert4)["lower_witness"]["diameter"] == 7 && (*cert4)["delta"] == 7 && secs < 180;
        std::string detail = "compute --k 4: ";
        if (cert4)
            detail += "decision=" + (*cert4)["decision"].get<std::string>() + "(" + (*cert4)["upper"].dump() +
                      ") lower=" + (*cert4)["lower_witness"]["diameter"].dump() + " delta=" + (*cert4)["delta"].dump();
        else
            detail += "no certificate";
        report(2, ok, detail + " in " + fmt(secs) + " (limit 180s)");
    }

    // 3
    {
        double secs = 0;
        const auto c = compute(5, "--jobs 4", &secs);
        const bool ok = c && (*c)["decision"] == "StrictlyLess" && (*c)["upper"] == 10 &&
                        (*c)["counters"]["step4_nodes"] == 0 && (*c)["counters"]["hulls"] == 0 && (*c)["delta"] == 9;
        std::string detail = "compute --k 5: ";
        if (c)
            detail += "decision=" + (*c)["decision"].get<std::string>() + "(" + (*c)["upper"].dump() +
                      ") step4_nodes=" + (*c)["counters"]["step4_nodes"].dump() +
                      " hulls=" + (*c)["counters"]["hulls"].dump() + " delta=" + (*c)["delta"].dump();
        else
            detail += "no certificate";
        report(3, ok, detail + " in " + fmt(secs));
    }

    // 4
    {
        double secs = 0;
        const auto c = compute(3, "", &secs);
        const bool ok = c && (*c)["decision"] == "StrictlyLess" && (*c)["upper"] == 7 &&
                        (*c)["lower_witness"]["diameter"] == 6 && (*c)["delta"] == 6;
        std::string detail = "compute --k 3: ";
        if (c)
            detail += "decision=" + (*c)["decision"].get<std::string>() + "(" + (*c)["upper"].dump() +
                      ") lower=" + (*c)["lower_witness"]["diameter"].dump() + " delta=" + (*c)["delta"].dump();
        else
            detail += "no certificate";
        report(4, ok, detail);
    }

    // 5
    {
        const Run a = run("minkowski --preset d3k4");
        const Run b = run("minkowski --preset d3k5");
        const bool ok = a.status == 0 && field(a.out, "fits") == "yes" && field(a.out, "box") == "[0,4]^3" &&
                        field(a.out, "diameter") == "7" && b.status == 0 && field(b.out, "fits") == "yes" &&
                        field(b.out, "box") == "[0,5]^3" && field(b.out, "diameter") == "9";
        report(5, ok,
               "d3k4 box=" + field(a.out, "box") + " diameter=" + field(a.out, "diameter") +
                   "; d3k5 box=" + field(b.out, "box") + " diameter=" + field(b.out, "diameter"));
    }

    // 6
    {
        const int expect[] = {2, 3, 4, 4, 5, 6};
        bool ok = true;
        std::string got;
        for (int k = 1; k <= 6; ++k) {
            const int n = max_vertex_count(k);
            const int dd = delta2(k);
            // the chain enumeration must find an n-gon and nothing larger
            const bool exhaustive = !enumerate_polygons(k, n, n).empty() && enumerate_polygons(k, n + 1, n + 3).empty();
            ok = ok && exhaustive && dd == expect[k - 1];
            got += (k > 1 ? "," : "") + std::to_string(dd);
        }
        report(6, ok, "delta2(1..6) = " + got + " (expected 2,3,4,4,5,6)");
    }

    // 7
    {
        std::vector<Point3> us;
        for (const auto& p : canonical_pairs(4, SymmetryMode::Paper)) us.push_back(p.u);
        const std::vector<Point3> expect{{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 1}, {0, 1, 2}, {0, 2, 2}};
        std::string got;
        for (const auto& u : us) got += to_string(u);
        report(7, us == expect, "paper-mode pairs for k=4: " + got);
    }

    // 8
    {
        std::vector<std::string> notes, bad;
        auto sub = [&](bool ok, const std::string& what) { (ok ? notes : bad).push_back(what); };

        std::string note;
        sub(hull_oracle_suite(note), note);
        sub(euler_on_search_hulls(note), note);
        sub(polygon_oracle_suite(note), note);
        sub(group_axioms<1>(3) && group_axioms<2>(3) && group_axioms<3>(2), "group axioms for d=1,2,3");

        bool replay = false;
        if (cert4) {
            const auto path = scratch / "cert_k4.json";
            const Run v = run("verify --certificate \"" + path.string() + "\"");
            auto tampered = *cert4;
            tampered["step4_best"]["distance"] = 8;
            const auto tpath = scratch / "cert_k4_tampered.json";
            std::ofstream(tpath) << tampered.dump(2);
            const Run t = run("verify --certificate \"" + tpath.string() + "\"");
            replay = v.status == 0 && t.status != 0 && verify_certificate(*cert4).ok();
        }
        sub(replay, "certificate replay round-trip (and tamper rejection)");

        bool invariant = true;
        std::string kinds;
        for (const char* s : {"full", "paper"})
            for (const char* p : {"exhaustive", "paper"}) {
                const auto c = compute(4, std::string("--jobs 4 --symmetry ") + s + " --pruning " + p, nullptr);
                const bool same = c && (*c)["decision"] == "StrictlyLess" && (*c)["delta"] == 7;
                invariant = invariant && same;
                kinds += std::string(" ") + s + "/" + p + "=" + (c ? (*c)["decision"].get<std::string>() : "none");
            }
        sub(invariant, "decision invariance for (3,4):" + kinds);

        std::string detail;
        for (const auto& n : bad) detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + n;
        for (const auto& n : notes) detail += (detail.empty() ? "" : "; ") + n;
        report(8, bad.empty(), detail);
    }

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
