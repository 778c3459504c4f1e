// latdiam: command-line front end.
//
//   latdiam compute   --d 3 --k <k> [--symmetry full|paper] [--pruning exhaustive|paper]
//                     [--jobs N] [--out path] [--cache path] [--trace path]
//   latdiam polygons  --k <k> [--out path]
//   latdiam minkowski --preset d3k4|d3k5|d3k3|cube | --vectors <path> --k <k>
//   latdiam verify    --certificate <path> [--rerun]

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "latdiam/driver.hpp"

namespace {

using namespace latdiam;

int run_compute(int d, int k, const std::string& symmetry, const std::string& pruning, unsigned jobs,
                const std::string& out, const std::string& cache, const std::string& trace) {
    if (d != 3) {
        std::cerr << "compute: only d=3 is supported\n";
        return 2;
    }
    Config cfg;
    cfg.symmetry = parse_symmetry_mode(symmetry);
    cfg.pruning = parse_pruning_mode(pruning);
    cfg.jobs = jobs;
    cfg.cache_path = cache;

    const auto t0 = std::chrono::steady_clock::now();
    const auto cert = compute_delta(k, cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string text = cert.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "compute: cannot write " << out << "\n";
            return 1;
        }
        f << text;
    }
    if (!trace.empty()) {
        std::ofstream f(trace);
        for (const auto& line : cert["surviving_shellings"]) f << line.get<std::string>() << '\n';
    }
    std::cerr << "delta(3," << k << ") = " << (cert["delta"].is_null() ? "undetermined" : cert["delta"].dump())
              << "  decision=" << cert["decision"].get<std::string>() << "(" << cert["upper"] << ")"
              << "  shellings=" << cert["counters"]["shellings_surviving"]
              << "  step4_nodes=" << cert["counters"]["step4_nodes"] << "  time=" << secs << "s\n";
    return 0;
}

int run_polygons(int k, const std::string& out) {
    const auto fam = enumerate_family(k);
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "polygons: cannot write " << out << "\n";
            return 1;
        }
        write_family(f, fam);
    }
    std::cout << "k=" << fam.k << " diameter=" << fam.target_diameter << " count=" << fam.size()
              << " orbits=" << count_orbits(fam) << '\n';
    return 0;
}

int run_minkowski(const std::string& preset, const std::string& vectors, int k) {
    GeneratorSet g;
    std::string name;
    if (!preset.empty()) {
        g = preset_generators(preset);
        name = preset;
        if (k <= 0) k = preset == "cube" ? 1 : preset.back() - '0';
    } else {
        std::ifstream in(vectors);
        if (!in) {
            std::cerr << "minkowski: cannot read " << vectors << "\n";
            return 1;
        }
        g = read_generators(in);
        name = vectors;
        if (k <= 0) {
            std::cerr << "minkowski: --k is required with --vectors\n";
            return 2;
        }
    }
    const auto range = coordinate_range(g);
    std::cout << "generators=" << g.vectors.size() << " source=" << name << " k=" << k << " range=(" << range[0]
              << ',' << range[1] << ',' << range[2] << ")\n";
    try {
        const auto p = minkowski_polytope(g, k);
        std::cout << "fits=yes box=[0," << k << "]^3 vertices=" << p.vertices.size() << " edges=" << p.edges.size()
                  << " facets=" << p.facets.size() << " diameter=" << graph_diameter(edge_graph(p)) << '\n';
        return 0;
    } catch (const FitError& e) {
        std::cout << "fits=no " << e.what() << '\n';
        return 1;
    }
}

int run_verify(const std::string& path, bool rerun) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "verify: cannot read " << path << "\n";
        return 1;
    }
    nlohmann::ordered_json cert;
    try {
        cert = nlohmann::ordered_json::parse(in);
    } catch (const std::exception& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 1;
    }
    auto rep = verify_certificate(cert);
    if (rerun && rep.ok()) {
        Config cfg;
        cfg.symmetry = parse_symmetry_mode(cert["modes"]["symmetry"].get<std::string>());
        cfg.pruning = parse_pruning_mode(cert["modes"]["pruning"].get<std::string>());
        const auto again = compute_delta(cert["k"].get<int>(), cfg);
        (again.dump() == cert.dump() ? rep.passed : rep.failed).push_back("rerun reproduces the certificate");
    }
    for (const auto& s : rep.passed) std::cout << "ok   " << s << '\n';
    for (const auto& s : rep.failed) std::cout << "FAIL " << s << '\n';
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Largest edge diameter of lattice polytopes in small dimension"};
    app.require_subcommand(1);

    int d = 3, k = 0;
    std::string symmetry = "full", pruning = "exhaustive", out, cache, trace;
    unsigned jobs = 1;
    auto* compute = app.add_subcommand("compute", "decide delta(3,k) and emit a certificate (JSON)");
    compute->add_option("--d", d, "dimension (3)")->default_val(3);
    compute->add_option("--k", k, "grid size")->required()->check(CLI::Range(3, 5));
    compute->add_option("--symmetry", symmetry, "pair representatives")->check(CLI::IsMember({"full", "paper"}));
    compute->add_option("--pruning", pruning, "interior-point pruning")
        ->check(CLI::IsMember({"exhaustive", "paper"}));
    compute->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    compute->add_option("--out", out, "certificate path (default stdout)");
    compute->add_option("--cache", cache, "polygon cache file");
    compute->add_option("--trace", trace, "write surviving shelling lines here");

    int pk = 0;
    std::string pout;
    auto* polygons = app.add_subcommand("polygons", "enumerate the maximal-diameter polygons of [0,k]^2");
    polygons->add_option("--k", pk, "grid size")->required()->check(CLI::Range(1, 7));
    polygons->add_option("--out", pout, "cache file to write");

    std::string preset, vectors;
    int mk = 0;
    auto* mink = app.add_subcommand("minkowski", "build and check a Minkowski-sum witness");
    auto* preset_opt = mink->add_option("--preset", preset, "built-in generator set")
                           ->check(CLI::IsMember({"cube", "d3k3", "d3k4", "d3k5"}));
    auto* vec_opt = mink->add_option("--vectors", vectors, "generator file, one 'a,b,c' per line");
    preset_opt->excludes(vec_opt);
    mink->add_option("--k", mk, "grid size");

    std::string cert_path;
    bool rerun = false;
    auto* verify = app.add_subcommand("verify", "replay a certificate");
    verify->add_option("--certificate", cert_path, "certificate JSON")->required();
    verify->add_flag("--rerun", rerun, "also recompute and compare byte for byte");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(d, k, symmetry, pruning, jobs, out, cache, trace);
        if (polygons->parsed()) return run_polygons(pk, pout);
        if (mink->parsed()) {
            if (preset.empty() && vectors.empty()) {
                std::cerr << "minkowski: give --preset or --vectors\n";
                return 2;
            }
            return run_minkowski(preset, vectors, mk);
        }
        if (verify->parsed()) return run_verify(cert_path, rerun);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
