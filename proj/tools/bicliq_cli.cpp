// Command-line front end over the C API.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "bicliq/bicliq.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

struct Failure {
    int code;
    std::string message;
};

struct GraphDeleter {
    void operator()(bq_graph* g) const { bq_graph_free(g); }
};
using Graph = std::unique_ptr<bq_graph, GraphDeleter>;

int exit_code_for(bq_status s) {
    return s == BQ_INVALID_ARGUMENT ? kUsage : kDomain;
}

void check(bq_status s) {
    if (s != BQ_OK)
        throw Failure{exit_code_for(s), std::string(bq_status_name(s)) + ": " + bq_last_error()};
}

std::string take(char* s) {
    std::string out = s ? s : "";
    bq_string_free(s);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kUsage, "cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) {
    bq_graph* g = nullptr;
    check(bq_graph_parse(read_file(path).c_str(), &g));
    return Graph(g);
}

// A file path, or family:<name> for generated patterns.
Graph load_pattern(const std::string& arg) {
    static const std::string prefix = "family:";
    if (arg.rfind(prefix, 0) == 0) {
        bq_graph* g = nullptr;
        check(bq_graph_family(arg.substr(prefix.size()).c_str(), &g));
        return Graph(g);
    }
    return load_graph(arg);
}

void print_json(const std::string& text) { std::cout << Json::parse(text).dump(2) << '\n'; }

std::string matrix_of(const bq_graph* g) {
    char* s = nullptr;
    check(bq_graph_to_matrix(g, &s));
    return take(s);
}

std::filesystem::path results_dir() {
    const char* env = std::getenv("BICLIQ_RESULTS_DIR");
    return env && *env ? std::filesystem::path(env) : std::filesystem::path("results");
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& r) {
    const auto dots = r.find("..");
    try {
        if (dots == std::string::npos) {
            const auto n = std::stoul(r);
            return {n, n};
        }
        return {std::stoul(r.substr(0, dots)), std::stoul(r.substr(dots + 2))};
    } catch (const std::exception&) {
        throw Failure{kUsage, "--n-range must look like a..b"};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bicliques and co-bicliques in bipartite graphs with a forbidden induced subgraph"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bq_version()));

    std::string pattern_arg, graph_arg, which = "h";
    bool as_json = false;

    auto* classify = app.add_subcommand("classify", "Classify a pattern");
    classify->add_option("--pattern", pattern_arg, "Pattern file or family:<name>")->required();

    auto* solve = app.add_subcommand("solve", "Exact balanced biclique / co-biclique");
    solve->add_option("--graph", graph_arg, "Graph file")->required();
    solve->add_option("--which", which, "h, omega or alpha")
        ->check(CLI::IsMember({"h", "omega", "alpha"}));

    bool use_ehp = false;
    std::string family_name;
    std::size_t s1 = 1, s2 = 1;
    auto* extract = app.add_subcommand("extract", "Certificate or induced copy");
    extract->add_option("--graph", graph_arg, "Graph file")->required();
    auto* ext_pattern = extract->add_option("--pattern", pattern_arg, "Pattern file or family:<name>");
    auto* ext_family =
        extract->add_option("--family", family_name, "Run one extractor: Hs, Ms, MsStar, P4, 2K2, H4, SingleRow");
    extract->add_option("--s1", s1, "First family parameter");
    extract->add_option("--s2", s2, "Second family parameter");
    extract->add_flag("--ehp", use_ehp, "Use the embedding dichotomy for arbitrary patterns");
    ext_pattern->excludes(ext_family);
    ext_family->excludes(ext_pattern);

    std::size_t k = 0, l = 0;
    auto* enumerate = app.add_subcommand("enumerate", "Strongly acyclic graphs with given parts");
    enumerate->add_option("--k", k, "Top part size")->required();
    enumerate->add_option("--l", l, "Bottom part size")->required();
    enumerate->add_flag("--json", as_json, "JSON output");

    std::string construction;
    std::size_t n = 0;
    auto* construct = app.add_subcommand("construct", "Tight extremal graphs");
    construct->add_option("name", construction, "tight-p4, tight-2k2 or tight-h4")
        ->required()
        ->check(CLI::IsMember({"tight-p4", "tight-2k2", "tight-h4"}));
    construct->add_option("--n", n, "Part size")->required();
    construct->add_flag("--json", as_json, "JSON output");

    std::size_t cycle = 4, t = 1, budget = 100000;
    double p = 0.0;
    std::uint64_t seed = 1;
    std::string out_path;
    auto* lll = app.add_subcommand("lll", "Randomised red/blue colorings of K_{n,n}");
    lll->add_option("--n", n, "Part size")->required();
    lll->add_option("--cycle", cycle, "Forbidden red cycle length")->check(CLI::IsMember({4, 6, 8}));
    lll->add_option("--t", t, "Forbidden blue K_{t,t}")->required();
    lll->add_option("--p", p, "Red probability")->required()->check(CLI::Range(0.0, 1.0));
    lll->add_option("--seed", seed, "Seed");
    lll->add_option("--budget", budget, "Resample budget");
    lll->add_option("--out", out_path, "Write the coloring here");

    std::string range = "4..10", bench_family;
    std::size_t trials = 10;
    auto* bench = app.add_subcommand("bench", "Empirical bound report");
    bench->add_option("--family", bench_family, "Hs, Ms, MsStar, P4, 2K2, H4 or SingleRow")->required();
    bench->add_option("--s1", s1, "First family parameter");
    bench->add_option("--s2", s2, "Second family parameter");
    bench->add_option("--n-range", range, "a..b");
    bench->add_option("--trials", trials, "Trials per n");
    bench->add_option("--seed", seed, "Seed");
    bench->add_flag("--json", as_json, "Print rows as JSON instead of a table");

    std::string cert_path, emb_path, coloring_path;
    auto* verify = app.add_subcommand("verify", "Check a certificate, embedding or coloring");
    verify->add_option("--graph", graph_arg, "Graph file");
    verify->add_option("--certificate", cert_path, "Certificate JSON (or solve/extract output)");
    verify->add_option("--pattern", pattern_arg, "Pattern for --embedding");
    verify->add_option("--embedding", emb_path, "Embedding JSON (or extract output)");
    verify->add_option("--coloring", coloring_path, "Coloring file");
    verify->add_option("--cycle", cycle, "Red cycle length for --coloring")->check(CLI::IsMember({4, 6, 8}));
    verify->add_option("--t", t, "Blue K_{t,t} bound for --coloring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        char* out = nullptr;
        if (*classify) {
            auto h = load_pattern(pattern_arg);
            check(bq_classify(h.get(), &out));
            print_json(take(out));
        } else if (*solve) {
            auto g = load_graph(graph_arg);
            check(bq_solve(g.get(), which.c_str(), &out));
            print_json(take(out));
        } else if (*extract) {
            auto g = load_graph(graph_arg);
            if (!family_name.empty()) {
                check(bq_extract_family(g.get(), family_name.c_str(), s1, s2, &out));
            } else {
                if (pattern_arg.empty()) throw Failure{kUsage, "extract needs --pattern or --family"};
                auto h = load_pattern(pattern_arg);
                check(use_ehp ? bq_ehp_embed(g.get(), h.get(), &out) : bq_extract(g.get(), h.get(), &out));
            }
            print_json(take(out));
        } else if (*enumerate) {
            check(bq_enumerate(k, l, &out));
            const auto arr = Json::parse(take(out));
            if (as_json) {
                std::cout << arr.dump(2) << '\n';
            } else {
                bool first = true;
                for (const auto& g : arr) {
                    if (!first) std::cout << '\n';
                    first = false;
                    for (const auto& row : g["rows"]) std::cout << row.get<std::string>() << '\n';
                }
            }
        } else if (*construct) {
            bq_graph* raw = nullptr;
            check(bq_construct(construction.c_str(), n, &raw));
            Graph g(raw);
            if (as_json) {
                check(bq_graph_to_json(g.get(), &out));
                print_json(take(out));
            } else {
                std::cout << matrix_of(g.get());
            }
        } else if (*lll) {
            check(bq_lll(n, cycle, t, p, seed, budget, &out));
            auto j = Json::parse(take(out));
            if (!out_path.empty() && j["found"].get<bool>()) {
                std::ofstream f(out_path);
                if (!f) throw Failure{kUsage, "cannot write '" + out_path + "'"};
                f << j["coloring"].get<std::string>();
            }
            std::cout << j.dump(2) << '\n';
        } else if (*bench) {
            const auto [lo, hi] = parse_range(range);
            check(bq_bench(bench_family.c_str(), s1, s2, lo, hi, trials, seed, &out));
            const auto rows = Json::parse(take(out));
            Json doc{{"family", bench_family}, {"s1", s1}, {"s2", s2}, {"seed", seed}, {"trials", trials},
                     {"rows", rows}};
            const auto dir = results_dir();
            std::error_code ec;
            std::filesystem::create_directories(dir, ec);
            const auto file = dir / ("bench_" + bench_family + "_" + std::to_string(s1) + "_" +
                                     std::to_string(s2) + "_" + std::to_string(seed) + ".json");
            std::ofstream f(file);
            if (!f) throw Failure{kUsage, "cannot write '" + file.string() + "'"};
            f << doc.dump(2) << '\n';
            if (as_json) {
                std::cout << rows.dump(2) << '\n';
            } else {
                std::printf("%5s %7s %6s %9s %6s %10s\n", "n", "trials", "min", "mean", "floor", "violations");
                for (const auto& r : rows)
                    std::printf("%5zu %7zu %6zu %9.3f %6zu %10zu\n", r["n"].get<std::size_t>(),
                                r["trials"].get<std::size_t>(), r["min"].get<std::size_t>(),
                                r["mean"].get<double>(), r["floor"].get<std::size_t>(),
                                r["violations"].get<std::size_t>());
                std::printf("rows written to %s\n", file.string().c_str());
            }
            std::size_t violations = 0;
            for (const auto& r : rows) violations += r["violations"].get<std::size_t>();
            if (violations) return kDomain;
        } else if (*verify) {
            int valid = 0;
            if (!coloring_path.empty()) {
                check(bq_verify_coloring(read_file(coloring_path).c_str(), cycle, t, &out));
                auto report = Json::parse(take(out));
                valid = report["red_violations"] == 0 && report["blue_violations"] == 0;
                Json j{{"valid", valid == 1}, {"report", report}};
                std::cout << j.dump(2) << '\n';
            } else {
                if (graph_arg.empty()) throw Failure{kUsage, "verify needs --graph (or --coloring)"};
                auto g = load_graph(graph_arg);
                if (!cert_path.empty()) {
                    check(bq_verify_certificate(g.get(), read_file(cert_path).c_str(), &valid));
                } else if (!emb_path.empty()) {
                    if (pattern_arg.empty()) throw Failure{kUsage, "--embedding needs --pattern"};
                    auto h = load_pattern(pattern_arg);
                    check(bq_verify_embedding(g.get(), h.get(), read_file(emb_path).c_str(), &valid));
                } else {
                    throw Failure{kUsage, "verify needs --certificate, --embedding or --coloring"};
                }
                std::cout << Json{{"valid", valid == 1}}.dump(2) << '\n';
            }
            if (!valid) return kDomain;
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kOk;
}
