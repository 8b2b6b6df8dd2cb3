// Command-line driver: convert, decompose, index build, query, stats, bench.
// Exit codes: 0 success, 2 usage/parse error, 3 data-format error, 4 lookup error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "condtruss/decomp.hpp"
#include "condtruss/digraph.hpp"
#include "condtruss/error.hpp"
#include "condtruss/index.hpp"
#include "condtruss/query.hpp"
#include "condtruss/support.hpp"

using json = nlohmann::json;
using namespace condtruss;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::ofstream open_output(const std::string& path, bool binary = false) {
    std::ofstream f(path, binary ? std::ios::binary : std::ios::out);
    if (!f) throw usage_error("cannot open for writing: " + path);
    return f;
}

struct CommonOpts {
    std::string output;
    std::string format = "text";
    unsigned threads = 1;
    std::uint64_t seed = 0;
};

void add_format_flag(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
}

// ---- convert ---------------------------------------------------------------

int cmd_convert(const std::string& input, const CommonOpts& opts) {
    auto g = load_edge_list_file(input);
    if (opts.output.empty()) {
        write_edge_list(g, std::cout);
    } else {
        auto f = open_output(opts.output);
        write_edge_list(g, f);
    }
    std::cerr << "vertices " << g.vertex_count() << " edges " << g.edge_count()
              << "\n";
    return 0;
}

// ---- decompose -------------------------------------------------------------

int cmd_decompose(const std::string& input, const CommonOpts& opts) {
    auto g = load_edge_list_file(input);
    auto start = Clock::now();
    auto dec = decompose(g, opts.threads);
    double elapsed = ms_since(start);
    if (opts.output.empty()) {
        write_decomposition(g, dec, std::cout);
    } else {
        auto f = open_output(opts.output);
        write_decomposition(g, dec, f);
    }
    std::cerr << "kc_max " << dec.kc_max << " kf_max " << dec.kf_max
              << " elapsed_ms " << elapsed << "\n";
    return 0;
}

// ---- index build -----------------------------------------------------------

int cmd_index_build(const std::string& input, const CommonOpts& opts) {
    auto g = load_edge_list_file(input);
    auto start = Clock::now();
    auto dec = decompose(g, opts.threads);
    auto idx = build_index(g, dec);
    double build_ms = ms_since(start);
    save_index(idx, opts.output);

    std::ifstream f(opts.output, std::ios::binary | std::ios::ate);
    auto bytes = static_cast<std::uint64_t>(f.tellg());
    auto s = stats(idx);
    if (opts.format == "json") {
        json j{{"supernodes", s.supernode_count},
               {"superedges", s.superedge_count},
               {"total_membership", s.total_membership},
               {"index_bytes", bytes},
               {"build_ms", build_ms},
               {"ecr", s.ecr}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "supernodes " << s.supernode_count << " superedges "
                  << s.superedge_count << " index_bytes " << bytes
                  << " build_ms " << build_ms << " ecr " << s.ecr << "\n";
    }
    return 0;
}

// ---- query -----------------------------------------------------------------

json result_to_json(const CommunityResult& r, bool emit_edges) {
    json cov = json::object();
    for (const auto& [label, ok] : r.coverage) cov[label] = ok;
    json j{{"supernodes_visited", r.supernodes_visited},
           {"edges_emitted", r.edges_emitted},
           {"coverage", cov},
           {"elapsed_ms", r.elapsed_ms}};
    if (emit_edges) {
        json edges = json::array();
        for (const auto& [u, v] : r.edges) edges.push_back({u, v});
        j["edges"] = edges;
    }
    return j;
}

void print_result_text(const CommunityResult& r, bool emit_edges,
                       std::ostream& out) {
    out << "edges " << r.edges_emitted << " supernodes_visited "
        << r.supernodes_visited << " elapsed_ms " << r.elapsed_ms << "\n";
    for (const auto& [label, ok] : r.coverage)
        out << "coverage " << label << ' ' << (ok ? "true" : "false") << "\n";
    if (emit_edges)
        for (const auto& [u, v] : r.edges) out << u << ' ' << v << "\n";
}

int cmd_query(const std::string& index_path,
              const std::vector<std::string>& labels, std::uint32_t kc,
              std::uint32_t kf, bool count_only, const std::string& oracle_path,
              const CommonOpts& opts) {
    auto idx = load_index(index_path);
    auto r = find_mdtruss(idx, labels, kc, kf);

    bool match = true;
    bool have_oracle = !oracle_path.empty();
    if (have_oracle) {
        auto g = load_edge_list_file(oracle_path);
        auto d = direct_find(g, labels, kc, kf);
        match = (d.edges == r.edges);
    }

    if (opts.format == "json") {
        json j = result_to_json(r, !count_only);
        if (have_oracle) j["oracle"] = match ? "MATCH" : "MISMATCH";
        std::cout << j.dump(2) << "\n";
    } else {
        print_result_text(r, !count_only, std::cout);
        if (have_oracle) std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match ? 0 : 1;
}

// ---- stats -----------------------------------------------------------------

int cmd_stats(const std::string& index_path, const CommonOpts& opts) {
    auto idx = load_index(index_path);
    auto s = stats(idx);
    if (opts.format == "json") {
        json j{{"vertices", idx.labels.size()},
               {"edges", idx.edges.size()},
               {"supernodes", s.supernode_count},
               {"superedges", s.superedge_count},
               {"total_membership", s.total_membership},
               {"ecr", s.ecr}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "vertices " << idx.labels.size() << " edges "
                  << idx.edges.size() << " supernodes " << s.supernode_count
                  << " superedges " << s.superedge_count << " total_membership "
                  << s.total_membership << " ecr " << s.ecr << "\n";
    }
    return 0;
}

// ---- bench -----------------------------------------------------------------

struct BenchRow {
    std::string config;
    std::size_t queries = 0;
    double mean_index_ms = 0;
    double mean_direct_ms = 0;
    double mean_result_edges = 0;
};

struct BenchOpts {
    std::string experiment = "degree-bucket";
    std::size_t queries = 100; // per configuration
    std::uint32_t kc = 1, kf = 1;
    std::uint32_t kc_from = 0, kc_to = 3;
    std::uint32_t kf_from = 0, kf_to = 3;
    std::size_t qsize = 1;
    std::size_t qmax = 4;
    bool skip_direct = false;
};

BenchRow run_config(const DiGraph& g, const SummarizedGraph& idx,
                    const std::vector<std::vector<std::string>>& query_sets,
                    std::uint32_t kc, std::uint32_t kf, bool skip_direct,
                    std::string config) {
    BenchRow row;
    row.config = std::move(config);
    row.queries = query_sets.size();
    if (!query_sets.empty()) { // warm-up, discarded
        find_mdtruss(idx, query_sets.front(), kc, kf);
        if (!skip_direct) direct_find(g, query_sets.front(), kc, kf);
    }
    for (const auto& q : query_sets) {
        auto r = find_mdtruss(idx, q, kc, kf);
        row.mean_index_ms += r.elapsed_ms;
        row.mean_result_edges += static_cast<double>(r.edges_emitted);
        if (!skip_direct) {
            auto d = direct_find(g, q, kc, kf);
            row.mean_direct_ms += d.elapsed_ms;
        }
    }
    if (row.queries > 0) {
        row.mean_index_ms /= static_cast<double>(row.queries);
        row.mean_direct_ms /= static_cast<double>(row.queries);
        row.mean_result_edges /= static_cast<double>(row.queries);
    }
    return row;
}

int cmd_bench(const std::string& graph_path, const std::string& index_path,
              const BenchOpts& b, const CommonOpts& opts) {
    auto g = load_edge_list_file(graph_path);
    auto idx = load_index(index_path);
    if (idx.digest != graph_digest(g))
        throw usage_error("bench: index was not built from this graph");

    std::mt19937_64 rng(opts.seed);
    auto sample_q = [&](std::size_t qsize,
                        const std::vector<Vertex>& pool) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::vector<std::string> q;
        for (std::size_t i = 0; i < qsize; ++i)
            q.push_back(g.label(pool[pick(rng)]));
        return q;
    };
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;

    std::vector<BenchRow> rows;
    if (b.experiment == "degree-bucket") {
        if (g.vertex_count() < 5)
            throw usage_error("degree-bucket needs at least 5 vertices");
        // degree descending, ties by internal id ascending
        std::vector<Vertex> order = all;
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex c) {
            return g.degree(a) > g.degree(c);
        });
        const std::size_t n = order.size();
        for (int grp = 0; grp < 5; ++grp) {
            std::vector<Vertex> pool(order.begin() + grp * n / 5,
                                     order.begin() + (grp + 1) * n / 5);
            std::vector<std::vector<std::string>> sets;
            for (std::size_t i = 0; i < b.queries; ++i)
                sets.push_back(sample_q(1, pool));
            rows.push_back(run_config(g, idx, sets, b.kc, b.kf, b.skip_direct,
                                      "group" + std::to_string(grp + 1)));
        }
    } else if (b.experiment == "vary-kc" || b.experiment == "vary-kf") {
        bool on_kc = b.experiment == "vary-kc";
        std::uint32_t from = on_kc ? b.kc_from : b.kf_from;
        std::uint32_t to = on_kc ? b.kc_to : b.kf_to;
        for (std::uint32_t k = from; k <= to; ++k) {
            std::vector<std::vector<std::string>> sets;
            for (std::size_t i = 0; i < b.queries; ++i)
                sets.push_back(sample_q(b.qsize, all));
            std::uint32_t kc = on_kc ? k : b.kc;
            std::uint32_t kf = on_kc ? b.kf : k;
            rows.push_back(run_config(g, idx, sets, kc, kf, b.skip_direct,
                                      (on_kc ? "kc=" : "kf=") + std::to_string(k)));
        }
    } else { // vary-qsize
        for (std::size_t qs = 1; qs <= b.qmax; ++qs) {
            std::vector<std::vector<std::string>> sets;
            for (std::size_t i = 0; i < b.queries; ++i)
                sets.push_back(sample_q(qs, all));
            rows.push_back(run_config(g, idx, sets, b.kc, b.kf, b.skip_direct,
                                      "|Q|=" + std::to_string(qs)));
        }
    }

    if (opts.format == "json") {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back({{"config", r.config},
                             {"queries", r.queries},
                             {"mean_index_ms", r.mean_index_ms},
                             {"mean_direct_ms", r.mean_direct_ms},
                             {"mean_result_edges", r.mean_result_edges}});
        json j{{"experiment", b.experiment}, {"seed", opts.seed}, {"rows", jrows}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "experiment " << b.experiment << " seed " << opts.seed
                  << "\n";
        for (const auto& r : rows)
            std::cout << r.config << " queries " << r.queries << " mean_index_ms "
                      << r.mean_index_ms << " mean_direct_ms " << r.mean_direct_ms
                      << " mean_result_edges " << r.mean_result_edges << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ConDTruss: D-truss community search on directed graphs"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string input, index_path, graph_path, oracle_path;
    std::vector<std::string> labels;
    std::uint32_t kc = 0, kf = 0;
    bool count_only = false;
    BenchOpts bench;

    auto* convert = app.add_subcommand("convert", "Normalize an edge list");
    convert->add_option("input", input)->required();
    convert->add_option("--output,-o", opts.output);

    auto* decomp = app.add_subcommand("decompose", "Skyline trussness decomposition");
    decomp->add_option("input", input)->required();
    decomp->add_option("--output,-o", opts.output);
    decomp->add_option("--threads", opts.threads);

    auto* index = app.add_subcommand("index", "Index operations");
    auto* build = index->add_subcommand("build", "Build the summarized-graph index");
    build->add_option("input", input)->required();
    build->add_option("--output,-o", opts.output)->required();
    build->add_option("--threads", opts.threads);
    add_format_flag(build, opts);
    index->require_subcommand(1);

    auto* query = app.add_subcommand("query", "Maximal-D-truss query on an index");
    query->add_option("index", index_path)->required();
    query->add_option("labels", labels, "Query vertex labels")->required();
    query->add_option("--kc", kc)->required();
    query->add_option("--kf", kf)->required();
    query->add_flag("--count-only", count_only, "Suppress the edge listing");
    query->add_option("--oracle", oracle_path,
                      "Graph path; also run the direct baseline and compare");
    add_format_flag(query, opts);

    auto* st = app.add_subcommand("stats", "Index statistics");
    st->add_option("index", index_path)->required();
    add_format_flag(st, opts);

    auto* bn = app.add_subcommand("bench", "Query benchmark harness");
    bn->add_option("graph", graph_path)->required();
    bn->add_option("index", index_path)->required();
    bn->add_option("--experiment", bench.experiment)
        ->check(CLI::IsMember({"degree-bucket", "vary-kc", "vary-kf", "vary-qsize"}));
    bn->add_option("--queries", bench.queries, "Queries per configuration");
    bn->add_option("--seed", opts.seed);
    bn->add_option("--kc", bench.kc);
    bn->add_option("--kf", bench.kf);
    bn->add_option("--kc-from", bench.kc_from);
    bn->add_option("--kc-to", bench.kc_to);
    bn->add_option("--kf-from", bench.kf_from);
    bn->add_option("--kf-to", bench.kf_to);
    bn->add_option("--qsize", bench.qsize);
    bn->add_option("--qmax", bench.qmax);
    bn->add_flag("--skip-direct", bench.skip_direct);
    add_format_flag(bn, opts);

    try {
        app.parse(argc, argv);
        if (convert->parsed()) return cmd_convert(input, opts);
        if (decomp->parsed()) return cmd_decompose(input, opts);
        if (index->parsed()) return cmd_index_build(input, opts);
        if (query->parsed())
            return cmd_query(index_path, labels, kc, kf, count_only, oracle_path,
                             opts);
        if (st->parsed()) return cmd_stats(index_path, opts);
        if (bn->parsed()) return cmd_bench(graph_path, index_path, bench, opts);
        return 2;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const lookup_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
