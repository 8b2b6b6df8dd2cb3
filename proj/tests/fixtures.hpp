#ifndef CONDTRUSS_TESTS_FIXTURES_HPP
#define CONDTRUSS_TESTS_FIXTURES_HPP

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "condtruss/digraph.hpp"

namespace fixtures {

inline condtruss::DiGraph make_graph(
    const std::vector<std::pair<std::string, std::string>>& edges) {
    std::ostringstream ss;
    for (const auto& [u, v] : edges) ss << u << ' ' << v << '\n';
    std::istringstream in(ss.str());
    return condtruss::load_edge_list(in);
}

// Single cyclic triangle.
inline condtruss::DiGraph g_cyc() {
    return make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

// Single flow triangle (a source, b sink).
inline condtruss::DiGraph g_flow() {
    return make_graph({{"a", "b"}, {"a", "c"}, {"c", "b"}});
}

// All six directed edges on three vertices.
inline condtruss::DiGraph g_rec3() {
    return make_graph({{"a", "b"}, {"b", "a"}, {"b", "c"},
                       {"c", "b"}, {"c", "a"}, {"a", "c"}});
}

// Cyclic triangle on {a,b,c} plus a flow triangle hanging off c.
inline condtruss::DiGraph g_mix() {
    return make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"},
                       {"c", "d"}, {"c", "e"}, {"e", "d"}});
}

// Two vertex-disjoint cyclic triangles.
inline condtruss::DiGraph g_two_cyc() {
    return make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"},
                       {"x", "y"}, {"y", "z"}, {"z", "x"}});
}

// Erdos-Renyi style random digraph: each ordered pair (u,v), u != v,
// present independently with probability p.
inline condtruss::DiGraph random_digraph(std::mt19937& rng, std::size_t n,
                                         double p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && coin(rng) < p)
                edges.emplace_back("v" + std::to_string(u),
                                   "v" + std::to_string(v));
    if (edges.empty()) // keep graphs nonempty so label lookups work
        edges.emplace_back("v0", "v1");
    return make_graph(edges);
}

// The seeded corpus used by the acceptance criteria: vertex count 5..10,
// edge probability 0.2..0.6, derived deterministically from the seed.
inline condtruss::DiGraph corpus_graph(std::uint64_t seed) {
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    std::size_t n = 5 + static_cast<std::size_t>(rng() % 6);
    double p = 0.2 + 0.4 * (static_cast<double>(rng() % 1000) / 999.0);
    return random_digraph(rng, n, p);
}

} // namespace fixtures

#endif
