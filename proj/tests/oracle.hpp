#ifndef CONDTRUSS_TESTS_ORACLE_HPP
#define CONDTRUSS_TESTS_ORACLE_HPP

// Brute-force oracles, independent of the library's adjacency structures
// and incremental peeling: edge existence is looked up in a plain set
// built from the edge list, supports are recomputed from scratch on
// every step, and trusses are found by naive fixpoint removal.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "condtruss/digraph.hpp"

namespace oracle {

using condtruss::DiGraph;
using condtruss::EdgeId;
using condtruss::Vertex;

struct Supports {
    std::vector<std::uint32_t> csup;
    std::vector<std::uint32_t> fsup;
};

// Definition-level support count: scan every vertex as a witness.
inline Supports supports(const DiGraph& g, const std::vector<char>& alive) {
    std::set<std::pair<Vertex, Vertex>> present;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (alive[e]) present.insert({g.edge(e).src, g.edge(e).dst});
    auto has = [&](Vertex a, Vertex b) { return present.count({a, b}) > 0; };

    Supports s;
    s.csup.assign(g.edge_count(), 0);
    s.fsup.assign(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!alive[e]) continue;
        Vertex u = g.edge(e).src, v = g.edge(e).dst;
        for (Vertex w = 0; w < g.vertex_count(); ++w) {
            if (w == u || w == v) continue;
            if (has(v, w) && has(w, u)) ++s.csup[e];
            if ((has(u, w) && has(w, v)) || (has(w, u) && has(w, v)) ||
                (has(u, w) && has(v, w)))
                ++s.fsup[e];
        }
    }
    return s;
}

// Naive fixpoint peeling: recompute supports from scratch, drop all
// violators, repeat. With `rng`, drop one random violator per round
// instead (exercises confluence).
inline std::vector<EdgeId> max_dtruss(const DiGraph& g, std::uint32_t kc,
                                      std::uint32_t kf,
                                      std::mt19937* rng = nullptr) {
    std::vector<char> alive(g.edge_count(), 1);
    for (;;) {
        Supports s = supports(g, alive);
        std::vector<EdgeId> bad;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (alive[e] && (s.csup[e] < kc || s.fsup[e] < kf))
                bad.push_back(e);
        if (bad.empty()) break;
        if (rng) {
            std::uniform_int_distribution<std::size_t> pick(0, bad.size() - 1);
            alive[bad[pick(*rng)]] = 0;
        } else {
            for (EdgeId e : bad) alive[e] = 0;
        }
    }
    std::vector<EdgeId> result;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (alive[e]) result.push_back(e);
    return result;
}

} // namespace oracle

#endif
