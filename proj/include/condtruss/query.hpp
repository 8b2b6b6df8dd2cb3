#ifndef CONDTRUSS_QUERY_HPP
#define CONDTRUSS_QUERY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "condtruss/digraph.hpp"
#include "condtruss/index.hpp"

namespace condtruss {

struct CommunityResult {
    std::vector<std::pair<std::string, std::string>> edges; // sorted label pairs
    std::size_t supernodes_visited = 0;
    std::size_t edges_emitted = 0;
    std::vector<std::pair<std::string, bool>> coverage; // per query label
    double elapsed_ms = 0.0;
};

/// Maximal-D-truss retrieval on the index: BFS over superedges from the
/// supernodes containing the query vertices, visiting only supernodes
/// whose trussness dominates-or-equals (kc,kf); the answer is the union
/// of member edges, each emitted once. Empty results are normal.
/// Throws lookup_error on unknown labels.
CommunityResult find_mdtruss(const SummarizedGraph& idx,
                             const std::vector<std::string>& query_labels,
                             std::uint32_t kc, std::uint32_t kf);

/// On-graph baseline: peel to max_dtruss(g,kc,kf), take weakly-connected
/// components of that edge set, return the union of components touching
/// a query vertex.
CommunityResult direct_find(const DiGraph& g,
                            const std::vector<std::string>& query_labels,
                            std::uint32_t kc, std::uint32_t kf);

} // namespace condtruss

#endif
