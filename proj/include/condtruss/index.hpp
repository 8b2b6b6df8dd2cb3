#ifndef CONDTRUSS_INDEX_HPP
#define CONDTRUSS_INDEX_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "condtruss/decomp.hpp"
#include "condtruss/digraph.hpp"

namespace condtruss {

/// One D-truss-connected equivalence class at skyline value `trussness`.
struct Supernode {
    std::uint32_t sid = 0;
    TrussnessPair trussness;
    std::vector<EdgeId> members; // sorted
};

/// The summarized-graph index: supernodes, superedges linking classes
/// with adjacent member edges, and the vertex -> supernode membership
/// map. Self-contained for querying (carries labels and the edge table).
struct SummarizedGraph {
    std::vector<std::string> labels;
    std::vector<DirectedEdge> edges;
    std::array<std::uint8_t, 32> digest{};
    std::vector<Supernode> supernodes;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> superedges; // sid1 < sid2, sorted
    std::vector<std::vector<std::uint32_t>> vertex_membership;       // per vertex, sorted sids

    // derived, rebuilt by build_index/deserialize
    std::vector<std::vector<std::uint32_t>> adjacency; // per sid

    std::optional<Vertex> vertex_of(const std::string& label) const;
    void rebuild_adjacency();
};

struct IndexStats {
    std::uint64_t supernode_count = 0;
    std::uint64_t superedge_count = 0;
    std::uint64_t total_membership = 0;
    std::uint64_t source_edges = 0;
    double ecr = 0.0; // superedges / source edges
};

/// SHA-256 over a canonical encoding of labels and edges.
std::array<std::uint8_t, 32> graph_digest(const DiGraph& g);

/// Partition of Phi_d = {e : d in ST(e)} into D-truss-connected classes:
/// e1 ~ e2 iff linked by a path of vertex-sharing edges whose skylines
/// dominate-or-equal d. Classes ordered by smallest member eid.
std::vector<std::vector<EdgeId>> connected_classes(const DiGraph& g,
                                                   const DecompositionResult& dec,
                                                   TrussnessPair d);

/// Build the full index. Supernode ids are assigned by trussness
/// descending ((kc,kf) lexicographic), then smallest member eid.
/// Throws usage_error when the decomposition digest does not match `g`.
SummarizedGraph build_index(const DiGraph& g, const DecompositionResult& dec);

/// Canonical binary encoding; deterministic, little-endian.
void serialize(const SummarizedGraph& idx, std::ostream& out);
/// Throws format_error naming the byte offset on bad magic, version,
/// truncation, or out-of-range references.
SummarizedGraph deserialize(std::istream& in);

void save_index(const SummarizedGraph& idx, const std::string& path);
SummarizedGraph load_index(const std::string& path);

IndexStats stats(const SummarizedGraph& idx);

} // namespace condtruss

#endif
