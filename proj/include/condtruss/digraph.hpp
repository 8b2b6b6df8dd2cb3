#ifndef CONDTRUSS_DIGRAPH_HPP
#define CONDTRUSS_DIGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace condtruss {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId kNoEdge = ~EdgeId{0};

struct DirectedEdge {
    Vertex src;
    Vertex dst;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Immutable simple directed graph. Internal vertex ids are dense and
/// assigned in first-appearance order of the external labels. Self-loops
/// and duplicate (u,v) edges are removed during loading; the reciprocal
/// edge (v,u) is kept as a distinct edge.
class DiGraph {
public:
    DiGraph() = default;
    // `edges` must already be normalized (no self-loops, no duplicates).
    DiGraph(std::vector<std::string> labels, std::vector<DirectedEdge> edges);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const DirectedEdge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<DirectedEdge>& edges() const { return edges_; }
    const std::string& label(Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// kNoEdge when the edge u->v is absent.
    EdgeId edge_id(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v) != kNoEdge; }

    std::optional<Vertex> vertex_of(const std::string& label) const;

    /// Sorted by neighbor id.
    const std::vector<std::pair<Vertex, EdgeId>>& out(Vertex v) const { return out_[v]; }
    const std::vector<std::pair<Vertex, EdgeId>>& in(Vertex v) const { return in_[v]; }

    /// Union of in- and out-neighbors, sorted, unique.
    const std::vector<Vertex>& neighbors(Vertex v) const { return nbr_[v]; }

    /// |out(v)| + |in(v)|; reciprocal neighbors count twice.
    std::size_t degree(Vertex v) const { return out_[v].size() + in_[v].size(); }

    /// Eids of all edges incident to v, both directions.
    const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }

private:
    std::vector<std::string> labels_;
    std::vector<DirectedEdge> edges_;
    std::unordered_map<std::string, Vertex> label_to_id_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> out_;
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> in_;
    std::vector<std::vector<Vertex>> nbr_;
    std::vector<std::vector<EdgeId>> incident_;
};

/// Parse whitespace-separated edge-list text. Lines starting with '#' or
/// '%' are comments; each other non-empty line must hold exactly two
/// tokens (source label, destination label). Throws parse_error with the
/// offending line number on malformed input. Empty input yields an empty
/// graph.
DiGraph load_edge_list(std::istream& in);
DiGraph load_edge_list_file(const std::string& path);

/// Write a normalized edge list with a '#' header carrying |V| and |E|.
void write_edge_list(const DiGraph& g, std::ostream& out);

} // namespace condtruss

#endif
