#ifndef CONDTRUSS_SUPPORT_HPP
#define CONDTRUSS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "condtruss/digraph.hpp"

namespace condtruss {

/// Per-edge cycle/flow support counters over the alive subgraph.
/// Counters of dead edges are zeroed.
struct SupportTable {
    std::vector<std::uint32_t> csup;
    std::vector<std::uint32_t> fsup;
    std::vector<char> alive;
    std::size_t alive_edges = 0;

    explicit SupportTable(std::size_t edge_count = 0)
        : csup(edge_count, 0), fsup(edge_count, 0), alive(edge_count, 1),
          alive_edges(edge_count) {}
};

/// Which triangle roles a witness w plays for edge e = <u,v>.
/// Cycle: v->w and w->u both present. Flow: any of {u->w, w->v},
/// {w->u, w->v}, {u->w, v->w}. Both can hold at once when reciprocal
/// edges exist.
struct TriangleRoles {
    bool cycle = false;
    bool flow = false;
};

/// Roles measured in the alive subgraph; pass nullptr to treat every
/// edge as alive.
TriangleRoles triangle_role(const DiGraph& g, EdgeId e, Vertex w,
                            const SupportTable* table = nullptr);

/// From-scratch supports on the full graph; all edges marked alive.
SupportTable compute_supports(const DiGraph& g);

/// Recompute counters from scratch on the subgraph of edges alive in
/// `table`, preserving the alive flags.
void recompute_supports(const DiGraph& g, SupportTable& table);

/// Mark `e` dead and decrement csup/fsup of every alive edge that lost a
/// triangle witness. Returns the eids whose counters changed, sorted.
/// Throws usage_error if `e` is already dead.
std::vector<EdgeId> peel_edge(const DiGraph& g, SupportTable& table, EdgeId e);

} // namespace condtruss

#endif
