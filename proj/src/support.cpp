#include "condtruss/support.hpp"

#include <algorithm>

#include "condtruss/error.hpp"

namespace condtruss {

namespace {

inline bool has_alive(const DiGraph& g, const SupportTable* t, Vertex a, Vertex b) {
    EdgeId e = g.edge_id(a, b);
    return e != kNoEdge && (t == nullptr || t->alive[e]);
}

// Sorted intersection of the combined neighborhoods of u and v.
void common_neighbors(const DiGraph& g, Vertex u, Vertex v,
                      std::vector<Vertex>& out) {
    out.clear();
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(out));
}

inline TriangleRoles roles(const DiGraph& g, const SupportTable* t, Vertex u,
                           Vertex v, Vertex w) {
    TriangleRoles r;
    const bool uw = has_alive(g, t, u, w);
    const bool wu = has_alive(g, t, w, u);
    const bool vw = has_alive(g, t, v, w);
    const bool wv = has_alive(g, t, w, v);
    r.cycle = vw && wu;
    r.flow = (uw && wv) || (wu && wv) || (uw && vw);
    return r;
}

} // namespace

TriangleRoles triangle_role(const DiGraph& g, EdgeId e, Vertex w,
                            const SupportTable* table) {
    const auto& [u, v] = g.edge(e);
    return roles(g, table, u, v, w);
}

void recompute_supports(const DiGraph& g, SupportTable& table) {
    std::vector<Vertex> common;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        table.csup[e] = 0;
        table.fsup[e] = 0;
        if (!table.alive[e]) continue;
        const auto& [u, v] = g.edge(e);
        common_neighbors(g, u, v, common);
        for (Vertex w : common) {
            TriangleRoles r = roles(g, &table, u, v, w);
            if (r.cycle) ++table.csup[e];
            if (r.flow) ++table.fsup[e];
        }
    }
}

SupportTable compute_supports(const DiGraph& g) {
    SupportTable table(g.edge_count());
    recompute_supports(g, table);
    return table;
}

std::vector<EdgeId> peel_edge(const DiGraph& g, SupportTable& table, EdgeId e) {
    if (e >= table.alive.size() || !table.alive[e])
        throw usage_error("peel_edge: edge " + std::to_string(e) +
                          " is not alive");

    const auto& [u, v] = g.edge(e);

    // Edges that can lose a witness: the u-w / v-w sides of triangles
    // through e. For a side edge between u and w the triangle witness is
    // v, and vice versa.
    struct Affected {
        EdgeId eid;
        Vertex x, y, z; // side edge <x,y>, witness z
        TriangleRoles before;
    };
    std::vector<Affected> affected;
    std::vector<Vertex> common;
    common_neighbors(g, u, v, common);
    auto consider = [&](Vertex a, Vertex b, Vertex z) {
        EdgeId f = g.edge_id(a, b);
        if (f == kNoEdge || f == e || !table.alive[f]) return;
        affected.push_back({f, a, b, z, roles(g, &table, a, b, z)});
    };
    for (Vertex w : common) {
        consider(u, w, v);
        consider(w, u, v);
        consider(v, w, u);
        consider(w, v, u);
    }

    table.alive[e] = 0;
    table.csup[e] = 0;
    table.fsup[e] = 0;
    --table.alive_edges;

    std::vector<EdgeId> changed;
    for (const auto& a : affected) {
        TriangleRoles after = roles(g, &table, a.x, a.y, a.z);
        bool touched = false;
        if (a.before.cycle && !after.cycle) {
            --table.csup[a.eid];
            touched = true;
        }
        if (a.before.flow && !after.flow) {
            --table.fsup[a.eid];
            touched = true;
        }
        if (touched) changed.push_back(a.eid);
    }
    std::sort(changed.begin(), changed.end());
    changed.erase(std::unique(changed.begin(), changed.end()), changed.end());
    return changed;
}

} // namespace condtruss
