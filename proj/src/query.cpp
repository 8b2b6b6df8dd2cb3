#include "condtruss/query.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>

#include "condtruss/decomp.hpp"
#include "condtruss/error.hpp"

namespace condtruss {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

std::vector<Vertex> resolve_labels(const std::vector<std::string>& labels,
                                   auto&& lookup) {
    std::vector<Vertex> out;
    out.reserve(labels.size());
    for (const auto& l : labels) {
        auto v = lookup(l);
        if (!v) throw lookup_error("unknown vertex label: " + l);
        out.push_back(*v);
    }
    return out;
}

void finish_edges(CommunityResult& r) {
    std::sort(r.edges.begin(), r.edges.end());
    r.edges_emitted = r.edges.size();
}

// Union-find over vertices.
struct Dsu {
    std::vector<Vertex> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), Vertex{0});
    }
    Vertex find(Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(Vertex a, Vertex b) { parent[find(a)] = find(b); }
};

} // namespace

CommunityResult find_mdtruss(const SummarizedGraph& idx,
                             const std::vector<std::string>& query_labels,
                             std::uint32_t kc, std::uint32_t kf) {
    auto start = Clock::now();
    auto verts = resolve_labels(query_labels,
                                [&](const std::string& l) { return idx.vertex_of(l); });

    const TrussnessPair bound{kc, kf};
    CommunityResult r;
    std::vector<char> examined(idx.supernodes.size(), 0);
    std::deque<std::uint32_t> worklist;

    auto examine = [&](std::uint32_t sid) {
        if (examined[sid]) return;
        examined[sid] = 1;
        ++r.supernodes_visited;
        if (dominates_or_equals(idx.supernodes[sid].trussness, bound))
            worklist.push_back(sid);
    };

    for (std::size_t qi = 0; qi < verts.size(); ++qi) {
        bool covered = false;
        for (std::uint32_t sid : idx.vertex_membership[verts[qi]]) {
            if (dominates_or_equals(idx.supernodes[sid].trussness, bound))
                covered = true;
            examine(sid);
        }
        r.coverage.emplace_back(query_labels[qi], covered);
    }

    std::vector<char> emitted(idx.edges.size(), 0);
    std::size_t emissions = 0;
    while (!worklist.empty()) {
        std::uint32_t sid = worklist.front();
        worklist.pop_front();
        for (EdgeId e : idx.supernodes[sid].members) {
            if (emitted[e]) continue; // an edge may sit in several visited supernodes
            emitted[e] = 1;
            ++emissions;
            r.edges.emplace_back(idx.labels[idx.edges[e].src],
                                 idx.labels[idx.edges[e].dst]);
        }
        for (std::uint32_t nb : idx.adjacency[sid]) examine(nb);
    }

    finish_edges(r);
    r.edges_emitted = emissions;
    r.elapsed_ms = ms_since(start);
    return r;
}

CommunityResult direct_find(const DiGraph& g,
                            const std::vector<std::string>& query_labels,
                            std::uint32_t kc, std::uint32_t kf) {
    auto start = Clock::now();
    auto verts = resolve_labels(query_labels,
                                [&](const std::string& l) { return g.vertex_of(l); });

    auto truss = max_dtruss(g, kc, kf);

    Dsu dsu(g.vertex_count());
    std::vector<char> touched(g.vertex_count(), 0);
    for (EdgeId e : truss) {
        dsu.unite(g.edge(e).src, g.edge(e).dst);
        touched[g.edge(e).src] = touched[g.edge(e).dst] = 1;
    }

    CommunityResult r;
    std::vector<char> wanted_root(g.vertex_count(), 0);
    for (std::size_t qi = 0; qi < verts.size(); ++qi) {
        bool covered = touched[verts[qi]];
        if (covered) wanted_root[dsu.find(verts[qi])] = 1;
        r.coverage.emplace_back(query_labels[qi], covered);
    }
    for (EdgeId e : truss) {
        if (wanted_root[dsu.find(g.edge(e).src)])
            r.edges.emplace_back(g.label(g.edge(e).src), g.label(g.edge(e).dst));
    }

    finish_edges(r);
    r.elapsed_ms = ms_since(start);
    return r;
}

} // namespace condtruss
