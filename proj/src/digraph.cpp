#include "condtruss/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "condtruss/error.hpp"

namespace condtruss {

DiGraph::DiGraph(std::vector<std::string> labels, std::vector<DirectedEdge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
    const std::size_t n = labels_.size();
    label_to_id_.reserve(n);
    for (Vertex v = 0; v < n; ++v) label_to_id_.emplace(labels_[v], v);

    out_.resize(n);
    in_.resize(n);
    nbr_.resize(n);
    incident_.resize(n);
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const auto& [u, v] = edges_[e];
        out_[u].emplace_back(v, e);
        in_[v].emplace_back(u, e);
    }
    for (Vertex v = 0; v < n; ++v) {
        std::sort(out_[v].begin(), out_[v].end());
        std::sort(in_[v].begin(), in_[v].end());

        auto& nb = nbr_[v];
        nb.reserve(out_[v].size() + in_[v].size());
        for (const auto& [w, e] : out_[v]) nb.push_back(w);
        for (const auto& [w, e] : in_[v]) nb.push_back(w);
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());

        auto& inc = incident_[v];
        inc.reserve(out_[v].size() + in_[v].size());
        for (const auto& [w, e] : out_[v]) inc.push_back(e);
        for (const auto& [w, e] : in_[v]) inc.push_back(e);
        std::sort(inc.begin(), inc.end());
    }
}

EdgeId DiGraph::edge_id(Vertex u, Vertex v) const {
    const auto& adj = out_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(),
                               std::make_pair(v, EdgeId{0}));
    if (it != adj.end() && it->first == v) return it->second;
    return kNoEdge;
}

std::optional<Vertex> DiGraph::vertex_of(const std::string& label) const {
    auto it = label_to_id_.find(label);
    if (it == label_to_id_.end()) return std::nullopt;
    return it->second;
}

DiGraph load_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, Vertex> ids;
    std::vector<DirectedEdge> edges;
    std::unordered_set<std::uint64_t> seen;

    auto intern = [&](const std::string& tok) -> Vertex {
        auto it = ids.find(tok);
        if (it != ids.end()) return it->second;
        Vertex v = static_cast<Vertex>(labels.size());
        labels.push_back(tok);
        ids.emplace(tok, v);
        return v;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank line
        if (a[0] == '#' || a[0] == '%') continue;
        if (!(ls >> b) || (ls >> extra)) {
            throw parse_error("edge list line " + std::to_string(lineno) +
                              ": expected 2 tokens");
        }
        Vertex u = intern(a);
        Vertex v = intern(b);
        if (u == v) continue; // self-loop
        std::uint64_t key = (std::uint64_t{u} << 32) | v;
        if (!seen.insert(key).second) continue; // duplicate
        edges.push_back({u, v});
    }
    return DiGraph(std::move(labels), std::move(edges));
}

DiGraph load_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open edge list: " + path);
    return load_edge_list(f);
}

void write_edge_list(const DiGraph& g, std::ostream& out) {
    out << "# vertices " << g.vertex_count() << " edges " << g.edge_count()
        << "\n";
    for (const auto& e : g.edges())
        out << g.label(e.src) << ' ' << g.label(e.dst) << '\n';
}

} // namespace condtruss
