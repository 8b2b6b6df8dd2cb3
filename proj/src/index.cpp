#include "condtruss/index.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "condtruss/error.hpp"

namespace condtruss {

std::optional<Vertex> SummarizedGraph::vertex_of(const std::string& label) const {
    // Linear scan kept out of the hot path: callers resolve labels once
    // per query; an id map would bloat the deserialized footprint.
    for (Vertex v = 0; v < labels.size(); ++v)
        if (labels[v] == label) return v;
    return std::nullopt;
}

void SummarizedGraph::rebuild_adjacency() {
    adjacency.assign(supernodes.size(), {});
    for (const auto& [a, b] : superedges) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    for (auto& nb : adjacency) std::sort(nb.begin(), nb.end());
}

std::array<std::uint8_t, 32> graph_digest(const DiGraph& g) {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    auto feed = [&](const void* p, std::size_t n) {
        EVP_DigestUpdate(ctx, p, n);
    };
    auto feed_u64 = [&](std::uint64_t x) { feed(&x, sizeof x); };

    feed("CDTG", 4);
    feed_u64(g.vertex_count());
    for (const auto& l : g.labels()) {
        feed_u64(l.size());
        feed(l.data(), l.size());
    }
    feed_u64(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        feed_u64(u);
        feed_u64(v);
    }
    std::array<std::uint8_t, 32> digest{};
    unsigned len = 0;
    EVP_DigestFinal_ex(ctx, digest.data(), &len);
    EVP_MD_CTX_free(ctx);
    return digest;
}

std::vector<std::vector<EdgeId>> connected_classes(const DiGraph& g,
                                                   const DecompositionResult& dec,
                                                   TrussnessPair d) {
    const std::size_t m = g.edge_count();
    // Members carry d in their skyline; qualified edges (skyline
    // dominates-or-equals d) may serve as path conduits.
    std::vector<char> member(m, 0), qualified(m, 0), visited(m, 0);
    for (EdgeId e = 0; e < m; ++e) {
        qualified[e] = skyline_covers(dec.skyline[e], d);
        member[e] = qualified[e] && skyline_contains(dec.skyline[e], d);
    }

    std::vector<std::vector<EdgeId>> classes;
    std::deque<EdgeId> queue;
    for (EdgeId seed = 0; seed < m; ++seed) {
        if (!member[seed] || visited[seed]) continue;
        std::vector<EdgeId> cls;
        visited[seed] = 1;
        queue.push_back(seed);
        while (!queue.empty()) {
            EdgeId e = queue.front();
            queue.pop_front();
            if (member[e]) cls.push_back(e);
            const auto& [u, v] = g.edge(e);
            for (Vertex endpoint : {u, v}) {
                for (EdgeId f : g.incident(endpoint)) {
                    if (!visited[f] && qualified[f]) {
                        visited[f] = 1;
                        queue.push_back(f);
                    }
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

SummarizedGraph build_index(const DiGraph& g, const DecompositionResult& dec) {
    if (dec.skyline.size() != g.edge_count() || dec.digest != graph_digest(g))
        throw usage_error("build_index: decomposition does not match graph");

    SummarizedGraph idx;
    idx.labels = g.labels();
    idx.edges = g.edges();
    idx.digest = dec.digest;

    std::set<TrussnessPair> values;
    for (const auto& sky : dec.skyline)
        values.insert(sky.begin(), sky.end());

    // Trussness descending (kc,kf)-lexicographic; classes inside a level
    // already come ordered by smallest member eid.
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
        for (auto& cls : connected_classes(g, dec, *it)) {
            Supernode sn;
            sn.sid = static_cast<std::uint32_t>(idx.supernodes.size());
            sn.trussness = *it;
            sn.members = std::move(cls);
            idx.supernodes.push_back(std::move(sn));
        }
    }

    idx.vertex_membership.assign(g.vertex_count(), {});
    for (const auto& sn : idx.supernodes) {
        for (EdgeId e : sn.members) {
            idx.vertex_membership[g.edge(e).src].push_back(sn.sid);
            idx.vertex_membership[g.edge(e).dst].push_back(sn.sid);
        }
    }
    std::set<std::pair<std::uint32_t, std::uint32_t>> links;
    for (auto& sids : idx.vertex_membership) {
        std::sort(sids.begin(), sids.end());
        sids.erase(std::unique(sids.begin(), sids.end()), sids.end());
        // Two supernodes share this vertex iff they have adjacent (or
        // identical) member edges incident to it.
        for (std::size_t i = 0; i < sids.size(); ++i)
            for (std::size_t j = i + 1; j < sids.size(); ++j)
                links.emplace(sids[i], sids[j]);
    }
    idx.superedges.assign(links.begin(), links.end());
    idx.rebuild_adjacency();
    return idx;
}

namespace {

constexpr char kMagic[4] = {'C', 'D', 'T', '1'};
constexpr std::uint32_t kVersion = 1;

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}
    void bytes(const void* p, std::size_t n) {
        out_.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    }
    void u32(std::uint32_t x) { bytes(&x, sizeof x); } // little-endian host
    void u64(std::uint64_t x) { bytes(&x, sizeof x); }

private:
    std::ostream& out_;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}
    void bytes(void* p, std::size_t n) {
        in_.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in_.gcount()) != n)
            throw format_error("index file truncated at offset " +
                               std::to_string(offset_));
        offset_ += n;
    }
    std::uint32_t u32() {
        std::uint32_t x;
        bytes(&x, sizeof x);
        return x;
    }
    std::uint64_t u64() {
        std::uint64_t x;
        bytes(&x, sizeof x);
        return x;
    }
    std::size_t offset() const { return offset_; }
    [[noreturn]] void fail(const std::string& what) const {
        throw format_error("index file: " + what + " at offset " +
                           std::to_string(offset_));
    }

private:
    std::istream& in_;
    std::size_t offset_ = 0;
};

} // namespace

void serialize(const SummarizedGraph& idx, std::ostream& out) {
    Writer w(out);
    w.bytes(kMagic, 4);
    w.u32(kVersion);
    w.bytes(idx.digest.data(), idx.digest.size());
    w.u64(idx.labels.size());
    w.u64(idx.edges.size());
    w.u64(idx.supernodes.size());
    w.u64(idx.superedges.size());
    for (const auto& l : idx.labels) {
        w.u64(l.size());
        w.bytes(l.data(), l.size());
    }
    for (const auto& [u, v] : idx.edges) {
        w.u64(u);
        w.u64(v);
    }
    for (const auto& sn : idx.supernodes) {
        w.u32(sn.trussness.kc);
        w.u32(sn.trussness.kf);
        w.u64(sn.members.size());
        for (EdgeId e : sn.members) w.u64(e);
    }
    for (const auto& [a, b] : idx.superedges) {
        w.u64(a);
        w.u64(b);
    }
    for (const auto& sids : idx.vertex_membership) {
        w.u64(sids.size());
        for (std::uint32_t s : sids) w.u64(s);
    }
    out.flush();
}

SummarizedGraph deserialize(std::istream& in) {
    Reader r(in);
    char magic[4];
    r.bytes(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0) r.fail("bad magic");
    std::uint32_t version = r.u32();
    if (version != kVersion)
        r.fail("unsupported version " + std::to_string(version));

    SummarizedGraph idx;
    r.bytes(idx.digest.data(), idx.digest.size());
    const std::uint64_t nv = r.u64();
    const std::uint64_t ne = r.u64();
    const std::uint64_t nsn = r.u64();
    const std::uint64_t nse = r.u64();

    idx.labels.resize(nv);
    for (auto& l : idx.labels) {
        l.resize(r.u64());
        r.bytes(l.data(), l.size());
    }
    idx.edges.resize(ne);
    for (auto& e : idx.edges) {
        std::uint64_t u = r.u64(), v = r.u64();
        if (u >= nv || v >= nv) r.fail("edge endpoint out of range");
        e = {static_cast<Vertex>(u), static_cast<Vertex>(v)};
    }
    idx.supernodes.resize(nsn);
    for (std::uint32_t sid = 0; sid < nsn; ++sid) {
        auto& sn = idx.supernodes[sid];
        sn.sid = sid;
        sn.trussness.kc = r.u32();
        sn.trussness.kf = r.u32();
        sn.members.resize(r.u64());
        for (auto& m : sn.members) {
            std::uint64_t e = r.u64();
            if (e >= ne) r.fail("member eid out of range");
            m = static_cast<EdgeId>(e);
        }
    }
    idx.superedges.resize(nse);
    for (auto& se : idx.superedges) {
        std::uint64_t a = r.u64(), b = r.u64();
        if (a >= nsn || b >= nsn || a >= b) r.fail("bad superedge pair");
        se = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    }
    idx.vertex_membership.resize(nv);
    for (auto& sids : idx.vertex_membership) {
        sids.resize(r.u64());
        for (auto& s : sids) {
            std::uint64_t sid = r.u64();
            if (sid >= nsn) r.fail("membership sid out of range");
            s = static_cast<std::uint32_t>(sid);
        }
    }
    idx.rebuild_adjacency();
    return idx;
}

void save_index(const SummarizedGraph& idx, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw format_error("cannot open for writing: " + path);
    serialize(idx, f);
    if (!f) throw format_error("write failed: " + path);
}

SummarizedGraph load_index(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw format_error("cannot open index: " + path);
    return deserialize(f);
}

IndexStats stats(const SummarizedGraph& idx) {
    IndexStats s;
    s.supernode_count = idx.supernodes.size();
    s.superedge_count = idx.superedges.size();
    for (const auto& sn : idx.supernodes) s.total_membership += sn.members.size();
    s.source_edges = idx.edges.size();
    s.ecr = s.source_edges == 0
                ? 0.0
                : static_cast<double>(s.superedge_count) /
                      static_cast<double>(s.source_edges);
    return s;
}

} // namespace condtruss
