#include "condtruss/decomp.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "condtruss/index.hpp"
#include "condtruss/support.hpp"

namespace condtruss {

bool dominates(TrussnessPair a, TrussnessPair b) {
    return (a.kc > b.kc && a.kf >= b.kf) || (a.kc >= b.kc && a.kf > b.kf);
}

bool dominates_or_equals(TrussnessPair a, TrussnessPair b) {
    return a.kc >= b.kc && a.kf >= b.kf;
}

SkylineSet skyline_of(std::vector<TrussnessPair> pairs) {
    std::sort(pairs.begin(), pairs.end(), [](TrussnessPair a, TrussnessPair b) {
        if (a.kc != b.kc) return a.kc > b.kc;
        return a.kf > b.kf;
    });
    SkylineSet result;
    std::int64_t best_kf = -1;
    for (const auto& p : pairs) {
        if (static_cast<std::int64_t>(p.kf) > best_kf) {
            result.push_back(p);
            best_kf = p.kf;
        }
    }
    return result;
}

bool skyline_covers(const SkylineSet& s, TrussnessPair d) {
    return std::any_of(s.begin(), s.end(),
                       [d](TrussnessPair m) { return dominates_or_equals(m, d); });
}

bool skyline_contains(const SkylineSet& s, TrussnessPair d) {
    return std::find(s.begin(), s.end(), d) != s.end();
}

namespace {

// Peel every queued violator, cascading, processing pending edges in
// ascending eid order. `on_peel` receives each removed eid.
template <typename F>
void peel_to_fixpoint(const DiGraph& g, SupportTable& t, std::uint32_t kc,
                      std::uint32_t kf, std::set<EdgeId>& pending, F&& on_peel) {
    while (!pending.empty()) {
        EdgeId e = *pending.begin();
        pending.erase(pending.begin());
        if (!t.alive[e]) continue;
        for (EdgeId f : peel_edge(g, t, e)) {
            if (t.alive[f] && (t.csup[f] < kc || t.fsup[f] < kf))
                pending.insert(f);
        }
        on_peel(e);
    }
}

std::set<EdgeId> violators(const SupportTable& t, std::uint32_t kc,
                           std::uint32_t kf) {
    std::set<EdgeId> pending;
    for (EdgeId e = 0; e < t.alive.size(); ++e)
        if (t.alive[e] && (t.csup[e] < kc || t.fsup[e] < kf))
            pending.insert(e);
    return pending;
}

} // namespace

std::vector<EdgeId> max_dtruss(const DiGraph& g, std::uint32_t kc,
                               std::uint32_t kf) {
    SupportTable t = compute_supports(g);
    auto pending = violators(t, kc, kf);
    peel_to_fixpoint(g, t, kc, kf, pending, [](EdgeId) {});
    std::vector<EdgeId> result;
    for (EdgeId e = 0; e < t.alive.size(); ++e)
        if (t.alive[e]) result.push_back(e);
    return result;
}

std::vector<std::int64_t> kf_profile(const DiGraph& g, std::uint32_t kc) {
    std::vector<std::int64_t> phi(g.edge_count(), -1);
    SupportTable t = compute_supports(g);

    // Restrict to the (kc,0)-truss; edges dropped here stay absent.
    auto pending = violators(t, kc, 0);
    peel_to_fixpoint(g, t, kc, 0, pending, [](EdgeId) {});

    // Raise the kf threshold; an edge peeled while enforcing fsup >= level
    // (directly or through a csup cascade) tops out at level-1.
    for (std::uint32_t level = 1; t.alive_edges > 0; ++level) {
        pending = violators(t, kc, level);
        peel_to_fixpoint(g, t, kc, level, pending,
                         [&](EdgeId e) { phi[e] = level - 1; });
    }
    return phi;
}

namespace {

// Collect kf profiles for kc = 0,1,... until the (kc,0)-truss is empty.
std::vector<std::vector<std::int64_t>> all_profiles(const DiGraph& g,
                                                    unsigned threads) {
    std::vector<std::vector<std::int64_t>> profiles;
    auto empty_profile = [](const std::vector<std::int64_t>& phi) {
        return std::all_of(phi.begin(), phi.end(),
                           [](std::int64_t v) { return v < 0; });
    };

    if (threads <= 1) {
        for (std::uint32_t kc = 0;; ++kc) {
            auto phi = kf_profile(g, kc);
            if (kc > 0 && empty_profile(phi)) break;
            profiles.push_back(std::move(phi));
            if (empty_profile(profiles.back())) break; // empty graph
        }
        return profiles;
    }

    std::mutex mu;
    std::map<std::uint32_t, std::vector<std::int64_t>> by_kc;
    std::atomic<std::uint32_t> next_kc{0};
    std::atomic<std::uint32_t> first_empty{~std::uint32_t{0}};
    auto worker = [&] {
        for (;;) {
            std::uint32_t kc = next_kc.fetch_add(1);
            if (kc >= first_empty.load()) return;
            auto phi = kf_profile(g, kc);
            if (empty_profile(phi)) {
                std::uint32_t cur = first_empty.load();
                while (kc < cur && !first_empty.compare_exchange_weak(cur, kc)) {
                }
            }
            std::lock_guard<std::mutex> lk(mu);
            by_kc.emplace(kc, std::move(phi));
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    for (std::uint32_t kc = 0;; ++kc) {
        auto it = by_kc.find(kc);
        if (it == by_kc.end() || (kc > 0 && empty_profile(it->second))) break;
        profiles.push_back(std::move(it->second));
        if (empty_profile(profiles.back())) break;
    }
    return profiles;
}

} // namespace

DecompositionResult decompose(const DiGraph& g, unsigned threads) {
    DecompositionResult out;
    out.skyline.assign(g.edge_count(), {});
    out.digest = graph_digest(g);

    auto profiles = all_profiles(g, threads);

    std::vector<TrussnessPair> candidates;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        candidates.clear();
        for (std::uint32_t kc = 0; kc < profiles.size(); ++kc) {
            std::int64_t kf = profiles[kc][e];
            if (kf >= 0)
                candidates.push_back({kc, static_cast<std::uint32_t>(kf)});
        }
        out.skyline[e] = skyline_of(std::move(candidates));
        for (const auto& p : out.skyline[e]) {
            out.kc_max = std::max(out.kc_max, p.kc);
            out.kf_max = std::max(out.kf_max, p.kf);
        }
    }
    return out;
}

void write_decomposition(const DiGraph& g, const DecompositionResult& d,
                         std::ostream& out) {
    out << "# kc_max " << d.kc_max << "\n# kf_max " << d.kf_max << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edge(e);
        out << g.label(u) << ' ' << g.label(v) << " k:";
        for (const auto& p : d.skyline[e]) out << '(' << p.kc << ',' << p.kf << ')';
        out << '\n';
    }
}

} // namespace condtruss
