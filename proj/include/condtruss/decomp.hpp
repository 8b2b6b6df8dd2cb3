#ifndef CONDTRUSS_DECOMP_HPP
#define CONDTRUSS_DECOMP_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "condtruss/digraph.hpp"

namespace condtruss {

struct TrussnessPair {
    std::uint32_t kc = 0;
    std::uint32_t kf = 0;

    friend auto operator<=>(const TrussnessPair&, const TrussnessPair&) = default;
};

/// a dominates b: no worse in both coordinates, strictly better in one.
bool dominates(TrussnessPair a, TrussnessPair b);
bool dominates_or_equals(TrussnessPair a, TrussnessPair b);

/// Antichain of trussness pairs in canonical order: kc strictly
/// decreasing, kf strictly increasing.
using SkylineSet = std::vector<TrussnessPair>;

/// Maximal antichain of the input: members not dominated by any other
/// member, deduplicated, canonically sorted.
SkylineSet skyline_of(std::vector<TrussnessPair> pairs);

/// Some member of s dominates-or-equals d (i.e. d is an attained trussness).
bool skyline_covers(const SkylineSet& s, TrussnessPair d);
bool skyline_contains(const SkylineSet& s, TrussnessPair d);

/// The unique maximal edge set where every edge has csup >= kc and
/// fsup >= kf measured inside the set. Sorted eids; may be empty or
/// disconnected.
std::vector<EdgeId> max_dtruss(const DiGraph& g, std::uint32_t kc, std::uint32_t kf);

/// Per-edge max kf at fixed kc: phi[e] = largest kf with e in
/// max_dtruss(g, kc, kf), or -1 for edges outside max_dtruss(g, kc, 0).
std::vector<std::int64_t> kf_profile(const DiGraph& g, std::uint32_t kc);

struct DecompositionResult {
    std::vector<SkylineSet> skyline; // indexed by eid
    std::uint32_t kc_max = 0;
    std::uint32_t kf_max = 0;
    std::array<std::uint8_t, 32> digest{}; // of the source graph
};

/// Full skyline-trussness decomposition. For every (kc,kf):
/// e in max_dtruss(g,kc,kf) iff some skyline member dominates-or-equals
/// (kc,kf). `threads` > 1 evaluates kc levels concurrently.
DecompositionResult decompose(const DiGraph& g, unsigned threads = 1);

/// Text format: '#' header lines with kc_max/kf_max, then one line per
/// edge "src dst k:(kc1,kf1)(kc2,kf2)..." in canonical skyline order.
void write_decomposition(const DiGraph& g, const DecompositionResult& d,
                         std::ostream& out);

} // namespace condtruss

#endif
