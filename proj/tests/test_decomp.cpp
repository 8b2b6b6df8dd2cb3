#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "condtruss/decomp.hpp"
#include "condtruss/support.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace condtruss;

namespace {

// Membership set implied by the skylines.
std::vector<EdgeId> covered_edges(const DecompositionResult& d,
                                  TrussnessPair bound) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < d.skyline.size(); ++e)
        if (skyline_covers(d.skyline[e], bound)) out.push_back(e);
    return out;
}

} // namespace

TEST_CASE("dominates is the strict product order") {
    CHECK(dominates({2, 2}, {1, 1}));
    CHECK_FALSE(dominates({2, 1}, {1, 2}));
    CHECK_FALSE(dominates({1, 2}, {2, 1}));
    CHECK_FALSE(dominates({1, 1}, {1, 1}));
    CHECK(dominates_or_equals({1, 1}, {1, 1}));
    CHECK(dominates({2, 1}, {1, 1}));
    CHECK(dominates({1, 2}, {1, 1}));
}

TEST_CASE("skyline_of removes dominated members") {
    auto s = skyline_of({{1, 1}, {0, 3}, {1, 0}, {0, 0}});
    CHECK(s == SkylineSet{{1, 1}, {0, 3}});
    CHECK(skyline_of({}).empty());
    CHECK(skyline_of({{2, 2}, {2, 2}}) == SkylineSet{{2, 2}});
}

TEST_CASE("skyline canonical order: kc descending, kf ascending") {
    auto s = skyline_of({{0, 5}, {3, 0}, {1, 4}, {2, 2}, {1, 1}});
    REQUIRE(s.size() == 4);
    for (std::size_t i = 1; i < s.size(); ++i) {
        CHECK(s[i - 1].kc > s[i].kc);
        CHECK(s[i - 1].kf < s[i].kf);
    }
}

TEST_CASE("max_dtruss on fixtures") {
    auto cyc = fixtures::g_cyc();
    CHECK(max_dtruss(cyc, 1, 0).size() == 3);
    CHECK(max_dtruss(cyc, 2, 0).empty());
    CHECK(max_dtruss(cyc, 0, 1).empty());

    auto rec = fixtures::g_rec3();
    CHECK(max_dtruss(rec, 1, 1).size() == 6);
    // cross-check the (1,1) claim against the naive oracle
    CHECK(oracle::max_dtruss(rec, 1, 1).size() == 6);
    CHECK(max_dtruss(rec, 2, 1).empty());
}

TEST_CASE("kf_profile on fixtures") {
    auto flow = fixtures::g_flow();
    auto phi = kf_profile(flow, 0);
    for (auto v : phi) CHECK(v == 1);
    phi = kf_profile(flow, 1);
    for (auto v : phi) CHECK(v == -1);

    auto rec = fixtures::g_rec3();
    phi = kf_profile(rec, 1);
    for (auto v : phi) CHECK(v == 1);
}

TEST_CASE("decompose on fixtures") {
    auto cyc = fixtures::g_cyc();
    auto d = decompose(cyc);
    for (const auto& sky : d.skyline) CHECK(sky == SkylineSet{{1, 0}});
    CHECK(d.kc_max == 1);
    CHECK(d.kf_max == 0);

    auto rec = fixtures::g_rec3();
    d = decompose(rec);
    for (const auto& sky : d.skyline) CHECK(sky == SkylineSet{{1, 1}});

    auto mix = fixtures::g_mix();
    d = decompose(mix);
    CHECK(d.kc_max == 1);
    CHECK(d.kf_max == 1);
    for (EdgeId e = 0; e < mix.edge_count(); ++e) {
        if (e < 3)
            CHECK(d.skyline[e] == SkylineSet{{1, 0}}); // cycle edges
        else
            CHECK(d.skyline[e] == SkylineSet{{0, 1}}); // flow edges
    }
}

TEST_CASE("edges in no triangle carry skyline {(0,0)}") {
    auto g = fixtures::make_graph({{"a", "b"}, {"b", "c"}});
    auto d = decompose(g);
    for (const auto& sky : d.skyline) CHECK(sky == SkylineSet{{0, 0}});
}

TEST_CASE("decomposition text output") {
    auto g = fixtures::g_cyc();
    auto d = decompose(g);
    std::ostringstream out;
    write_decomposition(g, d, out);
    CHECK(out.str() == "# kc_max 1\n# kf_max 0\n"
                       "a b k:(1,0)\nb c k:(1,0)\nc a k:(1,0)\n");
}

TEST_CASE("threaded decompose matches sequential") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = fixtures::random_digraph(rng, 8, 0.5);
        auto seq = decompose(g, 1);
        auto par = decompose(g, 4);
        CHECK(seq.skyline == par.skyline);
        CHECK(seq.kc_max == par.kc_max);
        CHECK(seq.kf_max == par.kf_max);
    }
}

TEST_CASE("property: max_dtruss is confluent and matches the oracle") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = fixtures::random_digraph(rng, 5 + rng() % 6,
                                          0.2 + 0.4 * (rng() % 100) / 99.0);
        for (std::uint32_t kc = 0; kc < 3; ++kc) {
            for (std::uint32_t kf = 0; kf < 3; ++kf) {
                auto ours = max_dtruss(g, kc, kf);
                auto naive = oracle::max_dtruss(g, kc, kf);
                REQUIRE(ours == naive);
                // randomized single-violator removal converges to the same set
                auto shuffled = oracle::max_dtruss(g, kc, kf, &rng);
                REQUIRE(shuffled == naive);
            }
        }
    }
}

TEST_CASE("property: containment monotonicity") {
    std::mt19937 rng(37);
    auto subset = [](const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (int trial = 0; trial < 25; ++trial) {
        auto g = fixtures::random_digraph(rng, 5 + rng() % 6, 0.5);
        for (std::uint32_t kc = 0; kc < 2; ++kc)
            for (std::uint32_t kf = 0; kf < 2; ++kf) {
                auto base = max_dtruss(g, kc, kf);
                CHECK(subset(max_dtruss(g, kc + 1, kf), base));
                CHECK(subset(max_dtruss(g, kc, kf + 1), base));
            }
    }
}

TEST_CASE("property: skylines cover exactly the oracle truss membership") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = fixtures::random_digraph(rng, 5 + rng() % 6,
                                          0.2 + 0.4 * (rng() % 100) / 99.0);
        auto d = decompose(g);
        for (std::uint32_t kc = 0; kc <= d.kc_max + 1; ++kc)
            for (std::uint32_t kf = 0; kf <= d.kf_max + 1; ++kf)
                REQUIRE(covered_edges(d, {kc, kf}) ==
                        oracle::max_dtruss(g, kc, kf));
    }
}

TEST_CASE("property: every emitted skyline is an antichain") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = fixtures::random_digraph(rng, 5 + rng() % 6, 0.5);
        auto d = decompose(g);
        for (const auto& sky : d.skyline)
            for (std::size_t i = 0; i < sky.size(); ++i)
                for (std::size_t j = 0; j < sky.size(); ++j)
                    if (i != j) CHECK_FALSE(dominates(sky[i], sky[j]));
    }
}

TEST_CASE("property: unions of (kc,kf)-trusses are (kc,kf)-trusses") {
    std::mt19937 rng(47);
    auto check_truss = [](const DiGraph& g, const std::vector<char>& alive,
                          std::uint32_t kc, std::uint32_t kf) {
        auto s = oracle::supports(g, alive);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (alive[e] && (s.csup[e] < kc || s.fsup[e] < kf)) return false;
        return true;
    };
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto g = fixtures::random_digraph(rng, 5 + rng() % 6, 0.5);
        const std::uint32_t kc = rng() % 2, kf = rng() % 2;
        // Sample random subsets, keep those that happen to be trusses, and
        // verify pairwise unions stay trusses.
        std::vector<std::vector<char>> trusses;
        for (int s = 0; s < 20; ++s) {
            std::vector<char> alive(g.edge_count(), 0);
            for (EdgeId e = 0; e < g.edge_count(); ++e) alive[e] = rng() % 2;
            if (check_truss(g, alive, kc, kf)) trusses.push_back(alive);
        }
        for (std::size_t i = 0; i < trusses.size(); ++i)
            for (std::size_t j = i + 1; j < trusses.size(); ++j) {
                std::vector<char> u(g.edge_count(), 0);
                for (EdgeId e = 0; e < g.edge_count(); ++e)
                    u[e] = trusses[i][e] || trusses[j][e];
                CHECK(check_truss(g, u, kc, kf));
                ++found;
            }
    }
    CHECK(found > 0); // the sampler must actually exercise some unions
}
