#include "dompoly/analysis.hpp"

#include "dompoly/enumeration.hpp"
#include "dompoly/graph_io.hpp"
#include "dompoly/rng.hpp"

#include <doctest.h>

using namespace dompoly;

namespace {
    CoefficientVector cv(std::vector<BigInt> d) { return CoefficientVector{std::move(d)}; }
}

TEST_CASE("analyze named sequences")
{
    SUBCASE("K_3 plateau resolves to the right")
    {
        const AnalysisReport r = analyze(cv({0, 3, 3, 1}));
        CHECK(r.unimodal);
        CHECK(r.mode == 2);
        CHECK_FALSE(r.first_violation.has_value());
        CHECK(r.ratio_monotone);
    }
    SUBCASE("star K_{1,3}")
    {
        const AnalysisReport r = analyze(cv({0, 1, 3, 4, 1}));
        CHECK(r.unimodal);
        CHECK(r.mode == 3);
    }
    SUBCASE("down-up pattern is rejected with a witness")
    {
        const AnalysisReport r = analyze(cv({0, 2, 1, 2}));
        CHECK_FALSE(r.unimodal);
        CHECK_FALSE(r.mode.has_value());
        REQUIRE(r.first_violation.has_value());
        CHECK(r.first_violation->index == 2);
        CHECK(r.first_violation->before == 2);
        CHECK(r.first_violation->at == 1);
        CHECK(r.first_violation->after == 2);
    }
    SUBCASE("concavity window")
    {
        // 2*d[l+1] > d[l] + d[l+2] at l = 1 (6 > 1+4) and l = 2 (8 > 3+1)
        const AnalysisReport r = analyze(cv({0, 1, 3, 4, 1}));
        CHECK(r.concavity_window == std::vector<int>{1, 2});
    }
    CHECK_THROWS_AS(analyze(cv({})), std::invalid_argument);
}

TEST_CASE("ratio sequence")
{
    SUBCASE("K_3")
    {
        const RatioSequence r = ratio_sequence(cv({0, 3, 3, 1}));
        CHECK(r.ratios == std::vector<BigRational>{0, 1, 1, 1});
        CHECK(r.non_decreasing);
    }
    SUBCASE("P_4")
    {
        const RatioSequence r = ratio_sequence(cv({0, 0, 4, 4, 1}));
        CHECK(r.ratios == std::vector<BigRational>{0, 0, BigRational(2, 3), 1, 1});
        CHECK(r.non_decreasing);
    }
    SUBCASE("star K_{1,3}")
    {
        const RatioSequence r = ratio_sequence(cv({0, 1, 3, 4, 1}));
        CHECK(r.ratios == std::vector<BigRational>{0, BigRational(1, 4), BigRational(1, 2), 1, 1});
        CHECK(r.non_decreasing);
    }
    SUBCASE("a decreasing spot is flagged")
    {
        CHECK_FALSE(ratio_sequence(cv({0, 3, 1, 1})).non_decreasing);
    }
}

TEST_CASE("ratio monotonicity holds for every sampled graph")
{
    SplitMix64 rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 12);
        const Graph g = generate_gnp(n, 0.1 + 0.08 * static_cast<double>(rng.next() % 10),
                                     rng.next());
        const CoefficientVector d = domination_polynomial(g);
        REQUIRE(ratio_sequence(d).non_decreasing);
        REQUIRE(ratio_sequence(d).ratios.back() == 1);
    }
}

TEST_CASE("mode bounds check")
{
    SUBCASE("star K_{1,3}: mode 3 within [2, 2 + 2 + 2]")
    {
        CHECK(mode_bounds_check(cv({0, 1, 3, 4, 1})));
    }
    SUBCASE("K_5: mode 3 within [2.5, 2.5 + log2(5) + 2]")
    {
        CHECK(mode_bounds_check(cv({0, 5, 10, 10, 5, 1})));
    }
    SUBCASE("single vertex: mode 1 within [0.5, 2.5]")
    {
        CHECK(mode_bounds_check(cv({0, 1})));
    }
    SUBCASE("mode below n/2 fails")
    {
        CHECK_FALSE(mode_bounds_check(cv({0, 9, 5, 2, 1, 1})));
    }
    SUBCASE("mode too far above n/2 fails")
    {
        // n = 12, mode 12; upper bound just under 12: 2^(2*12-12-4) = 256 > 144
        std::vector<BigInt> d(13, 0);
        for (int i = 0; i <= 12; ++i)
            d[static_cast<std::size_t>(i)] = i + 1;
        CHECK_FALSE(mode_bounds_check(cv(d)));
    }
    SUBCASE("non-unimodal input fails")
    {
        CHECK_FALSE(mode_bounds_check(cv({0, 2, 1, 2})));
    }
}

TEST_CASE("universal-vertex graphs rise up to the midpoint")
{
    // exhaustive over 4-vertex bases plus a universal vertex, then random
    for (std::uint64_t code = 0; code < 64; ++code) {
        std::vector<std::pair<int, int>> edges;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if ((code >> bit) & 1)
                    edges.emplace_back(u, v);
        const Graph g = join_universal(Graph::from_edges(4, edges), 1);
        const auto d = domination_polynomial(g).coeffs;
        for (int i = 0; 2 * i < g.order(); ++i)
            REQUIRE(d[static_cast<std::size_t>(i)] <= d[static_cast<std::size_t>(i) + 1]);
    }
    SplitMix64 rng(5050);
    for (int trial = 0; trial < 20; ++trial) {
        const int base = 4 + static_cast<int>(rng.next() % 4);
        const Graph g = join_universal(generate_gnp(base, 0.4, rng.next()), 1);
        const auto d = domination_polynomial(g).coeffs;
        for (int i = 0; 2 * i < g.order(); ++i)
            REQUIRE(d[static_cast<std::size_t>(i)] <= d[static_cast<std::size_t>(i) + 1]);
    }
}
