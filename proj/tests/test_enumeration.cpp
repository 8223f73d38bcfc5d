#include "dompoly/enumeration.hpp"

#include "dompoly/graph_io.hpp"
#include "dompoly/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dompoly;

namespace {
    std::vector<BigInt> coeffs(const Graph& g, int workers = 1)
    {
        return domination_polynomial(g, EnumOptions{32, workers}).coeffs;
    }
}

TEST_CASE("domination polynomial on named graphs")
{
    CHECK(coeffs(generate_complete(3)) == std::vector<BigInt>{0, 3, 3, 1});
    CHECK(coeffs(generate_path(4)) == std::vector<BigInt>{0, 0, 4, 4, 1});
    CHECK(coeffs(generate_star(4)) == std::vector<BigInt>{0, 1, 3, 4, 1});
    CHECK(coeffs(generate_path(3)) == std::vector<BigInt>{0, 1, 3, 1});

    // complete graphs count every nonempty subset
    const auto k6 = coeffs(generate_complete(6));
    for (int k = 1; k <= 6; ++k)
        CHECK(k6[static_cast<std::size_t>(k)] == binomial(6, k));
    CHECK(k6[0] == 0);
}

TEST_CASE("petersen-based regression vectors")
{
    CHECK(coeffs(generate_petersen()) ==
          std::vector<BigInt>{0, 0, 0, 10, 75, 192, 200, 120, 45, 10, 1});
    CHECK(coeffs(join_universal(generate_petersen(), 1)) ==
          std::vector<BigInt>{0, 1, 10, 55, 195, 402, 452, 330, 165, 55, 11, 1});
    CHECK(coeffs(join_universal(generate_cycle(5), 1)) ==
          std::vector<BigInt>{0, 1, 10, 20, 15, 6, 1});
}

TEST_CASE("engine matches the brute-force oracle on random graphs")
{
    SplitMix64 rng(991);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 11);
        const double p = 0.15 + 0.1 * static_cast<double>(rng.next() % 7);
        const Graph g = generate_gnp(n, p, rng.next());
        REQUIRE(coeffs(g) == oracles::domination_polynomial(g));
    }
}

TEST_CASE("parallel enumeration is deterministic")
{
    const Graph g = generate_gnp(22, 0.25, 77);
    const auto solo = coeffs(g, 1);
    CHECK(solo == coeffs(g, 2));
    CHECK(solo == coeffs(g, 8));
    CHECK(solo == domination_polynomial(g, EnumOptions{32, 0}).coeffs); // auto workers
}

TEST_CASE("coefficient vector invariants")
{
    SplitMix64 rng(1717);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 1 + static_cast<int>(rng.next() % 12);
        const Graph g = generate_gnp(n, 0.4, rng.next());
        const auto d = coeffs(g);
        REQUIRE(static_cast<int>(d.size()) == n + 1);
        REQUIRE(d[0] == 0);
        REQUIRE(d[static_cast<std::size_t>(n)] == 1);
        BigInt total = 0;
        for (int k = 0; k <= n; ++k) {
            REQUIRE(d[static_cast<std::size_t>(k)] >= 0);
            REQUIRE(d[static_cast<std::size_t>(k)] <= binomial(n, k));
            total += d[static_cast<std::size_t>(k)];
        }
        REQUIRE(total <= (BigInt(1) << n));
    }
}

TEST_CASE("capacity errors")
{
    const Graph g = generate_gnp(40, 0.1, 5);
    CHECK_THROWS_AS(domination_polynomial(g, EnumOptions{32, 1}), CapacityError);
    CHECK_THROWS_AS(e_statistics(g, 3, EnumOptions{32, 1}), CapacityError);
    CHECK_THROWS_AS(domination_polynomial(g, EnumOptions{70, 1}), std::invalid_argument);
    // raising the limit admits graphs above the default
    const Graph dense = generate_gnp(34, 0.6, 5);
    CHECK_THROWS_AS(domination_polynomial(dense, EnumOptions{32, 1}), CapacityError);
    CHECK_NOTHROW(domination_polynomial(dense, EnumOptions{34, 1}));
}

TEST_CASE("e-statistics classification")
{
    SUBCASE("path on three vertices, k = 1")
    {
        const EStatistics stats = e_statistics(generate_path(3), 1);
        REQUIRE(stats.table.size() == 3);
        CHECK(stats.at(0) == 1);          // {1} dominates everything
        CHECK(stats.at(0b001) == 1);      // {2} misses vertex 0
        CHECK(stats.at(0b100) == 1);      // {0} misses vertex 2
    }
    SUBCASE("complete graphs have a single empty key")
    {
        for (int k = 1; k <= 5; ++k) {
            const EStatistics stats = e_statistics(generate_complete(5), k);
            REQUIRE(stats.table.size() == 1);
            CHECK(stats.at(0) == binomial_u64(5, k));
        }
    }
    SUBCASE("k = 0 leaves everything undominated")
    {
        const EStatistics stats = e_statistics(generate_path(4), 0);
        REQUIRE(stats.table.size() == 1);
        CHECK(stats.at(0b1111) == 1);
    }
    SUBCASE("matches the subset-by-subset oracle")
    {
        SplitMix64 rng(355);
        for (int trial = 0; trial < 15; ++trial) {
            const int n = 2 + static_cast<int>(rng.next() % 8);
            const Graph g = generate_gnp(n, 0.35, rng.next());
            for (int k = 0; k <= n; ++k)
                REQUIRE(e_statistics(g, k).table == oracles::e_statistics(g, k));
        }
    }
    SUBCASE("completeness and consistency invariants")
    {
        SplitMix64 rng(81);
        for (int trial = 0; trial < 10; ++trial) {
            const int n = 2 + static_cast<int>(rng.next() % 9);
            const Graph g = generate_gnp(n, 0.3, rng.next());
            const auto d = coeffs(g);
            for (int k = 0; k <= n; ++k) {
                const EStatistics stats = e_statistics(g, k);
                std::uint64_t sum = 0;
                for (const auto& [mask, count] : stats.table) {
                    REQUIRE(count > 0); // zero-count keys omitted
                    sum += count;
                }
                REQUIRE(sum == binomial_u64(n, k));
                REQUIRE(BigInt(stats.at(0)) == d[static_cast<std::size_t>(k)]);
            }
        }
    }
    CHECK_THROWS_AS(e_statistics(generate_path(3), 4), std::invalid_argument);
}

TEST_CASE("dominator counts")
{
    const Graph g3 = generate_path(3);
    CHECK(dominator_count(g3, VertexSet::of(3, {0, 2})) == 1);
    CHECK(dominator_count(generate_path(4), VertexSet::of(4, {0})) == 2);
    for (int n : {2, 5}) {
        const Graph kn = generate_complete(n);
        CHECK(dominator_count(kn, VertexSet::full_set(n)) == n);
    }
    CHECK_THROWS_AS(dominator_count(g3, VertexSet(3)), std::invalid_argument);

    SplitMix64 rng(4242);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 9);
        const Graph g = generate_gnp(n, 0.4, rng.next());
        const std::uint64_t mask = 1 + rng.next() % ((std::uint64_t{1} << n) - 1);
        REQUIRE(dominator_count_mask(g, mask) == oracles::dominator_count(g, mask));
        REQUIRE(dominator_count(g, VertexSet::from_mask(n, mask)) ==
                oracles::dominator_count(g, mask));
    }
}

TEST_CASE("split counts")
{
    const Graph g3 = generate_path(3);
    CHECK(split_count(g3, VertexSet::of(3, {0, 2}), VertexSet::of(3, {0})) == 1);
    CHECK(split_count(g3, VertexSet::of(3, {0, 2}), VertexSet::of(3, {2})) == 1);
    CHECK(split_count(generate_complete(3), VertexSet::of(3, {0, 1}), VertexSet::of(3, {0})) == 0);

    CHECK_THROWS_AS(split_count(g3, VertexSet::of(3, {0, 2}), VertexSet(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(split_count(g3, VertexSet::of(3, {0, 2}), VertexSet::of(3, {0, 2})),
                    std::invalid_argument);
    CHECK_THROWS_AS(split_count(g3, VertexSet::of(3, {0, 2}), VertexSet::of(3, {1})),
                    std::invalid_argument);
}

TEST_CASE("ordered pair counts")
{
    CHECK(pair_count(generate_path(3), VertexSet::of(3, {0, 2})) == 2);
    CHECK(pair_count(generate_path(4), VertexSet::full_set(4)) ==
          oracles::pair_count(generate_path(4), 0b1111));
    for (int n : {3, 6}) {
        const Graph kn = generate_complete(n);
        CHECK(pair_count(kn, VertexSet::of(n, {0, 1})) == 0);
    }
    CHECK_THROWS_AS(pair_count(generate_path(3), VertexSet(3)), std::invalid_argument);

    SplitMix64 rng(515);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.next() % 7);
        const Graph g = generate_gnp(n, 0.35, rng.next());
        const std::uint64_t mask = 1 + rng.next() % ((std::uint64_t{1} << n) - 1);
        REQUIRE(pair_count_mask(g, mask) == oracles::pair_count(g, mask));
        REQUIRE(pair_count(g, VertexSet::from_mask(n, mask)) == oracles::pair_count(g, mask));
    }
}
