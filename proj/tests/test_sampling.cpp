#include "dompoly/sampling.hpp"

#include "dompoly/enumeration.hpp"
#include "dompoly/graph_io.hpp"
#include "dompoly/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace dompoly;

TEST_CASE("degenerate hit rates")
{
    SUBCASE("complete graphs always dominate")
    {
        const Estimate est = estimate_rk(generate_complete(50), 5, 1000, 3);
        CHECK(est.hits == 1000);
        CHECK(est.point == 1);
        CHECK(est.ci_high == 1.0);
        CHECK(est.ci_low < 1.0);
        // all-hits Clopper-Pearson lower bound has the closed form (a/2)^(1/m)
        CHECK(est.ci_low == doctest::Approx(std::pow(0.025, 1.0 / 1000)).epsilon(1e-9));
    }
    SUBCASE("edgeless graphs never dominate below k = n")
    {
        const Estimate est = estimate_rk(generate_gnp(20, 0.0, 1), 5, 500, 9);
        CHECK(est.hits == 0);
        CHECK(est.point == 0);
        CHECK(est.ci_low == 0.0);
        CHECK(est.ci_high == doctest::Approx(1.0 - std::pow(0.025, 1.0 / 500)).epsilon(1e-9));
    }
}

TEST_CASE("estimates are reproducible and worker-independent")
{
    const Graph g = generate_gnp(40, 0.3, 2024);
    const Estimate a = estimate_rk(g, 12, 4000, 11, 0.95, 1);
    const Estimate b = estimate_rk(g, 12, 4000, 11, 0.95, 4);
    CHECK(a.hits == b.hits);
    CHECK(a.ci_low == b.ci_low);
    CHECK(a.ci_high == b.ci_high);
    CHECK(a.seed == 11);
    CHECK(0 < a.hits);
    CHECK(a.hits < 4000); // mid-range rate so the tally is informative
}

TEST_CASE("sampled subsets have the right size distribution")
{
    // indirect check through a graph where exactly the subsets containing
    // vertex 0 dominate: hit rate estimates k/n
    const Graph g = generate_star(25);
    const Estimate est = estimate_rk(g, 5, 20000, 21);
    // true r_5 = C(24,4)/C(25,5) = 5/25 = 0.2
    CHECK(est.ci_low <= 0.2);
    CHECK(est.ci_high >= 0.2);
    CHECK(std::abs(static_cast<double>(est.hits) / 20000.0 - 0.2) < 0.02);
}

TEST_CASE("interval covers the exact star ratio")
{
    const Graph g = generate_star(100);
    const Estimate est = estimate_rk(g, 10, 100000, 7);
    CHECK(est.ci_low <= 0.1);
    CHECK(est.ci_high >= 0.1);
    CHECK(est.ci_high - est.ci_low < 0.01);
}

TEST_CASE("estimates agree with exact enumeration on small graphs")
{
    SplitMix64 rng(606);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 8 + static_cast<int>(rng.next() % 5);
        const Graph g = generate_gnp(n, 0.35, rng.next());
        const auto d = domination_polynomial(g).coeffs;
        const int k = 2 + static_cast<int>(rng.next() % (n - 2));
        const Estimate est = estimate_rk(g, k, 30000, rng.next());
        const BigRational truth(d[static_cast<std::size_t>(k)], binomial(n, k));
        REQUIRE(BigRational(est.ci_low) <= truth);
        REQUIRE(BigRational(est.ci_high) >= truth);
    }
}

TEST_CASE("coefficient comparison")
{
    SUBCASE("complete graph: d_k < d_{k+1} below the middle")
    {
        CHECK(compare_coefficients(generate_complete(30), 10, 20000, 5) ==
              CompareVerdict::Less);
    }
    SUBCASE("tiny budgets are inconclusive")
    {
        CHECK(compare_coefficients(generate_gnp(30, 0.3, 8), 14, 40, 5) ==
              CompareVerdict::Inconclusive);
    }
    SUBCASE("never contradicts exact enumeration")
    {
        SplitMix64 rng(909);
        for (int trial = 0; trial < 8; ++trial) {
            const int n = 10 + static_cast<int>(rng.next() % 6);
            const Graph g = generate_gnp(n, 0.3, rng.next());
            const auto d = domination_polynomial(g).coeffs;
            const int k = 1 + static_cast<int>(rng.next() % (n - 1));
            const CompareVerdict v = compare_coefficients(g, k, 20000, rng.next());
            if (v == CompareVerdict::Greater)
                REQUIRE(d[static_cast<std::size_t>(k)] > d[static_cast<std::size_t>(k) + 1]);
            if (v == CompareVerdict::Less)
                REQUIRE(d[static_cast<std::size_t>(k)] < d[static_cast<std::size_t>(k) + 1]);
        }
    }
}

TEST_CASE("sampling validation")
{
    const Graph g = generate_star(10);
    CHECK_THROWS_AS(estimate_rk(g, 0, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_rk(g, 11, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_rk(g, 3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_rk(g, 3, 100, 1, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(compare_coefficients(g, 10, 100, 1), std::invalid_argument);
}
