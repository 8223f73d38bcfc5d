// Test-only brute-force oracles. These deliberately avoid the engine's mask
// and incremental-coverage machinery: domination is recomputed from scratch
// through adjacency lists for every subset, so agreement with the engine is
// meaningful.
#ifndef DOMPOLY_TESTS_ORACLES_HPP
#define DOMPOLY_TESTS_ORACLES_HPP

#include "dompoly/graph.hpp"
#include "dompoly/numeric.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

namespace oracles {

inline bool subset_dominates(const dompoly::Graph& g, std::uint64_t subset)
{
    const int n = g.order();
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (!((subset >> v) & 1))
            continue;
        covered[static_cast<std::size_t>(v)] = 1;
        for (int u : g.neighbors(v))
            covered[static_cast<std::size_t>(u)] = 1;
    }
    for (char c : covered)
        if (!c)
            return false;
    return true;
}

inline std::vector<dompoly::BigInt> domination_polynomial(const dompoly::Graph& g)
{
    const int n = g.order();
    std::vector<dompoly::BigInt> d(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset)
        if (subset_dominates(g, subset))
            d[static_cast<std::size_t>(std::popcount(subset))] += 1;
    return d;
}

inline std::uint64_t undominated_set(const dompoly::Graph& g, std::uint64_t subset)
{
    const int n = g.order();
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (!((subset >> v) & 1))
            continue;
        covered[static_cast<std::size_t>(v)] = 1;
        for (int u : g.neighbors(v))
            covered[static_cast<std::size_t>(u)] = 1;
    }
    std::uint64_t t = 0;
    for (int v = 0; v < n; ++v)
        if (!covered[static_cast<std::size_t>(v)])
            t |= std::uint64_t{1} << v;
    return t;
}

inline std::map<std::uint64_t, std::uint64_t> e_statistics(const dompoly::Graph& g, int k)
{
    const int n = g.order();
    std::map<std::uint64_t, std::uint64_t> table;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset)
        if (std::popcount(subset) == k)
            table[undominated_set(g, subset)] += 1;
    return table;
}

// |{v : {v} dominates t}| straight from the definition.
inline int dominator_count(const dompoly::Graph& g, std::uint64_t t_mask)
{
    const int n = g.order();
    int count = 0;
    for (int v = 0; v < n; ++v) {
        bool all = true;
        for (int w = 0; w < n && all; ++w)
            if ((t_mask >> w) & 1)
                all = (w == v) || g.adjacent(v, w);
        if (all)
            ++count;
    }
    return count;
}

inline long long pair_count(const dompoly::Graph& g, std::uint64_t s_mask)
{
    const int n = g.order();
    auto dominates_s = [&](std::uint64_t vertices) {
        for (int w = 0; w < n; ++w) {
            if (!((s_mask >> w) & 1))
                continue;
            bool covered = false;
            for (int v = 0; v < n && !covered; ++v)
                if ((vertices >> v) & 1)
                    covered = (v == w) || g.adjacent(v, w);
            if (!covered)
                return false;
        }
        return true;
    };
    long long count = 0;
    for (int u1 = 0; u1 < n; ++u1)
        for (int u2 = 0; u2 < n; ++u2) {
            if (u1 == u2)
                continue;
            const std::uint64_t first = std::uint64_t{1} << u1;
            const std::uint64_t second = std::uint64_t{1} << u2;
            if (!dominates_s(first) && !dominates_s(second) && dominates_s(first | second))
                ++count;
        }
    return count;
}

} // namespace oracles

#endif
