#include "dompoly/sampling.hpp"

#include "dompoly/rng.hpp"

#include <boost/math/distributions/binomial.hpp>

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace dompoly {

namespace {

    // Selection sampling: scan vertices 0..n-1, picking v with probability
    // (needed remaining) / (vertices remaining). The accept test
    // z * (n - v) < needed * 2^64 is done in 128-bit integers, one draw per
    // scanned vertex.
    void sample_k_subset(int n, int k, SplitMix64& rng, std::vector<int>& out)
    {
        out.clear();
        int needed = k;
        for (int v = 0; v < n && needed > 0; ++v) {
            const std::uint64_t z = rng.next();
            const auto lhs = static_cast<unsigned __int128>(z) * static_cast<unsigned>(n - v);
            const auto rhs = static_cast<unsigned __int128>(needed) << 64;
            if (lhs < rhs) {
                out.push_back(v);
                --needed;
            }
        }
    }

    bool sample_dominates(const Graph& g, const std::vector<int>& subset, VertexSet& scratch)
    {
        scratch = VertexSet(g.order());
        for (int v : subset)
            scratch |= g.closed_neighborhood_of(v);
        return scratch.is_full();
    }

    int resolve_workers(int workers)
    {
        if (workers < 0)
            throw std::invalid_argument("workers must be >= 0");
        if (workers > 0)
            return workers;
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }

} // namespace

Estimate estimate_rk(const Graph& g, int k, std::uint64_t samples, std::uint64_t seed,
                     double level, int workers)
{
    const int n = g.order();
    if (k < 1 || k > n)
        throw std::invalid_argument("estimate_rk: k must be in [1, n]");
    if (samples < 1)
        throw std::invalid_argument("estimate_rk: need at least one sample");
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("estimate_rk: level must be in (0, 1)");

    const int pool_size = resolve_workers(workers);
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> hits{0};
    constexpr std::uint64_t chunk = 1024;

    auto body = [&] {
        std::vector<int> subset;
        VertexSet scratch(n);
        std::uint64_t local = 0;
        for (;;) {
            const std::uint64_t begin = next.fetch_add(chunk, std::memory_order_relaxed);
            if (begin >= samples)
                break;
            const std::uint64_t end = std::min(begin + chunk, samples);
            for (std::uint64_t i = begin; i < end; ++i) {
                SplitMix64 rng(SplitMix64::derive(seed, i));
                sample_k_subset(n, k, rng, subset);
                if (sample_dominates(g, subset, scratch))
                    ++local;
            }
        }
        hits.fetch_add(local, std::memory_order_relaxed);
    };

    if (pool_size == 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(pool_size));
        for (int w = 0; w < pool_size; ++w)
            pool.emplace_back(body);
        for (auto& t : pool)
            t.join();
    }

    Estimate est;
    est.k = k;
    est.samples = samples;
    est.hits = hits.load();
    est.point = BigRational(BigInt(est.hits), BigInt(samples));
    est.seed = seed;
    est.level = level;

    using binom_dist = boost::math::binomial_distribution<double>;
    const double risk = (1.0 - level) / 2.0;
    const auto trials = static_cast<double>(samples);
    const auto successes = static_cast<double>(est.hits);
    est.ci_low = binom_dist::find_lower_bound_on_p(trials, successes, risk);
    est.ci_high = binom_dist::find_upper_bound_on_p(trials, successes, risk);
    return est;
}

CompareVerdict compare_coefficients(const Graph& g, int k, std::uint64_t budget,
                                    std::uint64_t seed, double level, int workers)
{
    const int n = g.order();
    if (k < 1 || k + 1 > n)
        throw std::invalid_argument("compare_coefficients: need 1 <= k and k + 1 <= n");
    if (budget < 2)
        throw std::invalid_argument("compare_coefficients: budget must be >= 2");

    const Estimate lo = estimate_rk(g, k, budget / 2, SplitMix64::derive(seed, 0), level, workers);
    const Estimate hi =
        estimate_rk(g, k + 1, budget - budget / 2, SplitMix64::derive(seed, 1), level, workers);

    // exact interval endpoints for d_k and d_{k+1}: dyadic CI bounds times
    // exact binomials
    const BigRational ck(binomial(n, k));
    const BigRational ck1(binomial(n, k + 1));
    const BigRational dk_low = BigRational(lo.ci_low) * ck;
    const BigRational dk_high = BigRational(lo.ci_high) * ck;
    const BigRational dk1_low = BigRational(hi.ci_low) * ck1;
    const BigRational dk1_high = BigRational(hi.ci_high) * ck1;

    if (dk_low > dk1_high)
        return CompareVerdict::Greater;
    if (dk_high < dk1_low)
        return CompareVerdict::Less;
    return CompareVerdict::Inconclusive;
}

const char* to_string(CompareVerdict v)
{
    switch (v) {
    case CompareVerdict::Greater: return "greater";
    case CompareVerdict::Less: return "less";
    case CompareVerdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

} // namespace dompoly
