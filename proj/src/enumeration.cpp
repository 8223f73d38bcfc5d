#include "dompoly/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace dompoly {

namespace {

    void check_capacity(const Graph& g, const EnumOptions& options, const char* what)
    {
        if (options.limit < 1 || options.limit > 64)
            throw std::invalid_argument("enumeration limit must be in [1, 64]");
        if (g.order() > options.limit)
            throw CapacityError(std::string(what) + ": graph has " + std::to_string(g.order()) +
                                " vertices, over the enumeration limit " +
                                std::to_string(options.limit) +
                                "; use the sampling commands for large graphs");
    }

    int resolve_workers(const EnumOptions& options)
    {
        if (options.workers < 0)
            throw std::invalid_argument("workers must be >= 0");
        if (options.workers > 0)
            return options.workers;
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : static_cast<int>(hw);
    }

    // Depth-first subset enumeration over vertex in/out decisions with an
    // incremental coverage multiset:
    //   cover[v]     = how many chosen u have v in N[u]
    //   potential[v] = how many chosen-or-undecided u have v in N[u]
    // A node whose chosen set already dominates contributes a whole binomial
    // row at once (domination is monotone under supersets); a node where some
    // potential[v] reaches 0 contributes nothing (v can no longer be covered).
    struct PolynomialDfs {
        int n;
        std::vector<std::vector<int>> closed; // N[u] as index lists
        std::vector<std::uint16_t> cover, potential;
        int uncovered;
        std::vector<std::uint64_t> counts; // indexed by subset size

        explicit PolynomialDfs(const Graph& g)
            : n(g.order()),
              closed(static_cast<std::size_t>(n)),
              cover(static_cast<std::size_t>(n), 0),
              potential(static_cast<std::size_t>(n), 0),
              uncovered(n),
              counts(static_cast<std::size_t>(n) + 1, 0)
        {
            for (int v = 0; v < n; ++v) {
                auto& row = closed[static_cast<std::size_t>(v)];
                row = g.neighbors(v);
                row.push_back(v);
                for (int u : row)
                    ++potential[static_cast<std::size_t>(u)];
            }
        }

        void include(int u)
        {
            for (int v : closed[static_cast<std::size_t>(u)])
                if (cover[static_cast<std::size_t>(v)]++ == 0)
                    --uncovered;
        }

        void undo_include(int u)
        {
            for (int v : closed[static_cast<std::size_t>(u)])
                if (--cover[static_cast<std::size_t>(v)] == 0)
                    ++uncovered;
        }

        bool exclude(int u) // false if the subtree can no longer dominate
        {
            bool alive = true;
            for (int v : closed[static_cast<std::size_t>(u)])
                if (--potential[static_cast<std::size_t>(v)] == 0)
                    alive = false;
            return alive;
        }

        void undo_exclude(int u)
        {
            for (int v : closed[static_cast<std::size_t>(u)])
                ++potential[static_cast<std::size_t>(v)];
        }

        void fold(int depth, int chosen)
        {
            const int rem = n - depth;
            for (int j = 0; j <= rem; ++j)
                counts[static_cast<std::size_t>(chosen + j)] += binomial_u64(rem, j);
        }

        void run(int depth, int chosen)
        {
            if (uncovered == 0) {
                fold(depth, chosen);
                return;
            }
            if (depth == n)
                return;
            include(depth);
            run(depth + 1, chosen + 1);
            undo_include(depth);
            if (exclude(depth))
                run(depth + 1, chosen);
            undo_exclude(depth);
        }

        // Applies the first `split` in/out decisions from the bits of `task`,
        // then explores the remaining subtree. A subtree that folds or dies
        // while the prefix is still being applied is shared by several task
        // ids; only the all-zero-suffix representative counts it.
        void run_task(std::uint64_t task, int split)
        {
            int chosen = 0;
            bool settled = false;
            int depth = 0;
            for (; depth < split; ++depth) {
                if (uncovered == 0) {
                    if ((task >> depth) == 0)
                        fold(depth, chosen);
                    settled = true;
                    break;
                }
                if ((task >> depth) & 1) {
                    include(depth);
                    ++chosen;
                } else if (!exclude(depth)) {
                    // dead prefix: contributes nothing for every suffix
                    settled = true;
                    ++depth;
                    break;
                }
            }
            if (!settled)
                run(depth, chosen);
            // rewind to the pristine state for the next task
            for (int d = depth - 1; d >= 0; --d) {
                if ((task >> d) & 1)
                    undo_include(d);
                else
                    undo_exclude(d);
            }
        }
    };

    int split_depth(int n, int workers)
    {
        if (workers <= 1)
            return 0;
        // aim for ~64 tasks per worker, capped to keep prefixes cheap
        int depth = ceil_log2(static_cast<unsigned long long>(workers) * 64);
        return std::min({depth, n - 1, 16});
    }

} // namespace

CoefficientVector domination_polynomial(const Graph& g, const EnumOptions& options)
{
    check_capacity(g, options, "domination_polynomial");
    const int n = g.order();
    const int workers = resolve_workers(options);
    const int split = split_depth(n, workers);

    std::vector<std::uint64_t> totals(static_cast<std::size_t>(n) + 1, 0);
    if (split == 0) {
        PolynomialDfs dfs(g);
        dfs.run(0, 0);
        totals = dfs.counts;
    } else {
        const std::uint64_t tasks = std::uint64_t{1} << split;
        std::atomic<std::uint64_t> next{0};
        std::vector<std::vector<std::uint64_t>> partial(
            static_cast<std::size_t>(workers),
            std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                PolynomialDfs dfs(g);
                for (;;) {
                    std::uint64_t task = next.fetch_add(1, std::memory_order_relaxed);
                    if (task >= tasks)
                        break;
                    dfs.run_task(task, split);
                }
                partial[static_cast<std::size_t>(w)] = dfs.counts;
            });
        }
        for (auto& t : pool)
            t.join();
        for (const auto& p : partial)
            for (std::size_t k = 0; k < totals.size(); ++k)
                totals[k] += p[k]; // exact integer merge: order-independent
    }

    CoefficientVector out;
    out.coeffs.assign(totals.begin(), totals.end());
    return out;
}

namespace {

    struct EStatsDfs {
        int n, k;
        std::uint64_t full;
        std::vector<std::uint64_t> closed_mask;
        std::map<std::uint64_t, std::uint64_t>* table;

        void run(int depth, int chosen, std::uint64_t covered)
        {
            const int need = k - chosen;
            if (need == 0) {
                (*table)[full & ~covered] += 1;
                return;
            }
            const int rem = n - depth;
            if (need > rem)
                return;
            if (covered == full) {
                // every completion dominates: T stays empty
                (*table)[0] += binomial_u64(rem, need);
                return;
            }
            run(depth + 1, chosen + 1, covered | closed_mask[static_cast<std::size_t>(depth)]);
            run(depth + 1, chosen, covered);
        }
    };

} // namespace

EStatistics e_statistics(const Graph& g, int k, const EnumOptions& options)
{
    check_capacity(g, options, "e_statistics");
    const int n = g.order();
    if (k < 0 || k > n)
        throw std::invalid_argument("e_statistics: k must be in [0, n]");

    EStatistics out;
    out.k = k;
    EStatsDfs dfs;
    dfs.n = n;
    dfs.k = k;
    dfs.full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    dfs.closed_mask.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        dfs.closed_mask[static_cast<std::size_t>(v)] = g.closed_mask64(v);
    dfs.table = &out.table;
    dfs.run(0, 0, 0);
    return out;
}

int dominator_count(const Graph& g, const VertexSet& t)
{
    if (t.universe() != g.order())
        throw std::invalid_argument("vertex set does not match graph order");
    if (t.empty())
        throw std::invalid_argument("dominator_count: query set must be nonempty");
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (t.is_subset_of(g.closed_neighborhood_of(v)))
            ++count;
    return count;
}

int split_count(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    if (s.universe() != g.order() || t.universe() != g.order())
        throw std::invalid_argument("vertex set does not match graph order");
    if (t.empty())
        throw std::invalid_argument("split_count: t must be nonempty");
    if (t == s || !t.is_subset_of(s))
        throw std::invalid_argument("split_count: t must be a proper subset of s");
    const VertexSet rest = s - t;
    int count = 0;
    for (int v = 0; v < g.order(); ++v) {
        const VertexSet& nb = g.closed_neighborhood_of(v);
        if (rest.is_subset_of(nb) && !nb.intersects(t))
            ++count;
    }
    return count;
}

long long pair_count(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.order())
        throw std::invalid_argument("vertex set does not match graph order");
    if (s.empty())
        throw std::invalid_argument("pair_count: query set must be nonempty");
    const int n = g.order();
    std::vector<char> dominates_s(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        dominates_s[static_cast<std::size_t>(v)] =
            s.is_subset_of(g.closed_neighborhood_of(v)) ? 1 : 0;
    long long count = 0;
    for (int u1 = 0; u1 < n; ++u1) {
        if (dominates_s[static_cast<std::size_t>(u1)])
            continue;
        for (int u2 = 0; u2 < n; ++u2) {
            if (u2 == u1 || dominates_s[static_cast<std::size_t>(u2)])
                continue;
            VertexSet joint = g.closed_neighborhood_of(u1);
            joint |= g.closed_neighborhood_of(u2);
            if (s.is_subset_of(joint))
                ++count;
        }
    }
    return count;
}

int dominator_count_mask(const Graph& g, std::uint64_t t_mask)
{
    if (t_mask == 0)
        throw std::invalid_argument("dominator_count: query set must be nonempty");
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((t_mask & ~g.closed_mask64(v)) == 0)
            ++count;
    return count;
}

int split_count_mask(const Graph& g, std::uint64_t s_mask, std::uint64_t t_mask)
{
    if (t_mask == 0 || t_mask == s_mask || (t_mask & ~s_mask) != 0)
        throw std::invalid_argument("split_count: t must be a nonempty proper subset of s");
    const std::uint64_t rest = s_mask & ~t_mask;
    int count = 0;
    for (int v = 0; v < g.order(); ++v) {
        const std::uint64_t nb = g.closed_mask64(v);
        if ((rest & ~nb) == 0 && (nb & t_mask) == 0)
            ++count;
    }
    return count;
}

long long pair_count_mask(const Graph& g, std::uint64_t s_mask)
{
    if (s_mask == 0)
        throw std::invalid_argument("pair_count: query set must be nonempty");
    const int n = g.order();
    long long count = 0;
    for (int u1 = 0; u1 < n; ++u1) {
        const std::uint64_t n1 = g.closed_mask64(u1);
        if ((s_mask & ~n1) == 0)
            continue;
        for (int u2 = 0; u2 < n; ++u2) {
            if (u2 == u1)
                continue;
            const std::uint64_t n2 = g.closed_mask64(u2);
            if ((s_mask & ~n2) == 0)
                continue;
            if ((s_mask & ~(n1 | n2)) == 0)
                ++count;
        }
    }
    return count;
}

} // namespace dompoly
