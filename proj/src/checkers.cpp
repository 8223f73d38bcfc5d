#include "dompoly/checkers.hpp"

#include "dompoly/graph_io.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace dompoly {

namespace {

    void check_word_graph(const Graph& g, const EnumOptions& options, const char* what)
    {
        if (g.order() > options.limit)
            throw CapacityError(std::string(what) + ": graph has " + std::to_string(g.order()) +
                                " vertices, over the enumeration limit " +
                                std::to_string(options.limit));
    }

    std::uint64_t closed_union_mask(const Graph& g, std::uint64_t mask)
    {
        std::uint64_t out = 0;
        while (mask) {
            out |= g.closed_mask64(std::countr_zero(mask));
            mask &= mask - 1;
        }
        return out;
    }

} // namespace

IdentityReport verify_increment_identity(const Graph& g, int k, const EnumOptions& options)
{
    check_word_graph(g, options, "verify_increment_identity");
    const int n = g.order();
    if (k < 0 || k >= n)
        throw std::invalid_argument("verify_increment_identity: k must be in [0, n-1]");

    const CoefficientVector cv = domination_polynomial(g, options);
    const EStatistics stats = e_statistics(g, k, options);
    const BigInt dk = cv.coeffs[static_cast<std::size_t>(k)];
    const BigInt dk1 = cv.coeffs[static_cast<std::size_t>(k) + 1];

    IdentityReport report;
    report.lhs = BigInt(k + 1) * (dk1 - dk);
    BigInt weighted_sum = 0;
    for (const auto& [t_mask, count] : stats.table)
        if (t_mask != 0)
            weighted_sum += BigInt(count) * dominator_count_mask(g, t_mask);
    report.rhs = weighted_sum - BigInt(2 * k + 1 - n) * dk;
    report.equal = report.lhs == report.rhs;
    return report;
}

RecurrenceReport verify_residual_recurrence(const Graph& g, int k, const EnumOptions& options)
{
    EnumOptions capped = options;
    capped.limit = std::min(capped.limit, 10); // quadratic in the key count
    check_word_graph(g, capped, "verify_residual_recurrence");
    const int n = g.order();
    if (k < 0 || k + 1 > n)
        throw std::invalid_argument("verify_residual_recurrence: need 0 <= k <= n-1");

    const EStatistics level_k = e_statistics(g, k, options);
    const EStatistics level_k1 = e_statistics(g, k + 1, options);

    std::set<std::uint64_t> keys;
    for (const auto& [mask, count] : level_k.table)
        if (mask != 0)
            keys.insert(mask);
    for (const auto& [mask, count] : level_k1.table)
        if (mask != 0)
            keys.insert(mask);

    RecurrenceReport report;
    for (std::uint64_t t_mask : keys) {
        const BigInt ek{level_k.at(t_mask)};
        const BigInt ek1{level_k1.at(t_mask)};
        const int nbhd = std::popcount(closed_union_mask(g, t_mask));

        BigInt cross = 0;
        for (const auto& [s_mask, count] : level_k.table)
            if (s_mask != t_mask && (t_mask & ~s_mask) == 0 && (s_mask & ~t_mask) != 0)
                cross += BigInt(count) * split_count_mask(g, s_mask, t_mask);

        RecurrenceReport::Row row;
        row.t_mask = t_mask;
        row.lhs = BigInt(k + 1) * (ek1 - ek);
        row.rhs = cross - BigInt(2 * k + 1 + nbhd - n) * ek;
        row.equal = row.lhs == row.rhs;
        report.all_equal = report.all_equal && row.equal;
        report.rows.push_back(std::move(row));
    }
    return report;
}

IdentityReport verify_pair_split_identity(const Graph& g, const VertexSet& s,
                                          const EnumOptions& options)
{
    check_word_graph(g, options, "verify_pair_split_identity");
    if (s.universe() != g.order())
        throw std::invalid_argument("vertex set does not match graph order");
    if (s.empty())
        throw std::invalid_argument("verify_pair_split_identity: s must be nonempty");

    const std::uint64_t s_mask = s.low_word();
    IdentityReport report;
    report.lhs = 0;
    for (std::uint64_t t = (s_mask - 1) & s_mask; t != 0; t = (t - 1) & s_mask)
        report.lhs += BigInt(split_count_mask(g, s_mask, t)) * dominator_count_mask(g, t);

    const BigInt ds{dominator_count_mask(g, s_mask)};
    const BigInt nbhd{std::popcount(closed_union_mask(g, s_mask))};
    report.rhs = ds * nbhd - ds * ds + pair_count_mask(g, s_mask);
    report.equal = report.lhs == report.rhs;
    return report;
}

namespace {

    // k in [n/2, n/2 + sqrt(n)/4], integer-exact: 2k >= n and (4k-2n)^2 <= n.
    bool in_concavity_range(long long n, long long k)
    {
        if (2 * k < n)
            return false;
        const long long t = 4 * k - 2 * n;
        return t * t <= n;
    }

} // namespace

InequalityReport verify_concavity_bound(const Graph& g, int k, const EnumOptions& options)
{
    check_word_graph(g, options, "verify_concavity_bound");
    const int n = g.order();
    if (!in_concavity_range(n, k))
        throw std::invalid_argument("verify_concavity_bound: k must lie in [n/2, n/2 + sqrt(n)/4]");
    if (k + 2 > n)
        throw std::invalid_argument("verify_concavity_bound: need k + 2 <= n");

    const CoefficientVector cv = domination_polynomial(g, options);
    const EStatistics stats = e_statistics(g, k, options);

    BigInt pair_sum = 0;
    for (const auto& [s_mask, count] : stats.table)
        if (s_mask != 0)
            pair_sum += BigInt(count) * pair_count_mask(g, s_mask);

    const auto& d = cv.coeffs;
    InequalityReport report;
    report.lhs = BigRational(BigInt(2) * d[static_cast<std::size_t>(k) + 1] -
                             d[static_cast<std::size_t>(k)] -
                             d[static_cast<std::size_t>(k) + 2]);
    report.rhs = BigRational(d[static_cast<std::size_t>(k)], BigInt(k + 1)) -
                 BigRational(pair_sum, BigInt(k + 1) * (k + 1));
    report.holds = report.lhs >= report.rhs;
    return report;
}

namespace {

    BigRational lower_bound_ratio(long long n, long long k, const DkLowerBound& dk_lower)
    {
        if (dk_lower.is_universal_vertex_bound())
            return BigRational(BigInt(k), BigInt(n)); // C(n-1,k-1) / C(n,k)
        return BigRational(dk_lower.value(), binomial(n, k));
    }

    void check_common_params(long long n, long long h, long long alpha)
    {
        if (n < 1)
            throw std::invalid_argument("n must be >= 1");
        if (alpha < 1)
            throw std::invalid_argument("alpha must be >= 1");
        if (h < 0 || h > n)
            throw std::invalid_argument("h must be in [0, n]");
    }

} // namespace

ConditionVerdict check_mode_condition(long long n, long long h, long long k, long long alpha,
                                      const DkLowerBound& dk_lower)
{
    check_common_params(n, h, alpha);
    if (2 * k < n || k > n)
        throw std::invalid_argument("check_mode_condition: k must be in [n/2, n]");
    if (2 * k + 1 - n <= 0)
        throw std::invalid_argument("check_mode_condition: need 2k + 1 - n > 0");

    ConditionVerdict verdict;
    verdict.n = n;
    verdict.k = k;
    verdict.h = h;
    verdict.alpha = alpha;
    verdict.lhs = lower_bound_ratio(n, k, dk_lower);
    verdict.rhs = (BigRational(BigInt(n) * n) * binomial_ratio(n, k, alpha + 1) +
                   BigRational(alpha) * binomial_ratio(n, k, h)) /
                  BigRational(BigInt(2 * k + 1 - n));
    verdict.holds = verdict.lhs > verdict.rhs;
    return verdict;
}

ConditionVerdict check_concavity_condition(long long n, long long h, long long k,
                                           long long alpha, const DkLowerBound& dk_lower)
{
    check_common_params(n, h, alpha);
    if (!in_concavity_range(n, k))
        throw std::invalid_argument(
            "check_concavity_condition: k must lie in [n/2, n/2 + sqrt(n)/4]");

    ConditionVerdict verdict;
    verdict.n = n;
    verdict.k = k;
    verdict.h = h;
    verdict.alpha = alpha;
    verdict.lhs = lower_bound_ratio(n, k, dk_lower);
    verdict.rhs = (BigRational(BigInt(n) * n * n) * binomial_ratio(n, k, alpha + 1) +
                   BigRational(2 * alpha * alpha) * binomial_ratio(n, k, h)) /
                  BigRational(BigInt(k + 1));
    verdict.holds = verdict.lhs > verdict.rhs;
    return verdict;
}

ConstructionReport check_construction_chain(long long n)
{
    if (n < 2)
        throw std::invalid_argument("check_construction_chain: n must be >= 2");

    ConstructionReport report;
    report.n = n;
    report.degree = construction_degree(n);
    report.in_theorem_range = n >= (1LL << 20);

    const long long d = report.degree;
    // degenerate when the base degree leaves no room at the top of the k range
    const long long k_top_guard = n / 2;
    if (d >= n || n - k_top_guard - d - 1 < 0) {
        report.applicable = false;
        report.all_hold = false;
        return report;
    }
    report.applicable = true;

    const BigRational half(1, 2);
    const BigInt pow_d1 = BigInt(1) << static_cast<unsigned>(d - 1);
    const BigInt pow_d2 = BigInt(1) << static_cast<unsigned>(d + 2);

    bool all = true;
    for (long long k = (n + 1) / 2; le_twice_log2(999 * (2 * k - n), n); ++k) {
        ConstructionKReport per_k;
        per_k.k = k;

        ChainLink survival;
        survival.name = "isolated-miss-fraction";
        survival.lhs = BigRational(1) - BigRational(BigInt(n - 2), pow_d1);
        survival.rhs = half;
        survival.holds = survival.lhs >= survival.rhs;
        per_k.links.push_back(survival);

        ChainLink ratio_power;
        ratio_power.name = "binomial-ratio-power";
        {
            const BigInt num = n - k - d - 1, den = n - d;
            BigRational lhs(boost::multiprecision::pow(num, static_cast<unsigned>(d + 1)),
                            boost::multiprecision::pow(den, static_cast<unsigned>(d + 1)));
            ratio_power.lhs = lhs;
            ratio_power.rhs = BigRational(BigInt(1), pow_d2);
            ratio_power.holds = ratio_power.lhs >= ratio_power.rhs;
        }
        per_k.links.push_back(ratio_power);

        ChainLink power_floor;
        power_floor.name = "power-vs-64n";
        power_floor.lhs = BigRational(BigInt(1), pow_d2);
        power_floor.rhs = BigRational(BigInt(1), 64 * BigInt(n));
        power_floor.holds = power_floor.lhs >= power_floor.rhs;
        per_k.links.push_back(power_floor);

        ChainLink closing;
        closing.name = "closing-inequality";
        closing.lhs = BigRational(BigInt(n - 1) * (d + 1), 128 * BigInt(n));
        closing.rhs = BigRational(BigInt(2 * k + 1 - n));
        closing.strict = true;
        closing.holds = closing.lhs > closing.rhs;
        per_k.links.push_back(closing);

        for (const auto& link : per_k.links)
            per_k.all_hold = per_k.all_hold && link.holds;
        all = all && per_k.all_hold;
        report.per_k.push_back(std::move(per_k));
    }
    report.all_hold = all;
    return report;
}

long long ceil_half_plus_log2(long long n)
{
    if (n < 1)
        throw std::invalid_argument("ceil_half_plus_log2: n must be >= 1");
    // smallest m with 2m - n >= 2*log2(n), i.e. 2^(2m-n) >= n^2
    long long m = (n + 1) / 2 + floor_log2(static_cast<unsigned long long>(n));
    while (2 * m - n < 0 || (BigInt(1) << static_cast<unsigned>(2 * m - n)) < BigInt(n) * n)
        ++m;
    while (m > 0 && 2 * (m - 1) - n >= 0 &&
           (BigInt(1) << static_cast<unsigned>(2 * (m - 1) - n)) >= BigInt(n) * n)
        --m;
    return m;
}

} // namespace dompoly
