#ifndef DOMPOLY_ENUMERATION_HPP
#define DOMPOLY_ENUMERATION_HPP

#include "dompoly/graph.hpp"
#include "dompoly/numeric.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace dompoly {

/// Raised when a graph is too large for exhaustive enumeration.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumOptions {
    /// Enumeration refuses graphs with more vertices than this. Counts are
    /// kept in machine words, which is exact up to the hard cap of 64
    /// (C(64,32) < 2^63).
    int limit = 32;
    /// 0 = use hardware concurrency. The result never depends on this.
    int workers = 0;
};

/// Exact coefficients d_0..d_n of the domination polynomial. d_0 = 0 for
/// every graph (the empty set dominates nothing).
struct CoefficientVector {
    std::vector<BigInt> coeffs;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// For fixed k, the classification of all k-subsets S by their undominated
/// set T = V \ N(S). Keys are vertex masks (order <= 64); zero-count keys
/// are omitted. table[0] is d_k.
struct EStatistics {
    int k = 0;
    std::map<std::uint64_t, std::uint64_t> table;

    std::uint64_t at(std::uint64_t t_mask) const
    {
        auto it = table.find(t_mask);
        return it == table.end() ? 0 : it->second;
    }
};

CoefficientVector domination_polynomial(const Graph& g, const EnumOptions& options = {});

EStatistics e_statistics(const Graph& g, int k, const EnumOptions& options = {});

/// D(t): number of vertices v whose closed neighborhood contains t. t nonempty.
int dominator_count(const Graph& g, const VertexSet& t);

/// D(s:t): vertices dominating s \ t whose closed neighborhood avoids t.
/// Requires empty != t and t a proper subset of s.
int split_count(const Graph& g, const VertexSet& s, const VertexSet& t);

/// D'(s): ordered pairs (u1, u2) where neither singleton dominates s but the
/// pair does. s nonempty.
long long pair_count(const Graph& g, const VertexSet& s);

// Mask forms used by the checkers on word-sized graphs.
int dominator_count_mask(const Graph& g, std::uint64_t t_mask);
int split_count_mask(const Graph& g, std::uint64_t s_mask, std::uint64_t t_mask);
long long pair_count_mask(const Graph& g, std::uint64_t s_mask);

} // namespace dompoly

#endif
