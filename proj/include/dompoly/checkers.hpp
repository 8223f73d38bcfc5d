#ifndef DOMPOLY_CHECKERS_HPP
#define DOMPOLY_CHECKERS_HPP

#include "dompoly/enumeration.hpp"
#include "dompoly/graph.hpp"
#include "dompoly/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dompoly {

/// Exact two-sided evaluation of a counting identity.
struct IdentityReport {
    BigInt lhs, rhs;
    bool equal = false;
};

/// Coefficient-increment identity ("2.2"): for 0 <= k < n,
///   (k+1) * (d_{k+1} - d_k)  =  sum over nonempty T of E_k^T * D(T)
///                               - (2k + 1 - n) * d_k.
IdentityReport verify_increment_identity(const Graph& g, int k,
                                         const EnumOptions& options = {});

/// Per-T rows of the residual recurrence ("e-rec"): for nonempty T,
///   (k+1) * (E_{k+1}^T - E_k^T)  =  sum over keys S strictly above T of
///       E_k^S * D(S:T)  -  (2k + 1 + |N(T)| - n) * E_k^T.
struct RecurrenceReport {
    struct Row {
        std::uint64_t t_mask = 0;
        BigInt lhs, rhs;
        bool equal = false;
    };
    std::vector<Row> rows; // every nonempty T keyed at level k or k+1
    bool all_equal = true;
};

RecurrenceReport verify_residual_recurrence(const Graph& g, int k,
                                            const EnumOptions& options = {});

/// Pair-split identity ("dprime") for nonempty S:
///   sum over nonempty proper T of S of D(S:T) * D(T)
///     =  D(S) * |N(S)| - D(S)^2 + D'(S).
IdentityReport verify_pair_split_identity(const Graph& g, const VertexSet& s,
                                          const EnumOptions& options = {});

/// Concavity lower bound ("2.4") for k in [n/2, n/2 + sqrt(n)/4], k+2 <= n:
///   2 d_{k+1} - d_k - d_{k+2}  >=  d_k / (k+1)
///                                  - (sum over nonempty S of E_k^S * D'(S)) / (k+1)^2.
/// Exact rationals on both sides; `holds` reports the comparison verbatim
/// (the bound needs large n and genuinely fails on small dense graphs).
struct InequalityReport {
    BigRational lhs, rhs;
    bool holds = false;
};

InequalityReport verify_concavity_bound(const Graph& g, int k,
                                        const EnumOptions& options = {});

/// d_k lower bound fed into the condition checkers. Either an explicit exact
/// value, or the universal-vertex bound C(n-1, k-1), which is kept as the
/// ratio k/n relative to C(n,k) so huge n never expands a binomial.
class DkLowerBound {
public:
    static DkLowerBound exact(BigInt value) { return DkLowerBound{std::move(value), false}; }
    static DkLowerBound universal_vertex() { return DkLowerBound{BigInt{}, true}; }

    bool is_universal_vertex_bound() const { return universal_; }
    const BigInt& value() const { return value_; }

private:
    DkLowerBound(BigInt value, bool universal) : value_(std::move(value)), universal_(universal) {}
    BigInt value_;
    bool universal_;
};

/// Outcome of a condition-inequality check. lhs/rhs are exact rationals
/// normalized by C(n,k).
struct ConditionVerdict {
    bool holds = false;
    BigRational lhs, rhs;
    long long n = 0, k = 0, h = 0, alpha = 0;
    std::string normalization = "C(n,k)";
};

/// Mode condition ("1.4"): with k in [n/2, n], 2k+1-n > 0, alpha >= 1,
/// holds iff dk_lower > (n^2 C(n-alpha-1,k) + alpha C(n-h,k)) / (2k+1-n).
ConditionVerdict check_mode_condition(long long n, long long h, long long k, long long alpha,
                                      const DkLowerBound& dk_lower);

/// Concavity condition ("1.5"): with k in [n/2, n/2 + sqrt(n)/4], alpha >= 1,
/// holds iff dk_lower > (n^3 C(n-alpha-1,k) + 2 alpha^2 C(n-h,k)) / (k+1).
ConditionVerdict check_concavity_condition(long long n, long long h, long long k,
                                           long long alpha, const DkLowerBound& dk_lower);

/// One inequality link of the universal-vertex construction chain.
struct ChainLink {
    std::string name;
    BigRational lhs, rhs;
    bool strict = false; // strict comparison required
    bool holds = false;
};

struct ConstructionKReport {
    long long k = 0;
    std::vector<ChainLink> links;
    bool all_hold = true;
};

struct ConstructionReport {
    long long n = 0;
    int degree = 0; // base degree 2*floor(log2(4n)/2) + 2
    bool applicable = false;
    bool in_theorem_range = false; // n >= 2^20
    std::vector<ConstructionKReport> per_k;
    bool all_hold = false;
};

/// Verifies every arithmetic link of the girth-5 construction chain for every
/// integer k in [n/2, n/2 + log2(n)/999]:
///   1 - (n-2)*2^(1-d)        >= 1/2
///   ((n-k-d-1)/(n-d))^(d+1)  >= 2^-(d+2)
///   2^-(d+2)                 >= 1/(64n)
///   (n-1)/2 * (d+1) / (64n)  >  2k+1-n
/// All in exact rational arithmetic.
ConstructionReport check_construction_chain(long long n);

/// Smallest integer m with m >= n/2 + log2(n), bit-exact; used by the CLI's
/// --auto-params to derive k for the mode condition.
long long ceil_half_plus_log2(long long n);

} // namespace dompoly

#endif
