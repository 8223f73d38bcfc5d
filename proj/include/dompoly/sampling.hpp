#ifndef DOMPOLY_SAMPLING_HPP
#define DOMPOLY_SAMPLING_HPP

#include "dompoly/graph.hpp"
#include "dompoly/numeric.hpp"

#include <cstdint>

namespace dompoly {

/// Monte-Carlo estimate of r_k = d_k / C(n,k) with Clopper-Pearson
/// (exact-method) binomial confidence bounds.
struct Estimate {
    int k = 0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    BigRational point;   // hits / samples
    double ci_low = 0.0; // two-sided bounds at `level`
    double ci_high = 1.0;
    std::uint64_t seed = 0;
    double level = 0.95;
};

/// Samples uniform k-subsets (selection sampling driven by a per-sample
/// SplitMix64 stream; sample i uses seed SplitMix64::derive(seed, i)) and
/// counts dominating ones. Identical inputs give identical estimates for any
/// worker count.
Estimate estimate_rk(const Graph& g, int k, std::uint64_t samples, std::uint64_t seed,
                     double level = 0.95, int workers = 0);

enum class CompareVerdict { Greater, Less, Inconclusive };

/// Estimates the sign of d_k - d_{k+1} from two independent estimates scaled
/// by exact binomials. Returns a verdict only when the scaled confidence
/// intervals are disjoint; never guesses.
CompareVerdict compare_coefficients(const Graph& g, int k, std::uint64_t budget,
                                    std::uint64_t seed, double level = 0.95, int workers = 0);

const char* to_string(CompareVerdict v);

} // namespace dompoly

#endif
