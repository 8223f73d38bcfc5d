#ifndef DOMPOLY_ANALYSIS_HPP
#define DOMPOLY_ANALYSIS_HPP

#include "dompoly/enumeration.hpp"
#include "dompoly/numeric.hpp"

#include <optional>
#include <vector>

namespace dompoly {

/// The down-then-up pattern witnessing non-unimodality: coeffs[index-1] >
/// coeffs[index] < coeffs[index+1] at the smallest such index.
struct ViolationWitness {
    int index = 0;
    BigInt before, at, after;
};

struct AnalysisReport {
    bool unimodal = false;
    /// Largest peak index (ties resolve to the right); absent when not unimodal.
    std::optional<int> mode;
    std::optional<ViolationWitness> first_violation;
    /// All l with 2*coeffs[l+1] > coeffs[l] + coeffs[l+2] (strict concavity).
    std::vector<int> concavity_window;
    /// Whether d_k / C(n,k) is non-decreasing in k.
    bool ratio_monotone = false;
};

AnalysisReport analyze(const CoefficientVector& cv);

struct RatioSequence {
    std::vector<BigRational> ratios; // d_k / C(n,k), k = 0..n
    bool non_decreasing = false;
};

RatioSequence ratio_sequence(const CoefficientVector& cv);

/// true iff cv is unimodal with mode in [n/2, n/2 + log2(n) + 2]. The
/// fractional endpoints are compared exactly: the upper test reduces to the
/// integer comparison 2^(2*mode - n - 4) <= n^2.
bool mode_bounds_check(const CoefficientVector& cv);

} // namespace dompoly

#endif
