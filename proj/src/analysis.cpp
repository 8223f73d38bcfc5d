#include "dompoly/analysis.hpp"

namespace dompoly {

AnalysisReport analyze(const CoefficientVector& cv)
{
    const auto& d = cv.coeffs;
    if (d.empty())
        throw std::invalid_argument("analyze: empty coefficient vector");

    AnalysisReport report;
    report.unimodal = true;
    for (std::size_t i = 1; i + 1 < d.size(); ++i) {
        if (d[i - 1] > d[i] && d[i] < d[i + 1]) {
            report.unimodal = false;
            report.first_violation =
                ViolationWitness{static_cast<int>(i), d[i - 1], d[i], d[i + 1]};
            break;
        }
    }
    if (report.unimodal) {
        // in a unimodal sequence the argmax plateau is contiguous and its
        // right end is the largest valid peak index
        std::size_t best = 0;
        for (std::size_t i = 1; i < d.size(); ++i)
            if (d[i] >= d[best])
                best = i;
        report.mode = static_cast<int>(best);
    }
    for (std::size_t l = 0; l + 2 < d.size(); ++l)
        if (2 * d[l + 1] > d[l] + d[l + 2])
            report.concavity_window.push_back(static_cast<int>(l));
    report.ratio_monotone = ratio_sequence(cv).non_decreasing;
    return report;
}

RatioSequence ratio_sequence(const CoefficientVector& cv)
{
    const auto& d = cv.coeffs;
    if (d.empty())
        throw std::invalid_argument("ratio_sequence: empty coefficient vector");
    const int n = cv.order();
    RatioSequence out;
    out.ratios.reserve(d.size());
    for (int k = 0; k <= n; ++k)
        out.ratios.emplace_back(d[static_cast<std::size_t>(k)], binomial(n, k));
    out.non_decreasing = true;
    for (std::size_t k = 0; k + 1 < out.ratios.size(); ++k)
        if (out.ratios[k] > out.ratios[k + 1]) {
            out.non_decreasing = false;
            break;
        }
    return out;
}

bool mode_bounds_check(const CoefficientVector& cv)
{
    const AnalysisReport report = analyze(cv);
    if (!report.unimodal)
        return false;
    const long long n = cv.order();
    const long long mode = *report.mode;
    if (2 * mode < n)
        return false;
    // mode <= n/2 + log2(n) + 2  <=>  2*mode - n - 4 <= 2*log2(n)
    return le_twice_log2(2 * mode - n - 4, n);
}

} // namespace dompoly
