#ifndef DOMPOLY_NUMERIC_HPP
#define DOMPOLY_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace dompoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// C(n, k) as an exact integer; zero outside 0 <= k <= n.
BigInt binomial(long long n, long long k);

/// C(n, k) for n <= 64 from a precomputed table. C(64, 32) < 2^63, so every
/// entry fits a machine word.
std::uint64_t binomial_u64(int n, int k);

/// floor(log2 n) for n >= 1.
int floor_log2(unsigned long long n);

/// smallest L with 2^L >= n, for n >= 1.
int ceil_log2(unsigned long long n);

/// C(n - j, k) / C(n, k) as an exact rational: the product of j factors
/// (n - k - i) / (n - i). Never expands either binomial, so it stays cheap
/// when n is astronomically large.
BigRational binomial_ratio(long long n, long long k, long long j);

/// Exact test of t <= 2*log2(n) for integers t (any sign) and n >= 1.
bool le_twice_log2(long long t, long long n);

} // namespace dompoly

#endif
