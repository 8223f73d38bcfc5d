#include "dompoly/numeric.hpp"

#include <array>
#include <bit>

namespace dompoly {

BigInt binomial(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;
    }
    return result;
}

namespace {
    struct PascalTable {
        std::array<std::array<std::uint64_t, 65>, 65> c{};
        PascalTable()
        {
            for (int n = 0; n <= 64; ++n) {
                c[n][0] = 1;
                for (int k = 1; k <= n; ++k)
                    c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
            }
        }
    };
    const PascalTable pascal;
}

std::uint64_t binomial_u64(int n, int k)
{
    if (n < 0 || n > 64)
        throw std::invalid_argument("binomial_u64: n must be in [0, 64]");
    if (k < 0 || k > n)
        return 0;
    return pascal.c[n][k];
}

int floor_log2(unsigned long long n)
{
    if (n == 0)
        throw std::invalid_argument("floor_log2: n must be positive");
    return std::bit_width(n) - 1;
}

int ceil_log2(unsigned long long n)
{
    if (n == 0)
        throw std::invalid_argument("ceil_log2: n must be positive");
    return n == 1 ? 0 : std::bit_width(n - 1);
}

BigRational binomial_ratio(long long n, long long k, long long j)
{
    if (j < 0 || k < 0 || k > n)
        throw std::invalid_argument("binomial_ratio: need 0 <= k <= n and j >= 0");
    if (n - j < k)
        return 0;
    BigRational r = 1;
    for (long long i = 0; i < j; ++i)
        r *= BigRational(n - k - i, n - i);
    return r;
}

bool le_twice_log2(long long t, long long n)
{
    if (n < 1)
        throw std::invalid_argument("le_twice_log2: n must be positive");
    if (t <= 0)
        return true;
    // t <= 2*log2(n)  <=>  2^t <= n^2; shortcut via bit length first
    if (t > 2 * floor_log2(static_cast<unsigned long long>(n)) + 2)
        return false;
    return (BigInt(1) << static_cast<unsigned>(t)) <= BigInt(n) * n;
}

} // namespace dompoly
