#include <dichroma/combinatorics.hpp>
#include <dichroma/error.hpp>

#include <numeric>

namespace dichroma
{
    using std::to_string;

    auto binomial(std::uint64_t n, std::uint64_t k) -> BigInt
    {
        if (k > n)
            return 0;
        k = std::min(k, n - k);
        BigInt result = 1;
        for (std::uint64_t i = 1; i <= k; ++i)
            result = result * (n - k + i) / i;
        return result;
    }

    auto binomial_u64(std::uint64_t n, std::uint64_t k) -> std::uint64_t
    {
        auto b = binomial(n, k);
        if (b > std::numeric_limits<std::uint64_t>::max())
            throw LimitExceeded("binomial coefficient C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
        return static_cast<std::uint64_t>(b);
    }

    auto factorial(std::uint64_t n) -> BigInt
    {
        BigInt result = 1;
        for (std::uint64_t i = 2; i <= n; ++i)
            result *= i;
        return result;
    }

    auto k_subsets(std::size_t n, std::size_t k) -> std::vector<std::vector<std::size_t>>
    {
        std::vector<std::vector<std::size_t>> result;
        if (k > n)
            return result;
        std::vector<std::size_t> current(k);
        std::iota(current.begin(), current.end(), 0);
        for (;;) {
            result.push_back(current);
            std::size_t i = k;
            while (i > 0 && current[i - 1] == n - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++current[i - 1];
            for (std::size_t j = i; j < k; ++j)
                current[j] = current[j - 1] + 1;
        }
        return result;
    }
}
