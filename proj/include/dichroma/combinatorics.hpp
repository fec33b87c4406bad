#ifndef DICHROMA_COMBINATORICS_HPP
#define DICHROMA_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dichroma
{
    using BigInt = boost::multiprecision::cpp_int;
    using Rational = boost::multiprecision::cpp_rational;

    /// C(n,k), zero when k > n.
    auto binomial(std::uint64_t n, std::uint64_t k) -> BigInt;

    /// C(n,k) as a 64-bit value, throwing LimitExceeded on overflow.
    auto binomial_u64(std::uint64_t n, std::uint64_t k) -> std::uint64_t;

    auto factorial(std::uint64_t n) -> BigInt;

    /// All k-subsets of {0..n-1} as sorted index vectors, in lexicographic order.
    auto k_subsets(std::size_t n, std::size_t k) -> std::vector<std::vector<std::size_t>>;
}

#endif
