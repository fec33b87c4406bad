#ifndef DICHROMA_VERTEX_SET_HPP
#define DICHROMA_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace dichroma
{
    using Vertex = std::size_t;
    using VertexSet = boost::dynamic_bitset<std::uint64_t>;

    auto make_vertex_set(std::size_t n, std::initializer_list<Vertex> members) -> VertexSet;
    auto make_vertex_set(std::size_t n, const std::vector<Vertex> & members) -> VertexSet;
    auto to_vector(const VertexSet & s) -> std::vector<Vertex>;

    /// "{0,2,5}"
    auto to_string(const VertexSet & s) -> std::string;

    /// Fixed-width vertex masks used inside the exact searches, which are
    /// restricted to at most 64 vertices.
    using Mask = std::uint64_t;

    inline constexpr std::size_t mask_capacity = 64;

    inline auto bit(Vertex v) -> Mask { return Mask{1} << v; }

    inline auto low_bits(std::size_t n) -> Mask { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

    inline auto popcount(Mask m) -> int { return std::popcount(m); }

    inline auto lowest(Mask m) -> Vertex { return static_cast<Vertex>(std::countr_zero(m)); }

    template <typename F>
    inline auto for_each_bit(Mask m, F && f) -> void
    {
        while (m) {
            f(lowest(m));
            m &= m - 1;
        }
    }

    auto to_mask(const VertexSet & s) -> Mask;
    auto from_mask(Mask m, std::size_t n) -> VertexSet;
}

#endif
