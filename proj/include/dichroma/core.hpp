#ifndef DICHROMA_CORE_HPP
#define DICHROMA_CORE_HPP

#include <dichroma/graph.hpp>

#include <cstdint>
#include <iterator>
#include <vector>

namespace dichroma
{
    inline constexpr std::size_t default_orientation_edge_limit = 24;
    inline constexpr std::size_t default_acyclic_set_vertex_limit = 24;

    /// No directed cycle, 2-cycles included. Decided by repeatedly deleting
    /// sources.
    auto is_acyclic(const Digraph & d) -> bool;

    auto bidirect(const Graph & g) -> Digraph;

    /// Throws InvalidArgument if o was not built for g.
    auto apply_orientation(const Graph & g, const Orientation & o) -> Digraph;

    /// All 2^m orientations of a graph, as a binary counter over the edges in
    /// (min,max) order with the first edge most significant, so orientations
    /// come out in lexicographic order of their direction vectors.
    class OrientationRange
    {
        public:
            class iterator
            {
                public:
                    using iterator_category = std::input_iterator_tag;
                    using value_type = Orientation;
                    using difference_type = std::ptrdiff_t;

                    iterator() = default;
                    iterator(const OrientationRange * range, std::uint64_t index) : _range(range), _index(index) {}

                    auto operator*() const -> Orientation { return _range->at(_index); }
                    auto operator++() -> iterator & { ++_index; return *this; }
                    auto operator++(int) -> iterator { auto r = *this; ++_index; return r; }
                    auto operator==(const iterator & o) const -> bool { return _index == o._index; }

                private:
                    const OrientationRange * _range = nullptr;
                    std::uint64_t _index = 0;
            };

            /// Throws LimitExceeded if g has more than edge_limit edges.
            explicit OrientationRange(const Graph & g, std::size_t edge_limit = default_orientation_edge_limit);

            auto size() const -> std::uint64_t { return std::uint64_t{1} << _edges.size(); }
            auto at(std::uint64_t index) const -> Orientation;

            auto begin() const -> iterator { return iterator(this, 0); }
            auto end() const -> iterator { return iterator(this, size()); }

        private:
            std::size_t _order;
            std::vector<Edge> _edges;
    };

    inline auto enumerate_orientations(const Graph & g, std::size_t edge_limit = default_orientation_edge_limit) -> OrientationRange
    {
        return OrientationRange(g, edge_limit);
    }

    auto is_proper_coloring(const Graph & g, const Coloring & f) -> bool;
    auto is_proper_dicoloring(const Digraph & d, const Coloring & f) -> bool;

    /// Every inclusion-maximal vertex set inducing an acyclic subdigraph,
    /// each exactly once.
    auto maximal_acyclic_sets(const Digraph & d, std::size_t vertex_limit = default_acyclic_set_vertex_limit) -> std::vector<VertexSet>;

    /// Vertices of s renumbered in increasing order; the labels of the result
    /// are the labels (or indices) the vertices had in d.
    auto induced_subdigraph(const Digraph & d, const VertexSet & s) -> Digraph;
    auto induced_subgraph(const Graph & g, const VertexSet & s) -> Graph;

    auto complete_graph(std::size_t n) -> Graph;
    auto cycle_graph(std::size_t n) -> Graph;
    auto path_graph(std::size_t n) -> Graph;
    auto directed_cycle(std::size_t n) -> Digraph;
    auto transitive_tournament(std::size_t n) -> Digraph;

    /// Bit-parallel helpers shared by the exact searches (at most 64 vertices).
    namespace masks
    {
        /// Whether the subdigraph induced by s is acyclic.
        auto acyclic_within(const std::vector<Mask> & in, Mask s) -> bool;

        /// Whether adding v to the acyclic set s creates a directed cycle,
        /// i.e. some out-neighbour of v in s reaches an in-neighbour of v
        /// inside s.
        auto closes_cycle(const std::vector<Mask> & out, const std::vector<Mask> & in, Mask s, Vertex v) -> bool;
    }
}

#endif
