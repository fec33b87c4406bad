#ifndef DICHROMA_GRAPH_HPP
#define DICHROMA_GRAPH_HPP

#include <dichroma/vertex_set.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace dichroma
{
    /// An undirected edge, always stored with u < v.
    struct Edge
    {
        Vertex u, v;

        auto operator<=>(const Edge &) const = default;
    };

    struct Arc
    {
        Vertex from, to;

        auto operator<=>(const Arc &) const = default;
    };

    /// Simple undirected graph on dense vertex indices 0..n-1, with an
    /// optional label per vertex (k-subsets, lattice points, product pairs).
    class Graph
    {
        public:
            Graph() = default;
            explicit Graph(std::size_t n);

            auto order() const -> std::size_t { return _adj.size(); }
            auto edge_count() const -> std::size_t { return _edge_count; }

            /// Returns false if the edge was already present. Loops and
            /// out-of-range endpoints throw.
            auto add_edge(Vertex u, Vertex v) -> bool;
            auto has_edge(Vertex u, Vertex v) const -> bool;
            auto neighbours(Vertex v) const -> const VertexSet & { return _adj[v]; }
            auto degree(Vertex v) const -> std::size_t { return _adj[v].count(); }

            /// Sorted by (min endpoint, max endpoint).
            auto edges() const -> std::vector<Edge>;

            auto has_labels() const -> bool { return ! _labels.empty(); }
            auto labels() const -> const std::vector<std::string> & { return _labels; }
            /// The label if present, otherwise the decimal index.
            auto label(Vertex v) const -> std::string;
            /// Labels must be n pairwise distinct strings; an empty vector clears them.
            auto set_labels(std::vector<std::string> labels) -> void;

            /// Adjacency as 64-bit masks; throws LimitExceeded past 64 vertices.
            auto adjacency_masks() const -> std::vector<Mask>;

            auto operator==(const Graph &) const -> bool = default;

        private:
            std::vector<VertexSet> _adj;
            std::size_t _edge_count = 0;
            std::vector<std::string> _labels;
    };

    /// Simple digraph: no loops, at most one arc per ordered pair, so both
    /// (u,v) and (v,u) may be present.
    class Digraph
    {
        public:
            Digraph() = default;
            explicit Digraph(std::size_t n);

            auto order() const -> std::size_t { return _out.size(); }
            auto arc_count() const -> std::size_t { return _arc_count; }

            auto add_arc(Vertex from, Vertex to) -> bool;
            auto has_arc(Vertex from, Vertex to) const -> bool;
            auto out_neighbours(Vertex v) const -> const VertexSet & { return _out[v]; }
            auto in_neighbours(Vertex v) const -> const VertexSet & { return _in[v]; }

            /// Sorted lexicographically by (from, to).
            auto arcs() const -> std::vector<Arc>;

            /// The graph with an edge wherever at least one arc is present.
            auto underlying() const -> Graph;

            /// True when no pair carries arcs in both directions.
            auto is_oriented() const -> bool;

            auto has_labels() const -> bool { return ! _labels.empty(); }
            auto labels() const -> const std::vector<std::string> & { return _labels; }
            auto label(Vertex v) const -> std::string;
            auto set_labels(std::vector<std::string> labels) -> void;

            auto out_masks() const -> std::vector<Mask>;
            auto in_masks() const -> std::vector<Mask>;

            auto operator==(const Digraph &) const -> bool = default;

        private:
            std::vector<VertexSet> _out, _in;
            std::size_t _arc_count = 0;
            std::vector<std::string> _labels;
    };

    /// One direction per edge of a base graph. Edge i of base.edges() is
    /// oriented low->high when reversed[i] is false.
    struct Orientation
    {
        std::size_t order = 0;
        std::vector<Edge> edges;
        std::vector<bool> reversed;

        static auto all_forward(const Graph & g) -> Orientation;

        /// Whether this orientation was built for a graph with exactly g's edges.
        auto matches(const Graph & g) const -> bool;

        auto operator==(const Orientation &) const -> bool = default;
    };

    using Colour = std::uint32_t;

    /// Every vertex gets a colour drawn from an explicit ordered palette.
    struct Coloring
    {
        std::vector<Colour> palette;
        std::vector<Colour> assignment;

        /// Palette {0..k-1}.
        static auto over_first(std::size_t k, std::vector<Colour> assignment) -> Coloring;

        /// Throws InvalidArgument unless the assignment covers n vertices
        /// using palette colours only and the palette has no repeats.
        auto validate(std::size_t n) const -> void;
        auto colours_used() const -> std::size_t;

        auto operator==(const Coloring &) const -> bool = default;
    };

    /// Palette-indexed partition; parts[i] belongs to palette[i] and may be empty.
    struct Partition
    {
        std::vector<Colour> palette;
        std::vector<VertexSet> parts;

        static auto from_coloring(const Coloring & f) -> Partition;

        auto order() const -> std::size_t { return parts.empty() ? 0 : parts.front().size(); }
        auto validate(std::size_t n) const -> void;
        auto to_coloring() const -> Coloring;
    };

    /// A k-list per vertex, every list drawn from the palette.
    struct ListAssignment
    {
        std::vector<Colour> palette;
        std::vector<std::vector<Colour>> lists;
        std::size_t k = 0;

        /// Every vertex gets the whole palette {0..u-1}.
        static auto full(std::size_t n, std::size_t u) -> ListAssignment;
        /// Palette is the sorted union of the lists; k is the common list size.
        static auto from_lists(std::vector<std::vector<Colour>> lists) -> ListAssignment;

        auto order() const -> std::size_t { return lists.size(); }
        auto contains(Vertex v, Colour c) const -> bool;
        auto validate(std::size_t n) const -> void;

        auto operator==(const ListAssignment &) const -> bool = default;
    };
}

#endif
