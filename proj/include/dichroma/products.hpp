#ifndef DICHROMA_PRODUCTS_HPP
#define DICHROMA_PRODUCTS_HPP

#include <dichroma/graph.hpp>

#include <variant>

namespace dichroma
{
    /// Either kind of graph, as read from a file. Products of a Graph with a
    /// Digraph are rejected rather than coerced; bidirect explicitly.
    using AnyGraph = std::variant<Graph, Digraph>;

    /// Product vertices are numbered row-major, (x, y) -> x * |V(y)| + y, and
    /// labelled "(label_x,label_y)".
    inline auto product_vertex(Vertex x, Vertex y, std::size_t y_order) -> Vertex { return x * y_order + y; }

    /// Change one coordinate along an edge (arc) of that factor.
    auto cartesian_product(const Graph & x, const Graph & y) -> Graph;
    auto cartesian_product(const Digraph & x, const Digraph & y) -> Digraph;
    auto cartesian_product(const AnyGraph & x, const AnyGraph & y) -> AnyGraph;

    /// Move along an edge (arc) in both coordinates at once.
    auto tensor_product(const Graph & x, const Graph & y) -> Graph;
    auto tensor_product(const Digraph & x, const Digraph & y) -> Digraph;
    auto tensor_product(const AnyGraph & x, const AnyGraph & y) -> AnyGraph;
}

#endif
