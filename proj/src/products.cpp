#include <dichroma/error.hpp>
#include <dichroma/products.hpp>

using std::size_t;
using std::string;
using std::vector;

namespace dichroma
{
    namespace
    {
        template <typename G_>
        auto pair_labels(const G_ & x, const G_ & y) -> vector<string>
        {
            vector<string> labels;
            labels.reserve(x.order() * y.order());
            for (Vertex a = 0; a < x.order(); ++a)
                for (Vertex b = 0; b < y.order(); ++b)
                    labels.push_back("(" + x.label(a) + "," + y.label(b) + ")");
            return labels;
        }

        auto require_same_kind(const AnyGraph & x, const AnyGraph & y) -> void
        {
            if (x.index() != y.index())
                throw InvalidArgument("product operands must both be graphs or both be digraphs");
        }
    }

    auto cartesian_product(const Graph & x, const Graph & y) -> Graph
    {
        auto ny = y.order();
        Graph result(x.order() * ny);
        for (Vertex a = 0; a < x.order(); ++a)
            for (auto & e : y.edges())
                result.add_edge(product_vertex(a, e.u, ny), product_vertex(a, e.v, ny));
        for (auto & e : x.edges())
            for (Vertex b = 0; b < ny; ++b)
                result.add_edge(product_vertex(e.u, b, ny), product_vertex(e.v, b, ny));
        result.set_labels(pair_labels(x, y));
        return result;
    }

    auto cartesian_product(const Digraph & x, const Digraph & y) -> Digraph
    {
        auto ny = y.order();
        Digraph result(x.order() * ny);
        for (Vertex a = 0; a < x.order(); ++a)
            for (auto & arc : y.arcs())
                result.add_arc(product_vertex(a, arc.from, ny), product_vertex(a, arc.to, ny));
        for (auto & arc : x.arcs())
            for (Vertex b = 0; b < ny; ++b)
                result.add_arc(product_vertex(arc.from, b, ny), product_vertex(arc.to, b, ny));
        result.set_labels(pair_labels(x, y));
        return result;
    }

    auto tensor_product(const Graph & x, const Graph & y) -> Graph
    {
        auto ny = y.order();
        Graph result(x.order() * ny);
        auto ey = y.edges();
        for (auto & ex : x.edges())
            for (auto & e : ey) {
                result.add_edge(product_vertex(ex.u, e.u, ny), product_vertex(ex.v, e.v, ny));
                result.add_edge(product_vertex(ex.u, e.v, ny), product_vertex(ex.v, e.u, ny));
            }
        result.set_labels(pair_labels(x, y));
        return result;
    }

    auto tensor_product(const Digraph & x, const Digraph & y) -> Digraph
    {
        auto ny = y.order();
        Digraph result(x.order() * ny);
        auto ay = y.arcs();
        for (auto & ax : x.arcs())
            for (auto & a : ay)
                result.add_arc(product_vertex(ax.from, a.from, ny), product_vertex(ax.to, a.to, ny));
        result.set_labels(pair_labels(x, y));
        return result;
    }

    auto cartesian_product(const AnyGraph & x, const AnyGraph & y) -> AnyGraph
    {
        require_same_kind(x, y);
        if (auto gx = std::get_if<Graph>(&x))
            return cartesian_product(*gx, std::get<Graph>(y));
        return cartesian_product(std::get<Digraph>(x), std::get<Digraph>(y));
    }

    auto tensor_product(const AnyGraph & x, const AnyGraph & y) -> AnyGraph
    {
        require_same_kind(x, y);
        if (auto gx = std::get_if<Graph>(&x))
            return tensor_product(*gx, std::get<Graph>(y));
        return tensor_product(std::get<Digraph>(x), std::get<Digraph>(y));
    }
}
