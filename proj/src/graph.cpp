#include <dichroma/error.hpp>
#include <dichroma/graph.hpp>

#include <algorithm>
#include <set>

using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace dichroma
{
    using std::to_string;

    namespace
    {
        auto check_vertex(Vertex v, size_t n) -> void
        {
            if (v >= n)
                throw InvalidArgument("vertex " + to_string(v) + " out of range for " + to_string(n) + " vertices");
        }

        auto check_labels(const vector<string> & labels, size_t n) -> void
        {
            if (labels.empty())
                return;
            if (labels.size() != n)
                throw InvalidArgument("expected " + to_string(n) + " labels, got " + to_string(labels.size()));
            std::set<string> seen;
            for (auto & l : labels)
                if (! seen.insert(l).second)
                    throw InvalidArgument("duplicate vertex label '" + l + "'");
        }

        auto masks_of(const vector<VertexSet> & rows) -> vector<Mask>
        {
            if (rows.size() > mask_capacity)
                throw LimitExceeded("graph has " + to_string(rows.size()) + " vertices, searches support at most 64");
            vector<Mask> result;
            result.reserve(rows.size());
            for (auto & r : rows)
                result.push_back(to_mask(r));
            return result;
        }
    }

    Graph::Graph(size_t n) :
        _adj(n, VertexSet(n))
    {
    }

    auto Graph::add_edge(Vertex u, Vertex v) -> bool
    {
        check_vertex(u, order());
        check_vertex(v, order());
        if (u == v)
            throw InvalidArgument("loop at vertex " + to_string(u));
        if (_adj[u].test(v))
            return false;
        _adj[u].set(v);
        _adj[v].set(u);
        ++_edge_count;
        return true;
    }

    auto Graph::has_edge(Vertex u, Vertex v) const -> bool
    {
        return u < order() && v < order() && _adj[u].test(v);
    }

    auto Graph::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex u = 0; u < order(); ++u)
            for (auto v = _adj[u].find_next(u); v != VertexSet::npos; v = _adj[u].find_next(v))
                result.push_back(Edge{u, v});
        return result;
    }

    auto Graph::label(Vertex v) const -> string
    {
        return _labels.empty() ? to_string(v) : _labels.at(v);
    }

    auto Graph::set_labels(vector<string> labels) -> void
    {
        check_labels(labels, order());
        _labels = std::move(labels);
    }

    auto Graph::adjacency_masks() const -> vector<Mask>
    {
        return masks_of(_adj);
    }

    Digraph::Digraph(size_t n) :
        _out(n, VertexSet(n)),
        _in(n, VertexSet(n))
    {
    }

    auto Digraph::add_arc(Vertex from, Vertex to) -> bool
    {
        check_vertex(from, order());
        check_vertex(to, order());
        if (from == to)
            throw InvalidArgument("loop at vertex " + to_string(from));
        if (_out[from].test(to))
            return false;
        _out[from].set(to);
        _in[to].set(from);
        ++_arc_count;
        return true;
    }

    auto Digraph::has_arc(Vertex from, Vertex to) const -> bool
    {
        return from < order() && to < order() && _out[from].test(to);
    }

    auto Digraph::arcs() const -> vector<Arc>
    {
        vector<Arc> result;
        result.reserve(_arc_count);
        for (Vertex u = 0; u < order(); ++u)
            for (auto v = _out[u].find_first(); v != VertexSet::npos; v = _out[u].find_next(v))
                result.push_back(Arc{u, v});
        return result;
    }

    auto Digraph::underlying() const -> Graph
    {
        Graph g(order());
        for (auto & a : arcs())
            g.add_edge(a.from, a.to);
        g.set_labels(_labels);
        return g;
    }

    auto Digraph::is_oriented() const -> bool
    {
        for (Vertex v = 0; v < order(); ++v)
            if (_out[v].intersects(_in[v]))
                return false;
        return true;
    }

    auto Digraph::label(Vertex v) const -> string
    {
        return _labels.empty() ? to_string(v) : _labels.at(v);
    }

    auto Digraph::set_labels(vector<string> labels) -> void
    {
        check_labels(labels, order());
        _labels = std::move(labels);
    }

    auto Digraph::out_masks() const -> vector<Mask>
    {
        return masks_of(_out);
    }

    auto Digraph::in_masks() const -> vector<Mask>
    {
        return masks_of(_in);
    }

    auto Orientation::all_forward(const Graph & g) -> Orientation
    {
        auto e = g.edges();
        auto m = e.size();
        return Orientation{g.order(), std::move(e), vector<bool>(m, false)};
    }

    auto Orientation::matches(const Graph & g) const -> bool
    {
        return order == g.order() && reversed.size() == edges.size() && edges == g.edges();
    }

    auto Coloring::over_first(size_t k, vector<Colour> assignment) -> Coloring
    {
        Coloring result;
        result.palette.resize(k);
        for (size_t c = 0; c < k; ++c)
            result.palette[c] = static_cast<Colour>(c);
        result.assignment = std::move(assignment);
        return result;
    }

    auto Coloring::validate(size_t n) const -> void
    {
        if (assignment.size() != n)
            throw InvalidArgument("colouring covers " + to_string(assignment.size()) + " vertices, expected " + to_string(n));
        std::set<Colour> pal(palette.begin(), palette.end());
        if (pal.size() != palette.size())
            throw InvalidArgument("palette has repeated colours");
        for (size_t v = 0; v < n; ++v)
            if (! pal.contains(assignment[v]))
                throw InvalidArgument("vertex " + to_string(v) + " has colour " + to_string(assignment[v]) + " outside the palette");
    }

    auto Coloring::colours_used() const -> size_t
    {
        return std::set<Colour>(assignment.begin(), assignment.end()).size();
    }

    auto Partition::from_coloring(const Coloring & f) -> Partition
    {
        f.validate(f.assignment.size());
        auto n = f.assignment.size();
        Partition result{f.palette, vector<VertexSet>(f.palette.size(), VertexSet(n))};
        for (Vertex v = 0; v < n; ++v) {
            auto idx = std::find(f.palette.begin(), f.palette.end(), f.assignment[v]) - f.palette.begin();
            result.parts[idx].set(v);
        }
        return result;
    }

    auto Partition::validate(size_t n) const -> void
    {
        if (parts.size() != palette.size())
            throw InvalidArgument("partition has " + to_string(parts.size()) + " parts for a palette of " + to_string(palette.size()));
        VertexSet seen(n);
        for (auto & p : parts) {
            if (p.size() != n)
                throw InvalidArgument("partition part sized for " + to_string(p.size()) + " vertices, expected " + to_string(n));
            if (seen.intersects(p))
                throw InvalidArgument("partition parts overlap");
            seen |= p;
        }
        if (seen.count() != n)
            throw InvalidArgument("partition does not cover every vertex");
    }

    auto Partition::to_coloring() const -> Coloring
    {
        auto n = order();
        validate(n);
        Coloring result{palette, vector<Colour>(n)};
        for (size_t i = 0; i < parts.size(); ++i)
            for (auto v : to_vector(parts[i]))
                result.assignment[v] = palette[i];
        return result;
    }

    auto ListAssignment::full(size_t n, size_t u) -> ListAssignment
    {
        ListAssignment result;
        for (size_t c = 0; c < u; ++c)
            result.palette.push_back(static_cast<Colour>(c));
        result.lists.assign(n, result.palette);
        result.k = u;
        return result;
    }

    auto ListAssignment::from_lists(vector<vector<Colour>> lists) -> ListAssignment
    {
        ListAssignment result;
        std::set<Colour> pal;
        for (auto & l : lists) {
            std::sort(l.begin(), l.end());
            pal.insert(l.begin(), l.end());
        }
        result.palette.assign(pal.begin(), pal.end());
        result.k = lists.empty() ? 0 : lists.front().size();
        result.lists = std::move(lists);
        result.validate(result.lists.size());
        return result;
    }

    auto ListAssignment::contains(Vertex v, Colour c) const -> bool
    {
        return std::binary_search(lists[v].begin(), lists[v].end(), c);
    }

    auto ListAssignment::validate(size_t n) const -> void
    {
        if (lists.size() != n)
            throw InvalidArgument("list assignment covers " + to_string(lists.size()) + " vertices, expected " + to_string(n));
        if (! std::is_sorted(palette.begin(), palette.end()) || std::adjacent_find(palette.begin(), palette.end()) != palette.end())
            throw InvalidArgument("palette must be sorted without repeats");
        for (size_t v = 0; v < n; ++v) {
            auto & l = lists[v];
            if (l.size() != k)
                throw InvalidArgument("list of vertex " + to_string(v) + " has " + to_string(l.size()) + " colours, expected " + to_string(k));
            if (! std::is_sorted(l.begin(), l.end()) || std::adjacent_find(l.begin(), l.end()) != l.end())
                throw InvalidArgument("list of vertex " + to_string(v) + " must be sorted without repeats");
            for (auto c : l)
                if (! std::binary_search(palette.begin(), palette.end(), c))
                    throw InvalidArgument("list of vertex " + to_string(v) + " uses colour " + to_string(c) + " outside the palette");
        }
    }
}
