#include <dichroma/core.hpp>
#include <dichroma/error.hpp>

#include <algorithm>
#include <functional>

using std::size_t;
using std::to_string;
using std::vector;

namespace dichroma
{
    using std::to_string;

    auto masks::acyclic_within(const vector<Mask> & in, Mask s) -> bool
    {
        bool progress = true;
        while (s && progress) {
            progress = false;
            for (Mask rest = s; rest; rest &= rest - 1) {
                auto v = lowest(rest);
                if (! (in[v] & s)) {
                    s &= ~bit(v);
                    progress = true;
                }
            }
        }
        return s == 0;
    }

    auto masks::closes_cycle(const vector<Mask> & out, const vector<Mask> & in, Mask s, Vertex v) -> bool
    {
        Mask targets = in[v] & s;
        Mask seen = out[v] & s;
        if (! targets || ! seen)
            return false;
        Mask frontier = seen;
        while (frontier) {
            if (seen & targets)
                return true;
            auto u = lowest(frontier);
            frontier &= frontier - 1;
            Mask fresh = out[u] & s & ~seen;
            seen |= fresh;
            frontier |= fresh;
        }
        return (seen & targets) != 0;
    }

    auto is_acyclic(const Digraph & d) -> bool
    {
        auto n = d.order();
        vector<size_t> in_degree(n);
        vector<Vertex> sources;
        for (Vertex v = 0; v < n; ++v) {
            in_degree[v] = d.in_neighbours(v).count();
            if (in_degree[v] == 0)
                sources.push_back(v);
        }

        size_t removed = 0;
        while (! sources.empty()) {
            auto v = sources.back();
            sources.pop_back();
            ++removed;
            auto & out = d.out_neighbours(v);
            for (auto w = out.find_first(); w != VertexSet::npos; w = out.find_next(w))
                if (--in_degree[w] == 0)
                    sources.push_back(w);
        }

        return removed == n;
    }

    auto bidirect(const Graph & g) -> Digraph
    {
        Digraph d(g.order());
        for (auto & e : g.edges()) {
            d.add_arc(e.u, e.v);
            d.add_arc(e.v, e.u);
        }
        d.set_labels(g.labels());
        return d;
    }

    auto apply_orientation(const Graph & g, const Orientation & o) -> Digraph
    {
        if (! o.matches(g))
            throw InvalidArgument("orientation was not built for this graph");
        Digraph d(g.order());
        for (size_t i = 0; i < o.edges.size(); ++i) {
            auto & e = o.edges[i];
            if (o.reversed[i])
                d.add_arc(e.v, e.u);
            else
                d.add_arc(e.u, e.v);
        }
        d.set_labels(g.labels());
        return d;
    }

    OrientationRange::OrientationRange(const Graph & g, size_t edge_limit) :
        _order(g.order()),
        _edges(g.edges())
    {
        if (_edges.size() > edge_limit || _edges.size() >= 63)
            throw LimitExceeded("graph has " + to_string(_edges.size()) + " edges, orientation enumeration limit is " + to_string(std::min<size_t>(edge_limit, 62)));
    }

    auto OrientationRange::at(std::uint64_t index) const -> Orientation
    {
        auto m = _edges.size();
        Orientation o{_order, _edges, vector<bool>(m)};
        for (size_t i = 0; i < m; ++i)
            o.reversed[i] = (index >> (m - 1 - i)) & 1;
        return o;
    }

    auto is_proper_coloring(const Graph & g, const Coloring & f) -> bool
    {
        f.validate(g.order());
        for (auto & e : g.edges())
            if (f.assignment[e.u] == f.assignment[e.v])
                return false;
        return true;
    }

    auto is_proper_dicoloring(const Digraph & d, const Coloring & f) -> bool
    {
        f.validate(d.order());
        for (auto & part : Partition::from_coloring(f).parts)
            if (part.any() && ! is_acyclic(induced_subdigraph(d, part)))
                return false;
        return true;
    }

    auto maximal_acyclic_sets(const Digraph & d, size_t vertex_limit) -> vector<VertexSet>
    {
        auto n = d.order();
        if (n > vertex_limit || n > mask_capacity)
            throw LimitExceeded("digraph has " + to_string(n) + " vertices, acyclic set enumeration limit is " + to_string(std::min(vertex_limit, mask_capacity)));

        auto out = d.out_masks(), in = d.in_masks();
        auto all = low_bits(n);
        vector<VertexSet> result;

        auto is_maximal = [&](Mask s) {
            for (Mask rest = all & ~s; rest; rest &= rest - 1)
                if (! masks::closes_cycle(out, in, s, lowest(rest)))
                    return false;
            return true;
        };

        // Canonical extension: s only grows by vertices above `above`, so each
        // acyclic set is reached once. When s together with every admissible
        // extension is still acyclic, that union is the only candidate left
        // in the subtree.
        std::function<void (Mask, Mask)> extend = [&](Mask s, Mask above) {
            Mask ext = 0;
            for (Mask rest = above & ~s; rest; rest &= rest - 1) {
                auto v = lowest(rest);
                if (! masks::closes_cycle(out, in, s, v))
                    ext |= bit(v);
            }

            if (masks::acyclic_within(in, s | ext)) {
                if (is_maximal(s | ext))
                    result.push_back(from_mask(s | ext, n));
                return;
            }

            for (Mask rest = ext; rest; rest &= rest - 1) {
                auto v = lowest(rest);
                extend(s | bit(v), above & ~low_bits(v + 1));
            }
        };

        extend(0, all);
        return result;
    }

    auto induced_subdigraph(const Digraph & d, const VertexSet & s) -> Digraph
    {
        if (s.size() != d.order())
            throw InvalidArgument("vertex subset sized for " + to_string(s.size()) + " vertices, digraph has " + to_string(d.order()));
        auto members = to_vector(s);
        vector<size_t> index(d.order(), d.order());
        for (size_t i = 0; i < members.size(); ++i)
            index[members[i]] = i;

        Digraph result(members.size());
        vector<std::string> labels;
        for (size_t i = 0; i < members.size(); ++i) {
            auto & out = d.out_neighbours(members[i]);
            for (auto w = out.find_first(); w != VertexSet::npos; w = out.find_next(w))
                if (s.test(w))
                    result.add_arc(i, index[w]);
            labels.push_back(d.label(members[i]));
        }
        result.set_labels(std::move(labels));
        return result;
    }

    auto induced_subgraph(const Graph & g, const VertexSet & s) -> Graph
    {
        if (s.size() != g.order())
            throw InvalidArgument("vertex subset sized for " + to_string(s.size()) + " vertices, graph has " + to_string(g.order()));
        auto members = to_vector(s);
        vector<size_t> index(g.order(), g.order());
        for (size_t i = 0; i < members.size(); ++i)
            index[members[i]] = i;

        Graph result(members.size());
        vector<std::string> labels;
        for (size_t i = 0; i < members.size(); ++i) {
            auto & nb = g.neighbours(members[i]);
            for (auto w = nb.find_next(members[i]); w != VertexSet::npos; w = nb.find_next(w))
                if (s.test(w))
                    result.add_edge(i, index[w]);
            labels.push_back(g.label(members[i]));
        }
        result.set_labels(std::move(labels));
        return result;
    }

    auto complete_graph(size_t n) -> Graph
    {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto cycle_graph(size_t n) -> Graph
    {
        if (n < 3)
            throw InvalidArgument("a cycle needs at least 3 vertices");
        Graph g(n);
        for (Vertex v = 0; v < n; ++v)
            g.add_edge(v, (v + 1) % n);
        return g;
    }

    auto path_graph(size_t n) -> Graph
    {
        Graph g(n);
        for (Vertex v = 0; v + 1 < n; ++v)
            g.add_edge(v, v + 1);
        return g;
    }

    auto directed_cycle(size_t n) -> Digraph
    {
        if (n < 2)
            throw InvalidArgument("a directed cycle needs at least 2 vertices");
        Digraph d(n);
        for (Vertex v = 0; v < n; ++v)
            d.add_arc(v, (v + 1) % n);
        return d;
    }

    auto transitive_tournament(size_t n) -> Digraph
    {
        Digraph d(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                d.add_arc(u, v);
        return d;
    }
}
