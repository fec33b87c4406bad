#include <dichroma/catalogue.hpp>
#include <dichroma/error.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

using std::size_t;
using std::vector;

namespace dichroma
{
    using std::to_string;

    namespace
    {
        /// Adjacency as masks, in the shape shared by graphs and digraphs.
        struct Shape
        {
            size_t n;
            vector<Mask> out, in;
            bool directed;
        };

        auto code_under(const Shape & s, const vector<Vertex> & perm) -> std::uint64_t
        {
            // perm[new] = old
            std::uint64_t code = 0;
            for (size_t i = 0; i < s.n; ++i)
                for (size_t j = s.directed ? 0 : i + 1; j < s.n; ++j) {
                    if (i == j)
                        continue;
                    code = (code << 1) | ((s.out[perm[i]] >> perm[j]) & 1);
                }
            return code;
        }

        /// Order vertices by a degree invariant, then minimise the code over
        /// the permutations inside each invariant class.
        auto canonical(const Shape & s) -> std::uint64_t
        {
            using Key = std::tuple<int, int, int, vector<int>>;
            vector<Key> key(s.n);
            for (size_t v = 0; v < s.n; ++v) {
                vector<int> around;
                for_each_bit(s.out[v] | s.in[v], [&](Vertex w) { around.push_back(popcount(s.out[w]) * 64 + popcount(s.in[w])); });
                std::sort(around.begin(), around.end());
                key[v] = Key{popcount(s.out[v]), popcount(s.in[v]), popcount(s.out[v] & s.in[v]), around};
            }
            vector<Vertex> order(s.n);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[a] < key[b]; });

            vector<std::pair<size_t, size_t>> blocks;
            for (size_t i = 0; i < s.n;) {
                auto j = i;
                while (j < s.n && key[order[j]] == key[order[i]])
                    ++j;
                blocks.emplace_back(i, j);
                i = j;
            }

            auto best = ~std::uint64_t{0};
            std::function<void (size_t)> rec = [&](size_t b) {
                if (b == blocks.size()) {
                    best = std::min(best, code_under(s, order));
                    return;
                }
                auto [lo, hi] = blocks[b];
                std::sort(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi));
                do
                    rec(b + 1);
                while (std::next_permutation(order.begin() + static_cast<long>(lo), order.begin() + static_cast<long>(hi)));
            };
            rec(0);
            return best;
        }

        auto shape_of(const Graph & g) -> Shape
        {
            auto adj = g.adjacency_masks();
            return Shape{g.order(), adj, adj, false};
        }

        auto shape_of(const Digraph & d) -> Shape
        {
            return Shape{d.order(), d.out_masks(), d.in_masks(), true};
        }
    }

    auto canonical_code(const Graph & g) -> std::uint64_t
    {
        if (g.order() > 11)
            throw LimitExceeded("canonical codes support at most 11 vertices");
        return canonical(shape_of(g));
    }

    auto canonical_code(const Digraph & d) -> std::uint64_t
    {
        if (d.order() > 8)
            throw LimitExceeded("canonical digraph codes support at most 8 vertices");
        return canonical(shape_of(d));
    }

    auto graph_catalogue(size_t max_n) -> vector<Graph>
    {
        if (max_n > 8)
            throw LimitExceeded("graph catalogue supports at most 8 vertices, got " + to_string(max_n));
        vector<Graph> all;
        if (max_n == 0)
            return all;

        // Every graph on n vertices arises from one on n-1 vertices plus a
        // new vertex with some neighbourhood.
        vector<Graph> level{Graph(1)};
        all.push_back(Graph(1));
        for (size_t n = 2; n <= max_n; ++n) {
            std::vector<std::pair<std::uint64_t, Graph>> next;
            std::set<std::uint64_t> codes;
            for (auto & base : level)
                for (Mask nbrs = 0; nbrs < (Mask{1} << (n - 1)); ++nbrs) {
                    Graph g(n);
                    for (auto [u, v] : base.edges())
                        g.add_edge(u, v);
                    for_each_bit(nbrs, [&](Vertex u) { g.add_edge(u, n - 1); });
                    auto code = canonical_code(g);
                    if (codes.insert(code).second)
                        next.emplace_back(code, std::move(g));
                }
            std::sort(next.begin(), next.end(), [](auto & a, auto & b) { return a.first < b.first; });
            level.clear();
            for (auto & [code, g] : next)
                level.push_back(std::move(g));
            all.insert(all.end(), level.begin(), level.end());
        }
        return all;
    }

    auto digraph_catalogue(size_t max_n) -> vector<Digraph>
    {
        if (max_n > 5)
            throw LimitExceeded("digraph catalogue supports at most 5 vertices, got " + to_string(max_n));
        vector<Digraph> all;
        if (max_n == 0)
            return all;

        vector<Digraph> level{Digraph(1)};
        all.push_back(Digraph(1));
        for (size_t n = 2; n <= max_n; ++n) {
            std::vector<std::pair<std::uint64_t, Digraph>> next;
            std::set<std::uint64_t> codes;
            for (auto & base : level)
                for (Mask outs = 0; outs < (Mask{1} << (n - 1)); ++outs)
                    for (Mask ins = 0; ins < (Mask{1} << (n - 1)); ++ins) {
                        Digraph d(n);
                        for (auto [u, v] : base.arcs())
                            d.add_arc(u, v);
                        for_each_bit(outs, [&](Vertex u) { d.add_arc(n - 1, u); });
                        for_each_bit(ins, [&](Vertex u) { d.add_arc(u, n - 1); });
                        auto code = canonical_code(d);
                        if (codes.insert(code).second)
                            next.emplace_back(code, std::move(d));
                    }
            std::sort(next.begin(), next.end(), [](auto & a, auto & b) { return a.first < b.first; });
            level.clear();
            for (auto & [code, d] : next)
                level.push_back(std::move(d));
            all.insert(all.end(), level.begin(), level.end());
        }
        return all;
    }

    auto random_digraph(size_t max_n, RngSpec rng) -> Digraph
    {
        if (max_n == 0)
            throw InvalidArgument("random digraphs need at least one vertex");
        Stream stream(rng);
        auto n = 1 + static_cast<size_t>(stream.below(max_n));
        Digraph d(n);
        for (size_t u = 0; u < n; ++u)
            for (size_t v = 0; v < n; ++v)
                if (u != v && stream.coin())
                    d.add_arc(u, v);
        return d;
    }
}
