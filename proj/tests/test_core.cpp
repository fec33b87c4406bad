#include "oracles.hpp"

#include <dichroma/catalogue.hpp>
#include <dichroma/core.hpp>
#include <dichroma/error.hpp>
#include <dichroma/generators.hpp>
#include <dichroma/rng.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace dichroma;

namespace
{
    auto digraph_from(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> arcs) -> Digraph
    {
        Digraph d(n);
        for (auto [u, v] : arcs)
            d.add_arc(u, v);
        return d;
    }

    auto as_bits(const VertexSet & s) -> oracle::Bits { return to_mask(s); }
}

TEST_CASE("graphs reject loops, keep edges symmetric and labels distinct", "[core]")
{
    Graph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.has_edge(1, 0));
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), InvalidArgument);
    CHECK_THROWS_AS(g.add_edge(0, 3), InvalidArgument);
    CHECK_THROWS_AS(g.set_labels({"a", "a", "b"}), InvalidArgument);
    CHECK_THROWS_AS(g.set_labels({"a", "b"}), InvalidArgument);
    g.set_labels({"a", "b", "c"});
    CHECK(g.label(2) == "c");

    Digraph d(2);
    CHECK(d.add_arc(0, 1));
    CHECK(d.add_arc(1, 0));
    CHECK_FALSE(d.add_arc(0, 1));
    CHECK(d.arc_count() == 2);
    CHECK_FALSE(d.is_oriented());
    CHECK_THROWS_AS(d.add_arc(1, 1), InvalidArgument);
}

TEST_CASE("is_acyclic on the basic examples", "[core]")
{
    CHECK_FALSE(is_acyclic(directed_cycle(3)));
    CHECK(is_acyclic(Digraph(1)));
    CHECK(is_acyclic(transitive_tournament(4)));
    CHECK(is_acyclic(Digraph(0)));
    CHECK_FALSE(is_acyclic(digraph_from(2, {{0, 1}, {1, 0}})));
}

TEST_CASE("is_acyclic agrees with DFS cycle detection on every small digraph", "[core][property]")
{
    for (auto & d : digraph_catalogue(4))
        REQUIRE(is_acyclic(d) == oracle::acyclic(d));
    for (std::uint64_t i = 0; i < 300; ++i) {
        auto d = random_digraph(8, RngSpec{11}.child(i));
        REQUIRE(is_acyclic(d) == oracle::acyclic(d));
    }
}

TEST_CASE("bidirect doubles every edge", "[core]")
{
    auto k3 = bidirect(complete_graph(3));
    CHECK(k3.arc_count() == 6);
    auto empty = bidirect(Graph(5));
    CHECK(empty.order() == 5);
    CHECK(empty.arc_count() == 0);
    auto p3 = bidirect(path_graph(3));
    CHECK(p3.arc_count() == 4);
    CHECK_FALSE(is_acyclic(p3));
    CHECK_FALSE(oracle::acyclic(p3));
}

TEST_CASE("apply_orientation follows the direction bits", "[core]")
{
    auto c3 = cycle_graph(3);
    auto forward = apply_orientation(c3, Orientation::all_forward(c3));
    CHECK(forward.is_oriented());
    CHECK(is_acyclic(forward));
    CHECK(oracle::acyclic(forward));

    // Edges (0,1), (0,2), (1,2): reversing (0,2) gives 0->1->2->0.
    auto cyclic = Orientation::all_forward(c3);
    cyclic.reversed = {false, true, false};
    auto d = apply_orientation(c3, cyclic);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 2));
    CHECK(d.has_arc(2, 0));
    CHECK_FALSE(is_acyclic(d));

    auto empty = apply_orientation(Graph(0), Orientation::all_forward(Graph(0)));
    CHECK(empty.order() == 0);

    CHECK_THROWS_AS(apply_orientation(path_graph(4), cyclic), InvalidArgument);
}

TEST_CASE("enumerate_orientations examples", "[core]")
{
    auto count_cyclic = [](const Graph & g) {
        std::size_t total = 0, cyclic = 0;
        for (auto o : enumerate_orientations(g)) {
            ++total;
            cyclic += is_acyclic(apply_orientation(g, o)) ? 0 : 1;
        }
        return std::pair{total, cyclic};
    };
    CHECK(count_cyclic(complete_graph(3)) == std::pair<std::size_t, std::size_t>{8, 2});
    CHECK(count_cyclic(complete_graph(2)) == std::pair<std::size_t, std::size_t>{2, 0});
    CHECK(count_cyclic(path_graph(3)) == std::pair<std::size_t, std::size_t>{4, 0});
    CHECK_THROWS_AS(enumerate_orientations(complete_graph(8)), LimitExceeded);
    CHECK_NOTHROW(enumerate_orientations(complete_graph(8), 28));
}

TEST_CASE("orientations come out distinct and in lexicographic order", "[core][property]")
{
    for (auto & g : graph_catalogue(6)) {
        if (g.edge_count() > 12)
            continue;
        std::set<std::vector<bool>> seen;
        std::vector<bool> previous;
        std::size_t count = 0;
        for (auto o : enumerate_orientations(g)) {
            REQUIRE(o.matches(g));
            if (count > 0)
                REQUIRE(previous < o.reversed);
            previous = o.reversed;
            seen.insert(o.reversed);
            ++count;
        }
        REQUIRE(count == (std::size_t{1} << g.edge_count()));
        REQUIRE(seen.size() == count);
    }
}

TEST_CASE("every orientation is acyclic exactly for forests", "[core][property]")
{
    for (auto & g : graph_catalogue(5)) {
        bool all_acyclic = true;
        for (auto o : enumerate_orientations(g))
            all_acyclic = all_acyclic && oracle::acyclic(apply_orientation(g, o));
        REQUIRE(all_acyclic == oracle::is_forest(g));
    }
}

TEST_CASE("colouring checkers", "[core]")
{
    auto k3 = complete_graph(3);
    CHECK(is_proper_coloring(k3, Coloring::over_first(3, {0, 1, 2})));
    CHECK_FALSE(is_proper_coloring(k3, Coloring::over_first(2, {0, 1, 0})));

    auto c3 = directed_cycle(3);
    CHECK(is_proper_dicoloring(c3, Coloring::over_first(2, {0, 0, 1})));
    CHECK_FALSE(is_proper_dicoloring(c3, Coloring::over_first(1, {0, 0, 0})));
    CHECK(is_proper_dicoloring(bidirect(k3), Coloring::over_first(3, {0, 1, 2})));

    CHECK_THROWS_AS(is_proper_coloring(k3, Coloring::over_first(2, {0, 1})), InvalidArgument);
    CHECK_THROWS_AS(is_proper_coloring(k3, Coloring::over_first(2, {0, 1, 2})), InvalidArgument);
}

TEST_CASE("dicolourings of a bidirected graph are exactly its proper colourings", "[core][property]")
{
    for (auto & g : graph_catalogue(6)) {
        auto d = bidirect(g);
        auto n = g.order();
        // No 2-subset containing an edge is acyclic.
        for (auto e : g.edges())
            REQUIRE_FALSE(oracle::acyclic_within(d, (oracle::Bits{1} << e.u) | (oracle::Bits{1} << e.v)));
        // Every 3-colouring pattern on small graphs; a sample on larger ones.
        std::uint64_t patterns = 1;
        for (std::size_t i = 0; i < n; ++i)
            patterns *= 3;
        auto stride = std::max<std::uint64_t>(1, patterns / 64);
        for (std::uint64_t p = 0; p < patterns; p += stride) {
            std::vector<Colour> f(n);
            auto x = p;
            for (auto & c : f) {
                c = static_cast<Colour>(x % 3);
                x /= 3;
            }
            auto coloring = Coloring::over_first(3, f);
            REQUIRE(is_proper_dicoloring(d, coloring) == is_proper_coloring(g, coloring));
        }
    }
}

TEST_CASE("maximal_acyclic_sets examples", "[core]")
{
    auto c3 = maximal_acyclic_sets(directed_cycle(3));
    std::set<oracle::Bits> got;
    for (auto & s : c3)
        got.insert(as_bits(s));
    CHECK(got == std::set<oracle::Bits>{0b011, 0b101, 0b110});

    auto tt = maximal_acyclic_sets(transitive_tournament(5));
    REQUIRE(tt.size() == 1);
    CHECK(tt.front().count() == 5);

    auto k3 = maximal_acyclic_sets(bidirect(complete_graph(3)));
    got.clear();
    for (auto & s : k3)
        got.insert(as_bits(s));
    CHECK(got == std::set<oracle::Bits>{0b001, 0b010, 0b100});

    CHECK_THROWS_AS(maximal_acyclic_sets(Digraph(25)), LimitExceeded);
}

TEST_CASE("maximal_acyclic_sets matches subset enumeration", "[core][property]")
{
    auto check = [](const Digraph & d) {
        auto sets = maximal_acyclic_sets(d);
        std::set<oracle::Bits> got;
        for (auto & s : sets)
            got.insert(as_bits(s));
        REQUIRE(got.size() == sets.size());
        REQUIRE(got == oracle::maximal_acyclic_sets(d));
    };
    for (auto & d : digraph_catalogue(4))
        check(d);
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto d = random_digraph(6, RngSpec{5}.child(i));
        check(d);
    }
}

TEST_CASE("induced subgraphs keep the arcs inside the set", "[core]")
{
    auto c3 = directed_cycle(3);
    auto pair = induced_subdigraph(c3, make_vertex_set(3, {0, 1}));
    CHECK(pair.order() == 2);
    CHECK(pair.arc_count() == 1);
    CHECK(pair.label(0) == "0");

    VertexSet all(3);
    all.set();
    auto same = induced_subdigraph(c3, all);
    CHECK(same.arcs() == c3.arcs());

    auto k4 = bidirect(complete_graph(4));
    auto k3 = induced_subdigraph(k4, make_vertex_set(4, {1, 2, 3}));
    CHECK(k3.arcs() == bidirect(complete_graph(3)).arcs());
    CHECK(k3.label(0) == "1");

    CHECK_THROWS_AS(induced_subdigraph(c3, make_vertex_set(5, {4})), InvalidArgument);
}

TEST_CASE("catalogues have the known isomorphism class counts", "[core][catalogue]")
{
    std::vector<std::size_t> graphs(8, 0), digraphs(5, 0);
    for (auto & g : graph_catalogue(7))
        ++graphs[g.order()];
    CHECK(graphs == std::vector<std::size_t>{0, 1, 2, 4, 11, 34, 156, 1044});
    for (auto & d : digraph_catalogue(4))
        ++digraphs[d.order()];
    CHECK(digraphs == std::vector<std::size_t>{0, 1, 3, 16, 218});
}

TEST_CASE("canonical codes are relabelling invariant", "[core][catalogue][property]")
{
    for (std::uint64_t i = 0; i < 100; ++i) {
        auto d = random_digraph(6, RngSpec{3}.child(i));
        auto n = d.order();
        std::vector<Vertex> perm(n);
        for (std::size_t v = 0; v < n; ++v)
            perm[v] = v;
        Stream s(RngSpec{4}.child(i));
        for (std::size_t v = n; v > 1; --v)
            std::swap(perm[v - 1], perm[s.below(v)]);
        Digraph e(n);
        for (auto a : d.arcs())
            e.add_arc(perm[a.from], perm[a.to]);
        REQUIRE(canonical_code(d) == canonical_code(e));
        REQUIRE(canonical_code(d.underlying()) == canonical_code(e.underlying()));
    }
    CHECK(canonical_code(directed_cycle(3)) != canonical_code(transitive_tournament(3)));
}
