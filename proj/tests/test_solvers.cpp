#include "oracles.hpp"

#include <dichroma/catalogue.hpp>
#include <dichroma/core.hpp>
#include <dichroma/error.hpp>
#include <dichroma/generators.hpp>
#include <dichroma/products.hpp>
#include <dichroma/solvers.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace dichroma;

namespace
{
    auto value(const Certificate & c) -> std::size_t { return static_cast<std::size_t>(c.value); }

    auto check_graph_certificate(const Graph & g, const Certificate & c) -> void
    {
        REQUIRE(c.witness);
        REQUIRE(is_proper_coloring(g, *c.witness));
        REQUIRE(c.witness->palette.size() == value(c));
    }

    auto check_digraph_certificate(const Digraph & d, const Certificate & c) -> void
    {
        REQUIRE(c.witness);
        REQUIRE(is_proper_dicoloring(d, *c.witness));
        REQUIRE(c.witness->palette.size() == value(c));
    }

    auto independent = [](const Graph & g) { return [&g](oracle::Bits s) { return oracle::independent_within(g, s); }; };
    auto acyclic = [](const Digraph & d) { return [&d](oracle::Bits s) { return oracle::acyclic_within(d, s); }; };
}

TEST_CASE("chromatic number examples", "[solvers]")
{
    auto petersen = kneser(5, 2);
    auto c = chromatic_number(petersen);
    CHECK(c.value == 3);
    check_graph_certificate(petersen, c);
    CHECK(chromatic_number(complete_graph(4)).value == 4);
    CHECK(chromatic_number(kneser(6, 2)).value == 4);
    CHECK(chromatic_number(Graph(0)).value == 0);
    CHECK(chromatic_number(Graph(3)).value == 1);
    CHECK(chromatic_number(cycle_graph(7)).value == 3);
    CHECK_FALSE(c.lower_bound_trace.empty());
}

TEST_CASE("dichromatic number examples", "[solvers]")
{
    CHECK(dichromatic_number(directed_cycle(3)).value == 2);
    CHECK(dichromatic_number(transitive_tournament(6)).value == 1);
    auto k3 = bidirect(complete_graph(3));
    auto c = dichromatic_number(k3);
    CHECK(c.value == 3);
    check_digraph_certificate(k3, c);
}

TEST_CASE("graph dichromatic number examples", "[solvers]")
{
    auto tree = path_graph(6);
    CHECK(dichromatic_number_of_graph(tree).value == 1);

    auto c5 = cycle_graph(5);
    auto c = dichromatic_number_of_graph(c5);
    CHECK(c.value == 2);
    REQUIRE(c.orientation);
    auto d = apply_orientation(c5, *c.orientation);
    CHECK_FALSE(is_acyclic(d));
    check_digraph_certificate(d, c);

    CHECK(dichromatic_number_of_graph(complete_graph(3)).value == 2);
    // Every tournament on 4 vertices is 2-dicolourable, and some need 2.
    CHECK(dichromatic_number_of_graph(complete_graph(4)).value == 2);

    SolveBudget tight;
    tight.orientation_limit = 5;
    CHECK_THROWS_AS(dichromatic_number_of_graph(complete_graph(4), tight), LimitExceeded);
}

TEST_CASE("exact solvers agree with set-partition enumeration", "[solvers][property]")
{
    for (auto & g : graph_catalogue(7)) {
        auto c = chromatic_number(g);
        REQUIRE(value(c) == oracle::chromatic_number(g));
        check_graph_certificate(g, c);
    }
    for (auto & d : digraph_catalogue(5)) {
        auto c = dichromatic_number(d);
        REQUIRE(value(c) == oracle::dichromatic_number(d));
        check_digraph_certificate(d, c);
    }
    for (std::uint64_t i = 0; i < 150; ++i) {
        auto d = random_digraph(8, RngSpec{99}.child(i));
        REQUIRE(value(dichromatic_number(d)) == oracle::dichromatic_number(d));
    }
}

TEST_CASE("bidirected graphs have the graph's chromatic number", "[solvers][property]")
{
    for (auto & g : graph_catalogue(6))
        REQUIRE(dichromatic_number(bidirect(g)).value == chromatic_number(g).value);
}

TEST_CASE("dichromatic number sits below the list and underlying chromatic numbers", "[solvers][property]")
{
    for (auto & d : digraph_catalogue(4)) {
        auto chi = dichromatic_number(d).value;
        REQUIRE(chi <= list_dichromatic_number(d).value);
        REQUIRE(chi <= chromatic_number(d.underlying()).value);
    }
    for (auto & g : graph_catalogue(4))
        REQUIRE(list_dichromatic_number(bidirect(g)).value == list_chromatic_number(g).value);
}

TEST_CASE("list solver examples", "[solvers]")
{
    auto c3 = directed_cycle(3);
    auto dc = list_dichromatic_number(c3);
    CHECK(dc.value == 2);
    REQUIRE(dc.rejected);
    CHECK(dc.rejected->k == 1);
    CHECK_FALSE(find_acceptable_dicoloring(c3, *dc.rejected));
    check_digraph_certificate(c3, dc);

    CHECK(list_dichromatic_number(transitive_tournament(4)).value == 1);
    CHECK(list_dichromatic_number(bidirect(cycle_graph(4))).value == 2);

    CHECK(list_chromatic_number(complete_bipartite(2, 2)).value == 2);
    CHECK(list_chromatic_number(cycle_graph(4)).value == 2);
    auto k3 = list_chromatic_number(complete_graph(3));
    CHECK(k3.value == 3);
    REQUIRE(k3.rejected);
    CHECK_FALSE(find_acceptable_coloring(complete_graph(3), *k3.rejected));
    CHECK(list_chromatic_number(Graph(5)).value == 1);
    // The classic example: K_{2,4} is 2-colourable but not 2-choosable.
    CHECK(list_chromatic_number(complete_bipartite(2, 4)).value == 3);
}

TEST_CASE("list solvers match exhaustive assignment enumeration", "[solvers][property]")
{
    for (auto & g : graph_catalogue(3))
        REQUIRE(value(list_chromatic_number(g)) == oracle::choice_number(g.order(), independent(g), 3));
    for (auto & d : digraph_catalogue(3))
        REQUIRE(value(list_dichromatic_number(d)) == oracle::choice_number(d.order(), acyclic(d), 3));
    // Four vertices: the full oracle is affordable up to lists of size 2.
    for (auto & g : graph_catalogue(4)) {
        auto v = value(list_chromatic_number(g));
        if (v <= 2)
            REQUIRE(oracle::choice_number(4, independent(g), 2) == v);
        else
            REQUIRE(oracle::choice_number(4, independent(g), 2) == 3);
    }
}

TEST_CASE("canonical list enumeration counts", "[solvers][property]")
{
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::size_t k = 1; k <= 3; ++k)
            REQUIRE(for_each_canonical_list_assignment(n, k, [](auto &) { return true; }) == oracle::canonical_list_count(n, k));
    REQUIRE(for_each_canonical_list_assignment(4, 1, [](auto &) { return true; }) == oracle::canonical_list_count(4, 1));
    REQUIRE(for_each_canonical_list_assignment(4, 2, [](auto &) { return true; }) == oracle::canonical_list_count(4, 2));
    CHECK(for_each_canonical_list_assignment(4, 3, [](auto &) { return true; }) == 7284);

    std::uint64_t seen = 0;
    auto visited = for_each_canonical_list_assignment(3, 2, [&](const ListAssignment & l) {
        REQUIRE(l.k == 2);
        REQUIRE(l.lists.front() == std::vector<Colour>{0, 1});
        return ++seen < 5;
    });
    CHECK(visited == 5);
}

TEST_CASE("acceptable colourings", "[solvers]")
{
    auto c3 = directed_cycle(3);
    auto f = find_acceptable_dicoloring(c3, ListAssignment::from_lists({{1, 2}, {1, 2}, {1, 2}}));
    REQUIRE(f);
    CHECK(is_proper_dicoloring(c3, *f));
    CHECK_FALSE(find_acceptable_dicoloring(c3, ListAssignment::from_lists({{1}, {1}, {1}})));

    auto tt = transitive_tournament(4);
    auto any = find_acceptable_dicoloring(tt, ListAssignment::from_lists({{3}, {3}, {3}, {3}}));
    REQUIRE(any);
    CHECK(any->assignment == std::vector<Colour>{3, 3, 3, 3});

    auto k2 = complete_graph(2);
    CHECK_FALSE(find_acceptable_coloring(k2, ListAssignment::from_lists({{5}, {5}})));
    auto g = find_acceptable_coloring(k2, ListAssignment::from_lists({{5, 7}, {5, 9}}));
    REQUIRE(g);
    CHECK(g->assignment[0] != g->assignment[1]);
}

TEST_CASE("find_coloring and find_dicoloring", "[solvers]")
{
    CHECK_FALSE(find_coloring(complete_graph(4), 3));
    auto f = find_coloring(kneser(5, 2), 3);
    REQUIRE(f);
    CHECK(is_proper_coloring(kneser(5, 2), *f));
    CHECK_FALSE(find_dicoloring(directed_cycle(5), 1));
    CHECK(find_dicoloring(directed_cycle(5), 2));
}

TEST_CASE("sabidussi colouring", "[solvers]")
{
    auto tt = transitive_tournament(3);
    auto zero = sabidussi_coloring(Coloring::over_first(1, {0, 0, 0}), Coloring::over_first(1, {0, 0, 0}), 1);
    CHECK(zero.assignment == std::vector<Colour>(9, 0));
    CHECK(is_proper_dicoloring(cartesian_product(tt, tt), zero));

    auto c3 = directed_cycle(3);
    auto f = sabidussi_coloring(Coloring::over_first(2, {0, 0, 1}), Coloring::over_first(2, {0, 1, 1}), 2);
    CHECK(f.assignment.size() == 9);
    CHECK(is_proper_dicoloring(cartesian_product(c3, c3), f));

    auto k3 = bidirect(complete_graph(3));
    auto id = Coloring::over_first(3, {0, 1, 2});
    CHECK(is_proper_dicoloring(cartesian_product(k3, k3), sabidussi_coloring(id, id, 3)));

    CHECK_THROWS_AS(sabidussi_coloring(id, id, 2), InvalidArgument);
    CHECK_THROWS_AS(sabidussi_coloring(id, id, 0), InvalidArgument);
}

TEST_CASE("sabidussi equality on small pairs", "[solvers][property]")
{
    auto catalogue = digraph_catalogue(3);
    for (std::size_t i = 0; i < catalogue.size(); ++i)
        for (std::size_t j = i; j < catalogue.size(); ++j) {
            auto & x = catalogue[i];
            auto & y = catalogue[j];
            auto cx = dichromatic_number(x), cy = dichromatic_number(y);
            auto N = static_cast<std::size_t>(std::max(cx.value, cy.value));
            auto product = cartesian_product(x, y);
            REQUIRE(oracle::dichromatic_number(product) == N);
            REQUIRE(is_proper_dicoloring(product, sabidussi_coloring(*cx.witness, *cy.witness, N)));
        }
}

TEST_CASE("graphs needing three colours have an orientation needing two", "[solvers][property]")
{
    for (auto & g : graph_catalogue(5)) {
        auto chi = chromatic_number(g).value;
        auto reaching = orientation_reaching(g, 2);
        // Exactly the graphs with a cycle have a cyclic orientation.
        REQUIRE(reaching.has_value() == ! oracle::is_forest(g));
        if (chi >= 3)
            REQUIRE(reaching.has_value());
        if (reaching)
            REQUIRE_FALSE(oracle::acyclic(apply_orientation(g, *reaching)));
        if (chi >= 3)
            REQUIRE(dichromatic_number_of_graph(g).value >= 2);
    }
}

TEST_CASE("kneser dichromatic numbers respect the logarithmic lower bound", "[solvers][property]")
{
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t k = 1; 2 * k <= n; ++k) {
            auto g = kneser(n, k);
            if (g.edge_count() > 15)
                continue;
            auto dn = static_cast<double>(n), dk = static_cast<double>(k);
            auto bound = std::floor((dn - 2 * dk + 2) / (8 * std::log2(dn / dk)));
            REQUIRE(dichromatic_number_of_graph(g).value >= bound);
        }
}

TEST_CASE("budgets", "[solvers]")
{
    SolveBudget b;
    CHECK_NOTHROW(b.validate());
    b.timeout_seconds = 0;
    CHECK_THROWS_AS(b.validate(), InvalidArgument);
    b = {};
    b.vertex_limit = 65;
    CHECK_THROWS_AS(b.validate(), InvalidArgument);

    b = {};
    b.vertex_limit = 4;
    CHECK_THROWS_AS(chromatic_number(cycle_graph(5), b), LimitExceeded);

    b = {};
    b.assignment_limit = 8;
    try {
        list_chromatic_number(complete_graph(3), b);
        FAIL("expected the assignment limit to stop the search");
    }
    catch (const BudgetExceeded & e) {
        CHECK(e.lower() == 3);
        CHECK(e.upper() == 3);
    }

    // A search with thousands of nodes cannot finish within a nanosecond.
    Graph g(40);
    Stream s(RngSpec{8});
    for (Vertex u = 0; u < 40; ++u)
        for (Vertex v = u + 1; v < 40; ++v)
            if (s.below(100) < 60)
                g.add_edge(u, v);
    auto full = chromatic_number(g);
    REQUIRE(full.nodes > 4096);
    b = {};
    b.timeout_seconds = 1e-9;
    try {
        chromatic_number(g, b);
        FAIL("expected a timeout");
    }
    catch (const BudgetExceeded & e) {
        CHECK(e.lower() >= 1);
        CHECK(e.lower() <= full.value);
        CHECK(e.upper() >= full.value);
    }
}
