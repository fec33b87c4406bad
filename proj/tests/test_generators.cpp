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
    auto disjoint_pairs(std::size_t n, std::size_t k) -> std::size_t
    {
        auto sets = oracle::subsets(n, k);
        std::size_t count = 0;
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                bool disjoint = true;
                for (auto x : sets[i])
                    for (auto y : sets[j])
                        disjoint = disjoint && x != y;
                count += disjoint ? 1 : 0;
            }
        return count;
    }

    auto dot(const Point & x, const Point & y) -> double
    {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += x[i] * y[i];
        return s;
    }
}

TEST_CASE("kneser graph sizes match disjoint-pair counts", "[generators]")
{
    auto petersen = kneser(5, 2);
    CHECK(petersen.order() == 10);
    CHECK(petersen.edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v)
        CHECK(petersen.degree(v) == 3);

    auto matching = kneser(4, 2);
    CHECK(matching.order() == 6);
    CHECK(matching.edge_count() == 3);

    auto single = kneser(3, 3);
    CHECK(single.order() == 1);
    CHECK(single.edge_count() == 0);

    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            auto g = kneser(n, k);
            REQUIRE(g.order() == binomial_u64(n, k));
            REQUIRE(g.edge_count() == disjoint_pairs(n, k));
        }

    CHECK_THROWS_AS(kneser(3, 0), InvalidArgument);
    CHECK_THROWS_AS(kneser(3, 4), InvalidArgument);
    CHECK_THROWS_AS(kneser(30, 15), LimitExceeded);
}

TEST_CASE("kneser vertices are colexicographic and labelled by subsets", "[generators]")
{
    auto g = kneser(4, 2);
    std::vector<std::string> expected{"{1,2}", "{1,3}", "{2,3}", "{1,4}", "{2,4}", "{3,4}"};
    CHECK(g.labels() == expected);
    auto subsets = colex_subsets(6, 3);
    for (std::size_t i = 0; i < subsets.size(); ++i)
        REQUIRE(colex_rank(subsets[i]) == i);
}

TEST_CASE("kneser(n,1) is the complete graph", "[generators][property]")
{
    for (std::size_t n = 1; n <= 8; ++n) {
        auto g = kneser(n, 1);
        REQUIRE(g.edge_count() == n * (n - 1) / 2);
        if (n <= 8)
            REQUIRE(canonical_code(g) == canonical_code(complete_graph(n)));
    }
}

TEST_CASE("complete multipartite graphs", "[generators]")
{
    auto octahedron = complete_multipartite(2, 3);
    CHECK(octahedron.order() == 6);
    CHECK(octahedron.edge_count() == 12);
    CHECK(octahedron.label(3) == "p1.1");
    CHECK(complete_multipartite(1, 5).edge_count() == 10);
    CHECK(complete_multipartite(4, 1).edge_count() == 0);
    CHECK_THROWS_AS(complete_multipartite(0, 3), InvalidArgument);
}

TEST_CASE("rook graphs", "[generators]")
{
    CHECK(rook(2).edge_count() == 2);
    auto r3 = rook(3);
    CHECK(r3.order() == 9);
    CHECK(r3.edge_count() == 18);
    for (Vertex v = 0; v < 9; ++v)
        CHECK(r3.degree(v) == 4);
    CHECK(r3.label(5) == "(1,2)");
    CHECK(rook(1).edge_count() == 0);
    CHECK_THROWS_AS(rook(0), InvalidArgument);
}

TEST_CASE("rook(n) is the tensor square of K_n, vertex for vertex", "[generators][property]")
{
    for (std::size_t n = 1; n <= 6; ++n) {
        auto product = tensor_product(complete_graph(n), complete_graph(n));
        auto r = rook(n);
        REQUIRE(product.edges() == r.edges());
    }
}

TEST_CASE("chromatic number of kneser graphs is n-2k+2", "[generators][solvers][property]")
{
    for (std::size_t n = 2; n <= 9; ++n)
        for (std::size_t k = 1; 2 * k <= n; ++k) {
            if (binomial_u64(n, k) > 40)
                continue;
            auto c = chromatic_number(kneser(n, k));
            REQUIRE(c.value == static_cast<int>(n - 2 * k + 2));
            REQUIRE(is_proper_coloring(kneser(n, k), *c.witness));
        }
}

TEST_CASE("rook graphs embed in kneser graphs", "[generators]")
{
    auto w = embed_rook_in_kneser(6, 2);
    CHECK(w.source.order() == 9);
    CHECK(w.source.edge_count() == 18);
    CHECK(verify_embedding(w));
    for (auto e : w.source.edges())
        CHECK(w.target.has_edge(w.map[e.u], w.map[e.v]));

    auto small = embed_rook_in_kneser(4, 2);
    CHECK(small.source.order() == 4);
    CHECK(small.source.edge_count() == 2);
    CHECK(verify_embedding(small));

    auto trivial = embed_rook_in_kneser(5, 3);
    CHECK(trivial.source.order() == 1);
    CHECK(verify_embedding(trivial));

    CHECK_THROWS_AS(embed_rook_in_kneser(6, 1), InvalidArgument);
    CHECK_THROWS_AS(embed_rook_in_kneser(3, 4), InvalidArgument);
}

TEST_CASE("kneser tensor embeddings", "[generators]")
{
    auto a = embed_kneser_tensor(7, 3, 3, 1);
    CHECK(a.source.order() == 3 * 6);
    CHECK(a.source.edges() == tensor_product(kneser(3, 1), kneser(4, 2)).edges());
    CHECK(verify_embedding(a));

    auto b = embed_kneser_tensor(8, 4, 4, 2);
    CHECK(b.source.order() == 36);
    CHECK(verify_embedding(b));

    CHECK_THROWS_AS(embed_kneser_tensor(7, 3, 3, 3), InvalidArgument);
    CHECK_THROWS_AS(embed_kneser_tensor(7, 3, 1, 1), InvalidArgument);
}

TEST_CASE("verify_embedding rejects non-induced maps", "[generators]")
{
    EmbeddingWitness w{path_graph(3), complete_graph(3), {0, 1, 2}};
    CHECK_FALSE(verify_embedding(w));
    w.source = complete_graph(3);
    CHECK(verify_embedding(w));
    w.map = {0, 1, 1};
    CHECK_FALSE(verify_embedding(w));
}

TEST_CASE("small named graphs", "[generators]")
{
    auto get = [](const std::string & name) { return std::get<Graph>(named_graph(name)); };
    CHECK(get("K4").edge_count() == 6);
    CHECK(get("C5").edge_count() == 5);
    CHECK(get("P4").edge_count() == 3);
    CHECK(get("E3").edge_count() == 0);
    CHECK(get("W5").edge_count() == 10);
    CHECK(get("Q3").edge_count() == 12);
    CHECK(get("K2,3").edge_count() == 6);
    CHECK(get("Petersen").edges() == kneser(5, 2).edges());
    CHECK(get("Octahedron").edge_count() == 12);
    CHECK(std::get<Digraph>(named_graph("DC4")).arcs() == directed_cycle(4).arcs());
    CHECK(std::get<Digraph>(named_graph("TT3")).arc_count() == 3);
    CHECK_THROWS_AS(named_graph("Heawood"), InvalidArgument);
}

TEST_CASE("the regular simplex is regular and unit", "[generators]")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        auto s = regular_simplex(n);
        REQUIRE(s.size() == n + 2);
        for (std::size_t i = 0; i < s.size(); ++i) {
            REQUIRE(s[i].size() == n + 1);
            REQUIRE(dot(s[i], s[i]) == Catch::Approx(1.0).margin(1e-12));
            for (std::size_t j = i + 1; j < s.size(); ++j)
                REQUIRE(dot(s[i], s[j]) == Catch::Approx(-1.0 / static_cast<double>(n + 1)).margin(1e-12));
        }
    }
}

TEST_CASE("simplex colouring examples", "[generators]")
{
    auto s = regular_simplex(1);
    // Both other vertices of the triangle tie; the lower index wins.
    CHECK(simplex_coloring({s[0]}).assignment == std::vector<Colour>{1});
    CHECK(simplex_coloring({s[0]}).palette.size() == 3);

    // Antipodal points away from ties get different colours.
    for (std::size_t n = 1; n <= 3; ++n)
        for (int i = 0; i < 50; ++i) {
            Point x(n + 1);
            double norm = 0;
            for (std::size_t j = 0; j <= n; ++j) {
                x[j] = std::sin(1.3 * i + 0.7 * static_cast<double>(j) + 0.1);
                norm += x[j] * x[j];
            }
            for (auto & c : x)
                c /= std::sqrt(norm);
            Point y = x;
            for (auto & c : y)
                c = -c;
            auto f = simplex_coloring({x, y});
            REQUIRE(f.assignment[0] != f.assignment[1]);
        }

    CHECK_THROWS_AS(simplex_coloring({{0.5, 0.5}}), InvalidArgument);
    CHECK_THROWS_AS(simplex_coloring({{1.0, 0.0}, {1.0, 0.0, 0.0}}), InvalidArgument);
}

TEST_CASE("borsuk samples", "[generators]")
{
    BorsukSampleConfig config;
    config.n = 1;
    config.a = 1.9;
    config.delta = 0.05;
    config.cube_side = 0.3;
    auto sample = borsuk_sample(config);
    CHECK(sample.graph.order() >= 30);
    CHECK(sample.graph.order() <= 60);
    for (Vertex v = 0; v < sample.graph.order(); ++v)
        CHECK(sample.graph.degree(v) >= 1);
    CHECK(chromatic_number(sample.graph).value >= 3);

    for (auto & p : sample.points)
        REQUIRE(dot(p, p) == Catch::Approx(1.0).margin(1e-12));

    config.cube_side = 10;
    CHECK(borsuk_sample(config).graph.order() <= 1);

    // Sphere diameter is 2, so a threshold of 2 leaves no edges.
    config.cube_side = 0.3;
    CHECK(borsuk_graph(sample.points, 2.0).edge_count() == 0);

    config.a = 2.0;
    CHECK_THROWS_AS(borsuk_sample(config), InvalidArgument);
    config.a = 1.9;
    config.delta = 0.2;
    CHECK_THROWS_AS(borsuk_sample(config), InvalidArgument);
}

TEST_CASE("halving the cube side multiplies the sample by about 2^(n+1)", "[generators][property]")
{
    for (std::size_t n = 1; n <= 2; ++n) {
        BorsukSampleConfig config;
        config.n = n;
        config.a = 1.9;
        config.cube_side = n == 1 ? 0.1 : 0.2;
        auto coarse = static_cast<double>(borsuk_sample(config).graph.order());
        config.cube_side /= 2;
        auto fine = static_cast<double>(borsuk_sample(config).graph.order());
        auto ratio = fine / coarse;
        auto expected = std::pow(2.0, static_cast<double>(n + 1));
        REQUIRE(ratio >= 0.5 * expected);
        REQUIRE(ratio <= 1.5 * expected);
    }
}

TEST_CASE("the simplex colouring is proper once the threshold is high enough", "[generators]")
{
    BorsukSampleConfig config;
    config.n = 1;
    config.cube_side = 0.1;
    auto points = borsuk_sample(config).points;
    auto f = simplex_coloring(points);

    // Bisect for the smallest threshold at which the colouring is proper;
    // larger thresholds only remove edges.
    double lo = 0.5, hi = 1.999;
    REQUIRE(is_proper_coloring(borsuk_graph(points, hi), f));
    REQUIRE_FALSE(is_proper_coloring(borsuk_graph(points, lo), f));
    for (int i = 0; i < 40; ++i) {
        double mid = (lo + hi) / 2;
        (is_proper_coloring(borsuk_graph(points, mid), f) ? hi : lo) = mid;
    }
    for (double a = hi; a < 2.0; a += 0.01)
        REQUIRE(is_proper_coloring(borsuk_graph(points, a), f));
    // For n = 1 the three colour arcs each span 120 degrees, so properness
    // needs distance above 2 sin(60 degrees) = sqrt 3.
    CHECK(hi <= std::sqrt(3.0) + 1e-6);
}
