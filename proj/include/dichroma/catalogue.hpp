#ifndef DICHROMA_CATALOGUE_HPP
#define DICHROMA_CATALOGUE_HPP

#include <dichroma/graph.hpp>
#include <dichroma/rng.hpp>

#include <vector>

namespace dichroma
{
    /// One representative of every isomorphism class of graphs on 1..max_n
    /// vertices (max_n <= 8), ordered by vertex count and then by canonical
    /// code.
    auto graph_catalogue(std::size_t max_n) -> std::vector<Graph>;

    /// One representative of every isomorphism class of digraphs (2-cycles
    /// allowed) on 1..max_n vertices (max_n <= 5).
    auto digraph_catalogue(std::size_t max_n) -> std::vector<Digraph>;

    /// Canonical codes: equal exactly when the inputs are isomorphic.
    auto canonical_code(const Graph & g) -> std::uint64_t;
    auto canonical_code(const Digraph & d) -> std::uint64_t;

    /// A digraph on 1..max_n vertices (uniform size), each ordered pair
    /// carrying an arc with probability 1/2, all drawn from `rng`.
    auto random_digraph(std::size_t max_n, RngSpec rng) -> Digraph;
}

#endif
