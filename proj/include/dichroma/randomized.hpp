#ifndef DICHROMA_RANDOMIZED_HPP
#define DICHROMA_RANDOMIZED_HPP

#include <dichroma/combinatorics.hpp>
#include <dichroma/graph.hpp>
#include <dichroma/rng.hpp>

#include <cstdint>
#include <optional>
#include <utility>

namespace dichroma
{
    inline constexpr std::size_t default_counting_edge_limit = 25;
    inline constexpr std::uint64_t default_candidate_limit = 50'000'000;

    /// Edge i of g.edges() is reversed (high->low) when the first draw of
    /// stream rng.child(i) is heads.
    auto random_orientation_choice(const Graph & g, RngSpec rng) -> Orientation;
    auto random_orientation(const Graph & g, RngSpec rng) -> Digraph;

    /// Exact number of acyclic orientations, by walking all 2^m orientations
    /// in Gray-code order.
    auto count_acyclic_orientations(const Graph & g, std::size_t edge_limit = default_counting_edge_limit) -> BigInt;

    /// Two disjoint l-sets, complete to each other in the underlying graph,
    /// whose bipartite arcs contain no directed cycle.
    struct Biclique
    {
        VertexSet left, right;
    };

    /// Searches every pair of l-sets (left side containing the smaller minimum
    /// vertex). With a hint, left must lie in the first set and right in the
    /// second. Throws BudgetExceeded after `candidate_limit` candidate pairs.
    auto find_acyclic_biclique(const Digraph & d, std::size_t l,
            const std::optional<std::pair<VertexSet, VertexSet>> & partition_hint = std::nullopt,
            std::uint64_t candidate_limit = default_candidate_limit) -> std::optional<Biclique>;

    /// An l-clique of the underlying graph inducing an acyclic subdigraph.
    auto find_acyclic_clique(const Digraph & d, std::size_t l, std::uint64_t candidate_limit = default_candidate_limit)
        -> std::optional<VertexSet>;

    /// Rejection sampling: attempt i is random_orientation(g, rng.child(i)),
    /// accepted once no K_{l,l} (and, when asked, no K_l) is acyclic.
    /// Throws AttemptsExhausted.
    auto certified_breaking_orientation(const Graph & g, std::size_t l, RngSpec rng, std::uint64_t max_attempts,
            bool break_cliques = false) -> Digraph;

    inline constexpr double wilson_z95 = 1.959963984540054;

    /// A binomial proportion with its Wilson score interval.
    struct Estimate
    {
        std::uint64_t successes = 0;
        std::uint64_t trials = 0;
        double value = 0;
        double lower = 0;
        double upper = 0;
    };

    auto wilson_estimate(std::uint64_t successes, std::uint64_t trials, double z = wilson_z95) -> Estimate;

    /// Fraction of random orientations with an acyclic K_{l,l}; trial i uses
    /// rng.child(i), so the estimate is independent of `threads`.
    auto estimate_biclique_event(const Graph & g, std::size_t l, std::uint64_t trials, RngSpec rng, std::size_t threads = 1)
        -> Estimate;

    /// The same probability, exactly, over all 2^m orientations.
    auto exact_biclique_probability(const Graph & g, std::size_t l, std::size_t edge_limit = 20) -> Rational;

    /// n^(4l) 2^(-l^2): the union bound on an acyclic K_{l,l} in a random
    /// orientation of an n-vertex graph.
    auto biclique_union_bound(std::size_t n, std::size_t l) -> double;

    struct GBoundParams
    {
        std::size_t l1 = 2, l2 = 1, n = 1;
        double s = 1, t = 1;
        std::size_t u = 1;

        auto validate() const -> void;
    };

    /// s^u exp(-(n/2) 2^(-4 l2 t u / ((l1-l2) n))), evaluated in log space.
    auto log_g_bound(const GBoundParams & p) -> double;
    auto g_bound(const GBoundParams & p) -> double;

    struct ExpectationParams
    {
        std::uint64_t m = 0, u = 1, k = 1, a = 0;

        auto validate() const -> void;
    };

    /// m C(u-a, k) / C(u, k): expected number of the m vertices of a part whose
    /// random k-list avoids a fixed a-set of colours.
    auto expected_avoiding_count(const ExpectationParams & p) -> Rational;

    /// 2 exp(-t^2 / (2 c^2 n)).
    auto concentration_bound(std::uint64_t n, double c, double t) -> double;
}

#endif
