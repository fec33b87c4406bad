#ifndef DICHROMA_COVERS_HPP
#define DICHROMA_COVERS_HPP

#include <dichroma/graph.hpp>
#include <dichroma/randomized.hpp>
#include <dichroma/rng.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace dichroma
{
    /// At most s members, each with at most t vertices.
    struct SetCollection
    {
        std::vector<VertexSet> members;
        double s = 0;
        double t = 0;

        /// Throws InvalidArgument unless every member is sized for n vertices
        /// and the declared bounds hold.
        auto validate(std::size_t n) const -> void;
        auto order() const -> std::size_t { return members.empty() ? 0 : members.front().size(); }
    };

    struct SemicoverSpec
    {
        SetCollection collection;
        double lambda = 1;

        auto validate(std::size_t n) const -> void;
    };

    inline constexpr std::size_t default_member_limit = 1'000'000;

    struct RookCollectionParams
    {
        std::size_t n = 1;
        std::size_t beta = 0;

        /// beta = floor(124 ln n).
        static auto with_default_beta(std::size_t n) -> RookCollectionParams;
    };

    /// Members L u (A x B) for every row or column L and every pair of
    /// beta-sets A, B, listed without deduplication, so there are exactly
    /// 2n C(n,beta)^2 of them when 1 <= beta <= n. Otherwise the block family
    /// is {V} and the collection is the single member V.
    /// Declared s = max{1, 2n C(n,beta)^2}; declared t = n + beta^2, raised
    /// to n^2 in the degenerate branch so the single member fits.
    auto build_rook_collection(const RookCollectionParams & p, std::size_t member_limit = default_member_limit) -> SetCollection;

    /// Every non-empty part lies inside some member.
    auto is_covered(const Partition & p, const SetCollection & c) -> bool;

    /// Every vertex's part colour belongs to its list. Throws InvalidArgument
    /// if the palettes differ.
    auto accepts(const ListAssignment & lists, const Partition & p) -> bool;

    struct CoverVerdict
    {
        bool holds = true;
        /// An acyclic set that fails the condition, when holds is false.
        std::optional<VertexSet> counterexample;
        std::size_t maximal_sets = 0;
    };

    /// Whether every acyclic partition of d over a palette of the given size
    /// is covered by c. Decided on the maximal acyclic sets, which is exact
    /// because with palette_size >= n every acyclic set extends to an acyclic
    /// partition (leftover vertices become singletons); smaller palettes are
    /// rejected. Defaults to palette_size = n.
    auto verify_cover_all_acyclic(const Digraph & d, const SetCollection & c, std::optional<std::size_t> palette_size = std::nullopt)
        -> CoverVerdict;

    /// Vertices of K2 x H: index side * n_H + h, side in {0,1}.
    /// Whether each non-empty part S = ({0} x S1) u ({1} x S2) has S1, S2 inside
    /// members, or some S_i inside a member with |S_i| < lambda. Throws on an
    /// odd vertex count.
    auto is_semicovered(const Partition & p, const SemicoverSpec & spec) -> bool;

    /// The semicover condition on every maximal acyclic set of d (over K2 x H).
    auto verify_semicover_all_acyclic(const Digraph & d, const SemicoverSpec & spec) -> CoverVerdict;

    /// A uniform l2-subset of each list; vertex v draws from rng.child(v).
    auto sample_sublists(const ListAssignment & l1, std::size_t l2, RngSpec rng) -> ListAssignment;

    /// Searches for a partition indexed by the list palette that is covered
    /// by c, accepted by the lists, and has every part acyclic in d. Returns
    /// the partition, or nothing after an exhaustive search. Throws
    /// BudgetExceeded after node_limit search nodes.
    auto exists_accepted_covered_partition(const Digraph & d, const SetCollection & c, const ListAssignment & lists,
            std::uint64_t node_limit = 100'000'000) -> std::optional<Partition>;

    struct AcceptanceEstimate
    {
        Estimate estimate;
        GBoundParams params;
        /// 4tu <= (l1-l2)n.
        bool hypothesis_holds = false;
        /// Absent when l2 = l1, where the bound is undefined.
        std::optional<double> g;
    };

    /// Monte Carlo frequency with which sample_sublists(l1, l2, rng.child(i))
    /// accepts a covered acyclic partition, with the matching g bound.
    auto estimate_acceptance_probability(const Digraph & d, const SetCollection & c, const ListAssignment & l1, std::size_t l2,
            std::uint64_t trials, RngSpec rng, std::size_t threads = 1) -> AcceptanceEstimate;

    /// The same probability exactly, over all prod_v C(l1,l2) sublist choices.
    auto exact_acceptance_probability(const Digraph & d, const SetCollection & c, const ListAssignment & l1, std::size_t l2,
            std::uint64_t assignment_limit = 10'000'000) -> Rational;

    /// The numeric hypotheses of the product list-colouring lemma:
    /// 8 t l1 <= (l1-l2) n_H, m_G g(l1,l2,n_H,s,t,2 l1)^2 < 1, lambda l1 <= n_H.
    struct ProductLemmaPremises
    {
        std::size_t m_g = 0;
        std::size_t n_h = 1;
        double s = 1, t = 1, lambda = 1;
        std::size_t l1 = 2, l2 = 1;

        auto size_condition() const -> bool;
        auto probability_condition() const -> bool;
        auto threshold_condition() const -> bool;
        auto all() const -> bool { return size_condition() && probability_condition() && threshold_condition(); }
    };
}

#endif
