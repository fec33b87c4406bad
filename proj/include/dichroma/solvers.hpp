#ifndef DICHROMA_SOLVERS_HPP
#define DICHROMA_SOLVERS_HPP

#include <dichroma/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace dichroma
{
    struct SolveBudget
    {
        /// Exact searches work on 64-bit masks, so this cannot exceed 64.
        std::size_t vertex_limit = 64;
        /// Maximum edge count for searches over all orientations.
        std::size_t orientation_limit = 24;
        /// Maximum canonical palette size n*k for the list solvers.
        std::size_t assignment_limit = 64;
        double timeout_seconds = 600.0;

        auto validate() const -> void;
    };

    /// The value of an exact solve, a witness for the upper side, and a
    /// description of what was exhausted for the lower side.
    struct Certificate
    {
        int value = 0;
        std::optional<Coloring> witness;
        /// The orientation attaining the value, for graph dichromatic numbers.
        std::optional<Orientation> orientation;
        /// A (value-1)-list assignment with no acceptable colouring, for list solvers.
        std::optional<ListAssignment> rejected;
        std::string lower_bound_trace;
        std::uint64_t nodes = 0;
    };

    auto chromatic_number(const Graph & g, const SolveBudget & b = {}) -> Certificate;
    auto dichromatic_number(const Digraph & d, const SolveBudget & b = {}) -> Certificate;

    /// Maximum dichromatic number over every orientation of g.
    auto dichromatic_number_of_graph(const Graph & g, const SolveBudget & b = {}) -> Certificate;

    /// The first orientation (in enumeration order) whose dichromatic number
    /// is at least target, if any.
    auto orientation_reaching(const Graph & g, int target, const SolveBudget & b = {}) -> std::optional<Orientation>;

    /// A proper k-colouring / acyclic k-colouring over palette {0..k-1}, if one exists.
    auto find_coloring(const Graph & g, int k, const SolveBudget & b = {}) -> std::optional<Coloring>;
    auto find_dicoloring(const Digraph & d, int k, const SolveBudget & b = {}) -> std::optional<Coloring>;

    /// A proper colouring with every colour taken from the vertex's list, or
    /// nothing after exhausting the search.
    auto find_acceptable_coloring(const Graph & g, const ListAssignment & lists) -> std::optional<Coloring>;
    auto find_acceptable_dicoloring(const Digraph & d, const ListAssignment & lists) -> std::optional<Coloring>;

    /// Smallest k such that every k-list assignment accepts a proper
    /// (di)colouring, by enumerating assignments over the palette {0..nk-1}
    /// in first-use canonical form.
    auto list_chromatic_number(const Graph & g, const SolveBudget & b = {}) -> Certificate;
    auto list_dichromatic_number(const Digraph & d, const SolveBudget & b = {}) -> Certificate;

    /// Visits every k-list assignment on n vertices over {0..nk-1} in
    /// first-use canonical form: vertex 0 gets {0..k-1} and each later vertex
    /// may only introduce colours in consecutive order. Stops early when the
    /// visitor returns false; returns the number of assignments visited.
    auto for_each_canonical_list_assignment(std::size_t n, std::size_t k,
            const std::function<bool (const ListAssignment &)> & visit) -> std::uint64_t;

    /// f(g,h) = (fG(g) + fH(h)) mod N on the row-major Cartesian product.
    auto sabidussi_coloring(const Coloring & fG, const Coloring & fH, std::size_t N) -> Coloring;
}

#endif
