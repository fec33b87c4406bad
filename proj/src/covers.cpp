#include <dichroma/combinatorics.hpp>
#include <dichroma/core.hpp>
#include <dichroma/covers.hpp>
#include <dichroma/error.hpp>
#include <dichroma/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace dichroma
{
    using std::to_string;

    namespace
    {
        auto member_masks(const SetCollection & c) -> vector<Mask>
        {
            vector<Mask> m;
            m.reserve(c.members.size());
            for (auto & member : c.members)
                m.push_back(to_mask(member));
            return m;
        }

        auto inside_some(const vector<Mask> & members, Mask s) -> bool
        {
            return std::any_of(members.begin(), members.end(), [&](Mask m) { return (s & ~m) == 0; });
        }

        auto semicover_condition(const vector<Mask> & members, double lambda, Mask s, size_t nh) -> bool
        {
            Mask s1 = s & low_bits(nh);
            Mask s2 = s >> nh;
            bool in1 = inside_some(members, s1);
            bool in2 = inside_some(members, s2);
            if (in1 && in2)
                return true;
            return (in1 && popcount(s1) < lambda) || (in2 && popcount(s2) < lambda);
        }

        auto check_order(size_t n) -> void
        {
            if (n > mask_capacity)
                throw LimitExceeded("cover checks support at most 64 vertices, got " + to_string(n));
        }

        auto half_order(size_t n) -> size_t
        {
            if (n % 2 != 0)
                throw InvalidArgument("a K2 x H vertex set has even order, got " + to_string(n));
            return n / 2;
        }
    }

    auto SetCollection::validate(size_t n) const -> void
    {
        if (static_cast<double>(members.size()) > s)
            throw InvalidArgument("collection has " + to_string(members.size()) + " members, declared s is " + to_string(s));
        for (auto & m : members) {
            if (m.size() != n)
                throw InvalidArgument("collection member sized for " + to_string(m.size()) + " vertices, expected " + to_string(n));
            if (static_cast<double>(m.count()) > t)
                throw InvalidArgument("collection member " + to_string(m) + " exceeds declared t = " + to_string(t));
        }
    }

    auto SemicoverSpec::validate(size_t n) const -> void
    {
        if (! (lambda > 0))
            throw InvalidArgument("lambda must be positive");
        collection.validate(n);
    }

    auto RookCollectionParams::with_default_beta(size_t n) -> RookCollectionParams
    {
        if (n == 0)
            throw InvalidArgument("rook dimension must be positive");
        return RookCollectionParams{n, static_cast<size_t>(std::floor(124.0 * std::log(static_cast<double>(n))))};
    }

    auto build_rook_collection(const RookCollectionParams & p, size_t member_limit) -> SetCollection
    {
        auto n = p.n;
        if (n == 0)
            throw InvalidArgument("rook dimension must be positive");
        auto order = n * n;
        auto beta = static_cast<double>(p.beta);

        SetCollection c;
        c.t = static_cast<double>(n) + beta * beta;

        if (p.beta < 1 || p.beta > n) {
            auto blocks = p.beta > n ? 0.0 : 1.0;
            c.s = std::max(1.0, 2.0 * static_cast<double>(n) * blocks * blocks);
            c.t = std::max(c.t, static_cast<double>(order));
            VertexSet all(order);
            all.set();
            c.members.push_back(all);
            return c;
        }

        auto choose = binomial_u64(n, p.beta);
        auto count = 2 * n * choose * choose;
        if (count > member_limit)
            throw LimitExceeded("rook collection would have " + to_string(count) + " members, limit is " + to_string(member_limit));
        c.s = static_cast<double>(count);

        vector<VertexSet> lines;
        for (size_t i = 0; i < n; ++i) {
            VertexSet row(order);
            for (size_t j = 0; j < n; ++j)
                row.set(i * n + j);
            lines.push_back(row);
        }
        for (size_t j = 0; j < n; ++j) {
            VertexSet column(order);
            for (size_t i = 0; i < n; ++i)
                column.set(i * n + j);
            lines.push_back(column);
        }

        auto subsets = k_subsets(n, p.beta);
        c.members.reserve(count);
        for (auto & line : lines)
            for (auto & a : subsets)
                for (auto & b : subsets) {
                    auto member = line;
                    for (auto i : a)
                        for (auto j : b)
                            member.set(i * n + j);
                    c.members.push_back(std::move(member));
                }
        return c;
    }

    auto is_covered(const Partition & p, const SetCollection & c) -> bool
    {
        auto n = p.order();
        p.validate(n);
        c.validate(n);
        for (auto & part : p.parts) {
            if (part.none())
                continue;
            if (std::none_of(c.members.begin(), c.members.end(), [&](const VertexSet & m) { return part.is_subset_of(m); }))
                return false;
        }
        return true;
    }

    auto accepts(const ListAssignment & lists, const Partition & p) -> bool
    {
        if (lists.palette != p.palette)
            throw InvalidArgument("list assignment and partition use different palettes");
        auto n = lists.order();
        lists.validate(n);
        p.validate(n);
        for (size_t i = 0; i < p.parts.size(); ++i)
            for (auto v = p.parts[i].find_first(); v != VertexSet::npos; v = p.parts[i].find_next(v))
                if (! lists.contains(v, p.palette[i]))
                    return false;
        return true;
    }

    auto verify_cover_all_acyclic(const Digraph & d, const SetCollection & c, optional<size_t> palette_size) -> CoverVerdict
    {
        auto n = d.order();
        c.validate(n);
        if (palette_size.value_or(n) < n)
            throw InvalidArgument("partition covering reduces to acyclic sets only for palettes of at least n colours");

        auto members = member_masks(c);
        CoverVerdict verdict;
        for (auto & s : maximal_acyclic_sets(d)) {
            ++verdict.maximal_sets;
            if (verdict.holds && ! inside_some(members, to_mask(s))) {
                verdict.holds = false;
                verdict.counterexample = s;
            }
        }
        return verdict;
    }

    auto is_semicovered(const Partition & p, const SemicoverSpec & spec) -> bool
    {
        auto n = p.order();
        auto nh = half_order(n);
        check_order(n);
        p.validate(n);
        spec.validate(nh);
        auto members = member_masks(spec.collection);
        for (auto & part : p.parts)
            if (part.any() && ! semicover_condition(members, spec.lambda, to_mask(part), nh))
                return false;
        return true;
    }

    auto verify_semicover_all_acyclic(const Digraph & d, const SemicoverSpec & spec) -> CoverVerdict
    {
        auto n = d.order();
        auto nh = half_order(n);
        spec.validate(nh);
        auto members = member_masks(spec.collection);

        CoverVerdict verdict;
        for (auto & s : maximal_acyclic_sets(d)) {
            ++verdict.maximal_sets;
            if (verdict.holds && ! semicover_condition(members, spec.lambda, to_mask(s), nh)) {
                verdict.holds = false;
                verdict.counterexample = s;
            }
        }
        return verdict;
    }

    auto sample_sublists(const ListAssignment & l1, size_t l2, RngSpec rng) -> ListAssignment
    {
        l1.validate(l1.order());
        if (l2 > l1.k)
            throw InvalidArgument("cannot sample " + to_string(l2) + "-sublists from " + to_string(l1.k) + "-lists");

        ListAssignment result{l1.palette, {}, l2};
        result.lists.reserve(l1.order());
        for (size_t v = 0; v < l1.order(); ++v) {
            Stream stream(rng.child(v));
            auto list = l1.lists[v];
            for (size_t i = 0; i < l2; ++i)
                std::swap(list[i], list[i + stream.below(list.size() - i)]);
            list.resize(l2);
            std::sort(list.begin(), list.end());
            result.lists.push_back(std::move(list));
        }
        return result;
    }

    auto exists_accepted_covered_partition(const Digraph & d, const SetCollection & c, const ListAssignment & lists,
            std::uint64_t node_limit) -> optional<Partition>
    {
        auto n = d.order();
        check_order(n);
        lists.validate(n);
        c.validate(n);
        auto u = lists.palette.size();

        // Members containing each vertex; a colour class stays covered while
        // the intersection over its vertices is non-empty.
        auto members = c.members.size();
        vector<VertexSet> member_of(n, VertexSet(members));
        for (size_t i = 0; i < members; ++i)
            for (auto v = c.members[i].find_first(); v != VertexSet::npos; v = c.members[i].find_next(v))
                member_of[v].set(i);

        vector<vector<size_t>> choices(n);
        for (size_t v = 0; v < n; ++v)
            for (auto colour : lists.lists[v])
                choices[v].push_back(static_cast<size_t>(
                        std::lower_bound(lists.palette.begin(), lists.palette.end(), colour) - lists.palette.begin()));

        auto out = d.out_masks();
        auto in = d.in_masks();
        vector<Mask> classes(u, 0);
        VertexSet all_members(members);
        all_members.set();
        vector<VertexSet> candidates(u, all_members);
        std::uint64_t nodes = 0;

        std::function<bool (size_t)> place = [&](size_t v) -> bool {
            if (++nodes > node_limit)
                throw BudgetExceeded("covered partition search exceeded " + to_string(node_limit) + " nodes", 0, 1);
            if (v == n)
                return true;
            for (auto i : choices[v]) {
                auto narrowed = candidates[i] & member_of[v];
                if (narrowed.none() || masks::closes_cycle(out, in, classes[i], v))
                    continue;
                auto saved = std::move(candidates[i]);
                candidates[i] = std::move(narrowed);
                classes[i] |= bit(v);
                if (place(v + 1))
                    return true;
                classes[i] &= ~bit(v);
                candidates[i] = std::move(saved);
            }
            return false;
        };

        if (! place(0))
            return std::nullopt;
        Partition p{lists.palette, vector<VertexSet>(u)};
        for (size_t i = 0; i < u; ++i)
            p.parts[i] = from_mask(classes[i], n);
        return p;
    }

    namespace
    {
        auto acceptance_params(const Digraph & d, const SetCollection & c, const ListAssignment & l1, size_t l2) -> GBoundParams
        {
            return GBoundParams{l1.k, l2, d.order(), c.s, c.t, l1.palette.size()};
        }
    }

    auto estimate_acceptance_probability(const Digraph & d, const SetCollection & c, const ListAssignment & l1, size_t l2,
            std::uint64_t trials, RngSpec rng, size_t threads) -> AcceptanceEstimate
    {
        AcceptanceEstimate result;
        result.params = acceptance_params(d, c, l1, l2);
        auto & p = result.params;
        result.hypothesis_holds = l1.k >= l2 &&
            4.0 * p.t * static_cast<double>(p.u) <= static_cast<double>(l1.k - l2) * static_cast<double>(p.n);
        if (l1.k > l2 && l2 >= 1 && p.n > 0)
            result.g = g_bound(p);

        auto hits = parallel_map(trials, threads, [&](size_t i) -> int {
            return exists_accepted_covered_partition(d, c, sample_sublists(l1, l2, rng.child(i))) ? 1 : 0;
        });
        std::uint64_t successes = 0;
        for (auto h : hits)
            successes += static_cast<std::uint64_t>(h);
        result.estimate = wilson_estimate(successes, trials);
        return result;
    }

    auto exact_acceptance_probability(const Digraph & d, const SetCollection & c, const ListAssignment & l1, size_t l2,
            std::uint64_t assignment_limit) -> Rational
    {
        auto n = d.order();
        l1.validate(n);
        if (l2 > l1.k)
            throw InvalidArgument("cannot take " + to_string(l2) + "-sublists of " + to_string(l1.k) + "-lists");

        vector<vector<size_t>> subsets = k_subsets(l1.k, l2);
        std::uint64_t per_vertex = subsets.size();
        std::uint64_t total = 1;
        for (size_t v = 0; v < n; ++v) {
            if (total > assignment_limit / per_vertex)
                throw LimitExceeded("more than " + to_string(assignment_limit) + " sublist assignments");
            total *= per_vertex;
        }

        ListAssignment l2_lists{l1.palette, vector<vector<Colour>>(n), l2};
        vector<size_t> digit(n, 0);
        std::uint64_t accepted = 0;
        for (std::uint64_t index = 0; index < total; ++index) {
            for (size_t v = 0; v < n; ++v) {
                auto & list = l2_lists.lists[v];
                list.clear();
                for (auto position : subsets[digit[v]])
                    list.push_back(l1.lists[v][position]);
            }
            if (exists_accepted_covered_partition(d, c, l2_lists))
                ++accepted;
            for (size_t v = 0; v < n && ++digit[v] == per_vertex; ++v)
                digit[v] = 0;
        }
        return Rational(BigInt(accepted), BigInt(total));
    }

    auto ProductLemmaPremises::size_condition() const -> bool
    {
        return l1 >= l2 && 8.0 * t * static_cast<double>(l1) <= static_cast<double>(l1 - l2) * static_cast<double>(n_h);
    }

    auto ProductLemmaPremises::probability_condition() const -> bool
    {
        if (m_g == 0)
            return true;
        auto log_g = log_g_bound(GBoundParams{l1, l2, n_h, s, t, 2 * l1});
        return std::log(static_cast<double>(m_g)) + 2 * log_g < 0;
    }

    auto ProductLemmaPremises::threshold_condition() const -> bool
    {
        return lambda * static_cast<double>(l1) <= static_cast<double>(n_h);
    }
}
