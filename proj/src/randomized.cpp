#include <dichroma/core.hpp>
#include <dichroma/error.hpp>
#include <dichroma/parallel.hpp>
#include <dichroma/randomized.hpp>

#include <bit>
#include <cmath>
#include <functional>

using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace dichroma
{
    using std::to_string;

    namespace
    {
        using MaskPair = pair<Mask, Mask>;

        auto underlying_masks(const Digraph & d) -> vector<Mask>
        {
            auto out = d.out_masks();
            auto in = d.in_masks();
            for (size_t v = 0; v < out.size(); ++v)
                out[v] |= in[v];
            return out;
        }

        /// Calls visit on every l-subset of `pool` built in increasing order,
        /// pruning via `viable(chosen, remaining pool)`.
        auto for_each_subset(Mask pool, size_t l, const std::function<bool (Mask, Mask)> & extend_ok,
                const std::function<void (Mask)> & visit) -> void
        {
            std::function<void (Mask, Mask, size_t)> rec = [&](Mask chosen, Mask rest, size_t need) {
                if (need == 0) {
                    visit(chosen);
                    return;
                }
                while (static_cast<size_t>(popcount(rest)) >= need) {
                    auto v = lowest(rest);
                    rest &= ~bit(v);
                    auto next = chosen | bit(v);
                    if (extend_ok(next, rest))
                        rec(next, rest, need - 1);
                }
            };
            rec(0, pool, l);
        }

        /// Every unordered pair of disjoint l-sets complete to each other.
        auto biclique_candidates(const vector<Mask> & adj, size_t l, const optional<MaskPair> & hint, std::uint64_t limit)
            -> vector<MaskPair>
        {
            auto n = adj.size();
            Mask all = low_bits(n);
            Mask left_pool = hint ? hint->first : all;
            Mask right_pool = hint ? hint->second : all;

            auto common_of = [&](Mask s) {
                Mask c = all;
                for_each_bit(s, [&](Vertex v) { c &= adj[v]; });
                return c & ~s;
            };

            vector<MaskPair> found;
            for_each_subset(left_pool, l,
                    [&](Mask chosen, Mask) { return static_cast<size_t>(popcount(common_of(chosen) & right_pool)) >= l; },
                    [&](Mask left) {
                        Mask pool = common_of(left) & right_pool;
                        if (! hint)
                            pool &= ~low_bits(lowest(left) + 1);
                        for_each_subset(pool, l, [](Mask, Mask) { return true; }, [&](Mask right) {
                            if (found.size() >= limit)
                                throw BudgetExceeded("more than " + to_string(limit) + " candidate bicliques", 0, 0);
                            found.emplace_back(left, right);
                        });
                    });
            return found;
        }

        auto clique_candidates(const vector<Mask> & adj, size_t l, std::uint64_t limit) -> vector<Mask>
        {
            vector<Mask> found;
            std::function<void (Mask, Mask, size_t)> rec = [&](Mask chosen, Mask pool, size_t need) {
                if (need == 0) {
                    if (found.size() >= limit)
                        throw BudgetExceeded("more than " + to_string(limit) + " candidate cliques", 0, 0);
                    found.push_back(chosen);
                    return;
                }
                while (static_cast<size_t>(popcount(pool)) >= need) {
                    auto v = lowest(pool);
                    pool &= ~bit(v);
                    rec(chosen | bit(v), pool & adj[v], need - 1);
                }
            };
            rec(0, low_bits(adj.size()), l);
            return found;
        }

        auto bipartite_acyclic(const vector<Mask> & in, MaskPair lr) -> bool
        {
            auto [left, right] = lr;
            vector<Mask> restricted(in.size(), 0);
            for_each_bit(left, [&](Vertex v) { restricted[v] = in[v] & right; });
            for_each_bit(right, [&](Vertex v) { restricted[v] = in[v] & left; });
            return masks::acyclic_within(restricted, left | right);
        }

        auto in_masks_of(size_t n, const vector<Edge> & edges, const Orientation & o) -> vector<Mask>
        {
            vector<Mask> in(n, 0);
            for (size_t i = 0; i < edges.size(); ++i) {
                auto [u, v] = edges[i];
                if (o.reversed[i])
                    in[u] |= bit(v);
                else
                    in[v] |= bit(u);
            }
            return in;
        }

        auto any_acyclic(const vector<Mask> & in, const vector<MaskPair> & bicliques) -> bool
        {
            for (auto & lr : bicliques)
                if (bipartite_acyclic(in, lr))
                    return true;
            return false;
        }

        auto check_mask_order(size_t n) -> void
        {
            if (n > mask_capacity)
                throw LimitExceeded("searches support at most 64 vertices, got " + to_string(n));
        }

        auto check_l(size_t l) -> void
        {
            if (l == 0)
                throw InvalidArgument("l must be at least 1");
        }

        auto graph_masks(const Graph & g) -> vector<Mask>
        {
            check_mask_order(g.order());
            return g.adjacency_masks();
        }
    }

    auto random_orientation_choice(const Graph & g, RngSpec rng) -> Orientation
    {
        auto o = Orientation::all_forward(g);
        for (size_t i = 0; i < o.edges.size(); ++i)
            o.reversed[i] = Stream(rng.child(i)).coin();
        return o;
    }

    auto random_orientation(const Graph & g, RngSpec rng) -> Digraph
    {
        return apply_orientation(g, random_orientation_choice(g, rng));
    }

    auto count_acyclic_orientations(const Graph & g, size_t edge_limit) -> BigInt
    {
        check_mask_order(g.order());
        auto edges = g.edges();
        if (edges.size() > edge_limit || edges.size() >= 63)
            throw LimitExceeded("graph has " + to_string(edges.size()) + " edges, counting limit is " + to_string(edge_limit));

        auto n = g.order();
        vector<Mask> in(n, 0);
        for (auto [u, v] : edges)
            in[v] |= bit(u);
        vector<bool> reversed(edges.size(), false);
        Mask all = low_bits(n);

        std::uint64_t count = masks::acyclic_within(in, all) ? 1 : 0;
        std::uint64_t total = std::uint64_t{1} << edges.size();
        for (std::uint64_t i = 1; i < total; ++i) {
            auto j = static_cast<size_t>(std::countr_zero(i));
            auto [u, v] = edges[j];
            if (reversed[j]) {
                in[u] &= ~bit(v);
                in[v] |= bit(u);
            }
            else {
                in[v] &= ~bit(u);
                in[u] |= bit(v);
            }
            reversed[j] = ! reversed[j];
            if (masks::acyclic_within(in, all))
                ++count;
        }
        return BigInt(count);
    }

    auto find_acyclic_biclique(const Digraph & d, size_t l, const optional<pair<VertexSet, VertexSet>> & partition_hint,
            std::uint64_t candidate_limit) -> optional<Biclique>
    {
        check_l(l);
        check_mask_order(d.order());
        optional<MaskPair> hint;
        if (partition_hint) {
            if (partition_hint->first.size() != d.order() || partition_hint->second.size() != d.order())
                throw InvalidArgument("partition hint sized for a different digraph");
            hint = MaskPair{to_mask(partition_hint->first), to_mask(partition_hint->second)};
            if (hint->first & hint->second)
                throw InvalidArgument("partition hint sides overlap");
        }
        auto in = d.in_masks();
        for (auto & lr : biclique_candidates(underlying_masks(d), l, hint, candidate_limit))
            if (bipartite_acyclic(in, lr))
                return Biclique{from_mask(lr.first, d.order()), from_mask(lr.second, d.order())};
        return std::nullopt;
    }

    auto find_acyclic_clique(const Digraph & d, size_t l, std::uint64_t candidate_limit) -> optional<VertexSet>
    {
        check_l(l);
        check_mask_order(d.order());
        auto in = d.in_masks();
        for (auto s : clique_candidates(underlying_masks(d), l, candidate_limit))
            if (masks::acyclic_within(in, s))
                return from_mask(s, d.order());
        return std::nullopt;
    }

    auto certified_breaking_orientation(const Graph & g, size_t l, RngSpec rng, std::uint64_t max_attempts, bool break_cliques)
        -> Digraph
    {
        check_l(l);
        auto adj = graph_masks(g);
        auto bicliques = biclique_candidates(adj, l, std::nullopt, default_candidate_limit);
        vector<Mask> cliques;
        if (break_cliques)
            cliques = clique_candidates(adj, l, default_candidate_limit);
        auto edges = g.edges();

        for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
            auto o = random_orientation_choice(g, rng.child(attempt));
            auto in = in_masks_of(g.order(), edges, o);
            if (any_acyclic(in, bicliques))
                continue;
            bool clique_ok = true;
            for (auto s : cliques)
                if (masks::acyclic_within(in, s)) {
                    clique_ok = false;
                    break;
                }
            if (clique_ok)
                return apply_orientation(g, o);
        }
        throw AttemptsExhausted("no orientation breaking every K_{" + to_string(l) + "," + to_string(l) + "}" +
                (break_cliques ? " and K_" + to_string(l) : string()) + " within " + to_string(max_attempts) + " attempts");
    }

    auto wilson_estimate(std::uint64_t successes, std::uint64_t trials, double z) -> Estimate
    {
        if (trials == 0)
            throw InvalidArgument("an estimate needs at least one trial");
        if (successes > trials)
            throw InvalidArgument("more successes than trials");
        auto n = static_cast<double>(trials);
        auto p = static_cast<double>(successes) / n;
        auto z2 = z * z;
        auto denom = 1 + z2 / n;
        auto centre = (p + z2 / (2 * n)) / denom;
        auto half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
        // At the endpoints the interval reaches 0 or 1 exactly; the general
        // formula only gets there up to rounding.
        auto lower = successes == 0 ? 0.0 : std::max(0.0, centre - half);
        auto upper = successes == trials ? 1.0 : std::min(1.0, centre + half);
        return Estimate{successes, trials, p, lower, upper};
    }

    auto estimate_biclique_event(const Graph & g, size_t l, std::uint64_t trials, RngSpec rng, size_t threads) -> Estimate
    {
        check_l(l);
        auto bicliques = biclique_candidates(graph_masks(g), l, std::nullopt, default_candidate_limit);
        auto edges = g.edges();
        auto hits = parallel_map(trials, threads, [&](size_t i) -> int {
            auto in = in_masks_of(g.order(), edges, random_orientation_choice(g, rng.child(i)));
            return any_acyclic(in, bicliques) ? 1 : 0;
        });
        std::uint64_t successes = 0;
        for (auto h : hits)
            successes += static_cast<std::uint64_t>(h);
        return wilson_estimate(successes, trials);
    }

    auto exact_biclique_probability(const Graph & g, size_t l, size_t edge_limit) -> Rational
    {
        check_l(l);
        auto bicliques = biclique_candidates(graph_masks(g), l, std::nullopt, default_candidate_limit);
        OrientationRange range(g, edge_limit);
        auto edges = g.edges();
        std::uint64_t hits = 0;
        for (auto o : range)
            if (any_acyclic(in_masks_of(g.order(), edges, o), bicliques))
                ++hits;
        return Rational(BigInt(hits), BigInt(range.size()));
    }

    auto biclique_union_bound(size_t n, size_t l) -> double
    {
        if (n == 0)
            return 0;
        auto ld = static_cast<double>(l);
        return std::exp(4 * ld * std::log(static_cast<double>(n)) - ld * ld * std::log(2.0));
    }

    auto GBoundParams::validate() const -> void
    {
        if (! (l1 > l2 && l2 >= 1))
            throw InvalidArgument("g bound needs l1 > l2 >= 1");
        if (n == 0 || u == 0 || ! (s > 0) || ! (t > 0))
            throw InvalidArgument("g bound parameters n, s, t, u must be positive");
    }

    auto log_g_bound(const GBoundParams & p) -> double
    {
        p.validate();
        auto n = static_cast<double>(p.n);
        auto exponent = 4.0 * static_cast<double>(p.l2) * p.t * static_cast<double>(p.u) / (static_cast<double>(p.l1 - p.l2) * n);
        return static_cast<double>(p.u) * std::log(p.s) - (n / 2) * std::exp2(-exponent);
    }

    auto g_bound(const GBoundParams & p) -> double
    {
        return std::exp(log_g_bound(p));
    }

    auto ExpectationParams::validate() const -> void
    {
        if (u == 0)
            throw InvalidArgument("palette must be non-empty");
        if (k > u)
            throw InvalidArgument("list size exceeds the palette");
        if (a > u)
            throw InvalidArgument("forbidden set exceeds the palette");
    }

    auto expected_avoiding_count(const ExpectationParams & p) -> Rational
    {
        p.validate();
        return Rational(BigInt(p.m) * binomial(p.u - p.a, p.k), binomial(p.u, p.k));
    }

    auto concentration_bound(std::uint64_t n, double c, double t) -> double
    {
        if (n == 0 || ! (c > 0) || ! (t >= 0))
            throw InvalidArgument("concentration bound needs n >= 1, c > 0, t >= 0");
        return 2 * std::exp(-t * t / (2 * c * c * static_cast<double>(n)));
    }
}
