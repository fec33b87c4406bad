#include <dichroma/core.hpp>
#include <dichroma/error.hpp>
#include <dichroma/solvers.hpp>

#include <algorithm>
#include <chrono>
#include <numeric>

using std::optional;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace dichroma
{
    using std::to_string;

    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct OutOfTime
        {
        };

        enum class ClassRule
        {
            Independent,
            Acyclic
        };

        /// Mask form of the instance. For graphs out == in == adjacency.
        /// `conflict` holds the pairs that can never share a colour (edges,
        /// or 2-cycles for digraphs) and drives forward checking.
        struct Problem
        {
            size_t n = 0;
            ClassRule rule = ClassRule::Independent;
            vector<Mask> out, in, conflict;
        };

        auto problem_of(const Graph & g) -> Problem
        {
            auto adj = g.adjacency_masks();
            return Problem{g.order(), ClassRule::Independent, adj, adj, adj};
        }

        auto problem_of(const Digraph & d) -> Problem
        {
            Problem p{d.order(), ClassRule::Acyclic, d.out_masks(), d.in_masks(), {}};
            for (size_t v = 0; v < p.n; ++v)
                p.conflict.push_back(p.out[v] & p.in[v]);
            return p;
        }

        auto problem_of_orientation(size_t n, const vector<Edge> & edges, std::uint64_t index) -> Problem
        {
            Problem p{n, ClassRule::Acyclic, vector<Mask>(n, 0), vector<Mask>(n, 0), vector<Mask>(n, 0)};
            auto m = edges.size();
            for (size_t i = 0; i < m; ++i) {
                auto [from, to] = edges[i];
                if ((index >> (m - 1 - i)) & 1)
                    std::swap(from, to);
                p.out[from] |= bit(to);
                p.in[to] |= bit(from);
            }
            return p;
        }

        /// Descending degree, ties by index.
        auto degree_order(const Problem & p) -> vector<Vertex>
        {
            vector<Vertex> order(p.n);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
                return popcount(p.out[a] | p.in[a]) > popcount(p.out[b] | p.in[b]);
            });
            return order;
        }

        /// Reverse of the min-degree elimination sequence, so every vertex
        /// has few neighbours placed before it.
        auto degeneracy_order(const Problem & p) -> vector<Vertex>
        {
            vector<Vertex> removed;
            Mask left = low_bits(p.n);
            while (left) {
                Vertex best = lowest(left);
                int best_degree = popcount((p.out[best] | p.in[best]) & left);
                for_each_bit(left, [&](Vertex v) {
                    auto d = popcount((p.out[v] | p.in[v]) & left);
                    if (d < best_degree) {
                        best = v;
                        best_degree = d;
                    }
                });
                removed.push_back(best);
                left &= ~bit(best);
            }
            std::reverse(removed.begin(), removed.end());
            return removed;
        }

        class Search
        {
            public:
                Search(const Problem & p, vector<Vertex> order, Clock::time_point deadline) :
                    _p(p),
                    _order(std::move(order)),
                    _deadline(deadline)
                {
                }

                /// Colour indices per vertex. With no domains, colours are
                /// interchangeable and vertex i of the order may open at most
                /// one new colour.
                auto run(int k, const vector<Mask> * domains) -> optional<vector<int>>
                {
                    if (k < 0 || k > 64)
                        throw InvalidArgument("colour count out of range");
                    _symmetric = (domains == nullptr);
                    _classes.assign(static_cast<size_t>(k), 0);
                    _colour.assign(_p.n, -1);
                    vector<Mask> dom = domains ? *domains : vector<Mask>(_p.n, low_bits(static_cast<size_t>(k)));
                    for (auto d : dom)
                        if (! d && _p.n > 0)
                            return std::nullopt;
                    if (recurse(0, 0, low_bits(_p.n), dom))
                        return _colour;
                    return std::nullopt;
                }

                auto nodes() const -> std::uint64_t { return _nodes; }

            private:
                const Problem & _p;
                vector<Vertex> _order;
                Clock::time_point _deadline;
                bool _symmetric = true;
                vector<Mask> _classes;
                vector<int> _colour;
                std::uint64_t _nodes = 0;

                auto can_place(Vertex v, size_t c) const -> bool
                {
                    if (_p.rule == ClassRule::Independent)
                        return ! (_p.out[v] & _classes[c]);
                    return ! masks::closes_cycle(_p.out, _p.in, _classes[c], v);
                }

                auto recurse(size_t pos, int used, Mask uncoloured, vector<Mask> & dom) -> bool
                {
                    if ((++_nodes & 1023) == 0 && Clock::now() > _deadline)
                        throw OutOfTime{};
                    if (pos == _order.size())
                        return true;

                    auto v = _order[pos];
                    Mask allowed = dom[v];
                    if (_symmetric)
                        allowed &= low_bits(static_cast<size_t>(used) + 1);
                    uncoloured &= ~bit(v);

                    for (Mask rest = allowed; rest; rest &= rest - 1) {
                        auto c = lowest(rest);
                        if (! can_place(v, c))
                            continue;

                        Mask touched = _p.conflict[v] & uncoloured;
                        bool wiped = false;
                        for_each_bit(touched, [&](Vertex w) {
                            if (dom[w] == bit(c))
                                wiped = true;
                        });
                        if (wiped)
                            continue;

                        vector<Mask> saved;
                        saved.reserve(static_cast<size_t>(popcount(touched)));
                        for_each_bit(touched, [&](Vertex w) {
                            saved.push_back(dom[w]);
                            dom[w] &= ~bit(c);
                        });
                        _classes[c] |= bit(v);
                        _colour[v] = static_cast<int>(c);

                        if (recurse(pos + 1, std::max(used, static_cast<int>(c) + 1), uncoloured, dom))
                            return true;

                        _classes[c] &= ~bit(v);
                        _colour[v] = -1;
                        size_t i = 0;
                        for_each_bit(touched, [&](Vertex w) { dom[w] = saved[i++]; });
                    }
                    return false;
                }
        };

        auto deadline_of(const SolveBudget & b) -> Clock::time_point
        {
            return Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(b.timeout_seconds));
        }

        auto check_vertices(size_t n, const SolveBudget & b) -> void
        {
            b.validate();
            if (n > b.vertex_limit)
                throw LimitExceeded("instance has " + to_string(n) + " vertices, budget allows " + to_string(b.vertex_limit));
        }

        auto to_coloring(const vector<int> & colours, int k) -> Coloring
        {
            vector<Colour> assignment(colours.begin(), colours.end());
            return Coloring::over_first(static_cast<size_t>(k), std::move(assignment));
        }

        /// Ascending k until the search succeeds.
        auto minimum_colours(const Problem & p, const SolveBudget & b, const string & what) -> Certificate
        {
            Certificate cert;
            if (p.n == 0) {
                cert.witness = Coloring{};
                cert.lower_bound_trace = "empty instance";
                return cert;
            }

            auto deadline = deadline_of(b);
            auto order = degree_order(p);
            for (int k = 1; k <= static_cast<int>(p.n); ++k) {
                Search search(p, order, deadline);
                optional<vector<int>> found;
                try {
                    found = search.run(k, nullptr);
                }
                catch (const OutOfTime &) {
                    throw BudgetExceeded(what + ": timed out while testing " + to_string(k) + " colours", k, static_cast<int>(p.n));
                }
                cert.nodes += search.nodes();
                if (found) {
                    cert.value = k;
                    cert.witness = to_coloring(*found, k);
                    cert.lower_bound_trace = k == 1 ? "one colour always needed" :
                        "exhausted every " + to_string(k - 1) + "-colouring up to colour renaming";
                    return cert;
                }
            }
            throw std::logic_error(what + ": no colouring with n colours");
        }

        auto list_domains(const ListAssignment & lists, size_t n) -> vector<Mask>
        {
            lists.validate(n);
            if (lists.palette.size() > 64)
                throw LimitExceeded("list palettes above 64 colours are not supported");
            vector<Mask> dom(n, 0);
            for (size_t v = 0; v < n; ++v)
                for (auto c : lists.lists[v]) {
                    auto idx = std::lower_bound(lists.palette.begin(), lists.palette.end(), c) - lists.palette.begin();
                    dom[v] |= bit(static_cast<Vertex>(idx));
                }
            return dom;
        }

        auto find_acceptable(const Problem & p, const ListAssignment & lists, Clock::time_point deadline) -> optional<Coloring>
        {
            auto dom = list_domains(lists, p.n);
            Search search(p, degeneracy_order(p), deadline);
            auto found = search.run(static_cast<int>(lists.palette.size()), &dom);
            if (! found)
                return std::nullopt;
            Coloring f{lists.palette, vector<Colour>(p.n)};
            for (size_t v = 0; v < p.n; ++v)
                f.assignment[v] = lists.palette[static_cast<size_t>((*found)[v])];
            return f;
        }

        auto list_number(const Problem & p, const SolveBudget & b, const string & what) -> Certificate
        {
            Certificate cert;
            if (p.n == 0) {
                cert.lower_bound_trace = "empty instance";
                return cert;
            }

            auto deadline = deadline_of(b);
            optional<ListAssignment> last_rejected;
            for (size_t k = 1; k <= p.n; ++k) {
                if (p.n * k > b.assignment_limit || p.n * k > 64)
                    throw BudgetExceeded(what + ": canonical palette of " + to_string(p.n * k) + " colours exceeds the assignment limit",
                            static_cast<int>(k), static_cast<int>(p.n));

                optional<ListAssignment> rejected;
                std::uint64_t visited = 0;
                try {
                    visited = for_each_canonical_list_assignment(p.n, k, [&](const ListAssignment & lists) {
                        if (! find_acceptable(p, lists, deadline)) {
                            rejected = lists;
                            return false;
                        }
                        return true;
                    });
                }
                catch (const OutOfTime &) {
                    throw BudgetExceeded(what + ": timed out while testing lists of size " + to_string(k), static_cast<int>(k), static_cast<int>(p.n));
                }
                cert.nodes += visited;

                if (! rejected) {
                    cert.value = static_cast<int>(k);
                    cert.rejected = last_rejected;
                    cert.lower_bound_trace = k == 1 ? "lists are never empty" :
                        "the recorded " + to_string(k - 1) + "-list assignment accepts no proper colouring";
                    // An accepted colouring for the all-{0..k-1} lists doubles as an upper witness.
                    cert.witness = find_acceptable(p, ListAssignment::full(p.n, k), deadline);
                    return cert;
                }
                last_rejected = rejected;
            }
            throw std::logic_error(what + ": lists of size n were rejected");
        }
    }

    auto SolveBudget::validate() const -> void
    {
        if (vertex_limit == 0 || orientation_limit == 0 || assignment_limit == 0 || ! (timeout_seconds > 0))
            throw InvalidArgument("solve budget entries must be positive");
        if (vertex_limit > 64)
            throw InvalidArgument("exact searches support at most 64 vertices");
    }

    auto chromatic_number(const Graph & g, const SolveBudget & b) -> Certificate
    {
        check_vertices(g.order(), b);
        return minimum_colours(problem_of(g), b, "chromatic number");
    }

    auto dichromatic_number(const Digraph & d, const SolveBudget & b) -> Certificate
    {
        check_vertices(d.order(), b);
        return minimum_colours(problem_of(d), b, "dichromatic number");
    }

    auto find_coloring(const Graph & g, int k, const SolveBudget & b) -> optional<Coloring>
    {
        check_vertices(g.order(), b);
        auto p = problem_of(g);
        Search search(p, degree_order(p), deadline_of(b));
        try {
            if (auto found = search.run(k, nullptr))
                return to_coloring(*found, k);
        }
        catch (const OutOfTime &) {
            throw BudgetExceeded("timed out searching for a " + to_string(k) + "-colouring", 0, static_cast<int>(g.order()));
        }
        return std::nullopt;
    }

    auto find_dicoloring(const Digraph & d, int k, const SolveBudget & b) -> optional<Coloring>
    {
        check_vertices(d.order(), b);
        auto p = problem_of(d);
        Search search(p, degree_order(p), deadline_of(b));
        try {
            if (auto found = search.run(k, nullptr))
                return to_coloring(*found, k);
        }
        catch (const OutOfTime &) {
            throw BudgetExceeded("timed out searching for an acyclic " + to_string(k) + "-colouring", 0, static_cast<int>(d.order()));
        }
        return std::nullopt;
    }

    auto dichromatic_number_of_graph(const Graph & g, const SolveBudget & b) -> Certificate
    {
        check_vertices(g.order(), b);
        OrientationRange range(g, b.orientation_limit);
        auto edges = g.edges();
        auto deadline = deadline_of(b);

        Certificate cert;
        if (g.order() == 0) {
            cert.orientation = Orientation::all_forward(g);
            cert.witness = Coloring{};
            return cert;
        }

        // Never above the chromatic number, so stop once that is reached.
        auto ceiling = chromatic_number(g, b).value;
        int best = 0;
        std::uint64_t best_index = 0;
        optional<vector<int>> best_colouring;

        try {
            for (std::uint64_t index = 0; index < range.size() && best < ceiling; ++index) {
                auto p = problem_of_orientation(g.order(), edges, index);
                auto order = degree_order(p);
                if (best > 0) {
                    Search quick(p, order, deadline);
                    auto fits = quick.run(best, nullptr);
                    cert.nodes += quick.nodes();
                    if (fits)
                        continue;
                }
                for (int k = best + 1; k <= static_cast<int>(g.order()); ++k) {
                    Search search(p, order, deadline);
                    auto found = search.run(k, nullptr);
                    cert.nodes += search.nodes();
                    if (found) {
                        best = k;
                        best_index = index;
                        best_colouring = found;
                        break;
                    }
                }
            }
        }
        catch (const OutOfTime &) {
            throw BudgetExceeded("graph dichromatic number: timed out", best, ceiling);
        }

        cert.value = best;
        cert.orientation = range.at(best_index);
        cert.witness = to_coloring(*best_colouring, best);
        cert.lower_bound_trace = "every orientation checked; the recorded one needs " + to_string(best) + " colours";
        return cert;
    }

    auto orientation_reaching(const Graph & g, int target, const SolveBudget & b) -> optional<Orientation>
    {
        check_vertices(g.order(), b);
        OrientationRange range(g, b.orientation_limit);
        if (target <= 0)
            return range.at(0);
        if (target == 1)
            return g.order() > 0 ? optional<Orientation>(range.at(0)) : std::nullopt;

        auto edges = g.edges();
        auto deadline = deadline_of(b);
        try {
            for (std::uint64_t index = 0; index < range.size(); ++index) {
                auto p = problem_of_orientation(g.order(), edges, index);
                if (target == 2) {
                    if (! masks::acyclic_within(p.in, low_bits(p.n)))
                        return range.at(index);
                    continue;
                }
                Search search(p, degree_order(p), deadline);
                if (! search.run(target - 1, nullptr))
                    return range.at(index);
            }
        }
        catch (const OutOfTime &) {
            throw BudgetExceeded("orientation search timed out", 0, target);
        }
        return std::nullopt;
    }

    auto find_acceptable_coloring(const Graph & g, const ListAssignment & lists) -> optional<Coloring>
    {
        return find_acceptable(problem_of(g), lists, Clock::time_point::max());
    }

    auto find_acceptable_dicoloring(const Digraph & d, const ListAssignment & lists) -> optional<Coloring>
    {
        return find_acceptable(problem_of(d), lists, Clock::time_point::max());
    }

    auto for_each_canonical_list_assignment(size_t n, size_t k, const std::function<bool (const ListAssignment &)> & visit) -> std::uint64_t
    {
        auto palette_size = n * k;
        ListAssignment lists;
        for (size_t c = 0; c < palette_size; ++c)
            lists.palette.push_back(static_cast<Colour>(c));
        lists.k = k;
        lists.lists.assign(n, {});

        std::uint64_t visited = 0;
        bool stop = false;

        std::function<void (size_t, size_t)> place = [&](size_t v, size_t used) {
            if (stop)
                return;
            if (v == n) {
                ++visited;
                if (! visit(lists))
                    stop = true;
                return;
            }
            for (size_t fresh = 0; fresh <= k && ! stop; ++fresh) {
                if (fresh > k || k - fresh > used || used + fresh > palette_size)
                    continue;
                if (v == 0 && fresh != k)
                    continue;
                for (auto & old : (k - fresh == 0 ? vector<vector<size_t>>{{}} : [&] {
                            vector<vector<size_t>> subsets;
                            vector<size_t> current(k - fresh);
                            std::iota(current.begin(), current.end(), 0);
                            for (;;) {
                                subsets.push_back(current);
                                size_t i = current.size();
                                while (i > 0 && current[i - 1] == used - current.size() + i - 1)
                                    --i;
                                if (i == 0)
                                    break;
                                ++current[i - 1];
                                for (size_t j = i; j < current.size(); ++j)
                                    current[j] = current[j - 1] + 1;
                            }
                            return subsets;
                        }())) {
                    auto & list = lists.lists[v];
                    list.clear();
                    for (auto c : old)
                        list.push_back(static_cast<Colour>(c));
                    for (size_t j = 0; j < fresh; ++j)
                        list.push_back(static_cast<Colour>(used + j));
                    place(v + 1, used + fresh);
                    if (stop)
                        return;
                }
            }
        };

        if (n == 0) {
            visit(lists);
            return 1;
        }
        place(0, 0);
        return visited;
    }

    auto list_chromatic_number(const Graph & g, const SolveBudget & b) -> Certificate
    {
        check_vertices(g.order(), b);
        return list_number(problem_of(g), b, "list chromatic number");
    }

    auto list_dichromatic_number(const Digraph & d, const SolveBudget & b) -> Certificate
    {
        check_vertices(d.order(), b);
        return list_number(problem_of(d), b, "list dichromatic number");
    }

    auto sabidussi_coloring(const Coloring & fG, const Coloring & fH, size_t N) -> Coloring
    {
        if (N == 0)
            throw InvalidArgument("modulus must be positive");
        fG.validate(fG.assignment.size());
        fH.validate(fH.assignment.size());
        for (auto * f : {&fG, &fH})
            for (auto c : f->assignment)
                if (c >= N)
                    throw InvalidArgument("colour " + to_string(c) + " does not fit in Z_" + to_string(N));

        auto nh = fH.assignment.size();
        vector<Colour> assignment(fG.assignment.size() * nh);
        for (size_t g = 0; g < fG.assignment.size(); ++g)
            for (size_t h = 0; h < nh; ++h)
                assignment[g * nh + h] = static_cast<Colour>((fG.assignment[g] + fH.assignment[h]) % N);
        return Coloring::over_first(N, std::move(assignment));
    }
}
