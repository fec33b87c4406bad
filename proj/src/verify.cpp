#include <dichroma/catalogue.hpp>
#include <dichroma/core.hpp>
#include <dichroma/covers.hpp>
#include <dichroma/error.hpp>
#include <dichroma/generators.hpp>
#include <dichroma/parallel.hpp>
#include <dichroma/products.hpp>
#include <dichroma/randomized.hpp>
#include <dichroma/solvers.hpp>
#include <dichroma/verify.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

using std::size_t;
using std::string;
using std::vector;

namespace dichroma
{
    using std::to_string;

    namespace
    {
        constexpr size_t max_reported_failures = 20;

        auto named_suite(const string & name) -> SuiteResult
        {
            SuiteResult r;
            r.name = name;
            return r;
        }

        auto finish(SuiteResult & r, const string & what) -> void
        {
            r.passed = (r.failures == 0);
            r.summary = to_string(r.cases) + " " + what + ", " + to_string(r.failures) + " failures";
            r.payload["cases"] = r.cases;
            r.payload["failures"] = r.failures;
        }

        auto histogram_json(const std::map<int, std::uint64_t> & h) -> Json
        {
            Json j = Json::object();
            for (auto [value, count] : h)
                j[to_string(value)] = count;
            return j;
        }

        /// Unordered index pairs i <= j over n items, in lexicographic order.
        auto unordered_pairs(size_t n) -> vector<std::pair<size_t, size_t>>
        {
            vector<std::pair<size_t, size_t>> pairs;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i; j < n; ++j)
                    pairs.emplace_back(i, j);
            return pairs;
        }

        auto rational_json(const Rational & r) -> Json
        {
            std::ostringstream s;
            s << r;
            return s.str();
        }
    }

    auto digest(const string & bytes) -> string
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        char buffer[17];
        std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
        return buffer;
    }

    auto suite_kneser_chi(const vector<std::pair<size_t, size_t>> & pairs) -> SuiteResult
    {
        auto r = named_suite("kneser-chi");
        Json rows = Json::array();
        for (auto [n, k] : pairs) {
            if (k < 1 || 2 * k > n)
                throw InvalidArgument("kneser-chi needs 1 <= k <= n/2");
            auto g = kneser(n, k);
            auto cert = chromatic_number(g);
            auto expected = static_cast<int>(n - 2 * k + 2);
            bool ok = cert.value == expected && cert.witness && is_proper_coloring(g, *cert.witness);
            ++r.cases;
            if (! ok)
                ++r.failures;
            rows.push_back({{"n", n}, {"k", k}, {"value", cert.value}, {"expected", expected}, {"ok", ok}});
        }
        r.payload["instances"] = rows;
        finish(r, "Kneser graphs");
        return r;
    }

    auto suite_sabidussi(size_t max_n, size_t random_pairs, size_t random_max_n, RngSpec rng, size_t threads) -> SuiteResult
    {
        auto r = named_suite("sabidussi");
        auto catalogue = digraph_catalogue(max_n);
        auto factor = parallel_map(catalogue.size(), threads, [&](size_t i) { return dichromatic_number(catalogue[i]); });

        struct Outcome
        {
            int left, right, product;
            bool modular_ok;
        };
        auto check = [](const Digraph & g, const Certificate & cg, const Digraph & h, const Certificate & ch) {
            auto product = cartesian_product(g, h);
            auto value = dichromatic_number(product).value;
            auto modulus = static_cast<size_t>(std::max({cg.value, ch.value, 1}));
            auto f = sabidussi_coloring(*cg.witness, *ch.witness, modulus);
            return Outcome{cg.value, ch.value, value, is_proper_dicoloring(product, f)};
        };

        auto pairs = unordered_pairs(catalogue.size());
        auto outcomes = parallel_map(pairs.size(), threads, [&](size_t i) {
            auto [a, b] = pairs[i];
            return check(catalogue[a], factor[a], catalogue[b], factor[b]);
        });
        auto random_outcomes = parallel_map(random_pairs, threads, [&](size_t i) {
            auto g = random_digraph(random_max_n, rng.child(2 * i));
            auto h = random_digraph(random_max_n, rng.child(2 * i + 1));
            return check(g, dichromatic_number(g), h, dichromatic_number(h));
        });

        std::ostringstream trace;
        std::map<int, std::uint64_t> histogram;
        Json failures = Json::array();
        auto record = [&](const Outcome & o, const string & kind, size_t index) {
            ++r.cases;
            ++histogram[o.product];
            trace << kind << index << ':' << o.left << ',' << o.right << ',' << o.product << ',' << o.modular_ok << ';';
            if (o.product != std::max(o.left, o.right) || ! o.modular_ok) {
                ++r.failures;
                if (failures.size() < max_reported_failures)
                    failures.push_back({{"kind", kind}, {"index", index}, {"left", o.left}, {"right", o.right},
                            {"product", o.product}, {"modular_coloring_ok", o.modular_ok}});
            }
        };
        for (size_t i = 0; i < outcomes.size(); ++i)
            record(outcomes[i], "catalogue", i);
        for (size_t i = 0; i < random_outcomes.size(); ++i)
            record(random_outcomes[i], "random", i);

        r.payload["catalogue_digraphs"] = catalogue.size();
        r.payload["catalogue_pairs"] = pairs.size();
        r.payload["random_pairs"] = random_pairs;
        r.payload["random_max_n"] = random_max_n;
        r.payload["seed"] = rng.seed;
        r.payload["product_value_histogram"] = histogram_json(histogram);
        r.payload["digest"] = digest(trace.str());
        r.payload["failure_examples"] = failures;
        finish(r, "digraph pairs");
        return r;
    }

    auto suite_bidirect(size_t max_n, size_t threads) -> SuiteResult
    {
        auto r = named_suite("bidirect");
        auto graphs = graph_catalogue(max_n);
        auto values = parallel_map(graphs.size(), threads, [&](size_t i) {
            return std::pair{chromatic_number(graphs[i]).value, dichromatic_number(bidirect(graphs[i])).value};
        });
        std::ostringstream trace;
        std::map<int, std::uint64_t> histogram;
        Json failures = Json::array();
        for (size_t i = 0; i < values.size(); ++i) {
            auto [chi, dichi] = values[i];
            ++r.cases;
            ++histogram[chi];
            trace << i << ':' << chi << ',' << dichi << ';';
            if (chi != dichi) {
                ++r.failures;
                if (failures.size() < max_reported_failures)
                    failures.push_back({{"index", i}, {"chromatic", chi}, {"dichromatic", dichi}});
            }
        }
        r.payload["max_n"] = max_n;
        r.payload["chromatic_histogram"] = histogram_json(histogram);
        r.payload["digest"] = digest(trace.str());
        r.payload["failure_examples"] = failures;
        finish(r, "graphs");
        return r;
    }

    auto suite_tensor_bound(size_t max_n, size_t threads) -> SuiteResult
    {
        auto r = named_suite("tensor-bound");
        auto catalogue = digraph_catalogue(max_n);
        auto factor = parallel_map(catalogue.size(), threads, [&](size_t i) { return dichromatic_number(catalogue[i]).value; });
        auto pairs = unordered_pairs(catalogue.size());
        auto values = parallel_map(pairs.size(), threads, [&](size_t i) {
            return dichromatic_number(tensor_product(catalogue[pairs[i].first], catalogue[pairs[i].second])).value;
        });

        std::ostringstream trace;
        std::uint64_t strict = 0;
        Json failures = Json::array();
        for (size_t i = 0; i < pairs.size(); ++i) {
            auto bound = std::min(factor[pairs[i].first], factor[pairs[i].second]);
            ++r.cases;
            trace << i << ':' << values[i] << ';';
            if (values[i] < bound)
                ++strict;
            if (values[i] > bound) {
                ++r.failures;
                if (failures.size() < max_reported_failures)
                    failures.push_back({{"index", i}, {"product", values[i]}, {"bound", bound}});
            }
        }
        r.payload["catalogue_digraphs"] = catalogue.size();
        r.payload["strictly_below_bound"] = strict;
        r.payload["digest"] = digest(trace.str());
        r.payload["failure_examples"] = failures;
        finish(r, "digraph pairs");
        return r;
    }

    auto suite_small_graph_orientations(size_t max_n, size_t threads) -> SuiteResult
    {
        auto r = named_suite("small-graph-orientations");
        auto graphs = graph_catalogue(max_n);
        struct Outcome
        {
            int chi;
            bool checked, ok;
        };
        auto outcomes = parallel_map(graphs.size(), threads, [&](size_t i) {
            auto & g = graphs[i];
            auto chi = chromatic_number(g).value;
            if (chi < 3)
                return Outcome{chi, false, true};
            auto o = orientation_reaching(g, 2);
            return Outcome{chi, true, o && ! is_acyclic(apply_orientation(g, *o))};
        });

        std::ostringstream trace;
        Json failures = Json::array();
        std::uint64_t eligible = 0;
        for (size_t i = 0; i < outcomes.size(); ++i) {
            auto & o = outcomes[i];
            trace << i << ':' << o.chi << ',' << o.ok << ';';
            if (! o.checked)
                continue;
            ++eligible;
            ++r.cases;
            if (! o.ok) {
                ++r.failures;
                if (failures.size() < max_reported_failures)
                    failures.push_back({{"index", i}, {"chromatic", o.chi}});
            }
        }
        r.payload["graphs"] = graphs.size();
        r.payload["chromatic_at_least_3"] = eligible;
        r.payload["digest"] = digest(trace.str());
        r.payload["failure_examples"] = failures;
        finish(r, "graphs with chromatic number >= 3");
        return r;
    }

    namespace
    {
        auto disjoint_union(const Graph & a, const Graph & b) -> Graph
        {
            Graph g(a.order() + b.order());
            for (auto [u, v] : a.edges())
                g.add_edge(u, v);
            for (auto [u, v] : b.edges())
                g.add_edge(a.order() + u, a.order() + v);
            return g;
        }
    }

    auto default_biclique_grid() -> vector<BicliqueCell>
    {
        auto k4_minus_edge = complete_graph(4);
        Graph diamond(4);
        for (auto [u, v] : k4_minus_edge.edges())
            if (! (u == 2 && v == 3))
                diamond.add_edge(u, v);

        vector<std::tuple<string, Graph, size_t>> graphs{
            {"K2,2", complete_bipartite(2, 2), 2},
            {"K4-e", diamond, 2},
            {"P2xP3", cartesian_product(path_graph(2), path_graph(3)), 2},
            {"2K2,2", disjoint_union(complete_bipartite(2, 2), complete_bipartite(2, 2)), 2},
            {"P2xP4", cartesian_product(path_graph(2), path_graph(4)), 2},
            {"P3xP3", cartesian_product(path_graph(3), path_graph(3)), 2},
            {"K2,3", complete_bipartite(2, 3), 2},
            {"Octahedron", complete_multipartite(2, 3), 2},
            {"K3,3", complete_bipartite(3, 3), 3},
            {"K3,4", complete_bipartite(3, 4), 3},
        };
        vector<BicliqueCell> cells;
        for (auto & [name, g, l] : graphs)
            for (std::uint64_t seed : {1, 2, 3})
                cells.push_back(BicliqueCell{name, g, l, seed});
        return cells;
    }

    auto suite_biclique_grid(const vector<BicliqueCell> & cells, std::uint64_t trials, size_t threads, double coverage_target)
        -> SuiteResult
    {
        auto r = named_suite("biclique-grid");
        Json rows = Json::array();
        std::uint64_t covered = 0;
        for (auto & cell : cells) {
            auto & g = cell.graph;
            auto exact = exact_biclique_probability(g, cell.l);
            auto exact_value = static_cast<double>(exact);
            auto e = estimate_biclique_event(g, cell.l, trials, RngSpec{cell.seed}, threads);
            bool inside = e.lower <= exact_value && exact_value <= e.upper;
            covered += inside ? 1 : 0;
            ++r.cases;
            rows.push_back({{"graph", cell.name}, {"l", cell.l}, {"seed", cell.seed}, {"edges", g.edge_count()},
                    {"trials", trials}, {"successes", e.successes}, {"estimate", e.value}, {"ci_lower", e.lower},
                    {"ci_upper", e.upper}, {"exact", rational_json(exact)}, {"exact_value", exact_value}, {"covered", inside}});
        }
        auto coverage = cells.empty() ? 1.0 : static_cast<double>(covered) / static_cast<double>(cells.size());
        r.failures = r.cases - covered;
        r.payload["cells"] = rows;
        r.payload["covered"] = covered;
        r.payload["coverage"] = coverage;
        r.payload["coverage_target"] = coverage_target;
        r.payload["cases"] = r.cases;
        r.payload["failures"] = r.failures;
        r.passed = coverage >= coverage_target;
        r.summary = to_string(covered) + "/" + to_string(r.cases) + " intervals contain the exact probability (target " +
            to_string(static_cast<int>(coverage_target * 100 + 0.5)) + "%)";
        return r;
    }

    namespace
    {
        struct AcceptanceInstance
        {
            string grid, digraph, collection;
            Digraph d;
            SetCollection c;
            ListAssignment l1;
            size_t l2;
        };

        auto shifted_lists(size_t n, size_t l1, size_t u) -> ListAssignment
        {
            vector<vector<Colour>> lists(n);
            for (size_t v = 0; v < n; ++v) {
                for (size_t i = 0; i < l1; ++i)
                    lists[v].push_back(static_cast<Colour>((v + i) % u));
                std::sort(lists[v].begin(), lists[v].end());
            }
            ListAssignment l;
            for (size_t c = 0; c < u; ++c)
                l.palette.push_back(static_cast<Colour>(c));
            l.lists = std::move(lists);
            l.k = l1;
            return l;
        }

        auto collection_of(size_t n, vector<vector<Vertex>> members) -> SetCollection
        {
            SetCollection c;
            size_t largest = 0;
            for (auto & m : members) {
                c.members.push_back(make_vertex_set(n, m));
                largest = std::max(largest, m.size());
            }
            c.s = static_cast<double>(std::max<size_t>(c.members.size(), 1));
            c.t = static_cast<double>(std::max<size_t>(largest, 1));
            return c;
        }

        auto tiny_collections(size_t n) -> vector<std::pair<string, SetCollection>>
        {
            vector<std::pair<string, SetCollection>> result;
            vector<Vertex> all(n);
            std::iota(all.begin(), all.end(), 0);
            result.emplace_back("whole", collection_of(n, {all}));
            vector<vector<Vertex>> singles, pairs;
            for (size_t v = 0; v < n; ++v) {
                singles.push_back({v});
                for (size_t w = v + 1; w < n; ++w)
                    pairs.push_back({v, w});
            }
            result.emplace_back("singletons", collection_of(n, singles));
            if (n >= 2)
                result.emplace_back("pairs", collection_of(n, pairs));
            auto half = (n + 1) / 2;
            result.emplace_back("halves", collection_of(n, {vector<Vertex>(all.begin(), all.begin() + static_cast<long>(half)),
                            vector<Vertex>(all.begin() + static_cast<long>(half), all.end())}));
            return result;
        }

        auto acceptance_instances() -> vector<AcceptanceInstance>
        {
            vector<AcceptanceInstance> result;

            vector<std::pair<string, Digraph>> tiny;
            auto small = digraph_catalogue(3);
            for (size_t i = 0; i < small.size(); ++i)
                tiny.emplace_back("catalogue#" + to_string(i), small[i]);
            tiny.emplace_back("DC4", directed_cycle(4));
            tiny.emplace_back("TT4", transitive_tournament(4));
            tiny.emplace_back("bidirected K4", bidirect(complete_graph(4)));
            tiny.emplace_back("E4", Digraph(4));

            for (auto & [name, d] : tiny)
                for (auto & [cname, c] : tiny_collections(d.order()))
                    for (size_t l1 = 2; l1 <= 3; ++l1)
                        for (size_t l2 = 1; l2 < l1; ++l2)
                            for (size_t u = l1; u <= l1 + 1; ++u)
                                result.push_back({"tiny", name, cname, d, c, shifted_lists(d.order(), l1, u), l2});

            for (size_t n = 6; n <= 8; ++n) {
                vector<std::pair<string, Digraph>> larger{{"DC" + to_string(n), directed_cycle(n)}, {"TT" + to_string(n), transitive_tournament(n)}};
                for (auto & [name, d] : larger)
                    for (size_t t = 1; t <= 2; ++t)
                        for (size_t s = 1; s <= 2; ++s) {
                            vector<vector<Vertex>> windows;
                            for (size_t w = 0; w < s; ++w) {
                                windows.emplace_back();
                                for (size_t i = 0; i < t; ++i)
                                    windows.back().push_back(w * t + i);
                            }
                            auto cname = to_string(s) + " window(s) of " + to_string(t);
                            result.push_back({"extended", name, cname, d, collection_of(n, windows), shifted_lists(n, 3, 3), 1});
                        }
            }
            return result;
        }
    }

    auto suite_acceptance_bound(size_t threads) -> SuiteResult
    {
        auto r = named_suite("acceptance-bound");
        auto instances = acceptance_instances();

        struct Screen
        {
            bool hypothesis;
            double g;
            bool qualifies;
        };
        vector<Screen> screens;
        vector<size_t> qualifying;
        for (size_t i = 0; i < instances.size(); ++i) {
            auto & in = instances[i];
            GBoundParams p{in.l1.k, in.l2, in.d.order(), in.c.s, in.c.t, in.l1.palette.size()};
            bool hypothesis = 4.0 * p.t * static_cast<double>(p.u) <= static_cast<double>(p.l1 - p.l2) * static_cast<double>(p.n);
            auto g = g_bound(p);
            screens.push_back({hypothesis, g, hypothesis && g < 1});
            if (screens.back().qualifies)
                qualifying.push_back(i);
        }

        auto exact = parallel_map(qualifying.size(), threads, [&](size_t j) {
            auto & in = instances[qualifying[j]];
            return exact_acceptance_probability(in.d, in.c, in.l1, in.l2);
        });

        std::map<string, std::map<string, std::uint64_t>> per_grid;
        Json checked = Json::array();
        for (size_t i = 0; i < instances.size(); ++i) {
            auto & grid = per_grid[instances[i].grid];
            ++grid["instances"];
            grid["hypothesis_holds"] += screens[i].hypothesis ? 1 : 0;
            grid["qualifying"] += screens[i].qualifies ? 1 : 0;
        }
        for (size_t j = 0; j < qualifying.size(); ++j) {
            auto & in = instances[qualifying[j]];
            auto & sc = screens[qualifying[j]];
            auto value = static_cast<double>(exact[j]);
            bool violation = value >= sc.g;
            ++r.cases;
            r.failures += violation ? 1 : 0;
            per_grid[in.grid]["violations"] += violation ? 1 : 0;
            checked.push_back({{"grid", in.grid}, {"digraph", in.digraph}, {"collection", in.collection}, {"n", in.d.order()},
                    {"s", in.c.s}, {"t", in.c.t}, {"u", in.l1.palette.size()}, {"l1", in.l1.k}, {"l2", in.l2}, {"g", sc.g},
                    {"exact", rational_json(exact[j])}, {"exact_value", value}, {"violation", violation}});
        }

        Json grids = Json::object();
        for (auto & [name, counts] : per_grid) {
            grids[name] = Json::object();
            for (auto & [key, count] : counts)
                grids[name][key] = count;
        }
        r.payload["grids"] = grids;
        r.payload["checked"] = checked;
        finish(r, "instances satisfying the hypothesis with g < 1");
        auto tiny = per_grid["tiny"];
        r.summary += " (tiny grid: " + to_string(tiny["instances"]) + " instances, " + to_string(tiny["qualifying"]) +
            " qualifying; extended grid: " + to_string(per_grid["extended"]["qualifying"]) + " qualifying)";
        return r;
    }
}
