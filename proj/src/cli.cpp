#include <dichroma/cli.hpp>
#include <dichroma/core.hpp>
#include <dichroma/covers.hpp>
#include <dichroma/error.hpp>
#include <dichroma/generators.hpp>
#include <dichroma/io.hpp>
#include <dichroma/parallel.hpp>
#include <dichroma/randomized.hpp>
#include <dichroma/record.hpp>
#include <dichroma/solvers.hpp>
#include <dichroma/verify.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace dichroma::cli
{
    using dichroma::to_string;
    using std::to_string;

    namespace
    {
        struct Global
        {
            optional<std::uint64_t> seed;
            optional<size_t> threads;
            double timeout_s = 600;
            string format = "text";
            string out_path;
        };

        /// What a command produced, in every output format.
        struct Report
        {
            ExperimentRecord record;
            string text;
            string csv;
            int exit = exit_ok;
        };

        class PropertyViolated : public std::runtime_error
        {
            public:
                using std::runtime_error::runtime_error;
        };

        auto join(const vector<Colour> & values, char sep = ' ') -> string
        {
            string s;
            for (size_t i = 0; i < values.size(); ++i) {
                if (i)
                    s += sep;
                s += to_string(values[i]);
            }
            return s;
        }

        auto bits_of(const Orientation & o) -> string
        {
            string s;
            for (bool r : o.reversed)
                s += r ? '1' : '0';
            return s;
        }

        auto parse_colours(const string & text) -> vector<Colour>
        {
            vector<Colour> colours;
            std::stringstream ss(text);
            string item;
            while (std::getline(ss, item, ',')) {
                try {
                    size_t used = 0;
                    auto value = std::stoul(item, &used);
                    if (used != item.size())
                        throw std::invalid_argument(item);
                    colours.push_back(static_cast<Colour>(value));
                }
                catch (const std::exception &) {
                    throw InvalidArgument("malformed colour '" + item + "'");
                }
            }
            return colours;
        }

        auto scalar_csv(const Json & result) -> string
        {
            string csv = "key,value\n";
            for (auto & [key, value] : result.items())
                if (value.is_primitive())
                    csv += key + "," + (value.is_string() ? value.get<string>() : value.dump()) + "\n";
            return csv;
        }

        auto rows_csv(const Json & rows, const vector<string> & columns) -> string
        {
            string csv;
            for (size_t i = 0; i < columns.size(); ++i)
                csv += (i ? "," : "") + columns[i];
            csv += "\n";
            for (auto & row : rows) {
                for (size_t i = 0; i < columns.size(); ++i) {
                    auto & v = row.at(columns[i]);
                    csv += (i ? "," : "") + (v.is_string() ? v.get<string>() : v.dump());
                }
                csv += "\n";
            }
            return csv;
        }

        auto graph_summary(const AnyGraph & g) -> Json
        {
            Json j;
            if (auto graph = std::get_if<Graph>(&g)) {
                j["kind"] = "graph";
                j["vertices"] = graph->order();
                j["edges"] = graph->edge_count();
            }
            else {
                auto & d = std::get<Digraph>(g);
                j["kind"] = "digraph";
                j["vertices"] = d.order();
                j["arcs"] = d.arc_count();
            }
            j["text"] = to_text(g);
            return j;
        }

        auto estimate_json(const Estimate & e) -> Json
        {
            return Json{{"successes", e.successes}, {"trials", e.trials}, {"estimate", e.value}, {"ci_lower", e.lower},
                {"ci_upper", e.upper}, {"confidence", 0.95}, {"z", wilson_z95}};
        }

        auto rational_string(const Rational & r) -> string
        {
            std::ostringstream s;
            s << r;
            return s.str();
        }

        class Session
        {
            public:
                Session(std::istream & in, std::ostream & out, std::ostream & err) : _in(in), _out(out), _err(err) {}

                auto run(const vector<string> & args) -> int;

            private:
                std::istream & _in;
                std::ostream & _out;
                std::ostream & _err;
                Global _g;
                bool _stdin_used = false;
                std::function<Report ()> _action;
                string _command;

                auto load(const string & source) -> AnyGraph
                {
                    if (source == "-") {
                        if (_stdin_used)
                            throw InvalidArgument("standard input can only be read once");
                        _stdin_used = true;
                        return parse_graph(_in);
                    }
                    if (std::filesystem::exists(source))
                        return parse_graph_file(source);
                    try {
                        return named_graph(source);
                    }
                    catch (const InvalidArgument &) {
                        throw InvalidArgument("'" + source + "' is neither a readable file nor a known graph name");
                    }
                }

                auto load_graph(const string & source) -> Graph
                {
                    auto g = load(source);
                    if (! std::holds_alternative<Graph>(g))
                        throw InvalidArgument("'" + source + "' is a digraph; this command needs an undirected graph");
                    return std::get<Graph>(std::move(g));
                }

                auto load_digraph(const string & source, bool bidirect_graphs) -> Digraph
                {
                    auto g = load(source);
                    if (auto graph = std::get_if<Graph>(&g)) {
                        if (! bidirect_graphs)
                            throw InvalidArgument("'" + source + "' is an undirected graph; pass --bidirect to use its bidirected digraph");
                        return bidirect(*graph);
                    }
                    return std::get<Digraph>(std::move(g));
                }

                auto seed() const -> std::uint64_t { return _g.seed.value_or(0); }
                auto threads() const -> size_t { return resolve_threads(_g.threads); }

                auto budget() const -> SolveBudget
                {
                    SolveBudget b;
                    b.timeout_seconds = _g.timeout_s;
                    return b;
                }

                auto base_record(Json params, bool seeded = false) const -> ExperimentRecord
                {
                    ExperimentRecord r;
                    r.command = _command;
                    r.params = std::move(params);
                    if (seeded)
                        r.seed = seed();
                    return r;
                }

                auto graph_report(const AnyGraph & g, Json params, bool seeded = false) const -> Report
                {
                    Report rep{base_record(std::move(params), seeded), to_text(g), {}, exit_ok};
                    rep.record.result = graph_summary(g);
                    return rep;
                }

                auto emit(const Report & rep) -> void
                {
                    std::ofstream file;
                    std::ostream * sink = &_out;
                    if (! _g.out_path.empty()) {
                        file.open(_g.out_path);
                        if (! file)
                            throw InvalidArgument("cannot write " + _g.out_path);
                        sink = &file;
                    }
                    if (_g.format == "json")
                        *sink << rep.record.to_json().dump(2) << '\n';
                    else if (_g.format == "csv")
                        *sink << (rep.csv.empty() ? scalar_csv(rep.record.result) : rep.csv);
                    else
                        *sink << rep.text;
                }

                auto add_gen(CLI::App & app) -> void;
                auto add_product(CLI::App & app) -> void;
                auto add_orient(CLI::App & app) -> void;
                auto add_solve(CLI::App & app) -> void;
                auto add_check(CLI::App & app) -> void;
                auto add_mc(CLI::App & app) -> void;
                auto add_bound(CLI::App & app) -> void;
                auto add_verify(CLI::App & app) -> void;
                auto add_embed(CLI::App & app) -> void;

                auto leaf(CLI::App & parent, const string & name, const string & description) -> CLI::App *
                {
                    auto sub = parent.add_subcommand(name, description);
                    sub->fallthrough();
                    auto path = parent.get_name() + " " + name;
                    sub->parse_complete_callback([this, path] { _command = path; });
                    return sub;
                }

                // Option storage; CLI11 binds to these by reference.
                size_t _n = 0, _k = 0, _m = 0, _r = 0, _n1 = 0, _k1 = 0;
                string _name, _source = "-", _source2 = "-", _colours;
                BorsukSampleConfig _borsuk;
                std::uint64_t _max_attempts = 1000, _trials = 10000;
                size_t _l = 2, _l1 = 3, _l2 = 1;
                optional<size_t> _u, _rook_n;
                size_t _beta = 1;
                double _lambda = 1;
                bool _break_cliques = false, _bidirect = false;
                size_t _max_n = 4, _random_pairs = 200, _random_max_n = 5;
                size_t _edge_limit = default_orientation_edge_limit;
                double _s = 1, _t = 1, _c = 1, _tt = 0;
                std::uint64_t _mm = 0, _uu = 1, _kk = 1, _aa = 0, _nn = 1;
                string _pairs = "4:1,5:1,5:2,6:2,7:2,7:3";
                string _collection = "whole";
        };

        auto Session::add_gen(CLI::App & app) -> void
        {
            auto gen = app.add_subcommand("gen", "Generate a graph");
            gen->fallthrough();
            gen->require_subcommand(1);

            auto kneser_cmd = leaf(*gen, "kneser", "Kneser graph KG(n,k)");
            kneser_cmd->add_option("n", _n)->required();
            kneser_cmd->add_option("k", _k)->required();
            kneser_cmd->final_callback([this] {
                _action = [this] { return graph_report(kneser(_n, _k), {{"n", _n}, {"k", _k}}); };
            });

            auto multi = leaf(*gen, "multipartite", "Complete r-partite graph with m vertices per part");
            multi->add_option("m", _m)->required();
            multi->add_option("r", _r)->required();
            multi->final_callback([this] {
                _action = [this] { return graph_report(complete_multipartite(_m, _r), {{"m", _m}, {"r", _r}}); };
            });

            auto rook_cmd = leaf(*gen, "rook", "Rook graph K_n x K_n");
            rook_cmd->add_option("n", _n)->required();
            rook_cmd->final_callback([this] { _action = [this] { return graph_report(rook(_n), {{"n", _n}}); }; });

            auto borsuk = leaf(*gen, "borsuk", "Finite sample of a Borsuk graph");
            borsuk->add_option("--dim", _borsuk.n, "sphere dimension n (points in R^(n+1))")->default_val(1);
            borsuk->add_option("--a", _borsuk.a, "adjacency threshold in (0,2)")->default_val(1.9);
            borsuk->add_option("--delta", _borsuk.delta, "cap radius, default (2-a)/2");
            borsuk->add_option("--cube-side", _borsuk.cube_side)->default_val(0.1);
            borsuk->add_option("--perturbation", _borsuk.perturbation_scale)->default_val(1.0);
            borsuk->add_flag("--simplex-coloring", _bidirect, "also colour the sample by the inscribed simplex");
            borsuk->final_callback([this] {
                _action = [this] {
                    auto sample = borsuk_sample(_borsuk);
                    Json params{{"dim", _borsuk.n}, {"a", _borsuk.a}, {"delta", _borsuk.effective_delta()},
                        {"cube_side", _borsuk.cube_side}, {"perturbation", _borsuk.perturbation_scale}};
                    auto rep = graph_report(sample.graph, params);
                    rep.record.result["points"] = sample.points;
                    if (_bidirect && ! sample.points.empty()) {
                        auto f = simplex_coloring(sample.points);
                        auto proper = is_proper_coloring(sample.graph, f);
                        rep.record.result["simplex_coloring"] = f.assignment;
                        rep.record.result["simplex_coloring_proper"] = proper;
                        rep.text += string("# simplex colouring ") + (proper ? "proper" : "not proper") + ": " + join(f.assignment) + "\n";
                    }
                    return rep;
                };
            });

            auto named = leaf(*gen, "named", "Named graph: K<n>, C<n>, P<n>, E<n>, W<n>, Q<d>, K<a>,<b>, Petersen, Octahedron, DC<n>, TT<n>");
            named->add_option("name", _name)->required();
            named->final_callback([this] { _action = [this] { return graph_report(named_graph(_name), {{"name", _name}}); }; });
        }

        auto Session::add_product(CLI::App & app) -> void
        {
            auto product = app.add_subcommand("product", "Product of two graphs or two digraphs");
            product->fallthrough();
            product->require_subcommand(1);
            for (string kind : {"cartesian", "tensor"}) {
                auto sub = leaf(*product, kind, kind == "cartesian" ? "Cartesian product" : "Tensor product");
                sub->add_option("left", _source, "file, graph name, or - for stdin")->required();
                sub->add_option("right", _source2, "file, graph name, or - for stdin")->required();
                sub->final_callback([this, kind] {
                    _action = [this, kind] {
                        auto x = load(_source);
                        auto y = load(_source2);
                        auto p = kind == "cartesian" ? cartesian_product(x, y) : tensor_product(x, y);
                        return graph_report(p, {{"left", _source}, {"right", _source2}});
                    };
                });
            }
        }

        auto Session::add_orient(CLI::App & app) -> void
        {
            auto orient = app.add_subcommand("orient", "Orientations of a graph");
            orient->fallthrough();
            orient->require_subcommand(1);

            auto random = leaf(*orient, "random", "Orient each edge by an independent fair coin");
            random->add_option("graph", _source)->default_val("-");
            random->final_callback([this] {
                _action = [this] {
                    auto g = load_graph(_source);
                    auto o = random_orientation_choice(g, RngSpec{seed()});
                    auto rep = graph_report(apply_orientation(g, o), {{"graph", _source}}, true);
                    rep.record.result["orientation"] = bits_of(o);
                    return rep;
                };
            });

            auto enumerate = leaf(*orient, "enumerate", "Every orientation, as reversal bits over the sorted edges");
            enumerate->add_option("graph", _source)->default_val("-");
            enumerate->add_option("--edge-limit", _edge_limit)->default_val(default_orientation_edge_limit);
            enumerate->final_callback([this] {
                _action = [this] {
                    auto g = load_graph(_source);
                    Report rep{base_record({{"graph", _source}, {"edge_limit", _edge_limit}}), {}, {}, exit_ok};
                    Json rows = Json::array();
                    std::uint64_t acyclic = 0;
                    std::uint64_t index = 0;
                    for (auto o : enumerate_orientations(g, _edge_limit)) {
                        bool ok = is_acyclic(apply_orientation(g, o));
                        acyclic += ok ? 1 : 0;
                        rows.push_back({{"index", index}, {"bits", bits_of(o)}, {"acyclic", ok}});
                        rep.text += to_string(index++) + " " + bits_of(o) + " " + (ok ? "acyclic" : "cyclic") + "\n";
                    }
                    rep.record.result = {{"count", rows.size()}, {"acyclic", acyclic}, {"orientations", rows}};
                    rep.csv = rows_csv(rows, {"index", "bits", "acyclic"});
                    return rep;
                };
            });

            auto certified = leaf(*orient, "certified", "Rejection-sample an orientation in which every K_{l,l} has a directed cycle");
            certified->add_option("graph", _source)->default_val("-");
            certified->add_option("--l", _l)->default_val(2);
            certified->add_option("--max-attempts", _max_attempts)->default_val(1000);
            certified->add_flag("--break-cliques", _break_cliques, "also require every K_l to contain a directed cycle");
            certified->final_callback([this] {
                _action = [this] {
                    auto g = load_graph(_source);
                    auto d = certified_breaking_orientation(g, _l, RngSpec{seed()}, _max_attempts, _break_cliques);
                    return graph_report(d, {{"graph", _source}, {"l", _l}, {"max_attempts", _max_attempts}, {"break_cliques", _break_cliques}}, true);
                };
            });
        }

        auto Session::add_solve(CLI::App & app) -> void
        {
            auto solve = app.add_subcommand("solve", "Exact colouring numbers");
            solve->fallthrough();
            solve->require_subcommand(1);

            for (string kind : {"chromatic", "dichromatic", "graph-dichromatic", "list-chromatic", "list-dichromatic"}) {
                auto sub = leaf(*solve, kind, kind + " number");
                sub->add_option("graph", _source, "file, graph name, or - for stdin")->default_val("-");
                if (kind == "dichromatic" || kind == "list-dichromatic")
                    sub->add_flag("--bidirect", _bidirect, "accept an undirected graph and use its bidirected digraph");
                sub->final_callback([this, kind] {
                    _action = [this, kind] {
                        Report rep{base_record({{"graph", _source}, {"timeout_s", _g.timeout_s}}), {}, {}, exit_ok};
                        Certificate cert;
                        AnyGraph subject;
                        try {
                            if (kind == "chromatic" || kind == "list-chromatic" || kind == "graph-dichromatic") {
                                auto g = load_graph(_source);
                                cert = kind == "chromatic" ? chromatic_number(g, budget()) :
                                    kind == "list-chromatic" ? list_chromatic_number(g, budget()) : dichromatic_number_of_graph(g, budget());
                                subject = kind == "graph-dichromatic" ? AnyGraph(apply_orientation(g, *cert.orientation)) : AnyGraph(g);
                            }
                            else {
                                auto d = load_digraph(_source, _bidirect);
                                cert = kind == "dichromatic" ? dichromatic_number(d, budget()) : list_dichromatic_number(d, budget());
                                subject = d;
                            }
                        }
                        catch (const BudgetExceeded & e) {
                            rep.record.result = {{"status", "budget-exceeded"}, {"lower", e.lower()}, {"upper", e.upper()}, {"message", e.what()}};
                            rep.text = "unknown (between " + to_string(e.lower()) + " and " + to_string(e.upper()) + "): " + e.what() + "\n";
                            rep.exit = exit_budget;
                            return rep;
                        }

                        rep.record.result = {{"status", "exact"}, {"value", cert.value}, {"nodes", cert.nodes}, {"lower_bound", cert.lower_bound_trace}};
                        rep.text = to_string(cert.value) + "\n";
                        if (cert.witness) {
                            rep.record.certificate = coloring_certificate(subject, *cert.witness);
                            rep.text += "witness: " + join(cert.witness->assignment) + "\n";
                        }
                        if (cert.orientation) {
                            rep.record.result["orientation"] = bits_of(*cert.orientation);
                            rep.text += "orientation: " + bits_of(*cert.orientation) + "\n";
                        }
                        if (cert.rejected) {
                            rep.record.result["rejected_lists"] = cert.rejected->lists;
                            rep.text += "rejected lists:";
                            for (auto & list : cert.rejected->lists)
                                rep.text += " {" + join(list, ',') + "}";
                            rep.text += "\n";
                        }
                        rep.text += "lower bound: " + cert.lower_bound_trace + "\n";
                        return rep;
                    };
                });
            }
        }

        auto Session::add_check(CLI::App & app) -> void
        {
            auto check = app.add_subcommand("check", "Check colourings, covers and semicovers");
            check->fallthrough();
            check->require_subcommand(1);

            for (string kind : {"coloring", "dicoloring"}) {
                auto sub = leaf(*check, kind, kind == "coloring" ? "Is the colouring proper?" : "Is every colour class acyclic?");
                sub->add_option("graph", _source)->default_val("-");
                sub->add_option("--colors", _colours, "comma-separated colour per vertex")->required();
                sub->final_callback([this, kind] {
                    _action = [this, kind] {
                        auto colours = parse_colours(_colours);
                        auto palette = colours;
                        std::sort(palette.begin(), palette.end());
                        palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
                        Coloring f{palette, colours};
                        bool ok = false;
                        AnyGraph subject;
                        if (kind == "coloring") {
                            auto g = load_graph(_source);
                            ok = is_proper_coloring(g, f);
                            subject = g;
                        }
                        else {
                            auto d = load_digraph(_source, false);
                            ok = is_proper_dicoloring(d, f);
                            subject = d;
                        }
                        Report rep{base_record({{"graph", _source}, {"colors", _colours}}), {}, {}, ok ? exit_ok : exit_violation};
                        rep.record.result = {{"proper", ok}};
                        rep.record.certificate = coloring_certificate(subject, f);
                        rep.text = ok ? "proper\n" : "not proper\n";
                        return rep;
                    };
                });
            }

            auto cover = leaf(*check, "cover", "Does the rook collection cover every acyclic partition?");
            cover->add_option("digraph", _source, "an orientation of rook(n)")->default_val("-");
            cover->add_option("--rook-n", _rook_n)->required();
            cover->add_option("--beta", _beta)->default_val(1);
            cover->final_callback([this] {
                _action = [this] {
                    auto d = load_digraph(_source, false);
                    auto c = build_rook_collection({*_rook_n, _beta});
                    if (d.order() != *_rook_n * *_rook_n)
                        throw InvalidArgument("digraph order does not match rook(" + to_string(*_rook_n) + ")");
                    auto v = verify_cover_all_acyclic(d, c);
                    Report rep{base_record({{"digraph", _source}, {"rook_n", *_rook_n}, {"beta", _beta}}), {}, {}, v.holds ? exit_ok : exit_violation};
                    rep.record.result = {{"covered", v.holds}, {"maximal_acyclic_sets", v.maximal_sets}, {"members", c.members.size()},
                        {"s", c.s}, {"t", c.t}};
                    if (v.counterexample)
                        rep.record.result["counterexample"] = to_string(*v.counterexample);
                    rep.text = v.holds ? "covered\n" : "not covered: " + to_string(*v.counterexample) + "\n";
                    return rep;
                };
            });

            auto semicover = leaf(*check, "semicover", "Is every acyclic partition of a K2 x rook(n) orientation semicovered?");
            semicover->add_option("digraph", _source, "an orientation of K2 x rook(n)")->default_val("-");
            semicover->add_option("--rook-n", _rook_n)->required();
            semicover->add_option("--beta", _beta)->default_val(1);
            semicover->add_option("--lambda", _lambda)->default_val(1.0);
            semicover->final_callback([this] {
                _action = [this] {
                    auto d = load_digraph(_source, false);
                    SemicoverSpec spec{build_rook_collection({*_rook_n, _beta}), _lambda};
                    if (d.order() != 2 * *_rook_n * *_rook_n)
                        throw InvalidArgument("digraph order does not match K2 x rook(" + to_string(*_rook_n) + ")");
                    auto v = verify_semicover_all_acyclic(d, spec);
                    Report rep{base_record({{"digraph", _source}, {"rook_n", *_rook_n}, {"beta", _beta}, {"lambda", _lambda}}), {}, {},
                        v.holds ? exit_ok : exit_violation};
                    rep.record.result = {{"semicovered", v.holds}, {"maximal_acyclic_sets", v.maximal_sets}};
                    if (v.counterexample)
                        rep.record.result["counterexample"] = to_string(*v.counterexample);
                    rep.text = v.holds ? "semicovered\n" : "not semicovered: " + to_string(*v.counterexample) + "\n";
                    return rep;
                };
            });
        }

        auto Session::add_mc(CLI::App & app) -> void
        {
            auto mc = app.add_subcommand("mc", "Monte Carlo experiments");
            mc->fallthrough();
            mc->require_subcommand(1);

            auto biclique = leaf(*mc, "biclique", "Probability that a random orientation has an acyclic K_{l,l}");
            biclique->add_option("--graph", _source)->required();
            biclique->add_option("--l", _l)->default_val(2);
            biclique->add_option("--trials", _trials)->default_val(10000);
            biclique->final_callback([this] {
                _action = [this] {
                    auto g = load_graph(_source);
                    auto e = estimate_biclique_event(g, _l, _trials, RngSpec{seed()}, threads());
                    Report rep{base_record({{"graph", _source}, {"l", _l}, {"trials", _trials}}, true), {}, {}, exit_ok};
                    rep.record.result = estimate_json(e);
                    rep.record.result["union_bound"] = biclique_union_bound(g.order(), _l);
                    if (g.edge_count() <= 20) {
                        auto exact = exact_biclique_probability(g, _l);
                        rep.record.result["exact"] = rational_string(exact);
                        rep.record.result["exact_value"] = static_cast<double>(exact);
                    }
                    std::ostringstream t;
                    t << "estimate " << e.value << " (95% CI " << e.lower << " .. " << e.upper << ") from " << e.trials << " trials\n";
                    if (rep.record.result.contains("exact"))
                        t << "exact " << rep.record.result["exact"].get<string>() << "\n";
                    rep.text = t.str();
                    return rep;
                };
            });

            auto acceptance = leaf(*mc, "acceptance", "Probability that random sublists accept a covered acyclic partition");
            acceptance->add_option("--graph", _source, "digraph file or name")->required();
            acceptance->add_option("--collection", _collection, "whole | singletons | rook")->default_val("whole");
            acceptance->add_option("--rook-n", _rook_n);
            acceptance->add_option("--beta", _beta)->default_val(1);
            acceptance->add_option("--l1", _l1)->default_val(3);
            acceptance->add_option("--l2", _l2)->default_val(1);
            acceptance->add_option("--u", _u, "palette size, default l1");
            acceptance->add_option("--trials", _trials)->default_val(10000);
            acceptance->final_callback([this] {
                _action = [this] {
                    auto d = load_digraph(_source, false);
                    auto n = d.order();
                    SetCollection c;
                    if (_collection == "rook") {
                        if (! _rook_n || *_rook_n * *_rook_n != n)
                            throw InvalidArgument("--collection rook needs --rook-n matching the digraph order");
                        c = build_rook_collection({*_rook_n, _beta});
                    }
                    else if (_collection == "whole") {
                        VertexSet all(n);
                        all.set();
                        c = SetCollection{{all}, 1, static_cast<double>(std::max<size_t>(n, 1))};
                    }
                    else if (_collection == "singletons") {
                        for (size_t v = 0; v < n; ++v)
                            c.members.push_back(make_vertex_set(n, {v}));
                        c.s = static_cast<double>(std::max<size_t>(n, 1));
                        c.t = 1;
                    }
                    else
                        throw InvalidArgument("unknown collection '" + _collection + "'");

                    auto u = _u.value_or(_l1);
                    if (u < _l1)
                        throw InvalidArgument("palette smaller than the lists");
                    ListAssignment l1;
                    for (size_t i = 0; i < u; ++i)
                        l1.palette.push_back(static_cast<Colour>(i));
                    l1.k = _l1;
                    for (size_t v = 0; v < n; ++v) {
                        vector<Colour> list;
                        for (size_t i = 0; i < _l1; ++i)
                            list.push_back(static_cast<Colour>((v + i) % u));
                        std::sort(list.begin(), list.end());
                        l1.lists.push_back(list);
                    }

                    auto a = estimate_acceptance_probability(d, c, l1, _l2, _trials, RngSpec{seed()}, threads());
                    Report rep{base_record({{"graph", _source}, {"collection", _collection}, {"beta", _beta}, {"l1", _l1}, {"l2", _l2},
                                {"u", u}, {"trials", _trials}}, true), {}, {}, exit_ok};
                    rep.record.result = estimate_json(a.estimate);
                    rep.record.result["hypothesis_holds"] = a.hypothesis_holds;
                    rep.record.result["g_bound"] = a.g ? Json(*a.g) : Json(nullptr);
                    rep.record.result["s"] = c.s;
                    rep.record.result["t"] = c.t;
                    std::ostringstream t;
                    t << "estimate " << a.estimate.value << " (95% CI " << a.estimate.lower << " .. " << a.estimate.upper << ")\n";
                    t << "hypothesis 4tu <= (l1-l2)n: " << (a.hypothesis_holds ? "holds" : "fails") << "\n";
                    if (a.g)
                        t << "g bound " << *a.g << "\n";
                    rep.text = t.str();
                    return rep;
                };
            });
        }

        auto Session::add_bound(CLI::App & app) -> void
        {
            auto bound = app.add_subcommand("bound", "Evaluate analytic bounds");
            bound->fallthrough();
            bound->require_subcommand(1);

            auto g = leaf(*bound, "g", "s^u exp(-(n/2) 2^(-4 l2 t u/((l1-l2) n)))");
            g->add_option("--l1", _l1)->required();
            g->add_option("--l2", _l2)->required();
            g->add_option("--n", _n)->required();
            g->add_option("--s", _s)->required();
            g->add_option("--t", _t)->required();
            g->add_option("--u", _u)->required();
            g->final_callback([this] {
                _action = [this] {
                    GBoundParams p{_l1, _l2, _n, _s, _t, *_u};
                    auto log_value = log_g_bound(p);
                    Report rep{base_record({{"l1", _l1}, {"l2", _l2}, {"n", _n}, {"s", _s}, {"t", _t}, {"u", *_u}}), {}, {}, exit_ok};
                    rep.record.result = {{"value", std::exp(log_value)}, {"log_value", log_value},
                        {"hypothesis_holds", 4.0 * _t * static_cast<double>(*_u) <= static_cast<double>(_l1 - _l2) * static_cast<double>(_n)}};
                    std::ostringstream t;
                    t.precision(12);
                    t << std::exp(log_value) << "\n";
                    rep.text = t.str();
                    return rep;
                };
            });

            auto conc = leaf(*bound, "concentration", "2 exp(-t^2/(2 c^2 n))");
            conc->add_option("--n", _nn)->required();
            conc->add_option("--c", _c)->required();
            conc->add_option("--t", _tt)->required();
            conc->final_callback([this] {
                _action = [this] {
                    auto value = concentration_bound(_nn, _c, _tt);
                    Report rep{base_record({{"n", _nn}, {"c", _c}, {"t", _tt}}), {}, {}, exit_ok};
                    rep.record.result = {{"value", value}};
                    std::ostringstream t;
                    t.precision(12);
                    t << value << "\n";
                    rep.text = t.str();
                    return rep;
                };
            });

            auto expectation = leaf(*bound, "expectation", "m C(u-a,k)/C(u,k)");
            expectation->add_option("--m", _mm)->required();
            expectation->add_option("--u", _uu)->required();
            expectation->add_option("--k", _kk)->required();
            expectation->add_option("--a", _aa)->required();
            expectation->final_callback([this] {
                _action = [this] {
                    auto value = expected_avoiding_count({_mm, _uu, _kk, _aa});
                    Report rep{base_record({{"m", _mm}, {"u", _uu}, {"k", _kk}, {"a", _aa}}), {}, {}, exit_ok};
                    rep.record.result = {{"value", rational_string(value)}, {"approx", static_cast<double>(value)}};
                    rep.text = rational_string(value) + "\n";
                    return rep;
                };
            });

            auto union_bound = leaf(*bound, "union", "n^(4l) 2^(-l^2)");
            union_bound->add_option("--n", _n)->required();
            union_bound->add_option("--l", _l)->required();
            union_bound->final_callback([this] {
                _action = [this] {
                    auto value = biclique_union_bound(_n, _l);
                    Report rep{base_record({{"n", _n}, {"l", _l}}), {}, {}, exit_ok};
                    rep.record.result = {{"value", value}};
                    std::ostringstream t;
                    t.precision(12);
                    t << value << "\n";
                    rep.text = t.str();
                    return rep;
                };
            });
        }

        auto Session::add_verify(CLI::App & app) -> void
        {
            auto verify = app.add_subcommand("verify", "Verification suites (exit 4 on any violation)");
            verify->fallthrough();
            verify->require_subcommand(1);

            auto finish = [this](const SuiteResult & s, Json params, bool seeded, const string & csv = {}) {
                Report rep{base_record(std::move(params), seeded), {}, csv, s.passed ? exit_ok : exit_violation};
                rep.record.result = s.payload;
                rep.record.result["passed"] = s.passed;
                rep.record.result["summary"] = s.summary;
                rep.text = string(s.passed ? "PASS " : "FAIL ") + s.name + ": " + s.summary + "\n";
                return rep;
            };

            auto sabidussi = leaf(*verify, "sabidussi", "Cartesian products: dichromatic number is the maximum of the factors'");
            sabidussi->add_option("--max-n", _max_n)->default_val(4);
            sabidussi->add_option("--random-pairs", _random_pairs)->default_val(200);
            sabidussi->add_option("--random-max-n", _random_max_n)->default_val(5);
            sabidussi->final_callback([this, finish] {
                _action = [this, finish] {
                    auto s = suite_sabidussi(_max_n, _random_pairs, _random_max_n, RngSpec{seed()}, threads());
                    return finish(s, {{"max_n", _max_n}, {"random_pairs", _random_pairs}, {"random_max_n", _random_max_n}}, true);
                };
            });

            auto bid = leaf(*verify, "bidirect", "Bidirected digraphs have the graph's chromatic number");
            bid->add_option("--max-n", _max_n)->default_val(6);
            bid->final_callback([this, finish] {
                _action = [this, finish] { return finish(suite_bidirect(_max_n, threads()), {{"max_n", _max_n}}, false); };
            });

            auto kchi = leaf(*verify, "kneser-chi", "Chromatic numbers of Kneser graphs");
            kchi->add_option("--pairs", _pairs, "comma-separated n:k pairs")->default_val("4:1,5:1,5:2,6:2,7:2,7:3");
            kchi->final_callback([this, finish] {
                _action = [this, finish] {
                    vector<std::pair<size_t, size_t>> pairs;
                    std::stringstream ss(_pairs);
                    string item;
                    while (std::getline(ss, item, ',')) {
                        auto colon = item.find(':');
                        if (colon == string::npos)
                            throw InvalidArgument("malformed pair '" + item + "', expected n:k");
                        try {
                            pairs.emplace_back(std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1)));
                        }
                        catch (const std::logic_error &) {
                            throw InvalidArgument("malformed pair '" + item + "', expected n:k");
                        }
                    }
                    return finish(suite_kneser_chi(pairs), {{"pairs", _pairs}}, false);
                };
            });

            auto cat = leaf(*verify, "catalogue", "Graphs with chromatic number >= 3 have an orientation needing 2 colours");
            cat->add_option("--max-n", _max_n)->default_val(7);
            cat->final_callback([this, finish] {
                _action = [this, finish] { return finish(suite_small_graph_orientations(_max_n, threads()), {{"max_n", _max_n}}, false); };
            });

            auto tensor = leaf(*verify, "tensor", "Tensor products never exceed the smaller factor's dichromatic number");
            tensor->add_option("--max-n", _max_n)->default_val(4);
            tensor->final_callback([this, finish] {
                _action = [this, finish] { return finish(suite_tensor_bound(_max_n, threads()), {{"max_n", _max_n}}, false); };
            });

            auto grid = leaf(*verify, "biclique-grid", "Monte Carlo intervals against exact acyclic-biclique probabilities");
            grid->add_option("--trials", _trials)->default_val(2000);
            grid->final_callback([this, finish] {
                _action = [this, finish] {
                    auto s = suite_biclique_grid(default_biclique_grid(), _trials, threads());
                    auto csv = rows_csv(s.payload["cells"], {"graph", "l", "seed", "trials", "successes", "estimate", "ci_lower", "ci_upper", "exact", "covered"});
                    return finish(s, {{"trials", _trials}}, false, csv);
                };
            });

            auto acc = leaf(*verify, "acceptance-bound", "Exact acceptance probabilities against the g bound");
            acc->final_callback([this, finish] {
                _action = [this, finish] {
                    auto s = suite_acceptance_bound(threads());
                    auto csv = rows_csv(s.payload["checked"], {"grid", "digraph", "collection", "n", "s", "t", "u", "l1", "l2", "g", "exact", "violation"});
                    return finish(s, Json::object(), false, csv);
                };
            });
        }

        auto Session::add_embed(CLI::App & app) -> void
        {
            auto embed = app.add_subcommand("embed", "Induced embeddings between graph families");
            embed->fallthrough();
            embed->require_subcommand(1);

            auto report = [this](const EmbeddingWitness & w, Json params) {
                bool ok = verify_embedding(w);
                Report rep{base_record(std::move(params)), {}, {}, ok ? exit_ok : exit_violation};
                Json map = Json::array();
                for (size_t v = 0; v < w.map.size(); ++v) {
                    map.push_back({{"source", w.source.label(v)}, {"target", w.target.label(w.map[v])}});
                    rep.text += w.source.label(v) + " -> " + w.target.label(w.map[v]) + "\n";
                }
                rep.text += string(ok ? "verified" : "NOT an induced embedding") + ": " + to_string(w.source.order()) + " vertices, " +
                    to_string(w.source.edge_count()) + " edges\n";
                rep.record.result = {{"verified", ok}, {"source_vertices", w.source.order()}, {"source_edges", w.source.edge_count()},
                    {"target_vertices", w.target.order()}, {"map", map}};
                return rep;
            };

            auto rik = leaf(*embed, "rook-in-kneser", "rook(floor(n/k)) inside KG(n,k)");
            rik->add_option("n", _n)->required();
            rik->add_option("k", _k)->required();
            rik->final_callback([this, report] {
                _action = [this, report] { return report(embed_rook_in_kneser(_n, _k), {{"n", _n}, {"k", _k}}); };
            });

            auto kt = leaf(*embed, "kneser-tensor", "KG(n1,k1) x KG(n-n1,k-k1) inside KG(n,k)");
            kt->add_option("n", _n)->required();
            kt->add_option("k", _k)->required();
            kt->add_option("n1", _n1)->required();
            kt->add_option("k1", _k1)->required();
            kt->final_callback([this, report] {
                _action = [this, report] {
                    return report(embed_kneser_tensor(_n, _k, _n1, _k1), {{"n", _n}, {"k", _k}, {"n1", _n1}, {"k1", _k1}});
                };
            });
        }

        auto Session::run(const vector<string> & args) -> int
        {
            CLI::App app{"Dichromatic and list-dichromatic numbers at desk scale", "dichroma"};
            app.require_subcommand(1);
            app.add_option("--seed", _g.seed, "random seed (default 0)");
            app.add_option("--threads", _g.threads, "worker threads (default: DICHROMA_THREADS, then all cores)");
            app.add_option("--timeout-s", _g.timeout_s, "per-solve time limit in seconds")->default_val(600);
            app.add_option("--format", _g.format)->check(CLI::IsMember({"text", "json", "csv"}))->default_val("text");
            app.add_option("--out", _g.out_path, "write output to this file instead of stdout");

            add_gen(app);
            add_product(app);
            add_orient(app);
            add_solve(app);
            add_check(app);
            add_mc(app);
            add_bound(app);
            add_verify(app);
            add_embed(app);

            try {
                vector<string> reversed(args.rbegin(), args.rend());
                app.parse(reversed);
            }
            catch (const CLI::ParseError & e) {
                auto code = app.exit(e, _out, _err);
                return code == 0 ? exit_ok : exit_usage;
            }

            if (! _action) {
                _err << "no command given\n";
                return exit_usage;
            }

            try {
                if (! (_g.timeout_s > 0))
                    throw InvalidArgument("--timeout-s must be positive");
                auto start = std::chrono::steady_clock::now();
                auto rep = _action();
                rep.record.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
                if (rep.record.command.empty())
                    rep.record.command = _command;
                emit(rep);
                return rep.exit;
            }
            catch (const BudgetExceeded & e) {
                _err << "budget exceeded: " << e.what() << "\n";
                return exit_budget;
            }
            catch (const AttemptsExhausted & e) {
                _err << "budget exceeded: " << e.what() << "\n";
                return exit_budget;
            }
            catch (const ParseError & e) {
                _err << "input error: " << e.what() << "\n";
                return exit_usage;
            }
            catch (const InvalidArgument & e) {
                _err << "error: " << e.what() << "\n";
                return exit_usage;
            }
            catch (const LimitExceeded & e) {
                _err << "limit exceeded: " << e.what() << "\n";
                return exit_budget;
            }
        }
    }

    auto run(const vector<string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        Session session(in, out, err);
        return session.run(args);
    }
}
