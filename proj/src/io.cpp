#include <dichroma/error.hpp>
#include <dichroma/io.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

using std::size_t;
using std::string;
using std::string_view;
using std::vector;

namespace dichroma
{
    using std::to_string;

    namespace
    {
        auto trim(string_view s) -> string_view
        {
            while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
                s.remove_prefix(1);
            while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
                s.remove_suffix(1);
            return s;
        }

        auto tokens(string_view s) -> vector<string_view>
        {
            vector<string_view> result;
            size_t i = 0;
            while (i < s.size()) {
                while (i < s.size() && (s[i] == ' ' || s[i] == '\t'))
                    ++i;
                auto start = i;
                while (i < s.size() && s[i] != ' ' && s[i] != '\t')
                    ++i;
                if (i > start)
                    result.push_back(s.substr(start, i - start));
            }
            return result;
        }

        auto number(string_view token, const string & what, size_t line) -> size_t
        {
            size_t value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || end != token.data() + token.size())
                throw ParseError("malformed " + what + " '" + string(token) + "'", line);
            return value;
        }

        auto strip_comment(string_view s) -> string_view
        {
            auto hash = s.find('#');
            return hash == string_view::npos ? s : s.substr(0, hash);
        }

        struct Builder
        {
            bool directed = false;
            size_t n = 0, m = 0;
            size_t seen = 0;
            Graph graph;
            Digraph digraph;
            vector<std::optional<string>> labels;
            size_t label_count = 0;
        };
    }

    auto parse_graph(std::istream & in) -> AnyGraph
    {
        std::optional<Builder> b;
        string raw;
        size_t line = 0;

        while (std::getline(in, raw)) {
            ++line;
            string_view text = trim(raw);
            if (text.empty() || text.front() == '#')
                continue;

            auto kind = text.front();
            if (text.size() > 1 && text[1] != ' ' && text[1] != '\t')
                throw ParseError("unknown line type '" + string(tokens(text).front()) + "'", line);

            if (kind == 'l') {
                if (! b)
                    throw ParseError("label before header", line);
                auto rest = trim(text.substr(1));
                auto space = rest.find_first_of(" \t");
                if (space == string_view::npos)
                    throw ParseError("label line needs a vertex and a label", line);
                auto v = number(rest.substr(0, space), "vertex index", line);
                auto label = trim(rest.substr(space));
                if (label.empty())
                    throw ParseError("label line needs a vertex and a label", line);
                if (v >= b->n)
                    throw ParseError("vertex index " + to_string(v) + " out of range for " + to_string(b->n) + " vertices", line);
                if (b->labels[v])
                    throw ParseError("vertex " + to_string(v) + " labelled twice", line);
                b->labels[v] = string(label);
                ++b->label_count;
                continue;
            }

            auto fields = tokens(strip_comment(text));
            if (kind == 'g' || kind == 'd') {
                if (b)
                    throw ParseError("duplicate header", line);
                if (fields.size() != 3)
                    throw ParseError("malformed header: expected '" + string(1, kind) + " <n> <m>'", line);
                b.emplace();
                b->directed = (kind == 'd');
                b->n = number(fields[1], "vertex count", line);
                b->m = number(fields[2], "edge count", line);
                if (b->directed)
                    b->digraph = Digraph(b->n);
                else
                    b->graph = Graph(b->n);
                b->labels.assign(b->n, std::nullopt);
                continue;
            }

            if (kind != 'e' && kind != 'a')
                throw ParseError("unknown line type '" + string(1, kind) + "'", line);
            if (! b)
                throw ParseError("edge before header", line);
            if ((kind == 'a') != b->directed)
                throw ParseError(kind == 'a' ? "arc line in an undirected graph" : "edge line in a digraph", line);
            if (fields.size() != 3)
                throw ParseError("malformed " + string(kind == 'e' ? "edge" : "arc") + " line: expected two vertex indices", line);
            auto u = number(fields[1], "vertex index", line);
            auto v = number(fields[2], "vertex index", line);
            if (u >= b->n || v >= b->n)
                throw ParseError("vertex index " + to_string(std::max(u, v)) + " out of range for " + to_string(b->n) + " vertices", line);
            if (u == v)
                throw ParseError("loop at vertex " + to_string(u), line);
            bool fresh = b->directed ? b->digraph.add_arc(u, v) : b->graph.add_edge(u, v);
            if (! fresh)
                throw ParseError(string(b->directed ? "duplicate arc " : "duplicate edge ") + to_string(u) + " " + to_string(v), line);
            if (++b->seen > b->m)
                throw ParseError("more " + string(b->directed ? "arcs" : "edges") + " than the " + to_string(b->m) + " declared", line);
        }

        if (! b)
            throw ParseError("missing header", line);
        if (b->seen != b->m)
            throw ParseError("header declares " + to_string(b->m) + (b->directed ? " arcs" : " edges") + ", found " + to_string(b->seen), line);
        if (b->label_count != 0 && b->label_count != b->n)
            throw ParseError("labels given for " + to_string(b->label_count) + " of " + to_string(b->n) + " vertices", line);

        if (b->label_count) {
            vector<string> labels;
            for (auto & l : b->labels)
                labels.push_back(*l);
            try {
                if (b->directed)
                    b->digraph.set_labels(std::move(labels));
                else
                    b->graph.set_labels(std::move(labels));
            }
            catch (const InvalidArgument & e) {
                throw ParseError(e.what(), line);
            }
        }
        if (b->directed)
            return std::move(b->digraph);
        return std::move(b->graph);
    }

    auto parse_graph_string(const string & text) -> AnyGraph
    {
        std::istringstream in(text);
        return parse_graph(in);
    }

    auto parse_graph_file(const std::filesystem::path & path) -> AnyGraph
    {
        std::ifstream in(path);
        if (! in)
            throw InvalidArgument("cannot open " + path.string());
        return parse_graph(in);
    }

    auto write_graph(std::ostream & out, const AnyGraph & any) -> void
    {
        if (auto g = std::get_if<Graph>(&any)) {
            out << "g " << g->order() << ' ' << g->edge_count() << '\n';
            if (g->has_labels())
                for (size_t v = 0; v < g->order(); ++v)
                    out << "l " << v << ' ' << g->labels()[v] << '\n';
            for (auto [u, v] : g->edges())
                out << "e " << u << ' ' << v << '\n';
        }
        else {
            auto & d = std::get<Digraph>(any);
            out << "d " << d.order() << ' ' << d.arc_count() << '\n';
            if (d.has_labels())
                for (size_t v = 0; v < d.order(); ++v)
                    out << "l " << v << ' ' << d.labels()[v] << '\n';
            for (auto [u, v] : d.arcs())
                out << "a " << u << ' ' << v << '\n';
        }
    }

    auto to_text(const AnyGraph & g) -> string
    {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
    }
}
