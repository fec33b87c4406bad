#ifndef DICHROMA_IO_HPP
#define DICHROMA_IO_HPP

#include <dichroma/products.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace dichroma
{
    /// Text format:
    ///   g <n> <m>   or   d <n> <m>      header, exactly once, first
    ///   e <u> <v>                       edge (graphs), 0-based
    ///   a <u> <v>                       arc (digraphs), 0-based
    ///   l <v> <label>                   label: the rest of the line
    ///   # ...                           comment; also ends e/a/header lines
    /// Labels are all-or-nothing. Every error is a ParseError carrying the
    /// line number.
    auto parse_graph(std::istream & in) -> AnyGraph;
    auto parse_graph_string(const std::string & text) -> AnyGraph;
    auto parse_graph_file(const std::filesystem::path & path) -> AnyGraph;

    /// Header, then labels, then edges/arcs in sorted order.
    auto write_graph(std::ostream & out, const AnyGraph & g) -> void;
    auto to_text(const AnyGraph & g) -> std::string;
}

#endif
