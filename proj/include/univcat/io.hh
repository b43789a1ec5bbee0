#ifndef UNIVCAT_GUARD_IO_HH
#define UNIVCAT_GUARD_IO_HH 1

#include <univcat/category.hh>
#include <univcat/gadget.hh>
#include <univcat/graph.hh>
#include <univcat/representation.hh>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace univcat
{
    using AnyGraph = std::variant<Graph, Digraph>;

    /**
     * Graph text format, one record per line, '#' starts a comment:
     *
     *     D n m     (digraph)   U n m (graph)   DL n m (digraph, loops allowed)
     *     u v       m times, 0 <= u, v < n
     *
     * Malformed records throw ParseError with the line number; out of range
     * vertices, duplicates and forbidden loops throw ConsistencyError.
     */
    auto parse_graph(std::istream & in, const std::string & source_name = "<input>") -> AnyGraph;
    auto parse_graph_file(const std::filesystem::path & path) -> AnyGraph;

    /// Arc or edge lines sorted ascending, so equal graphs serialise identically.
    auto serialize_graph(const AnyGraph & g) -> std::string;
    auto write_text_file(const std::filesystem::path & path, const std::string & text) -> void;

    struct DotOptions
    {
        std::string name = "G";
        std::vector<int> highlight;
    };

    auto to_dot(const AnyGraph & g, const DotOptions & options = {}) -> std::string;

    /// Provenance sidecar for a replaced digraph: gadget parameters, one
    /// `principal <base vertex> <result vertex>` line per base vertex, and
    /// `copy <arc index> <v0> ... <v_{L-1}>` per base arc.
    auto serialize_provenance(const ReplacedDigraph & replaced) -> std::string;

    /// The principal vertices named by a provenance sidecar.
    auto parse_provenance_principals(std::istream & in) -> std::vector<int>;

    /**
     * Category format:
     *
     *     cat t k
     *     mor <id> <dom> <cod>       k times
     *     id <object> <morphism id>  t times
     *     comp <f> <g> <h>           for every composable pair: h = g after f
     */
    auto parse_category(std::istream & in) -> FinCategory;
    auto serialize_category(const FinCategory & category) -> std::string;

    /**
     * Functor format, graph paths relative to the functor file:
     *
     *     source delta <level>        or   source category <category file>
     *     obj <object> <graph file>
     *     mor <id> <v0> <v1> ...
     */
    auto parse_functor_file(const std::filesystem::path & path) -> GraphFunctor;

    /// Writes functor.txt plus one obj<i>.txt per object into directory.
    auto write_functor_directory(const std::filesystem::path & directory, const GraphFunctor & functor,
            const std::string & source_line) -> void;

    /// `monoid k e` then k rows of k entries.
    auto parse_monoid(std::istream & in) -> MonoidTable;
    auto serialize_monoid(const MonoidTable & monoid) -> std::string;
}

#endif
