#ifndef UNIVCAT_GUARD_GRAPH_HH
#define UNIVCAT_GUARD_GRAPH_HH 1

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace univcat
{
    /// An ordered pair (tail, head). For undirected edges the pair is stored
    /// with first < second.
    using Arc = std::pair<int, int>;

    /**
     * A finite directed graph on vertices 0..n-1 without parallel arcs.
     *
     * Loops are rejected unless the graph was created with loops allowed.
     * Adjacency lists are kept sorted, so every traversal the library does
     * is in ascending vertex order.
     */
    class Digraph
    {
        private:
            bool _loops_allowed;
            std::vector<std::vector<int>> _out, _in;
            std::size_t _arc_count = 0;

            auto check_vertex(int v) const -> void;

        public:
            explicit Digraph(int n = 0, bool loops_allowed = false);
            Digraph(int n, const std::vector<Arc> & arcs, bool loops_allowed = false);

            auto size() const -> int
            {
                return static_cast<int>(_out.size());
            }

            auto loops_allowed() const -> bool
            {
                return _loops_allowed;
            }

            auto arc_count() const -> std::size_t
            {
                return _arc_count;
            }

            auto add_vertex() -> int;

            /// Returns false if the arc was already present. Throws
            /// ConsistencyError on out of range endpoints or forbidden loops.
            auto add_arc(int u, int v) -> bool;

            auto has_arc(int u, int v) const -> bool;
            auto has_loop(int v) const -> bool;

            auto out_neighbours(int v) const -> const std::vector<int> &
            {
                return _out[v];
            }

            auto in_neighbours(int v) const -> const std::vector<int> &
            {
                return _in[v];
            }

            /// All arcs, lexicographically sorted.
            auto arcs() const -> std::vector<Arc>;

            /// No loops, and never both (u,v) and (v,u).
            auto is_oriented() const -> bool;

            auto operator== (const Digraph &) const -> bool = default;
    };

    /// A finite simple undirected graph on vertices 0..n-1.
    class Graph
    {
        private:
            std::vector<std::vector<int>> _adj;
            std::size_t _edge_count = 0;

            auto check_vertex(int v) const -> void;

        public:
            explicit Graph(int n = 0);
            Graph(int n, const std::vector<Arc> & edges);

            auto size() const -> int
            {
                return static_cast<int>(_adj.size());
            }

            auto edge_count() const -> std::size_t
            {
                return _edge_count;
            }

            auto add_vertex() -> int;
            auto add_edge(int u, int v) -> bool;
            auto has_edge(int u, int v) const -> bool;

            auto neighbours(int v) const -> const std::vector<int> &
            {
                return _adj[v];
            }

            auto degree(int v) const -> int
            {
                return static_cast<int>(_adj[v].size());
            }

            /// All edges as (u,v) with u < v, lexicographically sorted.
            auto edges() const -> std::vector<Arc>;

            auto operator== (const Graph &) const -> bool = default;
    };

    /// The symmetric digraph with both arcs for every edge.
    auto symmetric_digraph(const Graph & g) -> Digraph;

    /**
     * A total map between vertex sets. Whether it is a homomorphism or an
     * embedding is a property checked against a particular source and target
     * (see is_hom and is_embedding), not something the map carries.
     */
    class VertexMap
    {
        private:
            std::vector<int> _images;

        public:
            VertexMap() = default;
            explicit VertexMap(std::vector<int> images);

            static auto identity(int n) -> VertexMap;

            auto operator() (int v) const -> int
            {
                return _images[v];
            }

            auto size() const -> int
            {
                return static_cast<int>(_images.size());
            }

            auto images() const -> const std::vector<int> &
            {
                return _images;
            }

            auto is_injective() const -> bool;

            auto operator<=> (const VertexMap &) const = default;
    };

    /// outer after inner, i.e. v maps to outer(inner(v)).
    auto compose(const VertexMap & outer, const VertexMap & inner) -> VertexMap;

    auto is_hom(const Digraph & source, const Digraph & target, const VertexMap & map) -> bool;
    auto is_hom(const Graph & source, const Graph & target, const VertexMap & map) -> bool;
    auto is_embedding(const Graph & source, const Graph & target, const VertexMap & map) -> bool;
}

#endif
