#ifndef UNIVCAT_GUARD_CONSTRUCTIONS_HH
#define UNIVCAT_GUARD_CONSTRUCTIONS_HH 1

#include <univcat/graph.hh>

#include <variant>
#include <vector>

namespace univcat
{
    /**
     * Replace every edge by a path with p internal vertices. Original vertices
     * keep their indices; the internal vertices of the e-th edge {u,v}
     * (u < v, edges in lexicographic order) are n + e*p .. n + e*p + p - 1,
     * running from u towards v.
     */
    auto subdivide(const Graph & g, int p) -> Graph;

    /// Index of the position-th internal vertex (1-based, counted from the
    /// smaller endpoint) of edge_index in subdivide(g, p), where g has n vertices.
    auto subdivision_vertex(int n, int p, int edge_index, int position) -> int;

    /// Same vertices, an edge wherever there is an arc either way, loops dropped.
    auto underlying(const Digraph & d) -> Graph;

    /// Every simple cycle of length between 3 and max_length, each reported
    /// once as its lexicographically least rotation or reflection, in
    /// lexicographic order.
    auto cycles_upto(const Graph & g, int max_length) -> std::vector<std::vector<int>>;

    struct Degeneracy
    {
        int value = 0;
        std::vector<int> elimination_order;
    };

    /// Repeatedly removes a vertex of minimum remaining degree (lowest index on
    /// ties). Throws EmptyGraph on zero vertices.
    auto degeneracy(const Graph & g) -> Degeneracy;

    auto complete_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto directed_cycle(int n) -> Digraph;
    /// n vertices, arcs i -> i+1.
    auto directed_path(int n) -> Digraph;
    /// Arcs (i,j) for all i <= j, loops included.
    auto reflexive_transitive_tournament(int n) -> Digraph;

    enum class StandardKind
    {
        Complete,
        Cycle,
        DirectedCycle,
        DirectedPath,
        ReflexiveTransitiveTournament
    };

    /// Throws BadParameter when n is out of range for the kind.
    auto make_standard(StandardKind kind, int n) -> std::variant<Graph, Digraph>;

    /// A canonical form for small digraphs: the lexicographically least arc
    /// list over all vertex relabellings. Exponential; meant for n <= 7.
    auto small_canonical_form(const Digraph & d) -> std::vector<Arc>;

    /// All oriented graphs with 1..max_vertices vertices, one per isomorphism
    /// class, ordered by (vertex count, arc count, canonical arc list) and
    /// returned in canonical labelling.
    auto oriented_catalog(int max_vertices) -> std::vector<Digraph>;
}

#endif
