#ifndef UNIVCAT_GUARD_REPRESENTATION_HH
#define UNIVCAT_GUARD_REPRESENTATION_HH 1

#include <univcat/category.hh>
#include <univcat/gadget.hh>
#include <univcat/graph.hh>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace univcat
{
    struct MonoidTable
    {
        int order = 0;
        std::vector<std::vector<int>> mul;
        int identity = 0;
    };

    /// Throws NotAMonoid with the failing element or triple.
    auto validate_monoid(const MonoidTable & monoid) -> void;

    /// Every monoid of order 1..max_order up to isomorphism, found by brute
    /// force over multiplication tables with identity 0.
    auto monoid_catalog(int max_order) -> std::vector<MonoidTable>;

    /// Least strictly increasing N_1 < N_2 < ... with N_i >= sizes[i].
    auto girth_separation(const std::vector<int> & sizes) -> std::vector<int>;

    /**
     * The coloured right action of a category on the morphisms into one object,
     * flattened to an oriented acyclic digraph.
     *
     * Elements are the morphisms g with codomain the object. For each element g
     * and each h with cod(h) = dom(g) there is an h-coloured arc g -> g.h,
     * realised as g -> p <- r <- g.h so that tail and head are told apart.
     * The colour sits on p as a pendant rigid cycle (root p, then the
     * single-reversed-arc orientation) of length 2k + 2(h + 1), where k is the
     * number of morphisms; colours therefore never map onto each other.
     */
    struct ActionGraph
    {
        struct ColouredArc
        {
            int element;
            int colour;
            int head;
            int p;
            int r;
            std::vector<int> tag;
        };

        Digraph graph;
        /// morphism id -> vertex, or -1 if the morphism is not an element here
        std::vector<int> element_vertex;
        std::vector<ColouredArc> arcs;
        std::map<std::pair<int, int>, int> arc_of;
    };

    auto action_graph(const FinCategory & category, int object) -> ActionGraph;

    /// The map between action graphs induced by post-composition with f.
    auto action_map(const FinCategory & category, const ActionGraph & from, const ActionGraph & to, int f) -> VertexMap;

    /// Sum over objects of |V(action graph)|.
    auto representation_size(const FinCategory & category) -> int;

    struct RepresentationOptions
    {
        int max_monoid_order = 4;
        int max_morphisms = 8;
    };

    struct RepresentationResult
    {
        /// per object: the action graph before replacement, and after
        std::vector<Digraph> bases;
        std::vector<Digraph> graphs;
        /// per monoid element or category morphism: its homomorphism
        std::vector<VertexMap> correspondence;
        int half_length = 0;
        int gadget_span = 1;
        bool verified = false;
        /// |End| for a monoid, or |Hom(G_a, G_b)| row-major for a category
        std::vector<std::size_t> hom_counts;
        std::vector<int> degeneracies;
        std::string certificate;
    };

    /**
     * A digraph whose endomorphism monoid is isomorphic to the given monoid:
     * the action graph of the one-object category, with every arc replaced by
     * make_gadget(2n, 1), n its vertex count.
     *
     * Verification enumerates all endomorphisms, checks they are exactly the
     * lifted left multiplications, and searches the k! bijections for a monoid
     * isomorphism. A failed check throws RepresentationFailed naming the
     * offending endomorphism. Throws SizeBound above options.max_monoid_order.
     */
    auto represent_monoid(const MonoidTable & monoid, const RepresentationOptions & options = {}) -> RepresentationResult;

    /// One digraph per object, with gadget make_gadget(2 * half_length, 1);
    /// half_length must be at least representation_size. Verified by
    /// check_graph_functor with exhaustive hom-sets.
    auto represent_category(const FinCategory & category, int half_length,
            const RepresentationOptions & options = {}) -> RepresentationResult;

    struct BatchRepresentation
    {
        std::vector<int> half_lengths;
        std::vector<RepresentationResult> results;
        /// no homomorphism between graphs of different categories
        bool cross_empty = true;
        std::size_t cross_pairs = 0;
    };

    /// Represents each category with half lengths from girth_separation over
    /// their sizes, then checks every cross-category pair is hom-free.
    auto represent_batch(const std::vector<FinCategory> & categories,
            const RepresentationOptions & options = {}) -> BatchRepresentation;

    auto discrete_category(int objects) -> FinCategory;
    /// Objects 0 and 1, identities 0 and 1, and one morphism 2 : 0 -> 1.
    auto arrow_category() -> FinCategory;
}

#endif
