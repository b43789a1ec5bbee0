#ifndef UNIVCAT_GUARD_GADGET_HH
#define UNIVCAT_GUARD_GADGET_HH 1

#include <univcat/category.hh>
#include <univcat/graph.hh>
#include <univcat/hom.hh>

#include <cstddef>
#include <vector>

namespace univcat
{
    /**
     * An oriented cycle I with two designated vertices a and b.
     *
     * Vertices 0..L-1, arcs i -> i+1 for i < L-1 and a single reversed
     * closing arc 0 -> L-1. a = 0 and b = span, so the cycle carries a
     * directed a -> b path of length span. The orientation has exactly one
     * longest directed path, which forces every endomorphism to be the
     * identity; make_gadget checks this by enumeration anyway.
     */
    struct IndicatorGadget
    {
        Digraph cycle;
        int a = 0;
        int b = 0;
        int length = 0;
        int span = 0;
    };

    /// Throws BadParameter unless 3 <= length and 1 <= span <= length - 2,
    /// and NotRigid if the endomorphism check finds anything but the identity.
    auto make_gadget(int length, int span) -> IndicatorGadget;

    /// make_gadget(3(d+1), d+1), for d >= 1.
    auto indicator_for_depth(int d) -> IndicatorGadget;

    /**
     * base * gadget: every arc (u,v) of base replaced by a copy of the gadget
     * with a glued to u and b glued to v.
     *
     * Vertices 0..n-1 of the result are the base vertices. After them come,
     * for each base arc in lexicographic order, the copy's gadget vertices
     * other than a and b in increasing gadget order.
     */
    struct ReplacedDigraph
    {
        Digraph result;
        Digraph base;
        IndicatorGadget gadget;
        std::vector<Arc> base_arcs;
        /// base vertex -> result vertex (the identity under this numbering)
        std::vector<int> principal;
        /// copies[e][i] is the result vertex playing gadget vertex i in the
        /// copy replacing base_arcs[e]
        std::vector<std::vector<int>> copies;

        auto arc_index(int u, int v) const -> int;
    };

    /// Throws NotOriented if base has a loop or a pair of opposite arcs.
    auto star_replace(const Digraph & base, const IndicatorGadget & gadget) -> ReplacedDigraph;

    /// The homomorphism from.result -> to.result induced by g : from.base -> to.base.
    /// Throws NotAHom if g is not a homomorphism, BadParameter if the two
    /// replacements used different gadgets.
    auto lift_hom(const ReplacedDigraph & from, const ReplacedDigraph & to, const VertexMap & g) -> VertexMap;

    /// The g with lift_hom(g) == f. Throws NotInduced if f sends a base
    /// vertex outside the base, or is not the lift of what it does there.
    auto project_hom(const ReplacedDigraph & from, const ReplacedDigraph & to, const VertexMap & f) -> VertexMap;

    struct FullFaithfulReport
    {
        std::size_t base_homs = 0;
        std::size_t replaced_homs = 0;
        bool lift_injective = false;
        bool lifts_are_homs = false;
        bool all_project = false;
        bool truncated = false;
        bool bijection = false;
    };

    /// Compares Hom(G,H) with Hom(G*I, H*I), projecting every replaced-side
    /// map rather than trusting equal counts.
    auto verify_full_faithful_pair(const Digraph & g, const Digraph & h, const IndicatorGadget & gadget,
            const EnumLimit & limit = {}) -> FullFaithfulReport;

    struct ShortCycleReport
    {
        bool holds = true;
        std::size_t cycles_checked = 0;
        std::vector<std::vector<int>> offending;
    };

    /// Checks that every cycle of length at most L in the underlying graph of
    /// the result spans exactly the vertex set of one gadget copy.
    auto short_cycle_copies_check(const ReplacedDigraph & replaced) -> ShortCycleReport;

    /**
     * An injection of underlying(replaced.result) into Sub_d(K_m), where
     * m = |V(base)| + |A(base)|, for a gadget from indicator_for_depth(d).
     *
     * Base vertex u goes to clique vertex u; the e-th base arc (u,v) gets the
     * fresh clique vertex n + e and its copy is laid along the subdivided
     * triangle u, v, n + e. The result is validated before returning; a
     * failure throws EmbeddingFailed.
     */
    auto embed_in_subdivided_clique(const ReplacedDigraph & replaced) -> VertexMap;

    /// The object assignment G -> G * gadget on the images of a functor into
    /// digraphs, with each morphism image lifted.
    auto replacement_functor(const GraphFunctor & functor, const IndicatorGadget & gadget) -> GraphFunctor;
}

#endif
