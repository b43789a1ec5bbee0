#ifndef UNIVCAT_GUARD_DENSITY_HH
#define UNIVCAT_GUARD_DENSITY_HH 1

#include <univcat/graph.hh>
#include <univcat/hom.hh>

#include <optional>
#include <vector>

namespace univcat
{
    struct CliqueSearch
    {
        std::optional<VertexMap> embedding;
        bool truncated = false;
    };

    /// An embedding of Sub_p(K_N) into g as a subgraph, if one exists.
    /// Throws BadParameter for p < 0 or N < 2.
    auto find_subdivided_clique(const Graph & g, int p, int clique_size, const EnumLimit & limit = {}) -> CliqueSearch;

    struct DensityCell
    {
        /// Largest N <= N_max found, or nothing.
        std::optional<int> clique_size;
        /// Depth q of the witness (q = p unless searching with upto).
        int depth = 0;
        /// Index into the sample of the graph carrying the witness.
        int member = -1;
        std::optional<VertexMap> witness;
        bool truncated = false;
    };

    /**
     * Largest subdivided cliques found in a finite sample of graphs.
     *
     * This is evidence about the sample only. Whether a class is nowhere dense
     * is a statement about all of its members and no table of this kind
     * settles it.
     */
    struct DensityProfile
    {
        int p_max = 0;
        int n_max = 0;
        bool upto = false;
        std::vector<DensityCell> table;
    };

    /// Per depth p, tries N = n_max down to 2 and keeps the first hit. With
    /// upto, a hit at any depth q <= p counts for p.
    auto density_profile(const std::vector<Graph> & sample, int p_max, int n_max, bool upto = false,
            const EnumLimit & limit = {}) -> DensityProfile;

    /// Checks every recorded witness against its subdivided clique, and that
    /// smaller cliques at the same depth are found too.
    auto profile_is_consistent(const std::vector<Graph> & sample, const DensityProfile & profile,
            const EnumLimit & limit = {}) -> bool;

    struct ReplacedClassProfile
    {
        std::vector<Graph> members;
        std::vector<int> degeneracies;
        DensityProfile profile;
    };

    /// Profiles the underlying graphs of base * indicator_for_depth(d) over the
    /// given bases, with the degeneracy of each member.
    auto replaced_class_profile(const std::vector<Digraph> & bases, int d, int p_max, int n_max,
            const EnumLimit & limit = {}) -> ReplacedClassProfile;
}

#endif
