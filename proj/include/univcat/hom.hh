#ifndef UNIVCAT_GUARD_HOM_HH
#define UNIVCAT_GUARD_HOM_HH 1

#include <univcat/graph.hh>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace univcat
{
    /// Caps on an enumeration. Hitting either cap marks the result truncated.
    struct EnumLimit
    {
        std::optional<std::size_t> max_results;
        std::optional<std::uint64_t> max_steps;

        /// fallback with max_steps replaced by UNIVCAT_MAX_STEPS, if that is
        /// set to a positive integer.
        static auto from_environment(EnumLimit fallback = {}) -> EnumLimit;
    };

    /// (pattern vertex, target vertex) assignments the search must extend.
    using Pins = std::vector<std::pair<int, int>>;

    struct Enumeration
    {
        std::vector<VertexMap> maps;
        bool truncated = false;
        bool step_limit_hit = false;
        std::uint64_t steps = 0;
    };

    /**
     * All homomorphisms pattern -> target extending the pins, sorted
     * lexicographically by image vector.
     *
     * Backtracking with forward checking: assigning u to t restricts every
     * unassigned neighbour of u to the matching neighbourhood of t. The next
     * variable is the one with fewest candidates, ties by index. Candidates
     * are also filtered by loops and by longest directed walks in and out,
     * both of which a homomorphism can only lengthen.
     *
     * Throws PinOutOfRange if a pin names a vertex that does not exist.
     */
    auto hom_enumerate(const Digraph & pattern, const Digraph & target,
            const Pins & pins = {}, const EnumLimit & limit = {}) -> Enumeration;

    /// As hom_enumerate, but only injective maps.
    auto injective_hom_enumerate(const Digraph & pattern, const Digraph & target,
            const Pins & pins = {}, const EnumLimit & limit = {}) -> Enumeration;

    /// True iff some homomorphism extends the pins. Only max_steps of the limit
    /// applies; exceeding it throws SizeBound rather than guessing.
    auto hom_exists(const Digraph & pattern, const Digraph & target,
            const Pins & pins = {}, const EnumLimit & limit = {}) -> bool;

    struct Endomorphisms
    {
        std::vector<VertexMap> maps;
        /// composition[i][j] is the index of maps[i] after maps[j], or -1 if
        /// the enumeration was truncated and the composite is missing.
        std::vector<std::vector<int>> composition;
        int identity = -1;
        bool truncated = false;
    };

    auto endomorphisms(const Digraph & g, const EnumLimit & limit = {}) -> Endomorphisms;

    /// Injective edge-preserving maps pattern -> host (ordinary subgraph, not
    /// induced subgraph), in canonical order.
    auto subgraph_embeddings(const Graph & pattern, const Graph & host, const EnumLimit & limit = {}) -> Enumeration;
}

#endif
