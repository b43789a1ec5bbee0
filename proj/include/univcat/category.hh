#ifndef UNIVCAT_GUARD_CATEGORY_HH
#define UNIVCAT_GUARD_CATEGORY_HH 1

#include <univcat/graph.hh>
#include <univcat/hom.hh>

#include <string>
#include <vector>

namespace univcat
{
    struct Morphism
    {
        int dom = 0;
        int cod = 0;

        auto operator== (const Morphism &) const -> bool = default;
    };

    /**
     * A finite category given by its composition table.
     *
     * Composition convention, used by every file format too: for f : A -> B
     * and g : B -> C, comp[f][g] is the id of g after f. Entries for pairs
     * that are not composable are -1.
     */
    struct FinCategory
    {
        int objects = 0;
        std::vector<Morphism> morphisms;
        std::vector<int> identities;
        std::vector<std::vector<int>> comp;

        auto morphism_count() const -> int
        {
            return static_cast<int>(morphisms.size());
        }

        /// g after f.
        auto then(int f, int g) const -> int
        {
            return comp[f][g];
        }

        /// Morphism ids from a to b, ascending.
        auto hom_set(int a, int b) const -> std::vector<int>;

        auto operator== (const FinCategory &) const -> bool = default;
    };

    struct Verdict
    {
        bool ok = true;
        std::string witness;
    };

    /// Checks ranges, dom/cod typing of every table entry, totality on
    /// composable pairs, identity laws and associativity. The witness names
    /// the first violation found.
    auto validate_category(const FinCategory & category) -> Verdict;

    /// A weakly monotone map [dom] -> [cod], where [n] = {0, ..., n}.
    struct OrdinalMap
    {
        int dom = 0;
        int cod = 0;
        std::vector<int> values;

        auto operator() (int i) const -> int
        {
            return values[i];
        }

        auto operator<=> (const OrdinalMap &) const = default;
    };

    /// All weakly monotone maps [i] -> [j] in lexicographic order of values.
    auto delta_maps(int i, int j) -> std::vector<OrdinalMap>;

    /// Full subcategory of the simplicial category on [0], ..., [level].
    /// Morphisms are numbered by (dom, cod) and then lexicographically.
    struct SimplicialTruncation
    {
        int level = 0;
        FinCategory category;
        std::vector<OrdinalMap> maps;

        /// Throws BadParameter if the map is not a morphism of the truncation.
        auto morphism_id(const OrdinalMap & map) const -> int;
    };

    auto delta_truncation(int level) -> SimplicialTruncation;

    /// One-object category whose morphisms are the monoid elements, with
    /// "g after f" = g * f. Throws NotAMonoid (with witness) unless table is
    /// associative with two-sided identity `identity`.
    auto monoid_to_category(const std::vector<std::vector<int>> & table, int identity) -> FinCategory;

    /// An assignment of digraphs to objects and vertex maps to morphisms.
    struct GraphFunctor
    {
        FinCategory source;
        std::vector<Digraph> object_images;
        std::vector<VertexMap> morphism_images;
    };

    struct FunctorReport
    {
        bool functorial = false;
        bool faithful = false;
        bool full = false;
        bool truncated = false;
        std::string witness;
        /// Size of Hom(F(a), F(b)) for each pair of objects, row-major.
        std::vector<std::size_t> hom_counts;
    };

    /// Fullness compares each hom-set against hom_enumerate on the images.
    auto check_graph_functor(const GraphFunctor & functor, const EnumLimit & limit = {}) -> FunctorReport;

    /// [n] -> reflexive transitive tournament on n+1 vertices, monotone maps
    /// taken as vertex maps.
    auto rt_functor(const SimplicialTruncation & truncation) -> GraphFunctor;

    /// The full subcategory of digraphs on the given objects, with every
    /// homomorphism as a morphism, together with its inclusion functor.
    auto digraph_category(const std::vector<Digraph> & objects, const EnumLimit & limit = {}) -> GraphFunctor;
}

#endif
