#include <univcat/constructions.hh>
#include <univcat/errors.hh>
#include <univcat/gadget.hh>

#include <algorithm>
#include <set>
#include <string>

using namespace univcat;

using std::set;
using std::string;
using std::to_string;
using std::vector;

auto univcat::make_gadget(int length, int span) -> IndicatorGadget
{
    if (length < 3)
        throw Error(ErrorKind::BadParameter, "gadget length must be at least 3");
    if (span < 1 || span > length - 2)
        throw Error(ErrorKind::BadParameter, "gadget span must lie in 1.." + to_string(length - 2));

    IndicatorGadget gadget;
    gadget.cycle = Digraph(length);
    for (int i = 0 ; i + 1 < length ; ++i)
        gadget.cycle.add_arc(i, i + 1);
    gadget.cycle.add_arc(0, length - 1);
    gadget.a = 0;
    gadget.b = span;
    gadget.length = length;
    gadget.span = span;

    auto ends = endomorphisms(gadget.cycle);
    if (ends.maps.size() != 1 || ends.maps.front() != VertexMap::identity(length))
        throw Error(ErrorKind::NotRigid, "gadget of length " + to_string(length) + " has "
                + to_string(ends.maps.size()) + " endomorphisms");
    return gadget;
}

auto univcat::indicator_for_depth(int d) -> IndicatorGadget
{
    if (d < 1)
        throw Error(ErrorKind::BadParameter, "indicator depth must be at least 1");
    return make_gadget(3 * (d + 1), d + 1);
}

auto ReplacedDigraph::arc_index(int u, int v) const -> int
{
    auto it = std::lower_bound(base_arcs.begin(), base_arcs.end(), Arc{u, v});
    if (it == base_arcs.end() || *it != Arc{u, v})
        return -1;
    return static_cast<int>(it - base_arcs.begin());
}

auto univcat::star_replace(const Digraph & base, const IndicatorGadget & gadget) -> ReplacedDigraph
{
    if (! base.is_oriented())
        throw Error(ErrorKind::NotOriented, "arc replacement needs an oriented graph");

    ReplacedDigraph r;
    r.base = base;
    r.gadget = gadget;
    r.base_arcs = base.arcs();
    r.result = Digraph(base.size());
    for (int v = 0 ; v < base.size() ; ++v)
        r.principal.push_back(v);

    for (auto & [u, v] : r.base_arcs) {
        vector<int> copy(gadget.length);
        for (int i = 0 ; i < gadget.length ; ++i) {
            if (i == gadget.a)
                copy[i] = u;
            else if (i == gadget.b)
                copy[i] = v;
            else
                copy[i] = r.result.add_vertex();
        }
        for (auto & [x, y] : gadget.cycle.arcs())
            r.result.add_arc(copy[x], copy[y]);
        r.copies.push_back(std::move(copy));
    }
    return r;
}

namespace
{
    auto same_gadget(const IndicatorGadget & x, const IndicatorGadget & y) -> bool
    {
        return x.length == y.length && x.span == y.span && x.a == y.a && x.b == y.b;
    }
}

auto univcat::lift_hom(const ReplacedDigraph & from, const ReplacedDigraph & to, const VertexMap & g) -> VertexMap
{
    if (! same_gadget(from.gadget, to.gadget))
        throw Error(ErrorKind::BadParameter, "replacements use different gadgets");
    if (! is_hom(from.base, to.base, g))
        throw Error(ErrorKind::NotAHom, "only homomorphisms of the base graphs lift");

    vector<int> images(from.result.size(), -1);
    for (int u = 0 ; u < from.base.size() ; ++u)
        images[from.principal[u]] = to.principal[g(u)];

    for (std::size_t e = 0 ; e < from.base_arcs.size() ; ++e) {
        auto [u, v] = from.base_arcs[e];
        int target_arc = to.arc_index(g(u), g(v));
        for (int i = 0 ; i < from.gadget.length ; ++i)
            images[from.copies[e][i]] = to.copies[target_arc][i];
    }
    return VertexMap{std::move(images)};
}

auto univcat::project_hom(const ReplacedDigraph & from, const ReplacedDigraph & to, const VertexMap & f) -> VertexMap
{
    if (f.size() != from.result.size())
        throw Error(ErrorKind::NotInduced, "map does not have the replaced graph as its domain");

    vector<int> images(from.base.size());
    for (int u = 0 ; u < from.base.size() ; ++u) {
        int w = f(from.principal[u]);
        auto it = std::find(to.principal.begin(), to.principal.end(), w);
        if (it == to.principal.end())
            throw Error(ErrorKind::NotInduced, "base vertex " + to_string(u) + " is sent to a non-principal vertex");
        images[u] = static_cast<int>(it - to.principal.begin());
    }

    VertexMap g{std::move(images)};
    if (! same_gadget(from.gadget, to.gadget) || ! is_hom(from.base, to.base, g) || lift_hom(from, to, g) != f)
        throw Error(ErrorKind::NotInduced, "map is not the lift of its projection");
    return g;
}

auto univcat::verify_full_faithful_pair(const Digraph & g, const Digraph & h, const IndicatorGadget & gadget,
        const EnumLimit & limit) -> FullFaithfulReport
{
    FullFaithfulReport report;
    auto rg = star_replace(g, gadget);
    auto rh = star_replace(h, gadget);

    auto base = hom_enumerate(g, h, {}, limit);
    auto replaced = hom_enumerate(rg.result, rh.result, {}, limit);
    report.base_homs = base.maps.size();
    report.replaced_homs = replaced.maps.size();
    report.truncated = base.truncated || replaced.truncated;

    set<VertexMap> lifts;
    report.lifts_are_homs = true;
    for (auto & m : base.maps) {
        auto lifted = lift_hom(rg, rh, m);
        if (! is_hom(rg.result, rh.result, lifted))
            report.lifts_are_homs = false;
        lifts.insert(std::move(lifted));
    }
    report.lift_injective = lifts.size() == base.maps.size();

    report.all_project = true;
    for (auto & f : replaced.maps) {
        try {
            project_hom(rg, rh, f);
        }
        catch (const Error &) {
            report.all_project = false;
            break;
        }
    }

    report.bijection = ! report.truncated && report.base_homs == report.replaced_homs
        && report.lift_injective && report.lifts_are_homs && report.all_project;
    return report;
}

auto univcat::short_cycle_copies_check(const ReplacedDigraph & replaced) -> ShortCycleReport
{
    ShortCycleReport report;

    set<vector<int>> copy_sets;
    for (auto & copy : replaced.copies) {
        auto sorted = copy;
        std::sort(sorted.begin(), sorted.end());
        copy_sets.insert(std::move(sorted));
    }

    auto cycles = cycles_upto(underlying(replaced.result), replaced.gadget.length);
    report.cycles_checked = cycles.size();
    for (auto & cycle : cycles) {
        auto sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (! copy_sets.contains(sorted)) {
            report.holds = false;
            report.offending.push_back(cycle);
        }
    }
    return report;
}

auto univcat::embed_in_subdivided_clique(const ReplacedDigraph & replaced) -> VertexMap
{
    const auto & gadget = replaced.gadget;
    int d = gadget.span - 1;
    if (d < 1 || gadget.length != 3 * (d + 1))
        throw Error(ErrorKind::EmbeddingFailed, "gadget was not built by indicator_for_depth");

    int n = replaced.base.size();
    int m = n + static_cast<int>(replaced.base_arcs.size());
    auto clique = complete_graph(std::max(m, 1));
    auto clique_edges = clique.edges();
    auto host = subdivide(clique, d);

    // vertex at distance `step` (0..d+1) along the subdivided edge from x to y
    auto along = [&] (int x, int y, int step) -> int {
        if (0 == step)
            return x;
        if (d + 1 == step)
            return y;
        auto edge = Arc{std::min(x, y), std::max(x, y)};
        int e = static_cast<int>(std::lower_bound(clique_edges.begin(), clique_edges.end(), edge) - clique_edges.begin());
        return subdivision_vertex(m, d, e, x < y ? step : d + 1 - step);
    };

    vector<int> images(replaced.result.size(), -1);
    for (int u = 0 ; u < n ; ++u)
        images[replaced.principal[u]] = u;

    int side = d + 1;
    for (std::size_t e = 0 ; e < replaced.base_arcs.size() ; ++e) {
        auto [u, v] = replaced.base_arcs[e];
        int w = n + static_cast<int>(e);
        for (int i = 0 ; i < gadget.length ; ++i) {
            int image;
            if (i <= side)
                image = along(u, v, i);
            else if (i <= 2 * side)
                image = along(v, w, i - side);
            else
                image = along(w, u, i - 2 * side);
            images[replaced.copies[e][i]] = image;
        }
    }

    VertexMap result{std::move(images)};
    if (! is_embedding(underlying(replaced.result), host, result))
        throw Error(ErrorKind::EmbeddingFailed, "constructed map is not an injective edge-preserving map");
    return result;
}

auto univcat::replacement_functor(const GraphFunctor & functor, const IndicatorGadget & gadget) -> GraphFunctor
{
    vector<ReplacedDigraph> replaced;
    for (auto & g : functor.object_images)
        replaced.push_back(star_replace(g, gadget));

    GraphFunctor result;
    result.source = functor.source;
    for (auto & r : replaced)
        result.object_images.push_back(r.result);
    for (int f = 0 ; f < functor.source.morphism_count() ; ++f) {
        auto [dom, cod] = functor.source.morphisms[f];
        result.morphism_images.push_back(lift_hom(replaced[dom], replaced[cod], functor.morphism_images[f]));
    }
    return result;
}
