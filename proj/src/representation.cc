#include <univcat/constructions.hh>
#include <univcat/errors.hh>
#include <univcat/representation.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

using namespace univcat;

using std::pair;
using std::set;
using std::size_t;
using std::string;
using std::stringstream;
using std::to_string;
using std::vector;

auto univcat::validate_monoid(const MonoidTable & monoid) -> void
{
    if (static_cast<int>(monoid.mul.size()) != monoid.order)
        throw Error(ErrorKind::NotAMonoid, "table has " + to_string(monoid.mul.size()) + " rows, expected " + to_string(monoid.order));
    monoid_to_category(monoid.mul, monoid.identity);
}

namespace
{
    auto is_associative(const vector<vector<int>> & mul) -> bool
    {
        int k = static_cast<int>(mul.size());
        for (int x = 0 ; x < k ; ++x)
            for (int y = 0 ; y < k ; ++y)
                for (int z = 0 ; z < k ; ++z)
                    if (mul[mul[x][y]][z] != mul[x][mul[y][z]])
                        return false;
        return true;
    }

    // least relabelling of the table over permutations fixing the identity 0
    auto canonical_table(const vector<vector<int>> & mul) -> vector<vector<int>>
    {
        int k = static_cast<int>(mul.size());
        vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        vector<vector<int>> best;
        do {
            vector<vector<int>> relabelled(k, vector<int>(k));
            for (int x = 0 ; x < k ; ++x)
                for (int y = 0 ; y < k ; ++y)
                    relabelled[perm[x]][perm[y]] = perm[mul[x][y]];
            if (best.empty() || relabelled < best)
                best = std::move(relabelled);
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
        return best;
    }
}

auto univcat::monoid_catalog(int max_order) -> vector<MonoidTable>
{
    vector<MonoidTable> result;
    for (int k = 1 ; k <= max_order ; ++k) {
        vector<pair<int, int>> free_cells;
        for (int x = 1 ; x < k ; ++x)
            for (int y = 1 ; y < k ; ++y)
                free_cells.emplace_back(x, y);

        vector<vector<int>> mul(k, vector<int>(k));
        for (int x = 0 ; x < k ; ++x) {
            mul[0][x] = x;
            mul[x][0] = x;
        }

        set<vector<vector<int>>> seen;
        vector<int> digits(free_cells.size(), 0);
        while (true) {
            for (size_t i = 0 ; i < free_cells.size() ; ++i)
                mul[free_cells[i].first][free_cells[i].second] = digits[i];
            if (is_associative(mul))
                seen.insert(canonical_table(mul));

            size_t pos = 0;
            while (pos < digits.size() && digits[pos] == k - 1)
                digits[pos++] = 0;
            if (pos == digits.size())
                break;
            ++digits[pos];
        }

        for (auto & table : seen)
            result.push_back(MonoidTable{k, table, 0});
    }
    return result;
}

auto univcat::girth_separation(const vector<int> & sizes) -> vector<int>
{
    if (sizes.empty())
        throw Error(ErrorKind::BadParameter, "girth separation needs at least one size");
    vector<int> result;
    for (int size : sizes) {
        if (size < 1)
            throw Error(ErrorKind::BadParameter, "sizes must be positive");
        result.push_back(result.empty() ? size : std::max(size, result.back() + 1));
    }
    return result;
}

auto univcat::action_graph(const FinCategory & category, int object) -> ActionGraph
{
    ActionGraph result;
    int k = category.morphism_count();
    result.element_vertex.assign(k, -1);

    vector<int> elements;
    for (int g = 0 ; g < k ; ++g)
        if (category.morphisms[g].cod == object) {
            result.element_vertex[g] = result.graph.add_vertex();
            elements.push_back(g);
        }

    for (int g : elements)
        for (int h = 0 ; h < k ; ++h) {
            if (category.morphisms[h].cod != category.morphisms[g].dom)
                continue;

            ActionGraph::ColouredArc arc;
            arc.element = g;
            arc.colour = h;
            arc.head = category.then(h, g);
            arc.p = result.graph.add_vertex();
            arc.r = result.graph.add_vertex();
            int tag_length = 2 * k + 2 * (h + 1);
            for (int i = 1 ; i < tag_length ; ++i)
                arc.tag.push_back(result.graph.add_vertex());

            auto & d = result.graph;
            d.add_arc(result.element_vertex[g], arc.p);
            d.add_arc(result.element_vertex[arc.head], arc.r);
            d.add_arc(arc.r, arc.p);
            d.add_arc(arc.p, arc.tag.front());
            for (size_t i = 0 ; i + 1 < arc.tag.size() ; ++i)
                d.add_arc(arc.tag[i], arc.tag[i + 1]);
            d.add_arc(arc.p, arc.tag.back());

            result.arc_of.emplace(pair{g, h}, static_cast<int>(result.arcs.size()));
            result.arcs.push_back(std::move(arc));
        }
    return result;
}

auto univcat::action_map(const FinCategory & category, const ActionGraph & from, const ActionGraph & to, int f) -> VertexMap
{
    vector<int> images(from.graph.size(), -1);
    for (int g = 0 ; g < category.morphism_count() ; ++g)
        if (from.element_vertex[g] != -1)
            images[from.element_vertex[g]] = to.element_vertex.at(category.then(g, f));

    for (auto & arc : from.arcs) {
        auto & image = to.arcs.at(to.arc_of.at(pair{category.then(arc.element, f), arc.colour}));
        images[arc.p] = image.p;
        images[arc.r] = image.r;
        for (size_t i = 0 ; i < arc.tag.size() ; ++i)
            images[arc.tag[i]] = image.tag[i];
    }
    return VertexMap{std::move(images)};
}

auto univcat::representation_size(const FinCategory & category) -> int
{
    int total = 0;
    for (int a = 0 ; a < category.objects ; ++a)
        total += action_graph(category, a).graph.size();
    return total;
}

namespace
{
    struct Built
    {
        RepresentationResult result;
        GraphFunctor functor;
    };

    auto build(const FinCategory & category, int half_length) -> Built
    {
        Built built;
        auto & result = built.result;
        result.half_length = half_length;
        result.gadget_span = 1;

        auto gadget = make_gadget(2 * half_length, 1);
        vector<ActionGraph> actions;
        vector<ReplacedDigraph> replaced;
        for (int a = 0 ; a < category.objects ; ++a) {
            actions.push_back(action_graph(category, a));
            replaced.push_back(star_replace(actions.back().graph, gadget));
            result.bases.push_back(actions.back().graph);
            result.graphs.push_back(replaced.back().result);
            result.degeneracies.push_back(result.graphs.back().size() > 0 ? degeneracy(underlying(result.graphs.back())).value : 0);
        }

        for (int f = 0 ; f < category.morphism_count() ; ++f) {
            auto [dom, cod] = category.morphisms[f];
            auto base_map = action_map(category, actions[dom], actions[cod], f);
            result.correspondence.push_back(lift_hom(replaced[dom], replaced[cod], base_map));
        }

        built.functor = GraphFunctor{category, result.graphs, result.correspondence};
        return built;
    }

    auto describe_map(const VertexMap & m) -> string
    {
        stringstream s;
        s << "[";
        for (int v = 0 ; v < m.size() && v < 16 ; ++v)
            s << (v ? " " : "") << m(v);
        if (m.size() > 16)
            s << " ... (" << m.size() << " vertices)";
        s << "]";
        return s.str();
    }
}

auto univcat::represent_monoid(const MonoidTable & monoid, const RepresentationOptions & options) -> RepresentationResult
{
    validate_monoid(monoid);
    if (monoid.order > options.max_monoid_order)
        throw Error(ErrorKind::SizeBound, "monoid order " + to_string(monoid.order) + " exceeds the bound "
                + to_string(options.max_monoid_order));

    auto category = monoid_to_category(monoid.mul, monoid.identity);
    auto built = build(category, representation_size(category));
    auto & result = built.result;
    int k = monoid.order;

    auto ends = endomorphisms(result.graphs.front());
    result.hom_counts = {ends.maps.size()};

    set<VertexMap> expected(result.correspondence.begin(), result.correspondence.end());
    for (auto & m : ends.maps)
        if (! expected.contains(m))
            throw Error(ErrorKind::RepresentationFailed, "endomorphism " + describe_map(m) + " is not a lifted left multiplication");
    if (ends.truncated || static_cast<int>(ends.maps.size()) != k || static_cast<int>(expected.size()) != k)
        throw Error(ErrorKind::RepresentationFailed, "found " + to_string(ends.maps.size()) + " endomorphisms for a monoid of order " + to_string(k));

    // search the k! bijections element -> endomorphism index for a monoid isomorphism
    vector<int> beta(k);
    std::iota(beta.begin(), beta.end(), 0);
    bool found = false;
    do {
        bool ok = true;
        for (int x = 0 ; x < k && ok ; ++x)
            for (int y = 0 ; y < k && ok ; ++y)
                ok = ends.composition[beta[x]][beta[y]] == beta[monoid.mul[x][y]];
        found = ok;
    } while (! found && std::next_permutation(beta.begin(), beta.end()));

    if (! found)
        throw Error(ErrorKind::RepresentationFailed, "endomorphism monoid is not isomorphic to the input");

    result.verified = true;
    stringstream s;
    s << "monoid order " << k << ", base vertices " << result.bases.front().size()
        << ", gadget length " << 2 * result.half_length << " span 1, graph vertices " << result.graphs.front().size()
        << ", endomorphisms " << ends.maps.size() << ", isomorphism element->End";
    for (int x = 0 ; x < k ; ++x)
        s << " " << x << ":" << beta[x];
    result.certificate = s.str();
    return result;
}

auto univcat::represent_category(const FinCategory & category, int half_length, const RepresentationOptions & options) -> RepresentationResult
{
    if (auto verdict = validate_category(category) ; ! verdict.ok)
        throw Error(ErrorKind::BadParameter, "not a category: " + verdict.witness);
    if (category.morphism_count() > options.max_morphisms)
        throw Error(ErrorKind::SizeBound, "category has " + to_string(category.morphism_count()) + " morphisms, bound is "
                + to_string(options.max_morphisms));
    if (half_length < representation_size(category))
        throw Error(ErrorKind::BadParameter, "half length " + to_string(half_length) + " is below the category's size "
                + to_string(representation_size(category)));

    auto built = build(category, half_length);
    auto & result = built.result;

    auto report = check_graph_functor(built.functor);
    result.hom_counts = report.hom_counts;
    if (! report.functorial || ! report.faithful || ! report.full || report.truncated)
        throw Error(ErrorKind::RepresentationFailed, "represented functor check failed: " + report.witness);

    result.verified = true;
    stringstream s;
    s << "objects " << category.objects << ", morphisms " << category.morphism_count()
        << ", gadget length " << 2 * half_length << " span 1, functorial faithful full, hom counts";
    for (auto c : report.hom_counts)
        s << " " << c;
    result.certificate = s.str();
    return result;
}

auto univcat::represent_batch(const vector<FinCategory> & categories, const RepresentationOptions & options) -> BatchRepresentation
{
    BatchRepresentation batch;
    if (categories.empty())
        return batch;

    vector<int> sizes;
    for (auto & c : categories)
        sizes.push_back(representation_size(c));
    batch.half_lengths = girth_separation(sizes);

    for (size_t i = 0 ; i < categories.size() ; ++i)
        batch.results.push_back(represent_category(categories[i], batch.half_lengths[i], options));

    for (size_t i = 0 ; i < categories.size() ; ++i)
        for (size_t j = 0 ; j < categories.size() ; ++j) {
            if (i == j)
                continue;
            for (auto & from : batch.results[i].graphs)
                for (auto & to : batch.results[j].graphs) {
                    ++batch.cross_pairs;
                    if (hom_exists(from, to))
                        batch.cross_empty = false;
                }
        }
    return batch;
}

auto univcat::discrete_category(int objects) -> FinCategory
{
    FinCategory c;
    c.objects = objects;
    for (int a = 0 ; a < objects ; ++a) {
        c.morphisms.push_back(Morphism{a, a});
        c.identities.push_back(a);
    }
    c.comp.assign(objects, vector<int>(objects, -1));
    for (int a = 0 ; a < objects ; ++a)
        c.comp[a][a] = a;
    return c;
}

auto univcat::arrow_category() -> FinCategory
{
    FinCategory c;
    c.objects = 2;
    c.morphisms = {Morphism{0, 0}, Morphism{1, 1}, Morphism{0, 1}};
    c.identities = {0, 1};
    c.comp = {
        {0, -1, 2},
        {-1, 1, -1},
        {-1, 2, -1}
    };
    return c;
}
