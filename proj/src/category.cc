#include <univcat/category.hh>
#include <univcat/constructions.hh>
#include <univcat/errors.hh>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

using namespace univcat;

using std::map;
using std::set;
using std::string;
using std::to_string;
using std::tuple;
using std::vector;

auto FinCategory::hom_set(int a, int b) const -> vector<int>
{
    vector<int> result;
    for (int f = 0 ; f < morphism_count() ; ++f)
        if (morphisms[f].dom == a && morphisms[f].cod == b)
            result.push_back(f);
    return result;
}

auto univcat::validate_category(const FinCategory & c) -> Verdict
{
    auto fail = [] (string why) { return Verdict{false, std::move(why)}; };
    int k = c.morphism_count();

    if (c.objects < 0)
        return fail("negative object count");
    for (int f = 0 ; f < k ; ++f) {
        auto [dom, cod] = c.morphisms[f];
        if (dom < 0 || dom >= c.objects || cod < 0 || cod >= c.objects)
            return fail("morphism " + to_string(f) + " has an endpoint out of range");
    }

    if (static_cast<int>(c.identities.size()) != c.objects)
        return fail("expected one identity per object");
    for (int a = 0 ; a < c.objects ; ++a) {
        int i = c.identities[a];
        if (i < 0 || i >= k || c.morphisms[i] != Morphism{a, a})
            return fail("identity of object " + to_string(a) + " is not an endomorphism of it");
    }

    if (static_cast<int>(c.comp.size()) != k)
        return fail("composition table has the wrong number of rows");
    for (int f = 0 ; f < k ; ++f)
        if (static_cast<int>(c.comp[f].size()) != k)
            return fail("composition row " + to_string(f) + " has the wrong length");

    for (int f = 0 ; f < k ; ++f)
        for (int g = 0 ; g < k ; ++g) {
            int h = c.comp[f][g];
            string pair = "(" + to_string(f) + "," + to_string(g) + ")";
            if (c.morphisms[f].cod != c.morphisms[g].dom) {
                if (h != -1)
                    return fail("non-composable pair " + pair + " has a composite");
                continue;
            }
            if (h < 0 || h >= k)
                return fail("composable pair " + pair + " has no composite");
            if (c.morphisms[h] != Morphism{c.morphisms[f].dom, c.morphisms[g].cod})
                return fail("composite of " + pair + " has the wrong domain or codomain");
        }

    for (int f = 0 ; f < k ; ++f) {
        if (c.comp[c.identities[c.morphisms[f].dom]][f] != f)
            return fail("left identity law fails for " + to_string(f));
        if (c.comp[f][c.identities[c.morphisms[f].cod]] != f)
            return fail("right identity law fails for " + to_string(f));
    }

    for (int f = 0 ; f < k ; ++f)
        for (int g = 0 ; g < k ; ++g) {
            if (c.comp[f][g] == -1)
                continue;
            for (int h = 0 ; h < k ; ++h) {
                if (c.comp[g][h] == -1)
                    continue;
                if (c.comp[c.comp[f][g]][h] != c.comp[f][c.comp[g][h]])
                    return fail("associativity fails for (" + to_string(f) + "," + to_string(g) + "," + to_string(h) + ")");
            }
        }

    return Verdict{};
}

auto univcat::delta_maps(int i, int j) -> vector<OrdinalMap>
{
    if (i < 0 || j < 0)
        throw Error(ErrorKind::BadParameter, "ordinals are non-negative");

    vector<OrdinalMap> result;
    vector<int> values(i + 1, 0);
    while (true) {
        result.push_back(OrdinalMap{i, j, values});
        // next weakly monotone array in lexicographic order
        int pos = i;
        while (pos >= 0 && values[pos] == j)
            --pos;
        if (pos < 0)
            break;
        ++values[pos];
        for (int q = pos + 1 ; q <= i ; ++q)
            values[q] = values[pos];
    }
    return result;
}

auto SimplicialTruncation::morphism_id(const OrdinalMap & map) const -> int
{
    auto it = std::lower_bound(maps.begin(), maps.end(), map, [] (const OrdinalMap & x, const OrdinalMap & y) {
            return tuple{x.dom, x.cod, x.values} < tuple{y.dom, y.cod, y.values};
            });
    if (it == maps.end() || *it != map)
        throw Error(ErrorKind::BadParameter, "not a morphism of the truncation");
    return static_cast<int>(it - maps.begin());
}

auto univcat::delta_truncation(int level) -> SimplicialTruncation
{
    if (level < 0)
        throw Error(ErrorKind::BadParameter, "truncation level must be non-negative");

    SimplicialTruncation result;
    result.level = level;
    auto & c = result.category;
    c.objects = level + 1;

    for (int a = 0 ; a <= level ; ++a)
        for (int b = 0 ; b <= level ; ++b)
            for (auto & m : delta_maps(a, b)) {
                c.morphisms.push_back(Morphism{a, b});
                result.maps.push_back(m);
            }

    c.identities.resize(c.objects);
    for (int a = 0 ; a <= level ; ++a) {
        OrdinalMap id{a, a, {}};
        for (int i = 0 ; i <= a ; ++i)
            id.values.push_back(i);
        c.identities[a] = result.morphism_id(id);
    }

    int k = c.morphism_count();
    c.comp.assign(k, vector<int>(k, -1));
    for (int f = 0 ; f < k ; ++f)
        for (int g = 0 ; g < k ; ++g) {
            auto & mf = result.maps[f];
            auto & mg = result.maps[g];
            if (mf.cod != mg.dom)
                continue;
            OrdinalMap h{mf.dom, mg.cod, {}};
            for (int i = 0 ; i <= mf.dom ; ++i)
                h.values.push_back(mg(mf(i)));
            c.comp[f][g] = result.morphism_id(h);
        }

    return result;
}

auto univcat::monoid_to_category(const vector<vector<int>> & table, int identity) -> FinCategory
{
    int k = static_cast<int>(table.size());
    auto fail = [] (const string & why) { return Error(ErrorKind::NotAMonoid, why); };

    if (0 == k)
        throw fail("a monoid has at least one element");
    for (auto & row : table) {
        if (static_cast<int>(row.size()) != k)
            throw fail("multiplication table is not square");
        for (int x : row)
            if (x < 0 || x >= k)
                throw fail("table entry " + to_string(x) + " out of range");
    }
    if (identity < 0 || identity >= k)
        throw fail("identity index out of range");

    for (int x = 0 ; x < k ; ++x)
        if (table[identity][x] != x || table[x][identity] != x)
            throw fail("element " + to_string(identity) + " is not a two-sided identity (fails at " + to_string(x) + ")");

    for (int x = 0 ; x < k ; ++x)
        for (int y = 0 ; y < k ; ++y)
            for (int z = 0 ; z < k ; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    throw fail("associativity fails for (" + to_string(x) + "," + to_string(y) + "," + to_string(z) + ")");

    FinCategory c;
    c.objects = 1;
    c.morphisms.assign(k, Morphism{0, 0});
    c.identities = {identity};
    c.comp.assign(k, vector<int>(k));
    for (int f = 0 ; f < k ; ++f)
        for (int g = 0 ; g < k ; ++g)
            c.comp[f][g] = table[g][f];
    return c;
}

auto univcat::check_graph_functor(const GraphFunctor & functor, const EnumLimit & limit) -> FunctorReport
{
    FunctorReport report;
    auto & c = functor.source;
    int k = c.morphism_count();

    auto shape_ok = static_cast<int>(functor.object_images.size()) == c.objects
        && static_cast<int>(functor.morphism_images.size()) == k;
    if (! shape_ok) {
        report.witness = "functor does not cover every object and morphism";
        return report;
    }

    auto image_of = [&] (int a) -> const Digraph & { return functor.object_images[a]; };

    report.functorial = true;
    for (int f = 0 ; f < k && report.functorial ; ++f)
        if (! is_hom(image_of(c.morphisms[f].dom), image_of(c.morphisms[f].cod), functor.morphism_images[f])) {
            report.functorial = false;
            report.witness = "image of morphism " + to_string(f) + " is not a homomorphism";
        }

    for (int a = 0 ; a < c.objects && report.functorial ; ++a)
        if (functor.morphism_images[c.identities[a]] != VertexMap::identity(image_of(a).size())) {
            report.functorial = false;
            report.witness = "identity of object " + to_string(a) + " is not sent to the identity";
        }

    for (int f = 0 ; f < k && report.functorial ; ++f)
        for (int g = 0 ; g < k && report.functorial ; ++g) {
            int h = c.comp[f][g];
            if (h == -1)
                continue;
            if (functor.morphism_images[h] != compose(functor.morphism_images[g], functor.morphism_images[f])) {
                report.functorial = false;
                report.witness = "composition of (" + to_string(f) + "," + to_string(g) + ") is not preserved";
            }
        }

    report.faithful = true;
    report.full = true;
    for (int a = 0 ; a < c.objects ; ++a)
        for (int b = 0 ; b < c.objects ; ++b) {
            set<VertexMap> images;
            for (int f : c.hom_set(a, b))
                images.insert(functor.morphism_images[f]);
            if (images.size() != c.hom_set(a, b).size() && report.faithful) {
                report.faithful = false;
                if (report.witness.empty())
                    report.witness = "two morphisms " + to_string(a) + " -> " + to_string(b) + " share an image";
            }

            auto homs = hom_enumerate(image_of(a), image_of(b), {}, limit);
            report.hom_counts.push_back(homs.maps.size());
            if (homs.truncated) {
                report.truncated = true;
                report.full = false;
            }
            for (auto & m : homs.maps)
                if (! images.contains(m) && report.full) {
                    report.full = false;
                    if (report.witness.empty())
                        report.witness = "a homomorphism between images of " + to_string(a) + " and " + to_string(b) + " is not the image of a morphism";
                }
        }

    return report;
}

auto univcat::rt_functor(const SimplicialTruncation & truncation) -> GraphFunctor
{
    GraphFunctor result;
    result.source = truncation.category;
    for (int a = 0 ; a <= truncation.level ; ++a)
        result.object_images.push_back(reflexive_transitive_tournament(a + 1));
    for (auto & m : truncation.maps)
        result.morphism_images.emplace_back(m.values);
    return result;
}

auto univcat::digraph_category(const vector<Digraph> & objects, const EnumLimit & limit) -> GraphFunctor
{
    GraphFunctor result;
    auto & c = result.source;
    c.objects = static_cast<int>(objects.size());
    result.object_images = objects;

    map<tuple<int, int, VertexMap>, int> index;
    for (int a = 0 ; a < c.objects ; ++a)
        for (int b = 0 ; b < c.objects ; ++b) {
            auto homs = hom_enumerate(objects[a], objects[b], {}, limit);
            if (homs.truncated)
                throw Error(ErrorKind::SizeBound, "hom-set enumeration truncated while building a digraph category");
            for (auto & m : homs.maps) {
                index.emplace(tuple{a, b, m}, c.morphism_count());
                c.morphisms.push_back(Morphism{a, b});
                result.morphism_images.push_back(m);
            }
        }

    for (int a = 0 ; a < c.objects ; ++a)
        c.identities.push_back(index.at(tuple{a, a, VertexMap::identity(objects[a].size())}));

    int k = c.morphism_count();
    c.comp.assign(k, vector<int>(k, -1));
    for (int f = 0 ; f < k ; ++f)
        for (int g = 0 ; g < k ; ++g)
            if (c.morphisms[f].cod == c.morphisms[g].dom)
                c.comp[f][g] = index.at(tuple{c.morphisms[f].dom, c.morphisms[g].cod,
                        compose(result.morphism_images[g], result.morphism_images[f])});
    return result;
}
