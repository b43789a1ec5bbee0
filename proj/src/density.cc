#include <univcat/constructions.hh>
#include <univcat/density.hh>
#include <univcat/errors.hh>
#include <univcat/gadget.hh>

using namespace univcat;

using std::vector;

auto univcat::find_subdivided_clique(const Graph & g, int p, int clique_size, const EnumLimit & limit) -> CliqueSearch
{
    if (p < 0 || clique_size < 2)
        throw Error(ErrorKind::BadParameter, "need p >= 0 and N >= 2");

    auto pattern = subdivide(complete_graph(clique_size), p);
    CliqueSearch result;
    if (pattern.size() > g.size() || pattern.edge_count() > g.edge_count())
        return result;

    auto found = subgraph_embeddings(pattern, g, EnumLimit{1, limit.max_steps});
    if (! found.maps.empty())
        result.embedding = found.maps.front();
    else
        result.truncated = found.step_limit_hit;
    return result;
}

auto univcat::density_profile(const vector<Graph> & sample, int p_max, int n_max, bool upto, const EnumLimit & limit) -> DensityProfile
{
    if (p_max < 0 || n_max < 2)
        throw Error(ErrorKind::BadParameter, "need p_max >= 0 and N_max >= 2");

    DensityProfile profile{p_max, n_max, upto, {}};
    for (int p = 0 ; p <= p_max ; ++p) {
        DensityCell cell;
        for (int n = n_max ; n >= 2 && ! cell.clique_size ; --n)
            for (int q = upto ? 0 : p ; q <= p && ! cell.clique_size ; ++q)
                for (int m = 0 ; m < static_cast<int>(sample.size()) ; ++m) {
                    auto search = find_subdivided_clique(sample[m], q, n, limit);
                    cell.truncated = cell.truncated || search.truncated;
                    if (search.embedding) {
                        cell.clique_size = n;
                        cell.depth = q;
                        cell.member = m;
                        cell.witness = search.embedding;
                        break;
                    }
                }
        profile.table.push_back(std::move(cell));
    }
    return profile;
}

auto univcat::profile_is_consistent(const vector<Graph> & sample, const DensityProfile & profile, const EnumLimit & limit) -> bool
{
    for (auto & cell : profile.table) {
        if (! cell.clique_size)
            continue;
        if (! cell.witness || cell.member < 0)
            return false;
        auto pattern = subdivide(complete_graph(*cell.clique_size), cell.depth);
        if (! is_embedding(pattern, sample[cell.member], *cell.witness))
            return false;
        for (int smaller = 2 ; smaller < *cell.clique_size ; ++smaller)
            if (! find_subdivided_clique(sample[cell.member], cell.depth, smaller, limit).embedding)
                return false;
    }
    return true;
}

auto univcat::replaced_class_profile(const vector<Digraph> & bases, int d, int p_max, int n_max,
        const EnumLimit & limit) -> ReplacedClassProfile
{
    auto gadget = indicator_for_depth(d);
    ReplacedClassProfile result;
    for (auto & base : bases) {
        auto member = underlying(star_replace(base, gadget).result);
        result.degeneracies.push_back(degeneracy(member).value);
        result.members.push_back(std::move(member));
    }
    result.profile = density_profile(result.members, p_max, n_max, false, limit);
    return result;
}
