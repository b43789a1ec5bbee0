#include <univcat/errors.hh>
#include <univcat/graph.hh>

#include <algorithm>
#include <string>

using namespace univcat;

using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto insert_sorted(vector<int> & list, int v) -> bool
    {
        auto it = std::lower_bound(list.begin(), list.end(), v);
        if (it != list.end() && *it == v)
            return false;
        list.insert(it, v);
        return true;
    }

    auto contains_sorted(const vector<int> & list, int v) -> bool
    {
        return std::binary_search(list.begin(), list.end(), v);
    }
}

Digraph::Digraph(int n, bool loops_allowed) :
    _loops_allowed(loops_allowed)
{
    if (n < 0)
        throw Error(ErrorKind::BadParameter, "negative vertex count");
    _out.resize(n);
    _in.resize(n);
}

Digraph::Digraph(int n, const vector<Arc> & arcs, bool loops_allowed) :
    Digraph(n, loops_allowed)
{
    for (auto & [u, v] : arcs)
        add_arc(u, v);
}

auto Digraph::check_vertex(int v) const -> void
{
    if (v < 0 || v >= size())
        throw Error(ErrorKind::ConsistencyError, "vertex " + to_string(v) + " out of range for " + to_string(size()) + " vertices");
}

auto Digraph::add_vertex() -> int
{
    _out.emplace_back();
    _in.emplace_back();
    return size() - 1;
}

auto Digraph::add_arc(int u, int v) -> bool
{
    check_vertex(u);
    check_vertex(v);
    if (u == v && ! _loops_allowed)
        throw Error(ErrorKind::ConsistencyError, "loop at " + to_string(u) + " in a loop-free digraph");

    if (! insert_sorted(_out[u], v))
        return false;
    insert_sorted(_in[v], u);
    ++_arc_count;
    return true;
}

auto Digraph::has_arc(int u, int v) const -> bool
{
    if (u < 0 || u >= size() || v < 0 || v >= size())
        return false;
    return contains_sorted(_out[u], v);
}

auto Digraph::has_loop(int v) const -> bool
{
    return has_arc(v, v);
}

auto Digraph::arcs() const -> vector<Arc>
{
    vector<Arc> result;
    result.reserve(_arc_count);
    for (int u = 0 ; u < size() ; ++u)
        for (int v : _out[u])
            result.emplace_back(u, v);
    return result;
}

auto Digraph::is_oriented() const -> bool
{
    for (int u = 0 ; u < size() ; ++u)
        for (int v : _out[u])
            if (u == v || has_arc(v, u))
                return false;
    return true;
}

Graph::Graph(int n)
{
    if (n < 0)
        throw Error(ErrorKind::BadParameter, "negative vertex count");
    _adj.resize(n);
}

Graph::Graph(int n, const vector<Arc> & edges) :
    Graph(n)
{
    for (auto & [u, v] : edges)
        add_edge(u, v);
}

auto Graph::check_vertex(int v) const -> void
{
    if (v < 0 || v >= size())
        throw Error(ErrorKind::ConsistencyError, "vertex " + to_string(v) + " out of range for " + to_string(size()) + " vertices");
}

auto Graph::add_vertex() -> int
{
    _adj.emplace_back();
    return size() - 1;
}

auto Graph::add_edge(int u, int v) -> bool
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error(ErrorKind::ConsistencyError, "loop at " + to_string(u) + " in an undirected graph");

    if (! insert_sorted(_adj[u], v))
        return false;
    insert_sorted(_adj[v], u);
    ++_edge_count;
    return true;
}

auto Graph::has_edge(int u, int v) const -> bool
{
    if (u < 0 || u >= size() || v < 0 || v >= size())
        return false;
    return contains_sorted(_adj[u], v);
}

auto Graph::edges() const -> vector<Arc>
{
    vector<Arc> result;
    result.reserve(_edge_count);
    for (int u = 0 ; u < size() ; ++u)
        for (int v : _adj[u])
            if (u < v)
                result.emplace_back(u, v);
    return result;
}

auto univcat::symmetric_digraph(const Graph & g) -> Digraph
{
    Digraph result(g.size());
    for (auto & [u, v] : g.edges()) {
        result.add_arc(u, v);
        result.add_arc(v, u);
    }
    return result;
}

VertexMap::VertexMap(vector<int> images) :
    _images(std::move(images))
{
}

auto VertexMap::identity(int n) -> VertexMap
{
    vector<int> images(n);
    for (int v = 0 ; v < n ; ++v)
        images[v] = v;
    return VertexMap{std::move(images)};
}

auto VertexMap::is_injective() const -> bool
{
    auto sorted = _images;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

auto univcat::compose(const VertexMap & outer, const VertexMap & inner) -> VertexMap
{
    vector<int> images(inner.size());
    for (int v = 0 ; v < inner.size() ; ++v) {
        int w = inner(v);
        if (w < 0 || w >= outer.size())
            throw Error(ErrorKind::BadParameter, "maps are not composable");
        images[v] = outer(w);
    }
    return VertexMap{std::move(images)};
}

namespace
{
    template <typename Target_>
    auto images_in_range(const Target_ & target, int source_size, const VertexMap & map) -> bool
    {
        if (map.size() != source_size)
            return false;
        for (int v : map.images())
            if (v < 0 || v >= target.size())
                return false;
        return true;
    }
}

auto univcat::is_hom(const Digraph & source, const Digraph & target, const VertexMap & map) -> bool
{
    if (! images_in_range(target, source.size(), map))
        return false;
    for (int u = 0 ; u < source.size() ; ++u)
        for (int v : source.out_neighbours(u))
            if (! target.has_arc(map(u), map(v)))
                return false;
    return true;
}

auto univcat::is_hom(const Graph & source, const Graph & target, const VertexMap & map) -> bool
{
    if (! images_in_range(target, source.size(), map))
        return false;
    for (auto & [u, v] : source.edges())
        if (! target.has_edge(map(u), map(v)))
            return false;
    return true;
}

auto univcat::is_embedding(const Graph & source, const Graph & target, const VertexMap & map) -> bool
{
    return map.is_injective() && is_hom(source, target, map);
}
