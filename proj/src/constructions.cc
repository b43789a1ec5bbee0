#include <univcat/constructions.hh>
#include <univcat/errors.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

using namespace univcat;

using std::set;
using std::string;
using std::to_string;
using std::vector;

auto univcat::subdivision_vertex(int n, int p, int edge_index, int position) -> int
{
    return n + edge_index * p + (position - 1);
}

auto univcat::subdivide(const Graph & g, int p) -> Graph
{
    if (p < 0)
        throw Error(ErrorKind::BadParameter, "negative subdivision depth");

    auto edges = g.edges();
    int n = g.size();
    Graph result(n + p * static_cast<int>(edges.size()));
    for (int e = 0 ; e < static_cast<int>(edges.size()) ; ++e) {
        auto [u, v] = edges[e];
        int previous = u;
        for (int pos = 1 ; pos <= p ; ++pos) {
            int x = subdivision_vertex(n, p, e, pos);
            result.add_edge(previous, x);
            previous = x;
        }
        result.add_edge(previous, v);
    }
    return result;
}

auto univcat::underlying(const Digraph & d) -> Graph
{
    Graph result(d.size());
    for (auto & [u, v] : d.arcs())
        if (u != v)
            result.add_edge(u, v);
    return result;
}

auto univcat::cycles_upto(const Graph & g, int max_length) -> vector<vector<int>>
{
    vector<vector<int>> result;
    vector<int> path;
    vector<char> on_path(g.size(), 0);

    // Cycles are grown from their least vertex through larger vertices only,
    // and kept in the direction whose second vertex is smaller than its last.
    auto extend = [&] (auto & self, int start) -> void {
        int v = path.back();
        for (int w : g.neighbours(v)) {
            if (w == start && path.size() >= 3 && path[1] < path.back())
                result.push_back(path);
            if (w <= start || on_path[w] || static_cast<int>(path.size()) >= max_length)
                continue;
            on_path[w] = 1;
            path.push_back(w);
            self(self, start);
            path.pop_back();
            on_path[w] = 0;
        }
    };

    for (int s = 0 ; s < g.size() ; ++s) {
        path = {s};
        on_path[s] = 1;
        extend(extend, s);
        on_path[s] = 0;
    }

    std::sort(result.begin(), result.end());
    return result;
}

auto univcat::degeneracy(const Graph & g) -> Degeneracy
{
    int n = g.size();
    if (0 == n)
        throw Error(ErrorKind::EmptyGraph, "degeneracy of the graph with no vertices");

    vector<int> degree(n);
    set<std::pair<int, int>> queue;
    for (int v = 0 ; v < n ; ++v) {
        degree[v] = g.degree(v);
        queue.insert({degree[v], v});
    }

    Degeneracy result;
    vector<char> removed(n, 0);
    while (! queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        result.value = std::max(result.value, d);
        result.elimination_order.push_back(v);
        removed[v] = 1;
        for (int w : g.neighbours(v))
            if (! removed[w]) {
                queue.erase({degree[w], w});
                queue.insert({--degree[w], w});
            }
    }
    return result;
}

auto univcat::complete_graph(int n) -> Graph
{
    if (n < 1)
        throw Error(ErrorKind::BadParameter, "complete graph needs n >= 1");
    Graph result(n);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u + 1 ; v < n ; ++v)
            result.add_edge(u, v);
    return result;
}

auto univcat::cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw Error(ErrorKind::BadParameter, "cycle needs n >= 3");
    Graph result(n);
    for (int v = 0 ; v < n ; ++v)
        result.add_edge(v, (v + 1) % n);
    return result;
}

auto univcat::directed_cycle(int n) -> Digraph
{
    if (n < 3)
        throw Error(ErrorKind::BadParameter, "directed cycle needs n >= 3");
    Digraph result(n);
    for (int v = 0 ; v < n ; ++v)
        result.add_arc(v, (v + 1) % n);
    return result;
}

auto univcat::directed_path(int n) -> Digraph
{
    if (n < 1)
        throw Error(ErrorKind::BadParameter, "directed path needs n >= 1");
    Digraph result(n);
    for (int v = 0 ; v + 1 < n ; ++v)
        result.add_arc(v, v + 1);
    return result;
}

auto univcat::reflexive_transitive_tournament(int n) -> Digraph
{
    if (n < 1)
        throw Error(ErrorKind::BadParameter, "tournament needs n >= 1");
    Digraph result(n, true);
    for (int u = 0 ; u < n ; ++u)
        for (int v = u ; v < n ; ++v)
            result.add_arc(u, v);
    return result;
}

auto univcat::make_standard(StandardKind kind, int n) -> std::variant<Graph, Digraph>
{
    switch (kind) {
        case StandardKind::Complete: return complete_graph(n);
        case StandardKind::Cycle: return cycle_graph(n);
        case StandardKind::DirectedCycle: return directed_cycle(n);
        case StandardKind::DirectedPath: return directed_path(n);
        case StandardKind::ReflexiveTransitiveTournament: return reflexive_transitive_tournament(n);
    }
    throw Error(ErrorKind::BadParameter, "unknown standard kind");
}

auto univcat::small_canonical_form(const Digraph & d) -> vector<Arc>
{
    int n = d.size();
    vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto arcs = d.arcs();

    vector<Arc> best;
    bool first = true;
    do {
        vector<Arc> relabelled;
        relabelled.reserve(arcs.size());
        for (auto & [u, v] : arcs)
            relabelled.emplace_back(perm[u], perm[v]);
        std::sort(relabelled.begin(), relabelled.end());
        if (first || relabelled < best) {
            best = std::move(relabelled);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

auto univcat::oriented_catalog(int max_vertices) -> vector<Digraph>
{
    vector<Digraph> result;
    for (int n = 1 ; n <= max_vertices ; ++n) {
        vector<Arc> pairs;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                pairs.emplace_back(u, v);

        // each unordered pair is absent, forwards, or backwards
        long combinations = 1;
        for (std::size_t i = 0 ; i < pairs.size() ; ++i)
            combinations *= 3;

        set<std::tuple<std::size_t, vector<Arc>>> seen;
        for (long code = 0 ; code < combinations ; ++code) {
            Digraph d(n);
            long rest = code;
            for (auto & [u, v] : pairs) {
                switch (rest % 3) {
                    case 1: d.add_arc(u, v); break;
                    case 2: d.add_arc(v, u); break;
                    default: break;
                }
                rest /= 3;
            }
            seen.insert({d.arc_count(), small_canonical_form(d)});
        }

        for (auto & [count, arcs] : seen)
            result.emplace_back(n, arcs);
    }
    return result;
}
