#ifndef UNIVCAT_GUARD_TESTS_ORACLES_HH
#define UNIVCAT_GUARD_TESTS_ORACLES_HH 1

// Independent brute-force reference implementations. Nothing here calls the
// library's search engine.

#include <univcat/graph.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle
{
    using univcat::Digraph;
    using univcat::Graph;
    using univcat::VertexMap;

    // Calls visit on every function [0, n) -> [0, m), in lexicographic order.
    inline auto for_each_function(int n, int m, const std::function<void (const std::vector<int> &)> & visit) -> void
    {
        if (n == 0) {
            visit({});
            return;
        }
        if (m == 0)
            return;
        std::vector<int> f(n, 0);
        while (true) {
            visit(f);
            int i = n - 1;
            while (i >= 0 && ++f[i] == m)
                f[i--] = 0;
            if (i < 0)
                return;
        }
    }

    inline auto preserves_arcs(const Digraph & g, const Digraph & h, const std::vector<int> & f) -> bool
    {
        for (int u = 0 ; u < g.size() ; ++u)
            for (int v = 0 ; v < g.size() ; ++v)
                if (g.has_arc(u, v) && ! h.has_arc(f[u], f[v]))
                    return false;
        return true;
    }

    inline auto homs(const Digraph & g, const Digraph & h) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        for_each_function(g.size(), h.size(), [&] (const std::vector<int> & f) {
                if (preserves_arcs(g, h, f))
                    result.push_back(f);
                });
        return result;
    }

    inline auto injective_homs(const Digraph & g, const Digraph & h) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        for (auto & f : homs(g, h))
            if (std::set<int>(f.begin(), f.end()).size() == f.size())
                result.push_back(f);
        return result;
    }

    // Plain backtracking in vertex index order, checking arcs back to already
    // placed vertices only. No propagation or reordering; output is
    // lexicographic because values are tried in increasing order.
    inline auto backtrack_homs(const Digraph & g, const Digraph & h) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        std::vector<int> f(g.size(), -1);
        std::function<void (int)> place = [&] (int u) {
            if (u == g.size()) {
                result.push_back(f);
                return;
            }
            for (int x = 0 ; x < h.size() ; ++x) {
                bool ok = true;
                for (int w = 0 ; w <= u && ok ; ++w) {
                    int fw = (w == u) ? x : f[w];
                    if (g.has_arc(u, w) && ! h.has_arc(x, fw))
                        ok = false;
                    if (g.has_arc(w, u) && ! h.has_arc(fw, x))
                        ok = false;
                }
                if (ok) {
                    f[u] = x;
                    place(u + 1);
                }
            }
            f[u] = -1;
        };
        place(0);
        return result;
    }

    // Does some map from pattern into model agree with the pins and keep arcs?
    inline auto pinned_hom_exists(const Digraph & pattern, const Digraph & model,
            const std::vector<std::pair<int, int>> & pins) -> bool
    {
        bool found = false;
        for_each_function(pattern.size(), model.size(), [&] (const std::vector<int> & f) {
                if (found)
                    return;
                for (auto & [x, y] : pins)
                    if (f[x] != y)
                        return;
                if (preserves_arcs(pattern, model, f))
                    found = true;
                });
        return found;
    }

    inline auto monotone_maps(int i, int j) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> result;
        for_each_function(i + 1, j + 1, [&] (const std::vector<int> & f) {
                if (std::is_sorted(f.begin(), f.end()))
                    result.push_back(f);
                });
        return result;
    }

    inline auto binomial(int n, int k) -> std::int64_t
    {
        std::int64_t r = 1;
        for (int i = 1 ; i <= k ; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    // Cycles as vertex sets, by trying every ordered vertex sequence.
    inline auto cycle_vertex_sets(const Graph & g, int max_length) -> std::multiset<std::vector<int>>
    {
        std::multiset<std::vector<int>> result;
        std::vector<int> path;
        std::vector<char> used(g.size(), 0);
        std::function<void ()> extend = [&] () {
            int last = path.back();
            if (path.size() >= 3 && g.has_edge(last, path.front()) && path[1] < last) {
                auto s = path;
                std::sort(s.begin(), s.end());
                result.insert(s);
            }
            if (static_cast<int>(path.size()) == max_length)
                return;
            for (int w : g.neighbours(last))
                if (! used[w] && w > path.front()) {
                    used[w] = 1;
                    path.push_back(w);
                    extend();
                    path.pop_back();
                    used[w] = 0;
                }
        };
        for (int s = 0 ; s < g.size() ; ++s) {
            used[s] = 1;
            path = {s};
            extend();
            used[s] = 0;
        }
        return result;
    }

    inline auto random_digraph(std::mt19937 & rng, int n, double density, bool loops) -> Digraph
    {
        Digraph d(n, loops);
        std::bernoulli_distribution arc(density);
        for (int u = 0 ; u < n ; ++u)
            for (int v = 0 ; v < n ; ++v)
                if ((u != v || loops) && arc(rng))
                    d.add_arc(u, v);
        return d;
    }

    inline auto random_oriented(std::mt19937 & rng, int n, double density) -> Digraph
    {
        Digraph d(n);
        std::bernoulli_distribution arc(density), flip(0.5);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (arc(rng)) {
                    if (flip(rng))
                        d.add_arc(u, v);
                    else
                        d.add_arc(v, u);
                }
        return d;
    }

    inline auto random_graph(std::mt19937 & rng, int n, double density) -> Graph
    {
        Graph g(n);
        std::bernoulli_distribution edge(density);
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        return g;
    }

    // Relabels d by a permutation.
    inline auto permuted(const Digraph & d, const std::vector<int> & perm) -> Digraph
    {
        Digraph r(d.size(), d.loops_allowed());
        for (auto & [u, v] : d.arcs())
            r.add_arc(perm[u], perm[v]);
        return r;
    }

    inline auto isomorphic(const Digraph & a, const Digraph & b) -> bool
    {
        if (a.size() != b.size() || a.arc_count() != b.arc_count())
            return false;
        std::vector<int> perm(a.size());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (permuted(a, perm) == b)
                return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    }

    // Every oriented graph on exactly n labelled vertices: each pair is absent,
    // forward or backward.
    inline auto labelled_oriented(int n) -> std::vector<Digraph>
    {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0 ; u < n ; ++u)
            for (int v = u + 1 ; v < n ; ++v)
                pairs.emplace_back(u, v);
        std::vector<Digraph> result;
        for_each_function(pairs.size(), 3, [&] (const std::vector<int> & choice) {
                Digraph d(n);
                for (std::size_t i = 0 ; i < pairs.size() ; ++i) {
                    if (choice[i] == 1)
                        d.add_arc(pairs[i].first, pairs[i].second);
                    else if (choice[i] == 2)
                        d.add_arc(pairs[i].second, pairs[i].first);
                }
                result.push_back(d);
                });
        return result;
    }

    // Does sub embed in host as a (not necessarily induced) subgraph?
    inline auto contains_subgraph(const Graph & sub, const Graph & host) -> bool
    {
        if (sub.size() > host.size())
            return false;
        bool found = false;
        std::vector<int> f(sub.size());
        std::vector<char> used(host.size(), 0);
        std::function<void (int)> place = [&] (int i) {
            if (found)
                return;
            if (i == sub.size()) {
                found = true;
                return;
            }
            for (int x = 0 ; x < host.size() ; ++x) {
                if (used[x])
                    continue;
                bool ok = true;
                for (int j : sub.neighbours(i))
                    if (j < i && ! host.has_edge(f[j], x))
                        ok = false;
                if (! ok)
                    continue;
                used[x] = 1;
                f[i] = x;
                place(i + 1);
                used[x] = 0;
            }
        };
        place(0);
        return found;
    }
    // Is some bijection of elements an isomorphism between the two tables?
    inline auto isomorphic_tables(const std::vector<std::vector<int>> & a, const std::vector<std::vector<int>> & b) -> bool
    {
        if (a.size() != b.size())
            return false;
        int k = a.size();
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        do {
            bool ok = true;
            for (int x = 0 ; x < k && ok ; ++x)
                for (int y = 0 ; y < k && ok ; ++y)
                    ok = p[a[x][y]] == b[p[x]][p[y]];
            if (ok)
                return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    }

    // Monoids of order k up to isomorphism: every table with identity 0,
    // filtered by associativity, one representative per class.
    inline auto monoid_classes(int k) -> std::vector<std::vector<std::vector<int>>>
    {
        std::vector<std::vector<std::vector<int>>> classes;
        int free = (k - 1) * (k - 1);
        for_each_function(free, k, [&] (const std::vector<int> & cells) {
                std::vector<std::vector<int>> t(k, std::vector<int>(k));
                for (int x = 0 ; x < k ; ++x) {
                    t[0][x] = x;
                    t[x][0] = x;
                }
                for (int x = 1, c = 0 ; x < k ; ++x)
                    for (int y = 1 ; y < k ; ++y)
                        t[x][y] = cells[c++];
                for (int x = 0 ; x < k ; ++x)
                    for (int y = 0 ; y < k ; ++y)
                        for (int z = 0 ; z < k ; ++z)
                            if (t[t[x][y]][z] != t[x][t[y][z]])
                                return;
                for (auto & c : classes)
                    if (isomorphic_tables(c, t))
                        return;
                classes.push_back(t);
                });
        return classes;
    }
}

#endif
