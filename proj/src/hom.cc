#include <univcat/errors.hh>
#include <univcat/hom.hh>

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <tuple>

using namespace univcat;

using std::map;
using std::pair;
using std::set;
using std::size_t;
using std::string;
using std::to_string;
using std::tuple;
using std::uint64_t;
using std::vector;

namespace
{
    constexpr int unbounded = std::numeric_limits<int>::max();

    // Longest directed walk leaving (or entering) each vertex, computed by
    // peeling sinks (or sources). Vertices that are never peeled reach a
    // cycle and have unbounded walks.
    auto walk_lengths(const Digraph & g, bool leaving) -> vector<int>
    {
        int n = g.size();
        vector<int> remaining(n), length(n, unbounded), queue;
        queue.reserve(n);
        for (int v = 0 ; v < n ; ++v) {
            remaining[v] = static_cast<int>(leaving ? g.out_neighbours(v).size() : g.in_neighbours(v).size());
            if (0 == remaining[v])
                queue.push_back(v);
        }

        for (size_t i = 0 ; i < queue.size() ; ++i) {
            int v = queue[i];
            int best = 0;
            for (int w : leaving ? g.out_neighbours(v) : g.in_neighbours(v))
                best = std::max(best, length[w] + 1);
            length[v] = best;
            for (int w : leaving ? g.in_neighbours(v) : g.out_neighbours(v))
                if (0 == --remaining[w])
                    queue.push_back(w);
        }
        return length;
    }

    struct Domain
    {
        bool full = true;
        vector<int> values;
    };

    struct TrailEntry
    {
        int vertex;
        bool is_assignment;
        Domain old_domain;
    };

    class Search
    {
        private:
            const Digraph & _pattern;
            const Digraph & _target;
            bool _injective;
            EnumLimit _limit;

            vector<int> _pattern_out, _pattern_in, _target_out, _target_in;
            vector<char> _target_loop;
            vector<size_t> _full_count;

            vector<int> _assignment;
            vector<char> _used;
            vector<Domain> _domains;
            set<pair<size_t, int>> _queue;
            vector<TrailEntry> _trail;

            Enumeration _result;

            auto compatible(int u, int t) const -> bool
            {
                if (_pattern.has_loop(u) && ! _target_loop[t])
                    return false;
                return _target_out[t] >= _pattern_out[u] && _target_in[t] >= _pattern_in[u];
            }

            auto domain_size(int u) const -> size_t
            {
                return _domains[u].full ? _full_count[u] : _domains[u].values.size();
            }

            auto restrict_domain(int v, const vector<int> & allowed) -> bool
            {
                Domain & d = _domains[v];
                vector<int> values;
                if (d.full) {
                    for (int t : allowed)
                        if (compatible(v, t) && ! (_injective && _used[t]))
                            values.push_back(t);
                }
                else {
                    std::set_intersection(d.values.begin(), d.values.end(), allowed.begin(), allowed.end(),
                            std::back_inserter(values));
                    if (_injective)
                        std::erase_if(values, [&] (int t) { return _used[t]; });
                    if (values.size() == d.values.size())
                        return true;
                }

                _queue.erase({domain_size(v), v});
                _trail.push_back(TrailEntry{v, false, std::move(d)});
                d = Domain{false, std::move(values)};
                _queue.insert({domain_size(v), v});
                return ! d.values.empty();
            }

            auto assign(int u, int t) -> bool
            {
                _queue.erase({domain_size(u), u});
                _trail.push_back(TrailEntry{u, true, {}});
                _assignment[u] = t;
                if (_injective)
                    _used[t] = 1;

                if (_pattern.has_loop(u) && ! _target_loop[t])
                    return false;

                for (int v : _pattern.out_neighbours(u)) {
                    if (v == u)
                        continue;
                    if (_assignment[v] != -1) {
                        if (! _target.has_arc(t, _assignment[v]))
                            return false;
                    }
                    else if (! restrict_domain(v, _target.out_neighbours(t)))
                        return false;
                }

                for (int v : _pattern.in_neighbours(u)) {
                    if (v == u)
                        continue;
                    if (_assignment[v] != -1) {
                        if (! _target.has_arc(_assignment[v], t))
                            return false;
                    }
                    else if (! restrict_domain(v, _target.in_neighbours(t)))
                        return false;
                }

                return true;
            }

            auto undo_to(size_t mark) -> void
            {
                while (_trail.size() > mark) {
                    TrailEntry entry = std::move(_trail.back());
                    _trail.pop_back();
                    int v = entry.vertex;
                    if (entry.is_assignment) {
                        if (_injective)
                            _used[_assignment[v]] = 0;
                        _assignment[v] = -1;
                        _queue.insert({domain_size(v), v});
                    }
                    else {
                        _queue.erase({domain_size(v), v});
                        _domains[v] = std::move(entry.old_domain);
                        _queue.insert({domain_size(v), v});
                    }
                }
            }

            auto candidates(int u) const -> vector<int>
            {
                if (! _domains[u].full)
                    return _domains[u].values;
                vector<int> result;
                for (int t = 0 ; t < _target.size() ; ++t)
                    if (compatible(u, t))
                        result.push_back(t);
                return result;
            }

            auto record_solution() -> bool
            {
                _result.maps.emplace_back(_assignment);
                if (_limit.max_results && _result.maps.size() >= *_limit.max_results) {
                    _result.truncated = true;
                    return false;
                }
                return true;
            }

        public:
            Search(const Digraph & pattern, const Digraph & target, bool injective, const EnumLimit & limit) :
                _pattern(pattern),
                _target(target),
                _injective(injective),
                _limit(limit),
                _pattern_out(walk_lengths(pattern, true)),
                _pattern_in(walk_lengths(pattern, false)),
                _target_out(walk_lengths(target, true)),
                _target_in(walk_lengths(target, false)),
                _target_loop(target.size()),
                _full_count(pattern.size()),
                _assignment(pattern.size(), -1),
                _used(target.size()),
                _domains(pattern.size())
            {
                for (int t = 0 ; t < target.size() ; ++t)
                    _target_loop[t] = target.has_loop(t);

                map<tuple<bool, int, int>, size_t> counts;
                for (int u = 0 ; u < pattern.size() ; ++u) {
                    auto key = tuple{pattern.has_loop(u), _pattern_out[u], _pattern_in[u]};
                    auto it = counts.find(key);
                    if (it == counts.end()) {
                        size_t count = 0;
                        for (int t = 0 ; t < target.size() ; ++t)
                            if (compatible(u, t))
                                ++count;
                        it = counts.emplace(key, count).first;
                    }
                    _full_count[u] = it->second;
                    _queue.insert({_full_count[u], u});
                }
            }

            auto run(const Pins & pins) -> Enumeration
            {
                for (auto & [u, t] : pins)
                    if (u < 0 || u >= _pattern.size() || t < 0 || t >= _target.size())
                        throw Error(ErrorKind::PinOutOfRange, "pin " + to_string(u) + " -> " + to_string(t) + " names a nonexistent vertex");

                for (auto & [u, t] : pins) {
                    if (_assignment[u] != -1) {
                        if (_assignment[u] != t)
                            return std::move(_result);
                        continue;
                    }
                    if (_injective && _used[t])
                        return std::move(_result);
                    if (! _domains[u].full && ! std::binary_search(_domains[u].values.begin(), _domains[u].values.end(), t))
                        return std::move(_result);
                    if (! compatible(u, t) || ! assign(u, t))
                        return std::move(_result);
                }

                if (_queue.empty()) {
                    record_solution();
                    return std::move(_result);
                }

                struct Frame
                {
                    int vertex;
                    vector<int> candidates;
                    size_t next;
                    size_t trail_mark;
                };

                vector<Frame> stack;
                auto push_frame = [&] () {
                    int u = _queue.begin()->second;
                    stack.push_back(Frame{u, candidates(u), 0, _trail.size()});
                };
                push_frame();

                while (! stack.empty()) {
                    Frame & frame = stack.back();
                    undo_to(frame.trail_mark);
                    if (frame.next == frame.candidates.size()) {
                        stack.pop_back();
                        continue;
                    }

                    int u = frame.vertex;
                    int t = frame.candidates[frame.next++];
                    if (_injective && _used[t])
                        continue;

                    ++_result.steps;
                    if (_limit.max_steps && _result.steps > *_limit.max_steps) {
                        _result.truncated = true;
                        _result.step_limit_hit = true;
                        break;
                    }

                    if (! assign(u, t))
                        continue;

                    if (_queue.empty()) {
                        if (! record_solution())
                            break;
                        continue;
                    }

                    push_frame();
                }

                std::sort(_result.maps.begin(), _result.maps.end());
                return std::move(_result);
            }
    };
}

auto EnumLimit::from_environment(EnumLimit fallback) -> EnumLimit
{
    if (const char * text = std::getenv("UNIVCAT_MAX_STEPS")) {
        char * end = nullptr;
        auto value = std::strtoull(text, &end, 10);
        if (end != text && *end == '\0' && value > 0)
            fallback.max_steps = value;
    }
    return fallback;
}

auto univcat::hom_enumerate(const Digraph & pattern, const Digraph & target,
        const Pins & pins, const EnumLimit & limit) -> Enumeration
{
    return Search{pattern, target, false, limit}.run(pins);
}

auto univcat::injective_hom_enumerate(const Digraph & pattern, const Digraph & target,
        const Pins & pins, const EnumLimit & limit) -> Enumeration
{
    return Search{pattern, target, true, limit}.run(pins);
}

auto univcat::hom_exists(const Digraph & pattern, const Digraph & target, const Pins & pins, const EnumLimit & limit) -> bool
{
    auto result = hom_enumerate(pattern, target, pins, EnumLimit{1, limit.max_steps});
    if (result.step_limit_hit)
        throw Error(ErrorKind::SizeBound, "existence search exceeded the step limit");
    return ! result.maps.empty();
}

auto univcat::endomorphisms(const Digraph & g, const EnumLimit & limit) -> Endomorphisms
{
    Endomorphisms result;
    auto homs = hom_enumerate(g, g, {}, limit);
    result.maps = std::move(homs.maps);
    result.truncated = homs.truncated;

    auto id = VertexMap::identity(g.size());
    auto index_of = [&] (const VertexMap & m) -> int {
        auto it = std::lower_bound(result.maps.begin(), result.maps.end(), m);
        return (it != result.maps.end() && *it == m) ? static_cast<int>(it - result.maps.begin()) : -1;
    };

    result.identity = index_of(id);
    auto n = result.maps.size();
    result.composition.assign(n, vector<int>(n, -1));
    for (size_t i = 0 ; i < n ; ++i)
        for (size_t j = 0 ; j < n ; ++j)
            result.composition[i][j] = index_of(compose(result.maps[i], result.maps[j]));
    return result;
}

auto univcat::subgraph_embeddings(const Graph & pattern, const Graph & host, const EnumLimit & limit) -> Enumeration
{
    return injective_hom_enumerate(symmetric_digraph(pattern), symmetric_digraph(host), {}, limit);
}
