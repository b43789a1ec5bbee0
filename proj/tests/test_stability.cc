#include <doctest.h>

#include "oracles.hh"

#include <univcat/category.hh>
#include <univcat/constructions.hh>
#include <univcat/errors.hh>
#include <univcat/stability.hh>

#include <random>

using namespace univcat;

namespace
{
    auto kind_of(const std::function<void ()> & f) -> ErrorKind
    {
        try {
            f();
        }
        catch (const Error & e) {
            return e.kind();
        }
        FAIL("no error thrown");
        return ErrorKind::ConsistencyError;
    }

    auto looped_point() -> Digraph
    {
        Digraph d(1, true);
        d.add_arc(0, 0);
        return d;
    }

    // eta over the looped point and RT_2 with 0 -> 0, 0 -> 1
    auto rt_eta() -> PPFormula
    {
        return build_eta(looped_point(), reflexive_transitive_tournament(2), VertexMap{{0}}, VertexMap{{1}});
    }

    auto brute_eval(const PPFormula & phi, const Digraph & model, const Tuple & x, const Tuple & y) -> bool
    {
        std::vector<std::pair<int, int>> pins;
        for (size_t i = 0 ; i < x.size() ; ++i)
            pins.emplace_back(phi.x_tuple[i], x[i]);
        for (size_t i = 0 ; i < y.size() ; ++i)
            pins.emplace_back(phi.y_tuple[i], y[i]);
        return oracle::pinned_hom_exists(phi.pattern, model, pins);
    }
}

TEST_CASE("build_nu")
{
    auto point = build_nu(Digraph(1));
    CHECK(point.x_tuple == Tuple{0});
    CHECK(point.y_tuple.empty());
    CHECK(point.pattern.arc_count() == 0);
    CHECK(pp_eval(point, directed_cycle(3), {2}, {}));

    auto arc = build_nu(Digraph(2, {{0, 1}}));
    auto c3 = directed_cycle(3);
    for (int u = 0 ; u < 3 ; ++u)
        for (int v = 0 ; v < 3 ; ++v)
            CHECK(pp_eval(arc, c3, {u, v}, {}) == c3.has_arc(u, v));

    CHECK(pp_eval(build_nu(c3), c3, {0, 1, 2}, {}));
    CHECK_FALSE(pp_eval(build_nu(c3), c3, {0, 2, 1}, {}));
}

TEST_CASE("build_eta")
{
    auto eta = rt_eta();
    CHECK(eta.pattern == reflexive_transitive_tournament(2));
    CHECK(eta.x_tuple == Tuple{0});
    CHECK(eta.y_tuple == Tuple{1});

    auto g0 = Digraph(2, {{0, 1}});
    auto g1 = directed_cycle(3);
    auto two = build_eta(g0, g1, VertexMap{{0, 1}}, VertexMap{{1, 2}});
    CHECK(two.x_tuple.size() == 2);
    CHECK(two.y_tuple.size() == 2);

    CHECK(kind_of([&] { build_eta(g0, g1, VertexMap{{1, 0}}, VertexMap{{1, 2}}); }) == ErrorKind::NotAHom);
    CHECK(kind_of([&] { build_eta(g0, g1, VertexMap{{0, 1}}, VertexMap{{0, 0}}); }) == ErrorKind::NotAHom);
}

TEST_CASE("pp_eval examples")
{
    auto eta = rt_eta();
    auto rt3 = reflexive_transitive_tournament(3);
    CHECK(pp_eval(eta, rt3, {0}, {1}));
    CHECK_FALSE(pp_eval(eta, rt3, {1}, {0}));
    CHECK(pp_eval(eta, rt3, {1}, {1}));
    CHECK(pp_eval(build_nu(Digraph(1)), rt3, {2}, {}));

    CHECK(kind_of([&] { pp_eval(eta, rt3, {0, 1}, {1}); }) == ErrorKind::ArityMismatch);
    CHECK(kind_of([&] { pp_eval(eta, rt3, {0}, {}); }) == ErrorKind::ArityMismatch);
    CHECK(kind_of([&] { pp_eval(eta, rt3, {7}, {0}); }) == ErrorKind::PinOutOfRange);
}

TEST_CASE("pp_eval with a vertex pinned twice")
{
    PPFormula phi{Digraph(2, {{0, 1}}), {0}, {0}};
    auto c3 = directed_cycle(3);
    CHECK(pp_eval(phi, c3, {1}, {1}));
    CHECK_FALSE(pp_eval(phi, c3, {1}, {2}));
}

TEST_CASE("pp_eval agrees with brute force over total assignments")
{
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> small(1, 3), model_size(1, 4);
    for (int trial = 0 ; trial < 400 ; ++trial) {
        auto pattern = oracle::random_digraph(rng, small(rng), 0.45, trial % 2 == 0);
        auto model = oracle::random_digraph(rng, model_size(rng), 0.5, trial % 3 == 0);
        std::uniform_int_distribution<int> pv(0, pattern.size() - 1), mv(0, model.size() - 1), arity(0, 2);
        PPFormula phi{pattern, {}, {}};
        int a = arity(rng);
        for (int i = 0 ; i < a ; ++i) {
            phi.x_tuple.push_back(pv(rng));
            phi.y_tuple.push_back(pv(rng));
        }
        Tuple x, y;
        for (int i = 0 ; i < a ; ++i) {
            x.push_back(mv(rng));
            y.push_back(mv(rng));
        }
        CHECK(pp_eval(phi, model, x, y) == brute_eval(phi, model, x, y));
    }
}

TEST_CASE("classify_matrix")
{
    CHECK(classify_matrix({{false, true}, {false, false}}) == OrderVerdict::Strict);
    CHECK(classify_matrix({{true, true}, {false, true}}) == OrderVerdict::Nonstrict);
    CHECK(classify_matrix({{true, false}, {false, true}}) == OrderVerdict::Neither);
    CHECK(order_verdict_name(OrderVerdict::Nonstrict) == "NONSTRICT");
}

TEST_CASE("order_witness on the RT functor")
{
    for (int n = 0 ; n <= 6 ; ++n) {
        auto t = delta_truncation(std::max(n, 1));
        auto w = order_witness(t, rt_functor(t), n);
        REQUIRE(static_cast<int>(w.witness.tuples.size()) == n + 1);
        CHECK(w.witness.arity == 1);
        for (int j = 0 ; j <= n ; ++j)
            CHECK(w.witness.tuples[j] == Tuple{j});
        for (int i = 0 ; i <= n ; ++i)
            for (int j = 0 ; j <= n ; ++j)
                CHECK(w.matrix[i][j] == (i <= j));
        CHECK(w.verdict == OrderVerdict::Nonstrict);
        CHECK(w.degenerate == (n == 0));

        // soundness: a monotone h : [1] -> [n] with h(0) = i, h(1) = j gives eta(x^i, x^j)
        for (auto & h : delta_maps(1, n))
            CHECK(pp_eval(w.eta, w.witness.model, w.witness.tuples[h.values[0]], w.witness.tuples[h.values[1]]));
    }
}

TEST_CASE("order_witness preconditions")
{
    auto t = delta_truncation(2);
    auto f = rt_functor(t);
    CHECK(kind_of([&] { order_witness(t, f, 3); }) == ErrorKind::PreconditionFailed);

    auto constant = f;
    for (auto & g : constant.object_images) {
        g = Digraph(1, true);
        g.add_arc(0, 0);
    }
    for (auto & m : constant.morphism_images)
        m = VertexMap::identity(1);
    CHECK(kind_of([&] { order_witness(t, constant, 2); }) == ErrorKind::PreconditionFailed);
}

TEST_CASE("shift_strict")
{
    auto t = delta_truncation(4);
    auto w = order_witness(t, rt_functor(t), 4);
    auto s = shift_strict(w);
    CHECK(s.a_tuples.size() == 4);
    CHECK(s.b_tuples.size() == 4);
    CHECK(classify_matrix(s.matrix) == OrderVerdict::Strict);
    CHECK(check_order_property(w.eta, w.witness.model, s.a_tuples, s.b_tuples));
    for (int i = 0 ; i < 4 ; ++i)
        for (int j = 0 ; j < 4 ; ++j)
            CHECK(s.matrix[i][j] == pp_eval(w.eta, w.witness.model, s.a_tuples[i], s.b_tuples[j]));

    auto t1 = delta_truncation(1);
    auto w1 = order_witness(t1, rt_functor(t1), 1);
    auto s1 = shift_strict(w1);
    CHECK(s1.matrix.size() == 1);
    CHECK(classify_matrix(s1.matrix) == OrderVerdict::Strict);

    auto neither = w;
    neither.verdict = OrderVerdict::Neither;
    CHECK(kind_of([&] { shift_strict(neither); }) == ErrorKind::NotNonstrict);

    auto t0 = delta_truncation(1);
    auto w0 = order_witness(t0, rt_functor(t0), 0);
    CHECK(kind_of([&] { shift_strict(w0); }) == ErrorKind::NotNonstrict);
}

TEST_CASE("check_order_property")
{
    auto eta = rt_eta();
    auto rt4 = reflexive_transitive_tournament(4);
    std::vector<Tuple> same{{0}, {1}, {2}, {3}};
    CHECK_FALSE(check_order_property(eta, rt4, same, same));
    CHECK(check_order_property(eta, rt4, {}, {}));
    CHECK(check_order_property(eta, rt4, {{1}, {2}, {3}}, {{0}, {1}, {2}}));
    CHECK_FALSE(check_order_property(eta, rt4, {{0}, {1}, {2}}, {{1}, {2}, {3}}));
    CHECK(kind_of([&] { check_order_property(eta, rt4, {{0}}, {{0}, {1}}); }) == ErrorKind::ArityMismatch);
    CHECK(kind_of([&] { check_order_property(eta, rt4, {{0, 1}}, {{0}}); }) == ErrorKind::ArityMismatch);
}
