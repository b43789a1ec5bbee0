#include <doctest.h>

#include "oracles.hh"

#include <univcat/category.hh>
#include <univcat/constructions.hh>
#include <univcat/errors.hh>
#include <univcat/gadget.hh>
#include <univcat/io.hh>
#include <univcat/representation.hh>
#include <univcat/suites.hh>

#include <filesystem>
#include <random>
#include <sstream>

using namespace univcat;

namespace
{
    auto parse_text(const std::string & text) -> AnyGraph
    {
        std::istringstream in(text);
        return parse_graph(in, "t");
    }

    auto error_of(const std::string & text) -> std::pair<ErrorKind, std::string>
    {
        try {
            parse_text(text);
        }
        catch (const Error & e) {
            return {e.kind(), e.what()};
        }
        FAIL("no error thrown");
        return {ErrorKind::ConsistencyError, ""};
    }

    auto count(const std::string & haystack, const std::string & needle) -> int
    {
        int n = 0;
        for (auto p = haystack.find(needle) ; p != std::string::npos ; p = haystack.find(needle, p + 1))
            ++n;
        return n;
    }

    auto scratch_dir(const std::string & name) -> std::filesystem::path
    {
        auto dir = std::filesystem::temp_directory_path() / ("univcat_test_" + name);
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
        return dir;
    }
}

TEST_CASE("parse_graph examples")
{
    auto k2 = parse_text("D 2 1\n0 1\n");
    CHECK(std::get<Digraph>(k2).arcs() == std::vector<Arc>{{0, 1}});

    auto k3 = parse_text("# triangle\nU 3 3\n0 1\n1 2  # closing soon\n\n2 0\n");
    CHECK(std::get<Graph>(k3).edges() == complete_graph(3).edges());

    auto [kind, message] = error_of("D 2 1\n0 2\n");
    CHECK(kind == ErrorKind::ConsistencyError);
    CHECK(message.find("t:2") != std::string::npos);
}

TEST_CASE("parse_graph errors carry line numbers")
{
    auto bad_header = error_of("X 2 1\n0 1\n");
    CHECK(bad_header.first == ErrorKind::ParseError);
    CHECK(bad_header.second.find("t:1") != std::string::npos);

    auto bad_int = error_of("D 2 1\n\n0 x\n");
    CHECK(bad_int.first == ErrorKind::ParseError);
    CHECK(bad_int.second.find("t:3") != std::string::npos);

    CHECK(error_of("D 2 2\n0 1\n").first == ErrorKind::ParseError);
    CHECK(error_of("D 2 1\n0 1\n1 0\n").first == ErrorKind::ParseError);
    CHECK(error_of("D 2 1\n0 1 1\n").first == ErrorKind::ParseError);
    CHECK(error_of("").first == ErrorKind::ParseError);
    CHECK(error_of("D 2 2\n0 1\n0 1\n").first == ErrorKind::ConsistencyError);
    CHECK(error_of("U 2 2\n0 1\n1 0\n").first == ErrorKind::ConsistencyError);
    CHECK(error_of("D 2 1\n1 1\n").first == ErrorKind::ConsistencyError);
    CHECK(error_of("D -1 0\n").first == ErrorKind::ParseError);

    auto looped = parse_text("DL 2 2\n1 1\n0 1\n");
    CHECK(std::get<Digraph>(looped).has_loop(1));
}

TEST_CASE("serialisation round trips")
{
    for (auto & g : oriented_catalog(3)) {
        auto text = serialize_graph(g);
        CHECK(std::get<Digraph>(parse_text(text)) == g);
        CHECK(serialize_graph(parse_text(text)) == text);
    }

    std::mt19937 rng(8);
    for (int trial = 0 ; trial < 30 ; ++trial) {
        auto d = oracle::random_digraph(rng, 5, 0.4, trial % 2 == 0);
        CHECK(std::get<Digraph>(parse_text(serialize_graph(d))) == d);
        auto u = oracle::random_graph(rng, 5, 0.4);
        CHECK(std::get<Graph>(parse_text(serialize_graph(u))).edges() == u.edges());
    }

    auto rt = reflexive_transitive_tournament(3);
    CHECK(serialize_graph(rt) == "DL 3 6\n0 0\n0 1\n0 2\n1 1\n1 2\n2 2\n");
}

TEST_CASE("DOT export")
{
    auto k2 = to_dot(Digraph(2, {{0, 1}}));
    CHECK(k2.rfind("digraph", 0) == 0);
    CHECK(count(k2, "->") == 1);
    CHECK(count(k2, ";\n") == 3);

    auto c6 = to_dot(cycle_graph(6));
    CHECK(c6.rfind("graph", 0) == 0);
    CHECK(count(c6, " -- ") == 6);
    CHECK(count(c6, "->") == 0);

    auto r = star_replace(directed_cycle(3), indicator_for_depth(1));
    std::istringstream prov(serialize_provenance(r));
    DotOptions options;
    options.highlight = parse_provenance_principals(prov);
    CHECK(options.highlight == std::vector<int>{0, 1, 2});
    auto marked = to_dot(r.result, options);
    CHECK(count(marked, "doublecircle") == 3);
    CHECK(count(marked, "->") == 18);
}

TEST_CASE("category and monoid formats round trip")
{
    for (auto c : {delta_truncation(2).category, arrow_category(), monoid_to_category({{0, 1}, {1, 0}}, 0)}) {
        std::istringstream in(serialize_category(c));
        auto back = parse_category(in);
        CHECK(back.objects == c.objects);
        CHECK(back.identities == c.identities);
        CHECK(back.comp == c.comp);
        CHECK(validate_category(back).ok);
    }

    std::istringstream undeclared("cat 1 2\nmor 0 0 0\nid 0 0\ncomp 0 0 0\n");
    CHECK_THROWS_AS(parse_category(undeclared), Error);
    std::istringstream out_of_range("cat 1 1\nmor 0 0 3\n");
    CHECK_THROWS_AS(parse_category(out_of_range), Error);

    for (auto & m : monoid_catalog(3)) {
        std::istringstream in(serialize_monoid(m));
        auto back = parse_monoid(in);
        CHECK(back.mul == m.mul);
        CHECK(back.identity == m.identity);
    }
    std::istringstream short_rows("monoid 2 0\n0 1\n1\n");
    CHECK_THROWS_AS(parse_monoid(short_rows), Error);
}

TEST_CASE("functor directories round trip")
{
    auto dir = scratch_dir("functor");
    auto t = delta_truncation(2);
    auto f = rt_functor(t);
    write_functor_directory(dir, f, "source delta 2");
    auto back = parse_functor_file(dir / "functor.txt");
    CHECK(back.object_images == f.object_images);
    CHECK(back.morphism_images == f.morphism_images);
    CHECK(back.source.comp == f.source.comp);

    auto arrow = arrow_category();
    auto r = represent_category(arrow, representation_size(arrow));
    auto cdir = scratch_dir("category");
    write_text_file(cdir / "category.txt", serialize_category(arrow));
    write_functor_directory(cdir, GraphFunctor{arrow, r.graphs, r.correspondence}, "source category category.txt");
    auto cback = parse_functor_file(cdir / "functor.txt");
    CHECK(cback.object_images == r.graphs);
    CHECK(check_graph_functor(cback).full);

    CHECK_THROWS_AS(parse_functor_file(dir / "missing.txt"), Error);
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(cdir);
}

TEST_CASE("run_suite exit codes and determinism")
{
    std::ostringstream unknown;
    CHECK(run_suite("bogus", unknown) == 2);

    std::ostringstream first, second;
    CHECK(run_suite("delta", first) == 0);
    CHECK(run_suite("delta", second) == 0);
    CHECK(first.str() == second.str());
    CHECK(first.str().find("RESULT: PASS delta\n") != std::string::npos);
}
