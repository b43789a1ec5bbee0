#include <univcat/category.hh>
#include <univcat/constructions.hh>
#include <univcat/density.hh>
#include <univcat/errors.hh>
#include <univcat/gadget.hh>
#include <univcat/hom.hh>
#include <univcat/io.hh>
#include <univcat/representation.hh>
#include <univcat/stability.hh>
#include <univcat/suites.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace univcat;

using std::cerr;
using std::cout;
using std::optional;
using std::string;
using std::vector;

namespace fs = std::filesystem;

namespace
{
    auto read_digraph(const string & path) -> Digraph
    {
        auto g = parse_graph_file(path);
        if (auto d = std::get_if<Digraph>(&g))
            return *d;
        throw Error(ErrorKind::BadParameter, path + " holds an undirected graph, a digraph is needed");
    }

    auto read_undirected(const string & path) -> Graph
    {
        auto g = parse_graph_file(path);
        if (auto u = std::get_if<Graph>(&g))
            return *u;
        return underlying(std::get<Digraph>(g));
    }

    auto print_map(std::ostream & out, const VertexMap & m) -> void
    {
        for (int v = 0 ; v < m.size() ; ++v)
            out << (v ? " " : "") << m(v);
        out << "\n";
    }

    auto print_matrix(std::ostream & out, const BoolMatrix & m) -> void
    {
        for (auto & row : m) {
            for (size_t j = 0 ; j < row.size() ; ++j)
                out << (j ? " " : "") << (row[j] ? 1 : 0);
            out << "\n";
        }
    }

    auto read_stream(const string & path) -> std::ifstream
    {
        std::ifstream in(path);
        if (! in)
            throw Error(ErrorKind::IOError, "cannot open " + path);
        return in;
    }

    auto gadget_from(optional<int> depth, optional<int> length, optional<int> span) -> IndicatorGadget
    {
        if (depth && (length || span))
            throw Error(ErrorKind::BadParameter, "give either --depth or --length with --span");
        if (depth)
            return indicator_for_depth(*depth);
        if (length && span)
            return make_gadget(*length, *span);
        throw Error(ErrorKind::BadParameter, "a gadget needs --depth, or --length and --span");
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Homomorphism and representation tools for small digraphs and categories"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> max_steps;
    app.add_option("--max-steps", max_steps, "search step limit, overriding UNIVCAT_MAX_STEPS");

    int exit_code = 0;
    auto limit = [&] () {
        auto l = EnumLimit::from_environment();
        if (max_steps)
            l.max_steps = *max_steps;
        return l;
    };

    // hom
    string hom_pattern, hom_target;
    bool hom_injective = false, hom_count = false;
    optional<std::size_t> hom_max_results;
    auto hom = app.add_subcommand("hom", "enumerate homomorphisms between two digraphs");
    hom->add_option("pattern", hom_pattern)->required()->check(CLI::ExistingFile);
    hom->add_option("target", hom_target)->required()->check(CLI::ExistingFile);
    hom->add_flag("--injective", hom_injective, "only injective homomorphisms");
    hom->add_flag("--count", hom_count, "print only the number found");
    hom->add_option("--max-results", hom_max_results)->check(CLI::PositiveNumber);
    hom->callback([&] () {
            auto l = limit();
            l.max_results = hom_max_results;
            auto g = read_digraph(hom_pattern), h = read_digraph(hom_target);
            auto e = hom_injective ? injective_hom_enumerate(g, h, {}, l) : hom_enumerate(g, h, {}, l);
            cout << "count " << e.maps.size() << (e.truncated ? " (truncated)" : "") << "\n";
            if (! hom_count)
                for (auto & m : e.maps)
                    print_map(cout, m);
            });

    // star
    string star_input, star_output;
    optional<int> star_depth, star_length, star_span;
    auto star = app.add_subcommand("star", "replace every arc by a copy of a rigid gadget");
    star->add_option("graph", star_input)->required()->check(CLI::ExistingFile);
    star->add_option("--depth", star_depth);
    star->add_option("--length", star_length);
    star->add_option("--span", star_span);
    star->add_option("-o,--output", star_output, "result graph; provenance goes to <output>.prov")->required();
    star->callback([&] () {
            auto replaced = star_replace(read_digraph(star_input), gadget_from(star_depth, star_length, star_span));
            write_text_file(star_output, serialize_graph(replaced.result));
            write_text_file(star_output + ".prov", serialize_provenance(replaced));
            cout << "vertices " << replaced.result.size() << " arcs " << replaced.result.arc_count() << "\n";
            });

    // verify-lemma1
    string v1_g, v1_h;
    int v1_depth = 1;
    auto v1 = app.add_subcommand("verify-lemma1", "compare Hom(G,H) with Hom(G*I,H*I)");
    v1->add_option("G", v1_g)->required()->check(CLI::ExistingFile);
    v1->add_option("H", v1_h)->required()->check(CLI::ExistingFile);
    v1->add_option("--depth", v1_depth)->check(CLI::PositiveNumber);
    v1->callback([&] () {
            auto r = verify_full_faithful_pair(read_digraph(v1_g), read_digraph(v1_h), indicator_for_depth(v1_depth), limit());
            cout << "base homs " << r.base_homs << "\n"
                << "replaced homs " << r.replaced_homs << "\n"
                << "lift injective " << r.lift_injective << "\n"
                << "lifts are homs " << r.lifts_are_homs << "\n"
                << "all project " << r.all_project << "\n"
                << "truncated " << r.truncated << "\n"
                << "bijection " << r.bijection << "\n";
            if (! r.bijection)
                exit_code = 1;
            });

    // delta
    int delta_level = 2;
    string delta_output;
    auto delta = app.add_subcommand("delta", "list a truncation of the simplex category");
    delta->add_option("--level", delta_level)->check(CLI::NonNegativeNumber);
    delta->add_option("--rt-functor", delta_output, "write the tournament functor to this directory");
    delta->callback([&] () {
            auto t = delta_truncation(delta_level);
            cout << "objects " << t.category.objects << " morphisms " << t.category.morphism_count() << "\n";
            for (int f = 0 ; f < t.category.morphism_count() ; ++f) {
                cout << f << ": [" << t.maps[f].dom << "] -> [" << t.maps[f].cod << "]";
                for (int v : t.maps[f].values)
                    cout << " " << v;
                cout << "\n";
            }
            if (! delta_output.empty())
                write_functor_directory(delta_output, rt_functor(t), "source delta " + std::to_string(delta_level));
            });

    // order-witness
    string ow_functor;
    bool ow_rt = false;
    int ow_n = 1;
    optional<int> ow_level;
    auto ow = app.add_subcommand("order-witness", "build the order formula and witness tuples for a functor");
    ow->add_option("--functor", ow_functor)->check(CLI::ExistingFile);
    ow->add_flag("--rt", ow_rt, "use reflexive transitive tournaments");
    ow->add_option("--n", ow_n)->check(CLI::NonNegativeNumber);
    ow->add_option("--level", ow_level, "truncation level of the functor's source")->check(CLI::NonNegativeNumber);
    ow->callback([&] () {
            if (ow_rt == ! ow_functor.empty())
                throw Error(ErrorKind::BadParameter, "give exactly one of --rt and --functor");
            auto t = delta_truncation(ow_level.value_or(std::max(ow_n, 1)));
            auto functor = ow_rt ? rt_functor(t) : parse_functor_file(ow_functor);
            auto w = order_witness(t, functor, ow_n, limit());
            cout << "formula pattern vertices " << w.eta.pattern.size() << " arcs " << w.eta.pattern.arc_count() << "\n";
            cout << "model vertices " << w.witness.model.size() << "\n";
            cout << "matrix\n";
            print_matrix(cout, w.matrix);
            cout << "verdict " << order_verdict_name(w.verdict) << (w.degenerate ? " (degenerate)" : "") << "\n";
            if (w.verdict == OrderVerdict::Nonstrict && w.witness.tuples.size() >= 2) {
                auto s = shift_strict(w, limit());
                bool holds = check_order_property(w.eta, w.witness.model, s.a_tuples, s.b_tuples, limit());
                cout << "shifted matrix\n";
                print_matrix(cout, s.matrix);
                cout << "shifted verdict " << order_verdict_name(classify_matrix(s.matrix)) << (holds ? "" : " (does not re-evaluate)") << "\n";
                if (! holds)
                    exit_code = 1;
            }
            });

    // density
    vector<string> density_inputs;
    int density_pmax = 2, density_nmax = 4;
    bool density_upto = false;
    auto density = app.add_subcommand("density", "largest subdivided cliques in a sample of graphs");
    density->add_option("graphs", density_inputs)->required()->check(CLI::ExistingFile);
    density->add_option("--pmax", density_pmax)->check(CLI::NonNegativeNumber);
    density->add_option("--nmax", density_nmax)->check(CLI::Range(2, 64));
    density->add_flag("--upto", density_upto, "count a clique at depth q <= p for p");
    density->callback([&] () {
            vector<Graph> sample;
            for (auto & path : density_inputs)
                sample.push_back(read_undirected(path));
            auto profile = density_profile(sample, density_pmax, density_nmax, density_upto, limit());
            cout << "# finite sample only; says nothing about a whole class\n";
            for (int p = 0 ; p <= density_pmax ; ++p) {
                auto & cell = profile.table[p];
                cout << "p=" << p << " ";
                if (cell.clique_size)
                    cout << "N=" << *cell.clique_size << " depth " << cell.depth << " member " << density_inputs[cell.member];
                else
                    cout << "none";
                cout << (cell.truncated ? " (truncated)" : "") << "\n";
            }
            });

    // represent
    string rep_monoid, rep_category, rep_output;
    optional<int> rep_half_length;
    auto rep = app.add_subcommand("represent", "build and verify a digraph representation");
    auto rep_m = rep->add_option("--monoid", rep_monoid)->check(CLI::ExistingFile);
    auto rep_c = rep->add_option("--category", rep_category)->check(CLI::ExistingFile);
    rep_m->excludes(rep_c);
    rep->add_option("--half-length", rep_half_length, "gadget half length for a category")->check(CLI::PositiveNumber);
    rep->add_option("-o,--output", rep_output)->required();
    rep->callback([&] () {
            if (rep_monoid.empty() == rep_category.empty())
                throw Error(ErrorKind::BadParameter, "give exactly one of --monoid and --category");
            fs::create_directories(rep_output);
            RepresentationResult r;
            if (! rep_monoid.empty()) {
                auto in = read_stream(rep_monoid);
                r = represent_monoid(parse_monoid(in));
                write_text_file(fs::path(rep_output) / "graph.txt", serialize_graph(r.graphs.at(0)));
                write_text_file(fs::path(rep_output) / "base.txt", serialize_graph(r.bases.at(0)));
                std::ostringstream maps;
                for (size_t x = 0 ; x < r.correspondence.size() ; ++x) {
                    maps << "element " << x << ":";
                    for (int v : r.correspondence[x].images())
                        maps << " " << v;
                    maps << "\n";
                }
                write_text_file(fs::path(rep_output) / "correspondence.txt", maps.str());
            }
            else {
                auto in = read_stream(rep_category);
                auto c = parse_category(in);
                r = represent_category(c, rep_half_length.value_or(representation_size(c)));
                write_text_file(fs::path(rep_output) / "category.txt", serialize_category(c));
                GraphFunctor functor{c, r.graphs, r.correspondence};
                write_functor_directory(rep_output, functor, "source category category.txt");
            }
            write_text_file(fs::path(rep_output) / "certificate.txt", r.certificate);
            cout << r.certificate;
            cout << "verified " << r.verified << "\n";
            if (! r.verified)
                exit_code = 1;
            });

    // export-dot
    string dot_input, dot_output, dot_provenance, dot_name = "G";
    auto dot = app.add_subcommand("export-dot", "write a graph in DOT format");
    dot->add_option("graph", dot_input)->required()->check(CLI::ExistingFile);
    dot->add_option("-o,--output", dot_output)->required();
    dot->add_option("--provenance", dot_provenance, "highlight the principal vertices named in a star sidecar")->check(CLI::ExistingFile);
    dot->add_option("--name", dot_name);
    dot->callback([&] () {
            DotOptions options;
            options.name = dot_name;
            if (! dot_provenance.empty()) {
                auto in = read_stream(dot_provenance);
                options.highlight = parse_provenance_principals(in);
            }
            write_text_file(dot_output, to_dot(parse_graph_file(dot_input), options));
            });

    // suite
    string suite_name;
    auto suite = app.add_subcommand("suite", "run a bundled verification suite");
    suite->add_option("name", suite_name, "one of lemma1, lemma2, delta, density, represent")->required();
    suite->callback([&] () {
            exit_code = run_suite(suite_name, cout, limit());
            });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return 2;
    }
    catch (const Error & e) {
        cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::RepresentationFailed ? 1 : 2;
    }
    catch (const fs::filesystem_error & e) {
        cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return exit_code;
}
