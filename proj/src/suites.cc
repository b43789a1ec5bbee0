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

#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

using namespace univcat;

using std::ostream;
using std::set;
using std::string;
using std::to_string;
using std::vector;

namespace
{
    class Report
    {
        private:
            ostream & _out;
            int _failures = 0;
            int _checks = 0;

        public:
            explicit Report(ostream & out) :
                _out(out)
            {
            }

            auto check(bool ok, const string & what) -> bool
            {
                ++_checks;
                if (! ok)
                    ++_failures;
                _out << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
                return ok;
            }

            auto note(const string & what) -> void
            {
                _out << "       " << what << "\n";
            }

            auto finish(const string & name) -> int
            {
                _out << "checks: " << _checks << ", failures: " << _failures << "\n";
                _out << "RESULT: " << (_failures == 0 ? "PASS " : "FAIL ") << name << "\n";
                return _failures == 0 ? 0 : 1;
            }
    };

    auto describe(const Digraph & g) -> string
    {
        string s = to_string(g.size()) + "v{";
        bool first = true;
        for (auto & [u, v] : g.arcs()) {
            s += (first ? "" : ",") + to_string(u) + ">" + to_string(v);
            first = false;
        }
        return s + "}";
    }

    auto binomial(int n, int k) -> long
    {
        long r = 1;
        for (int i = 1 ; i <= k ; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    auto suite_lemma1(Report & report, const EnumLimit & limit) -> void
    {
        auto catalog = oriented_catalog(3);
        report.note("catalog: " + to_string(catalog.size()) + " oriented graphs on at most 3 vertices");

        for (int d : {1, 2}) {
            auto gadget = indicator_for_depth(d);
            int pairs = 0, good = 0;
            for (auto & g : catalog)
                for (auto & h : catalog) {
                    ++pairs;
                    auto r = verify_full_faithful_pair(g, h, gadget, limit);
                    if (r.bijection)
                        ++good;
                    else
                        report.note("d=" + to_string(d) + " " + describe(g) + " -> " + describe(h)
                                + ": |Hom| " + to_string(r.base_homs) + " vs " + to_string(r.replaced_homs)
                                + (r.lift_injective ? "" : ", lift not injective")
                                + (r.all_project ? "" : ", some hom does not project"));
                }
            report.check(good == pairs, "bijection d=" + to_string(d) + ": " + to_string(good) + "/" + to_string(pairs) + " pairs");

            int short_ok = 0;
            for (auto & g : catalog) {
                auto r = short_cycle_copies_check(star_replace(g, gadget));
                if (r.holds)
                    ++short_ok;
                else
                    report.note("d=" + to_string(d) + " " + describe(g) + ": " + to_string(r.offending.size())
                            + " cycle(s) of length <= " + to_string(gadget.length) + " that are not copies");
            }
            report.check(short_ok == static_cast<int>(catalog.size()), "short cycles are copies d=" + to_string(d)
                    + ": " + to_string(short_ok) + "/" + to_string(catalog.size()));

            int embed_ok = 0;
            for (auto & g : catalog) {
                try {
                    embed_in_subdivided_clique(star_replace(g, gadget));
                    ++embed_ok;
                }
                catch (const Error & e) {
                    report.note(describe(g) + ": " + e.what());
                }
            }
            report.check(embed_ok == static_cast<int>(catalog.size()), "subdivided clique containment d=" + to_string(d)
                    + ": " + to_string(embed_ok) + "/" + to_string(catalog.size()));
        }

        for (int length : {6, 9, 12}) {
            int rigid = 0, spans = 0;
            for (int s = 1 ; s <= length - 2 ; ++s) {
                ++spans;
                auto gadget = make_gadget(length, s);
                if (endomorphisms(gadget.cycle, limit).maps.size() == 1)
                    ++rigid;
            }
            report.check(rigid == spans, "gadget rigidity L=" + to_string(length) + ": " + to_string(rigid) + "/" + to_string(spans) + " spans");
        }
    }

    auto suite_lemma2(Report & report, const EnumLimit & limit) -> void
    {
        for (int n = 0 ; n <= 6 ; ++n) {
            auto truncation = delta_truncation(std::max(n, 1));
            auto functor = rt_functor(truncation);
            auto witness = order_witness(truncation, functor, n, limit);

            bool shape = static_cast<int>(witness.matrix.size()) == n + 1;
            for (int i = 0 ; shape && i <= n ; ++i)
                for (int j = 0 ; j <= n ; ++j)
                    if (witness.matrix[i][j] != (i <= j))
                        shape = false;
            report.check(shape, "n=" + to_string(n) + ": matrix is [i <= j], verdict " + string(order_verdict_name(witness.verdict))
                    + (witness.degenerate ? " (degenerate)" : ""));
            if (n == 0)
                continue;

            report.check(witness.verdict == OrderVerdict::Nonstrict, "n=" + to_string(n) + ": NONSTRICT");
            auto strict = shift_strict(witness, limit);
            bool strict_shape = classify_matrix(strict.matrix) == OrderVerdict::Strict;
            bool holds = check_order_property(witness.eta, witness.witness.model, strict.a_tuples, strict.b_tuples, limit);
            report.check(strict_shape && holds, "n=" + to_string(n) + ": shifted witness is STRICT and re-evaluates");
        }
    }

    auto suite_delta(Report & report, const EnumLimit & limit) -> void
    {
        bool counts = true;
        for (int i = 0 ; i <= 5 ; ++i)
            for (int j = 0 ; j <= 5 ; ++j) {
                auto maps = delta_maps(i, j);
                long brute = 0;
                vector<int> values(i + 1, 0);
                while (true) {
                    bool monotone = true;
                    for (int x = 0 ; x + 1 <= i ; ++x)
                        if (values[x] > values[x + 1])
                            monotone = false;
                    if (monotone)
                        ++brute;
                    int x = 0;
                    while (x <= i && ++values[x] > j)
                        values[x++] = 0;
                    if (x > i)
                        break;
                }
                if (static_cast<long>(maps.size()) != binomial(i + j + 1, i + 1) || static_cast<long>(maps.size()) != brute) {
                    counts = false;
                    report.note("|delta_maps(" + to_string(i) + "," + to_string(j) + ")| = " + to_string(maps.size()));
                }
            }
        report.check(counts, "|delta_maps(i,j)| = C(i+j+1, i+1) = exhaustive count for 0 <= i,j <= 5");

        auto faces = delta_maps(0, 1);
        report.check(faces.size() == 2 && faces[0].values == vector<int>{0} && faces[1].values == vector<int>{1},
                "delta_maps(0,1) is exactly the two face maps");
        bool points = true;
        for (int n = 0 ; n <= 6 ; ++n)
            if (static_cast<int>(delta_maps(0, n).size()) != n + 1)
                points = false;
        report.check(points, "delta_maps(0,n) has n+1 maps for n <= 6");

        for (int level = 0 ; level <= 3 ; ++level) {
            auto truncation = delta_truncation(level);
            auto valid = validate_category(truncation.category);
            report.check(valid.ok, "truncation " + to_string(level) + " is a category (" + to_string(truncation.category.morphism_count()) + " morphisms)");
            auto r = check_graph_functor(rt_functor(truncation), limit);
            report.check(r.functorial && r.faithful && r.full, "RT functor on truncation " + to_string(level) + " is full and faithful");
        }
    }

    auto suite_density(Report & report, const EnumLimit & limit) -> void
    {
        bool identities = true;
        for (int p = 0 ; p <= 2 ; ++p)
            for (int n = 2 ; n <= 4 ; ++n) {
                vector<Graph> sample{subdivide(complete_graph(n), p)};
                auto profile = density_profile(sample, p, n, false, limit);
                auto & cell = profile.table[p];
                bool ok = cell.clique_size && *cell.clique_size == n && profile_is_consistent(sample, profile, limit);
                if (! ok) {
                    identities = false;
                    report.note("Sub_" + to_string(p) + "(K_" + to_string(n) + ") profile disagrees");
                }
            }
        report.check(identities, "Sub_p(K_N) has table[p] = N for p <= 2, N <= 4");

        vector<Graph> trees;
        for (int n = 2 ; n <= 8 ; ++n) {
            Graph path(n), star(n), caterpillar(n);
            for (int v = 1 ; v < n ; ++v) {
                path.add_edge(v - 1, v);
                star.add_edge(0, v);
                caterpillar.add_edge(v / 2, v);
            }
            trees.push_back(path);
            trees.push_back(star);
            trees.push_back(caterpillar);
        }
        auto profile = density_profile(trees, 2, 4, false, limit);
        bool none = true;
        for (auto & cell : profile.table)
            if (cell.clique_size && *cell.clique_size >= 3)
                none = false;
        report.check(none, "trees contain no Sub_p(K_N) for N >= 3, p <= 2");
        report.check(profile_is_consistent(trees, profile, limit), "tree profile witnesses validate and are monotone in N");

        auto replaced = replaced_class_profile(oriented_catalog(3), 1, 2, 4, limit);
        int max_degeneracy = 0;
        for (int g : replaced.degeneracies)
            max_degeneracy = std::max(max_degeneracy, g);
        report.check(profile_is_consistent(replaced.members, replaced.profile, limit), "replaced catalog profile validates");
        report.check(max_degeneracy <= 2, "replaced catalog members are 2-degenerate (max " + to_string(max_degeneracy) + ")");
    }

    auto suite_represent(Report & report, const EnumLimit &) -> void
    {
        auto monoids = monoid_catalog(3);
        report.note("monoids of order <= 3 up to isomorphism: " + to_string(monoids.size()));
        for (size_t i = 0 ; i < monoids.size() ; ++i) {
            auto & m = monoids[i];
            string label = "monoid " + to_string(i) + " (order " + to_string(m.order) + ")";
            try {
                auto r = represent_monoid(m);
                report.check(r.verified, label + ": End(G) has " + to_string(r.hom_counts.at(0)) + " elements, graph on "
                        + to_string(r.graphs.at(0).size()) + " vertices");
            }
            catch (const Error & e) {
                report.check(false, label + ": " + e.what());
            }
        }

        vector<std::pair<string, FinCategory>> categories{
            {"Z2", monoid_to_category({{0, 1}, {1, 0}}, 0)},
            {"discrete(2)", discrete_category(2)},
            {"arrow", arrow_category()}};
        vector<FinCategory> batch;
        for (auto & [name, c] : categories) {
            try {
                auto r = represent_category(c, representation_size(c));
                report.check(r.verified, name + ": full and faithful");
            }
            catch (const Error & e) {
                report.check(false, name + ": " + e.what());
            }
            batch.push_back(c);
        }

        auto b = represent_batch(batch);
        string lengths;
        for (int n : b.half_lengths)
            lengths += " " + to_string(n);
        bool all_verified = true;
        for (auto & r : b.results)
            all_verified = all_verified && r.verified;
        report.check(all_verified, "batch: every category verifies with separated half lengths" + lengths);
        report.check(b.cross_empty, "batch: " + to_string(b.cross_pairs) + " cross-category pairs have no homomorphisms");
    }
}

auto univcat::suite_names() -> vector<string>
{
    return {"lemma1", "lemma2", "delta", "density", "represent"};
}

auto univcat::run_suite(const string & name, ostream & out, const EnumLimit & limit) -> int
{
    static const std::map<string, std::function<void (Report &, const EnumLimit &)>> suites{
        {"lemma1", suite_lemma1},
        {"lemma2", suite_lemma2},
        {"delta", suite_delta},
        {"density", suite_density},
        {"represent", suite_represent}};

    auto s = suites.find(name);
    if (s == suites.end()) {
        out << "unknown suite '" << name << "'\n";
        return 2;
    }

    out << "suite " << name << "\n";
    Report report(out);
    try {
        s->second(report, limit);
    }
    catch (const Error & e) {
        out << "error: " << e.what() << "\n";
        out << "RESULT: FAIL " << name << "\n";
        return 2;
    }
    return report.finish(name);
}
