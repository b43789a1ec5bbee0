#include <univcat/category.hh>
#include <univcat/errors.hh>
#include <univcat/io.hh>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

using namespace univcat;

using std::istream;
using std::optional;
using std::string;
using std::stringstream;
using std::to_string;
using std::vector;

namespace fs = std::filesystem;

namespace
{
    // Meaningful lines, comments stripped, with their 1-based line numbers.
    class RecordReader
    {
        private:
            istream & _in;
            string _name;
            int _line_number = 0;

        public:
            RecordReader(istream & in, string name) :
                _in(in),
                _name(std::move(name))
            {
            }

            auto next() -> optional<vector<string>>
            {
                string line;
                while (std::getline(_in, line)) {
                    ++_line_number;
                    if (auto hash = line.find('#') ; hash != string::npos)
                        line.erase(hash);
                    stringstream tokens(line);
                    vector<string> words;
                    for (string w ; tokens >> w ; )
                        words.push_back(w);
                    if (! words.empty())
                        return words;
                }
                return std::nullopt;
            }

            auto error(const string & message) const -> Error
            {
                return Error(ErrorKind::ParseError, _name + ":" + to_string(_line_number) + ": " + message);
            }

            auto integer(const string & word) const -> int
            {
                try {
                    size_t used = 0;
                    int value = std::stoi(word, &used);
                    if (used != word.size())
                        throw error("expected an integer, found '" + word + "'");
                    return value;
                }
                catch (const std::logic_error &) {
                    throw error("expected an integer, found '" + word + "'");
                }
            }

            auto line_number() const -> int
            {
                return _line_number;
            }

            auto name() const -> const string &
            {
                return _name;
            }
    };

    auto open_input(const fs::path & path) -> std::ifstream
    {
        std::ifstream in(path);
        if (! in)
            throw Error(ErrorKind::IOError, "cannot open " + path.string());
        return in;
    }

    template <typename Add_>
    auto add_checked(RecordReader & reader, Add_ && add) -> void
    {
        try {
            if (! add())
                throw Error(ErrorKind::ConsistencyError, reader.name() + ":" + to_string(reader.line_number()) + ": duplicate record");
        }
        catch (const Error & e) {
            if (e.kind() == ErrorKind::ConsistencyError && string(e.what()).find(reader.name() + ":") == string::npos)
                throw Error(ErrorKind::ConsistencyError, reader.name() + ":" + to_string(reader.line_number()) + ": " + e.what());
            throw;
        }
    }
}

auto univcat::parse_graph(istream & in, const string & source_name) -> AnyGraph
{
    RecordReader reader(in, source_name);
    auto header = reader.next();
    if (! header || header->size() != 3)
        throw reader.error("expected a header 'D n m', 'U n m' or 'DL n m'");

    auto & kind = (*header)[0];
    int n = reader.integer((*header)[1]);
    int m = reader.integer((*header)[2]);
    if (n < 0 || m < 0)
        throw reader.error("negative counts in header");
    if (kind != "D" && kind != "U" && kind != "DL")
        throw reader.error("unknown graph kind '" + kind + "'");

    AnyGraph result = (kind == "U") ? AnyGraph{Graph(n)} : AnyGraph{Digraph(n, kind == "DL")};
    for (int i = 0 ; i < m ; ++i) {
        auto record = reader.next();
        if (! record)
            throw reader.error("expected " + to_string(m) + " arc lines, found " + to_string(i));
        if (record->size() != 2)
            throw reader.error("expected 'u v'");
        int u = reader.integer((*record)[0]), v = reader.integer((*record)[1]);
        add_checked(reader, [&] () {
                return std::visit([&] (auto & g) {
                        if constexpr (std::is_same_v<std::decay_t<decltype(g)>, Graph>)
                            return g.add_edge(u, v);
                        else
                            return g.add_arc(u, v);
                        }, result);
                });
    }

    if (reader.next())
        throw reader.error("more records than the header announces");
    return result;
}

auto univcat::parse_graph_file(const fs::path & path) -> AnyGraph
{
    auto in = open_input(path);
    return parse_graph(in, path.string());
}

auto univcat::serialize_graph(const AnyGraph & g) -> string
{
    stringstream out;
    std::visit([&] (auto & graph) {
            if constexpr (std::is_same_v<std::decay_t<decltype(graph)>, Graph>) {
                out << "U " << graph.size() << " " << graph.edge_count() << "\n";
                for (auto & [u, v] : graph.edges())
                    out << u << " " << v << "\n";
            }
            else {
                out << (graph.loops_allowed() ? "DL " : "D ") << graph.size() << " " << graph.arc_count() << "\n";
                for (auto & [u, v] : graph.arcs())
                    out << u << " " << v << "\n";
            }
            }, g);
    return out.str();
}

auto univcat::write_text_file(const fs::path & path, const string & text) -> void
{
    std::ofstream out(path);
    if (! out)
        throw Error(ErrorKind::IOError, "cannot write " + path.string());
    out << text;
    if (! out)
        throw Error(ErrorKind::IOError, "write failed for " + path.string());
}

auto univcat::to_dot(const AnyGraph & g, const DotOptions & options) -> string
{
    stringstream out;
    bool directed = std::holds_alternative<Digraph>(g);
    int n = std::visit([] (auto & graph) { return graph.size(); }, g);

    out << (directed ? "digraph " : "graph ") << "\"" << options.name << "\" {\n";
    for (int v = 0 ; v < n ; ++v) {
        out << "  " << v;
        if (std::find(options.highlight.begin(), options.highlight.end(), v) != options.highlight.end())
            out << " [style=filled, fillcolor=lightblue, shape=doublecircle]";
        out << ";\n";
    }

    if (directed)
        for (auto & [u, v] : std::get<Digraph>(g).arcs())
            out << "  " << u << " -> " << v << ";\n";
    else
        for (auto & [u, v] : std::get<Graph>(g).edges())
            out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

auto univcat::serialize_provenance(const ReplacedDigraph & replaced) -> string
{
    stringstream out;
    out << "# principal: base vertex -> result vertex; copy: result vertices of gadget vertices 0..L-1\n";
    out << "gadget " << replaced.gadget.length << " " << replaced.gadget.span
        << " " << replaced.gadget.a << " " << replaced.gadget.b << "\n";
    for (int u = 0 ; u < static_cast<int>(replaced.principal.size()) ; ++u)
        out << "principal " << u << " " << replaced.principal[u] << "\n";
    for (size_t e = 0 ; e < replaced.copies.size() ; ++e) {
        out << "copy " << e;
        for (int v : replaced.copies[e])
            out << " " << v;
        out << "\n";
    }
    return out.str();
}

auto univcat::parse_provenance_principals(istream & in) -> vector<int>
{
    RecordReader reader(in, "<provenance>");
    vector<int> result;
    while (auto record = reader.next())
        if ((*record)[0] == "principal") {
            if (record->size() != 3)
                throw reader.error("expected 'principal <base> <result>'");
            result.push_back(reader.integer((*record)[2]));
        }
    return result;
}

auto univcat::parse_category(istream & in) -> FinCategory
{
    RecordReader reader(in, "<category>");
    auto header = reader.next();
    if (! header || header->size() != 3 || (*header)[0] != "cat")
        throw reader.error("expected header 'cat t k'");

    FinCategory c;
    c.objects = reader.integer((*header)[1]);
    int k = reader.integer((*header)[2]);
    if (c.objects < 0 || k < 0)
        throw reader.error("negative counts in header");

    vector<char> seen_mor(k, 0);
    c.morphisms.resize(k);
    c.identities.assign(c.objects, -1);
    c.comp.assign(k, vector<int>(k, -1));

    auto in_range = [&] (int x, int bound, const string & what) {
        if (x < 0 || x >= bound)
            throw Error(ErrorKind::ConsistencyError, "<category>:" + to_string(reader.line_number()) + ": " + what + " " + to_string(x) + " out of range");
    };

    while (auto record = reader.next()) {
        auto & r = *record;
        if (r[0] == "mor" && r.size() == 4) {
            int id = reader.integer(r[1]);
            in_range(id, k, "morphism");
            if (seen_mor[id])
                throw Error(ErrorKind::ConsistencyError, "<category>: morphism " + to_string(id) + " declared twice");
            seen_mor[id] = 1;
            c.morphisms[id] = Morphism{reader.integer(r[2]), reader.integer(r[3])};
            in_range(c.morphisms[id].dom, c.objects, "object");
            in_range(c.morphisms[id].cod, c.objects, "object");
        }
        else if (r[0] == "id" && r.size() == 3) {
            int a = reader.integer(r[1]);
            in_range(a, c.objects, "object");
            c.identities[a] = reader.integer(r[2]);
            in_range(c.identities[a], k, "morphism");
        }
        else if (r[0] == "comp" && r.size() == 4) {
            int f = reader.integer(r[1]), g = reader.integer(r[2]), h = reader.integer(r[3]);
            in_range(f, k, "morphism");
            in_range(g, k, "morphism");
            in_range(h, k, "morphism");
            c.comp[f][g] = h;
        }
        else
            throw reader.error("unrecognised record '" + r[0] + "'");
    }

    if (std::find(seen_mor.begin(), seen_mor.end(), 0) != seen_mor.end())
        throw Error(ErrorKind::ConsistencyError, "<category>: not every morphism is declared");
    return c;
}

auto univcat::serialize_category(const FinCategory & c) -> string
{
    stringstream out;
    out << "# comp f g h means h = g after f\n";
    out << "cat " << c.objects << " " << c.morphism_count() << "\n";
    for (int f = 0 ; f < c.morphism_count() ; ++f)
        out << "mor " << f << " " << c.morphisms[f].dom << " " << c.morphisms[f].cod << "\n";
    for (int a = 0 ; a < c.objects ; ++a)
        out << "id " << a << " " << c.identities[a] << "\n";
    for (int f = 0 ; f < c.morphism_count() ; ++f)
        for (int g = 0 ; g < c.morphism_count() ; ++g)
            if (c.comp[f][g] != -1)
                out << "comp " << f << " " << g << " " << c.comp[f][g] << "\n";
    return out.str();
}

auto univcat::parse_functor_file(const fs::path & path) -> GraphFunctor
{
    auto in = open_input(path);
    RecordReader reader(in, path.string());
    auto directory = path.parent_path();

    GraphFunctor functor;
    bool have_source = false;
    vector<optional<Digraph>> objects;
    vector<optional<VertexMap>> morphisms;

    while (auto record = reader.next()) {
        auto & r = *record;
        if (r[0] == "source") {
            if (r.size() == 3 && r[1] == "delta")
                functor.source = delta_truncation(reader.integer(r[2])).category;
            else if (r.size() == 3 && r[1] == "category") {
                auto cin = open_input(directory / r[2]);
                functor.source = parse_category(cin);
            }
            else
                throw reader.error("expected 'source delta <level>' or 'source category <file>'");
            have_source = true;
            objects.assign(functor.source.objects, std::nullopt);
            morphisms.assign(functor.source.morphism_count(), std::nullopt);
        }
        else if (! have_source)
            throw reader.error("the source line must come first");
        else if (r[0] == "obj" && r.size() == 3) {
            int a = reader.integer(r[1]);
            if (a < 0 || a >= functor.source.objects)
                throw Error(ErrorKind::ConsistencyError, path.string() + ": object " + to_string(a) + " out of range");
            auto g = parse_graph_file(directory / r[2]);
            if (! std::holds_alternative<Digraph>(g))
                throw reader.error("object images must be digraphs");
            objects[a] = std::get<Digraph>(std::move(g));
        }
        else if (r[0] == "mor" && r.size() >= 2) {
            int f = reader.integer(r[1]);
            if (f < 0 || f >= functor.source.morphism_count())
                throw Error(ErrorKind::ConsistencyError, path.string() + ": morphism " + to_string(f) + " out of range");
            vector<int> images;
            for (size_t i = 2 ; i < r.size() ; ++i)
                images.push_back(reader.integer(r[i]));
            morphisms[f] = VertexMap{std::move(images)};
        }
        else
            throw reader.error("unrecognised record '" + r[0] + "'");
    }

    if (! have_source)
        throw Error(ErrorKind::ParseError, path.string() + ": missing source line");
    for (size_t a = 0 ; a < objects.size() ; ++a) {
        if (! objects[a])
            throw Error(ErrorKind::ConsistencyError, path.string() + ": no image for object " + to_string(a));
        functor.object_images.push_back(*objects[a]);
    }
    for (size_t f = 0 ; f < morphisms.size() ; ++f) {
        if (! morphisms[f])
            throw Error(ErrorKind::ConsistencyError, path.string() + ": no image for morphism " + to_string(f));
        functor.morphism_images.push_back(*morphisms[f]);
    }
    return functor;
}

auto univcat::write_functor_directory(const fs::path & directory, const GraphFunctor & functor, const string & source_line) -> void
{
    fs::create_directories(directory);
    stringstream out;
    out << source_line << "\n";
    for (size_t a = 0 ; a < functor.object_images.size() ; ++a) {
        auto name = "obj" + to_string(a) + ".txt";
        write_text_file(directory / name, serialize_graph(functor.object_images[a]));
        out << "obj " << a << " " << name << "\n";
    }
    for (size_t f = 0 ; f < functor.morphism_images.size() ; ++f) {
        out << "mor " << f;
        for (int v : functor.morphism_images[f].images())
            out << " " << v;
        out << "\n";
    }
    write_text_file(directory / "functor.txt", out.str());
}

auto univcat::parse_monoid(istream & in) -> MonoidTable
{
    RecordReader reader(in, "<monoid>");
    auto header = reader.next();
    if (! header || header->size() != 3 || (*header)[0] != "monoid")
        throw reader.error("expected header 'monoid k e'");

    MonoidTable m;
    m.order = reader.integer((*header)[1]);
    m.identity = reader.integer((*header)[2]);
    if (m.order < 1)
        throw reader.error("monoid order must be positive");
    for (int x = 0 ; x < m.order ; ++x) {
        auto row = reader.next();
        if (! row || static_cast<int>(row->size()) != m.order)
            throw reader.error("expected a row of " + to_string(m.order) + " entries");
        vector<int> values;
        for (auto & w : *row)
            values.push_back(reader.integer(w));
        m.mul.push_back(std::move(values));
    }
    if (reader.next())
        throw reader.error("trailing records after the table");
    return m;
}

auto univcat::serialize_monoid(const MonoidTable & m) -> string
{
    stringstream out;
    out << "monoid " << m.order << " " << m.identity << "\n";
    for (auto & row : m.mul) {
        for (size_t y = 0 ; y < row.size() ; ++y)
            out << (y ? " " : "") << row[y];
        out << "\n";
    }
    return out.str();
}
