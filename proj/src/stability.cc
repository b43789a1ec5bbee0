#include <univcat/errors.hh>
#include <univcat/stability.hh>

#include <string>

using namespace univcat;

using std::string;
using std::to_string;
using std::vector;

auto univcat::build_nu(const Digraph & g0) -> PPFormula
{
    PPFormula phi{g0, {}, {}};
    for (int v = 0 ; v < g0.size() ; ++v)
        phi.x_tuple.push_back(v);
    return phi;
}

auto univcat::build_eta(const Digraph & g0, const Digraph & g1, const VertexMap & phi_s, const VertexMap & phi_t) -> PPFormula
{
    if (! is_hom(g0, g1, phi_s))
        throw Error(ErrorKind::NotAHom, "phi_s is not a homomorphism");
    if (! is_hom(g0, g1, phi_t))
        throw Error(ErrorKind::NotAHom, "phi_t is not a homomorphism");
    return PPFormula{g1, phi_s.images(), phi_t.images()};
}

auto univcat::pp_eval(const PPFormula & phi, const Digraph & model, const Tuple & x_assign, const Tuple & y_assign,
        const EnumLimit & limit) -> bool
{
    if (x_assign.size() != phi.x_tuple.size() || y_assign.size() != phi.y_tuple.size())
        throw Error(ErrorKind::ArityMismatch, "assignment arity does not match the formula");

    Pins pins;
    vector<int> pinned(phi.pattern.size(), -1);
    auto add = [&] (const Tuple & vars, const Tuple & values) -> bool {
        for (std::size_t i = 0 ; i < vars.size() ; ++i) {
            int z = vars[i], value = values[i];
            if (z < 0 || z >= phi.pattern.size() || value < 0 || value >= model.size())
                throw Error(ErrorKind::PinOutOfRange, "pin " + to_string(z) + " -> " + to_string(value) + " is out of range");
            if (pinned[z] != -1 && pinned[z] != value)
                return false;
            pinned[z] = value;
            pins.emplace_back(z, value);
        }
        return true;
    };

    if (! add(phi.x_tuple, x_assign) || ! add(phi.y_tuple, y_assign))
        return false;
    return hom_exists(phi.pattern, model, pins, limit);
}

auto univcat::order_verdict_name(OrderVerdict verdict) -> std::string_view
{
    switch (verdict) {
        case OrderVerdict::Strict: return "STRICT";
        case OrderVerdict::Nonstrict: return "NONSTRICT";
        case OrderVerdict::Neither: return "NEITHER";
    }
    return "NEITHER";
}

auto univcat::classify_matrix(const BoolMatrix & m) -> OrderVerdict
{
    bool strict = true, nonstrict = true;
    for (std::size_t i = 0 ; i < m.size() ; ++i) {
        if (m[i].size() != m.size())
            return OrderVerdict::Neither;
        for (std::size_t j = 0 ; j < m.size() ; ++j) {
            strict = strict && (m[i][j] == (i < j));
            nonstrict = nonstrict && (m[i][j] == (i <= j));
        }
    }
    if (strict)
        return OrderVerdict::Strict;
    if (nonstrict)
        return OrderVerdict::Nonstrict;
    return OrderVerdict::Neither;
}

auto univcat::order_witness(const SimplicialTruncation & truncation, const GraphFunctor & functor, int n,
        const EnumLimit & limit) -> OrderWitness
{
    if (n < 0 || truncation.level < std::max(1, n))
        throw Error(ErrorKind::PreconditionFailed, "truncation must contain [0], [1] and [" + to_string(n) + "]");
    if (functor.source != truncation.category)
        throw Error(ErrorKind::PreconditionFailed, "functor is not defined on this truncation");

    auto report = check_graph_functor(functor, EnumLimit{std::nullopt, limit.max_steps});
    if (! report.functorial || ! report.faithful)
        throw Error(ErrorKind::PreconditionFailed, "functor must be functorial and faithful: " + report.witness);

    auto image = [&] (const OrdinalMap & m) -> const VertexMap & {
        return functor.morphism_images[truncation.morphism_id(m)];
    };

    const auto & g0 = functor.object_images[0];
    const auto & g1 = functor.object_images[1];
    auto to_one = delta_maps(0, 1);

    OrderWitness result;
    result.eta = build_eta(g0, g1, image(to_one[0]), image(to_one[1]));
    result.witness.model = functor.object_images[n];
    result.witness.arity = g0.size();
    for (auto & g : delta_maps(0, n))
        result.witness.tuples.push_back(image(g).images());

    auto & tuples = result.witness.tuples;
    result.matrix.assign(tuples.size(), vector<bool>(tuples.size()));
    for (std::size_t i = 0 ; i < tuples.size() ; ++i)
        for (std::size_t j = 0 ; j < tuples.size() ; ++j)
            result.matrix[i][j] = pp_eval(result.eta, result.witness.model, tuples[i], tuples[j], limit);

    result.verdict = classify_matrix(result.matrix);
    result.degenerate = (0 == n);
    return result;
}

auto univcat::shift_strict(const OrderWitness & witness, const EnumLimit & limit) -> StrictWitness
{
    if (witness.verdict != OrderVerdict::Nonstrict || witness.witness.tuples.size() < 2)
        throw Error(ErrorKind::NotNonstrict, "shifting needs a NONSTRICT witness on at least two tuples");

    auto & tuples = witness.witness.tuples;
    auto n = tuples.size() - 1;

    StrictWitness result;
    for (std::size_t i = 0 ; i < n ; ++i) {
        result.a_tuples.push_back(tuples[i + 1]);
        result.b_tuples.push_back(tuples[i]);
    }

    result.matrix.assign(n, vector<bool>(n));
    for (std::size_t i = 0 ; i < n ; ++i)
        for (std::size_t j = 0 ; j < n ; ++j)
            result.matrix[i][j] = pp_eval(witness.eta, witness.witness.model, result.a_tuples[i], result.b_tuples[j], limit);
    return result;
}

auto univcat::check_order_property(const PPFormula & phi, const Digraph & model,
        const vector<Tuple> & a_tuples, const vector<Tuple> & b_tuples, const EnumLimit & limit) -> bool
{
    if (a_tuples.size() != b_tuples.size())
        throw Error(ErrorKind::ArityMismatch, "tuple lists have different lengths");

    for (std::size_t i = 0 ; i < a_tuples.size() ; ++i)
        for (std::size_t j = 0 ; j < b_tuples.size() ; ++j)
            if (pp_eval(phi, model, a_tuples[i], b_tuples[j], limit) != (i < j))
                return false;
    return true;
}
