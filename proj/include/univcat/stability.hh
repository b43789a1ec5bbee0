#ifndef UNIVCAT_GUARD_STABILITY_HH
#define UNIVCAT_GUARD_STABILITY_HH 1

#include <univcat/category.hh>
#include <univcat/graph.hh>
#include <univcat/hom.hh>

#include <string_view>
#include <vector>

namespace univcat
{
    using Tuple = std::vector<int>;

    /**
     * A primitive-positive formula phi(x, y) = exists z . (z is a homomorphic
     * image of pattern) with x_tuple and y_tuple naming which pattern
     * vertices the free variables are equated with.
     *
     * Equalities are never stored as atoms: evaluation pins the named pattern
     * vertices, and a pattern vertex named twice must receive one value.
     */
    struct PPFormula
    {
        Digraph pattern;
        Tuple x_tuple;
        Tuple y_tuple;
    };

    /// The formula "i -> x_i is a homomorphism from g0".
    auto build_nu(const Digraph & g0) -> PPFormula;

    /// The formula "some homomorphism h : g1 -> model has x = h . phi_s and
    /// y = h . phi_t". Throws NotAHom if either map is not a homomorphism g0 -> g1.
    auto build_eta(const Digraph & g0, const Digraph & g1, const VertexMap & phi_s, const VertexMap & phi_t) -> PPFormula;

    /// Throws ArityMismatch if the assignments do not match the formula's
    /// tuples, PinOutOfRange on a value outside the model, and SizeBound if
    /// the step limit is exhausted before an answer.
    auto pp_eval(const PPFormula & phi, const Digraph & model, const Tuple & x_assign, const Tuple & y_assign,
            const EnumLimit & limit = {}) -> bool;

    enum class OrderVerdict
    {
        Strict,
        Nonstrict,
        Neither
    };

    auto order_verdict_name(OrderVerdict verdict) -> std::string_view;

    using BoolMatrix = std::vector<std::vector<bool>>;

    /// STRICT if m[i][j] <=> i < j, else NONSTRICT if m[i][j] <=> i <= j, else NEITHER.
    auto classify_matrix(const BoolMatrix & m) -> OrderVerdict;

    struct WitnessTuples
    {
        Digraph model;
        std::vector<Tuple> tuples;
        int arity = 0;
    };

    struct OrderWitness
    {
        PPFormula eta;
        WitnessTuples witness;
        BoolMatrix matrix;
        OrderVerdict verdict = OrderVerdict::Neither;
        /// n = 0: one tuple, nothing is being ordered.
        bool degenerate = false;
    };

    /**
     * Builds eta from F([0]), F([1]) and the images of the two maps [0] -> [1],
     * the tuples x^j = F(g_j) for the n+1 maps g_j : [0] -> [n], and the
     * matrix of eta(x^i, x^j) in F([n]).
     *
     * Throws PreconditionFailed if the truncation lacks [1] or [n], or if the
     * functor is not functorial and faithful.
     */
    auto order_witness(const SimplicialTruncation & truncation, const GraphFunctor & functor, int n,
            const EnumLimit & limit = {}) -> OrderWitness;

    struct StrictWitness
    {
        std::vector<Tuple> a_tuples;
        std::vector<Tuple> b_tuples;
        BoolMatrix matrix;
    };

    /// From a NONSTRICT witness on x^0..x^n, a_i = x^(i+1) and b_j = x^j for
    /// 0 <= i, j < n, so eta(a_i, b_j) <=> i + 1 <= j <=> i < j. The matrix is
    /// recomputed, not derived. Throws NotNonstrict otherwise (and for n = 0).
    auto shift_strict(const OrderWitness & witness, const EnumLimit & limit = {}) -> StrictWitness;

    /// True iff phi(a_i, b_j) holds in model exactly when i < j. Throws
    /// ArityMismatch on unequal list lengths or tuple arities.
    auto check_order_property(const PPFormula & phi, const Digraph & model,
            const std::vector<Tuple> & a_tuples, const std::vector<Tuple> & b_tuples,
            const EnumLimit & limit = {}) -> bool;
}

#endif
