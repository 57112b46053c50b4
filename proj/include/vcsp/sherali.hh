/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_SHERALI_HH
#define VCSP_SHERALI_HH 1

#include <vcsp/core.hh>
#include <vcsp/lp.hh>
#include <vcsp/mapping.hh>
#include <vcsp/options.hh>
#include <vcsp/structure.hh>
#include <vcsp/width.hh>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace vcsp
{
    // One positive tuple of the extended left structure. The k-ary symbol
    // that is constant 1 on the left and 0 on the right has no symbol index.
    struct SaFamily
    {
        std::optional<std::size_t> symbol;
        Tuple tuple;
        VertexSet scope;
        ExtRat value;
    };

    struct SAInstance
    {
        unsigned level;
        std::size_t target_size;
        std::vector<SaFamily> families;
        // per family, per assignment code; empty when the variable is forced to zero
        std::vector<std::vector<std::optional<VarId> > > variables;
        // (family, code) pairs whose product is infinite
        std::vector<std::pair<std::size_t, std::size_t> > forced_zero;
        LinProgram lp;

        // Values of an assignment code over the family's scope, in scope order.
        auto assignment(std::size_t family, std::size_t code) const -> std::vector<Element>;
        // Code of the restriction of a mapping to the family's scope.
        auto code_of(std::size_t family, const Mapping & h) const -> std::size_t;
    };

    // With canonical set, the k-ary families are indexed by element subsets
    // of size at most k; otherwise one family per k-tuple, with the
    // marginalisation constraints stated pairwise.
    auto build_sa(const ValuedStructure & a, const ValuedStructure & b, unsigned k,
            const Options & options = { }, bool canonical = true) -> SAInstance;

    struct SaSolution
    {
        // infinite when the program is infeasible
        ExtRat value;
        // empty unless the value is finite
        std::vector<Rational> lambda;
    };

    auto solve_sa(const SAInstance & instance, const Options & options = { }) -> SaSolution;

    auto opt_k(const ValuedStructure & a, const ValuedStructure & b, unsigned k,
            const Options & options = { }) -> SaSolution;

    // The 0/1 solution induced by a mapping, or nothing if the mapping hits a
    // forced-zero variable.
    auto integral_solution(const SAInstance & instance, const Mapping & h) -> std::optional<std::vector<Rational> >;

    struct TightnessCertificate
    {
        bool tight;
        CoreResult core;
        WidthResult twms;
        OverlapResult overlap;
    };

    auto sa_tight_decide(const ValuedStructure & a, unsigned k, const Options & options = { }) -> TightnessCertificate;

    struct GadgetParams
    {
        CoreWeighting c_star;
        Rational m_star;
        ExtRat delta;
        // first projection, from the gadget universe onto a
        Mapping projection;

        // treewidth gadget: base vertex and incident edges (by neighbour) per vertex
        std::optional<Element> base;
        std::vector<std::vector<Element> > edges;

        // overlap gadget: the chosen pair, index sets and the pair enumeration
        std::optional<std::pair<Entry, Entry> > chosen;
        std::vector<std::size_t> index_x, index_y;
        std::vector<std::pair<Entry, Entry> > pairs;
    };

    struct Gadget
    {
        ValuedStructure structure;
        GadgetParams params;
    };

    auto gap_instance_treewidth(const ValuedStructure & a, unsigned k, const Options & options = { }) -> Gadget;
    auto gap_instance_overlap(const ValuedStructure & a, unsigned k, const Options & options = { }) -> Gadget;
}

#endif
