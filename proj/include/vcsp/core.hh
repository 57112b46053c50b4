/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_CORE_HH
#define VCSP_CORE_HH 1

#include <vcsp/mapping.hh>
#include <vcsp/options.hh>
#include <vcsp/structure.hh>

#include <optional>

namespace vcsp
{
    struct CoreCheck
    {
        bool core;
        // a non-surjective mapping in the support of some self-IFH, when not a core
        std::optional<Mapping> witness;
    };

    auto is_core(const ValuedStructure & a, const Options & options = { }) -> CoreCheck;

    // An endomap whose image is strictly inside the image of g and which lies
    // in the support of some IFH from a to itself.
    auto reduction_step(const ValuedStructure & a, const Mapping & g, const Options & options = { }) -> std::optional<Mapping>;

    // Universe g(A) (names kept, in index order); each tuple sums the values
    // of its preimages.
    auto image_structure(const ValuedStructure & a, const Mapping & g) -> ValuedStructure;

    struct CoreResult
    {
        // endomap of a whose image is the core
        Mapping collapse;
        ValuedStructure core;
        // the same map, into the core's universe
        Mapping to_core;
    };

    auto compute_core(const ValuedStructure & a, const Options & options = { }) -> CoreResult;

    // A weighting c of the tuples of a, held as a structure over the same
    // signature and universe.
    struct CoreWeighting
    {
        ValuedStructure c;
    };

    auto core_weighting(const ValuedStructure & a, const Options & options = { }) -> CoreWeighting;

    struct CoreWeightingCheck
    {
        bool valid;
        // a non-surjective map violating the strict inequality
        std::optional<Mapping> counterexample;
    };

    auto validate_core_weighting(const ValuedStructure & a, const CoreWeighting & weighting,
            const Options & options = { }) -> CoreWeightingCheck;

    // Sum over tup(a) of f^a(x) * c(f, g(x)).
    auto weighted_cost(const ValuedStructure & a, const CoreWeighting & weighting, const Mapping & g) -> ExtRat;
}

#endif
