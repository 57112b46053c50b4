/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_SEARCH_HH
#define VCSP_SEARCH_HH 1

#include <vcsp/mapping.hh>
#include <vcsp/options.hh>
#include <vcsp/structure.hh>

#include <functional>
#include <optional>

namespace vcsp
{
    struct SearchResult
    {
        Mapping mapping;
        // no mapping of finite cost exists; the mapping is arbitrary
        bool infinite;
        ExtRat cost;
    };

    // Called after each element is fixed, with the level-k optimum of the
    // restricted instance.
    using FixObserver = std::function<void (Element fixed, Element image, const ExtRat & restricted_opt)>;

    // Fixes elements one at a time while keeping the level-k optimum.
    auto search_fix_loop(const ValuedStructure & a, const ValuedStructure & b, unsigned k,
            const Options & options = { }, const FixObserver & observer = { }) -> SearchResult;

    // Core first, then the fixing loop on the core at the level its width and
    // overlap call for (or the given one).
    auto search_solve(const ValuedStructure & a, const ValuedStructure & b,
            std::optional<unsigned> level = std::nullopt, const Options & options = { }) -> SearchResult;
}

#endif
