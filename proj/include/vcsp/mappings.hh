/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_MAPPINGS_HH
#define VCSP_MAPPINGS_HH 1

#include <vcsp/mapping.hh>
#include <vcsp/options.hh>
#include <vcsp/structure.hh>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace vcsp
{
    auto cost(const ValuedStructure & a, const ValuedStructure & b, const Mapping & h) -> ExtRat;

    struct OptResult
    {
        ExtRat value;
        Mapping witness;
    };

    // Cost contributed by one source tuple once all its elements are mapped.
    using TermCost = std::function<ExtRat (std::size_t tuple_index, const Tuple & image)>;

    // Minimises the sum of term(i, h(tuples[i])) over all maps h from
    // {0..source_size-1} to {0..target_size-1}. Weights order the branching;
    // elements in no tuple are sent to 0. Ties keep the first minimum found.
    // If stop_at_zero, returns as soon as a zero-cost map appears.
    auto branch_and_bound(std::size_t source_size, std::size_t target_size,
            const std::vector<Tuple> & tuples, const std::vector<ExtRat> & weights,
            const TermCost & term, std::uint64_t max_nodes, bool stop_at_zero = false) -> OptResult;

    auto opt_bruteforce(const ValuedStructure & a, const ValuedStructure & b, const Options & options = { }) -> OptResult;

    // Some mapping of finite cost, if one exists.
    auto find_finite_mapping(const ValuedStructure & a, const ValuedStructure & b,
            const Options & options = { }) -> std::optional<Mapping>;

    // Whether g sends every infinite tuple of a onto an infinite tuple of b.
    auto has_finite_support(const ValuedStructure & a, const ValuedStructure & b, const Mapping & g) -> bool;

    // All such mappings, in lexicographic order. Throws ResourceLimit when
    // there are more than options.max_columns.
    auto enumerate_finite_support(const ValuedStructure & a, const ValuedStructure & b,
            const Options & options = { }) -> std::vector<Mapping>;

    struct SupportPrefix
    {
        std::vector<Mapping> mappings;
        bool complete;
    };

    // As above, but stops quietly after limit mappings.
    auto enumerate_finite_support_prefix(const ValuedStructure & a, const ValuedStructure & b,
            std::uint64_t limit) -> SupportPrefix;

    // Calls fn on each finite-support mapping in lexicographic order until it
    // returns false.
    auto for_each_finite_support(const ValuedStructure & a, const ValuedStructure & b,
            const std::function<bool (const Mapping &)> & fn) -> void;

    auto valued_isomorphic(const ValuedStructure & a, const ValuedStructure & b) -> std::optional<Mapping>;
}

#endif
