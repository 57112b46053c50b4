/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_OPTIONS_HH
#define VCSP_OPTIONS_HH 1

#include <vcsp/lp.hh>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace vcsp
{
    // Resource caps shared by every operation; exceeding one raises ResourceLimit.
    struct Options
    {
        // search nodes for brute force, and total maps for exhaustive checks
        std::uint64_t max_maps = 10'000'000;
        // size of a finite-support mapping family used as LP columns
        std::uint64_t max_columns = 200'000;
        std::uint64_t max_pivots = 1'000'000;
        // variables of a Sherali-Adams LP, before zero-forced ones are removed
        std::uint64_t max_sa_variables = 1'000'000;
        // vertices for the exact width algorithms
        std::size_t max_width_vertices = 16;
        std::size_t max_gadget_elements = 4096;
        std::size_t max_overlap_pairs = 8;

        // Called with every LP before it is solved, for debugging.
        std::function<void (std::string_view label, const LinProgram & lp)> lp_observer;
    };

    auto solve_lp(const LinProgram & lp, const Options & options, std::string_view label) -> LpOutcome;
}

#endif
