/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_GENERATORS_HH
#define VCSP_GENERATORS_HH 1

#include <vcsp/structure.hh>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vcsp
{
    // Grid and path structures share the signature {f/2, mu/1}.
    auto grid_signature() -> Signature;

    // Element index of (i, j) in gen_grid(n), 1-based coordinates.
    auto grid_element(unsigned n, unsigned i, unsigned j) -> Element;

    auto gen_grid(unsigned n) -> ValuedStructure;
    auto gen_path(unsigned n) -> ValuedStructure;
    auto gen_diag_grid(unsigned n, const Rational & m) -> ValuedStructure;

    // The diagonal-weighted grid with every infinite arc lowered to 1.
    auto gen_diag_finite(unsigned n, const Rational & m) -> ValuedStructure;

    // Finite-valued grid and path: grid arcs carry the total weight of the
    // monotone paths using them, path arcs carry 1.
    auto gen_grid_pair(unsigned n) -> std::pair<ValuedStructure, ValuedStructure>;

    auto gen_crisp_clique(unsigned k) -> ValuedStructure;
    auto gen_two_triangles() -> ValuedStructure;

    struct RandomSpec
    {
        std::size_t size = 3;
        std::vector<Symbol> symbols = { { "f", 2 }, { "mu", 1 } };
        std::vector<ExtRat> palette = { ExtRat(0), ExtRat(1), ExtRat(2), ExtRat::infinity() };
        std::string prefix = "e";
    };

    // Every tuple gets a value drawn uniformly from the palette, using
    // mt19937_64 seeded with the given seed.
    auto gen_random(const RandomSpec & spec, std::uint64_t seed) -> ValuedStructure;

    // Weight of the grid arc (i, j) -> (i2, j2), which must be a unit step.
    auto path_arc_weight(unsigned n, unsigned i, unsigned j, unsigned i2, unsigned j2) -> Rational;

    struct WeightedPath
    {
        // image[k] is the grid element assigned to path element k
        std::vector<Element> image;
        Rational weight;
    };

    // Every monotone lattice path from (1,1) to (n,n), weighted by the
    // product of its arc weights, in lexicographic order of images.
    struct PathDistribution
    {
        unsigned n;
        std::vector<WeightedPath> paths;
    };

    auto grid_path_ifh(unsigned n) -> PathDistribution;
}

#endif
