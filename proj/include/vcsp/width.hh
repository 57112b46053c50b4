/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_WIDTH_HH
#define VCSP_WIDTH_HH 1

#include <vcsp/options.hh>
#include <vcsp/structure.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace vcsp
{
    class Graph
    {
        private:
            std::vector<std::string> _names;
            std::vector<std::vector<Element> > _adjacent;

        public:
            explicit Graph(std::vector<std::string> names);

            auto add_edge(Element u, Element v) -> void;
            auto has_edge(Element u, Element v) const -> bool;

            auto size() const -> std::size_t
            {
                return _names.size();
            }

            auto name(Element v) const -> const std::string &
            {
                return _names[v];
            }

            // sorted
            auto neighbours(Element v) const -> const std::vector<Element> &
            {
                return _adjacent[v];
            }

            auto edge_count() const -> std::size_t;
    };

    // A sorted list of vertices.
    using VertexSet = std::vector<Element>;

    struct TreeDecomposition
    {
        std::vector<VertexSet> bags;
        // parent node of each node; the root has none
        std::vector<std::optional<std::size_t> > parent;
    };

    struct WidthResult
    {
        std::size_t width;
        TreeDecomposition decomposition;
    };

    auto gaifman(const RelationalStructure & a) -> Graph;

    // Element sets of all tuples, sorted and deduplicated.
    auto scopes(const RelationalStructure & a) -> std::vector<VertexSet>;

    auto treewidth(const Graph & g, const Options & options = { }) -> WidthResult;

    // Treewidth modulo scopes of the Gaifman graph of a.
    auto twms(const RelationalStructure & a, const Options & options = { }) -> WidthResult;

    struct OverlapResult
    {
        std::size_t value;
        // the first pair of distinct positive tuples reaching the value
        std::optional<std::pair<Entry, Entry> > pair;
    };

    auto overlap(const ValuedStructure & a) -> OverlapResult;

    struct DecompositionMeasures
    {
        std::size_t width;
        std::size_t width_modulo_scopes;
    };

    // Throws NotADecomposition naming the violated condition.
    auto validate_decomposition(const Graph & g, const TreeDecomposition & td,
            const std::vector<VertexSet> & scope_family) -> DecompositionMeasures;
}

#endif
