/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/width.hh>
#include <vcsp/errors.hh>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>

using std::function;
using std::optional;
using std::set;
using std::size_t;
using std::string;
using std::uint32_t;
using std::vector;

namespace vcsp
{
    namespace
    {
        using Mask = uint32_t;

        auto mask_members(Mask mask) -> VertexSet
        {
            VertexSet result;
            for (Element v = 0 ; mask ; ++v, mask >>= 1)
                if (mask & 1)
                    result.push_back(v);
            return result;
        }

        // Vertices outside rest and v reachable from v through rest: the
        // higher neighbours of v once rest has been eliminated.
        auto later_neighbours(const vector<Mask> & adjacent, Mask rest, Element v) -> Mask
        {
            Mask component = Mask(1) << v, frontier = component, reached = 0;
            while (frontier) {
                Mask next = 0;
                for (Mask f = frontier ; f ; f &= f - 1)
                    next |= adjacent[std::countr_zero(f)];
                next &= ~component;
                reached |= next & ~rest;
                frontier = next & rest;
                component |= frontier;
            }
            return reached;
        }

        // Merges neighbouring nodes whose bags are nested, so that the
        // remaining bags are the maximal cliques of the triangulation.
        auto contract_nested(TreeDecomposition td) -> TreeDecomposition
        {
            auto n = td.bags.size();
            vector<bool> alive(n, true);
            auto includes = [] (const VertexSet & big, const VertexSet & small) {
                return std::includes(big.begin(), big.end(), small.begin(), small.end());
            };

            bool changed = true;
            while (changed) {
                changed = false;
                for (size_t c = 0 ; c < n ; ++c) {
                    if (! alive[c] || ! td.parent[c])
                        continue;
                    auto p = *td.parent[c];
                    if (includes(td.bags[p], td.bags[c])) { }
                    else if (includes(td.bags[c], td.bags[p]))
                        td.bags[p] = td.bags[c];
                    else
                        continue;
                    for (size_t x = 0 ; x < n ; ++x)
                        if (alive[x] && td.parent[x] == c)
                            td.parent[x] = p;
                    alive[c] = false;
                    changed = true;
                }
            }

            vector<size_t> renumber(n, 0);
            TreeDecomposition result;
            for (size_t x = 0 ; x < n ; ++x)
                if (alive[x]) {
                    renumber[x] = result.bags.size();
                    result.bags.push_back(td.bags[x]);
                }
            for (size_t x = 0 ; x < n ; ++x)
                if (alive[x])
                    result.parent.push_back(td.parent[x] ? optional<size_t>(renumber[*td.parent[x]]) : std::nullopt);
            return result;
        }

        // Exact minimum over elimination orders of the largest bag cost, by
        // dynamic programming over the set of vertices eliminated first.
        auto eliminate(const Graph & g, const Options & options, const function<size_t (Mask)> & bag_cost) -> WidthResult
        {
            auto n = g.size();
            if (n > options.max_width_vertices || n > 24)
                fail(ErrorKind::ResourceLimit, "exact width limited to " + std::to_string(options.max_width_vertices) + " vertices");
            if (n == 0)
                return WidthResult{ 0, { } };

            vector<Mask> adjacent(n, 0);
            for (Element v = 0 ; v < n ; ++v)
                for (auto u : g.neighbours(v))
                    adjacent[v] |= Mask(1) << u;

            Mask full = (Mask(1) << n) - 1;
            vector<std::uint8_t> best(size_t(full) + 1, 0), last(size_t(full) + 1, 0);
            for (Mask s = 1 ; s <= full ; ++s) {
                size_t value = n + 1;
                for (Mask m = s ; m ; m &= m - 1) {
                    auto v = Element(std::countr_zero(m));
                    Mask rest = s & ~(Mask(1) << v);
                    auto c = std::max<size_t>(best[rest], bag_cost(later_neighbours(adjacent, rest, v) | (Mask(1) << v)));
                    if (c < value) {
                        value = c;
                        last[s] = std::uint8_t(v);
                    }
                }
                best[s] = std::uint8_t(value);
            }

            vector<Element> order;
            for (Mask s = full ; s ; s &= ~(Mask(1) << last[s]))
                order.push_back(last[s]);
            std::reverse(order.begin(), order.end());

            vector<size_t> position(n);
            for (size_t i = 0 ; i < n ; ++i)
                position[order[i]] = i;

            TreeDecomposition td;
            Mask eliminated = 0;
            optional<size_t> previous_root;
            for (size_t i = 0 ; i < n ; ++i) {
                auto v = order[i];
                auto later = later_neighbours(adjacent, eliminated, v);
                td.bags.push_back(mask_members(later | (Mask(1) << v)));
                optional<size_t> parent;
                for (auto u : mask_members(later))
                    if (! parent || position[u] < *parent)
                        parent = position[u];
                td.parent.push_back(parent);
                eliminated |= Mask(1) << v;
            }
            // join the trees of separate components into one
            for (size_t i = 0 ; i < n ; ++i)
                if (! td.parent[i]) {
                    if (previous_root)
                        td.parent[*previous_root] = i;
                    previous_root = i;
                }

            return WidthResult{ best[full], contract_nested(std::move(td)) };
        }
    }

    Graph::Graph(vector<string> names) :
        _names(std::move(names)),
        _adjacent(_names.size())
    {
    }

    auto Graph::add_edge(Element u, Element v) -> void
    {
        if (u >= size() || v >= size())
            fail(ErrorKind::BadParameter, "edge endpoint out of range");
        if (u == v || has_edge(u, v))
            return;
        _adjacent[u].insert(std::upper_bound(_adjacent[u].begin(), _adjacent[u].end(), v), v);
        _adjacent[v].insert(std::upper_bound(_adjacent[v].begin(), _adjacent[v].end(), u), u);
    }

    auto Graph::has_edge(Element u, Element v) const -> bool
    {
        return std::binary_search(_adjacent[u].begin(), _adjacent[u].end(), v);
    }

    auto Graph::edge_count() const -> size_t
    {
        size_t total = 0;
        for (auto & a : _adjacent)
            total += a.size();
        return total / 2;
    }

    auto gaifman(const RelationalStructure & a) -> Graph
    {
        Graph g(a.universe());
        for (size_t s = 0 ; s < a.signature().size() ; ++s)
            for (auto & t : a.relation(s)) {
                auto elements = element_set(t);
                for (size_t i = 0 ; i < elements.size() ; ++i)
                    for (size_t j = i + 1 ; j < elements.size() ; ++j)
                        g.add_edge(elements[i], elements[j]);
            }
        return g;
    }

    auto scopes(const RelationalStructure & a) -> vector<VertexSet>
    {
        set<VertexSet> result;
        for (size_t s = 0 ; s < a.signature().size() ; ++s)
            for (auto & t : a.relation(s))
                result.insert(element_set(t));
        return vector<VertexSet>(result.begin(), result.end());
    }

    auto treewidth(const Graph & g, const Options & options) -> WidthResult
    {
        return eliminate(g, options, [] (Mask bag) -> size_t {
                return std::popcount(bag) - 1;
                });
    }

    auto twms(const RelationalStructure & a, const Options & options) -> WidthResult
    {
        auto g = gaifman(a);
        auto n = g.size();
        if (n > options.max_width_vertices || n > 24)
            fail(ErrorKind::ResourceLimit, "exact width limited to " + std::to_string(options.max_width_vertices) + " vertices");

        // within_scope[m]: m is a subset of some scope
        vector<bool> within_scope(size_t(1) << n, false);
        for (auto & scope : scopes(a)) {
            Mask m = 0;
            for (auto v : scope)
                m |= Mask(1) << v;
            within_scope[m] = true;
        }
        for (size_t m = within_scope.size() ; m-- > 0 ; )
            if (within_scope[m])
                for (Mask r = Mask(m) ; r ; r &= r - 1)
                    within_scope[m & ~(r & -r)] = true;

        return eliminate(g, options, [&] (Mask bag) -> size_t {
                return within_scope[bag] ? 0 : std::popcount(bag) - 1;
                });
    }

    auto overlap(const ValuedStructure & a) -> OverlapResult
    {
        auto positive = a.positive_entries();
        vector<VertexSet> sets;
        for (auto & e : positive)
            sets.push_back(element_set(e.tuple));

        OverlapResult result{ 0, std::nullopt };
        for (size_t i = 0 ; i < positive.size() ; ++i)
            for (size_t j = i + 1 ; j < positive.size() ; ++j) {
                VertexSet common;
                std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(), std::back_inserter(common));
                if (! result.pair || common.size() > result.value) {
                    result.value = common.size();
                    result.pair = std::pair{ positive[i], positive[j] };
                }
            }
        return result;
    }

    auto validate_decomposition(const Graph & g, const TreeDecomposition & td,
            const vector<VertexSet> & scope_family) -> DecompositionMeasures
    {
        auto nodes = td.bags.size();
        auto bad = [] (const string & reason) {
            fail(ErrorKind::NotADecomposition, reason);
        };

        if (td.parent.size() != nodes)
            bad("tree: parent list does not match the bags");
        vector<VertexSet> bags;
        for (size_t x = 0 ; x < nodes ; ++x) {
            auto bag = td.bags[x];
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            for (auto v : bag)
                if (v >= g.size())
                    bad("bag " + std::to_string(x) + " names an unknown vertex");
            bags.push_back(std::move(bag));
        }

        size_t roots = 0;
        for (size_t x = 0 ; x < nodes ; ++x) {
            if (! td.parent[x]) {
                ++roots;
                continue;
            }
            if (*td.parent[x] >= nodes)
                bad("tree: node " + std::to_string(x) + " has an unknown parent");
            // walking up must reach a root within nodes steps
            size_t steps = 0;
            for (auto y = td.parent[x] ; y ; y = td.parent[*y])
                if (++steps > nodes)
                    bad("tree: cycle through node " + std::to_string(x));
        }
        if (nodes > 0 && roots != 1)
            bad("tree: " + std::to_string(roots) + " roots");

        auto contains = [&] (size_t x, Element v) {
            return std::binary_search(bags[x].begin(), bags[x].end(), v);
        };

        for (Element v = 0 ; v < g.size() ; ++v) {
            size_t holding = 0, linked = 0;
            for (size_t x = 0 ; x < nodes ; ++x)
                if (contains(x, v)) {
                    ++holding;
                    if (td.parent[x] && contains(*td.parent[x], v))
                        ++linked;
                }
            if (holding == 0)
                bad("vertex-coverage: vertex " + g.name(v) + " is in no bag");
            if (linked + 1 != holding)
                bad("connectivity: bags holding vertex " + g.name(v) + " are not connected");
        }

        for (Element u = 0 ; u < g.size() ; ++u)
            for (auto v : g.neighbours(u)) {
                if (v < u)
                    continue;
                bool covered = false;
                for (size_t x = 0 ; x < nodes && ! covered ; ++x)
                    covered = contains(x, u) && contains(x, v);
                if (! covered)
                    bad("edge-coverage: edge {" + g.name(u) + "," + g.name(v) + "} is in no bag");
            }

        set<VertexSet> scope_set(scope_family.begin(), scope_family.end());
        DecompositionMeasures result{ 0, 0 };
        for (auto & bag : bags) {
            auto size = bag.empty() ? 0 : bag.size() - 1;
            result.width = std::max(result.width, size);
            if (! scope_set.count(bag))
                result.width_modulo_scopes = std::max(result.width_modulo_scopes, size);
        }
        return result;
    }
}
