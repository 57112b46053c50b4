/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "oracles.hh"

#include <vcsp/mappings.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

using std::size_t;
using std::vector;

namespace oracle
{
    namespace
    {
        struct Row
        {
            vector<Rational> coefficients;
            Rational rhs;
        };

        // Solves the square system exactly; empty when singular.
        auto solve_square(vector<Row> rows) -> vector<Rational>
        {
            auto n = rows.size();
            for (size_t c = 0 ; c < n ; ++c) {
                size_t p = c;
                while (p < n && rows[p].coefficients[c] == 0)
                    ++p;
                if (p == n)
                    return { };
                std::swap(rows[p], rows[c]);
                for (size_t r = 0 ; r < n ; ++r) {
                    if (r == c || rows[r].coefficients[c] == 0)
                        continue;
                    Rational factor = rows[r].coefficients[c] / rows[c].coefficients[c];
                    for (size_t k = c ; k < n ; ++k)
                        rows[r].coefficients[k] -= factor * rows[c].coefficients[k];
                    rows[r].rhs -= factor * rows[c].rhs;
                }
            }
            vector<Rational> x(n);
            for (size_t r = 0 ; r < n ; ++r)
                x[r] = rows[r].rhs / rows[r].coefficients[r];
            return x;
        }

        auto is_chordal(size_t n, const vector<std::uint32_t> & adjacent) -> bool
        {
            std::uint32_t remaining = (std::uint32_t(1) << n) - 1;
            while (remaining) {
                bool removed = false;
                for (size_t v = 0 ; v < n && ! removed ; ++v) {
                    if (! (remaining >> v & 1))
                        continue;
                    auto nbrs = adjacent[v] & remaining;
                    bool clique = true;
                    for (auto m = nbrs ; m && clique ; m &= m - 1) {
                        auto u = std::countr_zero(m);
                        if ((nbrs & ~(std::uint32_t(1) << u)) & ~adjacent[u])
                            clique = false;
                    }
                    if (clique) {
                        remaining &= ~(std::uint32_t(1) << v);
                        removed = true;
                    }
                }
                if (! removed)
                    return false;
            }
            return true;
        }
    }

    auto lp_by_vertices(const LinProgram & lp, const Rational & box) -> LpAnswer
    {
        auto n = lp.variable_count();
        // every constraint as a row with a kind: 0 equality, 1 means row <= rhs
        vector<Row> equalities, inequalities;
        for (auto & c : lp.constraints()) {
            Row row{ vector<Rational>(n), c.rhs };
            for (auto & t : c.terms)
                row.coefficients[t.var.index] += t.coefficient;
            if (c.relation == Relation::Equal)
                equalities.push_back(row);
            else if (c.relation == Relation::LessEqual)
                inequalities.push_back(row);
            else {
                for (auto & x : row.coefficients)
                    x = -x;
                row.rhs = -row.rhs;
                inequalities.push_back(row);
            }
        }
        for (size_t v = 0 ; v < n ; ++v) {
            Row lower{ vector<Rational>(n), 0 }, upper{ vector<Rational>(n), box };
            lower.coefficients[v] = -1;
            upper.coefficients[v] = 1;
            inequalities.push_back(lower);
            inequalities.push_back(upper);
        }

        auto feasible = [&] (const vector<Rational> & x) {
            for (auto & r : equalities) {
                Rational s;
                for (size_t v = 0 ; v < n ; ++v)
                    s += r.coefficients[v] * x[v];
                if (s != r.rhs)
                    return false;
            }
            for (auto & r : inequalities) {
                Rational s;
                for (size_t v = 0 ; v < n ; ++v)
                    s += r.coefficients[v] * x[v];
                if (s > r.rhs)
                    return false;
            }
            return true;
        };

        bool found = false;
        Rational best;
        vector<Rational> best_point;
        auto consider = [&] (const vector<Rational> & x) {
            if (! feasible(x))
                return;
            Rational value;
            for (size_t v = 0 ; v < n ; ++v)
                value += lp.objective(VarId{ v }) * x[v];
            auto on_box = [&] (const vector<Rational> & y) {
                return std::find(y.begin(), y.end(), box) != y.end();
            };
            // on ties prefer points away from the box
            if (! found || value < best || (value == best && on_box(best_point) && ! on_box(x))) {
                found = true;
                best = value;
                best_point = x;
            }
        };

        // choose which inequalities are tight, together with a basis of the equalities
        auto m = inequalities.size();
        vector<size_t> chosen;
        std::function<void (size_t)> pick = [&] (size_t from) {
            vector<Row> system;
            for (auto i : chosen)
                system.push_back(inequalities[i]);
            // combine equalities and chosen rows, then try each full-rank square subsystem
            if (chosen.size() + equalities.size() >= n && chosen.size() <= n) {
                auto needed = n - chosen.size();
                // subsets of the equalities of the needed size
                vector<size_t> eq;
                std::function<void (size_t)> pick_eq = [&] (size_t start) {
                    if (eq.size() == needed) {
                        auto rows = system;
                        for (auto e : eq)
                            rows.push_back(equalities[e]);
                        auto x = solve_square(rows);
                        if (! x.empty())
                            consider(x);
                        return;
                    }
                    for (size_t e = start ; e < equalities.size() ; ++e) {
                        eq.push_back(e);
                        pick_eq(e + 1);
                        eq.pop_back();
                    }
                };
                pick_eq(0);
            }
            if (chosen.size() == n)
                return;
            for (size_t i = from ; i < m ; ++i) {
                chosen.push_back(i);
                pick(i + 1);
                chosen.pop_back();
            }
        };
        if (n == 0)
            consider({ });
        else
            pick(0);

        if (! found)
            return LpAnswer{ LpStatus::Infeasible, 0 };
        for (auto & x : best_point)
            if (x == box)
                return LpAnswer{ LpStatus::Unbounded, 0 };
        return LpAnswer{ LpStatus::Optimal, best };
    }

    auto for_each_map(size_t n, size_t m, const std::function<void (const Mapping &)> & fn) -> void
    {
        vector<Element> image(n, 0);
        while (true) {
            fn(Mapping(image, m));
            size_t p = n;
            while (p > 0 && image[p - 1] + 1 == m)
                image[--p] = 0;
            if (p == 0)
                return;
            ++image[p - 1];
        }
    }

    auto opt_by_enumeration(const ValuedStructure & a, const ValuedStructure & b) -> ExtRat
    {
        ExtRat best = ExtRat::infinity();
        bool first = true;
        for_each_map(a.size(), b.size(), [&] (const Mapping & h) {
                auto c = cost(a, b, h);
                if (first || c < best)
                    best = c;
                first = false;
                });
        return best;
    }

    auto treewidth_by_permutations(const Graph & g) -> size_t
    {
        auto n = g.size();
        vector<size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        size_t best = n;
        do {
            vector<std::set<size_t> > fill(n);
            for (size_t v = 0 ; v < n ; ++v)
                for (auto u : g.neighbours(Element(v)))
                    fill[v].insert(u);
            vector<bool> gone(n, false);
            size_t width = 0;
            for (auto v : order) {
                vector<size_t> later;
                for (auto u : fill[v])
                    if (! gone[u])
                        later.push_back(u);
                width = std::max(width, later.size());
                for (auto x : later)
                    for (auto y : later)
                        if (x != y)
                            fill[x].insert(y);
                gone[v] = true;
            }
            best = std::min(best, width);
        } while (std::next_permutation(order.begin(), order.end()));
        return n == 0 ? 0 : best;
    }

    auto twms_by_chordal_supergraphs(const Graph & g, const vector<VertexSet> & scope_family) -> size_t
    {
        auto n = g.size();
        vector<std::pair<size_t, size_t> > missing;
        vector<std::uint32_t> base(n, 0);
        for (size_t u = 0 ; u < n ; ++u)
            for (size_t v = u + 1 ; v < n ; ++v) {
                if (g.has_edge(Element(u), Element(v))) {
                    base[u] |= std::uint32_t(1) << v;
                    base[v] |= std::uint32_t(1) << u;
                }
                else
                    missing.emplace_back(u, v);
            }

        std::set<std::uint32_t> scope_masks;
        for (auto & s : scope_family) {
            std::uint32_t m = 0;
            for (auto v : s)
                m |= std::uint32_t(1) << v;
            scope_masks.insert(m);
        }

        size_t best = n;
        for (std::uint64_t extra = 0 ; extra < (std::uint64_t(1) << missing.size()) ; ++extra) {
            auto adjacent = base;
            for (size_t i = 0 ; i < missing.size() ; ++i)
                if (extra >> i & 1) {
                    auto [u, v] = missing[i];
                    adjacent[u] |= std::uint32_t(1) << v;
                    adjacent[v] |= std::uint32_t(1) << u;
                }
            if (! is_chordal(n, adjacent))
                continue;

            auto is_clique = [&] (std::uint32_t m) {
                for (auto r = m ; r ; r &= r - 1) {
                    auto v = std::countr_zero(r);
                    if ((m & ~(std::uint32_t(1) << v)) & ~adjacent[v])
                        return false;
                }
                return true;
            };
            size_t cost = 0;
            for (std::uint32_t m = 1 ; m < (std::uint32_t(1) << n) ; ++m) {
                if (! is_clique(m))
                    continue;
                bool maximal = true;
                for (size_t v = 0 ; v < n && maximal ; ++v)
                    if (! (m >> v & 1) && is_clique(m | (std::uint32_t(1) << v)))
                        maximal = false;
                if (maximal && ! scope_masks.count(m))
                    cost = std::max<size_t>(cost, std::popcount(m) - 1);
            }
            best = std::min(best, cost);
        }
        return n == 0 ? 0 : best;
    }

    auto random_graph(size_t n, std::uint64_t seed) -> Graph
    {
        vector<std::string> names;
        for (size_t i = 0 ; i < n ; ++i)
            names.push_back("v" + std::to_string(i));
        Graph g(names);
        std::mt19937_64 rng(seed);
        std::bernoulli_distribution coin(0.5);
        for (size_t u = 0 ; u < n ; ++u)
            for (size_t v = u + 1 ; v < n ; ++v)
                if (coin(rng))
                    g.add_edge(Element(u), Element(v));
        return g;
    }
}
