/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_TESTS_FIXTURES_HH
#define VCSP_TESTS_FIXTURES_HH 1

#include <vcsp/generators.hh>
#include <vcsp/lp.hh>
#include <vcsp/structure.hh>

#include <random>

#include <string>
#include <vector>

namespace fixtures
{
    using namespace vcsp;

    // Two elements: f costs 5 on loops and 0 across, mu is 1 then 2.
    inline auto b2() -> ValuedStructure
    {
        ValuedStructure b(grid_signature(), { "x", "y" });
        b.set(0, { 0, 0 }, ExtRat(5));
        b.set(0, { 1, 1 }, ExtRat(5));
        b.set(1, { 0 }, ExtRat(1));
        b.set(1, { 1 }, ExtRat(2));
        return b;
    }

    // One unary symbol u with the given values.
    inline auto unary(const std::vector<ExtRat> & values, const std::string & prefix = "a") -> ValuedStructure
    {
        std::vector<std::string> names;
        for (std::size_t i = 0 ; i < values.size() ; ++i)
            names.push_back(prefix + std::to_string(i));
        ValuedStructure s(Signature({ { "u", 1 } }), names);
        for (std::size_t i = 0 ; i < values.size() ; ++i)
            s.set(0, { Element(i) }, values[i]);
        return s;
    }

    // Random right-hand structure over the grid signature.
    inline auto random_grid_target(std::size_t size, std::uint64_t seed) -> ValuedStructure
    {
        RandomSpec spec;
        spec.size = size;
        spec.prefix = "b";
        return gen_random(spec, seed);
    }

    // A copy with the elements renamed and permuted by the given order.
    inline auto permuted(const ValuedStructure & a, const std::vector<Element> & order, const std::string & prefix) -> ValuedStructure
    {
        std::vector<std::string> names;
        for (std::size_t i = 0 ; i < a.size() ; ++i)
            names.push_back(prefix + a.element_name(order[i]));
        std::vector<Element> where(a.size());
        for (std::size_t i = 0 ; i < a.size() ; ++i)
            where[order[i]] = Element(i);
        ValuedStructure result(a.signature(), names);
        for (std::size_t s = 0 ; s < a.signature().size() ; ++s) {
            result.set_default(s, a.default_value(s));
            for (auto & [t, v] : a.overrides(s)) {
                Tuple mapped(t.size());
                for (std::size_t p = 0 ; p < t.size() ; ++p)
                    mapped[p] = where[t[p]];
                result.set(s, mapped, v);
            }
        }
        return result;
    }

    // Small integer data over nonnegative variables.
    inline auto random_lp(std::mt19937_64 & rng) -> LinProgram
    {
        std::uniform_int_distribution<int> vars(1, 6), rows(1, 8), coefficient(-4, 4), rhs(-3, 8), rel(0, 5);
        auto n = vars(rng), m = rows(rng);
        LinProgram lp;
        std::vector<VarId> x;
        for (int i = 0 ; i < n ; ++i) {
            x.push_back(lp.add_variable("x" + std::to_string(i)));
            lp.set_objective(x.back(), coefficient(rng));
        }
        for (int r = 0 ; r < m ; ++r) {
            std::vector<Term> terms;
            for (int i = 0 ; i < n ; ++i)
                if (auto c = coefficient(rng) ; c != 0 && rel(rng) < 4)
                    terms.push_back(Term{ x[i], c });
            auto kind = rel(rng);
            auto relation = kind < 4 ? Relation::LessEqual : kind == 4 ? Relation::GreaterEqual : Relation::Equal;
            lp.add_constraint(terms, relation, rhs(rng));
        }
        return lp;
    }

    inline auto element_names(std::size_t n) -> std::vector<std::string>
    {
        std::vector<std::string> result;
        for (std::size_t i = 0 ; i < n ; ++i)
            result.push_back("v" + std::to_string(i));
        return result;
    }

    // Random tuples of arity 1 to 3 over n elements.
    inline auto random_relational(std::size_t n, std::uint64_t seed) -> RelationalStructure
    {
        std::mt19937_64 rng(seed);
        Signature sig({ { "r1", 1 }, { "r2", 2 }, { "r3", 3 } });
        RelationalStructure a(sig, element_names(n));
        std::uniform_int_distribution<Element> pick(0, Element(n - 1));
        std::uniform_int_distribution<std::size_t> symbol(0, 2), count(0, 2 * n);
        for (auto i = count(rng) ; i > 0 ; --i) {
            auto s = symbol(rng);
            Tuple t(sig[s].arity);
            for (auto & e : t)
                e = pick(rng);
            a.add(s, t);
        }
        return a;
    }
}

#endif
