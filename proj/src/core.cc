/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/core.hh>
#include <vcsp/improvement.hh>
#include <vcsp/mappings.hh>
#include <vcsp/errors.hh>

#include <algorithm>
#include <map>

using std::map;
using std::optional;
using std::pair;
using std::size_t;
using std::vector;

namespace vcsp
{
    namespace
    {
        auto strictly_inside(const vector<Element> & inner, const vector<Element> & outer) -> bool
        {
            return inner.size() < outer.size() && std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
        }

        // Maximises the total weight on the marked columns of a self-IFH;
        // returns the marked columns with positive weight.
        auto marked_support(const ValuedStructure & a, const vector<Mapping> & family, const vector<bool> & marked,
                const Options & options, std::string_view label) -> vector<Mapping>
        {
            IfhSystem system(a, a);
            vector<IfhSystem::Column> columns;
            vector<Rational> objective;
            for (size_t i = 0 ; i < family.size() ; ++i) {
                columns.push_back(system.column(family[i]));
                objective.push_back(marked[i] ? Rational(-1) : Rational(0));
            }

            auto outcome = solve_lp(system.build_lp(columns, objective), options, label);
            if (outcome.status != LpStatus::Optimal)
                fail(ErrorKind::BadParameter, "self-IFH program unexpectedly not optimal");

            vector<Mapping> result;
            if (outcome.value < 0)
                for (size_t i = 0 ; i < family.size() ; ++i)
                    if (marked[i] && outcome.values[i] > 0)
                        result.push_back(family[i]);
            return result;
        }

        auto smallest_image_first(vector<Mapping> candidates) -> optional<Mapping>
        {
            if (candidates.empty())
                return std::nullopt;
            return *std::min_element(candidates.begin(), candidates.end(), [] (const Mapping & x, const Mapping & y) {
                    auto sx = x.image_set().size(), sy = y.image_set().size();
                    if (sx != sy)
                        return sx < sy;
                    return x < y;
                    });
        }

        auto first_non_surjective(size_t n) -> Mapping
        {
            return Mapping::constant(n, n, 0);
        }
    }

    auto is_core(const ValuedStructure & a, const Options & options) -> CoreCheck
    {
        if (! a.has_finite_tuple()) {
            if (a.size() == 1)
                return CoreCheck{ true, std::nullopt };
            return CoreCheck{ false, first_non_surjective(a.size()) };
        }

        auto family = enumerate_finite_support(a, a, options);
        vector<bool> marked;
        for (auto & g : family)
            marked.push_back(! g.is_surjective());
        auto support = marked_support(a, family, marked, options, "is-core");
        if (support.empty())
            return CoreCheck{ true, std::nullopt };
        return CoreCheck{ false, smallest_image_first(support) };
    }

    auto reduction_step(const ValuedStructure & a, const Mapping & g, const Options & options) -> optional<Mapping>
    {
        if (g.size() != a.size() || g.target_size() != a.size())
            fail(ErrorKind::BadParameter, "reduction step needs an endomap");

        auto image = g.image_set();
        auto family = enumerate_finite_support(a, a, options);
        vector<bool> marked;
        bool any = false;
        for (auto & h : family) {
            marked.push_back(strictly_inside(h.image_set(), image));
            any = any || marked.back();
        }
        if (! any)
            return std::nullopt;
        return smallest_image_first(marked_support(a, family, marked, options, "reduction-step"));
    }

    auto image_structure(const ValuedStructure & a, const Mapping & g) -> ValuedStructure
    {
        if (g.size() != a.size() || g.target_size() != a.size())
            fail(ErrorKind::BadParameter, "image structure needs an endomap");

        auto image = g.image_set();
        vector<Element> position(a.size(), 0);
        vector<std::string> names;
        for (size_t i = 0 ; i < image.size() ; ++i) {
            position[image[i]] = Element(i);
            names.push_back(a.element_name(image[i]));
        }

        map<pair<size_t, Tuple>, ExtRat> sums;
        for (auto & entry : a.positive_entries()) {
            Tuple t(entry.tuple.size());
            for (size_t p = 0 ; p < t.size() ; ++p)
                t[p] = position[g(entry.tuple[p])];
            sums[{ entry.symbol, t }] += entry.value;
        }

        ValuedStructure result(a.signature(), names);
        for (auto & [key, value] : sums)
            result.set(key.first, key.second, value);
        return result;
    }

    auto compute_core(const ValuedStructure & a, const Options & options) -> CoreResult
    {
        auto collapse = Mapping::identity(a.size());
        while (auto next = reduction_step(a, collapse, options))
            collapse = *next;

        auto image = collapse.image_set();
        vector<Element> position(a.size(), 0);
        for (size_t i = 0 ; i < image.size() ; ++i)
            position[image[i]] = Element(i);
        vector<Element> to_core(a.size());
        for (size_t e = 0 ; e < a.size() ; ++e)
            to_core[e] = position[collapse(Element(e))];

        return CoreResult{ collapse, image_structure(a, collapse), Mapping(to_core, image.size()) };
    }

    auto core_weighting(const ValuedStructure & a, const Options & options) -> CoreWeighting
    {
        if (! is_core(a, options).core)
            fail(ErrorKind::NotACore, "structure is not a core");

        auto family = enumerate_finite_support(a, a, options);
        bool any_non_surjective = std::any_of(family.begin(), family.end(), [] (const Mapping & g) {
                return ! g.is_surjective();
                });

        const auto & signature = a.signature();
        ValuedStructure weights(signature, a.universe());

        auto fill = [&] (const Rational & finite_weight) {
            for (size_t s = 0 ; s < signature.size() ; ++s) {
                weights.set_default(s, a.default_value(s).is_infinite() ? ExtRat() : ExtRat(finite_weight));
                for (auto & [t, v] : a.overrides(s))
                    weights.set(s, t, v.is_infinite() ? ExtRat() : ExtRat(finite_weight));
            }
        };

        if (! any_non_surjective) {
            fill(1);
            return CoreWeighting{ weights };
        }

        // Coefficient of z2(f,x) in the row of h: f(x) - f(h^-1(x)), over
        // finite tuples x. Only tuples with some nonzero coefficient get a
        // variable; the rest behave as z2 = 0.
        auto positive = a.positive_entries();
        map<pair<size_t, Tuple>, size_t> tuple_index;
        vector<pair<size_t, Tuple> > tuples;
        auto index_of = [&] (size_t s, const Tuple & t) {
            auto [it, fresh] = tuple_index.emplace(pair{ s, t }, tuples.size());
            if (fresh)
                tuples.emplace_back(s, t);
            return it->second;
        };

        vector<map<size_t, Rational> > rows;
        for (auto & h : family) {
            map<size_t, Rational> row;
            for (auto & entry : positive) {
                if (entry.value.is_infinite())
                    continue;
                row[index_of(entry.symbol, entry.tuple)] += entry.value.value();
            }
            for (auto & entry : positive) {
                auto image = h.apply(entry.tuple);
                if (a.value(entry.symbol, image).is_infinite())
                    continue;
                // finite support: only finite tuples of a reach finite tuples
                row[index_of(entry.symbol, image)] -= entry.value.value();
            }
            rows.push_back(std::move(row));
        }

        LinProgram lp;
        auto z1 = lp.add_variable("z1");
        lp.set_objective(z1, -1);
        vector<VarId> z2;
        for (size_t i = 0 ; i < tuples.size() ; ++i)
            z2.push_back(lp.add_variable("z2_" + std::to_string(i)));
        lp.add_constraint({ Term{ z1, 1 } }, Relation::LessEqual, 1, "z1cap");

        for (size_t r = 0 ; r < family.size() ; ++r) {
            vector<Term> terms;
            if (! family[r].is_surjective())
                terms.push_back(Term{ z1, 1 });
            for (auto & [i, coefficient] : rows[r])
                if (coefficient != 0)
                    terms.push_back(Term{ z2[i], coefficient });
            if (! terms.empty())
                lp.add_constraint(terms, Relation::LessEqual, 0, "h" + std::to_string(r));
        }

        auto outcome = solve_lp(lp, options, "core-weighting");
        if (outcome.status != LpStatus::Optimal || outcome.values[z1.index] <= 0)
            fail(ErrorKind::NotACore, "no core weighting exists");

        Rational finite_total = 1;
        for (auto & entry : positive)
            if (entry.value.is_finite())
                finite_total += entry.value.value();
        Rational epsilon = outcome.values[z1.index] / finite_total;

        fill(epsilon);
        for (size_t i = 0 ; i < tuples.size() ; ++i)
            weights.set(tuples[i].first, tuples[i].second, ExtRat(outcome.values[z2[i].index] + epsilon));
        return CoreWeighting{ weights };
    }

    auto weighted_cost(const ValuedStructure & a, const CoreWeighting & weighting, const Mapping & g) -> ExtRat
    {
        return cost(a, weighting.c, g);
    }

    auto validate_core_weighting(const ValuedStructure & a, const CoreWeighting & weighting,
            const Options & options) -> CoreWeightingCheck
    {
        require_same_signature(a, weighting.c);
        auto n = a.size();
        auto total = tuple_count(n, unsigned(n));
        if (! total || *total > options.max_maps)
            fail(ErrorKind::ResourceLimit, "too many maps to validate a core weighting");

        auto baseline = weighted_cost(a, weighting, Mapping::identity(n));
        optional<Mapping> counterexample;
        for_each_tuple(n, unsigned(n), [&] (const Tuple & t) {
                if (counterexample)
                    return;
                Mapping g(t, n);
                if (g.is_surjective())
                    return;
                if (! (baseline < weighted_cost(a, weighting, g)))
                    counterexample = g;
                });
        return CoreWeightingCheck{ ! counterexample, counterexample };
    }
}
