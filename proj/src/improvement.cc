/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/improvement.hh>
#include <vcsp/mappings.hh>
#include <vcsp/errors.hh>

#include <algorithm>
#include <set>

using std::map;
using std::optional;
using std::pair;
using std::set;
using std::size_t;
using std::string;
using std::vector;

namespace vcsp
{
    namespace
    {
        // Columns handed to the master problem before pricing starts.
        constexpr std::uint64_t initial_generated_columns = 64;

        auto tuple_text(const ValuedStructure & s, size_t symbol, const Tuple & t) -> string
        {
            string text = s.signature()[symbol].name + "(";
            for (size_t i = 0 ; i < t.size() ; ++i)
                text += (i ? "," : "") + s.element_name(t[i]);
            return text + ")";
        }

        auto distribution_from(const vector<Mapping> & columns, const vector<Rational> & values) -> IfhDistribution
        {
            IfhDistribution result;
            for (size_t i = 0 ; i < columns.size() ; ++i)
                if (values[i] > 0)
                    result.support.push_back(WeightedMapping{ columns[i], values[i] });
            return result;
        }

        auto full_ifh(const ValuedStructure & a, const ValuedStructure & b, const vector<Mapping> & family,
                const Options & options) -> optional<IfhDistribution>
        {
            IfhSystem system(a, b);
            vector<IfhSystem::Column> columns;
            columns.reserve(family.size());
            for (auto & g : family)
                columns.push_back(system.column(g));

            auto lp = system.build_lp(columns, vector<Rational>(columns.size()));
            auto outcome = solve_lp(lp, options, "ifh");
            if (outcome.status != LpStatus::Optimal)
                return std::nullopt;
            return distribution_from(family, outcome.values);
        }

        // Restricted master: min sum of row excesses; feasible iff the optimum is 0.
        auto generated_ifh(const ValuedStructure & a, const ValuedStructure & b, vector<Mapping> family,
                const Options & options) -> optional<IfhDistribution>
        {
            IfhSystem system(a, b);
            vector<IfhSystem::Column> columns;
            set<Mapping> present(family.begin(), family.end());
            for (auto & g : family)
                columns.push_back(system.column(g));

            auto positive = a.positive_entries();
            vector<Tuple> tuples;
            vector<ExtRat> weights;
            for (auto & entry : positive) {
                tuples.push_back(entry.tuple);
                weights.push_back(entry.value);
            }

            while (true) {
                LinProgram master;
                vector<VarId> omega;
                for (size_t i = 0 ; i < columns.size() ; ++i) {
                    omega.push_back(master.add_variable("w" + std::to_string(i)));
                }
                vector<vector<Term> > rows(system.row_count());
                for (size_t i = 0 ; i < columns.size() ; ++i)
                    for (auto & [r, coefficient] : columns[i])
                        rows[r].push_back(Term{ omega[i], coefficient });
                for (size_t r = 0 ; r < rows.size() ; ++r) {
                    auto excess = master.add_variable("e" + std::to_string(r));
                    master.set_objective(excess, 1);
                    rows[r].push_back(Term{ excess, -1 });
                    master.add_constraint(rows[r], Relation::LessEqual, system.bound(r), "row" + std::to_string(r));
                }
                vector<Term> normal;
                for (auto v : omega)
                    normal.push_back(Term{ v, 1 });
                master.add_constraint(normal, Relation::Equal, 1, "sum");

                auto outcome = solve_lp(master, options, "ifh-master");
                if (outcome.status != LpStatus::Optimal)
                    fail(ErrorKind::BadParameter, "column generation master is not solvable");
                if (outcome.value == 0)
                    return distribution_from(family, outcome.values);

                // price: minimise sum over tuples of a of f^a(t) * pi(g(t))
                map<pair<size_t, Tuple>, Rational> price;
                for (size_t r = 0 ; r < system.row_count() ; ++r)
                    if (outcome.duals[r] != 0)
                        price[system.row(r)] = -outcome.duals[r];
                Rational normal_dual = outcome.duals.back();

                TermCost term = [&] (size_t i, const Tuple & image) -> ExtRat {
                    auto & target = b.value(positive[i].symbol, image);
                    if (target.is_infinite())
                        return ExtRat();
                    if (positive[i].value.is_infinite())
                        return ExtRat::infinity();
                    auto p = price.find({ positive[i].symbol, image });
                    if (p == price.end())
                        return ExtRat();
                    return positive[i].value * ExtRat(p->second);
                };
                auto best = branch_and_bound(a.size(), b.size(), tuples, weights, term, options.max_maps);
                if (best.value.is_infinite() || best.value.value() - normal_dual >= 0)
                    return std::nullopt;
                if (! present.insert(best.witness).second)
                    fail(ErrorKind::BadParameter, "column generation repeated a column");
                if (family.size() >= options.max_columns)
                    fail(ErrorKind::ResourceLimit, "column generation exceeded " + std::to_string(options.max_columns) + " columns");
                family.push_back(best.witness);
                columns.push_back(system.column(best.witness));
            }
        }
    }

    IfhSystem::IfhSystem(const ValuedStructure & a, const ValuedStructure & b) :
        _a(a),
        _b(b),
        _positive(a.positive_entries())
    {
        require_same_signature(a, b);
    }

    auto IfhSystem::column(const Mapping & g) -> Column
    {
        map<size_t, Rational> sums;
        for (auto & entry : _positive) {
            auto image = g.apply(entry.tuple);
            if (_b.value(entry.symbol, image).is_infinite())
                continue;
            if (entry.value.is_infinite())
                fail(ErrorKind::BadParameter, "mapping does not have finite support");
            auto key = pair{ entry.symbol, image };
            auto it = _row_index.find(key);
            if (it == _row_index.end()) {
                it = _row_index.emplace(key, _rows.size()).first;
                _rows.push_back(key);
            }
            sums[it->second] += entry.value.value();
        }
        return Column(sums.begin(), sums.end());
    }

    auto IfhSystem::bound(size_t i) const -> Rational
    {
        return _b.value(_rows[i].first, _rows[i].second).value();
    }

    auto IfhSystem::build_lp(const vector<Column> & columns, const vector<Rational> & objective) const -> LinProgram
    {
        LinProgram lp;
        vector<VarId> omega;
        for (size_t i = 0 ; i < columns.size() ; ++i) {
            omega.push_back(lp.add_variable("w" + std::to_string(i)));
            if (objective[i] != 0)
                lp.set_objective(omega.back(), objective[i]);
        }

        vector<vector<Term> > rows(_rows.size());
        for (size_t i = 0 ; i < columns.size() ; ++i)
            for (auto & [r, coefficient] : columns[i])
                rows[r].push_back(Term{ omega[i], coefficient });
        for (size_t r = 0 ; r < rows.size() ; ++r)
            lp.add_constraint(rows[r], Relation::LessEqual, bound(r), tuple_text(_b, _rows[r].first, _rows[r].second));

        vector<Term> normal;
        for (auto v : omega)
            normal.push_back(Term{ v, 1 });
        lp.add_constraint(normal, Relation::Equal, 1, "sum");
        return lp;
    }

    auto find_ifh(const ValuedStructure & a, const ValuedStructure & b, const Options & options) -> optional<IfhDistribution>
    {
        require_same_signature(a, b);
        auto prefix = enumerate_finite_support_prefix(a, b, options.max_columns);
        if (prefix.mappings.empty())
            return std::nullopt;

        optional<IfhDistribution> result;
        if (prefix.complete)
            result = full_ifh(a, b, prefix.mappings, options);
        else {
            prefix.mappings.resize(std::min<size_t>(prefix.mappings.size(), initial_generated_columns));
            result = generated_ifh(a, b, std::move(prefix.mappings), options);
        }

        if (result) {
            auto check = validate_ifh(a, b, *result);
            if (! check.valid)
                fail(ErrorKind::BadParameter, "internal error: LP returned an invalid distribution: " + check.violation);
        }
        return result;
    }

    auto improves(const ValuedStructure & a, const ValuedStructure & b, const Options & options) -> bool
    {
        return find_ifh(a, b, options).has_value();
    }

    auto equivalent(const ValuedStructure & a, const ValuedStructure & b, const Options & options) -> bool
    {
        return improves(a, b, options) && improves(b, a, options);
    }

    auto validate_ifh(const ValuedStructure & a, const ValuedStructure & b, const IfhDistribution & omega) -> IfhCheck
    {
        require_same_signature(a, b);

        Rational total;
        for (auto & [g, weight] : omega.support) {
            if (g.size() != a.size() || g.target_size() != b.size())
                return IfhCheck{ false, "mapping does not match the universes" };
            if (weight < 0)
                return IfhCheck{ false, "negative weight " + rational_string(weight) };
            total += weight;
        }
        if (total != 1)
            return IfhCheck{ false, "NotADistribution: weights sum to " + rational_string(total) };

        map<pair<size_t, Tuple>, ExtRat> load;
        auto positive = a.positive_entries();
        for (auto & [g, weight] : omega.support)
            for (auto & entry : positive)
                load[{ entry.symbol, g.apply(entry.tuple) }] += ExtRat(weight) * entry.value;

        for (auto & [key, value] : load) {
            auto & limit = b.value(key.first, key.second);
            if (value > limit)
                return IfhCheck{ false, tuple_text(b, key.first, key.second) + ": " + value.str() + " > " + limit.str() };
        }
        return IfhCheck{ true, "" };
    }
}
