/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/sherali.hh>
#include <vcsp/errors.hh>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

using std::map;
using std::optional;
using std::pair;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace vcsp
{
    namespace
    {
        auto power(size_t base, size_t exponent) -> uint64_t
        {
            uint64_t result = 1;
            for (size_t i = 0 ; i < exponent ; ++i) {
                if (base != 0 && result > UINT64_MAX / base)
                    return UINT64_MAX;
                result *= base;
            }
            return result;
        }

        // Nonempty subsets of {0..n-1} of size at most k, by size then lexicographically.
        auto small_subsets(size_t n, unsigned k) -> vector<VertexSet>
        {
            vector<VertexSet> result;
            VertexSet current;
            std::function<void (size_t, size_t)> choose = [&] (size_t from, size_t remaining) {
                if (remaining == 0) {
                    result.push_back(current);
                    return;
                }
                for (size_t e = from ; e + remaining <= n ; ++e) {
                    current.push_back(Element(e));
                    choose(e + 1, remaining - 1);
                    current.pop_back();
                }
            };
            for (size_t size = 1 ; size <= std::min<size_t>(k, n) ; ++size)
                choose(0, size);
            return result;
        }

        // Positions of the members of subset within scope; subset must be contained in scope.
        auto positions_in(const VertexSet & scope, const VertexSet & subset) -> vector<size_t>
        {
            vector<size_t> result;
            for (auto v : subset)
                result.push_back(size_t(std::lower_bound(scope.begin(), scope.end(), v) - scope.begin()));
            return result;
        }

        auto is_subset(const VertexSet & small, const VertexSet & big) -> bool
        {
            return std::includes(big.begin(), big.end(), small.begin(), small.end());
        }

        // Adds lambda(outer) marginalised onto the scope of inner = lambda(inner).
        auto add_marginal(SAInstance & sa, size_t outer, size_t inner) -> void
        {
            auto positions = positions_in(sa.families[outer].scope, sa.families[inner].scope);
            auto inner_count = sa.variables[inner].size();
            vector<vector<Term> > rows(inner_count);

            for (size_t code = 0 ; code < sa.variables[outer].size() ; ++code) {
                auto & var = sa.variables[outer][code];
                if (! var)
                    continue;
                auto values = sa.assignment(outer, code);
                size_t restricted = 0;
                for (auto p : positions)
                    restricted = restricted * sa.target_size + values[p];
                rows[restricted].push_back(Term{ *var, 1 });
            }

            for (size_t s = 0 ; s < inner_count ; ++s) {
                if (auto & var = sa.variables[inner][s])
                    rows[s].push_back(Term{ *var, -1 });
                if (! rows[s].empty())
                    sa.lp.add_constraint(rows[s], Relation::Equal, 0,
                            "sa1_" + std::to_string(outer) + "_" + std::to_string(inner) + "_" + std::to_string(s));
            }
        }

        auto delta_of(const vector<Entry> & positive) -> ExtRat
        {
            ExtRat delta = ExtRat::infinity();
            for (auto & e : positive)
                delta = std::min(delta, e.value);
            return delta;
        }

        struct TargetValues
        {
            CoreWeighting c_star;
            Rational m_star;
            ExtRat delta;
            ExtRat off;
        };

        auto target_values(const ValuedStructure & a, const Options & options) -> TargetValues
        {
            auto c_star = core_weighting(a, options);
            auto positive = a.positive_entries();
            ExtRat m_star;
            for (auto & e : positive)
                m_star += e.value * c_star.c.value(e.symbol, e.tuple);
            if (m_star.is_infinite())
                fail(ErrorKind::BadParameter, "core weighting has infinite total");
            auto delta = delta_of(positive);
            ExtRat off = 1;
            if (delta.is_finite())
                off = ExtRat(Rational(1) + m_star.value() / delta.value());
            return TargetValues{ c_star, m_star.value(), delta, off };
        }

        auto require_core(const ValuedStructure & a, const Options & options) -> void
        {
            if (! is_core(a, options).core)
                fail(ErrorKind::PreconditionFailed, "left structure is not a core");
        }

        // Fills the gadget tables: every lift t of a positive tuple x of a
        // accepted by keep gets c*(f, x); everything else gets the off value.
        auto fill_gadget(ValuedStructure & gadget, const ValuedStructure & a, const TargetValues & values,
                const vector<vector<Element> > & lifts, const std::function<bool (const Entry &, const Tuple &)> & keep,
                const Options & options) -> void
        {
            for (size_t s = 0 ; s < a.signature().size() ; ++s)
                gadget.set_default(s, values.off);

            uint64_t enumerated = 0;
            for (auto & entry : a.positive_entries()) {
                auto arity = entry.tuple.size();
                Tuple t(arity);
                std::function<void (size_t)> lift = [&] (size_t p) {
                    if (p == arity) {
                        if (++enumerated > options.max_maps)
                            fail(ErrorKind::ResourceLimit, "gadget relation too large");
                        if (keep(entry, t))
                            gadget.set(entry.symbol, t, values.c_star.c.value(entry.symbol, entry.tuple));
                        return;
                    }
                    for (auto x : lifts[entry.tuple[p]]) {
                        t[p] = x;
                        lift(p + 1);
                    }
                };
                lift(0);
            }
        }

        auto bit_string(uint64_t bits, size_t length) -> string
        {
            string result;
            for (size_t i = 0 ; i < length ; ++i)
                result += (bits >> i) & 1 ? '1' : '0';
            return result;
        }

        auto same_entry(const Entry & x, size_t symbol, const Tuple & t) -> bool
        {
            return x.symbol == symbol && x.tuple == t;
        }
    }

    auto SAInstance::assignment(size_t family, size_t code) const -> vector<Element>
    {
        vector<Element> values(families[family].scope.size());
        for (size_t p = values.size() ; p-- > 0 ; ) {
            values[p] = Element(code % target_size);
            code /= target_size;
        }
        return values;
    }

    auto SAInstance::code_of(size_t family, const Mapping & h) const -> size_t
    {
        size_t code = 0;
        for (auto v : families[family].scope)
            code = code * target_size + h(v);
        return code;
    }

    auto build_sa(const ValuedStructure & a, const ValuedStructure & b, unsigned k,
            const Options & options, bool canonical) -> SAInstance
    {
        require_same_signature(a, b);
        if (k < 1)
            fail(ErrorKind::BadParameter, "level must be at least 1");

        SAInstance sa{ k, b.size(), { }, { }, { }, { } };
        for (auto & e : a.positive_entries())
            sa.families.push_back(SaFamily{ e.symbol, e.tuple, element_set(e.tuple), e.value });

        map<VertexSet, size_t> hub;
        if (canonical) {
            for (auto & subset : small_subsets(a.size(), k)) {
                Tuple t = subset;
                t.resize(k, subset.back());
                hub[subset] = sa.families.size();
                sa.families.push_back(SaFamily{ std::nullopt, t, subset, ExtRat(1) });
            }
        }
        else {
            auto count = tuple_count(a.size(), k);
            if (! count || *count > options.max_sa_variables)
                fail(ErrorKind::ResourceLimit, "too many k-tuples");
            for_each_tuple(a.size(), k, [&] (const Tuple & t) {
                    sa.families.push_back(SaFamily{ std::nullopt, t, element_set(t), ExtRat(1) });
                    });
        }

        uint64_t total = 0;
        for (auto & f : sa.families) {
            auto count = power(b.size(), f.scope.size());
            if (count == UINT64_MAX || total + count > options.max_sa_variables)
                fail(ErrorKind::ResourceLimit, "Sherali-Adams program exceeds " + std::to_string(options.max_sa_variables) + " variables");
            total += count;
        }

        for (size_t fi = 0 ; fi < sa.families.size() ; ++fi) {
            auto & family = sa.families[fi];
            auto count = power(b.size(), family.scope.size());
            auto positions = positions_in(family.scope, family.tuple);
            sa.variables.emplace_back(count);
            vector<Term> normal;
            for (size_t code = 0 ; code < count ; ++code) {
                ExtRat product;
                if (family.symbol) {
                    auto values = sa.assignment(fi, code);
                    Tuple image(family.tuple.size());
                    for (size_t p = 0 ; p < image.size() ; ++p)
                        image[p] = values[positions[p]];
                    product = family.value * b.value(*family.symbol, image);
                }
                if (product.is_infinite()) {
                    sa.forced_zero.emplace_back(fi, code);
                    continue;
                }
                auto var = sa.lp.add_variable("l" + std::to_string(fi) + "_" + std::to_string(code));
                if (! product.is_zero())
                    sa.lp.set_objective(var, product.value());
                sa.variables[fi][code] = var;
                normal.push_back(Term{ var, 1 });
            }
            sa.lp.add_constraint(normal, Relation::Equal, 1, "sa2_" + std::to_string(fi));
        }

        if (canonical) {
            // every marginal of size at most k is tied to the family of its set
            for (size_t g = 0 ; g < sa.families.size() ; ++g) {
                auto & scope = sa.families[g].scope;
                for (auto & [subset, h] : hub) {
                    if (h == g || ! is_subset(subset, scope))
                        continue;
                    add_marginal(sa, g, h);
                }
            }
        }
        else {
            for (size_t g = 0 ; g < sa.families.size() ; ++g)
                for (size_t f = 0 ; f < sa.families.size() ; ++f) {
                    if (f == g)
                        continue;
                    auto & small = sa.families[f].scope, & big = sa.families[g].scope;
                    if (small.size() > k || ! is_subset(small, big))
                        continue;
                    if (small == big && f > g)
                        continue;
                    add_marginal(sa, g, f);
                }
        }

        return sa;
    }

    auto solve_sa(const SAInstance & instance, const Options & options) -> SaSolution
    {
        auto outcome = solve_lp(instance.lp, options, "sherali-adams");
        if (outcome.status == LpStatus::Infeasible)
            return SaSolution{ ExtRat::infinity(), { } };
        if (outcome.status != LpStatus::Optimal)
            fail(ErrorKind::BadParameter, "Sherali-Adams program is unbounded");
        return SaSolution{ ExtRat(outcome.value), std::move(outcome.values) };
    }

    auto opt_k(const ValuedStructure & a, const ValuedStructure & b, unsigned k, const Options & options) -> SaSolution
    {
        return solve_sa(build_sa(a, b, k, options), options);
    }

    auto integral_solution(const SAInstance & instance, const Mapping & h) -> optional<vector<Rational> >
    {
        vector<Rational> values(instance.lp.variable_count());
        for (size_t f = 0 ; f < instance.families.size() ; ++f) {
            auto & var = instance.variables[f][instance.code_of(f, h)];
            if (! var)
                return std::nullopt;
            values[var->index] = 1;
        }
        return values;
    }

    auto sa_tight_decide(const ValuedStructure & a, unsigned k, const Options & options) -> TightnessCertificate
    {
        if (k < 1)
            fail(ErrorKind::BadParameter, "level must be at least 1");
        auto core = compute_core(a, options);
        auto width = twms(pos(core.core), options);
        auto over = overlap(core.core);
        bool tight = width.width + 1 <= k && over.value <= k;
        return TightnessCertificate{ tight, std::move(core), std::move(width), std::move(over) };
    }

    auto gap_instance_treewidth(const ValuedStructure & a, unsigned k, const Options & options) -> Gadget
    {
        if (k < 1)
            fail(ErrorKind::BadParameter, "level must be at least 1");
        require_core(a, options);

        auto relational = pos(a);
        auto graph = gaifman(relational);

        // components of the Gaifman graph, each with its own width
        vector<size_t> component(a.size(), a.size());
        vector<VertexSet> members;
        for (Element v = 0 ; v < a.size() ; ++v) {
            if (component[v] != a.size())
                continue;
            VertexSet found{ v };
            component[v] = members.size();
            for (size_t i = 0 ; i < found.size() ; ++i)
                for (auto u : graph.neighbours(found[i]))
                    if (component[u] == a.size()) {
                        component[u] = members.size();
                        found.push_back(u);
                    }
            std::sort(found.begin(), found.end());
            members.push_back(found);
        }

        size_t best_width = 0;
        optional<size_t> best_component;
        for (size_t c = 0 ; c < members.size() ; ++c) {
            vector<string> names;
            vector<Element> local(a.size(), 0);
            for (size_t i = 0 ; i < members[c].size() ; ++i) {
                local[members[c][i]] = Element(i);
                names.push_back(a.element_name(members[c][i]));
            }
            RelationalStructure part(a.signature(), names);
            for (size_t s = 0 ; s < a.signature().size() ; ++s)
                for (auto & t : relational.relation(s))
                    if (component[t.front()] == c) {
                        Tuple mapped(t.size());
                        for (size_t p = 0 ; p < t.size() ; ++p)
                            mapped[p] = local[t[p]];
                        part.add(s, mapped);
                    }
            auto width = twms(part, options).width;
            if (! best_component || width > best_width) {
                best_width = width;
                best_component = c;
            }
        }
        if (best_width < k)
            fail(ErrorKind::PreconditionFailed, "treewidth modulo scopes " + std::to_string(best_width) + " is below the level");

        Element base = members[*best_component].front();

        // universe: (a, bits over incident edges) with the prescribed parity
        vector<string> names;
        vector<Element> projection;
        vector<uint64_t> bits;
        vector<vector<Element> > lifts(a.size());
        uint64_t total = 0;
        for (Element v = 0 ; v < a.size() ; ++v) {
            auto degree = graph.neighbours(v).size();
            total += degree == 0 ? 1 : power(2, degree - 1);
            if (degree >= 63 || total > options.max_gadget_elements)
                fail(ErrorKind::ResourceLimit, "treewidth gadget exceeds " + std::to_string(options.max_gadget_elements) + " elements");
            unsigned parity = v == base ? 1 : 0;
            for (uint64_t m = 0 ; m < (uint64_t(1) << degree) ; ++m) {
                if (unsigned(std::popcount(m) % 2) != parity)
                    continue;
                lifts[v].push_back(Element(names.size()));
                names.push_back(a.element_name(v) + ":" + bit_string(m, degree));
                projection.push_back(v);
                bits.push_back(m);
            }
        }
        if (names.empty())
            fail(ErrorKind::PreconditionFailed, "gadget universe is empty");

        auto edge_bit = [&] (Element v, Element u) -> size_t {
            auto & n = graph.neighbours(v);
            return size_t(std::lower_bound(n.begin(), n.end(), u) - n.begin());
        };

        auto values = target_values(a, options);
        ValuedStructure gadget(a.signature(), names);
        fill_gadget(gadget, a, values, lifts, [&] (const Entry & entry, const Tuple & t) {
                for (size_t l = 0 ; l < t.size() ; ++l)
                    for (size_t m = l + 1 ; m < t.size() ; ++m) {
                        auto x = entry.tuple[l], y = entry.tuple[m];
                        if (x == y)
                            continue;
                        if (((bits[t[l]] >> edge_bit(x, y)) & 1) != ((bits[t[m]] >> edge_bit(y, x)) & 1))
                            return false;
                    }
                return true;
                }, options);

        GadgetParams params{ values.c_star, values.m_star, values.delta, Mapping(projection, a.size()),
            base, { }, std::nullopt, { }, { }, { } };
        for (Element v = 0 ; v < a.size() ; ++v)
            params.edges.push_back(graph.neighbours(v));
        return Gadget{ std::move(gadget), std::move(params) };
    }

    auto gap_instance_overlap(const ValuedStructure & a, unsigned k, const Options & options) -> Gadget
    {
        if (k < 1)
            fail(ErrorKind::BadParameter, "level must be at least 1");
        require_core(a, options);

        auto over = overlap(a);
        if (over.value < k + 1)
            fail(ErrorKind::PreconditionFailed, "overlap " + std::to_string(over.value) + " is below level + 1");

        auto positive = a.positive_entries();
        vector<pair<Entry, Entry> > pairs;
        for (size_t i = 0 ; i < positive.size() ; ++i)
            for (size_t j = 0 ; j < positive.size() ; ++j)
                if (i != j)
                    pairs.emplace_back(positive[i], positive[j]);
        auto length = pairs.size();
        if (length > options.max_overlap_pairs)
            fail(ErrorKind::ResourceLimit, std::to_string(length) + " tuple pairs exceed the cap of " + std::to_string(options.max_overlap_pairs));
        auto per_element = power(2, length);
        if (per_element * a.size() > options.max_gadget_elements)
            fail(ErrorKind::ResourceLimit, "overlap gadget exceeds " + std::to_string(options.max_gadget_elements) + " elements");

        auto & [first, second] = *over.pair;
        auto x_set = element_set(first.tuple), y_set = element_set(second.tuple);
        VertexSet common;
        std::set_intersection(x_set.begin(), x_set.end(), y_set.begin(), y_set.end(), std::back_inserter(common));
        auto first_occurrences = [&] (const Tuple & t) {
            vector<size_t> result;
            for (auto v : common)
                result.push_back(size_t(std::find(t.begin(), t.end(), v) - t.begin()));
            std::sort(result.begin(), result.end());
            return result;
        };
        auto index_x = first_occurrences(first.tuple), index_y = first_occurrences(second.tuple);
        auto n = common.size();

        vector<string> names;
        vector<Element> projection;
        vector<vector<Element> > lifts(a.size());
        for (Element v = 0 ; v < a.size() ; ++v)
            for (uint64_t m = 0 ; m < per_element ; ++m) {
                lifts[v].push_back(Element(names.size()));
                names.push_back(a.element_name(v) + ":" + bit_string(m, length));
                projection.push_back(v);
            }

        auto bit = [&] (Element b, size_t i) -> unsigned {
            return unsigned(((b - lifts[projection[b]].front()) >> i) & 1);
        };

        auto excluded_by = [&] (const Entry & entry, const Tuple & t, const vector<size_t> & indices,
                bool use_first, unsigned parity) {
            VertexSet chosen;
            for (auto j : indices)
                chosen.push_back(entry.tuple[j]);
            if (element_set(chosen).size() != n)
                return false;
            for (size_t i = 0 ; i < length ; ++i) {
                auto & side = use_first ? pairs[i].first : pairs[i].second;
                if (! same_entry(side, entry.symbol, entry.tuple))
                    continue;
                unsigned x = 0;
                for (auto j : indices)
                    x ^= bit(t[j], i);
                if (x == parity)
                    return true;
            }
            return false;
        };

        auto values = target_values(a, options);
        ValuedStructure gadget(a.signature(), names);
        fill_gadget(gadget, a, values, lifts, [&] (const Entry & entry, const Tuple & t) {
                if (entry.symbol == first.symbol && excluded_by(entry, t, index_x, true, 1))
                    return false;
                if (entry.symbol == second.symbol && excluded_by(entry, t, index_y, false, 0))
                    return false;
                return true;
                }, options);

        GadgetParams params{ values.c_star, values.m_star, values.delta, Mapping(projection, a.size()),
            std::nullopt, { }, over.pair, index_x, index_y, pairs };
        return Gadget{ std::move(gadget), std::move(params) };
    }
}
