/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/mappings.hh>
#include <vcsp/errors.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

using std::function;
using std::map;
using std::optional;
using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace vcsp
{
    namespace
    {
        auto require_compatible(const ValuedStructure & a, const ValuedStructure & b, const Mapping & h) -> void
        {
            require_same_signature(a, b);
            if (h.size() != a.size() || h.target_size() != b.size())
                fail(ErrorKind::BadParameter, "mapping does not match the universes");
        }

        // Orders heavier elements first; infinite weight beats any finite one.
        struct ElementWeight
        {
            uint64_t infinite = 0;
            Rational finite;
        };

        class BranchAndBound
        {
            private:
                size_t _target_size;
                const vector<Tuple> & _tuples;
                const TermCost & _term;
                uint64_t _max_nodes;
                bool _stop_at_zero;

                vector<Element> _order;
                vector<vector<size_t> > _completed_at;
                vector<Element> _assignment;
                Tuple _scratch;
                uint64_t _nodes = 0;

                ExtRat _best;
                vector<Element> _best_assignment;

                auto done() const -> bool
                {
                    return _stop_at_zero && _best.is_zero();
                }

                auto completed_cost(size_t depth) -> ExtRat
                {
                    ExtRat total;
                    for (auto i : _completed_at[depth]) {
                        const auto & t = _tuples[i];
                        _scratch.resize(t.size());
                        for (size_t p = 0 ; p < t.size() ; ++p)
                            _scratch[p] = _assignment[t[p]];
                        total += _term(i, _scratch);
                        if (total.is_infinite())
                            break;
                    }
                    return total;
                }

                auto search(size_t depth, const ExtRat & partial) -> void
                {
                    if (depth == _order.size()) {
                        _best = partial;
                        _best_assignment = _assignment;
                        return;
                    }

                    auto e = _order[depth];
                    for (size_t b = 0 ; b < _target_size && ! done() ; ++b) {
                        if (++_nodes > _max_nodes)
                            fail(ErrorKind::ResourceLimit, "branch and bound exceeded " + std::to_string(_max_nodes) + " nodes");
                        _assignment[e] = Element(b);
                        auto next = partial + completed_cost(depth);
                        if (next < _best)
                            search(depth + 1, next);
                    }
                    _assignment[e] = 0;
                }

            public:
                BranchAndBound(size_t source_size, size_t target_size, const vector<Tuple> & tuples,
                        const vector<ExtRat> & weights, const TermCost & term, uint64_t max_nodes, bool stop_at_zero) :
                    _target_size(target_size),
                    _tuples(tuples),
                    _term(term),
                    _max_nodes(max_nodes),
                    _stop_at_zero(stop_at_zero),
                    _assignment(source_size, 0)
                {
                    vector<ElementWeight> weight(source_size);
                    vector<bool> used(source_size, false);
                    for (size_t i = 0 ; i < tuples.size() ; ++i)
                        for (auto e : element_set(tuples[i])) {
                            used[e] = true;
                            if (weights[i].is_infinite())
                                ++weight[e].infinite;
                            else
                                weight[e].finite += weights[i].value();
                        }

                    for (size_t e = 0 ; e < source_size ; ++e)
                        if (used[e])
                            _order.push_back(Element(e));
                    std::stable_sort(_order.begin(), _order.end(), [&] (Element x, Element y) {
                            if (weight[x].infinite != weight[y].infinite)
                                return weight[x].infinite > weight[y].infinite;
                            return weight[x].finite > weight[y].finite;
                            });

                    vector<size_t> rank(source_size, 0);
                    for (size_t d = 0 ; d < _order.size() ; ++d)
                        rank[_order[d]] = d;
                    _completed_at.resize(_order.size());
                    for (size_t i = 0 ; i < tuples.size() ; ++i) {
                        size_t depth = 0;
                        for (auto e : tuples[i])
                            depth = std::max(depth, rank[e]);
                        _completed_at[depth].push_back(i);
                    }
                }

                auto run() -> OptResult
                {
                    // the constant map onto element 0 is the first incumbent
                    _best = ExtRat();
                    for (size_t d = 0 ; d < _order.size() ; ++d)
                        _best += completed_cost(d);
                    _best_assignment = _assignment;

                    if (! done() && ! _order.empty())
                        search(0, ExtRat());

                    return OptResult{ _best, Mapping(_best_assignment, _target_size) };
                }
        };

        auto positive_tuples(const ValuedStructure & a, vector<Entry> & entries) -> vector<Tuple>
        {
            entries = a.positive_entries();
            vector<Tuple> tuples;
            tuples.reserve(entries.size());
            for (auto & entry : entries)
                tuples.push_back(entry.tuple);
            return tuples;
        }

        auto entry_weights(const vector<Entry> & entries) -> vector<ExtRat>
        {
            vector<ExtRat> weights;
            weights.reserve(entries.size());
            for (auto & entry : entries)
                weights.push_back(entry.value);
            return weights;
        }

        // Backtracking over elements in index order, with forward checking on
        // the infinite tuples of the source.
        class SupportEnumerator
        {
            private:
                const ValuedStructure & _b;
                vector<Entry> _infinite;
                vector<vector<size_t> > _touching;
                vector<vector<char> > _domains;
                vector<Element> _assignment;
                vector<bool> _assigned;
                const function<bool (const Mapping &)> & _fn;
                bool _stopped = false;

                auto image_is_infinite(const Entry & entry) const -> bool
                {
                    Tuple image(entry.tuple.size());
                    for (size_t p = 0 ; p < image.size() ; ++p)
                        image[p] = _assignment[entry.tuple[p]];
                    return _b.value(entry.symbol, image).is_infinite();
                }

                auto propagate(Element e) -> bool
                {
                    for (auto i : _touching[e]) {
                        const auto & entry = _infinite[i];
                        optional<Element> open;
                        bool several = false;
                        for (auto x : entry.tuple)
                            if (! _assigned[x]) {
                                if (open && *open != x)
                                    several = true;
                                open = x;
                            }
                        if (several)
                            continue;
                        if (! open) {
                            if (! image_is_infinite(entry))
                                return false;
                            continue;
                        }

                        bool any = false;
                        auto & domain = _domains[*open];
                        _assigned[*open] = true;
                        for (size_t b = 0 ; b < domain.size() ; ++b)
                            if (domain[b]) {
                                _assignment[*open] = Element(b);
                                if (image_is_infinite(entry))
                                    any = true;
                                else
                                    domain[b] = 0;
                            }
                        _assigned[*open] = false;
                        _assignment[*open] = 0;
                        if (! any)
                            return false;
                    }
                    return true;
                }

                auto search(size_t depth) -> void
                {
                    if (depth == _assignment.size()) {
                        if (! _fn(Mapping(_assignment, _b.size())))
                            _stopped = true;
                        return;
                    }

                    auto e = Element(depth);
                    for (size_t b = 0 ; b < _b.size() && ! _stopped ; ++b) {
                        if (! _domains[e][b])
                            continue;
                        auto saved = _domains;
                        _assignment[e] = Element(b);
                        _assigned[e] = true;
                        if (propagate(e))
                            search(depth + 1);
                        _assigned[e] = false;
                        _assignment[e] = 0;
                        _domains = std::move(saved);
                    }
                }

            public:
                SupportEnumerator(const ValuedStructure & a, const ValuedStructure & b,
                        const function<bool (const Mapping &)> & fn) :
                    _b(b),
                    _infinite(a.infinite_entries()),
                    _touching(a.size()),
                    _domains(a.size(), vector<char>(b.size(), 1)),
                    _assignment(a.size(), 0),
                    _assigned(a.size(), false),
                    _fn(fn)
                {
                    for (size_t i = 0 ; i < _infinite.size() ; ++i)
                        for (auto e : element_set(_infinite[i].tuple))
                            _touching[e].push_back(i);
                }

                auto run() -> void
                {
                    // tuples over a single element restrict its domain up front
                    for (auto & entry : _infinite) {
                        auto elements = element_set(entry.tuple);
                        if (elements.size() != 1)
                            continue;
                        auto e = elements.front();
                        _assigned[e] = true;
                        for (size_t b = 0 ; b < _b.size() ; ++b) {
                            _assignment[e] = Element(b);
                            if (! image_is_infinite(entry))
                                _domains[e][b] = 0;
                        }
                        _assigned[e] = false;
                        _assignment[e] = 0;
                    }
                    search(0);
                }
        };

        // Per element: how often each (symbol, position, value) occurs among the
        // tuples containing it. Preserved by isomorphisms.
        auto element_profiles(const ValuedStructure & a) -> vector<map<std::tuple<size_t, unsigned, string>, size_t> >
        {
            vector<map<std::tuple<size_t, unsigned, string>, size_t> > profiles(a.size());
            for (size_t s = 0 ; s < a.signature().size() ; ++s)
                a.for_each_value(s, [&] (const Tuple & t, const ExtRat & v) {
                        auto text = v.str();
                        for (unsigned p = 0 ; p < t.size() ; ++p)
                            ++profiles[t[p]][{ s, p, text }];
                        });
            return profiles;
        }
    }

    auto cost(const ValuedStructure & a, const ValuedStructure & b, const Mapping & h) -> ExtRat
    {
        require_compatible(a, b, h);
        ExtRat total;
        for (auto & entry : a.positive_entries()) {
            total += entry.value * b.value(entry.symbol, h.apply(entry.tuple));
            if (total.is_infinite())
                break;
        }
        return total;
    }

    auto branch_and_bound(size_t source_size, size_t target_size, const vector<Tuple> & tuples,
            const vector<ExtRat> & weights, const TermCost & term, uint64_t max_nodes, bool stop_at_zero) -> OptResult
    {
        if (target_size == 0)
            fail(ErrorKind::BadParameter, "empty target universe");
        BranchAndBound search(source_size, target_size, tuples, weights, term, max_nodes, stop_at_zero);
        return search.run();
    }

    auto opt_bruteforce(const ValuedStructure & a, const ValuedStructure & b, const Options & options) -> OptResult
    {
        require_same_signature(a, b);
        vector<Entry> entries;
        auto tuples = positive_tuples(a, entries);
        TermCost term = [&] (size_t i, const Tuple & image) {
            return entries[i].value * b.value(entries[i].symbol, image);
        };
        return branch_and_bound(a.size(), b.size(), tuples, entry_weights(entries), term, options.max_maps);
    }

    auto find_finite_mapping(const ValuedStructure & a, const ValuedStructure & b, const Options & options) -> optional<Mapping>
    {
        require_same_signature(a, b);
        vector<Entry> entries;
        auto tuples = positive_tuples(a, entries);
        TermCost term = [&] (size_t i, const Tuple & image) {
            return (entries[i].value * b.value(entries[i].symbol, image)).is_infinite() ? ExtRat::infinity() : ExtRat();
        };
        auto result = branch_and_bound(a.size(), b.size(), tuples, entry_weights(entries), term, options.max_maps, true);
        if (result.value.is_infinite())
            return std::nullopt;
        return result.witness;
    }

    auto has_finite_support(const ValuedStructure & a, const ValuedStructure & b, const Mapping & g) -> bool
    {
        require_compatible(a, b, g);
        for (auto & entry : a.infinite_entries())
            if (! b.value(entry.symbol, g.apply(entry.tuple)).is_infinite())
                return false;
        return true;
    }

    auto for_each_finite_support(const ValuedStructure & a, const ValuedStructure & b,
            const function<bool (const Mapping &)> & fn) -> void
    {
        require_same_signature(a, b);
        SupportEnumerator enumerator(a, b, fn);
        enumerator.run();
    }

    auto enumerate_finite_support_prefix(const ValuedStructure & a, const ValuedStructure & b, uint64_t limit) -> SupportPrefix
    {
        SupportPrefix result{ { }, true };
        for_each_finite_support(a, b, [&] (const Mapping & g) {
                if (result.mappings.size() >= limit) {
                    result.complete = false;
                    return false;
                }
                result.mappings.push_back(g);
                return true;
                });
        return result;
    }

    auto enumerate_finite_support(const ValuedStructure & a, const ValuedStructure & b, const Options & options) -> vector<Mapping>
    {
        auto prefix = enumerate_finite_support_prefix(a, b, options.max_columns);
        if (! prefix.complete)
            fail(ErrorKind::ResourceLimit, "more than " + std::to_string(options.max_columns) + " finite-support mappings");
        return std::move(prefix.mappings);
    }

    auto valued_isomorphic(const ValuedStructure & a, const ValuedStructure & b) -> optional<Mapping>
    {
        require_same_signature(a, b);
        if (a.size() != b.size())
            return std::nullopt;

        auto profile_a = element_profiles(a);
        auto profile_b = element_profiles(b);
        {
            auto sorted_a = profile_a, sorted_b = profile_b;
            std::sort(sorted_a.begin(), sorted_a.end());
            std::sort(sorted_b.begin(), sorted_b.end());
            if (sorted_a != sorted_b)
                return std::nullopt;
        }

        auto n = a.size();
        vector<Element> image(n, 0);
        vector<bool> taken(n, false);

        // every tuple over {0..depth} that mentions depth must agree
        auto consistent = [&] (size_t depth) {
            for (size_t s = 0 ; s < a.signature().size() ; ++s) {
                bool ok = true;
                for_each_tuple(depth + 1, a.signature()[s].arity, [&] (const Tuple & t) {
                        if (! ok || std::find(t.begin(), t.end(), Element(depth)) == t.end())
                            return;
                        Tuple mapped(t.size());
                        for (size_t p = 0 ; p < t.size() ; ++p)
                            mapped[p] = image[t[p]];
                        if (a.value(s, t) != b.value(s, mapped))
                            ok = false;
                        });
                if (! ok)
                    return false;
            }
            return true;
        };

        function<bool (size_t)> extend = [&] (size_t depth) -> bool {
            if (depth == n)
                return true;
            for (size_t y = 0 ; y < n ; ++y) {
                if (taken[y] || profile_a[depth] != profile_b[y])
                    continue;
                image[depth] = Element(y);
                taken[y] = true;
                if (consistent(depth) && extend(depth + 1))
                    return true;
                taken[y] = false;
            }
            return false;
        };

        if (! extend(0))
            return std::nullopt;
        return Mapping(image, n);
    }
}
