/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/structure.hh>
#include <vcsp/errors.hh>

#include <algorithm>
#include <set>

using std::function;
using std::max;
using std::optional;
using std::pair;
using std::set;
using std::size_t;
using std::sort;
using std::string;
using std::uint64_t;
using std::unique;
using std::vector;

namespace vcsp
{
    auto TupleHash::operator() (const Tuple & t) const noexcept -> size_t
    {
        size_t h = 0xcbf29ce484222325ull;
        for (auto e : t) {
            h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0x100000001b3ull;
        }
        return h;
    }

    Signature::Signature(vector<Symbol> symbols)
    {
        for (auto & s : symbols)
            add(std::move(s));
    }

    auto Signature::add(Symbol symbol) -> size_t
    {
        if (symbol.arity < 1)
            fail(ErrorKind::SchemaError, "symbol '" + symbol.name + "' must have arity at least 1");
        if (find(symbol.name))
            fail(ErrorKind::SchemaError, "duplicate symbol '" + symbol.name + "'");
        _symbols.push_back(std::move(symbol));
        return _symbols.size() - 1;
    }

    auto Signature::find(const string & name) const -> optional<size_t>
    {
        for (size_t i = 0 ; i < _symbols.size() ; ++i)
            if (_symbols[i].name == name)
                return i;
        return std::nullopt;
    }

    auto Signature::max_arity() const -> unsigned
    {
        unsigned result = 0;
        for (auto & s : _symbols)
            result = max(result, s.arity);
        return result;
    }

    auto tuple_count(size_t universe_size, unsigned arity) -> optional<uint64_t>
    {
        uint64_t result = 1;
        for (unsigned i = 0 ; i < arity ; ++i) {
            if (universe_size != 0 && result > UINT64_MAX / universe_size)
                return std::nullopt;
            result *= universe_size;
        }
        return result;
    }

    auto for_each_tuple(size_t universe_size, unsigned arity, const function<void (const Tuple &)> & fn) -> void
    {
        if (universe_size == 0)
            return;
        Tuple t(arity, 0);
        while (true) {
            fn(t);
            unsigned pos = arity;
            while (pos > 0) {
                --pos;
                if (++t[pos] < universe_size)
                    break;
                t[pos] = 0;
                if (pos == 0)
                    return;
            }
            if (arity == 0)
                return;
        }
    }

    auto element_set(const Tuple & t) -> vector<Element>
    {
        vector<Element> result(t.begin(), t.end());
        sort(result.begin(), result.end());
        result.erase(unique(result.begin(), result.end()), result.end());
        return result;
    }

    ValuedStructure::ValuedStructure(Signature signature, vector<string> universe) :
        _signature(std::move(signature)),
        _universe(std::move(universe)),
        _tables(_signature.size())
    {
        if (_universe.empty())
            fail(ErrorKind::SchemaError, "universe must be nonempty");
        for (size_t i = 0 ; i < _universe.size() ; ++i)
            if (! _index.emplace(_universe[i], Element(i)).second)
                fail(ErrorKind::SchemaError, "duplicate element '" + _universe[i] + "'");
    }

    auto ValuedStructure::find_element(const string & name) const -> optional<Element>
    {
        auto i = _index.find(name);
        if (i == _index.end())
            return std::nullopt;
        return i->second;
    }

    auto ValuedStructure::value(size_t symbol, const Tuple & t) const -> const ExtRat &
    {
        auto & table = _tables[symbol];
        if (! table.overrides.empty()) {
            auto i = table.overrides.find(t);
            if (i != table.overrides.end())
                return i->second;
        }
        return table.default_value;
    }

    auto ValuedStructure::default_value(size_t symbol) const -> const ExtRat &
    {
        return _tables[symbol].default_value;
    }

    auto ValuedStructure::set_default(size_t symbol, const ExtRat & v) -> void
    {
        auto & table = _tables[symbol];
        table.default_value = v;
        std::erase_if(table.overrides, [&] (const auto & kv) { return kv.second == v; });
    }

    auto ValuedStructure::set(size_t symbol, const Tuple & t, const ExtRat & v) -> void
    {
        if (t.size() != _signature[symbol].arity)
            fail(ErrorKind::ArityMismatch, "tuple of length " + std::to_string(t.size()) + " for symbol '"
                    + _signature[symbol].name + "'");
        for (auto e : t)
            if (e >= _universe.size())
                fail(ErrorKind::UnknownElement, "element index " + std::to_string(e) + " out of range");

        auto & table = _tables[symbol];
        if (v == table.default_value)
            table.overrides.erase(t);
        else
            table.overrides.insert_or_assign(t, v);
    }

    auto ValuedStructure::overrides(size_t symbol) const -> vector<pair<Tuple, ExtRat> >
    {
        vector<pair<Tuple, ExtRat> > result(_tables[symbol].overrides.begin(), _tables[symbol].overrides.end());
        sort(result.begin(), result.end(), [] (const auto & a, const auto & b) { return a.first < b.first; });
        return result;
    }

    auto ValuedStructure::for_each_value(size_t symbol, const function<void (const Tuple &, const ExtRat &)> & fn) const -> void
    {
        for_each_tuple(size(), _signature[symbol].arity, [&] (const Tuple & t) { fn(t, value(symbol, t)); });
    }

    auto ValuedStructure::positive_entries() const -> vector<Entry>
    {
        vector<Entry> result;
        for (size_t s = 0 ; s < _signature.size() ; ++s) {
            if (_tables[s].default_value.is_positive())
                for_each_value(s, [&] (const Tuple & t, const ExtRat & v) {
                        if (v.is_positive())
                            result.push_back(Entry{ s, t, v });
                        });
            else
                for (auto & [t, v] : overrides(s))
                    if (v.is_positive())
                        result.push_back(Entry{ s, t, v });
        }
        return result;
    }

    auto ValuedStructure::infinite_entries() const -> vector<Entry>
    {
        vector<Entry> result;
        for (size_t s = 0 ; s < _signature.size() ; ++s) {
            if (_tables[s].default_value.is_infinite())
                for_each_value(s, [&] (const Tuple & t, const ExtRat & v) {
                        if (v.is_infinite())
                            result.push_back(Entry{ s, t, v });
                        });
            else
                for (auto & [t, v] : overrides(s))
                    if (v.is_infinite())
                        result.push_back(Entry{ s, t, v });
        }
        return result;
    }

    auto ValuedStructure::has_finite_tuple() const -> bool
    {
        for (size_t s = 0 ; s < _signature.size() ; ++s) {
            if (_tables[s].default_value.is_finite()) {
                auto total = tuple_count(size(), _signature[s].arity);
                if (! total || *total > _tables[s].overrides.size())
                    return true;
                // every tuple may be overridden
                for (auto & [t, v] : _tables[s].overrides)
                    if (v.is_finite())
                        return true;
            }
            else
                for (auto & [t, v] : _tables[s].overrides)
                    if (v.is_finite())
                        return true;
        }
        return false;
    }

    auto ValuedStructure::with_symbol(const Symbol & symbol, const ExtRat & default_value) const -> ValuedStructure
    {
        ValuedStructure result = *this;
        result._signature.add(symbol);
        result._tables.emplace_back();
        result._tables.back().default_value = default_value;
        return result;
    }

    auto ValuedStructure::reordered(const Signature & order) const -> ValuedStructure
    {
        if (order.size() != _signature.size())
            fail(ErrorKind::SignatureMismatch, "signatures have different sizes");
        ValuedStructure result(order, _universe);
        for (size_t s = 0 ; s < order.size() ; ++s) {
            auto mine = _signature.find(order[s].name);
            if (! mine || _signature[*mine].arity != order[s].arity)
                fail(ErrorKind::SignatureMismatch, "symbol '" + order[s].name + "' missing or of different arity");
            result._tables[s] = _tables[*mine];
        }
        return result;
    }

    auto ValuedStructure::same_values(const ValuedStructure & other) const -> bool
    {
        if (_signature != other._signature || _universe != other._universe)
            return false;
        for (size_t s = 0 ; s < _signature.size() ; ++s) {
            if (_tables[s].default_value == other._tables[s].default_value) {
                for (auto & [t, v] : _tables[s].overrides)
                    if (other.value(s, t) != v)
                        return false;
                for (auto & [t, v] : other._tables[s].overrides)
                    if (value(s, t) != v)
                        return false;
            }
            else {
                bool same = true;
                for_each_value(s, [&] (const Tuple & t, const ExtRat & v) {
                        if (same && other.value(s, t) != v)
                            same = false;
                        });
                if (! same)
                    return false;
            }
        }
        return true;
    }

    RelationalStructure::RelationalStructure(Signature signature, vector<string> universe) :
        _signature(std::move(signature)),
        _universe(std::move(universe)),
        _relations(_signature.size())
    {
    }

    auto RelationalStructure::add(size_t symbol, const Tuple & t) -> void
    {
        if (t.size() != _signature[symbol].arity)
            fail(ErrorKind::ArityMismatch, "tuple of wrong arity for '" + _signature[symbol].name + "'");
        for (auto e : t)
            if (e >= _universe.size())
                fail(ErrorKind::UnknownElement, "element index out of range");
        auto & rel = _relations[symbol];
        auto i = std::lower_bound(rel.begin(), rel.end(), t);
        if (i == rel.end() || *i != t)
            rel.insert(i, t);
    }

    auto RelationalStructure::contains(size_t symbol, const Tuple & t) const -> bool
    {
        auto & rel = _relations[symbol];
        return std::binary_search(rel.begin(), rel.end(), t);
    }

    auto RelationalStructure::tuple_total() const -> size_t
    {
        size_t result = 0;
        for (auto & r : _relations)
            result += r.size();
        return result;
    }

    auto pos(const ValuedStructure & a) -> RelationalStructure
    {
        RelationalStructure result(a.signature(), a.universe());
        for (auto & e : a.positive_entries())
            result.add(e.symbol, e.tuple);
        return result;
    }

    auto require_same_signature(const ValuedStructure & a, const ValuedStructure & b) -> void
    {
        if (a.signature() != b.signature())
            fail(ErrorKind::SignatureMismatch, "structures have different signatures");
    }
}
