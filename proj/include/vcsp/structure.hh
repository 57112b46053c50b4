/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_STRUCTURE_HH
#define VCSP_STRUCTURE_HH 1

#include <vcsp/extrat.hh>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vcsp
{
    using Element = std::uint32_t;
    using Tuple = std::vector<Element>;

    struct TupleHash
    {
        auto operator() (const Tuple & t) const noexcept -> std::size_t;
    };

    struct Symbol
    {
        std::string name;
        unsigned arity;

        friend auto operator== (const Symbol &, const Symbol &) -> bool = default;
    };

    class Signature
    {
        private:
            std::vector<Symbol> _symbols;

        public:
            Signature() = default;
            explicit Signature(std::vector<Symbol> symbols);

            auto add(Symbol symbol) -> std::size_t;

            auto size() const -> std::size_t
            {
                return _symbols.size();
            }

            auto operator[] (std::size_t i) const -> const Symbol &
            {
                return _symbols[i];
            }

            auto symbols() const -> const std::vector<Symbol> &
            {
                return _symbols;
            }

            auto find(const std::string & name) const -> std::optional<std::size_t>;
            auto max_arity() const -> unsigned;

            friend auto operator== (const Signature &, const Signature &) -> bool = default;
    };

    // One (symbol, tuple) pair together with its value.
    struct Entry
    {
        std::size_t symbol;
        Tuple tuple;
        ExtRat value;
    };

    // Number of tuples of the given arity over a universe, or nullopt on overflow.
    auto tuple_count(std::size_t universe_size, unsigned arity) -> std::optional<std::uint64_t>;

    // Calls fn on every tuple of the given arity, in lexicographic order.
    auto for_each_tuple(std::size_t universe_size, unsigned arity,
            const std::function<void (const Tuple &)> & fn) -> void;

    // Set of elements of a tuple, sorted and deduplicated.
    auto element_set(const Tuple & t) -> std::vector<Element>;

    class ValuedStructure
    {
        private:
            struct Table
            {
                ExtRat default_value;
                std::unordered_map<Tuple, ExtRat, TupleHash> overrides;
            };

            Signature _signature;
            std::vector<std::string> _universe;
            std::unordered_map<std::string, Element> _index;
            std::vector<Table> _tables;

        public:
            // Every table starts out as the constant zero function.
            ValuedStructure(Signature signature, std::vector<std::string> universe);

            auto signature() const -> const Signature &
            {
                return _signature;
            }

            auto size() const -> std::size_t
            {
                return _universe.size();
            }

            auto universe() const -> const std::vector<std::string> &
            {
                return _universe;
            }

            auto element_name(Element e) const -> const std::string &
            {
                return _universe[e];
            }

            auto find_element(const std::string & name) const -> std::optional<Element>;

            auto value(std::size_t symbol, const Tuple & t) const -> const ExtRat &;
            auto default_value(std::size_t symbol) const -> const ExtRat &;

            // Changes the default; existing overrides are kept unless they now
            // equal the default.
            auto set_default(std::size_t symbol, const ExtRat & v) -> void;
            auto set(std::size_t symbol, const Tuple & t, const ExtRat & v) -> void;

            // Overrides of one symbol, sorted by tuple.
            auto overrides(std::size_t symbol) const -> std::vector<std::pair<Tuple, ExtRat> >;

            // Every tuple of the symbol in lexicographic order, with its value.
            auto for_each_value(std::size_t symbol,
                    const std::function<void (const Tuple &, const ExtRat &)> & fn) const -> void;

            // tup(A)_{>0}, sorted by symbol then tuple.
            auto positive_entries() const -> std::vector<Entry>;

            // Tuples with value infinity, sorted by symbol then tuple.
            auto infinite_entries() const -> std::vector<Entry>;

            // Whether some tuple has a finite value.
            auto has_finite_tuple() const -> bool;

            // A copy with one extra symbol appended, constant at the given value.
            auto with_symbol(const Symbol & symbol, const ExtRat & default_value) const -> ValuedStructure;

            // A copy whose symbols follow the order of the given signature,
            // which must contain the same symbols.
            auto reordered(const Signature & order) const -> ValuedStructure;

            // Value-identical at every tuple (same signature and universe names).
            auto same_values(const ValuedStructure & other) const -> bool;
    };

    class RelationalStructure
    {
        private:
            Signature _signature;
            std::vector<std::string> _universe;
            std::vector<std::vector<Tuple> > _relations;

        public:
            RelationalStructure(Signature signature, std::vector<std::string> universe);

            auto signature() const -> const Signature &
            {
                return _signature;
            }

            auto size() const -> std::size_t
            {
                return _universe.size();
            }

            auto universe() const -> const std::vector<std::string> &
            {
                return _universe;
            }

            // Tuples of one relation, sorted and unique.
            auto relation(std::size_t symbol) const -> const std::vector<Tuple> &
            {
                return _relations[symbol];
            }

            auto add(std::size_t symbol, const Tuple & t) -> void;
            auto contains(std::size_t symbol, const Tuple & t) const -> bool;
            auto tuple_total() const -> std::size_t;
    };

    // The relational structure of strictly positive tuples.
    auto pos(const ValuedStructure & a) -> RelationalStructure;

    // Throws SignatureMismatch unless both structures share the same signature.
    auto require_same_signature(const ValuedStructure & a, const ValuedStructure & b) -> void;
}

#endif
