/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_IMPROVEMENT_HH
#define VCSP_IMPROVEMENT_HH 1

#include <vcsp/lp.hh>
#include <vcsp/mapping.hh>
#include <vcsp/options.hh>
#include <vcsp/structure.hh>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vcsp
{
    struct WeightedMapping
    {
        Mapping mapping;
        Rational weight;
    };

    // An inverse fractional homomorphism, listed by its support.
    struct IfhDistribution
    {
        std::vector<WeightedMapping> support;
    };

    // The constraint system of inverse fractional homomorphisms from a to b.
    // Rows are the finite tuples of b that some column touches, numbered in
    // the order they are first met.
    class IfhSystem
    {
        private:
            const ValuedStructure & _a;
            const ValuedStructure & _b;
            std::vector<Entry> _positive;
            std::map<std::pair<std::size_t, Tuple>, std::size_t> _row_index;
            std::vector<std::pair<std::size_t, Tuple> > _rows;

        public:
            using Column = std::vector<std::pair<std::size_t, Rational> >;

            IfhSystem(const ValuedStructure & a, const ValuedStructure & b);

            // Coefficients f^a(g^-1(x)) on the finite tuples x of b, adding
            // rows as needed. g must have finite support.
            auto column(const Mapping & g) -> Column;

            auto row_count() const -> std::size_t
            {
                return _rows.size();
            }

            auto row(std::size_t i) const -> const std::pair<std::size_t, Tuple> &
            {
                return _rows[i];
            }

            auto bound(std::size_t i) const -> Rational;

            // One nonnegative variable per column, the row constraints, and
            // the normalisation; objective coefficients per column.
            auto build_lp(const std::vector<Column> & columns, const std::vector<Rational> & objective) const -> LinProgram;
    };

    auto find_ifh(const ValuedStructure & a, const ValuedStructure & b, const Options & options = { }) -> std::optional<IfhDistribution>;
    auto improves(const ValuedStructure & a, const ValuedStructure & b, const Options & options = { }) -> bool;
    auto equivalent(const ValuedStructure & a, const ValuedStructure & b, const Options & options = { }) -> bool;

    struct IfhCheck
    {
        bool valid;
        // empty when valid
        std::string violation;
    };

    auto validate_ifh(const ValuedStructure & a, const ValuedStructure & b, const IfhDistribution & omega) -> IfhCheck;
}

#endif
