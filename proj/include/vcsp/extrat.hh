/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_EXTRAT_HH
#define VCSP_EXTRAT_HH 1

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vcsp
{
    // Signed exact rationals, used wherever a sign is needed (LP data, duals).
    using Rational = mpq_class;

    auto rational_string(const Rational & q) -> std::string;

    // A nonnegative rational, or positive infinity. Products follow the
    // annihilating convention: infinity times zero is zero.
    class ExtRat
    {
        private:
            bool _infinite = false;
            Rational _value;

        public:
            ExtRat() = default;
            ExtRat(long value);
            explicit ExtRat(const Rational & value);
            ExtRat(const Rational & numerator, const Rational & denominator);

            static auto infinity() -> ExtRat;
            static auto parse(std::string_view text) -> ExtRat;

            auto is_infinite() const -> bool
            {
                return _infinite;
            }

            auto is_finite() const -> bool
            {
                return ! _infinite;
            }

            auto is_zero() const -> bool
            {
                return ! _infinite && _value == 0;
            }

            auto is_positive() const -> bool
            {
                return _infinite || _value > 0;
            }

            // Only meaningful for finite values.
            auto value() const -> const Rational &
            {
                return _value;
            }

            auto str() const -> std::string;

            auto operator+= (const ExtRat & other) -> ExtRat &;
            auto operator*= (const ExtRat & other) -> ExtRat &;

            friend auto operator+ (ExtRat a, const ExtRat & b) -> ExtRat
            {
                a += b;
                return a;
            }

            friend auto operator* (ExtRat a, const ExtRat & b) -> ExtRat
            {
                a *= b;
                return a;
            }

            friend auto operator== (const ExtRat & a, const ExtRat & b) -> bool;
            friend auto operator<=> (const ExtRat & a, const ExtRat & b) -> std::strong_ordering;
    };

    auto operator<< (std::ostream & s, const ExtRat & v) -> std::ostream &;
}

#endif
