/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/extrat.hh>
#include <vcsp/errors.hh>

#include <ostream>

using std::ostream;
using std::string;
using std::string_view;
using std::strong_ordering;

namespace vcsp
{
    namespace
    {
        auto all_digits(string_view s) -> bool
        {
            if (s.empty())
                return false;
            for (char c : s)
                if (c < '0' || c > '9')
                    return false;
            return true;
        }

        auto parse_integer(string_view s) -> mpz_class
        {
            return mpz_class(string(s), 10);
        }
    }

    auto rational_string(const Rational & q) -> string
    {
        return q.get_str();
    }

    ExtRat::ExtRat(long value) :
        _value(value)
    {
        if (value < 0)
            fail(ErrorKind::BadParameter, "negative value " + std::to_string(value));
    }

    ExtRat::ExtRat(const Rational & value) :
        _value(value)
    {
        _value.canonicalize();
        if (_value < 0)
            fail(ErrorKind::BadParameter, "negative value " + _value.get_str());
    }

    ExtRat::ExtRat(const Rational & numerator, const Rational & denominator)
    {
        if (denominator == 0)
            fail(ErrorKind::ZeroDenominator, "division by zero");
        *this = ExtRat(Rational(numerator / denominator));
    }

    auto ExtRat::infinity() -> ExtRat
    {
        ExtRat result;
        result._infinite = true;
        return result;
    }

    auto ExtRat::parse(string_view text) -> ExtRat
    {
        if (text == "inf")
            return infinity();

        auto slash = text.find('/');
        if (slash == string_view::npos) {
            if (! all_digits(text))
                fail(ErrorKind::MalformedRational, "cannot parse '" + string(text) + "'");
            return ExtRat(Rational(parse_integer(text)));
        }

        auto num = text.substr(0, slash), den = text.substr(slash + 1);
        if (! all_digits(num) || ! all_digits(den))
            fail(ErrorKind::MalformedRational, "cannot parse '" + string(text) + "'");
        mpz_class d = parse_integer(den);
        if (d == 0)
            fail(ErrorKind::ZeroDenominator, "zero denominator in '" + string(text) + "'");
        Rational q(parse_integer(num), d);
        q.canonicalize();
        return ExtRat(q);
    }

    auto ExtRat::str() const -> string
    {
        if (_infinite)
            return "inf";
        return _value.get_str();
    }

    auto ExtRat::operator+= (const ExtRat & other) -> ExtRat &
    {
        if (_infinite || other._infinite) {
            _infinite = true;
            _value = 0;
        }
        else
            _value += other._value;
        return *this;
    }

    auto ExtRat::operator*= (const ExtRat & other) -> ExtRat &
    {
        if (is_zero() || other.is_zero()) {
            _infinite = false;
            _value = 0;
        }
        else if (_infinite || other._infinite) {
            _infinite = true;
            _value = 0;
        }
        else
            _value *= other._value;
        return *this;
    }

    auto operator== (const ExtRat & a, const ExtRat & b) -> bool
    {
        if (a._infinite || b._infinite)
            return a._infinite == b._infinite;
        return a._value == b._value;
    }

    auto operator<=> (const ExtRat & a, const ExtRat & b) -> strong_ordering
    {
        if (a._infinite && b._infinite)
            return strong_ordering::equal;
        if (a._infinite)
            return strong_ordering::greater;
        if (b._infinite)
            return strong_ordering::less;
        int c = cmp(a._value, b._value);
        return c < 0 ? strong_ordering::less : c > 0 ? strong_ordering::greater : strong_ordering::equal;
    }

    auto operator<< (ostream & s, const ExtRat & v) -> ostream &
    {
        return s << v.str();
    }
}
