/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/mapping.hh>
#include <vcsp/options.hh>
#include <vcsp/errors.hh>

#include <algorithm>

using std::size_t;
using std::string_view;
using std::vector;

namespace vcsp
{
    Mapping::Mapping(vector<Element> image, size_t target_size) :
        _image(std::move(image)),
        _target_size(target_size)
    {
        for (auto e : _image)
            if (e >= _target_size)
                fail(ErrorKind::BadParameter, "mapping image out of range");
    }

    auto Mapping::identity(size_t n) -> Mapping
    {
        vector<Element> image(n);
        for (size_t i = 0 ; i < n ; ++i)
            image[i] = Element(i);
        return Mapping(image, n);
    }

    auto Mapping::constant(size_t n, size_t target_size, Element value) -> Mapping
    {
        return Mapping(vector<Element>(n, value), target_size);
    }

    auto Mapping::apply(const Tuple & t) const -> Tuple
    {
        Tuple result(t.size());
        for (size_t i = 0 ; i < t.size() ; ++i)
            result[i] = _image[t[i]];
        return result;
    }

    auto Mapping::image_set() const -> vector<Element>
    {
        return element_set(_image);
    }

    auto Mapping::is_surjective() const -> bool
    {
        return image_set().size() == _target_size;
    }

    auto compose(const Mapping & outer, const Mapping & inner) -> Mapping
    {
        if (inner.target_size() != outer.size())
            fail(ErrorKind::BadParameter, "cannot compose mappings with mismatched universes");
        vector<Element> image(inner.size());
        for (size_t i = 0 ; i < inner.size() ; ++i)
            image[i] = outer(inner(Element(i)));
        return Mapping(image, outer.target_size());
    }

    auto solve_lp(const LinProgram & lp, const Options & options, string_view label) -> LpOutcome
    {
        if (options.lp_observer)
            options.lp_observer(label, lp);
        return solve(lp, SolveOptions{ options.max_pivots });
    }
}
