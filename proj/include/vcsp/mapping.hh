/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_MAPPING_HH
#define VCSP_MAPPING_HH 1

#include <vcsp/structure.hh>

#include <compare>
#include <cstddef>
#include <vector>

namespace vcsp
{
    // A total function from a source universe {0..n-1} to a target universe.
    class Mapping
    {
        private:
            std::vector<Element> _image;
            std::size_t _target_size = 0;

        public:
            Mapping() = default;
            Mapping(std::vector<Element> image, std::size_t target_size);

            static auto identity(std::size_t n) -> Mapping;
            static auto constant(std::size_t n, std::size_t target_size, Element value) -> Mapping;

            auto operator() (Element e) const -> Element
            {
                return _image[e];
            }

            auto apply(const Tuple & t) const -> Tuple;

            auto size() const -> std::size_t
            {
                return _image.size();
            }

            auto target_size() const -> std::size_t
            {
                return _target_size;
            }

            auto images() const -> const std::vector<Element> &
            {
                return _image;
            }

            // Sorted distinct images.
            auto image_set() const -> std::vector<Element>;
            auto is_surjective() const -> bool;

            friend auto operator== (const Mapping & a, const Mapping & b) -> bool
            {
                return a._image == b._image && a._target_size == b._target_size;
            }

            friend auto operator<=> (const Mapping & a, const Mapping & b) -> std::weak_ordering
            {
                return a._image <=> b._image;
            }
    };

    // outer after inner: e maps to outer(inner(e)).
    auto compose(const Mapping & outer, const Mapping & inner) -> Mapping;
}

#endif
