/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/search.hh>
#include <vcsp/core.hh>
#include <vcsp/errors.hh>
#include <vcsp/mappings.hh>
#include <vcsp/sherali.hh>
#include <vcsp/width.hh>

#include <algorithm>
#include <vector>

using std::optional;
using std::size_t;
using std::vector;

namespace vcsp
{
    auto search_fix_loop(const ValuedStructure & a, const ValuedStructure & b, unsigned k,
            const Options & options, const FixObserver & observer) -> SearchResult
    {
        require_same_signature(a, b);
        auto arbitrary = Mapping::constant(a.size(), b.size(), 0);

        auto target = opt_k(a, b, k, options).value;
        if (target.is_infinite())
            return SearchResult{ arbitrary, true, ExtRat::infinity() };

        // the level-k value can be finite even when every mapping costs infinity
        if (! find_finite_mapping(a, b, options))
            return SearchResult{ arbitrary, true, ExtRat::infinity() };

        auto width = twms(pos(a), options).width;
        auto over = overlap(a).value;
        if (width + 1 > k || over > k)
            fail(ErrorKind::PreconditionFailed, "level " + std::to_string(k) + " needs twms <= " + std::to_string(k - 1)
                    + " and overlap <= " + std::to_string(k) + ", found " + std::to_string(width) + " and " + std::to_string(over));

        auto left = a, right = b;
        vector<Element> image(a.size(), 0);
        for (Element e = 0 ; e < a.size() ; ++e) {
            Symbol fix{ "fix#" + std::to_string(e), 1 };
            auto fixed_left = left.with_symbol(fix, ExtRat());
            auto symbol = fixed_left.signature().size() - 1;
            fixed_left.set(symbol, { e }, ExtRat::infinity());

            bool found = false;
            for (Element y = 0 ; y < b.size() && ! found ; ++y) {
                auto fixed_right = right.with_symbol(fix, ExtRat::infinity());
                fixed_right.set(symbol, { y }, ExtRat());
                auto value = opt_k(fixed_left, fixed_right, k, options).value;
                if (value == target) {
                    found = true;
                    image[e] = y;
                    left = std::move(fixed_left);
                    right = std::move(fixed_right);
                    if (observer)
                        observer(e, y, value);
                }
            }
            if (! found)
                fail(ErrorKind::NoTighteningWitness, "no image for element " + a.element_name(e) + " keeps the level-k optimum");
        }

        Mapping h(image, b.size());
        auto final_cost = cost(a, b, h);
        if (final_cost != target)
            fail(ErrorKind::NoTighteningWitness, "fixed mapping costs " + final_cost.str() + " but the level-k optimum is " + target.str());
        return SearchResult{ h, false, final_cost };
    }

    auto search_solve(const ValuedStructure & a, const ValuedStructure & b, optional<unsigned> level,
            const Options & options) -> SearchResult
    {
        require_same_signature(a, b);
        auto core = compute_core(a, options);

        unsigned k;
        if (level)
            k = *level;
        else {
            auto width = twms(pos(core.core), options).width;
            auto over = overlap(core.core).value;
            k = unsigned(std::max<size_t>({ width + 1, over, 1 }));
        }

        auto inner = search_fix_loop(core.core, b, k, options);
        auto h = compose(inner.mapping, core.to_core);
        if (inner.infinite)
            return SearchResult{ h, true, ExtRat::infinity() };
        return SearchResult{ h, false, cost(a, b, h) };
    }
}
