/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/generators.hh>
#include <vcsp/errors.hh>

#include <algorithm>
#include <map>
#include <random>

using std::map;
using std::mt19937_64;
using std::pair;
using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::uniform_int_distribution;
using std::vector;

namespace vcsp
{
    namespace
    {
        constexpr size_t f_symbol = 0, mu_symbol = 1;

        auto grid_names(unsigned n) -> vector<string>
        {
            vector<string> names;
            for (unsigned i = 1 ; i <= n ; ++i)
                for (unsigned j = 1 ; j <= n ; ++j)
                    names.push_back("(" + to_string(i) + "," + to_string(j) + ")");
            return names;
        }

        auto require_positive(unsigned n, const string & what) -> void
        {
            if (n < 1)
                fail(ErrorKind::BadParameter, what + " must be at least 1");
        }

        // Calls fn(i, j, i2, j2) for every unit step of the n by n grid.
        template <typename Fn_>
        auto for_each_grid_arc(unsigned n, Fn_ fn) -> void
        {
            for (unsigned i = 1 ; i <= n ; ++i)
                for (unsigned j = 1 ; j <= n ; ++j) {
                    if (i < n)
                        fn(i, j, i + 1, j);
                    if (j < n)
                        fn(i, j, i, j + 1);
                }
        }

        auto enumerate_paths(unsigned n, unsigned i, unsigned j, vector<Element> & current,
                Rational weight, vector<WeightedPath> & out) -> void
        {
            current.push_back(grid_element(n, i, j));
            if (i == n && j == n)
                out.push_back(WeightedPath{ current, weight });
            else {
                // (i, j+1) precedes (i+1, j) in element order
                if (j < n)
                    enumerate_paths(n, i, j + 1, current, weight * path_arc_weight(n, i, j, i, j + 1), out);
                if (i < n)
                    enumerate_paths(n, i + 1, j, current, weight * path_arc_weight(n, i, j, i + 1, j), out);
            }
            current.pop_back();
        }
    }

    auto grid_signature() -> Signature
    {
        return Signature({ { "f", 2 }, { "mu", 1 } });
    }

    auto grid_element(unsigned n, unsigned i, unsigned j) -> Element
    {
        return Element((i - 1) * n + (j - 1));
    }

    auto gen_grid(unsigned n) -> ValuedStructure
    {
        require_positive(n, "n");
        ValuedStructure result(grid_signature(), grid_names(n));
        for_each_grid_arc(n, [&] (unsigned i, unsigned j, unsigned i2, unsigned j2) {
                result.set(f_symbol, { grid_element(n, i, j), grid_element(n, i2, j2) }, ExtRat::infinity());
                });
        result.set_default(mu_symbol, ExtRat(1));
        return result;
    }

    auto gen_path(unsigned n) -> ValuedStructure
    {
        require_positive(n, "n");
        unsigned len = 2 * n - 1;
        vector<string> names;
        for (unsigned i = 1 ; i <= len ; ++i)
            names.push_back(to_string(i));
        ValuedStructure result(grid_signature(), names);
        for (unsigned i = 1 ; i < len ; ++i)
            result.set(f_symbol, { i - 1, i }, ExtRat::infinity());
        for (unsigned i = 1 ; i <= len ; ++i)
            result.set(mu_symbol, { i - 1 }, ExtRat(long(i <= n ? i : 2 * n - i)));
        return result;
    }

    auto gen_diag_grid(unsigned n, const Rational & m) -> ValuedStructure
    {
        if (n < 3)
            fail(ErrorKind::BadParameter, "diagonal grid needs n >= 3");
        if (m <= Rational(n * n))
            fail(ErrorKind::BadParameter, "diagonal grid needs M > n^2");

        auto result = gen_grid(n);
        auto set_mu = [&] (unsigned i, unsigned j, const Rational & v) {
            result.set(mu_symbol, { grid_element(n, i, j) }, ExtRat(v));
        };

        // Diagonal k is listed as (k,1), (k-1,2), ..., (1,k).
        Rational m2 = m * m, m3 = m2 * m, m4 = m3 * m;
        set_mu(1, 1, 1);
        set_mu(2, 1, m);
        set_mu(1, 2, 1);
        set_mu(3, 1, m3);
        set_mu(2, 2, m2);
        set_mu(1, 3, m4);
        for (unsigned k = 4 ; k <= n ; ++k)
            for (unsigned p = 0 ; p < k ; ++p)
                set_mu(k - p, 1 + p, (p == 0 || p == k - 1) ? m : Rational(1));
        return result;
    }

    auto gen_diag_finite(unsigned n, const Rational & m) -> ValuedStructure
    {
        auto result = gen_diag_grid(n, m);
        for (auto & [t, v] : result.overrides(f_symbol))
            if (v.is_infinite())
                result.set(f_symbol, t, ExtRat(1));
        return result;
    }

    auto gen_grid_pair(unsigned n) -> pair<ValuedStructure, ValuedStructure>
    {
        auto grid = gen_grid(n);
        auto path = gen_path(n);

        map<pair<Element, Element>, Rational> arc_weight;
        for (auto & p : grid_path_ifh(n).paths)
            for (size_t k = 0 ; k + 1 < p.image.size() ; ++k)
                arc_weight[{ p.image[k], p.image[k + 1] }] += p.weight;

        for (auto & [arc, w] : arc_weight)
            grid.set(f_symbol, { arc.first, arc.second }, ExtRat(w));
        for (auto & [t, v] : path.overrides(f_symbol))
            path.set(f_symbol, t, ExtRat(1));
        return { grid, path };
    }

    auto gen_crisp_clique(unsigned k) -> ValuedStructure
    {
        if (k < 2)
            fail(ErrorKind::BadParameter, "clique needs k >= 2");
        vector<string> names;
        for (unsigned i = 1 ; i <= k ; ++i)
            names.push_back(to_string(i));
        ValuedStructure result(Signature({ { "f", 2 } }), names);
        result.set_default(0, ExtRat::infinity());
        for (Element i = 0 ; i < k ; ++i)
            result.set(0, { i, i }, ExtRat(0));
        return result;
    }

    auto gen_two_triangles() -> ValuedStructure
    {
        ValuedStructure result(Signature({ { "q", 3 } }), { "a", "b", "c", "d" });
        result.set(0, { 0, 1, 2 }, ExtRat::infinity());
        result.set(0, { 1, 2, 3 }, ExtRat::infinity());
        return result;
    }

    auto gen_random(const RandomSpec & spec, uint64_t seed) -> ValuedStructure
    {
        if (spec.size < 1)
            fail(ErrorKind::BadParameter, "random structure needs a nonempty universe");
        if (spec.palette.empty())
            fail(ErrorKind::BadParameter, "random structure needs a nonempty palette");

        vector<string> names;
        for (size_t i = 0 ; i < spec.size ; ++i)
            names.push_back(spec.prefix + to_string(i));
        ValuedStructure result(Signature(spec.symbols), names);

        mt19937_64 rng(seed);
        uniform_int_distribution<size_t> pick(0, spec.palette.size() - 1);
        for (size_t s = 0 ; s < spec.symbols.size() ; ++s)
            for_each_tuple(spec.size, spec.symbols[s].arity, [&] (const Tuple & t) {
                    result.set(s, t, spec.palette[pick(rng)]);
                    });
        return result;
    }

    auto path_arc_weight(unsigned n, unsigned i, unsigned j, unsigned i2, unsigned j2) -> Rational
    {
        bool along_j = (i2 == i && j2 == j + 1), along_i = (j2 == j && i2 == i + 1);
        if (! along_j && ! along_i)
            fail(ErrorKind::BadParameter, "not a grid arc");

        // the target lies on diagonal i2 + j2 - 1
        Rational result;
        if (i2 + j2 - 1 <= n)
            result = along_j ? Rational(j, i + j) : Rational(i, i + j);
        else
            result = along_j ? Rational(n - j2 + 1, 2 * n - i2 - j2 + 1) : Rational(n - i2 + 1, 2 * n - i2 - j2 + 1);
        result.canonicalize();
        return result;
    }

    auto grid_path_ifh(unsigned n) -> PathDistribution
    {
        require_positive(n, "n");
        PathDistribution result{ n, {} };
        vector<Element> current;
        enumerate_paths(n, 1, 1, current, Rational(1), result.paths);
        std::sort(result.paths.begin(), result.paths.end(),
                [] (const WeightedPath & a, const WeightedPath & b) { return a.image < b.image; });
        return result;
    }
}
