/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// One PASS/FAIL line per acceptance criterion. All comparisons are exact.

#include "fixtures.hh"
#include "oracles.hh"

#include <vcsp/core.hh>
#include <vcsp/errors.hh>
#include <vcsp/generators.hh>
#include <vcsp/improvement.hh>
#include <vcsp/mappings.hh>
#include <vcsp/search.hh>
#include <vcsp/sherali.hh>
#include <vcsp/width.hh>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace vcsp;

using std::string;
using std::vector;

namespace
{
    struct Outcome
    {
        bool pass;
        string detail;
    };

    // Collects the first failure of a criterion.
    class Verdict
    {
        private:
            bool _pass = true;
            string _detail;
            std::size_t _checks = 0;

        public:
            auto check(bool condition, const string & what) -> void
            {
                ++_checks;
                if (! condition && _pass) {
                    _pass = false;
                    _detail = what;
                }
            }

            auto outcome() const -> Outcome
            {
                return Outcome{ _pass, _pass ? std::to_string(_checks) + " checks" : _detail };
            }
    };

    auto named_mapping(const ValuedStructure & target, const vector<string> & names) -> Mapping
    {
        vector<Element> image;
        for (auto & n : names)
            image.push_back(*target.find_element(n));
        return Mapping(image, target.size());
    }

    auto example_table() -> IfhDistribution
    {
        auto g3 = gen_grid(3);
        auto row = [&] (vector<string> names, Rational w) {
            return WeightedMapping{ named_mapping(g3, names), w };
        };
        return IfhDistribution{ {
            row({ "(1,1)", "(2,1)", "(3,1)", "(3,2)", "(3,3)" }, Rational(1, 3)),
            row({ "(1,1)", "(2,1)", "(2,2)", "(3,2)", "(3,3)" }, Rational(1, 12)),
            row({ "(1,1)", "(1,2)", "(2,2)", "(2,3)", "(3,3)" }, Rational(1, 12)),
            row({ "(1,1)", "(1,2)", "(1,3)", "(2,3)", "(3,3)" }, Rational(1, 3)),
            row({ "(1,1)", "(1,2)", "(2,2)", "(3,2)", "(3,3)" }, Rational(1, 12)),
            row({ "(1,1)", "(2,1)", "(2,2)", "(2,3)", "(3,3)" }, Rational(1, 12)) } };
    }

    auto random_structure(std::uint64_t seed, std::size_t size) -> ValuedStructure
    {
        RandomSpec spec;
        spec.size = size;
        return gen_random(spec, seed);
    }

    auto criterion_1() -> Outcome
    {
        Verdict v;
        auto g3 = gen_grid(3), p3 = gen_path(3);
        vector<Element> diagonal;
        for (unsigned i = 1 ; i <= 3 ; ++i)
            for (unsigned j = 1 ; j <= 3 ; ++j)
                diagonal.push_back(i + j - 2);
        auto forward = validate_ifh(g3, p3, IfhDistribution{ { { Mapping(diagonal, 5), Rational(1) } } });
        v.check(forward.valid, "diagonal map rejected: " + forward.violation);
        auto backward = validate_ifh(p3, g3, example_table());
        v.check(backward.valid, "six-map table rejected: " + backward.violation);
        return v.outcome();
    }

    auto criterion_2() -> Outcome
    {
        Verdict v;
        auto produced = grid_path_ifh(3);
        auto table = example_table();
        v.check(produced.paths.size() == table.support.size(), "path count differs from the table");
        for (auto & [g, w] : table.support) {
            bool found = false;
            for (auto & p : produced.paths)
                if (p.image == g.images())
                    found = (p.weight == w);
            v.check(found, "table row missing or with another weight");
        }

        for (unsigned n = 2 ; n <= 4 ; ++n) {
            for (unsigned i = 1 ; i <= n ; ++i)
                for (unsigned j = 1 ; j <= n ; ++j) {
                    unsigned k = i + j - 1;
                    if (k < 2 * n - 1) {
                        Rational out;
                        if (i < n)
                            out += path_arc_weight(n, i, j, i + 1, j);
                        if (j < n)
                            out += path_arc_weight(n, i, j, i, j + 1);
                        v.check(out == 1, "out-arc sum at (" + std::to_string(i) + "," + std::to_string(j) + ") n=" + std::to_string(n));
                    }
                    if (k >= 2) {
                        Rational in;
                        if (i > 1)
                            in += path_arc_weight(n, i - 1, j, i, j);
                        if (j > 1)
                            in += path_arc_weight(n, i, j - 1, i, j);
                        Rational expected = k <= n ? Rational(k - 1, k) : Rational(2 * n - k + 1, 2 * n - k);
                        expected.canonicalize();
                        v.check(in == expected, "in-arc sum at (" + std::to_string(i) + "," + std::to_string(j) + ") n=" + std::to_string(n));
                    }
                }

            IfhDistribution omega;
            auto grid = gen_grid(n);
            for (auto & p : grid_path_ifh(n).paths)
                omega.support.push_back(WeightedMapping{ Mapping(p.image, grid.size()), p.weight });
            auto check = validate_ifh(gen_path(n), grid, omega);
            v.check(check.valid, "distribution for n=" + std::to_string(n) + " rejected: " + check.violation);
        }
        return v.outcome();
    }

    auto criterion_3() -> Outcome
    {
        Verdict v;
        for (unsigned n : { 2u, 3u })
            v.check(valued_isomorphic(compute_core(gen_grid(n)).core, gen_path(n)).has_value(),
                    "core of grid(" + std::to_string(n) + ") is not path(" + std::to_string(n) + ")");
        for (unsigned n = 1 ; n <= 4 ; ++n)
            v.check(is_core(gen_path(n)).core, "path(" + std::to_string(n) + ") not recognised as a core");
        v.check(is_core(gen_diag_grid(3, 10)).core, "diagonal grid not recognised as a core");
        return v.outcome();
    }

    auto criterion_4() -> Outcome
    {
        Verdict v;
        for (auto & [name, a] : vector<std::pair<string, ValuedStructure> >{ { "path3", gen_path(3) }, { "grid3", gen_grid(3) } })
            for (std::uint64_t seed = 0 ; seed < 25 ; ++seed) {
                auto b = fixtures::random_grid_target(seed % 5 == 0 ? 1 : 2, 10'000 + seed);
                auto relaxed = opt_k(a, b, 1).value, exact = opt_bruteforce(a, b).value;
                v.check(relaxed == exact, name + " seed " + std::to_string(seed) + ": opt_1 " + relaxed.str() + " vs opt " + exact.str());
            }
        return v.outcome();
    }

    auto criterion_5() -> Outcome
    {
        Verdict v;
        auto k3 = gen_crisp_clique(3);
        auto tw_gadget = gap_instance_treewidth(k3, 1).structure;
        v.check(tw_gadget.size() == 6, "treewidth gadget has " + std::to_string(tw_gadget.size()) + " elements");
        auto tw_relaxed = opt_k(k3, tw_gadget, 1).value, tw_exact = opt_bruteforce(k3, tw_gadget).value;
        v.check(tw_relaxed == ExtRat(0), "treewidth gadget opt_1 = " + tw_relaxed.str());
        v.check(tw_exact.is_infinite(), "treewidth gadget opt = " + tw_exact.str());

        auto triangles = gen_two_triangles();
        auto ov_gadget = gap_instance_overlap(triangles, 1).structure;
        v.check(ov_gadget.size() == 16, "overlap gadget has " + std::to_string(ov_gadget.size()) + " elements");
        auto ov_relaxed = opt_k(triangles, ov_gadget, 1).value, ov_exact = opt_bruteforce(triangles, ov_gadget).value;
        v.check(ov_relaxed == ExtRat(0), "overlap gadget opt_1 = " + ov_relaxed.str());
        v.check(ov_exact.is_infinite(), "overlap gadget opt = " + ov_exact.str());

        auto level3 = opt_k(k3, tw_gadget, 3).value;
        v.check(level3 == tw_exact && level3.is_infinite(), "K3 opt_3 = " + level3.str());
        return v.outcome();
    }

    auto criterion_6() -> Outcome
    {
        Verdict v;
        auto g3 = gen_grid(3), p3 = gen_path(3);
        for (std::uint64_t seed = 0 ; seed < 10 ; ++seed) {
            auto c = fixtures::random_grid_target(seed % 5 == 0 ? 1 : 2, 20'000 + seed);
            auto grid = opt_k(g3, c, 1).value, path = opt_k(p3, c, 1).value;
            v.check(grid == path, "seed " + std::to_string(seed) + ": " + grid.str() + " vs " + path.str());
        }
        return v.outcome();
    }

    auto criterion_7() -> Outcome
    {
        Verdict v;
        vector<std::pair<string, ValuedStructure> > sources {
            { "path2", gen_path(2) }, { "path3", gen_path(3) }, { "path4", gen_path(4) },
            { "grid2", gen_grid(2) }, { "grid3", gen_grid(3) } };
        for (std::uint64_t seed = 0 ; seed < 30 ; ++seed) {
            auto & [name, a] = sources[seed % sources.size()];
            auto b = fixtures::random_grid_target(1 + seed % 3, 30'000 + seed);
            auto found = search_solve(a, b);
            auto exact = opt_bruteforce(a, b).value;
            auto realised = cost(a, b, found.mapping);
            v.check(found.cost == exact && realised == exact,
                    name + " seed " + std::to_string(seed) + ": search " + realised.str() + " vs opt " + exact.str());
        }
        auto checkerboard = search_solve(gen_grid(3), fixtures::b2());
        v.check(cost(gen_grid(3), fixtures::b2(), checkerboard.mapping) == ExtRat(13), "grid3 against B2 does not cost 13");
        return v.outcome();
    }

    auto criterion_8() -> Outcome
    {
        Verdict v;

        // (a) passing to the core never raises treewidth
        for (std::uint64_t seed = 0 ; seed < 50 ; ++seed) {
            auto a = random_structure(40'000 + seed, 1 + seed % 5);
            auto core = compute_core(a).core;
            v.check(treewidth(gaifman(pos(core))).width <= treewidth(gaifman(pos(a))).width,
                    "(a) core raised treewidth, seed " + std::to_string(seed));
        }

        // (b) equivalent pairs have isomorphic cores
        vector<ValuedStructure> pool { gen_grid(2), gen_path(2), gen_grid(3), gen_path(3),
            fixtures::permuted(gen_path(3), { 4, 2, 0, 1, 3 }, "r") };
        for (std::uint64_t seed = 0 ; seed < 12 ; ++seed)
            pool.push_back(random_structure(50'000 + seed, 2 + seed % 2));
        std::size_t equivalent_pairs = 0;
        for (std::size_t i = 0 ; i < pool.size() ; ++i)
            for (std::size_t j = i + 1 ; j < pool.size() ; ++j)
                if (pool[i].signature() == pool[j].signature() && equivalent(pool[i], pool[j])) {
                    ++equivalent_pairs;
                    v.check(valued_isomorphic(compute_core(pool[i]).core, compute_core(pool[j]).core).has_value(),
                            "(b) cores of an equivalent pair differ");
                }
        v.check(equivalent_pairs >= 3, "(b) too few equivalent pairs sampled");

        // (c) a reduction step keeps equivalence and optimal costs
        std::size_t steps = 0;
        for (std::uint64_t seed = 0 ; seed < 40 ; ++seed) {
            auto a = seed == 0 ? gen_grid(3) : random_structure(60'000 + seed, 3 + seed % 2);
            auto g = reduction_step(a, Mapping::identity(a.size()));
            if (! g)
                continue;
            ++steps;
            v.check(equivalent(a, image_structure(a, *g)), "(c) image structure not equivalent");
            for (std::uint64_t c = 0 ; c < 10 ; ++c) {
                auto target = fixtures::random_grid_target(1 + c % 3, 70'000 + seed * 10 + c);
                auto best = opt_bruteforce(a, target);
                v.check(cost(a, target, compose(best.witness, *g)) == best.value, "(c) s after g is not optimal");
            }
        }
        v.check(steps >= 5, "(c) too few reduction steps sampled");

        // (d) exact simplex against vertex enumeration
        std::mt19937_64 rng(80'000);
        for (int i = 0 ; i < 100 ; ++i) {
            auto lp = fixtures::random_lp(rng);
            auto solved = solve(lp);
            auto expected = oracle::lp_by_vertices(lp, Rational(1'000'000'000));
            v.check(solved.status == expected.status && (solved.status != LpStatus::Optimal || solved.value == expected.value),
                    "(d) LP " + std::to_string(i) + " disagrees with vertex enumeration");
        }

        // (e) width modulo scopes against chordal supergraphs
        for (std::uint64_t seed = 0 ; seed < 100 ; ++seed) {
            auto a = fixtures::random_relational(1 + seed % 7, 90'000 + seed);
            auto g = gaifman(a);
            v.check(twms(a).width == oracle::twms_by_chordal_supergraphs(g, scopes(a)),
                    "(e) twms disagrees, seed " + std::to_string(seed));
        }
        return v.outcome();
    }
}

auto main() -> int
{
    struct Criterion
    {
        int number;
        string title;
        double budget_seconds;
        std::function<Outcome ()> run;
    };

    vector<Criterion> criteria {
        { 1, "example distributions validate", 1, criterion_1 },
        { 2, "path-weight distribution and arc sums", 5, criterion_2 },
        { 3, "core pipeline on grids and paths", 60, criterion_3 },
        { 4, "level one is tight for path3 and grid3", 120, criterion_4 },
        { 5, "gap instances separate level k from the optimum", 600, criterion_5 },
        { 6, "grid3 and path3 agree at level one", 600, criterion_6 },
        { 7, "search pipeline matches brute force", 180, criterion_7 },
        { 8, "property suites", 600, criterion_8 } };

    bool all = true;
    auto start = std::chrono::steady_clock::now();
    for (auto & c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        }
        catch (const VcspError & e) {
            outcome = Outcome{ false, string("error: ") + e.what() };
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = outcome.pass && seconds < c.budget_seconds;
        if (outcome.pass && ! pass)
            outcome.detail = "over the time budget";
        all = all && pass;
        std::printf("%s criterion %d: %s (tolerance: exact; %.2f s of %.0f s; %s)\n", pass ? "PASS" : "FAIL",
                c.number, c.title.c_str(), seconds, c.budget_seconds, outcome.detail.c_str());
    }
    double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("total %.2f s\n", total);
    return all ? 0 : 1;
}
