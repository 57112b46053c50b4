/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include "fixtures.hh"

#include <vcsp/errors.hh>
#include <vcsp/generators.hh>
#include <vcsp/mappings.hh>
#include <vcsp/structure_io.hh>

#include <map>
#include <set>

using namespace vcsp;

namespace
{
    auto kind_of(const std::function<void ()> & f) -> ErrorKind
    {
        try {
            f();
        }
        catch (const VcspError & e) {
            return e.kind();
        }
        FAIL("no error raised");
        return ErrorKind::BadParameter;
    }

    auto every_value_equal(const ValuedStructure & a, const ValuedStructure & b) -> bool
    {
        if (a.signature() != b.signature() || a.universe() != b.universe())
            return false;
        bool same = true;
        for (std::size_t s = 0 ; s < a.signature().size() ; ++s)
            a.for_each_value(s, [&] (const Tuple & t, const ExtRat & v) {
                    if (b.value(s, t) != v)
                        same = false;
                    });
        return same;
    }

    auto element(const ValuedStructure & a, const std::string & name) -> Element
    {
        return *a.find_element(name);
    }
}

TEST_CASE("positive part of the path")
{
    auto p = pos(gen_path(3));
    std::vector<Tuple> arcs{ { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 } };
    CHECK(p.relation(0) == arcs);
    CHECK(p.relation(1).size() == 5);

    ValuedStructure zero(grid_signature(), { "a", "b" });
    CHECK(pos(zero).tuple_total() == 0);

    CHECK(pos(gen_grid(2)).relation(0).size() == 4);
}

TEST_CASE("grid and path generators")
{
    auto g = gen_grid(3);
    CHECK(g.size() == 9);
    CHECK(g.infinite_entries().size() == 12);
    CHECK(g.value(0, { element(g, "(1,1)"), element(g, "(1,2)") }).is_infinite());
    CHECK(g.value(0, { element(g, "(1,1)"), element(g, "(2,1)") }).is_infinite());
    CHECK(g.value(0, { element(g, "(1,2)"), element(g, "(1,1)") }).is_zero());
    CHECK(g.value(1, { 4 }) == ExtRat(1));

    auto g1 = gen_grid(1);
    CHECK(g1.size() == 1);
    CHECK(g1.infinite_entries().empty());

    auto p = gen_path(3);
    std::vector<ExtRat> mu;
    for (Element i = 0 ; i < 5 ; ++i)
        mu.push_back(p.value(1, { i }));
    CHECK(mu == std::vector<ExtRat>{ 1, 2, 3, 2, 1 });
    auto p1 = gen_path(1);
    CHECK(p1.size() == 1);
    CHECK(p1.value(1, { 0 }) == ExtRat(1));
}

TEST_CASE("diagonal-weighted grid")
{
    auto c = gen_diag_grid(4, Rational(17));
    auto mu = [&] (const char * name) { return c.value(1, { element(c, name) }); };
    CHECK(mu("(3,1)") == ExtRat(Rational(17 * 17 * 17)));
    CHECK(mu("(2,2)") == ExtRat(Rational(17 * 17)));
    CHECK(mu("(1,3)") == ExtRat(Rational(17 * 17 * 17 * 17)));
    CHECK(mu("(1,1)") == ExtRat(1));
    CHECK(mu("(2,1)") == ExtRat(17));
    CHECK(mu("(1,2)") == ExtRat(1));
    CHECK(mu("(4,1)") == ExtRat(17));
    CHECK(mu("(3,2)") == ExtRat(1));
    CHECK(mu("(2,3)") == ExtRat(1));
    CHECK(mu("(1,4)") == ExtRat(17));
    CHECK(mu("(4,4)") == ExtRat(1));
    CHECK(mu("(3,4)") == ExtRat(1));

    CHECK(gen_diag_grid(3, Rational(10)).value(1, { 0 }) == ExtRat(1));
    CHECK(kind_of([] { gen_diag_grid(3, Rational(9)); }) == ErrorKind::BadParameter);
}

TEST_CASE("finite variants")
{
    auto b = gen_diag_finite(3, Rational(10));
    CHECK(b.has_finite_tuple());
    CHECK(b.infinite_entries().empty());
    for (auto & [t, v] : b.overrides(0))
        CHECK((v == ExtRat(0) || v == ExtRat(1)));

    auto [grid, path] = gen_grid_pair(2);
    CHECK(grid.value(0, { element(grid, "(1,1)"), element(grid, "(1,2)") }) == ExtRat(Rational(1, 2)));
    CHECK(grid.value(0, { element(grid, "(1,1)"), element(grid, "(2,1)") }) == ExtRat(Rational(1, 2)));
    CHECK(path.value(0, { 0, 1 }) == ExtRat(1));
    CHECK(path.infinite_entries().empty());

    auto [g1, p1] = gen_grid_pair(1);
    CHECK(g1.size() == 1);
    CHECK(p1.size() == 1);
    CHECK(g1.overrides(0).empty());
}

TEST_CASE("path distribution for n = 3")
{
    auto d = grid_path_ifh(3);
    REQUIRE(d.paths.size() == 6);

    auto g = gen_grid(3);
    auto path_of = [&] (std::vector<const char *> names) {
        std::vector<Element> image;
        for (auto n : names)
            image.push_back(element(g, n));
        return image;
    };
    std::map<std::vector<Element>, Rational> expected{
        { path_of({ "(1,1)", "(2,1)", "(3,1)", "(3,2)", "(3,3)" }), Rational(1, 3) },
        { path_of({ "(1,1)", "(2,1)", "(2,2)", "(3,2)", "(3,3)" }), Rational(1, 12) },
        { path_of({ "(1,1)", "(1,2)", "(2,2)", "(2,3)", "(3,3)" }), Rational(1, 12) },
        { path_of({ "(1,1)", "(1,2)", "(1,3)", "(2,3)", "(3,3)" }), Rational(1, 3) },
        { path_of({ "(1,1)", "(1,2)", "(2,2)", "(3,2)", "(3,3)" }), Rational(1, 12) },
        { path_of({ "(1,1)", "(2,1)", "(2,2)", "(2,3)", "(3,3)" }), Rational(1, 12) } };
    for (auto & p : d.paths)
        CHECK(expected.at(p.image) == p.weight);

    auto single = grid_path_ifh(1);
    REQUIRE(single.paths.size() == 1);
    CHECK(single.paths[0].weight == 1);
}

TEST_CASE("out-arc weights sum to one")
{
    for (unsigned n = 2 ; n <= 5 ; ++n)
        for (unsigned i = 1 ; i <= n ; ++i)
            for (unsigned j = 1 ; j <= n ; ++j) {
                if (i == n && j == n)
                    continue;
                Rational total;
                if (i < n)
                    total += path_arc_weight(n, i, j, i + 1, j);
                if (j < n)
                    total += path_arc_weight(n, i, j, i, j + 1);
                CHECK(total == 1);
            }
}

TEST_CASE("path distributions are distributions of homomorphisms")
{
    for (unsigned n = 1 ; n <= 5 ; ++n) {
        auto d = grid_path_ifh(n);
        auto path = gen_path(n), grid = gen_grid(n);
        Rational total;
        for (auto & p : d.paths) {
            total += p.weight;
            Mapping h(p.image, grid.size());
            CHECK(has_finite_support(path, grid, h));
            CHECK(p.image.front() == grid_element(n, 1, 1));
            CHECK(p.image.back() == grid_element(n, n, n));
        }
        CHECK(total == 1);
    }
}

TEST_CASE("mass through each early diagonal element")
{
    for (unsigned n = 1 ; n <= 4 ; ++n) {
        std::map<Element, Rational> through;
        for (auto & p : grid_path_ifh(n).paths)
            for (auto e : p.image)
                through[e] += p.weight;
        for (unsigned i = 1 ; i <= n ; ++i)
            for (unsigned j = 1 ; i + j - 1 <= n ; ++j)
                CHECK(through[grid_element(n, i, j)] == Rational(1, i + j - 1));
    }
}

TEST_CASE("test cores")
{
    CHECK(gen_crisp_clique(3).positive_entries().size() == 6);
    auto t = gen_two_triangles();
    auto positive = t.positive_entries();
    REQUIRE(positive.size() == 2);
    CHECK(element_set(positive[0].tuple) == std::vector<Element>{ 0, 1, 2 });
    CHECK(element_set(positive[1].tuple) == std::vector<Element>{ 1, 2, 3 });
}

TEST_CASE("serialisation round trip")
{
    std::vector<ValuedStructure> all{ gen_grid(3), gen_path(2), gen_path(4), gen_diag_grid(3, Rational(10)),
        gen_diag_finite(3, Rational(10)), gen_crisp_clique(3), gen_two_triangles(), gen_grid_pair(3).first,
        gen_grid_pair(3).second, fixtures::b2() };
    for (std::uint64_t seed = 1 ; seed <= 5 ; ++seed)
        all.push_back(gen_random(RandomSpec{}, seed));

    for (auto & a : all)
        CHECK(every_value_equal(a, parse_structure(serialize_structure(a))));

    auto p2 = parse_structure(serialize_structure(gen_path(2)));
    CHECK(p2.size() == 3);
}

TEST_CASE("file format errors")
{
    const char * good = R"({"signature":[{"name":"f","arity":2}],"universe":["x","y"],
        "functions":{"f":{"default":"0","entries":[{"args":["x","y"],"value":"inf"}]}}})";
    auto s = parse_structure(good);
    CHECK(s.value(0, { 0, 1 }).is_infinite());

    CHECK(kind_of([] { parse_structure(R"({"signature":[{"name":"f","arity":2}],"universe":["x"],
        "functions":{"f":{"entries":[{"args":["x","missing"],"value":"1"}]}}})"); }) == ErrorKind::UnknownElement);
    CHECK(kind_of([] { parse_structure(R"({"universe":["x"]})"); }) == ErrorKind::SchemaError);
    CHECK(kind_of([] { parse_structure(R"({"signature":[{"name":"f","arity":2}],"universe":["x"],
        "functions":{"f":{"entries":[{"args":["x"],"value":"1"}]}}})"); }) == ErrorKind::ArityMismatch);
    CHECK(kind_of([] { parse_structure(R"({"signature":[{"name":"f","arity":1}],"universe":["x"],
        "functions":{"f":{"entries":[{"args":["x"],"value":"1"},{"args":["x"],"value":"2"}]}}})"); }) == ErrorKind::SchemaError);
    CHECK(kind_of([] { parse_structure(R"({"signature":[{"name":"f","arity":1}],"universe":["x"],
        "functions":{"f":{"entries":[{"args":["x"],"value":"half"}]}}})"); }) == ErrorKind::MalformedRational);
    CHECK(kind_of([] { parse_structure("not json"); }) == ErrorKind::SchemaError);
    CHECK(kind_of([] { parse_structure(R"({"signature":[],"universe":[]})"); }) != ErrorKind::ResourceLimit);

    // missing default means zero
    auto z = parse_structure(R"({"signature":[{"name":"u","arity":1}],"universe":["x","y"],
        "functions":{"u":{"entries":[{"args":["x"],"value":"3"}]}}})");
    CHECK(z.value(0, { 1 }).is_zero());
}
