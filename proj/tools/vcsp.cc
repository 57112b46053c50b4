/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/core.hh>
#include <vcsp/errors.hh>
#include <vcsp/generators.hh>
#include <vcsp/improvement.hh>
#include <vcsp/mappings.hh>
#include <vcsp/search.hh>
#include <vcsp/sherali.hh>
#include <vcsp/structure_io.hh>
#include <vcsp/width.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

using namespace vcsp;

using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    enum ExitCode
    {
        exit_ok = 0,
        exit_input = 2,
        exit_resource = 3,
        exit_precondition = 4
    };

    auto exit_code_for(ErrorKind kind) -> int
    {
        switch (kind) {
            case ErrorKind::ResourceLimit:
                return exit_resource;
            case ErrorKind::PreconditionFailed:
            case ErrorKind::NotACore:
            case ErrorKind::NoTighteningWitness:
                return exit_precondition;
            default:
                return exit_input;
        }
    }

    auto read_json_file(const string & path) -> json
    {
        std::ifstream in(path);
        if (! in)
            fail(ErrorKind::SchemaError, "cannot read file '" + path + "'");
        try {
            return json::parse(in);
        }
        catch (const json::exception & e) {
            fail(ErrorKind::SchemaError, string("invalid JSON in '") + path + "': " + e.what());
        }
    }

    auto ifh_to_json(const IfhDistribution & omega, const ValuedStructure & a, const ValuedStructure & b) -> json
    {
        json result = json::array();
        for (auto & [g, weight] : omega.support) {
            auto entry = mapping_to_json(g, a, b);
            entry["weight"] = rational_string(weight);
            result.push_back(entry);
        }
        return result;
    }

    auto ifh_from_json(const json & doc, const ValuedStructure & a, const ValuedStructure & b) -> IfhDistribution
    {
        if (! doc.is_array())
            fail(ErrorKind::SchemaError, "distribution must be an array of {\"map\":…,\"weight\":…}");
        IfhDistribution omega;
        for (auto & item : doc) {
            if (! item.is_object() || ! item.contains("weight") || ! item["weight"].is_string())
                fail(ErrorKind::SchemaError, "each support entry needs a string weight");
            auto weight = ExtRat::parse(item["weight"].get<string>());
            if (weight.is_infinite())
                fail(ErrorKind::MalformedRational, "weights must be finite");
            omega.support.push_back(WeightedMapping{ mapping_from_json(item, a, b), weight.value() });
        }
        return omega;
    }

    auto decomposition_to_json(const TreeDecomposition & td, const Graph & g) -> json
    {
        json bags = json::array(), parent = json::array();
        for (auto & bag : td.bags) {
            json names = json::array();
            for (auto v : bag)
                names.push_back(g.name(v));
            bags.push_back(names);
        }
        for (auto & p : td.parent)
            parent.push_back(p ? json(*p) : json(nullptr));
        return json{ { "bags", bags }, { "parent", parent } };
    }

    auto decomposition_from_json(const json & doc, const ValuedStructure & a) -> TreeDecomposition
    {
        if (! doc.is_object() || ! doc.contains("bags") || ! doc["bags"].is_array())
            fail(ErrorKind::SchemaError, "decomposition needs a \"bags\" array");
        TreeDecomposition td;
        for (auto & bag : doc["bags"]) {
            if (! bag.is_array())
                fail(ErrorKind::SchemaError, "each bag must be an array of element names");
            VertexSet vertices;
            for (auto & name : bag) {
                if (! name.is_string())
                    fail(ErrorKind::SchemaError, "bag members must be element names");
                auto e = a.find_element(name.get<string>());
                if (! e)
                    fail(ErrorKind::UnknownElement, "unknown element '" + name.get<string>() + "'");
                vertices.push_back(*e);
            }
            std::sort(vertices.begin(), vertices.end());
            vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
            td.bags.push_back(vertices);
        }
        if (doc.contains("parent")) {
            auto & parent = doc["parent"];
            if (! parent.is_array() || parent.size() != td.bags.size())
                fail(ErrorKind::SchemaError, "\"parent\" must list one entry per bag");
            for (auto & p : parent) {
                if (p.is_null())
                    td.parent.push_back(std::nullopt);
                else if (p.is_number_unsigned())
                    td.parent.push_back(p.get<std::size_t>());
                else
                    fail(ErrorKind::SchemaError, "parent entries must be bag indices or null");
            }
        }
        else {
            // a path of bags in the given order
            for (std::size_t i = 0 ; i < td.bags.size() ; ++i)
                td.parent.push_back(i == 0 ? std::nullopt : std::optional<std::size_t>(i - 1));
        }
        return td;
    }

    auto write_or_print(const std::optional<string> & output, const ValuedStructure & s) -> json
    {
        if (output) {
            write_text_file(*output, serialize_structure(s));
            return json{ { "written", *output } };
        }
        return structure_to_json(s);
    }

    auto parse_rational(const string & text) -> Rational
    {
        auto v = ExtRat::parse(text);
        if (v.is_infinite())
            fail(ErrorKind::BadParameter, "expected a finite rational, got '" + text + "'");
        return v.value();
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Valued constraint satisfaction toolkit" };
    app.require_subcommand(1);

    Options options;
    std::uint64_t seed = 0;
    std::optional<string> dump_lp;
    app.add_option("--max-columns", options.max_columns, "Cap on mapping columns");
    app.add_option("--max-pivots", options.max_pivots, "Cap on simplex pivots");
    app.add_option("--max-maps", options.max_maps, "Cap on search nodes for exhaustive optima");
    app.add_option("--seed", seed, "Seed for random generation");
    app.add_option("--dump-lp", dump_lp, "Directory to write every constructed LP into");

    string path_a, path_b, path_w, output_path;
    std::optional<string> output;
    unsigned level = 1;
    std::optional<unsigned> search_level;
    string measure = "tw", gadget_kind = "treewidth", gen_kind;
    bool compare = false;
    unsigned gen_n = 3, gen_k = 3;
    std::size_t gen_size = 3;
    string gen_m = "10";

    auto add_pair = [&] (CLI::App * sub) {
        sub->add_option("A", path_a, "Left structure")->required();
        sub->add_option("B", path_b, "Right structure")->required();
    };

    auto opt_cmd = app.add_subcommand("opt", "Exact minimum cost by exhaustive search");
    add_pair(opt_cmd);

    auto sa_cmd = app.add_subcommand("sa", "Optimum of the Sherali-Adams relaxation");
    add_pair(sa_cmd);
    sa_cmd->add_option("--level,-k", level)->check(CLI::PositiveNumber);
    sa_cmd->add_flag("--compare", compare, "Also compute the exact optimum");

    auto improves_cmd = app.add_subcommand("improves", "Does A improve B");
    add_pair(improves_cmd);
    auto equiv_cmd = app.add_subcommand("equiv", "Are A and B equivalent");
    add_pair(equiv_cmd);

    auto is_core_cmd = app.add_subcommand("is-core", "Is A a core");
    is_core_cmd->add_option("A", path_a)->required();

    auto core_cmd = app.add_subcommand("core", "Compute the core of A");
    core_cmd->add_option("A", path_a)->required();
    core_cmd->add_option("-o,--output", output);

    auto weighting_cmd = app.add_subcommand("core-weighting", "Weighting certifying that A is a core");
    weighting_cmd->add_option("A", path_a)->required();

    auto width_cmd = app.add_subcommand("width", "Treewidth, width modulo scopes, or overlap");
    width_cmd->add_option("A", path_a)->required();
    width_cmd->add_option("--measure", measure)->check(CLI::IsMember({ "tw", "twms", "overlap" }));

    auto overlap_cmd = app.add_subcommand("overlap", "Largest intersection of two positive tuples");
    overlap_cmd->add_option("A", path_a)->required();

    auto tight_cmd = app.add_subcommand("sa-tight", "Is level k tight for every right-hand side");
    tight_cmd->add_option("A", path_a)->required();
    tight_cmd->add_option("--level,-k", level)->check(CLI::PositiveNumber);

    auto gap_cmd = app.add_subcommand("gap", "Right-hand side separating level k from the optimum");
    gap_cmd->add_option("A", path_a)->required();
    gap_cmd->add_option("--kind", gadget_kind)->check(CLI::IsMember({ "treewidth", "overlap" }));
    gap_cmd->add_option("--level,-k", level)->check(CLI::PositiveNumber);
    gap_cmd->add_option("-o,--output", output);

    auto search_cmd = app.add_subcommand("search", "Minimum-cost mapping through the level-k relaxation");
    add_pair(search_cmd);
    search_cmd->add_option("--level,-k", search_level)->check(CLI::PositiveNumber);

    auto gen_cmd = app.add_subcommand("gen", "Generate a structure");
    gen_cmd->add_option("kind", gen_kind)->required()->check(CLI::IsMember(
                { "grid", "path", "diag", "diag-finite", "clique", "two-triangles", "random" }));
    gen_cmd->add_option("--n", gen_n)->check(CLI::PositiveNumber);
    gen_cmd->add_option("--m", gen_m, "Diagonal weight base");
    gen_cmd->add_option("--k", gen_k, "Clique size");
    gen_cmd->add_option("--size", gen_size, "Universe size for random structures");
    gen_cmd->add_option("-o,--output", output);

    auto validate_ifh_cmd = app.add_subcommand("validate-ifh", "Check a distribution of mappings from A to B");
    add_pair(validate_ifh_cmd);
    validate_ifh_cmd->add_option("W", path_w, "Distribution file")->required();

    auto validate_decomp_cmd = app.add_subcommand("validate-decomp", "Check a tree decomposition of A");
    validate_decomp_cmd->add_option("A", path_a)->required();
    validate_decomp_cmd->add_option("D", path_w, "Decomposition file")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    if (dump_lp) {
        std::filesystem::create_directories(*dump_lp);
        options.lp_observer = [dir = *dump_lp, counter = 0u] (std::string_view label, const LinProgram & lp) mutable {
            auto path = std::filesystem::path(dir) / (string(label) + "-" + std::to_string(counter++) + ".lp");
            write_text_file(path.string(), lp.to_lp_text());
        };
    }

    try {
        json out;
        if (*opt_cmd) {
            auto a = read_structure_file(path_a), b = read_structure_file(path_b);
            auto result = opt_bruteforce(a, b, options);
            out = json{ { "opt", result.value.str() }, { "witness", mapping_to_json(result.witness, a, b) } };
        }
        else if (*sa_cmd) {
            auto a = read_structure_file(path_a), b = read_structure_file(path_b);
            auto value = opt_k(a, b, level, options).value;
            out = json{ { "opt_k", value.str() }, { "level", level } };
            if (compare) {
                auto exact = opt_bruteforce(a, b, options).value;
                out["opt"] = exact.str();
                out["tight_vs_bruteforce"] = exact == value;
            }
        }
        else if (*improves_cmd) {
            auto a = read_structure_file(path_a), b = read_structure_file(path_b);
            auto omega = find_ifh(a, b, options);
            out = json{ { "answer", omega.has_value() } };
            if (omega)
                out["witness"] = ifh_to_json(*omega, a, b);
        }
        else if (*equiv_cmd) {
            auto a = read_structure_file(path_a), b = read_structure_file(path_b);
            auto forward = find_ifh(a, b, options);
            auto backward = forward ? find_ifh(b, a, options) : std::nullopt;
            out = json{ { "answer", forward && backward } };
            if (forward)
                out["witness_ab"] = ifh_to_json(*forward, a, b);
            if (backward)
                out["witness_ba"] = ifh_to_json(*backward, b, a);
        }
        else if (*is_core_cmd) {
            auto a = read_structure_file(path_a);
            auto check = is_core(a, options);
            out = json{ { "answer", check.core } };
            if (check.witness)
                out["witness"] = mapping_to_json(*check.witness, a, a);
        }
        else if (*core_cmd) {
            auto a = read_structure_file(path_a);
            auto result = compute_core(a, options);
            out = json{ { "core", write_or_print(output, result.core) },
                { "collapse", mapping_to_json(result.to_core, a, result.core) } };
        }
        else if (*weighting_cmd) {
            auto a = read_structure_file(path_a);
            out = json{ { "c", structure_to_json(core_weighting(a, options).c) } };
        }
        else if (*width_cmd) {
            auto a = read_structure_file(path_a);
            if (measure == "overlap")
                out = json{ { "overlap", overlap(a).value } };
            else {
                auto relational = pos(a);
                auto graph = gaifman(relational);
                auto result = measure == "tw" ? treewidth(graph, options) : twms(relational, options);
                out = json{ { measure, result.width }, { "decomposition", decomposition_to_json(result.decomposition, graph) } };
            }
        }
        else if (*overlap_cmd) {
            auto a = read_structure_file(path_a);
            auto result = overlap(a);
            out = json{ { "overlap", result.value } };
            if (result.pair) {
                auto entry_json = [&] (const Entry & e) {
                    json args = json::array();
                    for (auto v : e.tuple)
                        args.push_back(a.element_name(v));
                    return json{ { "symbol", a.signature()[e.symbol].name }, { "args", args } };
                };
                out["pair"] = json::array({ entry_json(result.pair->first), entry_json(result.pair->second) });
            }
        }
        else if (*tight_cmd) {
            auto a = read_structure_file(path_a);
            auto cert = sa_tight_decide(a, level, options);
            out = json{ { "answer", cert.tight }, { "twms", cert.twms.width }, { "overlap", cert.overlap.value },
                { "core", structure_to_json(cert.core.core) } };
        }
        else if (*gap_cmd) {
            auto a = read_structure_file(path_a);
            auto gadget = gadget_kind == "treewidth" ? gap_instance_treewidth(a, level, options)
                : gap_instance_overlap(a, level, options);
            out = json{ { "size", gadget.structure.size() }, { "m_star", rational_string(gadget.params.m_star) },
                { "delta", gadget.params.delta.str() }, { "structure", write_or_print(output, gadget.structure) } };
        }
        else if (*search_cmd) {
            auto a = read_structure_file(path_a), b = read_structure_file(path_b);
            auto result = search_solve(a, b, search_level, options);
            out = mapping_to_json(result.mapping, a, b);
            out["cost"] = result.cost.str();
            out["infinite"] = result.infinite;
        }
        else if (*gen_cmd) {
            ValuedStructure s = [&] {
                if (gen_kind == "grid")
                    return gen_grid(gen_n);
                if (gen_kind == "path")
                    return gen_path(gen_n);
                if (gen_kind == "diag")
                    return gen_diag_grid(gen_n, parse_rational(gen_m));
                if (gen_kind == "diag-finite")
                    return gen_diag_finite(gen_n, parse_rational(gen_m));
                if (gen_kind == "clique")
                    return gen_crisp_clique(gen_k);
                if (gen_kind == "two-triangles")
                    return gen_two_triangles();
                RandomSpec spec;
                spec.size = gen_size;
                return gen_random(spec, seed);
            }();
            out = write_or_print(output, s);
        }
        else if (*validate_ifh_cmd) {
            auto a = read_structure_file(path_a), b = read_structure_file(path_b);
            auto check = validate_ifh(a, b, ifh_from_json(read_json_file(path_w), a, b));
            out = json{ { "answer", check.valid } };
            if (! check.valid)
                out["violation"] = check.violation;
        }
        else if (*validate_decomp_cmd) {
            auto a = read_structure_file(path_a);
            auto relational = pos(a);
            auto graph = gaifman(relational);
            auto td = decomposition_from_json(read_json_file(path_w), a);
            try {
                auto measures = validate_decomposition(graph, td, scopes(relational));
                out = json{ { "answer", true }, { "width", measures.width },
                    { "width_modulo_scopes", measures.width_modulo_scopes } };
            }
            catch (const VcspError & e) {
                if (e.kind() != ErrorKind::NotADecomposition)
                    throw;
                out = json{ { "answer", false }, { "reason", e.what() } };
            }
        }

        std::cout << out.dump() << '\n';
        return exit_ok;
    }
    catch (const VcspError & e) {
        std::cerr << "error: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}
