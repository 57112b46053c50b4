/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <vcsp/structure_io.hh>
#include <vcsp/errors.hh>

#include <fstream>
#include <sstream>

using nlohmann::json;

using std::ifstream;
using std::ofstream;
using std::size_t;
using std::string;
using std::string_view;
using std::stringstream;
using std::vector;

namespace vcsp
{
    namespace
    {
        auto require(bool condition, const string & message) -> void
        {
            if (! condition)
                fail(ErrorKind::SchemaError, message);
        }

        auto value_from_json(const json & v) -> ExtRat
        {
            if (v.is_string())
                return ExtRat::parse(v.get<string>());
            if (v.is_number_unsigned())
                return ExtRat(Rational(std::to_string(v.get<unsigned long long>())));
            fail(ErrorKind::MalformedRational, "value must be a string such as \"3/4\" or \"inf\"");
        }
    }

    auto structure_from_json(const json & doc) -> ValuedStructure
    {
        require(doc.is_object(), "top level must be an object");
        require(doc.contains("signature") && doc["signature"].is_array(), "missing array 'signature'");
        require(doc.contains("universe") && doc["universe"].is_array(), "missing array 'universe'");

        Signature signature;
        for (auto & s : doc["signature"]) {
            require(s.is_object() && s.contains("name") && s["name"].is_string(), "signature entry needs a 'name'");
            require(s.contains("arity") && s["arity"].is_number_integer(), "signature entry needs an integer 'arity'");
            auto arity = s["arity"].get<long long>();
            require(arity >= 1 && arity <= 64, "arity must be between 1 and 64");
            signature.add(Symbol{ s["name"].get<string>(), unsigned(arity) });
        }

        vector<string> universe;
        for (auto & e : doc["universe"]) {
            require(e.is_string(), "universe elements must be strings");
            universe.push_back(e.get<string>());
        }

        ValuedStructure result(signature, universe);

        if (doc.contains("functions")) {
            auto & functions = doc["functions"];
            require(functions.is_object(), "'functions' must be an object");
            for (auto & [name, table] : functions.items()) {
                auto symbol = signature.find(name);
                require(symbol.has_value(), "function table for undeclared symbol '" + name + "'");
                require(table.is_object(), "table for '" + name + "' must be an object");

                if (table.contains("default"))
                    result.set_default(*symbol, value_from_json(table["default"]));

                if (table.contains("entries")) {
                    require(table["entries"].is_array(), "'entries' of '" + name + "' must be an array");
                    std::unordered_map<Tuple, bool, TupleHash> seen;
                    for (auto & entry : table["entries"]) {
                        require(entry.is_object() && entry.contains("args") && entry["args"].is_array(),
                                "entry of '" + name + "' needs an 'args' array");
                        require(entry.contains("value"), "entry of '" + name + "' needs a 'value'");
                        auto & args = entry["args"];
                        if (args.size() != signature[*symbol].arity)
                            fail(ErrorKind::ArityMismatch, "entry of '" + name + "' has " + std::to_string(args.size())
                                    + " arguments, expected " + std::to_string(signature[*symbol].arity));
                        Tuple t;
                        for (auto & a : args) {
                            require(a.is_string(), "arguments must be element names");
                            auto e = result.find_element(a.get<string>());
                            if (! e)
                                fail(ErrorKind::UnknownElement, "unknown element '" + a.get<string>() + "'");
                            t.push_back(*e);
                        }
                        if (! seen.emplace(t, true).second)
                            fail(ErrorKind::SchemaError, "duplicate entry for a tuple of '" + name + "'");
                        result.set(*symbol, t, value_from_json(entry["value"]));
                    }
                }
            }
        }

        return result;
    }

    auto parse_structure(string_view text) -> ValuedStructure
    {
        json doc;
        try {
            doc = json::parse(text);
        }
        catch (const json::parse_error & e) {
            fail(ErrorKind::SchemaError, string("invalid JSON: ") + e.what());
        }
        return structure_from_json(doc);
    }

    auto structure_to_json(const ValuedStructure & a) -> json
    {
        json doc;
        doc["signature"] = json::array();
        for (auto & s : a.signature().symbols())
            doc["signature"].push_back({ { "name", s.name }, { "arity", s.arity } });
        doc["universe"] = a.universe();
        doc["functions"] = json::object();
        for (size_t s = 0 ; s < a.signature().size() ; ++s) {
            json table;
            table["default"] = a.default_value(s).str();
            table["entries"] = json::array();
            for (auto & [t, v] : a.overrides(s)) {
                json args = json::array();
                for (auto e : t)
                    args.push_back(a.element_name(e));
                table["entries"].push_back({ { "args", args }, { "value", v.str() } });
            }
            doc["functions"][a.signature()[s].name] = table;
        }
        return doc;
    }

    auto serialize_structure(const ValuedStructure & a) -> string
    {
        return structure_to_json(a).dump(1) + "\n";
    }

    auto read_structure_file(const string & path) -> ValuedStructure
    {
        ifstream in(path);
        if (! in)
            fail(ErrorKind::SchemaError, "cannot read file '" + path + "'");
        stringstream buffer;
        buffer << in.rdbuf();
        return parse_structure(buffer.str());
    }

    auto write_text_file(const string & path, const string & text) -> void
    {
        ofstream out(path);
        if (! out)
            fail(ErrorKind::SchemaError, "cannot write file '" + path + "'");
        out << text;
    }

    auto mapping_to_json(const Mapping & h, const ValuedStructure & source, const ValuedStructure & target) -> json
    {
        json map = json::object();
        for (size_t e = 0 ; e < h.size() ; ++e)
            map[source.element_name(Element(e))] = target.element_name(h(Element(e)));
        return json{ { "map", map } };
    }

    auto mapping_from_json(const json & doc, const ValuedStructure & source, const ValuedStructure & target) -> Mapping
    {
        require(doc.is_object() && doc.contains("map") && doc["map"].is_object(), "mapping needs a 'map' object");
        vector<Element> image(source.size(), 0);
        vector<bool> seen(source.size(), false);
        for (auto & [from, to] : doc["map"].items()) {
            auto e = source.find_element(from);
            if (! e)
                fail(ErrorKind::UnknownElement, "unknown source element '" + from + "'");
            require(to.is_string(), "mapping images must be element names");
            auto x = target.find_element(to.get<string>());
            if (! x)
                fail(ErrorKind::UnknownElement, "unknown target element '" + to.get<string>() + "'");
            image[*e] = *x;
            seen[*e] = true;
        }
        for (size_t e = 0 ; e < seen.size() ; ++e)
            require(seen[e], "mapping misses element '" + source.element_name(Element(e)) + "'");
        return Mapping(image, target.size());
    }
}
