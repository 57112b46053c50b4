/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef VCSP_STRUCTURE_IO_HH
#define VCSP_STRUCTURE_IO_HH 1

#include <vcsp/mapping.hh>
#include <vcsp/structure.hh>

#include <json.hpp>

#include <string>
#include <string_view>

namespace vcsp
{
    auto parse_structure(std::string_view text) -> ValuedStructure;
    auto structure_from_json(const nlohmann::json & doc) -> ValuedStructure;

    auto serialize_structure(const ValuedStructure & a) -> std::string;
    auto structure_to_json(const ValuedStructure & a) -> nlohmann::json;

    auto read_structure_file(const std::string & path) -> ValuedStructure;
    auto write_text_file(const std::string & path, const std::string & text) -> void;

    // {"map":{"a":"x",...}} using element names of both structures.
    auto mapping_to_json(const Mapping & h, const ValuedStructure & source, const ValuedStructure & target) -> nlohmann::json;
    auto mapping_from_json(const nlohmann::json & doc, const ValuedStructure & source, const ValuedStructure & target) -> Mapping;
}

#endif
