#pragma once

// Interchange formats (JSON): hereditary families as {"n":…, "bases":[[…]]},
// plain families as {"n":…, "members":[[…]]}, graphs as {"n":…, "edges":[[i,j]]}.
// Element labels are 1-based and families are serialized canonically, so
// parse(serialize(x)) == x byte-for-byte on re-serialization.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hfam/construct.hpp"
#include "hfam/family.hpp"
#include "hfam/galois.hpp"

namespace hfam {

struct ParsedFamily {
  HereditaryFamily family;
  bool reduced = false;  // input bases were not an antichain; auto-reduced
};

ParsedFamily parse_family(const std::string& text);
std::string serialize_family(const HereditaryFamily& h);

SetFamily parse_set_family(const std::string& text);
std::string serialize_set_family(const SetFamily& f);

Graph parse_graph(const std::string& text);

nlohmann::json set_to_json(const GroundedSet& s);
GroundedSet set_from_json(const nlohmann::json& j, int n);
nlohmann::json members_to_json(const SetFamily& f);  // bare [[…],[…]]
nlohmann::json family_to_json(const HereditaryFamily& h);
nlohmann::json set_family_to_json(const SetFamily& f);
nlohmann::json report_to_json(const ExtremalReport& rep);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace hfam
