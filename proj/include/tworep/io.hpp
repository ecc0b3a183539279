#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tworep/cochain.hpp"
#include "tworep/crossed.hpp"
#include "tworep/cyclo.hpp"
#include "tworep/group.hpp"
#include "tworep/rep2.hpp"

namespace tworep::io {

using Json = nlohmann::ordered_json;

/// Parses a file; throws ParseError with the path and the parser message.
Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// {"name", "order", "cayley"}, or {"name", "degree", "generators"} for a
/// group built from permutations.
Json to_json(const FiniteGroup& g);
/// Throws ParseError on malformed input and TooLarge past `max_order`.
FiniteGroup group_from_json(const Json& j, std::size_t max_order = 10000);

/// {"group", "level", "module", "degree", "values"}
Json to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j, const GroupPtr& group);

/// {"group", "orbits": [{"subgroup", "cocycle"}]}
Json to_json(const Rep2& r);
Rep2 rep2_from_json(const Json& j, const AtlasPtr& atlas);

Json to_json(const RootOfUnity& r);
Json to_json(const CycloInt& c);
RootOfUnity root_from_json(const Json& j);
CycloInt cyclo_from_json(const Json& j);

/// {"H", "G", "boundary", "action"}
Json to_json(const CrossedModule& k);
CrossedModule crossed_from_json(const Json& j, std::size_t max_order = 10000);

/// The bundled inputs: <dir>/groups/*.json and <dir>/crossed/*.json, keyed by
/// file stem. Crossed modules that fail validation land in `rejected` with
/// the error message; parse errors propagate.
struct Corpus {
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, CrossedModule> crossed;
  std::vector<std::pair<std::string, std::string>> rejected;

  /// Throws InvalidArgument naming the missing entry.
  const GroupPtr& group(const std::string& name) const;
};

Corpus load_corpus(const std::string& dir, std::size_t max_order = 10000);

}  // namespace tworep::io
