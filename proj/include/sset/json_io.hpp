#ifndef SSET_JSON_IO_HPP
#define SSET_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "sset/map.hpp"
#include "sset/simplicial_set.hpp"

namespace sset {

using Json = nlohmann::json;

// Interchange format (field names exact):
//   set:  {"name": str, "simplices": [{"id": str, "dim": int, "faces": [Expr]}]}
//   Expr: {"collapse": [int ascending], "target": str}
//   map:  {"domain": str, "codomain": str, "assignments": {id: Expr}}
// Writers emit simplices sorted by (dim, id) and collapse sets ascending;
// readers accept any order.

Json sset_to_json(const SimplicialSet& X);
SSetPtr sset_from_json(const Json& j);

Json map_to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const Json& j, const SSetPtr& domain, const SSetPtr& codomain);

// Canonical text rendering: compact dump plus trailing newline.  All
// persisted and printed JSON goes through this one function.
std::string canonical_dump(const Json& j);

SSetPtr load_sset(const std::string& path);
void save_json(const std::string& path, const Json& j);
Json load_json(const std::string& path);

}  // namespace sset

#endif
