#pragma once

#include <stdexcept>
#include <string>

#include "bb/group_ops.hpp"
#include "bb/perm_group.hpp"
#include "json.hpp"

namespace bb {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// {"degree": n, "generators": ["(1,2,3)(4,5)", ...]}
PermGroup group_from_json(const nlohmann::json& j);
/// A subgroup file for G; throws ParseError if a generator lies outside G.
PermGroup subgroup_from_json(const nlohmann::json& j, const PermGroup& G);
/// {"images": [[image of each generator of G], ...]}; each entry is checked
/// to define an automorphism of G.
AutomorphismMaps automorphisms_from_json(const nlohmann::json& j, const PermGroup& G);

nlohmann::json to_json(const PermGroup& G);
nlohmann::json to_json(const AutomorphismMaps& A);

nlohmann::json read_json_file(const std::string& path);
PermGroup load_group(const std::string& path);
PermGroup load_subgroup(const std::string& path, const PermGroup& G);
AutomorphismMaps load_automorphisms(const std::string& path, const PermGroup& G);

}  // namespace bb
