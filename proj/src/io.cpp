#include "bb/io.hpp"

#include <fstream>

namespace bb {

namespace {

std::vector<Perm> parse_perms(const nlohmann::json& arr, std::size_t degree) {
  if (!arr.is_array()) throw ParseError("expected an array of cycle strings");
  std::vector<Perm> out;
  for (const auto& s : arr) {
    if (!s.is_string()) throw ParseError("permutation must be a cycle string");
    try {
      out.push_back(Perm::from_cycles(s.get<std::string>(), degree));
    } catch (const MalformedPermutation& e) {
      throw ParseError(std::string("bad permutation: ") + e.what());
    }
  }
  return out;
}

}  // namespace

PermGroup group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_unsigned() || !j.contains("generators"))
    throw ParseError("group file needs \"degree\" and \"generators\"");
  const auto degree = j["degree"].get<std::size_t>();
  return PermGroup(degree, parse_perms(j["generators"], degree));
}

PermGroup subgroup_from_json(const nlohmann::json& j, const PermGroup& G) {
  PermGroup H = group_from_json(j);
  if (H.degree() != G.degree()) throw ParseError("subgroup degree differs from the group's");
  if (!G.contains(H)) throw ParseError("subgroup generators are not in the group");
  return H;
}

AutomorphismMaps automorphisms_from_json(const nlohmann::json& j, const PermGroup& G) {
  if (!j.is_object() || !j.contains("images") || !j["images"].is_array())
    throw ParseError("automorphism file needs \"images\"");
  AutomorphismMaps A;
  for (const auto& imgs : j["images"]) {
    auto perms = parse_perms(imgs, G.degree());
    if (perms.size() != G.generators().size()) throw ParseError("one image per generator is required");
    try {
      automorphism_on_elements(G, perms);
    } catch (const std::exception& e) {
      throw ParseError(std::string("not an automorphism: ") + e.what());
    }
    A.images.push_back(std::move(perms));
  }
  return A;
}

nlohmann::json to_json(const PermGroup& G) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : G.generators()) gens.push_back(g.to_cycles());
  return {{"degree", G.degree()}, {"generators", gens}};
}

nlohmann::json to_json(const AutomorphismMaps& A) {
  nlohmann::json imgs = nlohmann::json::array();
  for (const auto& a : A.images) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& g : a) row.push_back(g.to_cycles());
    imgs.push_back(row);
  }
  return {{"images", imgs}};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

PermGroup load_group(const std::string& path) { return group_from_json(read_json_file(path)); }

PermGroup load_subgroup(const std::string& path, const PermGroup& G) {
  return subgroup_from_json(read_json_file(path), G);
}

AutomorphismMaps load_automorphisms(const std::string& path, const PermGroup& G) {
  return automorphisms_from_json(read_json_file(path), G);
}

}  // namespace bb
