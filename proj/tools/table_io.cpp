#include "table_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace kdecomp::cli {

namespace {

using nlohmann::json;

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

TableEntry parse_entry(const json& node, const std::string& path) {
  if (node.is_string()) {
    std::string s = node.get<std::string>();
    if (s == "zero") return TableEntry::zero();
    if (s == "symbol") return TableEntry::symbol();
    throw InputError(path + ": expected \"zero\", \"symbol\", or a group object, got \"" + s +
                     "\"");
  }
  if (!node.is_object())
    throw InputError(path + ": expected \"zero\", \"symbol\", or a group object");
  for (auto& [key, value] : node.items())
    if (key != "rank" && key != "torsion") throw InputError(path + ": unknown field \"" + key + "\"");
  Int rank = 0;
  std::vector<Int> torsion;
  if (node.contains("rank")) {
    if (!node["rank"].is_number_integer()) throw InputError(path + ".rank: expected an integer");
    rank = node["rank"].get<Int>();
  }
  if (node.contains("torsion")) {
    if (!node["torsion"].is_array()) throw InputError(path + ".torsion: expected an array");
    for (auto& t : node["torsion"]) {
      if (!t.is_number_integer()) throw InputError(path + ".torsion: expected integers");
      torsion.push_back(t.get<Int>());
    }
  }
  FGAbelianGroup g;
  g.free_rank = rank;
  g.torsion = torsion;
  try {
    g.validate();
  } catch (const DomainError& e) {
    throw InputError(path + ": " + e.what());
  }
  return TableEntry::concrete(std::move(g));
}

Int parse_degree(const std::string& key, const std::string& path) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return static_cast<Int>(v);
  } catch (const std::exception&) {
    throw InputError(path + ": degree key \"" + key + "\" is not an integer");
  }
}

}  // namespace

RingTable parse_ring_table(const std::string& text, const std::string& origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ":" + std::to_string(line_of_byte(text, e.byte)) +
                     ": table is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw InputError(origin + ": top level must be a JSON object");
  for (auto& [key, value] : doc.items())
    if (key != "name" && key != "regular" && key != "K" && key != "NK")
      throw InputError(origin + ": unknown top-level field \"" + key + "\"");

  std::string name = "table";
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError(origin + ": name: expected a string");
    name = doc["name"].get<std::string>();
  }
  bool regular = false;
  if (doc.contains("regular")) {
    if (!doc["regular"].is_boolean()) throw InputError(origin + ": regular: expected a boolean");
    regular = doc["regular"].get<bool>();
  }

  RingTable table(name, regular, /*defaults_to_symbol=*/true);
  for (const char* section : {"K", "NK"}) {
    if (!doc.contains(section)) continue;
    const json& map = doc[section];
    if (!map.is_object())
      throw InputError(origin + ": " + section + ": expected an object keyed by degree");
    for (auto& [key, value] : map.items()) {
      std::string path = origin + ": " + section + ".\"" + key + "\"";
      Int degree = parse_degree(key, path);
      TableEntry entry = parse_entry(value, path);
      try {
        if (section == std::string("K"))
          table.set_k(degree, std::move(entry));
        else
          table.set_nk(degree, std::move(entry));
      } catch (const DomainError& e) {
        throw InputError(path + ": " + e.what());
      }
    }
  }
  return table;
}

RingTable load_ring_table(const std::string& name_or_path) {
  if (name_or_path == "symbolic") return RingTable::symbolic();
  if (name_or_path == "regular") return RingTable::regular_ring();
  std::ifstream in(name_or_path);
  if (!in) throw InputError("cannot open ring table file: " + name_or_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ring_table(buffer.str(), name_or_path);
}

}  // namespace kdecomp::cli
