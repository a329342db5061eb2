#include "csm/serialization.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "csm/catalog.hpp"
#include "csm/errors.hpp"

namespace csm {

namespace {

using nlohmann::json;

int parse_int(const std::string& text, const std::string& context) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError("expected an integer in '" + context + "', got '" + text + "'");
  }
  return value;
}

ElementSet set_from_json(const json& doc, int size, const std::string& what) {
  if (!doc.is_array()) throw ParseError(what + " must be a list of element indices");
  ElementSet s;
  for (const json& e : doc) {
    if (!e.is_number_integer()) throw ParseError(what + " contains a non-integer entry");
    const int x = e.get<int>();
    if (x < 0 || x >= size) {
      throw ParseError(what + " has element " + std::to_string(x) + " outside [0, " + std::to_string(size) + ")");
    }
    if (s.contains(x)) throw ParseError(what + " repeats element " + std::to_string(x));
    s = s.with(x);
  }
  return s;
}

json set_to_json(ElementSet s) { return json(s.elements()); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

Matroid parse_matroid_spec(const std::string& spec) {
  if (spec == "fano") return fano();
  if (spec == "nonfano") return non_fano();
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "uniform" && colon != std::string::npos) {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw ParseError("uniform spec needs 'uniform:r,m', got '" + spec + "'");
    const int r = parse_int(args.substr(0, comma), spec);
    const int m = parse_int(args.substr(comma + 1), spec);
    if (m < 1 || m > kMaxGroundSize || r < 0) throw ParseError("uniform:" + args + " is out of range");
    return Matroid::uniform(r, m);
  }
  if (kind == "graphic" && args.size() >= 2 && (args[0] == 'K' || args[0] == 'k')) {
    return graphic_complete(parse_int(args.substr(1), spec));
  }
  throw ParseError("unknown matroid spec '" + spec + "' (expected uniform:r,m, graphic:Kn, fano or nonfano)");
}

Matroid matroid_from_json(const json& doc) {
  if (doc.is_string()) return parse_matroid_spec(doc.get<std::string>());
  if (!doc.is_object() || !doc.contains("size") || !doc.contains("bases")) {
    throw ParseError("matroid document needs a spec string or {\"size\", \"bases\"}");
  }
  if (!doc["size"].is_number_integer()) throw ParseError("\"size\" must be an integer");
  const int size = doc["size"].get<int>();
  if (size < 0 || size > kMaxGroundSize) throw ParseError("\"size\" out of range");
  if (!doc["bases"].is_array()) throw ParseError("\"bases\" must be a list");
  std::vector<ElementSet> bases;
  for (const json& b : doc["bases"]) bases.push_back(set_from_json(b, size, "basis"));
  return Matroid::from_bases(size, std::move(bases));
}

json matroid_to_json(const Matroid& m) {
  json bases = json::array();
  for (ElementSet b : m.bases()) bases.push_back(set_to_json(b));
  return {{"size", m.size()}, {"bases", bases}};
}

Matroid load_matroid_file(const std::string& path) { return matroid_from_json(read_json_file(path)); }

Subdivision subdivision_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("parent") || !doc.contains("cells") || !doc["cells"].is_array()) {
    throw ParseError("subdivision document needs {\"parent\", \"cells\": [...]}");
  }
  Subdivision sub{matroid_from_json(doc["parent"]), {}};
  for (const json& cell : doc["cells"]) sub.cells.push_back(matroid_from_json(cell));
  return sub;
}

Subdivision load_subdivision_file(const std::string& path) {
  return subdivision_from_json(read_json_file(path));
}

json cycle_to_json(const TropicalCycle& z) {
  json entries = json::array();
  const TropicalCycle canonical = z.canonical();
  for (const auto& [chain, w] : canonical.weights()) {
    json sets = json::array();
    for (ElementSet s : chain.sets()) sets.push_back(set_to_json(s));
    entries.push_back({{"chain", sets}, {"weight", w}});
  }
  return {{"ambient", z.ambient()}, {"dim", z.dim()}, {"entries", entries}};
}

TropicalCycle cycle_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("ambient") || !doc.contains("dim") || !doc.contains("entries")) {
    throw ParseError("cycle document needs \"ambient\", \"dim\" and \"entries\"");
  }
  if (!doc["ambient"].is_number_integer() || !doc["dim"].is_number_integer() || !doc["entries"].is_array()) {
    throw ParseError("cycle document has mistyped fields");
  }
  const int ambient = doc["ambient"].get<int>();
  TropicalCycle z(ambient, doc["dim"].get<int>());
  for (const json& entry : doc["entries"]) {
    if (!entry.contains("chain") || !entry.contains("weight") || !entry["chain"].is_array() ||
        !entry["weight"].is_number_integer()) {
      throw ParseError("cycle entry needs \"chain\" (list of sets) and integer \"weight\"");
    }
    std::vector<ElementSet> sets;
    for (const json& s : entry["chain"]) sets.push_back(set_from_json(s, ambient, "chain set"));
    const BraidChain chain(std::move(sets));
    if (!chain.is_valid(ambient) || chain.length() != z.dim()) {
      throw ParseError("entry " + chain.to_string() + " is not a chain of the cycle's dimension");
    }
    z.add_weight(chain, entry["weight"].get<std::int64_t>());
  }
  return z.canonical();
}

json polynomial_to_json(const IntPolynomial& p) { return json(p.coefficients()); }

}  // namespace csm
