#include "faceq/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace faceq {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json scheme_to_json(const FacePairingScheme& s, bool with_meta) {
  ordered_json j;
  j["vertices"] = s.complex.vertices;
  auto& je = j["edges"] = ordered_json::array();
  for (const auto& e : s.complex.edges) je.push_back({e.first, e.second});
  j["faces"] = s.complex.faces;
  auto& jp = j["pairing"] = ordered_json::array();
  for (const auto& p : s.pairing) {
    ordered_json e;
    e["a"] = p.a;
    e["b"] = p.b;
    e["offset"] = p.offset;
    e["reversed"] = p.reversed;
    jp.push_back(std::move(e));
  }
  if (with_meta && !s.meta_json.empty())
    j["meta"] = ordered_json::parse(s.meta_json);
  return j;
}

}  // namespace

std::string serialize_scheme(const FacePairingScheme& s) {
  return scheme_to_json(s, true).dump(2) + "\n";
}

FacePairingScheme parse_scheme(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scheme is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("scheme file must be a JSON object");
  for (const char* key : {"vertices", "edges", "faces", "pairing"})
    if (!j.contains(key) || !j[key].is_array())
      throw ParseError(std::string("missing or non-array field '") + key + "'");

  FacePairingScheme s;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("vertex labels must be strings");
    s.complex.vertices.push_back(v.get<std::string>());
  }
  int idx = 0;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ParseError("edge " + std::to_string(idx) + " must be [tail, head]");
    s.complex.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    ++idx;
  }
  idx = 0;
  for (const auto& f : j["faces"]) {
    if (!f.is_array()) throw ParseError("face " + std::to_string(idx) + " must be an array");
    std::vector<Sym> walk;
    int pos = 0;
    for (const auto& sy : f) {
      if (!sy.is_number_integer() || sy.get<int>() == 0)
        throw ParseError("face " + std::to_string(idx) + " position " + std::to_string(pos) +
                         " must be a nonzero signed edge id");
      walk.push_back(sy.get<int>());
      ++pos;
    }
    s.complex.faces.push_back(std::move(walk));
    ++idx;
  }
  idx = 0;
  for (const auto& p : j["pairing"]) {
    if (!p.is_object() || !p.contains("a") || !p.contains("b") || !p.contains("offset") ||
        !p.contains("reversed"))
      throw ParseError("pairing entry " + std::to_string(idx) +
                       " must be {a, b, offset, reversed}");
    PairingEntry e;
    e.a = p["a"].get<int>();
    e.b = p["b"].get<int>();
    e.offset = p["offset"].get<int>();
    if (!p["reversed"].is_boolean())
      throw ParseError("pairing entry " + std::to_string(idx) + ": 'reversed' must be a bool");
    e.reversed = p["reversed"].get<bool>();
    s.pairing.push_back(e);
    ++idx;
  }
  if (j.contains("meta")) {
    if (!j["meta"].is_object()) throw ParseError("'meta' must be an object");
    s.meta_json = j["meta"].dump();
  }

  // Index-range checks are hard errors here; semantic checks live in validate().
  const int nv = static_cast<int>(s.complex.vertices.size());
  const int ne = static_cast<int>(s.complex.edges.size());
  idx = 0;
  for (const auto& e : s.complex.edges) {
    if (e.first < 0 || e.first >= nv || e.second < 0 || e.second >= nv)
      throw ParseError("edge " + std::to_string(idx) + " references vertex out of range");
    ++idx;
  }
  idx = 0;
  for (const auto& f : s.complex.faces) {
    for (std::size_t i = 0; i < f.size(); ++i)
      if (sym_index(f[i]) >= ne)
        throw ParseError("face " + std::to_string(idx) + " position " + std::to_string(i) +
                         " references edge out of range");
    ++idx;
  }
  return s;
}

FacePairingScheme load_scheme_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scheme(ss.str());
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << contents;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t scheme_hash(const FacePairingScheme& s) {
  return fnv1a(scheme_to_json(s, false).dump());
}

std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace faceq
