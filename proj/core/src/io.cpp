#include "flipkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace flipkit {

using json = nlohmann::ordered_json;

namespace {

json parse_or_raise(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) raise(Errc::BadFormat, "not valid JSON");
  if (!j.is_object()) raise(Errc::BadFormat, "top level must be an object");
  return j;
}

std::string format_of(const json& j) {
  if (!j.contains("format") || !j.at("format").is_string())
    raise(Errc::BadFormat, "missing \"format\" field");
  return j.at("format").get<std::string>();
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name))
    raise(Errc::BadFormat, std::string("missing \"") + name + "\" field");
  return j.at(name);
}

std::uint32_t as_u32(const json& v, const char* what) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffull)
    raise(Errc::BadFormat, std::string(what) + " must be a 32-bit unsigned integer");
  return v.get<std::uint32_t>();
}

std::vector<Flag> as_flag_array(const json& v, const char* what,
                                std::size_t want) {
  if (!v.is_array() || v.size() != want)
    raise(Errc::BadFormat,
          std::string(what) + " must be an array of length \"flags\"");
  std::vector<Flag> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(as_u32(e, what));
  return out;
}

std::string dump_line(const json& j) { return j.dump() + "\n"; }

}  // namespace

TriangulationMap map_from_json_text(const std::string& text) {
  json j = parse_or_raise(text);
  std::string fmt = format_of(j);
  if (fmt == "flipkit-map-v1") {
    std::uint32_t n = as_u32(field(j, "flags"), "flags");
    auto s0 = as_flag_array(field(j, "s0"), "s0", n);
    auto s1 = as_flag_array(field(j, "s1"), "s1", n);
    auto s2 = as_flag_array(field(j, "s2"), "s2", n);
    return TriangulationMap::from_map_arrays(s0, s1, s2);
  }
  if (fmt == "flipkit-simp-v1") {
    const json& fs = field(j, "faces");
    if (!fs.is_array()) raise(Errc::BadFormat, "faces must be an array");
    std::vector<std::array<std::uint32_t, 3>> faces;
    faces.reserve(fs.size());
    for (const auto& f : fs) {
      if (!f.is_array() || f.size() != 3)
        raise(Errc::BadFormat, "each face must be a 3-element array");
      faces.push_back({as_u32(f[0], "vertex"), as_u32(f[1], "vertex"),
                       as_u32(f[2], "vertex")});
    }
    return TriangulationMap::from_face_triples(faces);
  }
  raise(Errc::BadFormat, "unknown format \"" + fmt + "\"");
}

std::string map_to_json(const TriangulationMap& T) {
  json j;
  j["format"] = "flipkit-map-v1";
  j["flags"] = T.flag_count();
  j["s0"] = T.involution(0);
  j["s1"] = T.involution(1);
  j["s2"] = T.involution(2);
  return dump_line(j);
}

std::string simp_to_json(const TriangulationMap& T) {
  json j;
  j["format"] = "flipkit-simp-v1";
  j["faces"] = T.to_face_triples();
  return dump_line(j);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::BadFormat, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) raise(Errc::BadFormat, "read error on " + path);
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(Errc::BadFormat, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) raise(Errc::BadFormat, "write error on " + path);
}

TriangulationMap load_map_file(const std::string& path) {
  return map_from_json_text(read_text_file(path));
}

namespace {

std::vector<Move> moves_from_json(const json& ms) {
  if (!ms.is_array()) raise(Errc::BadFormat, "moves must be an array");
  std::vector<Move> out;
  out.reserve(ms.size());
  for (const auto& m : ms) {
    if (!m.is_object()) raise(Errc::BadFormat, "each move must be an object");
    const json& k = field(m, "kind");
    if (!k.is_string()) raise(Errc::BadFormat, "move kind must be a string");
    auto kind = move_kind_by_name(k.get<std::string>());
    if (!kind)
      raise(Errc::BadFormat, "unknown move kind \"" + k.get<std::string>() + "\"");
    out.push_back({*kind, as_u32(field(m, "target"), "target")});
  }
  return out;
}

json moves_to_json(const std::vector<Move>& moves) {
  json a = json::array();
  for (const Move& m : moves) {
    json o;
    o["kind"] = move_kind_name(m.kind);
    o["target"] = m.target;
    a.push_back(std::move(o));
  }
  return a;
}

MoveScript script_from_json(const json& j) {
  MoveScript s;
  const json& sk = field(j, "start_key");
  const json& ek = field(j, "end_key");
  if (!sk.is_string() || !ek.is_string())
    raise(Errc::BadFormat, "keys must be hex strings");
  s.start_key = key_from_hex(sk.get<std::string>());
  s.end_key = key_from_hex(ek.get<std::string>());
  const json& ar = field(j, "all_regular");
  if (!ar.is_boolean()) raise(Errc::BadFormat, "all_regular must be a boolean");
  s.all_regular = ar.get<bool>();
  s.moves = moves_from_json(field(j, "moves"));
  return s;
}

void script_fields_to_json(json& j, const MoveScript& s) {
  j["format"] = "flipkit-script-v1";
  j["start_key"] = key_to_hex(s.start_key);
  j["end_key"] = key_to_hex(s.end_key);
  j["all_regular"] = s.all_regular;
  j["moves"] = moves_to_json(s.moves);
}

}  // namespace

MoveScript script_from_json_text(const std::string& text) {
  json j = parse_or_raise(text);
  if (format_of(j) != "flipkit-script-v1")
    raise(Errc::BadFormat, "expected flipkit-script-v1");
  return script_from_json(j);
}

std::string script_to_json(const MoveScript& s) {
  json j;
  script_fields_to_json(j, s);
  return dump_line(j);
}

EquivalenceCertificate certificate_from_json_text(const std::string& text) {
  json j = parse_or_raise(text);
  if (format_of(j) != "flipkit-script-v1")
    raise(Errc::BadFormat, "expected flipkit-script-v1");
  EquivalenceCertificate c;
  c.script = script_from_json(j);
  if (j.contains("strategy")) {
    const json& st = j.at("strategy");
    if (!st.is_array()) raise(Errc::BadFormat, "strategy must be an array");
    for (const auto& seg : st) {
      if (!seg.is_object())
        raise(Errc::BadFormat, "each strategy segment must be an object");
      const json& tag = field(seg, "tag");
      if (!tag.is_string()) raise(Errc::BadFormat, "segment tag must be a string");
      c.strategy.push_back(
          {tag.get<std::string>(), as_u32(field(seg, "moves"), "moves")});
    }
  }
  return c;
}

std::string certificate_to_json(const EquivalenceCertificate& c) {
  json j;
  script_fields_to_json(j, c.script);
  json st = json::array();
  for (const SegmentTag& seg : c.strategy) {
    json o;
    o["tag"] = seg.tag;
    o["moves"] = seg.move_count;
    st.push_back(std::move(o));
  }
  j["strategy"] = std::move(st);
  return dump_line(j);
}

EquivalenceCertificate load_certificate_file(const std::string& path) {
  return certificate_from_json_text(read_text_file(path));
}

std::string store_to_json(const FlipGraphStore& store) {
  json j;
  j["format"] = "flipkit-store-v1";
  j["mode"] = store.mode == FlipMode::RegularFlips ? "regular" : "all";
  j["complete"] = store.complete;
  json nodes = json::array();
  for (const auto& nd : store.nodes) {
    json o;
    o["key"] = key_to_hex(nd.key);
    o["v"] = nd.v;
    o["regular"] = nd.regular;
    nodes.push_back(std::move(o));
  }
  j["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& ed : store.edges) {
    std::string mv = std::string(move_kind_name(ed.move.kind)) + ":" +
                     std::to_string(ed.move.target);
    edges.push_back(json::array({ed.from, ed.to, mv}));
  }
  j["edges"] = std::move(edges);
  return dump_line(j);
}

std::string store_to_dot(const FlipGraphStore& store) {
  std::ostringstream out;
  out << "graph flipgraph {\n";
  for (std::size_t i = 0; i < store.nodes.size(); ++i) {
    const auto& nd = store.nodes[i];
    out << "  n" << i << " [label=\"" << i << " v" << nd.v
        << (nd.regular ? " R" : "") << "\"];\n";
  }
  for (const auto& ed : store.edges) {
    out << "  n" << ed.from << " -- n" << ed.to << " [label=\""
        << move_kind_name(ed.move.kind) << ":" << ed.move.target << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace flipkit
