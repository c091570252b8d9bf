#pragma once

#include <string>

#include "flipkit/map.hpp"
#include "flipkit/moves.hpp"
#include "flipkit/pipeline.hpp"
#include "flipkit/search.hpp"

namespace flipkit {

// JSON formats (compact, fixed field order, trailing newline; writer output
// round-trips bit-exactly):
//   map    {"format":"flipkit-map-v1","flags":N,"s0":[...],"s1":[...],"s2":[...]}
//   simp   {"format":"flipkit-simp-v1","faces":[[a,b,c],...]}
//   script {"format":"flipkit-script-v1","start_key":hex,"end_key":hex,
//           "all_regular":bool,"moves":[{"kind":...,"target":n},...]}
//   cert   script fields + "strategy":[{"tag":...,"moves":n},...]
// Read errors raise Error(BadFormat); validation failures keep their codes.

TriangulationMap map_from_json_text(const std::string& text);
std::string map_to_json(const TriangulationMap& T);
std::string simp_to_json(const TriangulationMap& T);  // requires regular

// Reads either map or simp format (dispatch on "format").
TriangulationMap load_map_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

MoveScript script_from_json_text(const std::string& text);
std::string script_to_json(const MoveScript& s);

EquivalenceCertificate certificate_from_json_text(const std::string& text);
std::string certificate_to_json(const EquivalenceCertificate& c);
// Reads a script file with or without a strategy trace as a certificate.
EquivalenceCertificate load_certificate_file(const std::string& path);

std::string store_to_json(const FlipGraphStore& store);
std::string store_to_dot(const FlipGraphStore& store);

}  // namespace flipkit
