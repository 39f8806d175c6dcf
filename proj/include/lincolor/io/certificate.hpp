#pragma once

// Certificates: a magic line, then one JSON object with sorted keys.
//   { "command": ..., "input": {...}, "result": {...}, "pass": true|false }
// `input` is self-contained (spec text, points, seed), so a certificate can be re-run and
// compared without the original files.

#include <lincolor/algebra/point.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace lincolor::io {

inline constexpr const char* kCertMagic = "lincolor-cert-v1";

using Json = nlohmann::json;

inline std::string write_certificate(const Json& body) { return std::string(kCertMagic) + "\n" + body.dump(1) + "\n"; }

inline Json read_certificate(const std::string& text) {
  const auto nl = text.find('\n');
  const std::string head = text.substr(0, nl);
  if (head != kCertMagic) throw std::invalid_argument("line 1: expected header '" + std::string(kCertMagic) + "'");
  if (nl == std::string::npos) throw std::invalid_argument("line 2: missing certificate body");
  try {
    return Json::parse(text.substr(nl + 1));
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("certificate body: ") + e.what());
  }
}

inline Json points_json(const std::vector<GroupPoint>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(p.to_string());
  return a;
}

inline std::vector<GroupPoint> points_from_json(const Json& a, const FieldPtr& field) {
  std::vector<GroupPoint> out;
  for (const auto& s : a) out.push_back(GroupPoint::parse(s.get<std::string>(), field));
  return out;
}

}  // namespace lincolor::io
