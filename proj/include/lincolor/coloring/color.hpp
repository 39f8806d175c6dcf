#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lincolor {

/// A colour drawn from the tier-th infinite piece C_tier; the tag separates colours within a tier.
struct Color {
  std::uint32_t tier = 0;
  std::vector<std::uint64_t> tag;

  static Color fresh(std::uint32_t tier, std::uint64_t id) { return Color{tier, {id}}; }

  friend bool operator==(const Color&, const Color&) = default;
  friend auto operator<=>(const Color&, const Color&) = default;

  std::string to_string() const {
    std::string out = "(" + std::to_string(tier) + ";";
    for (std::size_t i = 0; i < tag.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(tag[i]);
    }
    return out + ")";
  }
};

namespace detail {
inline void encode_color(const Color& c, std::vector<std::uint64_t>& out) {
  out.push_back(c.tier);
  out.push_back(c.tag.size());
  out.insert(out.end(), c.tag.begin(), c.tag.end());
}
}  // namespace detail

/// Codes the ordered pair <c, d>. The unordered set {c, d} has one element when c = d and two
/// otherwise; the tier records which. The tag is a self-delimiting encoding, so the map is injective.
inline Color pair_color(const Color& c, const Color& d) {
  Color out;
  out.tier = c == d ? 0 : 1;
  detail::encode_color(c, out.tag);
  if (!(c == d)) detail::encode_color(d, out.tag);
  return out;
}

}  // namespace lincolor
