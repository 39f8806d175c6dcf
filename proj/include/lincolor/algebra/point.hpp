#pragma once

#include <lincolor/algebra/field.hpp>

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <vector>

namespace lincolor {

/// An element of K^d, the ambient abelian group.
class GroupPoint {
 public:
  GroupPoint() = default;
  explicit GroupPoint(std::vector<Scalar> entries) : entries_(std::move(entries)) {}
  GroupPoint(std::initializer_list<Scalar> entries) : entries_(entries) {}

  static GroupPoint zero(const FieldPtr& field, std::size_t dim) {
    return GroupPoint(std::vector<Scalar>(dim, Scalar(field, 0)));
  }

  /// The i-th standard basis vector scaled by s.
  static GroupPoint axis(const FieldPtr& field, std::size_t dim, std::size_t i, const Scalar& s = Scalar(1)) {
    GroupPoint p = zero(field, dim);
    p.entries_[i] = Scalar(field, 0) + s;
    return p;
  }

  std::size_t dim() const { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Scalar> entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// Coordinates over Q: entry-major, coefficient-minor, length dim * degree.
  std::vector<Rational> rational_coordinates(int degree) const {
    std::vector<Rational> out;
    out.reserve(entries_.size() * static_cast<std::size_t>(degree));
    for (const auto& e : entries_)
      for (int k = 0; k < degree; ++k) out.push_back(e.coefficient(static_cast<std::size_t>(k)));
    return out;
  }

  static GroupPoint from_rational_coordinates(const FieldPtr& field, std::span<const Rational> coords) {
    const auto k = static_cast<std::size_t>(field->degree());
    std::vector<Scalar> entries;
    entries.reserve(coords.size() / k);
    for (std::size_t i = 0; i < coords.size(); i += k)
      entries.emplace_back(field, coords[i], k == 2 ? coords[i + 1] : Rational(0));
    return GroupPoint(std::move(entries));
  }

  GroupPoint operator-() const {
    GroupPoint r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
  }

  friend GroupPoint operator+(const GroupPoint& x, const GroupPoint& y) {
    check_dims(x, y);
    std::vector<Scalar> out;
    out.reserve(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) out.push_back(x.entries_[i] + y.entries_[i]);
    return GroupPoint(std::move(out));
  }
  friend GroupPoint operator-(const GroupPoint& x, const GroupPoint& y) {
    check_dims(x, y);
    std::vector<Scalar> out;
    out.reserve(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) out.push_back(x.entries_[i] - y.entries_[i]);
    return GroupPoint(std::move(out));
  }
  friend GroupPoint operator*(const Scalar& s, const GroupPoint& x) {
    std::vector<Scalar> out;
    out.reserve(x.dim());
    for (const auto& e : x.entries_) out.push_back(s * e);
    return GroupPoint(std::move(out));
  }

  friend bool operator==(const GroupPoint& x, const GroupPoint& y) { return x.entries_ == y.entries_; }
  friend std::strong_ordering operator<=>(const GroupPoint& x, const GroupPoint& y) {
    return std::lexicographical_compare_three_way(x.entries_.begin(), x.entries_.end(), y.entries_.begin(),
                                                  y.entries_.end());
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += entries_[i].to_string();
    }
    out += ')';
    return out;
  }

  /// Accepts "(a,b,...)" or a bare scalar for one-dimensional spaces.
  static GroupPoint parse(std::string_view text, const FieldPtr& field) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty point");
    if (text.front() == '(') {
      if (text.back() != ')') throw std::invalid_argument("unterminated point '" + std::string(text) + "'");
      text = text.substr(1, text.size() - 2);
    }
    std::vector<Scalar> entries;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
      while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
      entries.push_back(Scalar(field, 0) + Scalar::parse(part, field));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return GroupPoint(std::move(entries));
  }

  friend std::ostream& operator<<(std::ostream& os, const GroupPoint& p) { return os << p.to_string(); }

 private:
  static void check_dims(const GroupPoint& x, const GroupPoint& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  }

  std::vector<Scalar> entries_;
};

/// Squared length used as the metric on K^d: sum of field norms of the entries.
/// Euclidean on Q^d; the Eisenstein modulus a^2 + ab + b^2 per entry on Q(w)^d.
inline Rational squared_norm(const GroupPoint& p) {
  Rational total = 0;
  for (const auto& e : p.entries()) total += e.norm();
  return total;
}

/// Sorted, duplicate-free copy.
inline std::vector<GroupPoint> canonical_point_set(std::vector<GroupPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace lincolor
