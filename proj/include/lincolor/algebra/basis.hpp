#pragma once

#include <lincolor/algebra/point.hpp>

#include <span>
#include <vector>

namespace lincolor {

/// A Q-subspace of K^d held as a reduced row echelon basis over rational coordinates.
///
/// Rows have leading coefficient 1 and every pivot column is zero in the other rows, so two
/// bases of the same subspace compare equal structurally.
class Basis {
 public:
  Basis() : Basis(Field::rationals(), 0) {}
  Basis(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  static Basis span(const FieldPtr& field, std::size_t dim, std::span<const GroupPoint> generators) {
    Basis b(field, dim);
    for (const auto& g : generators) b.adjoin(g);
    return b;
  }

  static Basis full(const FieldPtr& field, std::size_t dim) {
    Basis b(field, dim);
    const std::size_t n = dim * static_cast<std::size_t>(field->degree());
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> row(n, 0);
      row[i] = 1;
      b.rows_.push_back(std::move(row));
      b.pivots_.push_back(i);
    }
    return b;
  }

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  /// Dimension over Q.
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_rank() const { return dim_ * static_cast<std::size_t>(field_->degree()); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rank() == ambient_rank(); }

  /// Adds x to the spanning set; returns whether the subspace grew.
  bool adjoin(const GroupPoint& x) {
    auto v = coordinates(x);
    reduce_in_place(v);
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size()) return false;
    const Rational inv = 1 / v[lead];
    for (auto& e : v) e *= inv;
    for (auto& row : rows_) {
      if (row[lead] == 0) continue;
      const Rational f = row[lead];
      for (std::size_t k = 0; k < row.size(); ++k) row[k] -= f * v[k];
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < lead) ++at;
    rows_.insert(rows_.begin() + static_cast<long>(at), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(at), lead);
    return true;
  }

  bool contains(const GroupPoint& x) const {
    auto v = coordinates(x);
    reduce_in_place(v);
    for (const auto& e : v)
      if (e != 0) return false;
    return true;
  }

  bool contains(const Basis& other) const {
    for (const auto& p : other.vectors())
      if (!contains(p)) return false;
    return true;
  }

  /// Canonical representative of the coset x + span: x with every pivot coordinate cleared.
  GroupPoint normal_form(const GroupPoint& x) const {
    auto v = coordinates(x);
    reduce_in_place(v);
    return GroupPoint::from_rational_coordinates(field_, v);
  }

  std::vector<GroupPoint> vectors() const {
    std::vector<GroupPoint> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(GroupPoint::from_rational_coordinates(field_, r));
    return out;
  }

  Basis sum(const Basis& other) const {
    Basis out = *this;
    for (const auto& p : other.vectors()) out.adjoin(p);
    return out;
  }

  /// dim(U ∩ W) = dim U + dim W - dim(U + W).
  std::size_t intersection_rank(const Basis& other) const { return rank() + other.rank() - sum(other).rank(); }

  friend bool operator==(const Basis& a, const Basis& b) {
    return a.dim_ == b.dim_ && same_field(a.field_, b.field_) && a.rows_ == b.rows_;
  }

  std::string to_string() const {
    std::string out = "{";
    const auto vs = vectors();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out += ' ';
      out += vs[i].to_string();
    }
    return out + "}";
  }

 private:
  std::vector<Rational> coordinates(const GroupPoint& x) const {
    if (x.dim() != dim_) throw std::invalid_argument("point dimension does not match subspace");
    return x.rational_coordinates(field_->degree());
  }

  void reduce_in_place(std::vector<Rational>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (v[p] == 0) continue;
      const Rational f = v[p];
      const auto& row = rows_[i];
      for (std::size_t k = p; k < row.size(); ++k)
        if (row[k] != 0) v[k] -= f * row[k];
    }
  }

  FieldPtr field_;
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

inline bool span_membership(const Basis& b, const GroupPoint& x) { return b.contains(x); }

}  // namespace lincolor
