#pragma once

#include <lincolor/algebra/point.hpp>

#include <optional>
#include <utility>

namespace lincolor {

/// Square matrix over a number field acting on column vectors of K^d.
class ExactMatrix {
 public:
  ExactMatrix(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim), cells_(dim * dim, Scalar(field_, 0)) {}

  ExactMatrix(FieldPtr field, std::size_t dim, std::vector<Scalar> row_major)
      : field_(std::move(field)), dim_(dim), cells_(std::move(row_major)) {
    if (cells_.size() != dim_ * dim_) throw std::invalid_argument("matrix needs dim*dim entries");
    for (auto& c : cells_) {
      join_fields(field_, c.field());
      c = Scalar(field_, 0) + c;
    }
  }

  static ExactMatrix identity(const FieldPtr& field, std::size_t dim) { return scalar(field, dim, Scalar(1)); }

  /// s times the identity.
  static ExactMatrix scalar(const FieldPtr& field, std::size_t dim, const Scalar& s) {
    ExactMatrix m(field, dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Scalar(field, 0) + s;
    return m;
  }

  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return cells_[r * dim_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return cells_[r * dim_ + c]; }

  GroupPoint operator*(const GroupPoint& v) const {
    if (v.dim() != dim_) throw std::invalid_argument("matrix/vector dimension mismatch");
    std::vector<Scalar> out;
    out.reserve(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      Scalar acc(field_, 0);
      for (std::size_t c = 0; c < dim_; ++c) {
        const Scalar& m = (*this)(r, c);
        if (!m.is_zero() && !v[c].is_zero()) acc += m * v[c];
      }
      out.push_back(std::move(acc));
    }
    return GroupPoint(std::move(out));
  }

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    check(a, b);
    ExactMatrix out(a.field_, a.dim_);
    for (std::size_t r = 0; r < a.dim_; ++r)
      for (std::size_t c = 0; c < a.dim_; ++c) {
        Scalar acc(a.field_, 0);
        for (std::size_t k = 0; k < a.dim_; ++k) acc += a(r, k) * b(k, c);
        out.at(r, c) = std::move(acc);
      }
    return out;
  }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    check(a, b);
    ExactMatrix out(a.field_, a.dim_);
    for (std::size_t i = 0; i < a.cells_.size(); ++i) out.cells_[i] = a.cells_[i] + b.cells_[i];
    return out;
  }

  ExactMatrix operator-() const {
    ExactMatrix out = *this;
    for (auto& c : out.cells_) c = -c;
    return out;
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.dim_ == b.dim_ && same_field(a.field_, b.field_) && a.cells_ == b.cells_;
  }

  bool is_zero() const {
    for (const auto& c : cells_)
      if (!c.is_zero()) return false;
    return true;
  }

  std::size_t rank() const {
    auto rows = row_vectors();
    return eliminate(rows, dim_).size();
  }

  bool is_injective() const { return rank() == dim_; }

  std::optional<ExactMatrix> inverse() const {
    // Gauss-Jordan on [M | I].
    std::vector<std::vector<Scalar>> aug(dim_, std::vector<Scalar>(2 * dim_, Scalar(field_, 0)));
    for (std::size_t r = 0; r < dim_; ++r) {
      for (std::size_t c = 0; c < dim_; ++c) aug[r][c] = (*this)(r, c);
      aug[r][dim_ + r] = Scalar(field_, 1);
    }
    if (eliminate(aug, dim_).size() != dim_) return std::nullopt;
    ExactMatrix inv(field_, dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) inv.at(r, c) = aug[r][dim_ + c];
    return inv;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i) out += ' ';
      out += cells_[i].to_string();
    }
    return out;
  }

  /// Reduced row echelon form in place over the leading `cols` columns; returns pivot columns.
  /// Rows are reordered so that the first rank rows carry the pivots.
  static std::vector<std::size_t> eliminate(std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
      std::size_t p = next;
      while (p < rows.size() && rows[p][c].is_zero()) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[next]);
      const Scalar inv = rows[next][c].inverse();
      for (auto& e : rows[next]) e *= inv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == next || rows[r][c].is_zero()) continue;
        const Scalar f = rows[r][c];
        for (std::size_t k = 0; k < rows[r].size(); ++k)
          if (!rows[next][k].is_zero()) rows[r][k] -= f * rows[next][k];
      }
      pivots.push_back(c);
      ++next;
    }
    return pivots;
  }

 private:
  std::vector<std::vector<Scalar>> row_vectors() const {
    std::vector<std::vector<Scalar>> rows(dim_);
    for (std::size_t r = 0; r < dim_; ++r) rows[r].assign(cells_.begin() + static_cast<long>(r * dim_),
                                                         cells_.begin() + static_cast<long>((r + 1) * dim_));
    return rows;
  }

  static void check(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    if (!same_field(a.field_, b.field_)) throw std::invalid_argument("matrix field mismatch");
  }

  FieldPtr field_;
  std::size_t dim_;
  std::vector<Scalar> cells_;
};

/// Some u with m*u = v, or nothing when v is outside the image. Free variables are set to zero,
/// so the answer is unique when m is injective.
inline std::optional<GroupPoint> solve(const ExactMatrix& m, const GroupPoint& v) {
  const std::size_t n = m.dim();
  if (v.dim() != n) throw std::invalid_argument("matrix/vector dimension mismatch");
  std::vector<std::vector<Scalar>> aug(n, std::vector<Scalar>(n + 1, Scalar(m.field(), 0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = m(r, c);
    aug[r][n] = Scalar(m.field(), 0) + v[r];
  }
  const auto pivots = ExactMatrix::eliminate(aug, n);
  for (std::size_t r = pivots.size(); r < n; ++r)
    if (!aug[r][n].is_zero()) return std::nullopt;
  std::vector<Scalar> u(n, Scalar(m.field(), 0));
  for (std::size_t i = 0; i < pivots.size(); ++i) u[pivots[i]] = aug[i][n];
  return GroupPoint(std::move(u));
}

}  // namespace lincolor
