#pragma once

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstddef>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lincolor {

using Rational = mpq_class;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char ch : s) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// A number field of degree one or two over the rationals.
///
/// Degree two fields are presented as Q(w) with w^2 + c1*w + c0 = 0 for an
/// irreducible monic minimal polynomial. The Eisenstein-like field used for
/// equilateral triangles has w^2 = w - 1 (c1 = -1, c0 = 1), i.e. w = e^{i pi/3}.
class Field {
 public:
  static std::shared_ptr<const Field> rationals() {
    static const auto q = std::shared_ptr<const Field>(new Field(1, 0, 0));
    return q;
  }

  static std::shared_ptr<const Field> eisenstein() {
    static const auto e = std::shared_ptr<const Field>(new Field(2, -1, 1));
    return e;
  }

  /// Q(w) with w^2 + c1*w + c0 = 0. Throws if the polynomial has a rational root.
  static std::shared_ptr<const Field> quadratic(const Rational& c1, const Rational& c0) {
    if (c1 == -1 && c0 == 1) return eisenstein();
    const Rational disc = c1 * c1 - 4 * c0;
    if (is_rational_square(disc))
      throw std::invalid_argument("minimal polynomial is reducible over Q");
    return std::shared_ptr<const Field>(new Field(2, c1, c0));
  }

  int degree() const { return degree_; }
  const Rational& c1() const { return c1_; }
  const Rational& c0() const { return c0_; }

  /// True when the norm form a^2 - c1*a*b + c0*b^2 is positive definite,
  /// i.e. the field embeds in C with w non-real (or the field is Q).
  bool norm_is_definite() const { return degree_ == 1 || c1_ * c1_ - 4 * c0_ < 0; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.degree_ == b.degree_ && a.c1_ == b.c1_ && a.c0_ == b.c0_;
  }

  std::string describe() const {
    if (degree_ == 1) return "rational";
    return "minpoly 1 " + to_string(c1_) + " " + to_string(c0_);
  }

 private:
  Field(int degree, Rational c1, Rational c0) : degree_(degree), c1_(std::move(c1)), c0_(std::move(c0)) {}

  static bool is_rational_square(const Rational& r) {
    if (r < 0) return false;
    return mpz_perfect_square_p(r.get_num_mpz_t()) != 0 && mpz_perfect_square_p(r.get_den_mpz_t()) != 0;
  }

  int degree_;
  Rational c1_;
  Rational c0_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || *a == *b; }

/// Common field of two operands; Q embeds into every field.
inline const FieldPtr& join_fields(const FieldPtr& a, const FieldPtr& b) {
  if (same_field(a, b)) return a;
  if (a->degree() == 1) return b;
  if (b->degree() == 1) return a;
  throw std::invalid_argument("scalars from different number fields");
}

/// Exact element a + b*w of a field of degree at most two.
class Scalar {
 public:
  Scalar() : field_(Field::rationals()) {}
  Scalar(long v) : field_(Field::rationals()), a_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a) : field_(Field::rationals()), a_(std::move(a)) {}  // NOLINT
  Scalar(FieldPtr field, Rational a, Rational b = 0) : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
    if (field_->degree() == 1 && b_ != 0) throw std::invalid_argument("irrational part in a rational scalar");
  }

  static Scalar generator(FieldPtr field) {
    if (field->degree() != 2) throw std::invalid_argument("Q has no generator");
    return Scalar(std::move(field), 0, 1);
  }

  const FieldPtr& field() const { return field_; }
  /// Coefficient of w^i.
  const Rational& coefficient(std::size_t i) const { return i == 0 ? a_ : b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// Field norm N(a + b*w) = a^2 - c1*a*b + c0*b^2; equals |x|^2 for imaginary quadratic fields.
  Rational norm() const {
    if (field_->degree() == 1) return a_ * a_;
    return a_ * a_ - field_->c1() * a_ * b_ + field_->c0() * b_ * b_;
  }

  Scalar conjugate() const {
    if (field_->degree() == 1) return *this;
    // conj(w) = -c1 - w
    return Scalar(field_, a_ - field_->c1() * b_, -b_);
  }

  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    const Rational n = norm();
    const Scalar c = conjugate();
    return Scalar(field_, c.a_ / n, c.b_ / n);
  }

  Scalar operator-() const { return Scalar(field_, -a_, -b_); }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar(join_fields(x.field_, y.field_), x.a_ + y.a_, x.b_ + y.b_);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    return Scalar(join_fields(x.field_, y.field_), x.a_ - y.a_, x.b_ - y.b_);
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    const FieldPtr& f = join_fields(x.field_, y.field_);
    if (f->degree() == 1) return Scalar(f, x.a_ * y.a_);
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, w^2 = -c1 w - c0
    const Rational bd = x.b_ * y.b_;
    return Scalar(f, x.a_ * y.a_ - f->c0() * bd, x.a_ * y.b_ + x.b_ * y.a_ - f->c1() * bd);
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    join_fields(x.field_, y.field_);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Lexicographic on (a, b); a total order used only for deterministic output.
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    if (int c = cmp(x.a_, y.a_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(x.b_, y.b_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "p/q" or "p/q+r/s*w".
  std::string to_string() const {
    if (b_ == 0) return lincolor::to_string(a_);
    std::string out;
    if (a_ != 0) out = lincolor::to_string(a_);
    if (b_ > 0 && !out.empty()) out += '+';
    out += lincolor::to_string(b_);
    out += "*w";
    return out;
  }

  /// Parses "3", "-1/2", "1-1*w", "w", "-w", "2/3+1/5*w". The field must have
  /// degree two whenever the text mentions w.
  static Scalar parse(std::string_view text, const FieldPtr& field) {
    if (text.empty()) throw std::invalid_argument("empty scalar");
    Rational a = 0, b = 0;
    std::size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
      std::size_t end = pos + 1;
      while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
      std::string_view term = text.substr(pos, end - pos);
      pos = end;
      any = true;
      bool negative = false;
      if (term.front() == '+' || term.front() == '-') {
        negative = term.front() == '-';
        term.remove_prefix(1);
      }
      if (term.empty()) throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
      bool irrational = false;
      if (term.back() == 'w') {
        irrational = true;
        term.remove_suffix(1);
        if (!term.empty()) {
          if (term.back() != '*') throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
          term.remove_suffix(1);
          if (term.empty()) throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
        }
      }
      Rational value = term.empty() ? Rational(1) : parse_rational(term);
      if (negative) value = -value;
      if (irrational) b += value; else a += value;
    }
    if (!any) throw std::invalid_argument("empty scalar");
    if (b != 0 && field->degree() != 2)
      throw std::invalid_argument("scalar '" + std::string(text) + "' mentions w in a rational field");
    return Scalar(field, a, b);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  FieldPtr field_;
  Rational a_;
  Rational b_;
};

}  // namespace lincolor
