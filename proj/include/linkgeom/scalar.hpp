#pragma once

#include <gmpxx.h>

#include <string>

namespace linkgeom {

/// Exact scalar: either a rational number or an element a + b*sqrt(3) of
/// the quadratic field Q(sqrt 3). Arithmetic between the two variants
/// promotes the rational operand into Q(sqrt 3) with b = 0.
class Scalar {
 public:
  enum class Field { kRational, kQuadSqrt3 };

  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value) : a_(std::move(value)) { a_.canonicalize(); }  // NOLINT
  Scalar(long num, long den);

  static Scalar quad(mpq_class a, mpq_class b);
  static Scalar sqrt3() { return quad(0, 1); }

  Field field() const { return quad_ ? Field::kQuadSqrt3 : Field::kRational; }
  bool is_rational() const { return !quad_; }
  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt3_part() const { return b_; }

  // Same value in the other variant (throws if the value is irrational).
  Scalar as_quad() const { return quad(a_, b_); }
  Scalar as_rational() const;

  /// Exact sign, decided from the signs of a, b and a^2 versus 3 b^2.
  int sign() const;
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  // Value comparison; the variant tag does not take part.
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return y < x; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return !(y < x); }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return !(x < y); }

  /// "p/q" for rationals (always with the denominator), "p/q+r/s*sqrt3" for quads.
  std::string to_string() const;
  /// Rough decimal value, for human-readable output only.
  double approx() const;

 private:
  void promote_with(const Scalar& o);

  mpq_class a_{0};
  mpq_class b_{0};
  bool quad_ = false;
};

/// Parses the point-file rational "p/q"; rejects q <= 0 and unreduced input.
mpq_class parse_reduced_rational(const std::string& text);
/// Always "p/q", q > 0, reduced.
std::string format_rational(const mpq_class& q);

}  // namespace linkgeom
