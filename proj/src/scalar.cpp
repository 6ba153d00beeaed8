#include "linkgeom/scalar.hpp"

#include "linkgeom/errors.hpp"

namespace linkgeom {

Scalar::Scalar(long num, long den) : a_(num, den) {
  if (den == 0) throw GeometryError(ErrorCode::kInvalidArgument, "zero denominator");
  a_.canonicalize();
}

Scalar Scalar::quad(mpq_class a, mpq_class b) {
  Scalar s;
  s.a_ = std::move(a);
  s.b_ = std::move(b);
  s.a_.canonicalize();
  s.b_.canonicalize();
  s.quad_ = true;
  return s;
}

Scalar Scalar::as_rational() const {
  if (sgn(b_) != 0) {
    throw GeometryError(ErrorCode::kInvalidArgument, "irrational value " + to_string());
  }
  return Scalar(a_);
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: |a| vs |b| sqrt3, i.e. a^2 vs 3 b^2.
  const mpq_class lhs = a_ * a_;
  const mpq_class rhs = 3 * b_ * b_;
  const int c = cmp(lhs, rhs);
  return c == 0 ? 0 : (c > 0 ? sa : sb);
}

void Scalar::promote_with(const Scalar& o) {
  if (o.quad_) quad_ = true;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  if (o.quad_ || quad_) b_ += o.b_;
  promote_with(o);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  if (o.quad_ || quad_) b_ -= o.b_;
  promote_with(o);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!quad_ && !o.quad_) {
    a_ *= o.a_;
    return *this;
  }
  // (a + b r)(c + d r) = (ac + 3bd) + (ad + bc) r
  mpq_class a = a_ * o.a_ + 3 * b_ * o.b_;
  mpq_class b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  quad_ = true;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw GeometryError(ErrorCode::kInvalidArgument, "division by zero");
  if (!quad_ && !o.quad_) {
    a_ /= o.a_;
    return *this;
  }
  // Multiply by the conjugate c - d r; the norm c^2 - 3 d^2 is nonzero
  // because sqrt3 is irrational.
  const mpq_class norm = o.a_ * o.a_ - 3 * o.b_ * o.b_;
  mpq_class a = (a_ * o.a_ - 3 * b_ * o.b_) / norm;
  mpq_class b = (b_ * o.a_ - a_ * o.b_) / norm;
  a_ = std::move(a);
  b_ = std::move(b);
  quad_ = true;
  return *this;
}

std::string Scalar::to_string() const {
  if (!quad_) return format_rational(a_);
  return format_rational(a_) + (sgn(b_) < 0 ? "" : "+") + format_rational(b_) + "*sqrt3";
}

double Scalar::approx() const {
  return a_.get_d() + b_.get_d() * 1.7320508075688772;
}

mpq_class parse_reduced_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size()) {
    throw GeometryError(ErrorCode::kMalformedInput, "rational must be \"p/q\": '" + text + "'");
  }
  mpz_class num;
  mpz_class den;
  if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0) {
    throw GeometryError(ErrorCode::kMalformedInput, "not a rational: '" + text + "'");
  }
  if (text[slash + 1] == '+' || text[slash + 1] == '-' || sgn(den) <= 0) {
    throw GeometryError(ErrorCode::kMalformedInput, "denominator must be positive: '" + text + "'");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) {
    throw GeometryError(ErrorCode::kMalformedInput, "unreduced rational: '" + text + "'");
  }
  return mpq_class(num, den);
}

std::string format_rational(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kSingularSystem: return "SINGULAR_SYSTEM";
    case ErrorCode::kNotTransversal: return "NOT_TRANSVERSAL";
    case ErrorCode::kParallelPlanes: return "PARALLEL_PLANES";
    case ErrorCode::kApexNotExtreme: return "APEX_NOT_EXTREME";
    case ErrorCode::kApexInHyperplane: return "APEX_IN_HYPERPLANE";
    case ErrorCode::kPerturbExhausted: return "PERTURB_EXHAUSTED";
    case ErrorCode::kSearchExhausted: return "SEARCH_EXHAUSTED";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::kDegenerateFace: return "DEGENERATE_FACE";
    case ErrorCode::kMalformedInput: return "MALFORMED_INPUT";
  }
  return "UNKNOWN";
}

}  // namespace linkgeom
