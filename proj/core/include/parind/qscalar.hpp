#pragma once

#include "parind/errors.hpp"
#include "parind/numeric.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parind {

/// Exact element a + b*sqrt(q) of the real quadratic field Q(sqrt(q)).
///
/// The radicand q is carried per value; purely rational values use q = 0 and
/// combine with any field. Construction canonicalizes: if q is a perfect
/// square the sqrt part is folded into the rational part, so equality is
/// coefficient-wise.
class QScalar {
 public:
  QScalar() : a_(0), b_(0), q_(0) {}
  QScalar(int v) : a_(v), b_(0), q_(0) {}          // NOLINT(runtime/explicit)
  QScalar(int64_t v) : a_(v), b_(0), q_(0) {}      // NOLINT(runtime/explicit)
  QScalar(Rational a) : a_(std::move(a)), b_(0), q_(0) {}  // NOLINT
  QScalar(Rational a, Rational b, int64_t q);

  static QScalar sqrt_q(int64_t q) { return QScalar(0, 1, q); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt_part() const { return b_; }
  int64_t radicand() const { return q_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QScalar operator-() const { return QScalar(-a_, -b_, q_); }
  QScalar conj() const { return QScalar(a_, -b_, q_); }

  friend QScalar operator+(const QScalar& x, const QScalar& y);
  friend QScalar operator-(const QScalar& x, const QScalar& y);
  friend QScalar operator*(const QScalar& x, const QScalar& y);
  friend QScalar operator/(const QScalar& x, const QScalar& y);
  QScalar& operator+=(const QScalar& y) { return *this = *this + y; }
  QScalar& operator-=(const QScalar& y) { return *this = *this - y; }
  QScalar& operator*=(const QScalar& y) { return *this = *this * y; }
  QScalar& operator/=(const QScalar& y) { return *this = *this / y; }

  friend bool operator==(const QScalar& x, const QScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || y.b_ == 0 || x.q_ == y.q_);
  }
  friend bool operator!=(const QScalar& x, const QScalar& y) { return !(x == y); }

  QScalar inverse() const;
  QScalar pow(long e) const;

  double to_double() const;
  std::complex<double> to_complex() const { return {to_double(), 0.0}; }
  std::string to_string() const;

 private:
  Rational a_, b_;
  int64_t q_;  // 0 when the value is rational

  static int64_t merge_radicand(const QScalar& x, const QScalar& y);
};

/// Exact square root of x inside Q(sqrt(q)), when one exists there.
std::optional<QScalar> qscalar_sqrt(const QScalar& x, int64_t q);

/// Roots of z^2 - bz - c = 0 over Q(sqrt(q)); empty if the discriminant has
/// no exact square root in the field.
std::vector<QScalar> solve_quadratic(const QScalar& b, const QScalar& c, int64_t q);

}  // namespace parind
