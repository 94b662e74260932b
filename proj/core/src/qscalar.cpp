#include "parind/qscalar.hpp"

#include <cmath>

namespace parind {

QScalar::QScalar(Rational a, Rational b, int64_t q) : a_(std::move(a)), b_(std::move(b)), q_(q) {
  if (b_ == 0) {
    q_ = 0;
    return;
  }
  if (q_ < 0) throw ParameterMismatchError("QScalar radicand must be non-negative");
  if (auto r = exact_isqrt(BigInt(q_))) {
    a_ += b_ * Rational(*r);
    b_ = 0;
    q_ = 0;
  }
}

int64_t QScalar::merge_radicand(const QScalar& x, const QScalar& y) {
  if (x.q_ == 0) return y.q_;
  if (y.q_ == 0) return x.q_;
  if (x.q_ != y.q_)
    throw ParameterMismatchError("QScalar radicand mismatch: sqrt(" + std::to_string(x.q_) +
                                 ") vs sqrt(" + std::to_string(y.q_) + ")");
  return x.q_;
}

QScalar operator+(const QScalar& x, const QScalar& y) {
  return QScalar(x.a_ + y.a_, x.b_ + y.b_, QScalar::merge_radicand(x, y));
}

QScalar operator-(const QScalar& x, const QScalar& y) {
  return QScalar(x.a_ - y.a_, x.b_ - y.b_, QScalar::merge_radicand(x, y));
}

QScalar operator*(const QScalar& x, const QScalar& y) {
  int64_t q = QScalar::merge_radicand(x, y);
  return QScalar(x.a_ * y.a_ + x.b_ * y.b_ * Rational(q), x.a_ * y.b_ + x.b_ * y.a_, q);
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw ZeroScalarError("QScalar: inverse of zero");
  if (b_ == 0) return QScalar(Rational(1) / a_);
  Rational nrm = a_ * a_ - b_ * b_ * Rational(q_);
  // nrm = 0 would force sqrt(q) rational, excluded by canonicalization.
  return QScalar(a_ / nrm, -b_ / nrm, q_);
}

QScalar operator/(const QScalar& x, const QScalar& y) { return x * y.inverse(); }

QScalar QScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QScalar r(1);
  for (long i = 0; i < e; ++i) r *= *this;
  return r;
}

double QScalar::to_double() const {
  double v = parind::to_double(a_);
  if (b_ != 0) v += parind::to_double(b_) * std::sqrt(static_cast<double>(q_));
  return v;
}

std::string QScalar::to_string() const {
  if (b_ == 0) return rational_to_string(a_);
  std::string s;
  if (a_ != 0) s = rational_to_string(a_) + " + ";
  return s + rational_to_string(b_) + "*sqrt(" + std::to_string(q_) + ")";
}

std::optional<QScalar> qscalar_sqrt(const QScalar& x, int64_t q) {
  const Rational& a = x.rational_part();
  const Rational& b = x.sqrt_part();
  if (b == 0) {
    if (auto r = rational_sqrt(a)) return QScalar(*r);
    if (q > 1) {
      if (auto r = rational_sqrt(a / Rational(q))) return QScalar(0, *r, q);
    }
    return std::nullopt;
  }
  // (c + d*sqrt(q))^2 = a + b*sqrt(q)  =>  c^2 + d^2 q = a, 2cd = b.
  // Eliminating d: 4c^4 - 4ac^2 + b^2 q = 0, so c^2 = (a ± sqrt(a^2 - b^2 q)) / 2.
  auto disc = rational_sqrt(a * a - b * b * Rational(q));
  if (!disc) return std::nullopt;
  for (int sign : {+1, -1}) {
    Rational c2 = (a + Rational(sign) * (*disc)) / 2;
    if (c2 < 0) continue;
    auto c = rational_sqrt(c2);
    if (!c || *c == 0) continue;
    Rational d = b / (Rational(2) * (*c));
    QScalar root(*c, d, q);
    if (root * root == x) return root;
  }
  return std::nullopt;
}

std::vector<QScalar> solve_quadratic(const QScalar& b, const QScalar& c, int64_t q) {
  QScalar disc = b * b + QScalar(4) * c;
  auto s = qscalar_sqrt(disc, q);
  if (!s) return {};
  QScalar half = QScalar(Rational(1, 2));
  std::vector<QScalar> roots{(b + *s) * half, (b - *s) * half};
  if (roots[0] == roots[1]) roots.pop_back();
  return roots;
}

}  // namespace parind
