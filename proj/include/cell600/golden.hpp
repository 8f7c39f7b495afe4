#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cell600 {

/// Exact element a + b*t of Q(t), t = (1 + sqrt5) / 2.
///
/// Coefficients are arbitrary-precision rationals, so no operation can
/// overflow. Products are reduced with t^2 = t + 1, which keeps the pair
/// (a, b) unique for every value.
class GoldenNum {
 public:
  GoldenNum() = default;
  GoldenNum(long a) : a_(a), b_(0) {}  // NOLINT(google-explicit-constructor)
  GoldenNum(mpq_class a, mpq_class b);

  static GoldenNum tau() { return {0L, 1L, 1L, 1L}; }
  /// 1/t, stored exactly as -1 + t.
  static GoldenNum kappa() { return {-1L, 1L, 1L, 1L}; }

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& tau_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_integral() const;

  /// Galois conjugate a + b*t -> (a + b) - b*t.
  GoldenNum conjugate() const;
  /// Field norm N(x) = x * conjugate(x), a rational.
  mpq_class norm() const;
  /// Exact sign of the real value a + b*t.
  int sign() const;

  double to_double() const;

  GoldenNum operator-() const;
  GoldenNum& operator+=(const GoldenNum& o);
  GoldenNum& operator-=(const GoldenNum& o);
  GoldenNum& operator*=(const GoldenNum& o);
  /// Throws std::domain_error on division by zero.
  GoldenNum& operator/=(const GoldenNum& o);

  friend GoldenNum operator+(GoldenNum x, const GoldenNum& y) { return x += y; }
  friend GoldenNum operator-(GoldenNum x, const GoldenNum& y) { return x -= y; }
  friend GoldenNum operator*(GoldenNum x, const GoldenNum& y) { return x *= y; }
  friend GoldenNum operator/(GoldenNum x, const GoldenNum& y) { return x /= y; }
  friend bool operator==(const GoldenNum& x, const GoldenNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Orders by real value.
  friend std::strong_ordering operator<=>(const GoldenNum& x, const GoldenNum& y);

  /// Textual form: "0", "2", "t", "-k", "2-t", "1/2+3/2t". The special values
  /// +-(t - 1) print as "k" / "-k".
  std::string to_string() const;

 private:
  GoldenNum(long an, long ad, long bn, long bd) : a_(an, ad), b_(bn, bd) {
    a_.canonicalize();
    b_.canonicalize();
  }

  mpq_class a_{0};
  mpq_class b_{0};
};

GoldenNum golden_add(const GoldenNum& x, const GoldenNum& y);
GoldenNum golden_mul(const GoldenNum& x, const GoldenNum& y);
bool golden_is_zero(const GoldenNum& x);

/// Parses the textual form: a sum of signed terms, each a rational
/// coefficient optionally followed by `t` or `k` (k = t - 1). Examples:
/// "2", "-t", "k", "2-t", "1+3t", "1/2-1/2k". Throws ParseError carrying
/// the 1-based column.
GoldenNum parse_golden(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GoldenNum& x);

}  // namespace cell600
