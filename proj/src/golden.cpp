#include "cell600/golden.hpp"

#include <gmp.h>

#include <cctype>
#include <cmath>
#include <ostream>

#include "cell600/errors.hpp"

namespace cell600 {

GoldenNum::GoldenNum(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
}

bool GoldenNum::is_integral() const {
  return a_.get_den() == 1 && b_.get_den() == 1;
}

GoldenNum GoldenNum::conjugate() const { return {a_ + b_, -b_}; }

mpq_class GoldenNum::norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

int GoldenNum::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // x = b (t - q) with q = -a/b; t > q  <=>  2q - 1 < sqrt5.
  const mpq_class c = -2 * a_ / b_ - 1;
  const bool t_above_q = sgn(c) < 0 || c * c < 5;
  return t_above_q ? sb : -sb;
}

double GoldenNum::to_double() const {
  if (sgn(b_) == 0) return a_.get_d();
  // 256 bits absorbs any cancellation between a and b*t for the magnitudes we meet.
  constexpr unsigned kBits = 256;
  mpf_class root5(5, kBits);
  mpf_sqrt(root5.get_mpf_t(), root5.get_mpf_t());
  mpf_class tau = (1 + root5) / 2;
  mpf_class a(a_, kBits);
  mpf_class b(b_, kBits);
  mpf_class value(a + b * tau, kBits);
  // get_d truncates; pick the nearer of the truncated double and its successor away from zero.
  const double truncated = value.get_d();
  const double away = std::nextafter(truncated, sgn(value) < 0 ? -HUGE_VAL : HUGE_VAL);
  const mpf_class gap_truncated = abs(value - mpf_class(truncated, kBits));
  const mpf_class gap_away = abs(value - mpf_class(away, kBits));
  return gap_away < gap_truncated ? away : truncated;
}

GoldenNum GoldenNum::operator-() const { return {-a_, -b_}; }

GoldenNum& GoldenNum::operator+=(const GoldenNum& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenNum& GoldenNum::operator-=(const GoldenNum& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenNum& GoldenNum::operator*=(const GoldenNum& o) {
  // (a1 + b1 t)(a2 + b2 t) = a1 a2 + b1 b2 + (a1 b2 + a2 b1 + b1 b2) t
  const mpq_class bb = b_ * o.b_;
  mpq_class a = a_ * o.a_ + bb;
  mpq_class b = a_ * o.b_ + o.a_ * b_ + bb;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

GoldenNum& GoldenNum::operator/=(const GoldenNum& o) {
  const mpq_class n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("GoldenNum division by zero");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

std::strong_ordering operator<=>(const GoldenNum& x, const GoldenNum& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

std::string coefficient_text(const mpq_class& q) { return q.get_str(); }

}  // namespace

std::string GoldenNum::to_string() const {
  if (*this == kappa()) return "k";
  if (*this == -kappa()) return "-k";
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return coefficient_text(a_);
  std::string tau_term;
  if (b_ == 1) {
    tau_term = "t";
  } else if (b_ == -1) {
    tau_term = "-t";
  } else {
    tau_term = coefficient_text(b_) + "t";
  }
  if (sa == 0) return tau_term;
  if (sb > 0) return coefficient_text(a_) + "+" + tau_term;
  return coefficient_text(a_) + tau_term;
}

GoldenNum golden_add(const GoldenNum& x, const GoldenNum& y) { return x + y; }
GoldenNum golden_mul(const GoldenNum& x, const GoldenNum& y) { return x * y; }
bool golden_is_zero(const GoldenNum& x) { return x.is_zero(); }

namespace {

class GoldenParser {
 public:
  explicit GoldenParser(std::string_view text) : text_(text) {}

  GoldenNum parse() {
    skip_space();
    if (at_end()) fail("empty golden number");
    GoldenNum sum;
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      const GoldenNum value = term();
      if (sign < 0) {
        sum -= value;
      } else {
        sum += value;
      }
      first = false;
      skip_space();
    }
    return sum;
  }

 private:
  GoldenNum term() {
    mpq_class coeff(1);
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      have_coeff = true;
    }
    if (!at_end() && (peek() == 't' || peek() == 'k')) {
      const bool is_tau = peek() == 't';
      ++pos_;
      const GoldenNum unit = is_tau ? GoldenNum::tau() : GoldenNum::kappa();
      return GoldenNum(coeff, 0) * unit;
    }
    if (!have_coeff) fail("expected a number, 't' or 'k'");
    return GoldenNum(coeff, 0);
  }

  mpq_class rational() {
    mpz_class num = integer();
    if (!at_end() && peek() == '/') {
      ++pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      const std::size_t col = pos_;
      mpz_class den = integer();
      if (den == 0) {
        pos_ = col;
        fail("zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(text_) + "'", 0, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GoldenNum parse_golden(std::string_view text) { return GoldenParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const GoldenNum& x) { return os << x.to_string(); }

}  // namespace cell600
