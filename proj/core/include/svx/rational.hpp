#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace svx {

/// Arbitrary-precision rational, the weight type of every combinatorial
/// quantity in the library. Thin value wrapper around GMP's mpq so the
/// rest of the code never touches mpq_t directly. Always kept canonical
/// (reduced, positive denominator).
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long value) : q_(value) {}  // NOLINT: implicit by design
  Rat(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    q_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Exact conversion; every finite double is a dyadic rational.
  static Rat from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("Rat: non-finite double");
    return Rat(mpq_class(x));
  }

  /// Parses a plain decimal such as "2", "-0.125" or "2.5e-3".
  static Rat from_decimal(std::string_view text);

  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }

  /// "p/q" with q >= 1, e.g. "0/1", "-3/2".
  std::string fraction_str() const;

  /// Exact decimal expansion when the denominator is of the form 2^a 5^b
  /// with a short expansion; otherwise a 17-significant-digit rounding.
  std::string decimal_str() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) != 0; }
  friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

 private:
  mpq_class q_;
};

inline Rat Rat::from_decimal(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rat: empty decimal");
  std::string mantissa;
  mantissa.reserve(text.size());
  long frac_digits = 0;
  long exponent = 0;
  size_t i = 0;
  if (text[i] == '+' || text[i] == '-') mantissa.push_back(text[i++]);
  bool any_digit = false, seen_dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa.push_back(c);
      any_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else if ((c == 'e' || c == 'E') && any_digit) {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
      if (i >= text.size()) throw std::invalid_argument("Rat: bad exponent");
      long e = 0;
      for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("Rat: bad exponent");
        e = e * 10 + (text[i] - '0');
        if (e > 100000) throw std::invalid_argument("Rat: exponent out of range");
      }
      exponent = neg ? -e : e;
      break;
    } else {
      throw std::invalid_argument("Rat: malformed decimal '" + std::string(text) + "'");
    }
  }
  if (!any_digit) throw std::invalid_argument("Rat: malformed decimal '" + std::string(text) + "'");

  if (mantissa.empty() || mantissa == "-" || mantissa == "+") mantissa = "0";
  mpz_class num(mantissa, 10);  // explicit base; leading zeros are not octal
  long pow10 = exponent - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(pow10 < 0 ? -pow10 : pow10));
  mpq_class q;
  if (pow10 >= 0) {
    q = mpq_class(num * scale);
  } else {
    q = mpq_class(num, scale);
  }
  q.canonicalize();
  return Rat(q);
}

inline std::string Rat::fraction_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

inline std::string Rat::decimal_str() const {
  mpz_class den = q_.get_den();
  // Strip factors of 2 and 5; an exact finite expansion exists iff nothing is left.
  unsigned long twos = 0, fives = 0;
  mpz_class d = den;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) { d /= 2; ++twos; }
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) { d /= 5; ++fives; }
  unsigned long digits = twos > fives ? twos : fives;
  if (d == 1 && digits <= 40) {
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits);
    mpz_class scaled = q_.get_num() * p10 / den;  // den divides 10^digits here
    std::string s = scaled.get_str();
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    if (digits == 0) return (neg ? "-" : "") + s;
    if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
    // Trim trailing zeros in the fractional part, keep at least one digit.
    size_t last = s.find_last_not_of('0');
    if (s[last] == '.') ++last;
    s.erase(last + 1);
    return (neg ? "-" : "") + s;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", to_double());
  return buf;
}

}  // namespace svx
